use alloc::string::String;

use thiserror::Error;

use crate::composition::AlgebraTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra mismatch: {left:?} vs {right:?}")]
    TagMismatch { left: AlgebraTag, right: AlgebraTag },
    #[error("{tag:?} expects {expected} coordinates, got {found}")]
    CoordCount { tag: AlgebraTag, expected: usize, found: usize },
    #[error("{0}")]
    Shape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("label {label} does not occur for {tag:?}")]
    UnreachableLabel { tag: AlgebraTag, label: String },
    #[error("no sample found for {label} after {attempts} attempts")]
    SamplingExhausted { label: String, attempts: usize },
    #[error("invalid space parameter: {0}")]
    InvalidSpace(String),
    #[error("payload is not skew-symmetric")]
    NotSkew,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("{name}: no generic sample after {attempts} resamples")]
    Degenerate { name: String, attempts: usize },
    #[error("{name}: dimensions fit neither case (secant {secant}, tangential {tangential}, n = {n}, ambient {ambient})")]
    Inconsistent { name: String, secant: usize, tangential: usize, n: usize, ambient: usize },
    #[error("parameter vector has length {found}, chart expects {expected}")]
    ParamLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum E6Error {
    #[error("indeterminacy point: every coordinate of the map vanishes")]
    Indeterminacy,
    #[error("quadric span has dimension {0}, expected 35")]
    HessianSpan(usize),
    #[error("expected 20 wedge coordinates, got {0}")]
    InputLength(usize),
    #[error("trials must be at least 1")]
    NoTrials,
}

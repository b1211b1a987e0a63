//! Exact SLOCC stratification of the multipartite systems whose only genuine
//! entanglement classes are the W and GHZ types, plus the bipartite systems
//! with a single secant stratum.
//!
//! Everything here is `no_std` + `alloc`: exact arithmetic over Q(i), the
//! composition and cubic Jordan algebras, the Freudenthal model with its
//! quartic invariant, the SL2×SO(m) series, rank classifiers for the
//! single-secant systems, a Terracini dimension engine and the degree-4 map
//! onto the E6 adjoint variety.

#![no_std]

extern crate alloc;

pub mod actions;
pub mod combinat;
pub mod composition;
pub mod e6;
pub mod error;
pub mod fts;
pub mod jordan;
pub mod label;
pub mod rank_classifier;
pub mod linalg;
pub mod scalar;
pub mod so_series;
pub mod varieties;

pub use composition::{AlgebraTag, CompElem};
pub use fts::FtsVector;
pub use jordan::JordanMat;
pub use label::{Partition, StrataLabel};
pub use linalg::Mat;
pub use scalar::Scalar;

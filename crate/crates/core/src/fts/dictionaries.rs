use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::combinat::{k_subsets, subset_index};
use crate::composition::AlgebraTag;
use crate::error::AlgebraError;
use crate::jordan::{
    complex_to_symmetric, matrix_to_split, split_to_matrix, symmetric_to_complex, JordanMat,
};
use crate::linalg::Mat;
use crate::scalar::Scalar;

use super::FtsVector;

fn expect_tag(x: &FtsVector, tag: AlgebraTag) -> Result<(), AlgebraError> {
    if x.tag() != tag {
        return Err(AlgebraError::TagMismatch { left: tag, right: x.tag() });
    }
    Ok(())
}

fn expect_len(c: &[Scalar], n: usize, tag: AlgebraTag) -> Result<(), AlgebraError> {
    if c.len() != n {
        return Err(AlgebraError::CoordCount { tag, expected: n, found: c.len() });
    }
    Ok(())
}

/// Three-qubit amplitudes `c[4i + 2j + k] = ⟨ijk|ψ⟩` as a vector over `Deg0`:
/// `α = c000`, `β = c111`, `A = diag(c100, c010, c001)`,
/// `B = diag(c011, c101, c110)`. Product states land on the chart
/// `(1, P, P♯, N(P))`.
pub fn embed_three_qubit(c: &[Scalar]) -> Result<FtsVector, AlgebraError> {
    expect_len(c, 8, AlgebraTag::Deg0)?;
    let a = JordanMat::diagonal(AlgebraTag::Deg0, c[4].clone(), c[2].clone(), c[1].clone())?;
    let b = JordanMat::diagonal(AlgebraTag::Deg0, c[3].clone(), c[5].clone(), c[6].clone())?;
    FtsVector::new(c[0].clone(), a, b, c[7].clone())
}

/// Inverse of [`embed_three_qubit`].
pub fn three_qubit_coeffs(x: &FtsVector) -> Result<Vec<Scalar>, AlgebraError> {
    expect_tag(x, AlgebraTag::Deg0)?;
    let [a1, a2, a3] = x.a().diag().clone();
    let [b1, b2, b3] = x.b().diag().clone();
    Ok(vec![x.alpha().clone(), a3, a2, b1, a1, b2, b3, x.beta().clone()])
}

fn sign(k: usize) -> Scalar {
    Scalar::from_i64(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// The complement of `n` in `{0, 1, 2}`, ascending.
fn others(n: usize) -> [usize; 2] {
    match n {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    }
}

/// Splits Plücker coordinates of `Λ³C⁶` into `(α, M_A, M_B, β)`.
///
/// On the chart of rows `(I₃ | P)` this gives `M_A = P`, `M_B = adj(P)`
/// and `β = det P`.
fn wedge_to_blocks(c: &[Scalar]) -> (Scalar, Mat, Mat, Scalar) {
    let at = |s: &mut Vec<usize>| {
        s.sort_unstable();
        c[subset_index(6, s)].clone()
    };
    let ma = Mat::from_fn(3, 3, |i, l| {
        let [p, q] = others(i);
        &sign(i) * &at(&mut vec![p, q, 3 + l])
    });
    let mb = Mat::from_fn(3, 3, |n, k| {
        let [l, m] = others(n);
        &sign(n) * &at(&mut vec![k, 3 + l, 3 + m])
    });
    (c[0].clone(), ma, mb, c[19].clone())
}

fn blocks_to_wedge(alpha: &Scalar, ma: &Mat, mb: &Mat, beta: &Scalar) -> Vec<Scalar> {
    let mut c = vec![Scalar::zero(); 20];
    for (idx, s) in k_subsets(6, 3).iter().enumerate() {
        let low: Vec<usize> = s.iter().copied().filter(|&v| v < 3).collect();
        let high: Vec<usize> = s.iter().copied().filter(|&v| v >= 3).map(|v| v - 3).collect();
        c[idx] = match (low.len(), high.len()) {
            (3, 0) => alpha.clone(),
            (0, 3) => beta.clone(),
            (2, 1) => {
                let i = (0..3).find(|v| !low.contains(v)).expect("one missing index");
                &sign(i) * &ma[(i, high[0])]
            }
            _ => {
                let n = (0..3).find(|v| !high.contains(v)).expect("one missing index");
                &sign(n) * &mb[(n, low[0])]
            }
        };
    }
    c
}

/// Plücker coordinates `x_{ijk}` of `Λ³C⁶` (20 triples of `0..6` in lex
/// order) as a vector over `CplusC`.
pub fn embed_wedge3(c: &[Scalar]) -> Result<FtsVector, AlgebraError> {
    expect_len(c, 20, AlgebraTag::CplusC)?;
    let (alpha, ma, mb, beta) = wedge_to_blocks(c);
    FtsVector::new(alpha, matrix_to_split(&ma)?, matrix_to_split(&mb)?, beta)
}

/// Inverse of [`embed_wedge3`].
pub fn wedge3_coeffs(x: &FtsVector) -> Result<Vec<Scalar>, AlgebraError> {
    expect_tag(x, AlgebraTag::CplusC)?;
    Ok(blocks_to_wedge(x.alpha(), &split_to_matrix(x.a())?, &split_to_matrix(x.b())?, x.beta()))
}

/// A vector over `CC` as a point of the 14-dimensional Lagrangian part of
/// `Λ³C⁶` (symmetric blocks), in the coordinates of [`embed_wedge3`].
pub fn lagrangian_coeffs(x: &FtsVector) -> Result<Vec<Scalar>, AlgebraError> {
    expect_tag(x, AlgebraTag::CC)?;
    Ok(blocks_to_wedge(x.alpha(), &complex_to_symmetric(x.a())?, &complex_to_symmetric(x.b())?, x.beta()))
}

/// Inverse of [`lagrangian_coeffs`]; fails off the Lagrangian part.
pub fn embed_lagrangian(c: &[Scalar]) -> Result<FtsVector, AlgebraError> {
    expect_len(c, 20, AlgebraTag::CC)?;
    let (alpha, ma, mb, beta) = wedge_to_blocks(c);
    for m in [&ma, &mb] {
        if *m != m.transpose() {
            return Err(AlgebraError::Shape("wedge is not in the Lagrangian part".into()));
        }
    }
    FtsVector::new(alpha, symmetric_to_complex(&ma)?, symmetric_to_complex(&mb)?, beta)
}

//! Concrete group actions on coefficient vectors, used to test SLOCC
//! invariance of the classifiers.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::combinat::k_subsets;
use crate::error::LinalgError;
use crate::linalg::Mat;
use crate::scalar::Scalar;

/// Random integer matrix with entries in `[-bound, bound]` and nonzero
/// determinant.
pub fn random_invertible<R: Rng + ?Sized>(n: usize, bound: i64, rng: &mut R) -> Mat {
    loop {
        let g = Mat::from_fn(n, n, |_, _| Scalar::random_int(rng, bound));
        if !g.det().expect("square").is_zero() {
            return g;
        }
    }
}

/// Applies `g_0 ⊗ g_1 ⊗ …` to a tensor stored in row-major order, factor `k`
/// having dimension `g_k.cols()`.
pub fn act_tensor(gs: &[&Mat], c: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
    let total: usize = gs.iter().map(|g| g.cols()).product();
    if c.len() != total {
        return Err(LinalgError::LengthMismatch { expected: total, found: c.len() });
    }
    let mut cur = c.to_vec();
    let dims: Vec<usize> = gs.iter().map(|g| g.cols()).collect();
    for (k, g) in gs.iter().enumerate() {
        if g.rows() != g.cols() {
            return Err(LinalgError::NotSquare { rows: g.rows(), cols: g.cols() });
        }
        let inner: usize = dims[k + 1..].iter().product();
        let outer: usize = dims[..k].iter().product();
        let n = dims[k];
        let mut next = vec![Scalar::zero(); cur.len()];
        for o in 0..outer {
            for i in 0..n {
                for j in 0..n {
                    let gij = &g[(i, j)];
                    if gij.is_zero() {
                        continue;
                    }
                    for r in 0..inner {
                        let src = &cur[(o * n + j) * inner + r];
                        if !src.is_zero() {
                            next[(o * n + i) * inner + r] += gij * src;
                        }
                    }
                }
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// The induced action of `g ∈ GL_n` on `Λ^k Cⁿ` in lex-ordered Plücker
/// coordinates: `(g·x)_I = Σ_J det g[I, J] x_J`.
pub fn act_wedge(g: &Mat, k: usize, c: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
    let n = g.rows();
    if g.cols() != n {
        return Err(LinalgError::NotSquare { rows: n, cols: g.cols() });
    }
    let subsets = k_subsets(n, k);
    if c.len() != subsets.len() {
        return Err(LinalgError::LengthMismatch { expected: subsets.len(), found: c.len() });
    }
    let mut out = vec![Scalar::zero(); c.len()];
    for (j, cols) in subsets.iter().enumerate() {
        if c[j].is_zero() {
            continue;
        }
        for (i, rows) in subsets.iter().enumerate() {
            let minor = Mat::from_fn(k, k, |r, s| g[(rows[r], cols[s])].clone()).det()?;
            if !minor.is_zero() {
                out[i] += &minor * &c[j];
            }
        }
    }
    Ok(out)
}

/// `g X hᵀ` for a matrix state `X`.
pub fn act_bilinear(g: &Mat, x: &Mat, h: &Mat) -> Result<Mat, LinalgError> {
    g.mul(x)?.mul(&h.transpose())
}

fn symmetric_block<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Mat {
    let mut s = Mat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = Scalar::random_int(rng, 2);
            s[(i, j)] = v.clone();
            s[(j, i)] = v;
        }
    }
    s
}

/// Random element of `Sp_{2n}` for the form `[[0, I], [-I, 0]]`: a product
/// of unipotent generators `[[I, S], [0, I]]`, `[[I, 0], [S, I]]` with `S`
/// symmetric.
pub fn random_symplectic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Mat {
    let mut g = Mat::identity(2 * n);
    for round in 0..3 {
        let s = symmetric_block(n, rng);
        let gen = Mat::from_fn(2 * n, 2 * n, |i, j| {
            if i == j {
                Scalar::one()
            } else if round % 2 == 0 && i < n && j >= n {
                s[(i, j - n)].clone()
            } else if round % 2 == 1 && i >= n && j < n {
                s[(i - n, j)].clone()
            } else {
                Scalar::zero()
            }
        });
        g = g.mul(&gen).expect("square");
    }
    g
}

/// The standard symplectic form `[[0, I], [-I, 0]]`.
pub fn standard_symplectic_form(n: usize) -> Mat {
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        if i < n && j == i + n {
            Scalar::one()
        } else if i >= n && j + n == i {
            -Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

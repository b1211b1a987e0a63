//! The degree-4 map `P²¹ ⇢ P⁷⁷` built from the quartic on `Λ³C⁶`, its 20
//! gradient cubics and the 35 quadrics cutting out `G(3,6)`. Its image is
//! the adjoint variety of E6.
//!
//! Coordinates on `Λ³C⁶` are lex-ordered Plücker coordinates, carried into
//! the Freudenthal model over `C⊕C` by [`embed_wedge3`].

use alloc::vec::Vec;

use num_traits::Zero;
use rand::Rng;

use crate::combinat::multisets;
use crate::error::E6Error;
use crate::fts::{embed_wedge3, gradient, quartic, reduced_hessian, FtsVector};
use crate::linalg::{span_dim, IncrementalBasis, Mat};
use crate::scalar::Scalar;
use crate::varieties::directional_derivative;

pub const WEDGE_DIM: usize = 20;
pub const QUADRIC_COUNT: usize = 35;
pub const ADJOINT_DIM: usize = 78;

fn check_len(x: &[Scalar]) -> Result<(), E6Error> {
    if x.len() != WEDGE_DIM {
        return Err(E6Error::InputLength(x.len()));
    }
    Ok(())
}

fn to_fts(x: &[Scalar]) -> FtsVector {
    embed_wedge3(x).expect("20 coordinates")
}

/// Columns of the linear dictionary `Λ³C⁶ → FTS(C⊕C)`.
fn dictionary() -> Mat {
    let cols: Vec<Vec<Scalar>> = (0..WEDGE_DIM)
        .map(|j| {
            let e: Vec<Scalar> = (0..WEDGE_DIM).map(|i| Scalar::from_i64((i == j) as i64)).collect();
            to_fts(&e).coords()
        })
        .collect();
    Mat::from_fn(WEDGE_DIM, WEDGE_DIM, |i, j| cols[j][i].clone())
}

/// The quartic invariant in Plücker coordinates.
pub fn wedge_quartic(x: &[Scalar]) -> Result<Scalar, E6Error> {
    check_len(x)?;
    Ok(quartic(&to_fts(x)))
}

/// `∂q/∂x_i`, i.e. the pulled-back gradient `Lᵀ ∇q(Lx)`.
pub fn wedge_gradient(x: &[Scalar]) -> Result<Vec<Scalar>, E6Error> {
    check_len(x)?;
    Ok(dictionary().transpose().mul_vec(&gradient(&to_fts(x))))
}

/// The raw Hessian `Lᵀ H(Lx) L`.
pub fn wedge_hessian(x: &[Scalar]) -> Result<Mat, E6Error> {
    check_len(x)?;
    let l = dictionary();
    Ok(l.transpose().mul(&crate::fts::hessian_eval(&to_fts(x))).and_then(|m| m.mul(&l)).expect("20x20"))
}

/// The Hessian with the `ω⊗ω` part removed, `Lᵀ R(Lx) L`; it vanishes on
/// decomposable wedges.
pub fn wedge_reduced_hessian(x: &[Scalar]) -> Result<Mat, E6Error> {
    check_len(x)?;
    let l = dictionary();
    Ok(l.transpose().mul(&reduced_hessian(&to_fts(x))).and_then(|m| m.mul(&l)).expect("20x20"))
}

/// Degree-two monomials `x_a x_b`, `a ≤ b`, in lex order.
pub fn quadric_monomials() -> Vec<(usize, usize)> {
    multisets(WEDGE_DIM, 2).into_iter().map(|m| (m[0], m[1])).collect()
}

pub fn eval_quadric(coeffs: &[Scalar], x: &[Scalar]) -> Scalar {
    eval_with(&quadric_monomials(), coeffs, x)
}

fn eval_with(monos: &[(usize, usize)], coeffs: &[Scalar], x: &[Scalar]) -> Scalar {
    monos
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(&(a, b), c)| &(c * &x[a]) * &x[b])
        .sum()
}

/// Coefficient vectors of the entries `(i ≤ j)` of a quadratic matrix-valued
/// map, recovered by polarization.
fn entry_quadrics(f: impl Fn(&[Scalar]) -> Mat) -> Vec<Vec<Scalar>> {
    let unit = |a: usize| -> Vec<Scalar> { (0..WEDGE_DIM).map(|i| Scalar::from_i64((i == a) as i64)).collect() };
    let diag: Vec<Mat> = (0..WEDGE_DIM).map(|a| f(&unit(a))).collect();
    let monos = quadric_monomials();
    let values: Vec<Mat> = monos
        .iter()
        .map(|&(a, b)| {
            if a == b {
                diag[a].clone()
            } else {
                let mut v = unit(a);
                v[b] = Scalar::from_i64(1);
                let both = f(&v);
                Mat::from_fn(WEDGE_DIM, WEDGE_DIM, |i, j| &(&both[(i, j)] - &diag[a][(i, j)]) - &diag[b][(i, j)])
            }
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..WEDGE_DIM {
        for j in i..WEDGE_DIM {
            out.push(values.iter().map(|m| m[(i, j)].clone()).collect());
        }
    }
    out
}

/// Quadrics spanned by the reduced Hessian entries: the first independent
/// entries in lex order of `(i, j)`.
pub fn hessian_basis() -> Result<Vec<Vec<Scalar>>, E6Error> {
    let all = entry_quadrics(|x| wedge_reduced_hessian(x).expect("length"));
    let mut basis = IncrementalBasis::new();
    let chosen: Vec<Vec<Scalar>> = all.into_iter().filter(|q| basis.offer(q)).collect();
    if chosen.len() != QUADRIC_COUNT {
        return Err(E6Error::HessianSpan(chosen.len()));
    }
    Ok(chosen)
}

/// Dimension of the span of the raw second partials of the quartic.
pub fn raw_hessian_span() -> usize {
    span_dim(&entry_quadrics(|x| wedge_hessian(x).expect("length"))).expect("equal lengths")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointPoint {
    coords: Vec<Scalar>,
}

impl AdjointPoint {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }
}

/// Layout of the 78 coordinates.
pub mod block {
    use core::ops::Range;
    pub const X0_4: usize = 0;
    pub const X0_3_X21: usize = 1;
    pub const LINEAR: Range<usize> = 2..22;
    pub const QUADRIC: Range<usize> = 22..57;
    pub const CUBIC: Range<usize> = 57..77;
    pub const QUARTIC: usize = 77;
}

/// The map with its quadric basis computed once.
#[derive(Clone, Debug)]
pub struct E6Map {
    quadrics: Vec<Vec<Scalar>>,
    monomials: Vec<(usize, usize)>,
    dictionary_t: Mat,
}

impl E6Map {
    pub fn new() -> Result<Self, E6Error> {
        Ok(E6Map { quadrics: hessian_basis()?, monomials: quadric_monomials(), dictionary_t: dictionary().transpose() })
    }

    pub fn quadrics(&self) -> &[Vec<Scalar>] {
        &self.quadrics
    }

    /// `[x0⁴, x0³x21, x0³xᵢ, x0²Qₖ(x), x0²x21xᵢ − x0∂ᵢq, x0²x21² − q]`.
    pub fn apply(&self, x0: &Scalar, x: &[Scalar], x21: &Scalar) -> Result<AdjointPoint, E6Error> {
        let coords = self.coords_unchecked(x0, x, x21)?;
        if coords.iter().all(Zero::is_zero) {
            return Err(E6Error::Indeterminacy);
        }
        Ok(AdjointPoint { coords })
    }

    fn coords_unchecked(&self, x0: &Scalar, x: &[Scalar], x21: &Scalar) -> Result<Vec<Scalar>, E6Error> {
        check_len(x)?;
        let x0_2 = x0 * x0;
        let x0_3 = &x0_2 * x0;
        let fx = to_fts(x);
        let grad = self.dictionary_t.mul_vec(&gradient(&fx));
        let mut c = Vec::with_capacity(ADJOINT_DIM);
        c.push(&x0_3 * x0);
        c.push(&x0_3 * x21);
        c.extend(x.iter().map(|xi| &x0_3 * xi));
        c.extend(self.quadrics.iter().map(|q| &x0_2 * &eval_with(&self.monomials, q, x)));
        let x0_2_x21 = &x0_2 * x21;
        c.extend(x.iter().zip(&grad).map(|(xi, gi)| &(&x0_2_x21 * xi) - &(x0 * gi)));
        c.push(&(&x0_2_x21 * x21) - &quartic(&fx));
        Ok(c)
    }

    /// The map on a flat 22-vector `(x0, x, x21)`, zero allowed.
    fn flat(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.coords_unchecked(&v[0], &v[1..21], &v[21]).expect("22 inputs")
    }

    /// Generic Jacobian rank minus one, maximized over trials.
    pub fn image_dim<R: Rng + ?Sized>(&self, trials: usize, rng: &mut R) -> Result<usize, E6Error> {
        if trials == 0 {
            return Err(E6Error::NoTrials);
        }
        let mut best = 0;
        for _ in 0..trials {
            let p: Vec<Scalar> = (0..WEDGE_DIM + 2).map(|_| Scalar::random_int(rng, 9)).collect();
            let cols: Vec<Vec<Scalar>> = (0..p.len())
                .map(|k| {
                    let e: Vec<Scalar> = (0..p.len()).map(|i| Scalar::from_i64((i == k) as i64)).collect();
                    directional_derivative(|v| self.flat(v), &p, &e, 4)
                })
                .collect();
            best = best.max(span_dim(&cols).expect("equal lengths").saturating_sub(1));
        }
        Ok(best)
    }

    /// Dimension of the linear span of the images of `count` random points.
    pub fn image_span<R: Rng + ?Sized>(&self, count: usize, rng: &mut R) -> usize {
        let mut basis = IncrementalBasis::new();
        for _ in 0..count {
            let v: Vec<Scalar> = (0..WEDGE_DIM + 2).map(|_| Scalar::random_int(rng, 9)).collect();
            basis.offer(&self.flat(&v));
            if basis.dim() == ADJOINT_DIM {
                break;
            }
        }
        basis.dim()
    }
}

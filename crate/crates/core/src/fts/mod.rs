//! The Freudenthal triple system `C ⊕ J3(A) ⊕ J3(A) ⊕ C`.
//!
//! A vector `x = (α, A, B, β)` has coordinates `[α, coords(A), coords(B), β]`.
//! The quartic invariant is
//!
//! ```text
//! q(x) = (αβ - T(A,B))² - 4 T(A♯, B♯) + 4 α N(B) + 4 β N(A)
//! ```
//!
//! and the strata of the orbit chain are cut out by `q`, its gradient and the
//! reduced Hessian `H(x) - 2 ω_x ⊗ ω_x`, where `ω_x = ω(x, ·)` is the
//! symplectic form paired with `x`.

mod dictionaries;
mod sampling;

pub use dictionaries::{
    embed_lagrangian, embed_three_qubit, embed_wedge3, lagrangian_coeffs, three_qubit_coeffs,
    wedge3_coeffs,
};
pub use sampling::{sample_class, tangent_sample};

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::composition::AlgebraTag;
use crate::error::AlgebraError;
use crate::jordan::{jordan_dim, JordanMat};
use crate::label::{Partition, StrataLabel};
use crate::linalg::Mat;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FtsVector {
    alpha: Scalar,
    a: JordanMat,
    b: JordanMat,
    beta: Scalar,
}

/// Number of coordinates of an FTS vector over `tag`.
pub fn fts_dim(tag: AlgebraTag) -> usize {
    2 * jordan_dim(tag) + 2
}

impl FtsVector {
    pub fn new(alpha: Scalar, a: JordanMat, b: JordanMat, beta: Scalar) -> Result<Self, AlgebraError> {
        if a.tag() != b.tag() {
            return Err(AlgebraError::TagMismatch { left: a.tag(), right: b.tag() });
        }
        Ok(FtsVector { alpha, a, b, beta })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        FtsVector {
            alpha: Scalar::zero(),
            a: JordanMat::zero(tag),
            b: JordanMat::zero(tag),
            beta: Scalar::zero(),
        }
    }

    pub fn from_coords(tag: AlgebraTag, c: &[Scalar]) -> Result<Self, AlgebraError> {
        let d = jordan_dim(tag);
        if c.len() != 2 * d + 2 {
            return Err(AlgebraError::CoordCount { tag, expected: 2 * d + 2, found: c.len() });
        }
        Ok(FtsVector {
            alpha: c[0].clone(),
            a: JordanMat::from_coords(tag, &c[1..1 + d])?,
            b: JordanMat::from_coords(tag, &c[1 + d..1 + 2 * d])?,
            beta: c[2 * d + 1].clone(),
        })
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(self.dim());
        v.push(self.alpha.clone());
        v.extend(self.a.coords());
        v.extend(self.b.coords());
        v.push(self.beta.clone());
        v
    }

    pub fn basis(tag: AlgebraTag, k: usize) -> Self {
        let mut c = vec![Scalar::zero(); fts_dim(tag)];
        c[k] = Scalar::one();
        FtsVector::from_coords(tag, &c).expect("basis index in range")
    }

    pub fn random<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> Self {
        FtsVector {
            alpha: Scalar::random_int(rng, 9),
            a: JordanMat::random(tag, rng),
            b: JordanMat::random(tag, rng),
            beta: Scalar::random_int(rng, 9),
        }
    }

    pub fn tag(&self) -> AlgebraTag {
        self.a.tag()
    }

    pub fn dim(&self) -> usize {
        fts_dim(self.tag())
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn a(&self) -> &JordanMat {
        &self.a
    }

    pub fn b(&self) -> &JordanMat {
        &self.b
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &FtsVector) -> Result<FtsVector, AlgebraError> {
        self.check_tag(o)?;
        Ok(FtsVector {
            alpha: &self.alpha + &o.alpha,
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
            beta: &self.beta + &o.beta,
        })
    }

    pub fn scale(&self, s: &Scalar) -> FtsVector {
        FtsVector { alpha: &self.alpha * s, a: self.a.scale(s), b: self.b.scale(s), beta: &self.beta * s }
    }

    fn check_tag(&self, o: &FtsVector) -> Result<(), AlgebraError> {
        if self.tag() != o.tag() {
            return Err(AlgebraError::TagMismatch { left: self.tag(), right: o.tag() });
        }
        Ok(())
    }
}

/// `φ(P) = (1, P, P♯, N(P))`, the affine chart of the separable variety.
pub fn plucker(p: &JordanMat) -> FtsVector {
    FtsVector { alpha: Scalar::one(), a: p.clone(), b: p.sharp(), beta: p.cubic_norm() }
}

/// `dφ_P[Q] = (0, Q, P × Q, T(P♯, Q))`.
pub fn plucker_differential(p: &JordanMat, q: &JordanMat) -> Result<FtsVector, AlgebraError> {
    Ok(FtsVector { alpha: Scalar::zero(), a: q.clone(), b: p.cross(q)?, beta: p.sharp().trace_pair(q)? })
}

fn two() -> Scalar {
    Scalar::from_i64(2)
}

fn four() -> Scalar {
    Scalar::from_i64(4)
}

/// `D = αβ - T(A, B)`.
fn discriminant_part(x: &FtsVector) -> Scalar {
    &x.alpha * &x.beta - x.a.trace_same(&x.b)
}

pub fn quartic(x: &FtsVector) -> Scalar {
    let d = discriminant_part(x);
    let four = four();
    &d * &d - &four * &x.a.sharp().trace_same(&x.b.sharp())
        + &four * &(&x.alpha * &x.b.cubic_norm())
        + &four * &(&x.beta * &x.a.cubic_norm())
}

/// `ω(x, y) = αβ' - βα' - T(A, B') + T(B, A')`.
pub fn symplectic_form(x: &FtsVector, y: &FtsVector) -> Result<Scalar, AlgebraError> {
    x.check_tag(y)?;
    Ok(&x.alpha * &y.beta - &x.beta * &y.alpha - x.a.trace_same(&y.b) + x.b.trace_same(&y.a))
}

/// Coordinates of the covector `y ↦ ω(x, y)`.
pub fn omega_covector(x: &FtsVector) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(x.dim());
    v.push(-&x.beta);
    v.extend(x.b.trace_dual());
    v.extend(x.a.trace_dual().into_iter().map(|s| -s));
    v.push(x.alpha.clone());
    v
}

/// Packs `(∂α, G_A, G_B, ∂β)` into coordinates, `G_A` and `G_B` being
/// represented through the trace form.
fn pack_covector(da: Scalar, ga: &JordanMat, gb: &JordanMat, db: Scalar) -> Vec<Scalar> {
    let mut v = vec![da];
    v.extend(ga.trace_dual());
    v.extend(gb.trace_dual());
    v.push(db);
    v
}

/// All first partial derivatives of [`quartic`].
pub fn gradient(x: &FtsVector) -> Vec<Scalar> {
    let d = discriminant_part(x);
    let (two, four) = (two(), four());
    let (a_sh, b_sh) = (x.a.sharp(), x.b.sharp());
    let d_alpha = &(&two * &d) * &x.beta + &four * &x.b.cubic_norm();
    let d_beta = &(&two * &d) * &x.alpha + &four * &x.a.cubic_norm();
    let ga = x.b.scale(&(-&two * &d)).sub(&x.a.cross_same(&b_sh).scale(&four)).add(&a_sh.scale(&(&four * &x.beta)));
    let gb = x.a.scale(&(-&two * &d)).sub(&x.b.cross_same(&a_sh).scale(&four)).add(&b_sh.scale(&(&four * &x.alpha)));
    pack_covector(d_alpha, &ga, &gb, d_beta)
}

/// Quantities shared by every column of the Hessian.
struct HessianCache {
    d: Scalar,
    a_sh: JordanMat,
    b_sh: JordanMat,
}

/// Directional derivative of [`gradient`] at `x` along `y`: the Hessian
/// applied to `y`.
fn hessian_apply(x: &FtsVector, cache: &HessianCache, y: &FtsVector) -> Vec<Scalar> {
    let (two, four) = (two(), four());
    let HessianCache { d, a_sh, b_sh } = cache;
    let dd = &y.alpha * &x.beta + &x.alpha * &y.beta - y.a.trace_same(&x.b) - x.a.trace_same(&y.b);
    let da = &(&two * &dd) * &x.beta + &(&two * d) * &y.beta + &four * &b_sh.trace_same(&y.b);
    let db = &(&two * &dd) * &x.alpha + &(&two * d) * &y.alpha + &four * &a_sh.trace_same(&y.a);
    let mut ga = x.b.scale(&(-&two * &dd)).add(&a_sh.scale(&(&four * &y.beta)));
    let mut gb = x.a.scale(&(-&two * &dd)).add(&b_sh.scale(&(&four * &y.alpha)));
    if !y.a.is_zero() {
        ga = ga
            .sub(&y.a.cross_same(b_sh).scale(&four))
            .add(&x.a.cross_same(&y.a).scale(&(&four * &x.beta)));
        gb = gb
            .sub(&y.a.scale(&(&two * d)))
            .sub(&x.b.cross_same(&x.a.cross_same(&y.a)).scale(&four));
    }
    if !y.b.is_zero() {
        ga = ga
            .sub(&y.b.scale(&(&two * d)))
            .sub(&x.a.cross_same(&x.b.cross_same(&y.b)).scale(&four));
        gb = gb
            .sub(&y.b.cross_same(a_sh).scale(&four))
            .add(&x.b.cross_same(&y.b).scale(&(&four * &x.alpha)));
    }
    pack_covector(da, &ga, &gb, db)
}

/// Matrix of all second partial derivatives of [`quartic`] at `x`.
pub fn hessian_eval(x: &FtsVector) -> Mat {
    let tag = x.tag();
    let n = x.dim();
    let cache = HessianCache { d: discriminant_part(x), a_sh: x.a.sharp(), b_sh: x.b.sharp() };
    let mut h = Mat::zeros(n, n);
    for k in 0..n {
        let col = hessian_apply(x, &cache, &FtsVector::basis(tag, k));
        for (i, v) in col.into_iter().enumerate() {
            h[(i, k)] = v;
        }
    }
    h
}

/// `H(x) - 2 ω_x ω_xᵀ`. Its entries are quadrics in `x` that vanish exactly
/// on the separable variety.
pub fn reduced_hessian(x: &FtsVector) -> Mat {
    let mut h = hessian_eval(x);
    let w = omega_covector(x);
    let two = two();
    for i in 0..w.len() {
        if w[i].is_zero() {
            continue;
        }
        let wi = &two * &w[i];
        for j in 0..w.len() {
            if !w[j].is_zero() {
                h[(i, j)] -= &wi * &w[j];
            }
        }
    }
    h
}

/// The invariant data behind a classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FtsAnalysis {
    pub label: StrataLabel,
    pub quartic: Scalar,
    /// Number of nonzero gradient entries.
    pub gradient_support: usize,
    /// Number of nonzero reduced-Hessian entries.
    pub quadric_support: usize,
}

pub fn analyze_fts(x: &FtsVector) -> FtsAnalysis {
    let q = quartic(x);
    let grad = gradient(x);
    let gradient_support = grad.iter().filter(|s| !s.is_zero()).count();
    let quadric_support = if q.is_zero() && gradient_support == 0 { reduced_hessian(x).nonzero_count() } else { 0 };
    let label = if x.is_zero() {
        StrataLabel::Null
    } else if !q.is_zero() {
        StrataLabel::Ghz
    } else if gradient_support != 0 {
        StrataLabel::W
    } else if quadric_support != 0 {
        debug_assert!(x.tag() != AlgebraTag::DegMinus1, "three-boson space has no biseparable stratum");
        let part = if x.tag() == AlgebraTag::Deg0 { qubit_partition(x) } else { Partition::Unmarked };
        StrataLabel::Biseparable(part)
    } else {
        StrataLabel::Separable
    };
    FtsAnalysis { label, quartic: q, gradient_support, quadric_support }
}

/// Null, GHZ, W, Biseparable or Separable, decided by exact vanishing.
pub fn classify_fts(x: &FtsVector) -> StrataLabel {
    analyze_fts(x).label
}

/// The flattening of the three-qubit array that has rank one.
fn qubit_partition(x: &FtsVector) -> Partition {
    let c = three_qubit_coeffs(x).expect("tag checked by caller");
    let flat = |party: usize| {
        let rows: Vec<Vec<Scalar>> = (0..2)
            .map(|bit| {
                (0..8)
                    .filter(|idx| (idx >> (2 - party)) & 1 == bit)
                    .map(|idx| c[idx].clone())
                    .collect()
            })
            .collect();
        Mat::from_rows(rows).expect("2x4").rank()
    };
    [Partition::SplitA, Partition::SplitB, Partition::SplitC]
        .into_iter()
        .enumerate()
        .find(|&(party, _)| flat(party) == 1)
        .map_or(Partition::Unmarked, |(_, p)| p)
}

//! States of `C² ⊗ C^m` under `SL2 × SO(m)`, the quadric on `C^m` being the
//! split form
//!
//! ```text
//! Q(w, w') = Σ_k (w_{2k} w'_{2k+1} + w_{2k+1} w'_{2k})  [+ w_{m-1} w'_{m-1} if m is odd]
//! ```

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::ClassifyError;
use crate::label::{Partition, StrataLabel};
use crate::linalg::Mat;
use crate::scalar::Scalar;

const MAX_ATTEMPTS: usize = 64;

/// The `|0⟩` and `|1⟩` slices `u`, `v` of a qubit-qudit state.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QubitQuditState {
    m: usize,
    u: Vec<Scalar>,
    v: Vec<Scalar>,
}

impl QubitQuditState {
    pub fn new(u: Vec<Scalar>, v: Vec<Scalar>) -> Result<Self, ClassifyError> {
        let m = u.len();
        if m < 3 {
            return Err(ClassifyError::InvalidSpace(format!("qudit dimension {m} is below 3")));
        }
        if v.len() != m {
            return Err(ClassifyError::InvalidSpace(format!("slices have lengths {m} and {}", v.len())));
        }
        Ok(QubitQuditState { m, u, v })
    }

    /// Coefficients `c[i·m + k]` of `|i⟩ ⊗ e_k`.
    pub fn from_coeffs(m: usize, c: &[Scalar]) -> Result<Self, ClassifyError> {
        if c.len() != 2 * m {
            return Err(ClassifyError::InvalidSpace(format!("expected {} coefficients, got {}", 2 * m, c.len())));
        }
        QubitQuditState::new(c[..m].to_vec(), c[m..].to_vec())
    }

    pub fn coeffs(&self) -> Vec<Scalar> {
        self.u.iter().chain(&self.v).cloned().collect()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn u(&self) -> &[Scalar] {
        &self.u
    }

    pub fn v(&self) -> &[Scalar] {
        &self.v
    }

    /// `(u, v) ↦ (g00 u + g01 v, g10 u + g11 v)`.
    pub fn act_qubit(&self, g: &Mat) -> QubitQuditState {
        let mix = |a: &Scalar, b: &Scalar| -> Vec<Scalar> {
            self.u.iter().zip(&self.v).map(|(x, y)| a * x + b * y).collect()
        };
        QubitQuditState { m: self.m, u: mix(&g[(0, 0)], &g[(0, 1)]), v: mix(&g[(1, 0)], &g[(1, 1)]) }
    }

    /// `(u, v) ↦ (h u, h v)`.
    pub fn act_qudit(&self, h: &Mat) -> QubitQuditState {
        QubitQuditState { m: self.m, u: h.mul_vec(&self.u), v: h.mul_vec(&self.v) }
    }
}

/// The split bilinear form on `C^m`.
pub fn split_form(w: &[Scalar], w2: &[Scalar]) -> Scalar {
    let m = w.len();
    let mut s = Scalar::zero();
    for k in 0..m / 2 {
        s += &w[2 * k] * &w2[2 * k + 1] + &w[2 * k + 1] * &w2[2 * k];
    }
    if m % 2 == 1 {
        s += &w[m - 1] * &w2[m - 1];
    }
    s
}

/// Gram matrix of the split form in the standard basis.
pub fn split_gram(m: usize) -> Mat {
    Mat::from_fn(m, m, |i, j| {
        let hit = (i / 2 == j / 2 && i != j && i / 2 < m / 2) || (m % 2 == 1 && i == m - 1 && j == m - 1);
        if hit {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

/// `Q(u,u) Q(v,v) - Q(u,v)²`.
pub fn gram_quartic(s: &QubitQuditState) -> Scalar {
    let q = split_form(&s.u, &s.v);
    &split_form(&s.u, &s.u) * &split_form(&s.v, &s.v) - &q * &q
}

pub fn classify_so(s: &QubitQuditState) -> StrataLabel {
    let rows = Mat::from_rows(vec![s.u.clone(), s.v.clone()]).expect("equal slice lengths");
    match rows.rank() {
        0 => StrataLabel::Null,
        1 => {
            let w = if s.u.iter().all(Zero::is_zero) { &s.v } else { &s.u };
            if split_form(w, w).is_zero() {
                StrataLabel::Separable
            } else {
                StrataLabel::Biseparable(Partition::Unmarked)
            }
        }
        _ => {
            let (a, b, c) = (split_form(&s.u, &s.u), split_form(&s.u, &s.v), split_form(&s.v, &s.v));
            if !(&a * &c - &b * &b).is_zero() {
                StrataLabel::Ghz
            } else if a.is_zero() && b.is_zero() && c.is_zero() {
                StrataLabel::Biseparable(Partition::Unmarked)
            } else {
                StrataLabel::W
            }
        }
    }
}

fn half() -> Scalar {
    Scalar::real(BigRational::new(1.into(), 2.into()))
}

/// `e0 + Σ p_j e_{j+2} - ½ Q(p, p) e1`: a rational chart of the isotropic
/// quadric, `p` having length `m - 2`.
pub fn isotropic_point(p: &[Scalar]) -> Vec<Scalar> {
    let mut w = Vec::with_capacity(p.len() + 2);
    w.push(Scalar::one());
    w.push(-(&half() * &split_form(p, p)));
    w.extend(p.iter().cloned());
    w
}

/// Derivative of [`isotropic_point`] at `p` along `q`.
pub fn isotropic_tangent(p: &[Scalar], q: &[Scalar]) -> Vec<Scalar> {
    let mut w = Vec::with_capacity(p.len() + 2);
    w.push(Scalar::zero());
    w.push(-split_form(p, q));
    w.extend(q.iter().cloned());
    w
}

/// A Siegel transformation `v ↦ v + Q(v,e) y - Q(v,y) e - ½ Q(y,y) Q(v,e) e`
/// for isotropic `e` and `y ⟂ e`; it preserves `Q`.
fn siegel(m: usize, e_idx: usize, y: &[Scalar]) -> Mat {
    let e: Vec<Scalar> = (0..m).map(|i| Scalar::from_i64((i == e_idx) as i64)).collect();
    let yy = split_form(y, y);
    let mut cols = Vec::with_capacity(m);
    for j in 0..m {
        let v: Vec<Scalar> = (0..m).map(|i| Scalar::from_i64((i == j) as i64)).collect();
        let ve = split_form(&v, &e);
        let vy = split_form(&v, y);
        let coef_e = -&vy - &(&half() * &(&yy * &ve));
        cols.push((0..m).map(|i| &v[i] + &(&ve * &y[i]) + &(&coef_e * &e[i])).collect::<Vec<_>>());
    }
    Mat::from_fn(m, m, |i, j| cols[j][i].clone())
}

/// Random `Q`-orthogonal matrix: a product of Siegel transformations along
/// each isotropic basis vector and hyperbolic rescalings.
pub fn random_orthogonal<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Mat {
    let mut h = Mat::identity(m);
    for round in 0..2 {
        for e_idx in 0..2 * (m / 2) {
            let partner = e_idx ^ 1;
            let y: Vec<Scalar> = (0..m)
                .map(|i| if i == partner || i == e_idx { Scalar::zero() } else { Scalar::random_int(rng, 2) })
                .collect();
            h = h.mul(&siegel(m, e_idx, &y)).expect("square");
        }
        if round == 0 {
            let mut d = Mat::identity(m);
            for k in 0..m / 2 {
                let lam = Scalar::random_nonzero_int(rng, 3);
                d[(2 * k + 1, 2 * k + 1)] = lam.inv().expect("nonzero");
                d[(2 * k, 2 * k)] = lam;
            }
            h = h.mul(&d).expect("square");
        }
    }
    h
}

/// Three-qubit amplitudes as a state of `C² ⊗ C⁴`: the slice
/// `[[a, b], [c, d]]` of the first qubit becomes `(a, d, b, -c)`, so
/// `Q(w, w) = 2 det`.
pub fn from_three_qubit(c: &[Scalar]) -> Result<QubitQuditState, ClassifyError> {
    if c.len() != 8 {
        return Err(ClassifyError::InvalidSpace(format!("expected 8 amplitudes, got {}", c.len())));
    }
    let slice = |i: usize| vec![c[4 * i].clone(), c[4 * i + 3].clone(), c[4 * i + 1].clone(), -&c[4 * i + 2]];
    QubitQuditState::new(slice(0), slice(1))
}

/// Inverse of [`from_three_qubit`].
pub fn to_three_qubit(s: &QubitQuditState) -> Result<Vec<Scalar>, ClassifyError> {
    if s.m != 4 {
        return Err(ClassifyError::InvalidSpace(format!("three qubits need m = 4, got {}", s.m)));
    }
    let mut c = Vec::with_capacity(8);
    for w in [&s.u, &s.v] {
        c.extend([w[0].clone(), w[2].clone(), -&w[3], w[1].clone()]);
    }
    Ok(c)
}

fn random_vec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::random_int(rng, 9)).collect()
}

fn candidate<R: Rng + ?Sized>(m: usize, label: StrataLabel, rng: &mut R) -> QubitQuditState {
    let s = Scalar::random_int(rng, 9);
    let lam = Scalar::random_nonzero_int(rng, 5);
    let scaled = |w: &[Scalar], k: &Scalar| -> Vec<Scalar> { w.iter().map(|x| x * k).collect() };
    let (u, v) = match label {
        StrataLabel::Separable => {
            let w = scaled(&isotropic_point(&random_vec(m - 2, rng)), &lam);
            let v = scaled(&w, &s);
            (w, v)
        }
        StrataLabel::Biseparable(_) => {
            let w = random_vec(m, rng);
            let v = scaled(&w, &s);
            (w, v)
        }
        StrataLabel::W => {
            let p = random_vec(m - 2, rng);
            let w = isotropic_point(&p);
            let dw = isotropic_tangent(&p, &random_vec(m - 2, rng));
            let v: Vec<Scalar> = w.iter().zip(&dw).map(|(a, b)| &lam * a + &s * b).collect();
            (dw, v)
        }
        _ => (random_vec(m, rng), random_vec(m, rng)),
    };
    QubitQuditState { m, u, v }
}

/// A random state of `C² ⊗ C^m` in the stratum `label`.
pub fn sample_so<R: Rng + ?Sized>(m: usize, label: StrataLabel, rng: &mut R) -> Result<QubitQuditState, ClassifyError> {
    if m < 3 {
        return Err(ClassifyError::InvalidSpace(format!("qudit dimension {m} is below 3")));
    }
    if !matches!(label, StrataLabel::Separable | StrataLabel::Biseparable(_) | StrataLabel::W | StrataLabel::Ghz) {
        return Err(ClassifyError::InvalidSpace(format!("label {label} cannot be sampled")));
    }
    for _ in 0..MAX_ATTEMPTS {
        let st = candidate(m, label, rng);
        if classify_so(&st).same_stratum(&label) {
            return Ok(st);
        }
    }
    Err(ClassifyError::SamplingExhausted { label: format!("{label}"), attempts: MAX_ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unit(m: usize, k: usize) -> Vec<Scalar> {
        (0..m).map(|i| Scalar::from_i64((i == k) as i64)).collect()
    }

    #[test]
    fn examples() {
        let hyperbolic = QubitQuditState::new(unit(5, 0), unit(5, 1)).unwrap();
        assert_eq!(gram_quartic(&hyperbolic), -Scalar::one());
        assert_eq!(classify_so(&hyperbolic), StrataLabel::Ghz);
        let iso = QubitQuditState::new(unit(7, 0), vec![Scalar::zero(); 7]).unwrap();
        assert!(gram_quartic(&iso).is_zero());
        assert_eq!(classify_so(&iso), StrataLabel::Separable);
        let aniso = QubitQuditState::new(unit(7, 6), vec![Scalar::zero(); 7]).unwrap();
        assert_eq!(classify_so(&aniso), StrataLabel::Biseparable(Partition::Unmarked));
        // e0, e2 span a totally isotropic plane; adding e3 to v makes G rank one.
        let mut v = unit(7, 2);
        v[3] = Scalar::one();
        let w = QubitQuditState::new(unit(7, 0), v).unwrap();
        assert_eq!(classify_so(&w), StrataLabel::W);
        let planar = QubitQuditState::new(unit(7, 0), unit(7, 2)).unwrap();
        assert_eq!(classify_so(&planar), StrataLabel::Biseparable(Partition::Unmarked));
        assert!(QubitQuditState::new(unit(2, 0), unit(2, 1)).is_err());
    }

    #[test]
    fn gram_and_form_agree() {
        for m in [3, 4, 7] {
            let g = split_gram(m);
            let mut rng = ChaCha8Rng::seed_from_u64(m as u64);
            let a = random_vec(m, &mut rng);
            let b = random_vec(m, &mut rng);
            let via: Scalar = a.iter().zip(g.mul_vec(&b)).map(|(x, y)| x * &y).sum();
            assert_eq!(via, split_form(&a, &b));
            assert_eq!(g.rank(), m);
        }
    }

    #[test]
    fn orthogonal_maps_preserve_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for m in [3, 4, 5, 8, 9] {
            let h = random_orthogonal(m, &mut rng);
            let g = split_gram(m);
            assert_eq!(h.transpose().mul(&g).unwrap().mul(&h).unwrap(), g);
            assert!(!h.det().unwrap().is_zero());
        }
    }

    #[test]
    fn isotropic_chart_lies_on_quadric() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for m in [3, 6, 9] {
            let p = random_vec(m - 2, &mut rng);
            let q = random_vec(m - 2, &mut rng);
            let w = isotropic_point(&p);
            assert!(split_form(&w, &w).is_zero());
            assert!(split_form(&w, &isotropic_tangent(&p, &q)).is_zero());
        }
    }

    #[test]
    fn three_qubit_dictionary_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let c = random_vec(8, &mut rng);
        assert_eq!(to_three_qubit(&from_three_qubit(&c).unwrap()).unwrap(), c);
    }
}

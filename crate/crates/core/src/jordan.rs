//! Hermitian 3×3 matrices over a composition algebra with the cubic norm,
//! the adjoint (sharp), its polarization (cross product) and the trace form.
//!
//! `JordanMat { diag: (a, b, c), off: (x, y, z) }` stands for
//!
//! ```text
//! [ a        z        conj(y) ]
//! [ conj(z)  b        x       ]
//! [ y        conj(x)  c       ]
//! ```

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::composition::{AlgebraTag, CompElem};
use crate::error::AlgebraError;
use crate::linalg::Mat;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanMat {
    tag: AlgebraTag,
    diag: [Scalar; 3],
    off: [CompElem; 3],
}

/// Complex dimension of J3 over each slot.
pub fn jordan_dim(tag: AlgebraTag) -> usize {
    match tag {
        AlgebraTag::DegMinus1 => 1,
        AlgebraTag::Deg0 => 3,
        _ => 3 + 3 * tag.dim(),
    }
}

impl JordanMat {
    /// Checks the shape constraints of the degenerate slots.
    pub fn new(tag: AlgebraTag, diag: [Scalar; 3], off: [CompElem; 3]) -> Result<Self, AlgebraError> {
        if let Some(bad) = off.iter().find(|o| o.tag() != tag) {
            return Err(AlgebraError::TagMismatch { left: tag, right: bad.tag() });
        }
        if tag == AlgebraTag::DegMinus1 && !(diag[0] == diag[1] && diag[1] == diag[2]) {
            return Err(AlgebraError::Shape("J3(-1) elements are scalar matrices".into()));
        }
        Ok(JordanMat { tag, diag, off })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        JordanMat {
            tag,
            diag: [Scalar::zero(), Scalar::zero(), Scalar::zero()],
            off: [CompElem::zero(tag), CompElem::zero(tag), CompElem::zero(tag)],
        }
    }

    pub fn identity(tag: AlgebraTag) -> Self {
        JordanMat::scalar(tag, &Scalar::one())
    }

    pub fn scalar(tag: AlgebraTag, s: &Scalar) -> Self {
        let mut m = JordanMat::zero(tag);
        m.diag = [s.clone(), s.clone(), s.clone()];
        m
    }

    /// `diag(a, b, c)`; rejected for `DegMinus1` unless `a = b = c`.
    pub fn diagonal(tag: AlgebraTag, a: Scalar, b: Scalar, c: Scalar) -> Result<Self, AlgebraError> {
        let z = JordanMat::zero(tag);
        JordanMat::new(tag, [a, b, c], z.off)
    }

    pub fn from_coords(tag: AlgebraTag, coords: &[Scalar]) -> Result<Self, AlgebraError> {
        let n = jordan_dim(tag);
        if coords.len() != n {
            return Err(AlgebraError::CoordCount { tag, expected: n, found: coords.len() });
        }
        if tag == AlgebraTag::DegMinus1 {
            return Ok(JordanMat::scalar(tag, &coords[0]));
        }
        let d = tag.coord_len();
        let off = |k: usize| CompElem::new(tag, coords[3 + k * d..3 + (k + 1) * d].to_vec());
        Ok(JordanMat {
            tag,
            diag: [coords[0].clone(), coords[1].clone(), coords[2].clone()],
            off: [off(0)?, off(1)?, off(2)?],
        })
    }

    pub fn coords(&self) -> Vec<Scalar> {
        if self.tag == AlgebraTag::DegMinus1 {
            return vec![self.diag[0].clone()];
        }
        let mut v: Vec<Scalar> = self.diag.to_vec();
        for o in &self.off {
            v.extend_from_slice(o.coords());
        }
        v
    }

    /// The element whose only nonzero coordinate is `k`.
    pub fn basis(tag: AlgebraTag, k: usize) -> Self {
        let mut c = vec![Scalar::zero(); jordan_dim(tag)];
        c[k] = Scalar::one();
        JordanMat::from_coords(tag, &c).expect("basis index in range")
    }

    /// Integer coordinates drawn uniformly from `[-9, 9]`.
    pub fn random<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> Self {
        let c: Vec<Scalar> = (0..jordan_dim(tag)).map(|_| Scalar::random_int(rng, 9)).collect();
        JordanMat::from_coords(tag, &c).expect("coordinate count")
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn diag(&self) -> &[Scalar; 3] {
        &self.diag
    }

    pub fn off(&self) -> &[CompElem; 3] {
        &self.off
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(Zero::is_zero) && self.off.iter().all(CompElem::is_zero)
    }

    pub fn add(&self, o: &JordanMat) -> JordanMat {
        JordanMat {
            tag: self.tag,
            diag: core::array::from_fn(|i| &self.diag[i] + &o.diag[i]),
            off: core::array::from_fn(|i| self.off[i].add(&o.off[i])),
        }
    }

    pub fn sub(&self, o: &JordanMat) -> JordanMat {
        JordanMat {
            tag: self.tag,
            diag: core::array::from_fn(|i| &self.diag[i] - &o.diag[i]),
            off: core::array::from_fn(|i| self.off[i].sub(&o.off[i])),
        }
    }

    pub fn scale(&self, s: &Scalar) -> JordanMat {
        JordanMat {
            tag: self.tag,
            diag: core::array::from_fn(|i| &self.diag[i] * s),
            off: core::array::from_fn(|i| self.off[i].scale(s)),
        }
    }

    pub fn neg(&self) -> JordanMat {
        self.scale(&Scalar::from_i64(-1))
    }

    fn check_tag(&self, o: &JordanMat) -> Result<(), AlgebraError> {
        if self.tag != o.tag {
            return Err(AlgebraError::TagMismatch { left: self.tag, right: o.tag });
        }
        Ok(())
    }

    /// `N(A) = abc - a n(x) - b n(y) - c n(z) + t((xy)z)`.
    pub fn cubic_norm(&self) -> Scalar {
        let [a, b, c] = &self.diag;
        let [x, y, z] = &self.off;
        let mut n = a * b * c;
        if !self.tag.is_degenerate() {
            n = n - a * x.norm() - b * y.norm() - c * z.norm() + x.mul_same(y).mul_same(z).re_trace();
        }
        n
    }

    /// The adjoint, with `sharp(sharp(A)) = N(A) A`.
    pub fn sharp(&self) -> JordanMat {
        let [a, b, c] = &self.diag;
        let [x, y, z] = &self.off;
        let diag = [b * c - x.norm(), c * a - y.norm(), a * b - z.norm()];
        let off = [
            y.mul_same(z).conj().sub(&x.scale(a)),
            z.mul_same(x).conj().sub(&y.scale(b)),
            x.mul_same(y).conj().sub(&z.scale(c)),
        ];
        JordanMat { tag: self.tag, diag, off }
    }

    /// `A × B = sharp(A + B) - sharp(A) - sharp(B)`.
    pub fn cross(&self, o: &JordanMat) -> Result<JordanMat, AlgebraError> {
        self.check_tag(o)?;
        Ok(self.cross_same(o))
    }

    pub(crate) fn cross_same(&self, o: &JordanMat) -> JordanMat {
        let [a, b, c] = &self.diag;
        let [x, y, z] = &self.off;
        let [a2, b2, c2] = &o.diag;
        let [x2, y2, z2] = &o.off;
        let diag = [
            b * c2 + b2 * c - x.polar(x2),
            c * a2 + c2 * a - y.polar(y2),
            a * b2 + a2 * b - z.polar(z2),
        ];
        let off = [
            y.mul_same(z2).add(&y2.mul_same(z)).conj().sub(&x2.scale(a)).sub(&x.scale(a2)),
            z.mul_same(x2).add(&z2.mul_same(x)).conj().sub(&y2.scale(b)).sub(&y.scale(b2)),
            x.mul_same(y2).add(&x2.mul_same(y)).conj().sub(&z2.scale(c)).sub(&z.scale(c2)),
        ];
        JordanMat { tag: self.tag, diag, off }
    }

    /// `T(A, B) = sum of diag products + sum of n(off_i(A), off_i(B))`.
    pub fn trace_pair(&self, o: &JordanMat) -> Result<Scalar, AlgebraError> {
        self.check_tag(o)?;
        Ok(self.trace_same(o))
    }

    pub(crate) fn trace_same(&self, o: &JordanMat) -> Scalar {
        let mut t: Scalar = self.diag.iter().zip(&o.diag).map(|(p, q)| p * q).sum();
        for (p, q) in self.off.iter().zip(&o.off) {
            t += p.polar(q);
        }
        t
    }

    /// Coordinates of the linear form `B -> T(self, B)` in the coordinate
    /// system of [`JordanMat::coords`].
    pub fn trace_dual(&self) -> Vec<Scalar> {
        if self.tag == AlgebraTag::DegMinus1 {
            return vec![self.diag.iter().cloned().sum()];
        }
        let mut v: Vec<Scalar> = self.diag.to_vec();
        for o in &self.off {
            v.extend(o.polar_dual());
        }
        v
    }

    pub fn jordan_rank(&self) -> u8 {
        if self.is_zero() {
            0
        } else if self.sharp().is_zero() {
            1
        } else if self.cubic_norm().is_zero() {
            2
        } else {
            3
        }
    }

    /// `u u*` for `u = (1, p, q)`: a rank-one element with `a = 1`.
    ///
    /// `Deg0` has no off-diagonal data and its chart collapses to the idempotent
    /// `diag(1, 0, 0)`; `DegMinus1` has no rank-one elements at all.
    pub fn rank_one_chart(tag: AlgebraTag, p: &CompElem, q: &CompElem) -> Result<JordanMat, AlgebraError> {
        for e in [p, q] {
            if e.tag() != tag {
                return Err(AlgebraError::TagMismatch { left: tag, right: e.tag() });
            }
        }
        match tag {
            AlgebraTag::DegMinus1 => Err(AlgebraError::Shape("J3(-1) has no rank-one elements".into())),
            AlgebraTag::Deg0 => JordanMat::diagonal(tag, Scalar::one(), Scalar::zero(), Scalar::zero()),
            _ => Ok(JordanMat {
                tag,
                diag: [Scalar::one(), p.norm(), q.norm()],
                off: [p.mul_same(&q.conj()), q.clone(), p.conj()],
            }),
        }
    }

    /// Relabels the three diagonal slots by the transposition (1 2).
    pub fn swap_first_two(&self) -> JordanMat {
        let [a, b, c] = self.diag.clone();
        let [x, y, z] = &self.off;
        JordanMat { tag: self.tag, diag: [b, a, c], off: [y.conj(), x.conj(), z.conj()] }
    }

    /// Relabels the three diagonal slots cyclically.
    pub fn rotate(&self) -> JordanMat {
        let [a, b, c] = self.diag.clone();
        let [x, y, z] = self.off.clone();
        JordanMat { tag: self.tag, diag: [b, c, a], off: [y, z, x] }
    }
}

/// `J3(C⊕C)` as the full 3×3 complex matrix algebra: first components fill the
/// upper positions, second components the lower ones.
pub fn split_to_matrix(m: &JordanMat) -> Result<Mat, AlgebraError> {
    if m.tag != AlgebraTag::CplusC {
        return Err(AlgebraError::TagMismatch { left: AlgebraTag::CplusC, right: m.tag });
    }
    let [a, b, c] = &m.diag;
    let [x, y, z] = &m.off;
    let (x, y, z) = (x.coords(), y.coords(), z.coords());
    Ok(Mat::from_rows(vec![
        vec![a.clone(), z[0].clone(), y[1].clone()],
        vec![z[1].clone(), b.clone(), x[0].clone()],
        vec![y[0].clone(), x[1].clone(), c.clone()],
    ])
    .expect("3x3"))
}

pub fn matrix_to_split(m: &Mat) -> Result<JordanMat, AlgebraError> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(AlgebraError::Shape("expected a 3x3 matrix".into()));
    }
    let t = AlgebraTag::CplusC;
    let pair = |p: &Scalar, q: &Scalar| CompElem::new(t, vec![p.clone(), q.clone()]).expect("two coords");
    Ok(JordanMat {
        tag: t,
        diag: [m[(0, 0)].clone(), m[(1, 1)].clone(), m[(2, 2)].clone()],
        off: [pair(&m[(1, 2)], &m[(2, 1)]), pair(&m[(2, 0)], &m[(0, 2)]), pair(&m[(0, 1)], &m[(1, 0)])],
    })
}

/// `J3(C)` as symmetric 3×3 complex matrices.
pub fn complex_to_symmetric(m: &JordanMat) -> Result<Mat, AlgebraError> {
    if m.tag != AlgebraTag::CC {
        return Err(AlgebraError::TagMismatch { left: AlgebraTag::CC, right: m.tag });
    }
    let [a, b, c] = &m.diag;
    let [x, y, z] = m.off.clone().map(|e| e.coords()[0].clone());
    Ok(Mat::from_rows(vec![
        vec![a.clone(), z.clone(), y.clone()],
        vec![z, b.clone(), x.clone()],
        vec![y, x, c.clone()],
    ])
    .expect("3x3"))
}

/// Inverse of [`complex_to_symmetric`]; fails on non-symmetric input.
pub fn symmetric_to_complex(m: &Mat) -> Result<JordanMat, AlgebraError> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(AlgebraError::Shape("expected a 3x3 matrix".into()));
    }
    if m != &m.transpose() {
        return Err(AlgebraError::Shape("matrix is not symmetric".into()));
    }
    let t = AlgebraTag::CC;
    let e = |i, j| CompElem::new(t, vec![m[(i, j)].clone()]).expect("one coord");
    JordanMat::new(t, [m[(0, 0)].clone(), m[(1, 1)].clone(), m[(2, 2)].clone()], [e(1, 2), e(2, 0), e(0, 1)])
}

/// Classical adjugate, `m adj(m) = det(m) I`.
pub fn adjugate3(m: &Mat) -> Mat {
    Mat::from_fn(3, 3, |i, j| {
        // cofactor of (j, i)
        let r: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        let c: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let minor = &m[(r[0], c[0])] * &m[(r[1], c[1])] - &m[(r[0], c[1])] * &m[(r[1], c[0])];
        if (i + j) % 2 == 0 {
            minor
        } else {
            -minor
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn norm_and_sharp_examples() {
        for tag in AlgebraTag::ALL {
            let id = JordanMat::identity(tag);
            assert_eq!(id.cubic_norm(), s(1));
            assert_eq!(id.sharp(), id);
            assert_eq!(id.cross(&id).unwrap(), id.scale(&s(2)));
            assert_eq!(id.trace_pair(&id).unwrap(), s(3));
            assert_eq!(id.jordan_rank(), 3);
            if tag == AlgebraTag::DegMinus1 {
                continue;
            }
            let d = JordanMat::diagonal(tag, s(2), s(3), s(5)).unwrap();
            assert_eq!(d.cubic_norm(), s(30));
            assert_eq!(d.sharp(), JordanMat::diagonal(tag, s(15), s(10), s(6)).unwrap());
            let e = JordanMat::diagonal(tag, s(1), s(2), s(3)).unwrap();
            let f = JordanMat::diagonal(tag, s(4), s(5), s(6)).unwrap();
            assert_eq!(e.trace_pair(&f).unwrap(), s(32));
            assert_eq!(JordanMat::diagonal(tag, s(1), s(0), s(0)).unwrap().jordan_rank(), 1);
            assert_eq!(JordanMat::diagonal(tag, s(1), s(1), s(0)).unwrap().jordan_rank(), 2);
            assert_eq!(JordanMat::zero(tag).jordan_rank(), 0);
        }
    }

    #[test]
    fn cross_with_zero_vanishes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = JordanMat::random(AlgebraTag::OctC, &mut rng);
        assert!(a.cross(&JordanMat::zero(AlgebraTag::OctC)).unwrap().is_zero());
        assert!(a.cross(&JordanMat::zero(AlgebraTag::M2C)).is_err());
    }

    #[test]
    fn degenerate_shapes_are_enforced() {
        assert!(JordanMat::diagonal(AlgebraTag::DegMinus1, s(1), s(2), s(1)).is_err());
        assert_eq!(jordan_dim(AlgebraTag::DegMinus1), 1);
        let m = JordanMat::from_coords(AlgebraTag::DegMinus1, &[s(4)]).unwrap();
        assert_eq!(m.cubic_norm(), s(64));
        assert_eq!(m.sharp(), JordanMat::scalar(AlgebraTag::DegMinus1, &s(16)));
        assert!(JordanMat::rank_one_chart(
            AlgebraTag::DegMinus1,
            &CompElem::zero(AlgebraTag::DegMinus1),
            &CompElem::zero(AlgebraTag::DegMinus1)
        )
        .is_err());
    }

    #[test]
    fn rank_one_chart_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for tag in [AlgebraTag::CC, AlgebraTag::CplusC, AlgebraTag::M2C, AlgebraTag::OctC] {
            let z = CompElem::zero(tag);
            let m = JordanMat::rank_one_chart(tag, &z, &z).unwrap();
            assert_eq!(m, JordanMat::diagonal(tag, s(1), s(0), s(0)).unwrap());
            for _ in 0..50 {
                let p = CompElem::random(tag, &mut rng);
                let q = CompElem::random(tag, &mut rng);
                let m = JordanMat::rank_one_chart(tag, &p, &q).unwrap();
                assert_eq!(m.jordan_rank(), 1, "{tag:?}");
            }
        }
        let z = CompElem::zero(AlgebraTag::Deg0);
        assert_eq!(JordanMat::rank_one_chart(AlgebraTag::Deg0, &z, &z).unwrap().jordan_rank(), 1);
    }

    #[test]
    fn coords_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for tag in AlgebraTag::ALL {
            let m = JordanMat::random(tag, &mut rng);
            assert_eq!(JordanMat::from_coords(tag, &m.coords()).unwrap(), m);
            // trace_dual represents T(m, .)
            let n = JordanMat::random(tag, &mut rng);
            let lhs: Scalar = m.trace_dual().iter().zip(n.coords()).map(|(a, b)| a * b).sum();
            assert_eq!(lhs, m.trace_pair(&n).unwrap());
        }
    }

    #[test]
    fn split_dictionary_matches_matrix_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let a = JordanMat::random(AlgebraTag::CplusC, &mut rng);
            let b = JordanMat::random(AlgebraTag::CplusC, &mut rng);
            let ma = split_to_matrix(&a).unwrap();
            let mb = split_to_matrix(&b).unwrap();
            assert_eq!(matrix_to_split(&ma).unwrap(), a);
            assert_eq!(a.cubic_norm(), ma.det().unwrap());
            assert_eq!(split_to_matrix(&a.sharp()).unwrap(), adjugate3(&ma));
            let prod = ma.mul(&mb).unwrap();
            let tr: Scalar = (0..3).map(|i| prod[(i, i)].clone()).sum();
            assert_eq!(a.trace_pair(&b).unwrap(), tr);
            assert_eq!(a.jordan_rank() as usize, ma.rank());
        }
    }

    #[test]
    fn symmetric_dictionary_matches_matrix_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..200 {
            let a = JordanMat::random(AlgebraTag::CC, &mut rng);
            let ma = complex_to_symmetric(&a).unwrap();
            assert_eq!(symmetric_to_complex(&ma).unwrap(), a);
            assert_eq!(a.cubic_norm(), ma.det().unwrap());
            assert_eq!(complex_to_symmetric(&a.sharp()).unwrap(), adjugate3(&ma));
        }
    }
}

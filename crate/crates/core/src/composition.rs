//! The complexified composition algebras that feed the cubic Jordan algebras,
//! plus two degenerate slots that only constrain matrix shapes.
//!
//! Coordinate conventions:
//! - `CC`: `[x]`
//! - `CplusC`: `[x1, x2]`, componentwise product, conjugation swaps
//! - `M2C`: `[m00, m01, m10, m11]` row-major, conjugation is the adjugate
//! - `OctC`: `[a; b]` with `a, b` in `M2C`, Cayley–Dickson doubled with
//!   `(a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))`

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::AlgebraError;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    /// Diagonal-only Jordan matrices (three qubits).
    Deg0,
    /// Scalar Jordan matrices (three bosonic qubits).
    DegMinus1,
    CC,
    CplusC,
    M2C,
    OctC,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 6] = [
        AlgebraTag::DegMinus1,
        AlgebraTag::Deg0,
        AlgebraTag::CC,
        AlgebraTag::CplusC,
        AlgebraTag::M2C,
        AlgebraTag::OctC,
    ];

    /// Complex dimension of the off-diagonal algebra.
    pub fn dim(self) -> usize {
        match self {
            AlgebraTag::Deg0 => 0,
            AlgebraTag::DegMinus1 => 1,
            AlgebraTag::CC => 1,
            AlgebraTag::CplusC => 2,
            AlgebraTag::M2C => 4,
            AlgebraTag::OctC => 8,
        }
    }

    /// Number of coordinates carried by an off-diagonal entry. The degenerate
    /// slots have none: their Jordan matrices are diagonal.
    pub fn coord_len(self) -> usize {
        if self.is_degenerate() {
            0
        } else {
            self.dim()
        }
    }

    pub fn is_degenerate(self) -> bool {
        matches!(self, AlgebraTag::Deg0 | AlgebraTag::DegMinus1)
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::Deg0 => "zero",
            AlgebraTag::DegMinus1 => "minus-one",
            AlgebraTag::CC => "complex",
            AlgebraTag::CplusC => "split",
            AlgebraTag::M2C => "quaternion",
            AlgebraTag::OctC => "octonion",
        }
    }

    pub fn from_name(s: &str) -> Option<AlgebraTag> {
        AlgebraTag::ALL.into_iter().find(|t| t.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompElem {
    tag: AlgebraTag,
    coords: Vec<Scalar>,
}

impl CompElem {
    pub fn new(tag: AlgebraTag, coords: Vec<Scalar>) -> Result<Self, AlgebraError> {
        if coords.len() != tag.coord_len() {
            return Err(AlgebraError::CoordCount {
                tag,
                expected: tag.coord_len(),
                found: coords.len(),
            });
        }
        Ok(CompElem { tag, coords })
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        CompElem { tag, coords: vec![Scalar::zero(); tag.coord_len()] }
    }

    /// Multiplicative unit; the zero element for the degenerate slots.
    pub fn one(tag: AlgebraTag) -> Self {
        CompElem::from_scalar(tag, &Scalar::one())
    }

    /// `s` times the unit (the center of the algebra).
    pub fn from_scalar(tag: AlgebraTag, s: &Scalar) -> Self {
        let z = Scalar::zero();
        let coords = match tag {
            AlgebraTag::Deg0 | AlgebraTag::DegMinus1 => vec![],
            AlgebraTag::CC => vec![s.clone()],
            AlgebraTag::CplusC => vec![s.clone(), s.clone()],
            AlgebraTag::M2C => vec![s.clone(), z.clone(), z, s.clone()],
            AlgebraTag::OctC => {
                let mut v = vec![Scalar::zero(); 8];
                v[0] = s.clone();
                v[3] = s.clone();
                v
            }
        };
        CompElem { tag, coords }
    }

    pub fn basis(tag: AlgebraTag, k: usize) -> Self {
        let mut coords = vec![Scalar::zero(); tag.coord_len()];
        coords[k] = Scalar::one();
        CompElem { tag, coords }
    }

    pub fn random<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> Self {
        CompElem { tag, coords: (0..tag.coord_len()).map(|_| Scalar::random_int(rng, 9)).collect() }
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &CompElem) -> CompElem {
        debug_assert_eq!(self.tag, o.tag);
        CompElem { tag: self.tag, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &CompElem) -> CompElem {
        debug_assert_eq!(self.tag, o.tag);
        CompElem { tag: self.tag, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> CompElem {
        CompElem { tag: self.tag, coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> CompElem {
        CompElem { tag: self.tag, coords: self.coords.iter().map(|a| a * s).collect() }
    }

    pub fn mul(&self, o: &CompElem) -> Result<CompElem, AlgebraError> {
        if self.tag != o.tag {
            return Err(AlgebraError::TagMismatch { left: self.tag, right: o.tag });
        }
        Ok(self.mul_same(o))
    }

    /// Product for operands already known to share a tag.
    pub(crate) fn mul_same(&self, o: &CompElem) -> CompElem {
        let (x, y) = (&self.coords, &o.coords);
        let coords = match self.tag {
            AlgebraTag::Deg0 | AlgebraTag::DegMinus1 => vec![],
            AlgebraTag::CC => vec![&x[0] * &y[0]],
            AlgebraTag::CplusC => vec![&x[0] * &y[0], &x[1] * &y[1]],
            AlgebraTag::M2C => m2_mul(x, y).to_vec(),
            AlgebraTag::OctC => {
                let (a, b) = x.split_at(4);
                let (c, d) = y.split_at(4);
                let left = m2_sub(&m2_mul(a, c), &m2_mul(&m2_adj(d), b));
                let right = m2_add(&m2_mul(d, a), &m2_mul(b, &m2_adj(c)));
                left.into_iter().chain(right).collect()
            }
        };
        CompElem { tag: self.tag, coords }
    }

    /// The standard involution.
    pub fn conj(&self) -> CompElem {
        let x = &self.coords;
        let coords = match self.tag {
            AlgebraTag::Deg0 | AlgebraTag::DegMinus1 => vec![],
            AlgebraTag::CC => x.clone(),
            AlgebraTag::CplusC => vec![x[1].clone(), x[0].clone()],
            AlgebraTag::M2C => m2_adj(x).to_vec(),
            AlgebraTag::OctC => m2_adj(&x[..4]).into_iter().chain(x[4..].iter().map(|v| -v)).collect(),
        };
        CompElem { tag: self.tag, coords }
    }

    /// `x conj(x)` read off in the center.
    pub fn norm(&self) -> Scalar {
        let x = &self.coords;
        match self.tag {
            AlgebraTag::Deg0 | AlgebraTag::DegMinus1 => Scalar::zero(),
            AlgebraTag::CC => &x[0] * &x[0],
            AlgebraTag::CplusC => &x[0] * &x[1],
            AlgebraTag::M2C => m2_det(x),
            AlgebraTag::OctC => m2_det(&x[..4]) + m2_det(&x[4..]),
        }
    }

    /// `x + conj(x)` read off in the center.
    pub fn re_trace(&self) -> Scalar {
        let x = &self.coords;
        match self.tag {
            AlgebraTag::Deg0 | AlgebraTag::DegMinus1 => Scalar::zero(),
            AlgebraTag::CC => &x[0] + &x[0],
            AlgebraTag::CplusC => &x[0] + &x[1],
            AlgebraTag::M2C | AlgebraTag::OctC => &x[0] + &x[3],
        }
    }

    /// Polarized norm `n(x, y) = re_trace(x conj(y)) = n(x+y) - n(x) - n(y)`.
    pub fn polar(&self, o: &CompElem) -> Scalar {
        self.polar_dual().iter().zip(&o.coords).map(|(a, b)| a * b).sum()
    }

    /// Coordinates of the linear form `y -> n(self, y)`.
    pub fn polar_dual(&self) -> Vec<Scalar> {
        let x = &self.coords;
        match self.tag {
            AlgebraTag::Deg0 | AlgebraTag::DegMinus1 => vec![],
            AlgebraTag::CC => vec![&x[0] + &x[0]],
            AlgebraTag::CplusC => vec![x[1].clone(), x[0].clone()],
            AlgebraTag::M2C => m2_polar_dual(x).to_vec(),
            AlgebraTag::OctC => m2_polar_dual(&x[..4]).into_iter().chain(m2_polar_dual(&x[4..])).collect(),
        }
    }

    /// Whether every coordinate outside the center vanishes.
    pub fn is_central(&self) -> bool {
        let x = &self.coords;
        match self.tag {
            AlgebraTag::Deg0 | AlgebraTag::DegMinus1 => true,
            AlgebraTag::CC => true,
            AlgebraTag::CplusC => x[0] == x[1],
            AlgebraTag::M2C => x[1].is_zero() && x[2].is_zero() && x[0] == x[3],
            AlgebraTag::OctC => {
                x[1].is_zero() && x[2].is_zero() && x[0] == x[3] && x[4..].iter().all(Zero::is_zero)
            }
        }
    }
}

fn m2_mul(x: &[Scalar], y: &[Scalar]) -> [Scalar; 4] {
    [
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

fn m2_adj(x: &[Scalar]) -> [Scalar; 4] {
    [x[3].clone(), -&x[1], -&x[2], x[0].clone()]
}

fn m2_add(x: &[Scalar], y: &[Scalar]) -> [Scalar; 4] {
    [&x[0] + &y[0], &x[1] + &y[1], &x[2] + &y[2], &x[3] + &y[3]]
}

fn m2_sub(x: &[Scalar], y: &[Scalar]) -> [Scalar; 4] {
    [&x[0] - &y[0], &x[1] - &y[1], &x[2] - &y[2], &x[3] - &y[3]]
}

fn m2_det(x: &[Scalar]) -> Scalar {
    &x[0] * &x[3] - &x[1] * &x[2]
}

fn m2_polar_dual(x: &[Scalar]) -> [Scalar; 4] {
    // det(x+y) - det(x) - det(y) = x00 y11 + x11 y00 - x01 y10 - x10 y01
    [x[3].clone(), -&x[2], -&x[1], x[0].clone()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TAGS: [AlgebraTag; 4] = [AlgebraTag::CC, AlgebraTag::CplusC, AlgebraTag::M2C, AlgebraTag::OctC];

    fn el(tag: AlgebraTag, v: &[i64]) -> CompElem {
        CompElem::new(tag, v.iter().map(|&x| Scalar::from_i64(x)).collect()).unwrap()
    }

    #[test]
    fn dims_match_tags() {
        let dims: Vec<usize> = AlgebraTag::ALL.iter().map(|t| t.dim()).collect();
        assert_eq!(dims, vec![1, 0, 1, 2, 4, 8]);
    }

    #[test]
    fn split_complex_examples() {
        let x = el(AlgebraTag::CplusC, &[2, 3]);
        let y = el(AlgebraTag::CplusC, &[5, 7]);
        assert_eq!(x.mul(&y).unwrap(), el(AlgebraTag::CplusC, &[10, 21]));
        assert_eq!(x.conj(), el(AlgebraTag::CplusC, &[3, 2]));
        assert_eq!(x.norm(), Scalar::from_i64(6));
    }

    #[test]
    fn matrix_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = CompElem::random(AlgebraTag::M2C, &mut rng);
        let id = CompElem::one(AlgebraTag::M2C);
        assert_eq!(id.mul(&x).unwrap(), x);
        assert_eq!(x.norm(), m2_det(x.coords()));
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let x = CompElem::one(AlgebraTag::CC);
        let y = CompElem::one(AlgebraTag::M2C);
        assert!(matches!(x.mul(&y), Err(AlgebraError::TagMismatch { .. })));
        assert!(CompElem::new(AlgebraTag::OctC, vec![Scalar::one()]).is_err());
    }

    #[test]
    fn composition_identities_hold_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for tag in TAGS {
            for _ in 0..500 {
                let x = CompElem::random(tag, &mut rng);
                let y = CompElem::random(tag, &mut rng);
                assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm(), "{tag:?}");
                let xx = x.mul(&x).unwrap();
                assert_eq!(xx.mul(&y).unwrap(), x.mul(&x.mul(&y).unwrap()).unwrap(), "{tag:?}");
                assert_eq!(x.conj().conj(), x);
                let nx = x.mul(&x.conj()).unwrap();
                assert!(nx.is_central());
                assert_eq!(nx, CompElem::from_scalar(tag, &x.norm()));
                let tx = x.add(&x.conj());
                assert!(tx.is_central());
                assert_eq!(tx, CompElem::from_scalar(tag, &x.re_trace()));
                assert_eq!(x.polar(&y), x.mul(&y.conj()).unwrap().re_trace());
                assert_eq!(x.polar(&y), x.add(&y).norm() - x.norm() - y.norm());
            }
        }
    }

    #[test]
    fn commutativity_and_associativity_pattern() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let assoc = |x: &CompElem, y: &CompElem, z: &CompElem| {
            x.mul(y).unwrap().mul(z).unwrap().sub(&x.mul(&y.mul(z).unwrap()).unwrap())
        };
        for _ in 0..50 {
            let [x, y, z] = [0; 3].map(|_| CompElem::random(AlgebraTag::CplusC, &mut rng));
            assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
            assert!(assoc(&x, &y, &z).is_zero());
            let [x, y, z] = [0; 3].map(|_| CompElem::random(AlgebraTag::M2C, &mut rng));
            assert!(assoc(&x, &y, &z).is_zero());
        }
        let e = |k| CompElem::basis(AlgebraTag::M2C, k);
        assert_ne!(e(1).mul(&e(2)).unwrap(), e(2).mul(&e(1)).unwrap());
        // octonions: a witness triple with nonzero associator
        let o = |k| CompElem::basis(AlgebraTag::OctC, k);
        let witness = (0..8)
            .flat_map(|i| (0..8).flat_map(move |j| (0..8).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| !assoc(&o(i), &o(j), &o(k)).is_zero());
        assert!(witness.is_some(), "octonion product is associative");
    }
}

//! Bipartite systems whose only genuine strata are ranks: Hermitian
//! matrices over the four composition algebras (Jordan rank), `3×4`
//! matrices and skew forms in odd dimension.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;

use crate::composition::{AlgebraTag, CompElem};
use crate::error::{AlgebraError, ClassifyError};
use crate::jordan::{matrix_to_split, JordanMat};
use crate::label::StrataLabel;
use crate::linalg::Mat;
use crate::scalar::Scalar;

const MAX_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankSpace {
    Severi(AlgebraTag),
    Matrix3x4,
    Skew(usize),
}

impl RankSpace {
    pub fn validate(self) -> Result<Self, ClassifyError> {
        match self {
            RankSpace::Severi(t) if t.is_degenerate() => {
                Err(ClassifyError::InvalidSpace(format!("no rank system over {}", t.name())))
            }
            RankSpace::Skew(n) if n != 5 && n != 7 => {
                Err(ClassifyError::InvalidSpace(format!("skew forms supported for n = 5, 7, got {n}")))
            }
            s => Ok(s),
        }
    }

    /// Largest rank attained.
    pub fn max_rank(self) -> u8 {
        match self {
            RankSpace::Severi(_) | RankSpace::Matrix3x4 => 3,
            RankSpace::Skew(n) => (n - n % 2) as u8,
        }
    }

    /// Ranks that occur on nonzero states, smallest first.
    pub fn ranks(self) -> Vec<u8> {
        match self {
            RankSpace::Skew(_) => (1..=self.max_rank() / 2).map(|k| 2 * k).collect(),
            _ => (1..=self.max_rank()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankState {
    Severi(JordanMat),
    Matrix3x4(Mat),
    Skew(Mat),
}

impl RankState {
    pub fn severi(j: JordanMat) -> Result<Self, ClassifyError> {
        RankSpace::Severi(j.tag()).validate()?;
        Ok(RankState::Severi(j))
    }

    pub fn matrix3x4(m: Mat) -> Result<Self, ClassifyError> {
        if m.rows() != 3 || m.cols() != 4 {
            return Err(ClassifyError::InvalidSpace(format!("expected 3x4, got {}x{}", m.rows(), m.cols())));
        }
        Ok(RankState::Matrix3x4(m))
    }

    pub fn skew(m: Mat) -> Result<Self, ClassifyError> {
        if m.rows() != m.cols() {
            return Err(ClassifyError::InvalidSpace(format!("skew payload is {}x{}", m.rows(), m.cols())));
        }
        RankSpace::Skew(m.rows()).validate()?;
        let neg = Mat::from_fn(m.rows(), m.cols(), |i, j| -&m[(i, j)]);
        if m.transpose() != neg {
            return Err(ClassifyError::NotSkew);
        }
        Ok(RankState::Skew(m))
    }

    pub fn space(&self) -> RankSpace {
        match self {
            RankState::Severi(j) => RankSpace::Severi(j.tag()),
            RankState::Matrix3x4(_) => RankSpace::Matrix3x4,
            RankState::Skew(m) => RankSpace::Skew(m.rows()),
        }
    }
}

/// `Rank(k)`: Jordan rank, matrix rank or skew rank.
pub fn classify_rank(s: &RankState) -> StrataLabel {
    let k = match s {
        RankState::Severi(j) => j.jordan_rank(),
        RankState::Matrix3x4(m) | RankState::Skew(m) => m.rank() as u8,
    };
    StrataLabel::Rank(k)
}

/// Two qutrits `c[3i + j]` as a Hermitian matrix over the split complex
/// numbers.
pub fn two_qutrit(c: &[Scalar]) -> Result<JordanMat, AlgebraError> {
    if c.len() != 9 {
        return Err(AlgebraError::CoordCount { tag: AlgebraTag::CplusC, expected: 9, found: c.len() });
    }
    matrix_to_split(&Mat::from_fn(3, 3, |i, j| c[3 * i + j].clone()))
}

fn m2_block(e: &CompElem) -> [[Scalar; 2]; 2] {
    let c = e.coords();
    [[c[0].clone(), c[1].clone()], [c[2].clone(), c[3].clone()]]
}

fn scalar_block(s: &Scalar) -> [[Scalar; 2]; 2] {
    [[s.clone(), Scalar::zero()], [Scalar::zero(), s.clone()]]
}

/// The skew form `H · diag(ε, ε, ε)` on `C⁶`, `H` being the `6×6` complex
/// matrix of 2×2 blocks of a quaternionic Hermitian matrix and
/// `ε = [[0, 1], [-1, 0]]`. Jordan rank `k` becomes skew rank `2k`.
pub fn quaternion_to_skew(j: &JordanMat) -> Result<Mat, AlgebraError> {
    if j.tag() != AlgebraTag::M2C {
        return Err(AlgebraError::TagMismatch { left: AlgebraTag::M2C, right: j.tag() });
    }
    let [a, b, c] = j.diag();
    let [x, y, z] = j.off();
    let blocks = [
        [scalar_block(a), m2_block(z), m2_block(&y.conj())],
        [m2_block(&z.conj()), scalar_block(b), m2_block(x)],
        [m2_block(y), m2_block(&x.conj()), scalar_block(c)],
    ];
    // Right multiplication by ε sends columns (p, q) to (-q, p).
    Ok(Mat::from_fn(6, 6, |r, s| {
        let blk = &blocks[r / 2][s / 2];
        if s % 2 == 0 {
            -&blk[r % 2][1]
        } else {
            blk[r % 2][0].clone()
        }
    }))
}

/// Inverse of [`quaternion_to_skew`].
pub fn skew_to_quaternion(s: &Mat) -> Result<JordanMat, AlgebraError> {
    if s.rows() != 6 || s.cols() != 6 {
        return Err(AlgebraError::Shape(format!("expected 6x6, got {}x{}", s.rows(), s.cols())));
    }
    // Undo ε: block entry (p, 0) = S(p, 2k+1), (p, 1) = -S(p, 2k).
    let block = |bi: usize, bj: usize| -> Vec<Scalar> {
        let mut v = Vec::with_capacity(4);
        for p in 0..2 {
            v.push(s[(2 * bi + p, 2 * bj + 1)].clone());
            v.push(-&s[(2 * bi + p, 2 * bj)]);
        }
        v
    };
    let off = |bi, bj| CompElem::new(AlgebraTag::M2C, block(bi, bj));
    let diag = |k: usize| block(k, k)[0].clone();
    let j = JordanMat::new(AlgebraTag::M2C, [diag(0), diag(1), diag(2)], [off(1, 2)?, off(2, 0)?, off(0, 1)?])?;
    if quaternion_to_skew(&j)? != *s {
        return Err(AlgebraError::Shape("skew matrix is outside the Hermitian image".into()));
    }
    Ok(j)
}

fn random_vec<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::random_int(rng, 9)).collect()
}

fn rank_one_severi<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> Result<JordanMat, AlgebraError> {
    let mut e = JordanMat::rank_one_chart(tag, &CompElem::random(tag, rng), &CompElem::random(tag, rng))?;
    for _ in 0..rng.random_range(0..3) {
        e = e.rotate();
    }
    Ok(e.scale(&Scalar::random_nonzero_int(rng, 5)))
}

fn candidate<R: Rng + ?Sized>(space: RankSpace, rank: u8, rng: &mut R) -> Result<RankState, ClassifyError> {
    let k = rank as usize;
    Ok(match space {
        RankSpace::Severi(tag) => {
            let mut j = JordanMat::zero(tag);
            for _ in 0..k {
                j = j.add(&rank_one_severi(tag, rng)?);
            }
            RankState::Severi(j)
        }
        RankSpace::Matrix3x4 => {
            let mut m = Mat::zeros(3, 4);
            for _ in 0..k {
                let (u, v) = (random_vec(3, rng), random_vec(4, rng));
                for i in 0..3 {
                    for j in 0..4 {
                        m[(i, j)] += &u[i] * &v[j];
                    }
                }
            }
            RankState::Matrix3x4(m)
        }
        RankSpace::Skew(n) => {
            let mut m = Mat::zeros(n, n);
            for _ in 0..k / 2 {
                let (u, v) = (random_vec(n, rng), random_vec(n, rng));
                for i in 0..n {
                    for j in 0..n {
                        m[(i, j)] += &u[i] * &v[j] - &u[j] * &v[i];
                    }
                }
            }
            RankState::Skew(m)
        }
    })
}

/// A random state of the given rank.
pub fn sample_rank<R: Rng + ?Sized>(space: RankSpace, rank: u8, rng: &mut R) -> Result<RankState, ClassifyError> {
    let space = space.validate()?;
    if !space.ranks().contains(&rank) {
        return Err(ClassifyError::InvalidSpace(format!("rank {rank} does not occur in {space:?}")));
    }
    for _ in 0..MAX_ATTEMPTS {
        let s = candidate(space, rank, rng)?;
        if classify_rank(&s) == StrataLabel::Rank(rank) {
            return Ok(s);
        }
    }
    Err(ClassifyError::SamplingExhausted { label: format!("Rank({rank})"), attempts: MAX_ATTEMPTS })
}

/// Block-diagonal skew form `e1∧e2 + e3∧e4 + …` with `pairs` blocks.
pub fn standard_skew(n: usize, pairs: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    for k in 0..pairs.min(n / 2) {
        m[(2 * k, 2 * k + 1)] = Scalar::one();
        m[(2 * k + 1, 2 * k)] = -Scalar::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        let mut c = vec![Scalar::zero(); 9];
        c[0] = Scalar::one();
        c[4] = Scalar::one();
        let q = RankState::severi(two_qutrit(&c).unwrap()).unwrap();
        assert_eq!(classify_rank(&q), StrataLabel::Rank(2));
        let skew = RankState::skew(standard_skew(7, 3)).unwrap();
        assert_eq!(classify_rank(&skew), StrataLabel::Rank(6));
        assert_eq!(RankState::skew(Mat::identity(5)), Err(ClassifyError::NotSkew));
        assert!(RankState::skew(standard_skew(6, 3)).is_err());
        assert!(RankState::severi(JordanMat::zero(AlgebraTag::Deg0)).is_err());
    }

    #[test]
    fn octonion_chart_has_rank_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..20 {
            let j = rank_one_severi(AlgebraTag::OctC, &mut rng).unwrap();
            assert_eq!(classify_rank(&RankState::severi(j).unwrap()), StrataLabel::Rank(1));
        }
    }

    #[test]
    fn skew_dictionary_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let j = JordanMat::random(AlgebraTag::M2C, &mut rng);
        let s = quaternion_to_skew(&j).unwrap();
        assert_eq!(s.transpose(), Mat::from_fn(6, 6, |a, b| -&s[(a, b)]));
        assert_eq!(skew_to_quaternion(&s).unwrap(), j);
    }

    #[test]
    fn samples_hit_requested_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for space in [
            RankSpace::Severi(AlgebraTag::CC),
            RankSpace::Severi(AlgebraTag::CplusC),
            RankSpace::Severi(AlgebraTag::M2C),
            RankSpace::Severi(AlgebraTag::OctC),
            RankSpace::Matrix3x4,
            RankSpace::Skew(5),
            RankSpace::Skew(7),
        ] {
            for r in space.ranks() {
                let s = sample_rank(space, r, &mut rng).unwrap();
                assert_eq!(classify_rank(&s), StrataLabel::Rank(r));
            }
        }
        assert!(sample_rank(RankSpace::Skew(5), 3, &mut rng).is_err());
    }
}

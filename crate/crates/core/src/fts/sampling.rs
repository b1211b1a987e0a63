use alloc::format;

use rand::Rng;

use crate::composition::{AlgebraTag, CompElem};
use crate::error::{AlgebraError, ClassifyError};
use crate::jordan::JordanMat;
use crate::label::StrataLabel;
use crate::scalar::Scalar;

use super::{classify_fts, plucker, plucker_differential, FtsVector};

const MAX_ATTEMPTS: usize = 64;

/// `s φ(P) + t dφ_P[Q]`, a point on the tangent line to the separable
/// variety at `φ(P)`.
pub fn tangent_sample(
    p: &JordanMat,
    q: &JordanMat,
    s: &Scalar,
    t: &Scalar,
) -> Result<FtsVector, AlgebraError> {
    plucker(p).scale(s).add(&plucker_differential(p, q)?.scale(t))
}

/// A rank-one element with a random slot order and scale.
fn random_rank_one<R: Rng + ?Sized>(tag: AlgebraTag, rng: &mut R) -> Result<JordanMat, AlgebraError> {
    let mut e = JordanMat::rank_one_chart(tag, &CompElem::random(tag, rng), &CompElem::random(tag, rng))?;
    for _ in 0..rng.random_range(0..3) {
        e = e.rotate();
    }
    Ok(e.scale(&Scalar::random_nonzero_int(rng, 5)))
}

fn candidate<R: Rng + ?Sized>(tag: AlgebraTag, label: StrataLabel, rng: &mut R) -> Result<FtsVector, ClassifyError> {
    let lambda = Scalar::random_nonzero_int(rng, 5);
    let mu = Scalar::random_nonzero_int(rng, 5);
    let p1 = JordanMat::random(tag, rng);
    let x = match label {
        StrataLabel::Separable => plucker(&p1).scale(&lambda),
        StrataLabel::Ghz => {
            let p2 = JordanMat::random(tag, rng);
            plucker(&p1).scale(&lambda).add(&plucker(&p2).scale(&mu))?
        }
        StrataLabel::W => tangent_sample(&p1, &JordanMat::random(tag, rng), &lambda, &mu)?,
        StrataLabel::Biseparable(_) => {
            // Two chart points whose difference has Jordan rank two span a
            // secant line inside the biseparable locus.
            let r = random_rank_one(tag, rng)?.add(&random_rank_one(tag, rng)?);
            if r.jordan_rank() != 2 {
                return Ok(FtsVector::zero(tag));
            }
            plucker(&p1).scale(&lambda).add(&plucker(&p1.add(&r)).scale(&mu))?
        }
        StrataLabel::Null | StrataLabel::Rank(_) => unreachable!("filtered by sample_class"),
    };
    Ok(x)
}

/// A random vector over `tag` whose stratum is `label`.
///
/// The biseparable partition of `label` is ignored.
pub fn sample_class<R: Rng + ?Sized>(
    tag: AlgebraTag,
    label: StrataLabel,
    rng: &mut R,
) -> Result<FtsVector, ClassifyError> {
    let reachable = match label {
        StrataLabel::Separable | StrataLabel::W | StrataLabel::Ghz => true,
        StrataLabel::Biseparable(_) => tag != AlgebraTag::DegMinus1,
        StrataLabel::Null | StrataLabel::Rank(_) => false,
    };
    if !reachable {
        return Err(ClassifyError::UnreachableLabel { tag, label: format!("{label}") });
    }
    for attempt in 0..MAX_ATTEMPTS {
        let x = candidate(tag, label, rng)?;
        if classify_fts(&x).same_stratum(&label) {
            if attempt > 0 {
                log::debug!("sample_class({tag:?}, {label}): accepted after {attempt} rejections");
            }
            return Ok(x);
        }
    }
    Err(ClassifyError::SamplingExhausted { label: format!("{label}"), attempts: MAX_ATTEMPTS })
}

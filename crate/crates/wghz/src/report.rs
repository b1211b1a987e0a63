//! Classification, invariants and sampling for parsed state files.

use std::fmt::Write as _;

use num_traits::Zero;
use rand::Rng;

use wghz_core::fts::{analyze_fts, embed_three_qubit, sample_class, three_qubit_coeffs, wedge3_coeffs, FtsAnalysis};
use wghz_core::rank_classifier::{classify_rank, sample_rank, RankSpace, RankState};
use wghz_core::so_series::{classify_so, from_three_qubit, gram_quartic, sample_so, to_three_qubit};
use wghz_core::{AlgebraTag, Mat, Partition, Scalar, StrataLabel};

use crate::state_io::{FtsBasis, Space, State, StateError, StateFile};

/// A label with its supporting invariant values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub label: StrataLabel,
    /// `(name, value)` pairs in print order.
    pub invariants: Vec<(String, String)>,
}

impl Classification {
    /// Label on the first line, then one `name: value` line per invariant.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.label);
        for (k, v) in &self.invariants {
            let _ = writeln!(out, "{k}: {v}");
        }
        out
    }
}

fn fts_invariants(a: &FtsAnalysis) -> Vec<(String, String)> {
    vec![
        ("quartic".into(), a.quartic.to_string()),
        ("gradient-nonzero".into(), a.gradient_support.to_string()),
        ("hessian-nonzero".into(), a.quadric_support.to_string()),
    ]
}

fn rank_space(space: Space) -> Option<RankSpace> {
    match space {
        Space::Severi { algebra, .. } => Some(RankSpace::Severi(algebra)),
        Space::Matrix3x4 => Some(RankSpace::Matrix3x4),
        Space::Skew { n } => Some(RankSpace::Skew(n)),
        _ => None,
    }
}

pub fn classify_state(file: &StateFile) -> Result<Classification, StateError> {
    let state = file.state()?;
    Ok(match state {
        State::Fts(x) => {
            let a = analyze_fts(&x);
            Classification { label: a.label, invariants: fts_invariants(&a) }
        }
        State::SoSeries(s) if s.m() == 4 => {
            // Three qubits: the FTS route also names the biseparable partition.
            let c = to_three_qubit(&s).map_err(|e| StateError(e.to_string()))?;
            let a = analyze_fts(&embed_three_qubit(&c).map_err(|e| StateError(e.to_string()))?);
            let mut invariants = fts_invariants(&a);
            invariants.push(("gram-quartic".into(), gram_quartic(&s).to_string()));
            Classification { label: a.label, invariants }
        }
        State::SoSeries(s) => {
            let rows = Mat::from_rows(vec![s.u().to_vec(), s.v().to_vec()]).map_err(|e| StateError(e.to_string()))?;
            Classification {
                label: classify_so(&s),
                invariants: vec![
                    ("gram-quartic".into(), gram_quartic(&s).to_string()),
                    ("matrix-rank".into(), rows.rank().to_string()),
                ],
            }
        }
        State::Rank(r) => {
            let label = classify_rank(&r);
            let mut invariants = Vec::new();
            if let StrataLabel::Rank(k) = label {
                invariants.push(("rank".into(), k.to_string()));
            }
            if let RankState::Severi(j) = &r {
                invariants.push(("cubic-norm".into(), j.cubic_norm().to_string()));
            }
            Classification { label, invariants }
        }
    })
}

/// Largest entry bound used when building biseparable three-qubit samples.
const QUBIT_BOUND: i64 = 5;

/// `a ⊗ B` with the single qubit placed in slot `party`.
fn biseparable_three_qubit<R: Rng + ?Sized>(party: usize, rng: &mut R) -> Vec<Scalar> {
    let a = loop {
        let a = [Scalar::random_int(rng, QUBIT_BOUND), Scalar::random_int(rng, QUBIT_BOUND)];
        if !(a[0].is_zero() && a[1].is_zero()) {
            break a;
        }
    };
    let b = loop {
        let b: Vec<Scalar> = (0..4).map(|_| Scalar::random_int(rng, QUBIT_BOUND)).collect();
        if !(&(&b[0] * &b[3]) - &(&b[1] * &b[2])).is_zero() {
            break b;
        }
    };
    (0..8)
        .map(|idx| {
            let bit = |p: usize| (idx >> (2 - p)) & 1;
            let rest: Vec<usize> = (0..3).filter(|&p| p != party).map(bit).collect();
            &a[bit(party)] * &b[2 * rest[0] + rest[1]]
        })
        .collect()
}

/// A random state of `space` in the stratum `label`.
pub fn sample_state<R: Rng + ?Sized>(space: Space, label: StrataLabel, rng: &mut R) -> Result<StateFile, StateError> {
    let err = |e: &dyn std::fmt::Display| StateError(e.to_string());
    if let Some(rs) = rank_space(space) {
        let StrataLabel::Rank(k) = label else {
            return Err(StateError(format!("space {space} takes rank labels, got {label}")));
        };
        let state = sample_rank(rs, k, rng).map_err(|e| err(&e))?;
        return StateFile::from_state(space, &State::Rank(state));
    }
    match (space, label) {
        (Space::Fts { algebra, basis }, _) => {
            let x = sample_class(algebra, label, rng).map_err(|e| err(&e))?;
            match basis {
                FtsBasis::Native => StateFile::from_state(space, &State::Fts(x)),
                FtsBasis::Wedge => StateFile::new(space, wedge3_coeffs(&x).map_err(|e| err(&e))?),
            }
        }
        (Space::SoSeries { m: 4 }, StrataLabel::Biseparable(p)) if p != Partition::Unmarked => {
            let party = match p {
                Partition::SplitA => 0,
                Partition::SplitB => 1,
                _ => 2,
            };
            let c = biseparable_three_qubit(party, rng);
            StateFile::from_state(space, &State::SoSeries(from_three_qubit(&c).map_err(|e| err(&e))?))
        }
        (Space::SoSeries { m: 4 }, _) => {
            let x = sample_class(AlgebraTag::Deg0, label, rng).map_err(|e| err(&e))?;
            let c = three_qubit_coeffs(&x).map_err(|e| err(&e))?;
            StateFile::from_state(space, &State::SoSeries(from_three_qubit(&c).map_err(|e| err(&e))?))
        }
        (Space::SoSeries { m }, _) => {
            let s = sample_so(m, label, rng).map_err(|e| err(&e))?;
            StateFile::from_state(space, &State::SoSeries(s))
        }
        _ => unreachable!("rank spaces handled above"),
    }
}


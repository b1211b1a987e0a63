//! The nine acceptance criteria as runnable checks.
//!
//! Each check takes its sample counts, seeds and time limits from
//! [`CheckConfig`], so the CLI `selftest` and the `acceptance` test target
//! run identical code.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wghz_core::actions::{act_tensor, act_wedge, random_invertible, random_symplectic};
use wghz_core::e6::{hessian_basis, E6Map, ADJOINT_DIM, QUADRIC_COUNT};
use wghz_core::error::ClassifyError;
use wghz_core::fts::{
    classify_fts, embed_lagrangian, embed_three_qubit, embed_wedge3, lagrangian_coeffs, quartic, sample_class,
    wedge3_coeffs,
};
use wghz_core::jordan::split_to_matrix;
use wghz_core::rank_classifier::{classify_rank, quaternion_to_skew, sample_rank, two_qutrit, RankSpace, RankState};
use wghz_core::so_series::{classify_so, random_orthogonal, sample_so};
use wghz_core::varieties::TerraciniOptions;
use wghz_core::{AlgebraTag, CompElem, JordanMat, Partition, Scalar, StrataLabel};

use crate::report::{classify_state, sample_state};
use crate::state_io::{integer_state, Space};
use crate::tables::{table1, table2, TableRow};

/// Sample counts, seeds and time limits for every criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub normal_form_limit: Duration,
    pub samples_per_label: usize,
    pub group_elements: usize,
    pub dimension_seeds: Vec<u64>,
    pub dimension_limit: Duration,
    pub hyperdeterminant_states: usize,
    pub jordan_samples: usize,
    pub span_points: usize,
    pub image_seeds: Vec<u64>,
    pub e6_limit: Duration,
    pub oracle_samples: usize,
}

impl Default for CheckConfig {
    /// The full acceptance counts.
    fn default() -> Self {
        CheckConfig {
            seed: 2026,
            normal_form_limit: Duration::from_secs(1),
            samples_per_label: 200,
            group_elements: 100,
            dimension_seeds: vec![1, 2, 3, 4, 5],
            dimension_limit: Duration::from_secs(300),
            hyperdeterminant_states: 200,
            jordan_samples: 500,
            span_points: 200,
            image_seeds: vec![1, 2, 3, 4, 5],
            e6_limit: Duration::from_secs(120),
            oracle_samples: 500,
        }
    }
}

impl CheckConfig {
    /// Reduced counts for a fast smoke run; time limits unchanged.
    pub fn quick() -> Self {
        CheckConfig {
            samples_per_label: 10,
            group_elements: 5,
            dimension_seeds: vec![1],
            hyperdeterminant_states: 20,
            jordan_samples: 20,
            image_seeds: vec![1, 2],
            oracle_samples: 20,
            ..CheckConfig::default()
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(1000).wrapping_add(salt))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CheckOutcome {
    /// `[PASS] 4 table-1 dimensions: ... (1.23 s)`
    pub fn line(&self) -> String {
        format!(
            "[{}] {} {}: {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const CHECK_IDS: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "three-qubit normal forms",
        2 => "orbit counts",
        3 => "SLOCC invariance",
        4 => "table-1 dimensions",
        5 => "table-2 dimensions",
        6 => "quartic vs hyperdeterminant",
        7 => "Jordan identities",
        8 => "E6 span and image",
        9 => "rank classifier oracles",
        _ => "unknown",
    }
}

pub fn run_check(id: u8, cfg: &CheckConfig) -> CheckOutcome {
    let start = Instant::now();
    let (passed, detail) = match id {
        1 => normal_forms(cfg),
        2 => orbit_counts(cfg),
        3 => slocc_invariance(cfg),
        4 => table_check(cfg, 1),
        5 => table_check(cfg, 2),
        6 => hyperdeterminant(cfg),
        7 => jordan_identities(cfg),
        8 => e6(cfg),
        9 => rank_oracles(cfg),
        _ => (false, format!("no criterion {id}")),
    };
    let elapsed = start.elapsed();
    let limit = match id {
        1 => Some(cfg.normal_form_limit),
        4 => Some(cfg.dimension_limit),
        8 => Some(cfg.e6_limit),
        _ => None,
    };
    let (passed, detail) = match limit {
        Some(l) if elapsed >= l => (false, format!("{detail}; over time limit {:.0?}", l)),
        _ => (passed, detail),
    };
    CheckOutcome { id, title: title(id), passed, detail, elapsed }
}

pub fn run_all(cfg: &CheckConfig) -> Vec<CheckOutcome> {
    CHECK_IDS.iter().map(|&id| run_check(id, cfg)).collect()
}

/// The six normal forms with their expected labels, as `(name, amplitudes)`.
pub fn three_qubit_normal_forms() -> [(&'static str, [i64; 8], StrataLabel); 6] {
    use Partition::*;
    [
        ("separable", [1, 0, 0, 0, 0, 0, 0, 0], StrataLabel::Separable),
        ("biseparable-a", [1, 0, 0, 1, 0, 0, 0, 0], StrataLabel::Biseparable(SplitA)),
        ("biseparable-b", [1, 0, 0, 0, 0, 1, 0, 0], StrataLabel::Biseparable(SplitB)),
        ("biseparable-c", [1, 0, 0, 0, 0, 0, 1, 0], StrataLabel::Biseparable(SplitC)),
        ("w", [0, 1, 1, 0, 1, 0, 0, 0], StrataLabel::W),
        ("ghz", [1, 0, 0, 0, 0, 0, 0, 1], StrataLabel::Ghz),
    ]
}

fn normal_forms(_: &CheckConfig) -> (bool, String) {
    let mut wrong = Vec::new();
    for (name, amps, expected) in three_qubit_normal_forms() {
        let got = integer_state(Space::SoSeries { m: 4 }, &amps)
            .map_err(|e| e.to_string())
            .and_then(|f| classify_state(&f).map_err(|e| e.to_string()));
        match got {
            Ok(c) if c.label == expected => {}
            Ok(c) => wrong.push(format!("{name} gave {}", c.label)),
            Err(e) => wrong.push(format!("{name}: {e}")),
        }
    }
    (wrong.is_empty(), if wrong.is_empty() { "6/6 labels match".into() } else { wrong.join("; ") })
}

const FTS_LABELS: [StrataLabel; 4] =
    [StrataLabel::Separable, StrataLabel::Biseparable(Partition::Unmarked), StrataLabel::W, StrataLabel::Ghz];

/// Labels reached, samples agreeing and samples drawn for one tag.
fn orbit_count(tag: AlgebraTag, cfg: &CheckConfig, salt: u64) -> (bool, usize, usize, usize) {
    let mut rng = cfg.rng(salt);
    let (mut reached, mut agree, mut trials) = (0, 0, 0);
    let mut ok = true;
    for label in FTS_LABELS {
        if tag == AlgebraTag::DegMinus1 && matches!(label, StrataLabel::Biseparable(_)) {
            ok &= matches!(sample_class(tag, label, &mut rng), Err(ClassifyError::UnreachableLabel { .. }));
            continue;
        }
        let mut hits = 0;
        for _ in 0..cfg.samples_per_label {
            trials += 1;
            if let Ok(x) = sample_class(tag, label, &mut rng) {
                hits += usize::from(classify_fts(&x).same_stratum(&label));
            }
        }
        reached += usize::from(hits > 0);
        agree += hits;
    }
    let expected = if tag == AlgebraTag::DegMinus1 { 3 } else { 4 };
    (ok && reached == expected && agree == trials, reached, agree, trials)
}

fn orbit_counts(cfg: &CheckConfig) -> (bool, String) {
    // One thread and one generator per tag.
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = AlgebraTag::ALL
            .iter()
            .enumerate()
            .map(|(i, &tag)| scope.spawn(move || orbit_count(tag, cfg, 20 + i as u64)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap_or((false, 0, 0, 0))).collect()
    });
    let ok = results.iter().all(|r| r.0);
    let parts: Vec<String> = AlgebraTag::ALL
        .iter()
        .zip(&results)
        .map(|(tag, (_, reached, agree, trials))| format!("{} {reached} labels {agree}/{trials}", tag.name()))
        .collect();
    (ok, parts.join(", "))
}

/// For each group element, samples one state per label, moves it and counts
/// label changes.
fn invariance_count<S>(
    elements: usize,
    labels: &[StrataLabel],
    mut sample: impl FnMut(StrataLabel) -> S,
    mut moved_label: impl FnMut(&S) -> (StrataLabel, StrataLabel),
) -> usize {
    let mut violations = 0;
    for _ in 0..elements {
        for &label in labels {
            let s = sample(label);
            let (before, after) = moved_label(&s);
            if before != after {
                violations += 1;
            }
        }
    }
    violations
}

fn slocc_invariance(cfg: &CheckConfig) -> (bool, String) {
    let mut report = Vec::new();
    let qubit_labels = [
        StrataLabel::Separable,
        StrataLabel::Biseparable(Partition::SplitA),
        StrataLabel::Biseparable(Partition::SplitB),
        StrataLabel::Biseparable(Partition::SplitC),
        StrataLabel::W,
        StrataLabel::Ghz,
    ];

    let three_qubit = {
        let mut next = cfg.rng(31);
        let mut gen = cfg.rng(32);
        invariance_count(
            cfg.group_elements,
            &qubit_labels,
            |l| sample_state(Space::SoSeries { m: 4 }, l, &mut next).expect("three-qubit sample").coefficients,
            |c| {
                let gs: Vec<_> = (0..3).map(|_| random_invertible(2, 3, &mut gen)).collect();
                let moved = act_tensor(&[&gs[0], &gs[1], &gs[2]], c).expect("shapes");
                (classify_fts(&embed_three_qubit(c).expect("8")), classify_fts(&embed_three_qubit(&moved).expect("8")))
            },
        )
    };
    report.push(("three-qubit".to_string(), three_qubit));

    let wedge = {
        let mut next = cfg.rng(33);
        let mut count = 0;
        for _ in 0..cfg.group_elements {
            let g = random_invertible(6, 2, &mut next);
            for label in FTS_LABELS {
                let x = sample_class(AlgebraTag::CplusC, label, &mut next).expect("split sample");
                let c = wedge3_coeffs(&x).expect("split");
                let y = embed_wedge3(&act_wedge(&g, 3, &c).expect("shape")).expect("20");
                count += usize::from(!classify_fts(&x).same_stratum(&classify_fts(&y)));
            }
        }
        count
    };
    report.push(("wedge-3-6".to_string(), wedge));

    let lagrangian = {
        let mut next = cfg.rng(34);
        let mut count = 0;
        for _ in 0..cfg.group_elements {
            let g = random_symplectic(3, &mut next);
            for label in FTS_LABELS {
                let x = sample_class(AlgebraTag::CC, label, &mut next).expect("complex sample");
                let c = lagrangian_coeffs(&x).expect("complex");
                let y = act_wedge(&g, 3, &c).ok().and_then(|m| embed_lagrangian(&m).ok());
                match y {
                    Some(y) if classify_fts(&x).same_stratum(&classify_fts(&y)) => {}
                    _ => count += 1,
                }
            }
        }
        count
    };
    report.push(("lagrangian-3-6".to_string(), lagrangian));

    for m in [3usize, 5, 7, 9] {
        let mut next = cfg.rng(40 + m as u64);
        let mut gen = cfg.rng(50 + m as u64);
        let count = invariance_count(
            cfg.group_elements,
            &FTS_LABELS,
            |l| sample_so(m, l, &mut next).expect("so sample"),
            |s| {
                let moved = s.act_qubit(&random_invertible(2, 3, &mut gen)).act_qudit(&random_orthogonal(m, &mut gen));
                (classify_so(s), classify_so(&moved))
            },
        );
        report.push((format!("so-{m}"), count));
    }

    let total: usize = report.iter().map(|r| r.1).sum();
    let detail = report.iter().map(|(n, v)| format!("{n} {v}")).collect::<Vec<_>>().join(", ");
    (total == 0, format!("{} group elements per space; violations: {detail}", cfg.group_elements))
}

fn table_check(cfg: &CheckConfig, which: u8) -> (bool, String) {
    let opts = TerraciniOptions::default();
    let runs: Vec<Result<Vec<TableRow>, String>> = cfg
        .dimension_seeds
        .iter()
        .map(|&s| if which == 1 { table1(&opts, s) } else { table2(&opts, s) })
        .collect();
    let first = match runs.first() {
        Some(Ok(r)) => r.clone(),
        Some(Err(e)) => return (false, e.clone()),
        None => return (false, "no seeds".into()),
    };
    let stable = runs.iter().all(|r| r.as_ref().map(|rows| dims_of(rows) == dims_of(&first)).unwrap_or(false));
    let passing = first.iter().filter(|r| r.passed).count();
    let summary = first.iter().map(|r| format!("{} {}/{}", r.name, r.secant, r.tangential)).collect::<Vec<_>>().join(", ");
    (
        stable && passing == first.len(),
        format!(
            "{passing}/{} rows pass, {} seeds {}; σ/τ: {summary}",
            first.len(),
            cfg.dimension_seeds.len(),
            if stable { "identical" } else { "DIFFER" }
        ),
    )
}

fn dims_of(rows: &[TableRow]) -> Vec<(usize, usize)> {
    rows.iter().map(|r| (r.secant, r.tangential)).collect()
}

/// Cayley's hyperdeterminant as the discriminant of the binary quadratic
/// `det(x·A₀ + y·A₁)`, with `A_i` the 2×2 slices of the array along the
/// first index.
pub fn slice_discriminant(c: &[Scalar]) -> Scalar {
    let det = |m: [&Scalar; 4]| m[0] * m[3] - m[1] * m[2];
    let a0 = [&c[0], &c[1], &c[2], &c[3]];
    let a1 = [&c[4], &c[5], &c[6], &c[7]];
    let x2 = det(a0);
    let y2 = det(a1);
    // Mixed term: det(A₀ + A₁) - det A₀ - det A₁.
    let sum: Vec<Scalar> = (0..4).map(|i| a0[i] + a1[i]).collect();
    let xy = det([&sum[0], &sum[1], &sum[2], &sum[3]]) - &x2 - &y2;
    &xy * &xy - Scalar::from_i64(4) * &x2 * &y2
}

fn hyperdeterminant(cfg: &CheckConfig) -> (bool, String) {
    let mut rng = cfg.rng(6);
    let mut constant: Option<Scalar> = None;
    let mut ok = true;
    let mut nonzero = 0;
    for _ in 0..cfg.hyperdeterminant_states {
        let c: Vec<Scalar> = (0..8).map(|_| Scalar::random_int(&mut rng, 9)).collect();
        let q = quartic(&embed_three_qubit(&c).expect("8"));
        let det = slice_discriminant(&c);
        if det.is_zero() {
            ok &= q.is_zero();
            continue;
        }
        nonzero += 1;
        let ratio = &q * &det.inv().expect("nonzero");
        match &constant {
            None => constant = Some(ratio),
            Some(k) => ok &= *k == ratio,
        }
    }
    let k = constant.map(|k| k.to_string()).unwrap_or_else(|| "undetermined".into());
    (ok && nonzero > 0, format!("q / Det = {k} on {nonzero}/{} states", cfg.hyperdeterminant_states))
}

fn jordan_identities(cfg: &CheckConfig) -> (bool, String) {
    let mut rng = cfg.rng(7);
    let mut failures = 0;
    for tag in AlgebraTag::ALL {
        for _ in 0..cfg.jordan_samples {
            let a = JordanMat::random(tag, &mut rng);
            let b = JordanMat::random(tag, &mut rng);
            let mut good = a.sharp().sharp() == a.scale(&a.cubic_norm());
            let c1 = a.sharp().trace_pair(&b).expect("same tag");
            let c2 = a.trace_pair(&b.sharp()).expect("same tag");
            for t in -2..=2 {
                let t = Scalar::from_i64(t);
                let lhs = a.add(&b.scale(&t)).cubic_norm();
                let rhs = a.cubic_norm() + &t * &c1 + &t.pow(2) * &c2 + &t.pow(3) * &b.cubic_norm();
                good &= lhs == rhs;
            }
            failures += usize::from(!good);
        }
    }
    let mut oct = 0;
    for _ in 0..cfg.jordan_samples {
        let x = CompElem::random(AlgebraTag::OctC, &mut rng);
        let y = CompElem::random(AlgebraTag::OctC, &mut rng);
        oct += usize::from(x.mul(&y).expect("octonions").norm() == &x.norm() * &y.norm());
    }
    let n = cfg.jordan_samples;
    (
        failures == 0 && oct == n,
        format!("sharp and Taylor gates {}/{} over six tags, octonion norm {oct}/{n}", 6 * n - failures, 6 * n),
    )
}

fn e6(cfg: &CheckConfig) -> (bool, String) {
    let basis = match hessian_basis() {
        Ok(b) => b.len(),
        Err(e) => return (false, e.to_string()),
    };
    let map = match E6Map::new() {
        Ok(m) => m,
        Err(e) => return (false, e.to_string()),
    };
    let span = map.image_span(cfg.span_points, &mut cfg.rng(8));
    let dims: Vec<usize> = cfg
        .image_seeds
        .iter()
        .map(|&s| map.image_dim(1, &mut ChaCha8Rng::seed_from_u64(s)).unwrap_or(0))
        .collect();
    let stable = dims.windows(2).all(|w| w[0] == w[1]) && !dims.is_empty();
    (
        basis == QUADRIC_COUNT && span == ADJOINT_DIM && stable,
        format!(
            "quadric basis {basis}, span of {} images {span}, image_dim {:?}",
            cfg.span_points, dims
        ),
    )
}

fn rank_oracles(cfg: &CheckConfig) -> (bool, String) {
    let mut rng = cfg.rng(9);
    let bell: Vec<Scalar> = [1, 0, 0, 0, 1, 0, 0, 0, 0].iter().map(|&v| Scalar::from_i64(v)).collect();
    let bell_label = two_qutrit(&bell)
        .ok()
        .and_then(|j| RankState::severi(j).ok())
        .map(|s| classify_rank(&s));
    let n = cfg.oracle_samples;
    let mut split = 0;
    let mut quaternion = 0;
    // Cycle through ranks 0..3 so every stratum is exercised.
    let draw = |tag: AlgebraTag, k: usize, rng: &mut ChaCha8Rng| match k % 4 {
        0 => JordanMat::zero(tag),
        r => match sample_rank(RankSpace::Severi(tag), r as u8, rng) {
            Ok(RankState::Severi(j)) => j,
            _ => JordanMat::random(tag, rng),
        },
    };
    for k in 0..n {
        let j = draw(AlgebraTag::CplusC, k, &mut rng);
        split += usize::from(split_to_matrix(&j).map(|m| m.rank()) == Ok(j.jordan_rank() as usize));
        let h = draw(AlgebraTag::M2C, k, &mut rng);
        quaternion += usize::from(quaternion_to_skew(&h).map(|s| s.rank()) == Ok(2 * h.jordan_rank() as usize));
    }
    let bell_ok = bell_label == Some(StrataLabel::Rank(2));
    (
        bell_ok && split == n && quaternion == n,
        format!(
            "|00>+|11> -> {}, split vs matrix rank {split}/{n}, quaternion vs skew rank {quaternion}/{n}",
            bell_label.map(|l| l.to_string()).unwrap_or_else(|| "error".into())
        ),
    )
}


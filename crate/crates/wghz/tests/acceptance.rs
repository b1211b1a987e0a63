//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Duration;

use wghz::checks::{run_check, CheckConfig, CHECK_IDS};

/// Every count, seed and time limit, pinned.
fn pinned() -> CheckConfig {
    CheckConfig {
        seed: 2026,
        normal_form_limit: Duration::from_secs(1),
        samples_per_label: 200,
        group_elements: 100,
        dimension_seeds: vec![1, 2, 3, 4, 5],
        dimension_limit: Duration::from_secs(5 * 60),
        hyperdeterminant_states: 200,
        jordan_samples: 500,
        span_points: 200,
        image_seeds: vec![1, 2, 3, 4, 5],
        e6_limit: Duration::from_secs(2 * 60),
        oracle_samples: 500,
    }
}

/// Exact values a passing run must also report.
const PINNED_DETAILS: [(u8, &str); 9] = [
    (1, "6/6 labels match"),
    (2, "minus-one 3 labels 600/600, zero 4 labels 800/800, complex 4 labels 800/800, split 4 labels 800/800, quaternion 4 labels 800/800, octonion 4 labels 800/800"),
    (3, "violations: three-qubit 0, wedge-3-6 0, lagrangian-3-6 0, so-3 0, so-5 0, so-7 0, so-9 0"),
    (4, "11/11 rows pass, 5 seeds identical"),
    (5, "severi-complex 4/4, severi-split 7/7, severi-quaternion 13/13, severi-octonion 25/25, segre-3-4 9/9, grassmannian-2-7 17/17"),
    (6, "q / Det = 1 on 200/200 states"),
    (7, "3000/3000 over six tags, octonion norm 500/500"),
    (8, "quadric basis 35, span of 200 images 78, image_dim [21, 21, 21, 21, 21]"),
    (9, "|00>+|11> -> Rank(2), split vs matrix rank 500/500, quaternion vs skew rank 500/500"),
];

fn main() -> ExitCode {
    let cfg = pinned();
    if cfg != CheckConfig::default() {
        println!("[FAIL] selftest defaults drifted from the pinned acceptance configuration");
        return ExitCode::FAILURE;
    }
    let mut failed = 0;
    for id in CHECK_IDS {
        let mut outcome = run_check(id, &cfg);
        let pin = PINNED_DETAILS.iter().find(|p| p.0 == id).map(|p| p.1).unwrap_or("");
        if outcome.passed && !outcome.detail.contains(pin) {
            outcome.passed = false;
            outcome.detail = format!("{} (expected to contain '{pin}')", outcome.detail);
        }
        failed += usize::from(!outcome.passed);
        println!("{}", outcome.line());
    }
    println!("acceptance: {}/{} passed", CHECK_IDS.len() - failed, CHECK_IDS.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

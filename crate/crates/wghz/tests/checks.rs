use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wghz::checks::{run_check, slice_discriminant, three_qubit_normal_forms, CheckConfig};
use wghz_core::{Scalar, StrataLabel};

fn amps(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_i64(x)).collect()
}

/// The textbook expansion in the eight amplitudes.
fn expanded(c: &[Scalar]) -> Scalar {
    let a = |i: usize, j: usize, k: usize| c[4 * i + 2 * j + k].clone();
    let sq = |x: Scalar| &x * &x;
    let first = sq(a(0, 0, 0) * a(1, 1, 1)) + sq(a(0, 0, 1) * a(1, 1, 0)) + sq(a(0, 1, 0) * a(1, 0, 1))
        + sq(a(1, 0, 0) * a(0, 1, 1));
    let pairs = [
        (a(0, 0, 0) * a(1, 1, 1), a(0, 0, 1) * a(1, 1, 0)),
        (a(0, 0, 0) * a(1, 1, 1), a(0, 1, 0) * a(1, 0, 1)),
        (a(0, 0, 0) * a(1, 1, 1), a(1, 0, 0) * a(0, 1, 1)),
        (a(0, 0, 1) * a(1, 1, 0), a(0, 1, 0) * a(1, 0, 1)),
        (a(0, 0, 1) * a(1, 1, 0), a(1, 0, 0) * a(0, 1, 1)),
        (a(0, 1, 0) * a(1, 0, 1), a(1, 0, 0) * a(0, 1, 1)),
    ];
    let second: Scalar = pairs.iter().map(|(x, y)| x * y).sum();
    let third = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 0) * a(0, 0, 1);
    first - Scalar::from_i64(2) * second + Scalar::from_i64(4) * third
}

#[test]
fn hyperdeterminant_oracle() {
    assert_eq!(slice_discriminant(&amps(&[1, 0, 0, 0, 0, 0, 0, 1])), Scalar::from_i64(1));
    for (_, a, label) in three_qubit_normal_forms() {
        if label != StrataLabel::Ghz {
            assert_eq!(slice_discriminant(&amps(&a)), Scalar::from_i64(0));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let c: Vec<Scalar> = (0..8).map(|_| Scalar::random_int(&mut rng, 9)).collect();
        assert_eq!(slice_discriminant(&c), expanded(&c));
    }
}

#[test]
fn unknown_criterion_fails() {
    let out = run_check(10, &CheckConfig::quick());
    assert!(!out.passed);
    assert!(out.line().starts_with("[FAIL] 10 unknown"));
}

#[test]
fn time_limits_are_enforced() {
    let cfg = CheckConfig { normal_form_limit: Duration::ZERO, ..CheckConfig::quick() };
    let out = run_check(1, &cfg);
    assert!(!out.passed);
    assert!(out.detail.contains("over time limit"), "{}", out.detail);
    assert!(run_check(1, &CheckConfig::quick()).passed);
}

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wghz_core::error::VarietyError;
use wghz_core::varieties::{
    catalog, dichotomy, dichotomy_from_dims, directional_derivative, secant_dim, tangential_dim, tangential_point,
    variety_by_name, Dichotomy, ParamVariety, RankMode, TerraciniOptions,
};
use wghz_core::Scalar;

/// (name, σ, τ)
const EXPECTED: [(&str, usize, usize); 24] = [
    ("fts-minus-one", 3, 2),
    ("fts-zero", 7, 6),
    ("fts-complex", 13, 12),
    ("fts-split", 19, 18),
    ("fts-quaternion", 31, 30),
    ("fts-octonion", 55, 54),
    ("so-3", 5, 4),
    ("so-5", 9, 8),
    ("so-6", 11, 10),
    ("so-7", 13, 12),
    ("so-9", 17, 16),
    ("segre-2-2-2", 7, 6),
    ("segre-3-3", 7, 7),
    ("segre-3-4", 9, 9),
    ("veronese-2-3", 4, 4),
    ("veronese-3-2", 3, 2),
    ("grassmannian-2-5", 9, 9),
    ("grassmannian-2-6", 13, 13),
    ("grassmannian-2-7", 17, 17),
    ("grassmannian-3-6", 19, 18),
    ("severi-complex", 4, 4),
    ("severi-split", 7, 7),
    ("severi-quaternion", 13, 13),
    ("severi-octonion", 25, 25),
];

fn dims(x: &ParamVariety, seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let o = TerraciniOptions::default();
    (secant_dim(x, &o, &mut rng).unwrap().dim, tangential_dim(x, &o, &mut rng).unwrap().dim)
}

#[test]
fn catalog_shape() {
    let cat = catalog();
    assert!(cat.len() >= 16);
    let names: Vec<&str> = cat.iter().map(|v| v.name()).collect();
    assert_eq!(names, EXPECTED.iter().map(|e| e.0).collect::<Vec<_>>());
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for x in &cat {
        let p = x.random_params(&mut rng);
        assert_eq!(x.chart(&p).unwrap().len(), x.ambient_dim() + 1, "{}", x.name());
        let j = x.jacobian(&p).unwrap();
        assert_eq!((j.rows(), j.cols()), (x.ambient_dim() + 1, x.domain_dim()));
    }
}

#[test]
fn jacobian_matches_interpolation() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for x in catalog() {
        for _ in 0..3 {
            let p = x.random_params(&mut rng);
            let chart = |pp: &[Scalar]| x.chart(pp).unwrap();
            for (k, col) in x.partials(&p).unwrap().iter().enumerate() {
                let e: Vec<Scalar> = (0..x.domain_dim()).map(|i| Scalar::from_i64((i == k) as i64)).collect();
                assert_eq!(&directional_derivative(chart, &p, &e, x.degree()), col, "{} column {k}", x.name());
            }
            let q = x.random_params(&mut rng);
            assert_eq!(directional_derivative(chart, &p, &q, x.degree()), x.tangent(&p, &q).unwrap());
        }
    }
}

#[test]
fn expected_dimensions_and_cases() {
    for (name, sigma, tau) in EXPECTED {
        let x = variety_by_name(name).unwrap();
        let start = Instant::now();
        let got = dims(&x, 7);
        println!("{name}: σ={} τ={} in {:?}", got.0, got.1, start.elapsed());
        assert_eq!(got, (sigma, tau), "{name}");
        let case = dichotomy_from_dims(&x, sigma, tau).unwrap();
        if sigma == tau {
            assert_eq!(case, Dichotomy::Case2 { dim: sigma });
        } else {
            assert_eq!(case, Dichotomy::Case1 { tangential: tau, secant: sigma });
        }
    }
}

#[test]
fn named_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let o = TerraciniOptions::default();
    let case = |name: &str, rng: &mut ChaCha8Rng| dichotomy(&variety_by_name(name).unwrap(), &o, rng).unwrap();
    assert_eq!(case("segre-2-2-2", &mut rng), Dichotomy::Case1 { tangential: 6, secant: 7 });
    assert_eq!(case("veronese-2-3", &mut rng), Dichotomy::Case2 { dim: 4 });
    assert_eq!(case("segre-3-3", &mut rng), Dichotomy::Case2 { dim: 7 });
    assert_eq!(case("severi-octonion", &mut rng), Dichotomy::Case2 { dim: 25 });
}

#[test]
fn dims_are_seed_independent_and_bounded() {
    for x in catalog() {
        let first = dims(&x, 100);
        for seed in 101..105 {
            assert_eq!(dims(&x, seed), first, "{}", x.name());
        }
        let (s, t) = first;
        let (n, amb) = (x.domain_dim(), x.ambient_dim());
        assert!(t <= s, "{}", x.name());
        assert!(s <= (2 * n + 1).min(amb), "{}", x.name());
    }
}

#[test]
fn variety_lies_in_tangential_construction() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (one, zero) = (Scalar::from_i64(1), Scalar::from_i64(0));
    for x in catalog() {
        let p = x.random_params(&mut rng);
        let q = x.random_params(&mut rng);
        assert_eq!(tangential_point(&x, &p, &q, &one, &zero).unwrap(), x.chart(&p).unwrap());
    }
}

#[test]
fn quadric_products_fill_for_larger_m() {
    for m in [4usize, 8, 12] {
        let x = ParamVariety::quadric_product(m);
        assert_eq!(dims(&x, 5), (2 * m - 1, 2 * m - 2), "m = {m}");
    }
}

#[test]
fn float_mode_agrees_on_small_entries() {
    let o = TerraciniOptions { mode: RankMode::Float { tol: 1e-9 }, ..TerraciniOptions::default() };
    for name in ["segre-2-2-2", "segre-3-3", "veronese-2-3", "fts-complex", "so-5"] {
        let x = variety_by_name(name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let s = secant_dim(&x, &o, &mut rng).unwrap().dim;
        let t = tangential_dim(&x, &o, &mut rng).unwrap().dim;
        assert_eq!((s, t), dims(&x, 6), "{name}");
    }
}

#[test]
fn errors() {
    let x = variety_by_name("segre-2-2-2").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let none = TerraciniOptions { trials: 0, ..TerraciniOptions::default() };
    assert_eq!(secant_dim(&x, &none, &mut rng), Err(VarietyError::NoTrials));
    assert_eq!(tangential_dim(&x, &none, &mut rng), Err(VarietyError::NoTrials));
    // A huge tolerance makes every tangent space look degenerate.
    let blind = TerraciniOptions { max_resamples: 4, mode: RankMode::Float { tol: 1e300 }, ..TerraciniOptions::default() };
    match secant_dim(&x, &blind, &mut rng) {
        Err(VarietyError::Degenerate { attempts, .. }) => assert_eq!(attempts, 4),
        other => panic!("{other:?}"),
    }
    assert!(matches!(x.chart(&[Scalar::from_i64(1)]), Err(VarietyError::ParamLength { expected: 3, found: 1 })));
    assert!(matches!(dichotomy_from_dims(&x, 2, 1), Err(VarietyError::Inconsistent { secant: 2, tangential: 1, .. })));
}

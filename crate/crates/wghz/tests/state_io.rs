use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wghz::report::{classify_state, sample_state};
use wghz::state_io::{emit, integer_state, parse, parse_rational, FtsBasis, SeveriBasis, Space, State, StateFile};
use wghz_core::{AlgebraTag, Partition, Scalar, StrataLabel};

fn states_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../states")
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

const GHZ: &str = r#"{
  "space": {"family": "so-series", "m": 4},
  "coefficients": [
    {"re": 1, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 0},
    {"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 1, "im": 0}
  ]
}"#;

#[test]
fn ghz_file_parses_to_three_qubits() {
    let f = parse(GHZ.as_bytes()).unwrap();
    assert_eq!(f.space, Space::SoSeries { m: 4 });
    assert_eq!(f.space.name(), "three-qubit");
    assert_eq!(f.coefficients[7], Scalar::from_i64(1));
    assert_eq!(classify_state(&f).unwrap().label, StrataLabel::Ghz);
}

#[test]
fn wrong_count_is_a_positioned_error() {
    let seven = GHZ.replace(r#"{"re": 0, "im": 0}, {"re": 1, "im": 0}"#, r#"{"re": 1, "im": 0}"#);
    let e = parse(seven.as_bytes()).unwrap_err();
    assert!(e.message.contains("needs 8 coefficients, found 7"), "{e}");
    assert_eq!((e.line, e.column), (3, 3));
}

#[test]
fn decimals_and_fractions_are_exact() {
    assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
    assert_eq!(parse_rational("-1.5").unwrap(), ratio(-3, 2));
    assert_eq!(parse_rational("6/-4").unwrap(), ratio(-3, 2));
    assert_eq!(parse_rational("+7").unwrap(), ratio(7, 1));
    assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
    assert_eq!(parse_rational("2.5e-2").unwrap(), ratio(1, 40));
    assert_eq!(parse_rational("3E2").unwrap(), ratio(300, 1));
    assert_eq!(parse_rational("0.1").unwrap(), ratio(1, 10));
    for bad in ["", "1/0", "abc", "1.2.3", "1/2/3", "--1", ".", "1e", "0x10", "1/ "] {
        assert!(parse_rational(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn json_numbers_strings_and_missing_imaginary_parts() {
    let text = r#"{"space": {"family": "skew", "n": 5}, "coefficients": [
        {"re": 0.25}, {"re": "1/3", "im": "-2"}, {"re": 1e2, "im": 0.5},
        {"re": 0}, {"re": 0}, {"re": 0}, {"re": 0}, {"re": 0}, {"re": 0}, {"re": 123456789012345678901234567890}
    ]}"#;
    let f = parse(text.as_bytes()).unwrap();
    assert_eq!(f.coefficients[0], Scalar::real(ratio(1, 4)));
    assert_eq!(f.coefficients[1], Scalar::new(ratio(1, 3), ratio(-2, 1)));
    assert_eq!(f.coefficients[2], Scalar::new(ratio(100, 1), ratio(1, 2)));
    assert_eq!(*f.coefficients[9].re(), "123456789012345678901234567890".parse::<BigRational>().unwrap());
}

#[test]
fn structured_errors() {
    let cases = [
        (r#"{"space": {"family": "qutrits"}, "coefficients": []}"#, "unknown family"),
        (r#"{"space": {"family": "fts", "algebra": "sedenion"}, "coefficients": []}"#, "unknown algebra"),
        (r#"{"space": {"family": "fts"}, "coefficients": []}"#, "needs 'algebra'"),
        (r#"{"space": {"family": "so-series", "m": 2}, "coefficients": []}"#, "m >= 3"),
        (r#"{"space": {"family": "skew", "n": 6}, "coefficients": []}"#, "n = 5 or 7"),
        (r#"{"space": {"family": "severi", "algebra": "zero"}, "coefficients": []}"#, "nondegenerate"),
        (r#"{"space": {"family": "fts", "algebra": "complex", "basis": "wedge"}, "coefficients": []}"#, "split"),
        (r#"{"space": {"family": "severi", "algebra": "split", "basis": "wedge"}, "coefficients": []}"#, "quaternion"),
        (r#"{"space": {"family": "matrix3x4", "m": 3}, "coefficients": []}"#, "does not take 'm'"),
        (r#"{"space": {"family": "skew", "n": 5}, "coefficients": [{"re": "1/0"}]}"#, "zero denominator"),
        (r#"{"space": {"family": "skew", "n": 5}, "coefficients": [{"re": "one"}]}"#, "malformed rational"),
        (r#"{"space": {"family": "skew", "n": 5}, "coefficients": [{"re": true}]}"#, "number or string"),
        (r#"{"space": {"family": "skew", "n": 5}}"#, "coefficients"),
        (r#"{"space": {"family": "skew", "n": 5}, "coefficients": [], "extra": 1}"#, "unknown field"),
        (r#"{"space": "#, "EOF"),
    ];
    for (text, needle) in cases {
        let e = parse(text.as_bytes()).unwrap_err();
        assert!(e.message.contains(needle), "{text}: {e}");
        assert!(e.line >= 1, "{text}");
    }
    // Position of a bad value on the third line.
    let text = "{\"space\": {\"family\": \"skew\", \"n\": 5},\n \"coefficients\": [\n  {\"re\": \"x\"}]}";
    let e = parse(text.as_bytes()).unwrap_err();
    assert_eq!(e.line, 3);
    assert!(e.to_string().starts_with("line 3, column"));
}

#[test]
fn shipped_states_are_canonical_and_classify() {
    let expected: [(&str, StrataLabel); 24] = [
        ("separable3", StrataLabel::Separable),
        ("biseparable-a3", StrataLabel::Biseparable(Partition::SplitA)),
        ("biseparable-b3", StrataLabel::Biseparable(Partition::SplitB)),
        ("biseparable-c3", StrataLabel::Biseparable(Partition::SplitC)),
        ("w3", StrataLabel::W),
        ("ghz3", StrataLabel::Ghz),
        ("table1-fts-minus-one", StrataLabel::Ghz),
        ("table1-fts-zero", StrataLabel::Ghz),
        ("table1-fts-complex", StrataLabel::Ghz),
        ("table1-fts-split", StrataLabel::Ghz),
        ("table1-fts-quaternion", StrataLabel::Ghz),
        ("table1-fts-octonion", StrataLabel::Ghz),
        ("table1-so-3", StrataLabel::Ghz),
        ("table1-so-5", StrataLabel::Ghz),
        ("table1-so-6", StrataLabel::Ghz),
        ("table1-so-7", StrataLabel::Ghz),
        ("table1-so-9", StrataLabel::Ghz),
        ("table2-severi-complex", StrataLabel::Rank(3)),
        ("table2-severi-split", StrataLabel::Rank(3)),
        ("table2-severi-quaternion", StrataLabel::Rank(3)),
        ("table2-severi-octonion", StrataLabel::Rank(3)),
        ("table2-matrix3x4", StrataLabel::Rank(3)),
        ("table2-skew-7", StrataLabel::Rank(6)),
        ("two-qutrit-bell", StrataLabel::Rank(2)),
    ];
    let on_disk = std::fs::read_dir(states_dir()).unwrap().count();
    assert_eq!(on_disk, expected.len());
    for (name, label) in expected {
        let bytes = std::fs::read(states_dir().join(format!("{name}.state"))).unwrap();
        let f = parse(&bytes).unwrap();
        assert_eq!(emit(&f).as_bytes(), &bytes[..], "{name} is not canonical");
        assert_eq!(classify_state(&f).unwrap().label, label, "{name}");
    }
}

const SPACE_NAMES: [&str; 20] = [
    "fts-minus-one",
    "fts-zero",
    "fts-complex",
    "fts-split",
    "fts-quaternion",
    "fts-octonion",
    "wedge-3-6",
    "three-qubit",
    "so-3",
    "so-5",
    "so-6",
    "so-7",
    "so-9",
    "severi-complex",
    "severi-split",
    "severi-quaternion",
    "severi-octonion",
    "two-qutrit",
    "wedge-2-6",
    "matrix3x4",
];

fn labels_for(space: Space) -> Vec<StrataLabel> {
    use StrataLabel::*;
    match space {
        Space::Fts { algebra: AlgebraTag::DegMinus1, .. } => vec![Separable, W, Ghz],
        Space::SoSeries { m: 4 } => vec![
            Separable,
            Biseparable(Partition::SplitA),
            Biseparable(Partition::SplitB),
            Biseparable(Partition::SplitC),
            W,
            Ghz,
        ],
        Space::Fts { .. } | Space::SoSeries { .. } => vec![Separable, Biseparable(Partition::Unmarked), W, Ghz],
        Space::Skew { n } => (1..=n / 2).map(|k| Rank(2 * k as u8)).collect(),
        _ => vec![Rank(1), Rank(2), Rank(3)],
    }
}

fn all_spaces() -> Vec<Space> {
    let mut v: Vec<Space> = SPACE_NAMES.iter().map(|n| n.parse().unwrap()).collect();
    v.push("skew-5".parse().unwrap());
    v.push("skew-7".parse().unwrap());
    v
}

#[test]
fn space_names_round_trip() {
    for s in all_spaces() {
        assert_eq!(s.name().parse::<Space>().unwrap(), s);
        let json = format!(r#"{{"space": {}, "coefficients": []}}"#, s.to_json());
        let e = parse(json.as_bytes()).unwrap_err();
        assert!(e.message.contains(&format!("needs {} coefficients", s.coefficient_count())), "{e}");
    }
    assert_eq!("so-11".parse::<Space>().unwrap(), Space::SoSeries { m: 11 });
    for bad in ["so-2", "skew-6", "severi-zero", "fts-sedenion", "nothing", "so-x"] {
        assert!(bad.parse::<Space>().is_err(), "{bad}");
    }
    assert_eq!(
        "wedge-3-6".parse::<Space>().unwrap(),
        Space::Fts { algebra: AlgebraTag::CplusC, basis: FtsBasis::Wedge }
    );
    assert_eq!(
        "two-qutrit".parse::<Space>().unwrap(),
        Space::Severi { algebra: AlgebraTag::CplusC, basis: SeveriBasis::Matrix }
    );
}

#[test]
fn sampled_states_round_trip_and_keep_their_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let k = Scalar::from_ratio(3, 7);
    for space in all_spaces() {
        for label in labels_for(space) {
            let f = sample_state(space, label, &mut rng).unwrap();
            let text = emit(&f);
            let back = parse(text.as_bytes()).unwrap();
            assert_eq!(back, f);
            assert_eq!(emit(&back), text);
            let got = classify_state(&back).unwrap().label;
            assert!(got.same_stratum(&label), "{space} {label}: {got}");
            // Projective insensitivity.
            assert_eq!(classify_state(&back.scaled(&k)).unwrap().label, got, "{space} {label} scaled");
        }
    }
}

#[test]
fn alternative_bases_agree_with_native_coordinates() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let pairs = [("wedge-3-6", "fts-split"), ("two-qutrit", "severi-split"), ("wedge-2-6", "severi-quaternion")];
    for (alt, native) in pairs {
        let (alt, native): (Space, Space) = (alt.parse().unwrap(), native.parse().unwrap());
        for label in labels_for(native) {
            let f = sample_state(alt, label, &mut rng).unwrap();
            let state = f.state().unwrap();
            let g = StateFile::from_state(native, &state).unwrap();
            assert_eq!(classify_state(&g).unwrap(), classify_state(&f).unwrap());
            assert_eq!(StateFile::from_state(alt, &g.state().unwrap()).unwrap(), f);
        }
    }
}

#[test]
fn from_state_rejects_mismatched_spaces() {
    let f = integer_state("skew-5".parse().unwrap(), &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap();
    let State::Rank(_) = f.state().unwrap() else { panic!() };
    assert!(StateFile::from_state("skew-7".parse().unwrap(), &f.state().unwrap()).is_err());
    assert!(StateFile::from_state("fts-zero".parse().unwrap(), &f.state().unwrap()).is_err());
    assert!(integer_state("skew-5".parse().unwrap(), &[1]).is_err());
}

#[test]
fn skew_upper_triangle_is_lex_ordered() {
    // e1∧e2 + e3∧e4: pairs (0,1) and (2,3) are entries 0 and 7 of Λ²C⁵.
    let mut c = [0i64; 10];
    c[0] = 1;
    c[7] = 1;
    let f = integer_state("skew-5".parse().unwrap(), &c).unwrap();
    assert_eq!(classify_state(&f).unwrap().label, StrataLabel::Rank(4));
    let State::Rank(wghz_core::rank_classifier::RankState::Skew(m)) = f.state().unwrap() else { panic!() };
    assert_eq!(m[(2, 3)], Scalar::from_i64(1));
    assert_eq!(m[(3, 2)], Scalar::from_i64(-1));
}

fn part() -> impl Strategy<Value = BigRational> {
    (-1000i64..1000, 1i64..60).prop_map(|(n, d)| ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn emit_parse_is_identity(parts in prop::collection::vec((part(), part()), 10)) {
        let c: Vec<Scalar> = parts.into_iter().map(|(a, b)| Scalar::new(a, b)).collect();
        let f = StateFile::new("skew-5".parse().unwrap(), c).unwrap();
        let text = emit(&f);
        let back = parse(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(emit(&back), text);
    }

    #[test]
    fn decimal_strings_canonicalize(ints in prop::collection::vec(-99999i64..99999, 10), shift in 0u32..6) {
        let scale = 10i64.pow(shift);
        let coeff = |v: i64| {
            let sign = if v < 0 { "-" } else { "" };
            let a = v.unsigned_abs() as i64;
            format!("{{\"re\": \"{sign}{}.{:0w$}\"}}", a / scale, a % scale, w = shift as usize)
        };
        let text = format!(
            r#"{{"space": {{"family": "skew", "n": 5}}, "coefficients": [{}]}}"#,
            ints.iter().map(|&v| coeff(v)).collect::<Vec<_>>().join(", ")
        );
        let once = parse(text.as_bytes()).unwrap();
        for (c, &v) in once.coefficients.iter().zip(&ints) {
            prop_assert_eq!(c.re(), &ratio(v, scale));
        }
        let twice = parse(emit(&once).as_bytes()).unwrap();
        prop_assert_eq!(twice, once);
    }
}

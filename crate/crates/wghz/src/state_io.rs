//! JSON state files.
//!
//! ```json
//! {
//!   "space": {"family": "so-series", "m": 4},
//!   "coefficients": [
//!     {"re": 1, "im": 0},
//!     {"re": "1/2", "im": "-0.25"}
//!   ]
//! }
//! ```
//!
//! A coefficient part is a JSON integer, a decimal number, or a string
//! holding an integer, `p/q`, or a decimal. Decimals are read exactly
//! (`0.25` is `1/4`). Coefficients are affine coordinates of a projective
//! point, so their count is the ambient projective dimension plus one.
//!
//! Families and coordinate orders:
//!
//! | family | parameters | coefficients |
//! |---|---|---|
//! | `fts` | `algebra`, optional `"basis": "wedge"` for `split` | `α`, A (diagonal then off-diagonal coordinates), B likewise, `β`; with `wedge`, the 20 lex-ordered Plücker coordinates of `Λ³C⁶` |
//! | `so-series` | `m ≥ 3` | `c[i·m + k]`, qubit index `i`, qudit index `k`; for `m = 4` the eight three-qubit amplitudes `c_abc` in binary order instead |
//! | `severi` | `algebra` (not `zero`/`minus-one`), optional `"basis"`: `matrix` for `split`, `wedge` for `quaternion` | Jordan coordinates; `matrix`: a 3×3 matrix row-major; `wedge`: lex-ordered `Λ²C⁶` |
//! | `matrix3x4` | none | row-major |
//! | `skew` | `n ∈ {5, 7}` | lex-ordered `Λ²Cⁿ` (entries `i < j`) |

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::de::{self, Deserializer};
use serde::Deserialize;
use thiserror::Error;

use wghz_core::combinat::k_subsets;
use wghz_core::fts::{embed_wedge3, fts_dim, wedge3_coeffs, FtsVector};
use wghz_core::jordan::{jordan_dim, matrix_to_split, split_to_matrix};
use wghz_core::rank_classifier::{quaternion_to_skew, skew_to_quaternion, RankState};
use wghz_core::so_series::{from_three_qubit, to_three_qubit, QubitQuditState};
use wghz_core::{AlgebraTag, JordanMat, Mat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FtsBasis {
    Native,
    /// `Λ³C⁶`, only over `split`.
    Wedge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeveriBasis {
    Native,
    /// Full 3×3 matrices, only over `split`.
    Matrix,
    /// `Λ²C⁶`, only over `quaternion`.
    Wedge,
}

/// A Hilbert space from the two classification tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Fts { algebra: AlgebraTag, basis: FtsBasis },
    SoSeries { m: usize },
    Severi { algebra: AlgebraTag, basis: SeveriBasis },
    Matrix3x4,
    Skew { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct SpaceError(pub String);

impl Space {
    pub fn fts(algebra: AlgebraTag) -> Space {
        Space::Fts { algebra, basis: FtsBasis::Native }
    }

    pub fn validate(self) -> Result<Space, SpaceError> {
        let bad = |msg: String| Err(SpaceError(msg));
        match self {
            Space::Fts { algebra, basis: FtsBasis::Wedge } if algebra != AlgebraTag::CplusC => {
                bad(format!("wedge basis needs algebra split, got {}", algebra.name()))
            }
            Space::SoSeries { m } if m < 3 => bad(format!("so-series needs m >= 3, got {m}")),
            Space::Severi { algebra, .. } if algebra.is_degenerate() => {
                bad(format!("severi family needs a nondegenerate algebra, got {}", algebra.name()))
            }
            Space::Severi { algebra, basis: SeveriBasis::Matrix } if algebra != AlgebraTag::CplusC => {
                bad(format!("matrix basis needs algebra split, got {}", algebra.name()))
            }
            Space::Severi { algebra, basis: SeveriBasis::Wedge } if algebra != AlgebraTag::M2C => {
                bad(format!("wedge basis needs algebra quaternion, got {}", algebra.name()))
            }
            Space::Skew { n } if n != 5 && n != 7 => bad(format!("skew family needs n = 5 or 7, got {n}")),
            s => Ok(s),
        }
    }

    /// Number of coefficients in a state file.
    pub fn coefficient_count(self) -> usize {
        match self {
            Space::Fts { basis: FtsBasis::Wedge, .. } => 20,
            Space::Fts { algebra, .. } => fts_dim(algebra),
            Space::SoSeries { m } => 2 * m,
            Space::Severi { basis: SeveriBasis::Matrix, .. } => 9,
            Space::Severi { basis: SeveriBasis::Wedge, .. } => 15,
            Space::Severi { algebra, .. } => jordan_dim(algebra),
            Space::Matrix3x4 => 12,
            Space::Skew { n } => n * (n - 1) / 2,
        }
    }

    /// Command-line name, e.g. `fts-octonion`, `three-qubit`, `skew-7`.
    pub fn name(self) -> String {
        match self {
            Space::Fts { basis: FtsBasis::Wedge, .. } => "wedge-3-6".into(),
            Space::Fts { algebra, .. } => format!("fts-{}", algebra.name()),
            Space::SoSeries { m: 4 } => "three-qubit".into(),
            Space::SoSeries { m } => format!("so-{m}"),
            Space::Severi { basis: SeveriBasis::Matrix, .. } => "two-qutrit".into(),
            Space::Severi { basis: SeveriBasis::Wedge, .. } => "wedge-2-6".into(),
            Space::Severi { algebra, .. } => format!("severi-{}", algebra.name()),
            Space::Matrix3x4 => "matrix3x4".into(),
            Space::Skew { n } => format!("skew-{n}"),
        }
    }

    fn family(self) -> &'static str {
        match self {
            Space::Fts { .. } => "fts",
            Space::SoSeries { .. } => "so-series",
            Space::Severi { .. } => "severi",
            Space::Matrix3x4 => "matrix3x4",
            Space::Skew { .. } => "skew",
        }
    }

    /// Canonical JSON object for the `space` field.
    pub fn to_json(self) -> String {
        let fam = self.family();
        match self {
            Space::Fts { algebra, basis } => {
                let b = if basis == FtsBasis::Wedge { r#", "basis": "wedge""# } else { "" };
                format!(r#"{{"family": "{fam}", "algebra": "{}"{b}}}"#, algebra.name())
            }
            Space::Severi { algebra, basis } => {
                let b = match basis {
                    SeveriBasis::Native => "",
                    SeveriBasis::Matrix => r#", "basis": "matrix""#,
                    SeveriBasis::Wedge => r#", "basis": "wedge""#,
                };
                format!(r#"{{"family": "{fam}", "algebra": "{}"{b}}}"#, algebra.name())
            }
            Space::SoSeries { m } => format!(r#"{{"family": "{fam}", "m": {m}}}"#),
            Space::Skew { n } => format!(r#"{{"family": "{fam}", "n": {n}}}"#),
            Space::Matrix3x4 => format!(r#"{{"family": "{fam}"}}"#),
        }
    }
}

impl FromStr for Space {
    type Err = SpaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tag = |name: &str| {
            AlgebraTag::from_name(name).ok_or_else(|| SpaceError(format!("unknown algebra '{name}'")))
        };
        let count = |rest: &str| rest.parse::<usize>().map_err(|_| SpaceError(format!("bad dimension in '{s}'")));
        let space = match s {
            "wedge-3-6" => Space::Fts { algebra: AlgebraTag::CplusC, basis: FtsBasis::Wedge },
            "three-qubit" => Space::SoSeries { m: 4 },
            "two-qutrit" => Space::Severi { algebra: AlgebraTag::CplusC, basis: SeveriBasis::Matrix },
            "wedge-2-6" => Space::Severi { algebra: AlgebraTag::M2C, basis: SeveriBasis::Wedge },
            "matrix3x4" => Space::Matrix3x4,
            _ => {
                if let Some(a) = s.strip_prefix("fts-") {
                    Space::fts(tag(a)?)
                } else if let Some(a) = s.strip_prefix("severi-") {
                    Space::Severi { algebra: tag(a)?, basis: SeveriBasis::Native }
                } else if let Some(m) = s.strip_prefix("so-") {
                    Space::SoSeries { m: count(m)? }
                } else if let Some(n) = s.strip_prefix("skew-") {
                    Space::Skew { n: count(n)? }
                } else {
                    return Err(SpaceError(format!("unknown space '{s}'")));
                }
            }
        };
        space.validate()
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    family: String,
    algebra: Option<String>,
    basis: Option<String>,
    m: Option<usize>,
    n: Option<usize>,
}

impl TryFrom<RawSpace> for Space {
    type Error = SpaceError;

    fn try_from(r: RawSpace) -> Result<Self, Self::Error> {
        let need_tag = || -> Result<AlgebraTag, SpaceError> {
            let name = r.algebra.as_deref().ok_or_else(|| SpaceError(format!("family {} needs 'algebra'", r.family)))?;
            AlgebraTag::from_name(name).ok_or_else(|| SpaceError(format!("unknown algebra '{name}'")))
        };
        let unexpected = |field: &str, present: bool| {
            if present {
                Err(SpaceError(format!("family {} does not take '{field}'", r.family)))
            } else {
                Ok(())
            }
        };
        let space = match r.family.as_str() {
            "fts" => {
                unexpected("m", r.m.is_some())?;
                unexpected("n", r.n.is_some())?;
                let basis = match r.basis.as_deref() {
                    None | Some("native") => FtsBasis::Native,
                    Some("wedge") => FtsBasis::Wedge,
                    Some(b) => return Err(SpaceError(format!("unknown fts basis '{b}'"))),
                };
                Space::Fts { algebra: need_tag()?, basis }
            }
            "severi" => {
                unexpected("m", r.m.is_some())?;
                unexpected("n", r.n.is_some())?;
                let basis = match r.basis.as_deref() {
                    None | Some("native") => SeveriBasis::Native,
                    Some("matrix") => SeveriBasis::Matrix,
                    Some("wedge") => SeveriBasis::Wedge,
                    Some(b) => return Err(SpaceError(format!("unknown severi basis '{b}'"))),
                };
                Space::Severi { algebra: need_tag()?, basis }
            }
            "so-series" => {
                for (f, p) in [("algebra", r.algebra.is_some()), ("basis", r.basis.is_some()), ("n", r.n.is_some())] {
                    unexpected(f, p)?;
                }
                Space::SoSeries { m: r.m.ok_or_else(|| SpaceError("family so-series needs 'm'".into()))? }
            }
            "skew" => {
                for (f, p) in [("algebra", r.algebra.is_some()), ("basis", r.basis.is_some()), ("m", r.m.is_some())] {
                    unexpected(f, p)?;
                }
                Space::Skew { n: r.n.ok_or_else(|| SpaceError("family skew needs 'n'".into()))? }
            }
            "matrix3x4" => {
                for (f, p) in [
                    ("algebra", r.algebra.is_some()),
                    ("basis", r.basis.is_some()),
                    ("m", r.m.is_some()),
                    ("n", r.n.is_some()),
                ] {
                    unexpected(f, p)?;
                }
                Space::Matrix3x4
            }
            other => return Err(SpaceError(format!("unknown family '{other}'"))),
        };
        space.validate()
    }
}

impl<'de> Deserialize<'de> for Space {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Space::try_from(RawSpace::deserialize(d)?).map_err(de::Error::custom)
    }
}

/// Reads `-12`, `3/4` or `-0.125` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let t = s.trim();
    let bad = || format!("malformed rational '{s}'");
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = parse_int(num).ok_or_else(bad)?;
        let d: BigInt = parse_int(den).ok_or_else(bad)?;
        if d.is_zero() {
            return Err(format!("zero denominator in '{s}'"));
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    // Shift the decimal point: digits / 10^(frac_len - exp).
    let mut value = BigRational::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?);
    let shift = frac_part.len() as i32 - exp;
    let ten = BigRational::from_integer(BigInt::from(10));
    if shift > 0 {
        value /= Pow::pow(&ten, shift as u32);
    } else if shift < 0 {
        value *= Pow::pow(&ten, (-shift) as u32);
    }
    Ok(if neg { -value } else { value })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let t = s.trim();
    let body = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    t.parse().ok()
}

struct Part(BigRational);

impl<'de> Deserialize<'de> for Part {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = match serde_json::Value::deserialize(d)? {
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::String(s) => s,
            other => return Err(de::Error::custom(format!("expected a number or string, found {other}"))),
        };
        parse_rational(&text).map(Part).map_err(de::Error::custom)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoefficient {
    re: Part,
    #[serde(default = "zero_part")]
    im: Part,
}

fn zero_part() -> Part {
    Part(BigRational::zero())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    space: Space,
    coefficients: Vec<RawCoefficient>,
}

/// A parsed state file: the space and its affine coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateFile {
    pub space: Space,
    pub coefficients: Vec<Scalar>,
}

/// A parse failure with its 1-based position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends " at line L column C"; keep only the message.
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(i) => full[..i].to_string(),
            None => full,
        };
        ParseError { line: e.line(), column: e.column(), message }
    }
}

/// 1-based line and column of byte `offset`.
fn position(bytes: &[u8], offset: usize) -> (usize, usize) {
    let before = &bytes[..offset.min(bytes.len())];
    let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
    let column = offset - before.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

pub fn parse(bytes: &[u8]) -> Result<StateFile, ParseError> {
    let raw: RawFile = serde_json::from_slice(bytes)?;
    let expected = raw.space.coefficient_count();
    if raw.coefficients.len() != expected {
        let key = b"\"coefficients\"";
        let offset = bytes.windows(key.len()).position(|w| w == key).unwrap_or(0);
        let (line, column) = position(bytes, offset);
        return Err(ParseError {
            line,
            column,
            message: format!("space {} needs {expected} coefficients, found {}", raw.space, raw.coefficients.len()),
        });
    }
    let coefficients = raw.coefficients.into_iter().map(|c| Scalar::new(c.re.0, c.im.0)).collect();
    Ok(StateFile { space: raw.space, coefficients })
}

fn part_json(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\"{}/{}\"", r.numer(), r.denom())
    }
}

/// Canonical text: integers as numbers, other rationals as reduced `"p/q"`.
pub fn emit(file: &StateFile) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"space\": {},", file.space.to_json());
    out.push_str("  \"coefficients\": [\n");
    for (i, c) in file.coefficients.iter().enumerate() {
        let sep = if i + 1 == file.coefficients.len() { "" } else { "," };
        let _ = writeln!(out, "    {{\"re\": {}, \"im\": {}}}{sep}", part_json(c.re()), part_json(c.im()));
    }
    out.push_str("  ]\n}\n");
    out
}

/// A state in the model its space is classified in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum State {
    Fts(FtsVector),
    SoSeries(QubitQuditState),
    Rank(RankState),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct StateError(pub String);

fn upper_triangle(m: &Mat) -> Vec<Scalar> {
    k_subsets(m.rows(), 2).iter().map(|p| m[(p[0], p[1])].clone()).collect()
}

fn skew_from_upper(n: usize, c: &[Scalar]) -> Mat {
    let mut m = Mat::zeros(n, n);
    for (p, v) in k_subsets(n, 2).iter().zip(c) {
        m[(p[0], p[1])] = v.clone();
        m[(p[1], p[0])] = -v;
    }
    m
}

impl StateFile {
    pub fn new(space: Space, coefficients: Vec<Scalar>) -> Result<Self, StateError> {
        let space = space.validate().map_err(|e| StateError(e.0))?;
        if coefficients.len() != space.coefficient_count() {
            return Err(StateError(format!(
                "space {space} needs {} coefficients, found {}",
                space.coefficient_count(),
                coefficients.len()
            )));
        }
        Ok(StateFile { space, coefficients })
    }

    pub fn state(&self) -> Result<State, StateError> {
        let err = |e: &dyn fmt::Display| StateError(e.to_string());
        let c = &self.coefficients;
        Ok(match self.space {
            Space::Fts { basis: FtsBasis::Wedge, .. } => State::Fts(embed_wedge3(c).map_err(|e| err(&e))?),
            Space::Fts { algebra, .. } => State::Fts(FtsVector::from_coords(algebra, c).map_err(|e| err(&e))?),
            Space::SoSeries { m: 4 } => State::SoSeries(from_three_qubit(c).map_err(|e| err(&e))?),
            Space::SoSeries { m } => State::SoSeries(QubitQuditState::from_coeffs(m, c).map_err(|e| err(&e))?),
            Space::Severi { algebra, basis } => {
                let j = match basis {
                    SeveriBasis::Native => JordanMat::from_coords(algebra, c).map_err(|e| err(&e))?,
                    SeveriBasis::Matrix => {
                        matrix_to_split(&Mat::from_fn(3, 3, |i, k| c[3 * i + k].clone())).map_err(|e| err(&e))?
                    }
                    SeveriBasis::Wedge => skew_to_quaternion(&skew_from_upper(6, c)).map_err(|e| err(&e))?,
                };
                State::Rank(RankState::severi(j).map_err(|e| err(&e))?)
            }
            Space::Matrix3x4 => State::Rank(
                RankState::matrix3x4(Mat::from_fn(3, 4, |i, k| c[4 * i + k].clone())).map_err(|e| err(&e))?,
            ),
            Space::Skew { n } => State::Rank(RankState::skew(skew_from_upper(n, c)).map_err(|e| err(&e))?),
        })
    }

    /// Coefficients of `state` in the coordinates of `space`.
    pub fn from_state(space: Space, state: &State) -> Result<Self, StateError> {
        let err = |e: &dyn fmt::Display| StateError(e.to_string());
        let mismatch = || StateError(format!("state does not live in {space}"));
        let coefficients = match (space, state) {
            (Space::Fts { basis: FtsBasis::Wedge, .. }, State::Fts(x)) => wedge3_coeffs(x).map_err(|e| err(&e))?,
            (Space::Fts { algebra, .. }, State::Fts(x)) if x.tag() == algebra => x.coords(),
            (Space::SoSeries { m: 4 }, State::SoSeries(s)) if s.m() == 4 => to_three_qubit(s).map_err(|e| err(&e))?,
            (Space::SoSeries { m }, State::SoSeries(s)) if s.m() == m => s.coeffs(),
            (Space::Severi { algebra, basis }, State::Rank(RankState::Severi(j))) if j.tag() == algebra => match basis {
                SeveriBasis::Native => j.coords(),
                SeveriBasis::Matrix => split_to_matrix(j).map_err(|e| err(&e))?.entries().to_vec(),
                SeveriBasis::Wedge => upper_triangle(&quaternion_to_skew(j).map_err(|e| err(&e))?),
            },
            (Space::Matrix3x4, State::Rank(RankState::Matrix3x4(m))) => m.entries().to_vec(),
            (Space::Skew { n }, State::Rank(RankState::Skew(m))) if m.rows() == n => upper_triangle(m),
            _ => return Err(mismatch()),
        };
        StateFile::new(space, coefficients)
    }

    /// Multiplies every coefficient by `k`.
    pub fn scaled(&self, k: &Scalar) -> StateFile {
        StateFile { space: self.space, coefficients: self.coefficients.iter().map(|c| c * k).collect() }
    }
}

/// Convenience: integer coefficients.
pub fn integer_state(space: Space, values: &[i64]) -> Result<StateFile, StateError> {
    StateFile::new(space, values.iter().map(|&v| Scalar::from_i64(v)).collect())
}

/// Unit coefficient `e_k`.
pub fn basis_state(space: Space, ks: &[usize]) -> Result<StateFile, StateError> {
    let mut c = vec![Scalar::zero(); space.coefficient_count()];
    for &k in ks {
        if k >= c.len() {
            return Err(StateError(format!("index {k} out of range for {space}")));
        }
        c[k] = Scalar::one();
    }
    StateFile::new(space, c)
}

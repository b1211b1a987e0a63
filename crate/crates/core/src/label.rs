use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

/// Which qubit splits off in a biseparable three-qubit state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Partition {
    /// `A|BC`
    SplitA,
    /// `B|AC`
    SplitB,
    /// `C|AB`
    SplitC,
    Unmarked,
}

/// Stratum of a state in the orbit chain `X ⊂ σ₊ ⊂ τ ⊂ σ`, or a matrix rank
/// for the bipartite systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrataLabel {
    Null,
    Separable,
    Biseparable(Partition),
    W,
    Ghz,
    Rank(u8),
}

impl StrataLabel {
    /// Equality that ignores the biseparable partition.
    pub fn same_stratum(&self, other: &StrataLabel) -> bool {
        match (self, other) {
            (StrataLabel::Biseparable(_), StrataLabel::Biseparable(_)) => true,
            _ => self == other,
        }
    }

    /// Drops the partition refinement.
    pub fn coarse(self) -> StrataLabel {
        match self {
            StrataLabel::Biseparable(_) => StrataLabel::Biseparable(Partition::Unmarked),
            l => l,
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Partition::SplitA => "A|BC",
            Partition::SplitB => "B|AC",
            Partition::SplitC => "C|AB",
            Partition::Unmarked => "unmarked",
        })
    }
}

impl fmt::Display for StrataLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrataLabel::Null => f.write_str("Null"),
            StrataLabel::Separable => f.write_str("Separable"),
            StrataLabel::Biseparable(Partition::Unmarked) => f.write_str("Biseparable"),
            StrataLabel::Biseparable(p) => write!(f, "Biseparable({p})"),
            StrataLabel::W => f.write_str("W"),
            StrataLabel::Ghz => f.write_str("GHZ"),
            StrataLabel::Rank(k) => write!(f, "Rank({k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseLabelError(pub String);

impl fmt::Display for ParseLabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown class label '{}'", self.0)
    }
}

impl FromStr for StrataLabel {
    type Err = ParseLabelError;

    /// Accepts the [`fmt::Display`] forms case-insensitively, plus `rank<k>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let low = s.trim().to_ascii_lowercase();
        let label = match low.as_str() {
            "null" => StrataLabel::Null,
            "separable" => StrataLabel::Separable,
            "biseparable" => StrataLabel::Biseparable(Partition::Unmarked),
            "biseparable(a|bc)" => StrataLabel::Biseparable(Partition::SplitA),
            "biseparable(b|ac)" => StrataLabel::Biseparable(Partition::SplitB),
            "biseparable(c|ab)" => StrataLabel::Biseparable(Partition::SplitC),
            "w" => StrataLabel::W,
            "ghz" => StrataLabel::Ghz,
            other => {
                let digits = other
                    .strip_prefix("rank(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| other.strip_prefix("rank"));
                match digits.and_then(|d| d.parse::<u8>().ok()) {
                    Some(k) => StrataLabel::Rank(k),
                    None => return Err(ParseLabelError(s.to_string())),
                }
            }
        };
        Ok(label)
    }
}

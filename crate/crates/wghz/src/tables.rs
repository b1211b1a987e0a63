//! Dimension reports: single varieties, and the two classification tables.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wghz_core::varieties::{
    dichotomy_from_dims, secant_dim, tangential_dim, variety_by_name, Dichotomy, ParamVariety,
    TerraciniOptions,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            _ => Err(format!("unknown format '{s}' (expected plain, csv or md)")),
        }
    }
}

/// Computed dimensions of one variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimRow {
    pub name: String,
    pub title: String,
    pub domain: usize,
    pub ambient: usize,
    pub secant: usize,
    pub tangential: usize,
    /// `Case1`, `Case2` or `inconsistent`.
    pub case: String,
    pub dichotomy: Option<Dichotomy>,
}

pub fn dim_row(x: &ParamVariety, opts: &TerraciniOptions, seed: u64) -> Result<DimRow, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let secant = secant_dim(x, opts, &mut rng).map_err(|e| e.to_string())?.dim;
    let tangential = tangential_dim(x, opts, &mut rng).map_err(|e| e.to_string())?.dim;
    let dichotomy = dichotomy_from_dims(x, secant, tangential).ok();
    Ok(DimRow {
        name: x.name().to_string(),
        title: x.title().to_string(),
        domain: x.domain_dim(),
        ambient: x.ambient_dim(),
        secant,
        tangential,
        case: dichotomy.as_ref().map_or("inconsistent", Dichotomy::case_name).to_string(),
        dichotomy,
    })
}

/// Rows in input order; each row gets its own generator seeded by `seed`,
/// so scheduling never changes the output.
pub fn dim_rows(xs: &[ParamVariety], opts: &TerraciniOptions, seed: u64) -> Result<Vec<DimRow>, String> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = xs.iter().map(|x| scope.spawn(move || dim_row(x, opts, seed))).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err("worker panicked".into()))).collect()
    })
}

pub fn render_dims(rows: &[DimRow], format: Format) -> String {
    let header = ["name", "variety", "n", "ambient", "sigma", "tau", "case"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.title.clone(),
                r.domain.to_string(),
                r.ambient.to_string(),
                r.secant.to_string(),
                r.tangential.to_string(),
                r.case.clone(),
            ]
        })
        .collect();
    match format {
        Format::Plain => rows
            .iter()
            .map(|r| {
                format!(
                    "{} {} n={} ambient=P{} σ={} τ={} {}\n",
                    r.name, r.title, r.domain, r.ambient, r.secant, r.tangential, r.case
                )
            })
            .collect(),
        _ => render_grid(&header, &cells, format),
    }
}

fn render_grid(header: &[&str], cells: &[Vec<String>], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            let _ = writeln!(out, "{}", header.join(","));
            for row in cells {
                let quoted: Vec<String> =
                    row.iter().map(|c| if c.contains([',', '"']) { format!("\"{}\"", c.replace('"', "\"\"")) } else { c.clone() }).collect();
                let _ = writeln!(out, "{}", quoted.join(","));
            }
        }
        Format::Md => {
            let _ = writeln!(out, "| {} |", header.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
            for row in cells {
                let _ = writeln!(out, "| {} |", row.join(" | "));
            }
        }
        Format::Plain => {
            let widths: Vec<usize> = (0..header.len())
                .map(|j| cells.iter().map(|r| r[j].chars().count()).chain([header[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |row: Vec<&str>| -> String {
                let padded: Vec<String> =
                    row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}", w = *w)).collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(header.to_vec()));
            for row in cells {
                let _ = writeln!(out, "{}", line(row.iter().map(String::as_str).collect()));
            }
        }
    }
    out
}

/// One row of a classification table with its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub name: String,
    pub title: String,
    pub domain: usize,
    pub ambient: usize,
    pub secant: usize,
    pub tangential: usize,
    pub case: String,
    pub passed: bool,
    pub flag: Option<&'static str>,
}

/// Systems with a unique smooth orbit whose secant fills the space.
pub const TABLE1: [&str; 11] = [
    "fts-minus-one",
    "so-3",
    "fts-zero",
    "so-5",
    "so-6",
    "so-7",
    "so-9",
    "fts-complex",
    "fts-split",
    "fts-quaternion",
    "fts-octonion",
];

pub const CORRECTED: &str = "corrected, see notes";

/// `(name, frozen secant dimension, flag)` for the defective systems.
pub const TABLE2: [(&str, usize, Option<&str>); 6] = [
    ("severi-complex", 4, Some(CORRECTED)),
    ("severi-split", 7, None),
    ("severi-quaternion", 13, Some(CORRECTED)),
    ("severi-octonion", 25, None),
    ("segre-3-4", 9, None),
    ("grassmannian-2-7", 17, None),
];

fn lookup(names: &[&str]) -> Result<Vec<ParamVariety>, String> {
    names.iter().map(|n| variety_by_name(n).ok_or_else(|| format!("unknown variety {n}"))).collect()
}

fn table_row(d: DimRow, passed: bool, flag: Option<&'static str>) -> TableRow {
    TableRow {
        name: d.name,
        title: d.title,
        domain: d.domain,
        ambient: d.ambient,
        secant: d.secant,
        tangential: d.tangential,
        case: d.case,
        passed,
        flag,
    }
}

/// PASS when `σ` fills the ambient space and `τ` is a hypersurface.
pub fn table1(opts: &TerraciniOptions, seed: u64) -> Result<Vec<TableRow>, String> {
    let rows = dim_rows(&lookup(&TABLE1)?, opts, seed)?;
    Ok(rows
        .into_iter()
        .map(|d| {
            let ok = d.secant == d.ambient && d.tangential + 1 == d.ambient;
            table_row(d, ok, None)
        })
        .collect())
}

/// PASS when `σ = τ ⊊ P(H)` with the frozen dimension.
pub fn table2(opts: &TerraciniOptions, seed: u64) -> Result<Vec<TableRow>, String> {
    let names: Vec<&str> = TABLE2.iter().map(|r| r.0).collect();
    let rows = dim_rows(&lookup(&names)?, opts, seed)?;
    Ok(rows
        .into_iter()
        .zip(TABLE2)
        .map(|(d, (_, frozen, flag))| {
            let ok = matches!(d.dichotomy, Some(Dichotomy::Case2 { .. })) && d.secant < d.ambient && d.secant == frozen;
            table_row(d, ok, flag)
        })
        .collect())
}

/// Explanations printed under table 2. `informational` is the computed row
/// for `Λ²C⁵`.
pub fn table2_notes(informational: Option<&DimRow>) -> Vec<String> {
    let mut notes = vec![
        "severi-complex: the printed entry pairs SL2 with Sym2(C3); the dimensions force SL3 acting on Sym2(C3), v2(P2) in P5.".to_string(),
        "severi-quaternion: the printed entry lists G(2,5) in P14; the dimensions force SL6 acting on Λ2C6, G(2,6) in P14.".to_string(),
    ];
    if let Some(r) = informational {
        notes.push(format!(
            "informational: {} {} has σ={} τ={} in P{} ({}), so Λ2C5 has no σ-deficient row.",
            r.name, r.title, r.secant, r.tangential, r.ambient, r.case
        ));
    }
    notes
}

pub fn render_table(rows: &[TableRow], format: Format) -> String {
    let header = ["name", "variety", "n", "ambient", "sigma", "tau", "case", "status", "flag"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                r.title.clone(),
                r.domain.to_string(),
                format!("P{}", r.ambient),
                r.secant.to_string(),
                r.tangential.to_string(),
                r.case.clone(),
                if r.passed { "PASS" } else { "FAIL" }.to_string(),
                r.flag.unwrap_or("").to_string(),
            ]
        })
        .collect();
    render_grid(&header, &cells, format)
}

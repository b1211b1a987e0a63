//! Command-line surface. [`run`] is the whole program minus process I/O.

use std::io::Read;

use clap::{ArgGroup, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wghz_core::e6::{hessian_basis, E6Map, ADJOINT_DIM, QUADRIC_COUNT};
use wghz_core::varieties::{catalog, variety_by_name, TerraciniOptions};
use wghz_core::StrataLabel;

use crate::checks::{run_all, CheckConfig};
use crate::report::{classify_state, sample_state};
use crate::state_io::{emit, parse, Space};
use crate::tables::{dim_row, dim_rows, render_dims, render_table, table1, table2, table2_notes, Format, TableRow};

#[derive(Debug, Parser)]
#[command(name = "wghz", version, about = "Classify entangled states with W/GHZ-only genuine strata and verify the secant-variety tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the class of a state file (`-` reads stdin), then its invariants.
    Classify { file: String },
    /// Print only the invariants of a state file.
    Invariant { file: String },
    /// Secant and tangential dimensions of catalog varieties.
    #[command(group(ArgGroup::new("which").required(true).args(["space", "all"])))]
    Dims {
        #[arg(long)]
        space: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Emit a random state of the given class as a canonical state file.
    Sample {
        #[arg(long)]
        space: String,
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Systems whose secant variety fills the space.
    Table1 {
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Systems with a defective secant variety.
    Table2 {
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "plain")]
        format: Format,
    },
    /// Quadric basis, image span and image dimension of the E6 map.
    E6Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// Run the nine acceptance checks.
    Selftest {
        /// Small sample counts; same checks.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 2026)]
        seed: u64,
    },
}

/// Exit code with captured output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn verdict(passed: bool, stdout: String) -> Self {
        Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code: 2, stdout: String::new(), stderr }
    }
}

pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` (program name first) and executes the command.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::usage(text) } else { Outcome::ok(text) };
        }
    };
    match cli.command {
        Command::Classify { file } => classify(&file, stdin, true),
        Command::Invariant { file } => classify(&file, stdin, false),
        Command::Dims { space, trials, seed, format, .. } => dims(space.as_deref(), trials, seed, format),
        Command::Sample { space, class, seed } => sample(&space, &class, seed),
        Command::Table1 { trials, seed, format } => table(1, trials, seed, format),
        Command::Table2 { trials, seed, format } => table(2, trials, seed, format),
        Command::E6Check { seed, points } => e6_check(seed, points),
        Command::Selftest { quick, seed } => {
            let cfg = CheckConfig { seed, ..if quick { CheckConfig::quick() } else { CheckConfig::default() } };
            let outcomes = run_all(&cfg);
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let mut out: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            out.push_str(&format!("selftest: {passed}/{} passed\n", outcomes.len()));
            Outcome::verdict(passed == outcomes.len(), out)
        }
    }
}

fn read_input(file: &str, stdin: &mut dyn Read) -> Result<Vec<u8>, String> {
    let mut bytes = Vec::new();
    if file == "-" {
        stdin.read_to_end(&mut bytes).map_err(|e| format!("stdin: {e}"))?;
        Ok(bytes)
    } else {
        std::fs::read(file).map_err(|e| format!("{file}: {e}"))
    }
}

fn classify(file: &str, stdin: &mut dyn Read, with_label: bool) -> Outcome {
    let bytes = match read_input(file, stdin) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e),
    };
    let parsed = match parse(&bytes) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("{file}: {e}")),
    };
    match classify_state(&parsed) {
        Ok(c) if with_label => Outcome::ok(c.render()),
        Ok(c) => Outcome::ok(c.invariants.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()),
        Err(e) => Outcome::usage(format!("{file}: {e}")),
    }
}

fn options(trials: usize) -> Result<TerraciniOptions, Outcome> {
    if trials == 0 {
        return Err(Outcome::usage("--trials must be at least 1"));
    }
    Ok(TerraciniOptions { trials, ..TerraciniOptions::default() })
}

fn dims(space: Option<&str>, trials: usize, seed: u64, format: Format) -> Outcome {
    let opts = match options(trials) {
        Ok(o) => o,
        Err(e) => return e,
    };
    let rows = match space {
        Some(name) => match variety_by_name(name) {
            Some(x) => dim_row(&x, &opts, seed).map(|r| vec![r]),
            None => {
                let known: Vec<String> = catalog().iter().map(|v| v.name().to_string()).collect();
                return Outcome::usage(format!("unknown space '{name}'; known: {}, so-<m>", known.join(", ")));
            }
        },
        None => dim_rows(&catalog(), &opts, seed),
    };
    match rows {
        Ok(rows) => Outcome::verdict(rows.iter().all(|r| r.dichotomy.is_some()), render_dims(&rows, format)),
        Err(e) => Outcome { code: EXIT_FAIL, stdout: String::new(), stderr: format!("{e}\n") },
    }
}

fn sample(space: &str, class: &str, seed: u64) -> Outcome {
    let space: Space = match space.parse() {
        Ok(s) => s,
        Err(e) => return Outcome::usage(format!("{e}")),
    };
    let label: StrataLabel = match class.parse() {
        Ok(l) => l,
        Err(e) => return Outcome::usage(format!("{e}")),
    };
    match sample_state(space, label, &mut ChaCha8Rng::seed_from_u64(seed)) {
        Ok(f) => Outcome::ok(emit(&f)),
        Err(e) => Outcome::usage(format!("cannot sample {label} in {space}: {e}")),
    }
}

fn table(which: u8, trials: usize, seed: u64, format: Format) -> Outcome {
    let opts = match options(trials) {
        Ok(o) => o,
        Err(e) => return e,
    };
    let rows: Result<Vec<TableRow>, String> = if which == 1 { table1(&opts, seed) } else { table2(&opts, seed) };
    let rows = match rows {
        Ok(r) => r,
        Err(e) => return Outcome { code: EXIT_FAIL, stdout: String::new(), stderr: format!("{e}\n") },
    };
    let mut out = render_table(&rows, format);
    let passed = rows.iter().filter(|r| r.passed).count();
    if format != Format::Csv {
        if which == 2 {
            let info = variety_by_name("grassmannian-2-5").and_then(|x| dim_row(&x, &opts, seed).ok());
            let notes = table2_notes(info.as_ref());
            out.push_str("\nnotes:\n");
            for n in notes {
                out.push_str(&format!("- {n}\n"));
            }
        }
        out.push_str(&format!("\ntable{which}: {passed}/{} PASS\n", rows.len()));
    }
    Outcome::verdict(passed == rows.len(), out)
}

fn e6_check(seed: u64, points: usize) -> Outcome {
    let mut out = String::new();
    let basis = match hessian_basis() {
        Ok(b) => b.len(),
        Err(e) => return Outcome { code: EXIT_FAIL, stdout: String::new(), stderr: format!("{e}\n") },
    };
    out.push_str(&format!("quadric basis: {basis} (expected {QUADRIC_COUNT})\n"));
    let map = match E6Map::new() {
        Ok(m) => m,
        Err(e) => return Outcome { code: EXIT_FAIL, stdout: out, stderr: format!("{e}\n") },
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = map.image_span(points, &mut rng);
    out.push_str(&format!("image span of {points} points: {span} (expected {ADJOINT_DIM})\n"));
    let dim = map.image_dim(1, &mut rng).unwrap_or(0);
    out.push_str(&format!("image dimension: {dim}\n"));
    let passed = basis == QUADRIC_COUNT && span == ADJOINT_DIM;
    out.push_str(if passed { "e6-check: PASS\n" } else { "e6-check: FAIL\n" });
    Outcome::verdict(passed, out)
}

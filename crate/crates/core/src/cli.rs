//! The `dkring` command line: argument parsing, configuration layering and
//! the four subcommands. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 success, 1 a failing identity, 2 a parse error, 3 a
//! truncation conflict.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::dold_kan_core::{cohomotopy, KObject};
use crate::error::{Error, Result};
use crate::exact_linear::{BoundedComplex, CoeffRing, HomologySummary};
use crate::nc_geometry::{Amitsur, Hkr, NussComparison, Omega, StructAlgebra};
use crate::ring_layer::fin_ring::check_ring_level;
use crate::verify::{run_suites, suite_names, Check, SuiteParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_TRUNCATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "dkring",
    version,
    about = "Exact Dold-Kan computations for complexes, DG-rings and cosimplicial rings",
    after_help = "Settings are layered: built-in defaults, then the --config file, then explicit flags.\n\
                  Exit codes: 0 ok, 1 failing identity, 2 parse error, 3 truncation conflict."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

/// Every flag is optional so that a config file can fill the gaps.
#[derive(Debug, Default, Clone, clap::Args, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    /// Coefficient ring: z or zmod:<m> [default: z]
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Highest simplicial level exercised [default: 4]
    #[arg(long, global = true)]
    pub levels: Option<usize>,
    /// Degree cutoff for Q, K and N QA [default: 5]
    #[arg(long, global = true)]
    pub rmax: Option<usize>,
    /// Word-length cutoff for coproducts and tensor algebras [default: 3]
    #[arg(long, global = true)]
    pub wmax: Option<usize>,
    /// Seed for every random input [default: 0]
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Suites to run, comma separated [default: all]
    #[arg(long, global = true, value_delimiter = ',')]
    pub suite: Option<Vec<String>>,
    /// Output format [default: json]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Input files: a complex or an algebra, as JSON
    #[arg(long, global = true)]
    pub input: Option<Vec<PathBuf>>,
    /// JSON file with any of the settings above (keys as flag names)
    #[arg(long, global = true)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Cohomotopy of a complex or Hochschild homology of an algebra
    Table,
    /// Run verification suites and report each identity
    Verify,
    /// Noncommutative differential forms of an algebra
    Omega,
    /// The Amitsur complex with the Nuss product and its comparison with K Ω
    Amitsur,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ring: CoeffRing,
    pub levels: usize,
    pub r_max: usize,
    pub w_max: usize,
    pub seed: u64,
    pub suites: Vec<String>,
    pub format: Format,
    pub inputs: Vec<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            ring: CoeffRing::Integers,
            levels: 4,
            r_max: 5,
            w_max: 3,
            seed: 0,
            suites: suite_names().into_iter().map(String::from).collect(),
            format: Format::Json,
            inputs: Vec::new(),
        }
    }
}

impl RunConfig {
    /// Defaults, overridden by the config file, overridden by explicit flags.
    pub fn resolve(flags: &Flags) -> Result<Self> {
        let file = match &flags.config {
            Some(path) => {
                let text = fs::read_to_string(path)?;
                serde_json::from_str::<Flags>(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
            }
            None => Flags::default(),
        };
        let mut c = RunConfig::default();
        for layer in [&file, flags] {
            if let Some(r) = &layer.ring {
                c.ring = r.parse()?;
            }
            if let Some(v) = layer.levels {
                c.levels = v;
            }
            if let Some(v) = layer.rmax {
                c.r_max = v;
            }
            if let Some(v) = layer.wmax {
                c.w_max = v;
            }
            if let Some(v) = layer.seed {
                c.seed = v;
            }
            if let Some(v) = &layer.suite {
                c.suites = v.iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            }
            if let Some(v) = layer.format {
                c.format = v;
            }
            if let Some(v) = &layer.input {
                c.inputs = v.clone();
            }
        }
        for (name, v) in [("levels", c.levels), ("rmax", c.r_max), ("wmax", c.w_max)] {
            if v < 1 {
                return Err(Error::Parse(format!("--{name} must be at least 1")));
            }
        }
        if c.suites.is_empty() {
            return Err(Error::Parse("no suites selected".into()));
        }
        Ok(c)
    }

    fn algebras(&self) -> Result<Vec<(String, StructAlgebra)>> {
        if self.inputs.is_empty() {
            return Ok(SuiteParams::default_algebras());
        }
        self.inputs
            .iter()
            .map(|p| match load(p)? {
                Input::Algebra(s) => Ok((object_name(p), s)),
                Input::Complex(_) => Err(Error::Parse(format!("{}: expected an algebra", p.display()))),
            })
            .collect()
    }

    pub fn suite_params(&self) -> Result<SuiteParams> {
        Ok(SuiteParams {
            ring: self.ring,
            levels: self.levels,
            r_max: self.r_max,
            w_max: self.w_max,
            seed: self.seed,
            algebras: self.algebras()?,
        })
    }
}

pub enum Input {
    Complex(BoundedComplex),
    Algebra(StructAlgebra),
}

/// Reads a JSON file; objects with a `structure` key are algebras.
pub fn load(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let tag = |e: Error| match e {
        Error::Truncation(_) => e,
        other => Error::Parse(format!("{}: {other}", path.display())),
    };
    if v.get("structure").is_some() {
        StructAlgebra::from_json(&v).map(Input::Algebra).map_err(tag)
    } else {
        BoundedComplex::from_json(&v).map(Input::Complex).map_err(tag)
    }
}

fn object_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// What a command prints and whether every identity held.
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

#[derive(Serialize)]
struct TableRow {
    object: String,
    kind: &'static str,
    degree: usize,
    betti: usize,
    torsion: Vec<String>,
    truncated: bool,
}

fn rows_from(object: &str, kind: &'static str, h: &HomologySummary) -> Vec<TableRow> {
    h.degrees
        .iter()
        .map(|d| TableRow {
            object: object.to_string(),
            kind,
            degree: d.degree,
            betti: d.betti,
            torsion: d.torsion.iter().map(ToString::to_string).collect(),
            truncated: d.truncated,
        })
        .collect()
}

fn render<T: Serialize>(format: Format, header: &[&str], rows: &[T], csv_row: impl Fn(&T) -> Vec<String>) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(rows)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
            w.write_record(header).map_err(io)?;
            for r in rows {
                w.write_record(csv_row(r)).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

pub fn cmd_table(c: &RunConfig) -> Result<Outcome> {
    if c.inputs.is_empty() {
        return Err(Error::Parse("table needs --input".into()));
    }
    let mut rows = Vec::new();
    for path in &c.inputs {
        let name = object_name(path);
        match load(path)? {
            Input::Complex(a) => {
                // integer input can be read over --ring; other rings come from the file
                let a = if a.ring() == CoeffRing::Integers && c.ring != CoeffRing::Integers {
                    a.reduce_ring(c.ring)
                } else {
                    a
                };
                if a.top() > c.r_max {
                    return Err(Error::Truncation(format!(
                        "{name} has degree {} above --rmax {}",
                        a.top(),
                        c.r_max
                    )));
                }
                let mut h = cohomotopy(&KObject::new(&a, c.r_max), a.top())?;
                if let Some(last) = h.degrees.last_mut() {
                    last.truncated |= a.is_truncated();
                }
                rows.extend(rows_from(&name, "cohomotopy", &h));
            }
            Input::Algebra(s) => {
                let top = c.levels.min(c.w_max.saturating_sub(1));
                let h = Hkr::new(&s, top, c.w_max)?.homology()?;
                rows.extend(rows_from(&name, "nc_hochschild", &h));
            }
        }
    }
    rows.sort_by(|a, b| (&a.object, a.degree).cmp(&(&b.object, b.degree)));
    let stdout = render(c.format, &["object", "kind", "degree", "betti", "torsion", "truncated"], &rows, |r| {
        vec![
            r.object.clone(),
            r.kind.to_string(),
            r.degree.to_string(),
            r.betti.to_string(),
            r.torsion.join(" "),
            r.truncated.to_string(),
        ]
    })?;
    Ok(Outcome { stdout, ok: true })
}

pub fn cmd_verify(c: &RunConfig) -> Result<Outcome> {
    // most suites compute homology, which needs Z or a prime field
    if let CoeffRing::Modular(m) = c.ring {
        if !c.ring.is_field() {
            return Err(Error::UnsupportedRing(format!("zmod:{m} is not a prime field")));
        }
    }
    let checks = run_suites(&c.suites, &c.suite_params()?)?;
    let ok = checks.iter().all(|k| k.passed);
    let stdout = match c.format {
        Format::Json => {
            let passed = checks.iter().filter(|k| k.passed).count();
            let report = json!({
                "config": {
                    "ring": c.ring.to_string(),
                    "levels": c.levels,
                    "rmax": c.r_max,
                    "wmax": c.w_max,
                    "seed": c.seed,
                },
                "passed": passed,
                "failed": checks.len() - passed,
                "checks": checks,
            });
            serde_json::to_string_pretty(&report)? + "\n"
        }
        Format::Csv => render(c.format, &["suite", "check", "status", "cases", "detail"], &checks, |k: &Check| {
            vec![
                k.suite.clone(),
                k.check.clone(),
                if k.passed { "pass" } else { "fail" }.to_string(),
                k.cases.to_string(),
                k.detail.clone(),
            ]
        })?,
    };
    Ok(Outcome { stdout, ok })
}

#[derive(Serialize)]
struct OmegaRow {
    object: String,
    degree: usize,
    rank: usize,
    basis: Vec<String>,
    /// `d: Ω^n → Ω^{n+1}` in the listed bases, one row per target element.
    d: Vec<Vec<String>>,
}

pub fn cmd_omega(c: &RunConfig) -> Result<Outcome> {
    let mut rows = Vec::new();
    for (name, s) in c.algebras()? {
        let o = Omega::new(&s, c.r_max)?;
        let complex = o.dg().complex();
        for n in 0..=c.r_max {
            let d = if n < c.r_max { complex.differential(n) } else { crate::Matrix::zeros(0, complex.rank(n)) };
            rows.push(OmegaRow {
                object: name.clone(),
                degree: n,
                rank: complex.rank(n),
                basis: complex.module(n).map(|m| m.labels().to_vec()).unwrap_or_default(),
                d: (0..d.rows()).map(|i| d.row(i).iter().map(ToString::to_string).collect()).collect(),
            });
        }
    }
    let stdout = render(c.format, &["object", "degree", "rank", "basis"], &rows, |r| {
        vec![r.object.clone(), r.degree.to_string(), r.rank.to_string(), r.basis.join(";")]
    })?;
    Ok(Outcome { stdout, ok: true })
}

#[derive(Serialize)]
struct AmitsurRow {
    object: String,
    level: usize,
    rank: usize,
    check: String,
    passed: bool,
    detail: String,
}

pub fn cmd_amitsur(c: &RunConfig) -> Result<Outcome> {
    let top = c.levels.min(3);
    let mut rows = Vec::new();
    for (name, s) in c.algebras()? {
        let a = Amitsur::new(&s);
        let comparison = NussComparison::new(&s, top)?;
        for n in 0..=top {
            let rank = s.rank().pow(n as u32 + 1);
            let mut row = |check: &str, r: Result<()>| -> Result<()> {
                let (passed, detail) = match r {
                    Ok(()) => (true, String::new()),
                    Err(Error::Truncation(m)) => return Err(Error::Truncation(m)),
                    Err(e) => (false, e.to_string()),
                };
                rows.push(AmitsurRow {
                    object: name.clone(),
                    level: n,
                    rank,
                    check: check.to_string(),
                    passed,
                    detail,
                });
                Ok(())
            };
            if n == 0 {
                row("twist", a.check_twist())?;
            }
            row("delta products", a.check_delta_products(n).and_then(|_| a.check_q_relations(n)))?;
            if n <= 2 {
                row("ring laws", check_ring_level(&a, n))?;
            }
            let mut maps = crate::fin_maps::generators(n).all();
            maps.retain(|m| m.target() <= top);
            row("comparison with K omega", comparison.check(n, &maps))?;
        }
    }
    let ok = rows.iter().all(|r| r.passed);
    let stdout = render(c.format, &["object", "level", "rank", "check", "status", "detail"], &rows, |r| {
        vec![
            r.object.clone(),
            r.level.to_string(),
            r.rank.to_string(),
            r.check.clone(),
            if r.passed { "pass" } else { "fail" }.to_string(),
            r.detail.clone(),
        ]
    })?;
    Ok(Outcome { stdout, ok })
}

pub fn execute(command: Command, config: &RunConfig) -> Result<Outcome> {
    match command {
        Command::Table => cmd_table(config),
        Command::Verify => cmd_verify(config),
        Command::Omega => cmd_omega(config),
        Command::Amitsur => cmd_amitsur(config),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::UnsupportedRing(_) => EXIT_PARSE,
        Error::Truncation(_) => EXIT_TRUNCATION,
        _ => EXIT_FAILED,
    }
}

/// Exit code, standard output and standard error of one invocation.
pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK { (text, String::new()) } else { (String::new(), text) };
            return Run { code, stdout, stderr };
        }
    };
    let result = RunConfig::resolve(&cli.flags).and_then(|c| execute(cli.command, &c));
    match result {
        Ok(o) => Run {
            code: if o.ok { EXIT_OK } else { EXIT_FAILED },
            stdout: o.stdout,
            stderr: String::new(),
        },
        Err(e) => Run {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_beat_config_file() {
        let dir = std::env::temp_dir().join(format!("dkring-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.json");
        fs::write(&path, r#"{"seed": 7, "levels": 2, "ring": "zmod:3"}"#).unwrap();
        let flags = Flags {
            seed: Some(9),
            config: Some(path),
            ..Flags::default()
        };
        let c = RunConfig::resolve(&flags).unwrap();
        assert_eq!((c.seed, c.levels, c.ring), (9, 2, CoeffRing::Modular(3)));
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn bad_inputs_map_to_exit_codes() {
        assert_eq!(run(["dkring", "verify", "--ring", "q"]).code, EXIT_PARSE);
        assert_eq!(run(["dkring", "verify", "--levels", "0"]).code, EXIT_PARSE);
        assert_eq!(run(["dkring", "verify", "--suite", "bogus"]).code, EXIT_PARSE);
        assert_eq!(run(["dkring", "frobnicate"]).code, EXIT_PARSE);
        assert_eq!(run(["dkring", "table"]).code, EXIT_PARSE);
        assert_eq!(run(["dkring", "verify", "--suite", "nchkr", "--wmax", "2"]).code, EXIT_TRUNCATION);
        assert_eq!(run(["dkring", "--help"]).code, EXIT_OK);
    }
}

//! Argument parsing, command execution and output rendering for the
//! `mexkit` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mexkit::engine::{self, EngineError, TableMethod};
use mexkit::genfun::{gt_series, AvoidSet, GenFunError};
use mexkit::verify::{verify_structure, VerifyError};
use mexkit::{Execution, StructureKind};
use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "mexkit", version, about = "Count combinatorial objects by their mex")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of mex counts, one row per size.
    Table(TableArgs),
    /// Counts of objects with a fixed mex, by size.
    Sequence(SequenceArgs),
    /// Counts of objects avoiding a set of weights, by size.
    Gt(GtArgs),
    /// Run every cross-check available for one structure.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Engine,
    Closed,
    Brute,
    Cross,
}

impl From<MethodArg> for TableMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Engine => TableMethod::Engine,
            MethodArg::Closed => TableMethod::ClosedForm,
            MethodArg::Brute => TableMethod::BruteForce,
            MethodArg::Cross => TableMethod::CrossCheck,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// First n to print. Sequences of inversion sequences and planar trees
    /// start at 1 by default, everything else at 0.
    #[arg(long)]
    pub offset: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, short = 's')]
    pub structure: StructureKind,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, default_value_t = 6)]
    pub max_m: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Engine)]
    pub method: MethodArg,
    /// Add an m = 0 column holding the empty object.
    #[arg(long)]
    pub empty_at_zero: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[arg(long, short = 's')]
    pub structure: StructureKind,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Engine)]
    pub method: MethodArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GtArgs {
    #[arg(long, short = 's')]
    pub structure: StructureKind,
    /// Comma-separated forbidden weights, e.g. `1,3`. Empty means none.
    #[arg(long, default_value = "")]
    pub avoid: AvoidSet,
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, short = 's')]
    pub structure: StructureKind,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 4)]
    pub max_m: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Mismatch(EngineError),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => EXIT_MISMATCH,
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::CrossCheckMismatch { .. } => CliError::Mismatch(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<GenFunError> for CliError {
    fn from(e: GenFunError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Engine(e) => e.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Rendered output of a successful run. `passed` is false only for a
/// verification report containing failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
    pub out: Option<PathBuf>,
}

/// Numbers laid out as rows indexed by `n`.
struct Grid {
    meta: Vec<(&'static str, Value)>,
    columns: Vec<String>,
    rows: Vec<(usize, Vec<BigInt>)>,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Table(a) => table(a),
        Command::Sequence(a) => sequence(a),
        Command::Gt(a) => gt(a),
        Command::Verify(a) => {
            let report = verify_structure(a.structure, a.max_n, a.max_m, Execution::default())?;
            Ok(Outcome { text: report.to_string(), passed: report.passed(), out: a.out.clone() })
        }
    }
}

fn first_row(output: &OutputArgs, default: usize, max_n: usize) -> Result<usize, CliError> {
    let offset = output.offset.unwrap_or(default);
    if offset > max_n {
        return Err(CliError::Usage(format!("offset {offset} exceeds max-n {max_n}")));
    }
    Ok(offset)
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Engine => "engine",
        MethodArg::Closed => "closed",
        MethodArg::Brute => "brute",
        MethodArg::Cross => "cross",
    }
}

fn table(a: &TableArgs) -> Result<Outcome, CliError> {
    if a.max_m == 0 {
        return Err(CliError::Usage("max-m must be at least 1".into()));
    }
    let start = first_row(&a.output, 0, a.max_n)?;
    let t = engine::mex_table(a.structure, a.max_n, a.max_m, a.method.into())?;
    let first_m = usize::from(!a.empty_at_zero);
    let columns = (first_m..=a.max_m).map(|m| m.to_string()).collect();
    let rows = (start..=a.max_n)
        .map(|n| {
            let row = if a.empty_at_zero { t.row_with_empty_at_zero(n) } else { t.entries[n].clone() };
            (n, row)
        })
        .collect();
    let grid = Grid {
        meta: vec![
            ("structure", json!(a.structure.code())),
            ("method", json!(method_name(a.method))),
            ("empty_at_zero", json!(a.empty_at_zero)),
        ],
        columns,
        rows,
    };
    Ok(Outcome { text: render(&grid, a.output.format), passed: true, out: a.output.out.clone() })
}

/// Default first index for sequences: inversion sequences and planar trees
/// are usually listed from size 1.
fn sequence_offset(kind: StructureKind) -> usize {
    match kind {
        StructureKind::InversionSequence | StructureKind::PlanarTree => 1,
        _ => 0,
    }
}

fn sequence(a: &SequenceArgs) -> Result<Outcome, CliError> {
    if a.m == 0 {
        return Err(CliError::Usage("m must be at least 1".into()));
    }
    let start = first_row(&a.output, sequence_offset(a.structure), a.max_n)?;
    let column = match a.method {
        MethodArg::Engine => engine::gamma_series(a.structure, a.m, a.max_n)?
            .to_integers()
            .map_err(GenFunError::from)?,
        other => engine::mex_table(a.structure, a.max_n, a.m, other.into())?.column(a.m),
    };
    let grid = Grid {
        meta: vec![
            ("structure", json!(a.structure.code())),
            ("m", json!(a.m.to_string())),
            ("method", json!(method_name(a.method))),
        ],
        columns: vec!["value".into()],
        rows: (start..=a.max_n).map(|n| (n, vec![column[n].clone()])).collect(),
    };
    Ok(Outcome { text: render(&grid, a.output.format), passed: true, out: a.output.out.clone() })
}

fn gt(a: &GtArgs) -> Result<Outcome, CliError> {
    let start = first_row(&a.output, 0, a.max_n)?;
    let coeffs = gt_series(a.structure, &a.avoid, a.max_n)?
        .to_integers()
        .map_err(GenFunError::from)?;
    let grid = Grid {
        meta: vec![
            ("structure", json!(a.structure.code())),
            ("avoid", json!(a.avoid.iter().map(|w| w.to_string()).collect::<Vec<_>>())),
        ],
        columns: vec!["value".into()],
        rows: (start..=a.max_n).map(|n| (n, vec![coeffs[n].clone()])).collect(),
    };
    Ok(Outcome { text: render(&grid, a.output.format), passed: true, out: a.output.out.clone() })
}

fn render(grid: &Grid, format: Format) -> String {
    match format {
        Format::Tsv => render_delimited(grid, b'\t'),
        Format::Csv => render_delimited(grid, b','),
        Format::Json => render_json(grid),
        Format::Bfile => render_bfile(grid),
    }
}

fn render_delimited(grid: &Grid, delimiter: u8) -> String {
    let mut w = csv::WriterBuilder::new().delimiter(delimiter).from_writer(Vec::new());
    let header = std::iter::once("n".to_string()).chain(grid.columns.iter().cloned());
    w.write_record(header).expect("in-memory write");
    for (n, values) in &grid.rows {
        let record = std::iter::once(n.to_string()).chain(values.iter().map(BigInt::to_string));
        w.write_record(record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

/// Every number, including indices, is a decimal string.
fn render_json(grid: &Grid) -> String {
    let mut obj = serde_json::Map::new();
    for (k, v) in &grid.meta {
        obj.insert((*k).to_string(), v.clone());
    }
    obj.insert("columns".into(), json!(grid.columns));
    let rows: Vec<Value> = grid
        .rows
        .iter()
        .map(|(n, values)| {
            json!({
                "n": n.to_string(),
                "values": values.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    obj.insert("rows".into(), Value::Array(rows));
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable");
    s.push('\n');
    s
}

/// One `index value` pair per line. Tables are read by rows, and the index
/// of cell `(n, j)` is `n * columns + j`.
fn render_bfile(grid: &Grid) -> String {
    let width = grid.columns.len();
    let mut s = String::new();
    for (n, values) in &grid.rows {
        for (j, v) in values.iter().enumerate() {
            writeln!(s, "{} {}", n * width + j, v).expect("write to String");
        }
    }
    s
}

/// Parses `args`, runs the command and writes its output. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let written = match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.text)
            .map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            print!("{}", outcome.text);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

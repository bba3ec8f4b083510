//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure or (with `--strict`) a failed
//! verification, 2 argument or parse error, 3 input that is not a knot.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::braid::{parse_braid, BraidWord, FamilySpec};
use crate::error::Error;
use crate::gauss::gauss_from_closure;
use crate::invariants::{p_invariant, u_invariant, vu_lower_bound};
use crate::search::{scan_torus_virtualizations, table_csv, table_pairs, table_vt2};
use crate::unknotting::{unknotting_sequence, verify_state, IJKState};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_A_KNOT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "vknot", version, about = "Virtual knot invariants of virtual braid closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gauss code, P, u and the vu lower bound of a braid closure.
    Invariants(InvariantsArgs),
    /// Explicit unknotting sequence of the (i,j,k) knot.
    UnknotSeq(UnknotSeqArgs),
    /// Σ|b_m|/2 table for VT(p,q,2).
    Table(TableArgs),
    /// Enumerate virtualizations of a torus braid.
    Scan(ScanArgs),
    /// Check the closed-form virtual unknotting number over a parameter range.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    /// Braid word, tokens `K`, `-K`, `vK`.
    #[arg(long, conflicts_with = "family", required_unless_present = "family", allow_hyphen_values = true)]
    pub braid: Option<String>,
    #[arg(long, requires = "braid")]
    pub strands: Option<usize>,
    /// `vt:P,Q,N` or `ijk:I,J,K`.
    #[arg(long)]
    pub family: Option<FamilySpec>,
    #[arg(long = "p")]
    pub p: bool,
    #[arg(long = "u")]
    pub u: bool,
    #[arg(long)]
    pub bound: bool,
    #[arg(long)]
    pub gauss_code: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct UnknotSeqArgs {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TableKind {
    Vt2,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub kind: TableKind,
    #[arg(long, default_value_t = 8)]
    pub max_p: usize,
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long = "p")]
    pub p: usize,
    #[arg(long = "q")]
    pub q: usize,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Only emit one-component records with nonzero u.
    #[arg(long)]
    pub nonzero_u: bool,
    #[arg(long)]
    pub jsonl: Option<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifyKind {
    Theorem2,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub kind: VerifyKind,
    #[arg(long, default_value_t = 12)]
    pub max_i: usize,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Exit 1 when any row fails.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Invariants(a) => cmd_invariants(a, out),
        Command::UnknotSeq(a) => cmd_unknot_seq(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Scan(a) => cmd_scan(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

#[derive(Debug)]
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MultiComponent { .. } | Error::NotAKnot { .. } => EXIT_NOT_A_KNOT,
            _ => EXIT_USAGE,
        };
        CmdError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError {
            code: EXIT_FAILURE,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for CmdError {
    fn from(e: serde_json::Error) -> Self {
        CmdError {
            code: EXIT_FAILURE,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, CmdError>;

/// Runs `f` on a pool of `workers` threads, or the global pool when unset.
fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CmdError> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(CmdError {
            code: EXIT_USAGE,
            message: "--workers must be at least 1".into(),
        }),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CmdError {
                    code: EXIT_FAILURE,
                    message: e.to_string(),
                })?;
            Ok(pool.install(f))
        }
    }
}

fn input_word(a: &InvariantsArgs) -> Result<BraidWord, Error> {
    match (&a.braid, &a.family) {
        (Some(text), _) => parse_braid(text, a.strands),
        (None, Some(f)) => f.build(),
        (None, None) => unreachable!("clap requires --braid or --family"),
    }
}

pub fn cmd_invariants(a: &InvariantsArgs, out: &mut dyn Write) -> CmdResult {
    let word = input_word(a)?;
    let gd = gauss_from_closure(&word)?;
    let none_selected = !(a.p || a.u || a.bound || a.gauss_code);
    let want = |flag: bool| flag || none_selected;

    if a.json {
        let mut obj = serde_json::Map::new();
        obj.insert("braid".into(), json!(word.to_string()));
        obj.insert("strands".into(), json!(word.strands()));
        obj.insert("crossings".into(), json!(gd.chord_count()));
        if want(a.gauss_code) {
            obj.insert("gauss_code".into(), json!(gd.to_string()));
        }
        if want(a.p) {
            obj.insert("P".into(), serde_json::to_value(p_invariant(&gd))?);
        }
        if want(a.u) {
            obj.insert("u".into(), serde_json::to_value(u_invariant(&gd))?);
        }
        if want(a.bound) {
            obj.insert("bound".into(), json!(vu_lower_bound(&gd)));
        }
        writeln!(out, "{}", serde_json::Value::Object(obj))?;
        return Ok(EXIT_OK);
    }

    let mut lines: Vec<(&str, String)> = Vec::new();
    if want(a.gauss_code) {
        lines.push(("gauss", gd.to_string()));
    }
    if want(a.p) {
        lines.push(("P", p_invariant(&gd).to_string()));
    }
    if want(a.u) {
        lines.push(("u", u_invariant(&gd).to_string()));
    }
    if want(a.bound) {
        lines.push(("bound", vu_lower_bound(&gd).to_string()));
    }
    if let [(_, value)] = &lines[..] {
        writeln!(out, "{value}")?;
    } else {
        for (label, value) in lines {
            writeln!(out, "{label} = {value}")?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_unknot_seq(a: &UnknotSeqArgs, out: &mut dyn Write) -> CmdResult {
    let seq = unknotting_sequence(a.i, a.j, a.k)?;
    let check = if a.verify {
        Some(verify_state(IJKState::new(a.i, a.j, a.k))?)
    } else {
        None
    };
    if a.json {
        let mut v = serde_json::to_value(&seq)?;
        if let Some(row) = &check {
            v["verify"] = serde_json::to_value(row)?;
        }
        writeln!(out, "{v}")?;
    } else {
        for s in &seq.steps {
            writeln!(out, "{:<6} {} -> {}  changes {}", s.kind, s.before, s.after, s.changes)?;
        }
        writeln!(out, "total {}", seq.total_changes)?;
        if let Some(row) = &check {
            writeln!(
                out,
                "verify: lower {} upper {} formula {} u=0 {} -> {}",
                row.lower,
                row.upper,
                row.formula,
                row.states_null_homotopic,
                if row.pass { "pass" } else { "FAIL" }
            )?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> CmdResult {
    let TableKind::Vt2 = a.kind;
    let rows = with_workers(a.workers, || table_vt2(&table_pairs(a.max_p)))??;
    if let Some(path) = &a.csv {
        fs::write(path, table_csv(&rows))?;
    }
    writeln!(out, "(p,q)   sum|b|/2")?;
    for r in &rows {
        writeln!(out, "{:<7} {}", format!("({},{})", r.p, r.q), r.half_sum)?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_scan(a: &ScanArgs, out: &mut dyn Write) -> CmdResult {
    let records = with_workers(a.workers, || scan_torus_virtualizations(a.p, a.q, a.limit))??;
    let mut text = String::new();
    for r in records.iter().filter(|r| !a.nonzero_u || r.has_nonzero_u()) {
        text.push_str(&serde_json::to_string(r)?);
        text.push('\n');
    }
    match &a.jsonl {
        Some(path) => {
            fs::write(path, &text)?;
            let nonzero = records.iter().filter(|r| r.has_nonzero_u()).count();
            writeln!(
                out,
                "scanned {} subsets of ({},{}); {} with nonzero u",
                records.len(),
                a.p,
                a.q,
                nonzero
            )?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let VerifyKind::Theorem2 = a.kind;
    if a.max_i < 2 {
        return Err(CmdError {
            code: EXIT_USAGE,
            message: "--max-i must be at least 2".into(),
        });
    }
    let report = with_workers(a.workers, || crate::unknotting::verify_theorem2(a.max_i))?;
    if a.json {
        for row in &report.rows {
            writeln!(out, "{}", serde_json::to_string(row)?)?;
        }
    } else {
        out.write_all(report.to_table().as_bytes())?;
        let failed = report.failures().count();
        writeln!(out, "{} rows, {} failed", report.rows.len(), failed)?;
    }
    if a.strict && !report.all_pass() {
        return Ok(EXIT_FAILURE);
    }
    Ok(EXIT_OK)
}

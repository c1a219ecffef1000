//! Command-line front end: `expand`, `sums`, `verify` and `list`.
//!
//! Every command renders its whole output into a buffer before writing it,
//! so a run either produces complete output or none. Exit codes: 0 success,
//! 1 verification failures, 2 usage error, 3 domain error.

use std::fmt::Display;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{PolyXY, Rational, Ring, Var};
use crate::error::Error;
use crate::families::{
    atp_sequence, classical_reduce, gen_power_sum, power_sum_direct, BaseKind, Classical,
    FamilyParams, PolySeq, SumKind,
};
use crate::identities::{
    catalog, default_grid, verify_grid, IdentityId, IdentityPoint, VerificationReport,
    REPORT_SCHEMA,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "apostol",
    version,
    about = "Exact Apostol-type polynomials and their symmetry identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (`verify` defaults to json, everything else to text).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F_0 ..= F_n of a family, numerically or as polynomials in x, y.
    Expand(ExpandArgs),
    /// Print a plain, alternating or generalized power sum.
    Sums(SumsArgs),
    /// Check an identity over the default grid or a custom list of points.
    Verify(VerifyArgs),
    /// List every identity with its anchor and parameter substitution.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Atp,
    Bernoulli,
    Euler,
    Genocchi,
}

/// A numeric coordinate or the symbolic indeterminate.
#[derive(Debug, Clone, PartialEq)]
pub enum Coord {
    Sym,
    Value(Rational),
}

impl FromStr for Coord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "sym" {
            Ok(Coord::Sym)
        } else {
            s.parse().map(Coord::Value)
        }
    }
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long, value_enum, default_value = "atp")]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub lambda: Rational,
    /// Ignored for the classical families, which fix it.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub mu: i32,
    /// Ignored for the classical families, which fix it.
    #[arg(long, default_value_t = 0)]
    pub nu: u32,
    /// unit, exp, gould_hopper, laguerre or trunc_exp; the degree may be
    /// attached as in `gould_hopper:2` or given with --s / --r.
    #[arg(long, default_value = "unit")]
    pub base: String,
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    /// A rational or `sym`.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    pub x: Coord,
    /// A rational or `sym`.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    pub y: Coord,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumsKindArg {
    #[value(name = "S")]
    S,
    #[value(name = "M")]
    M,
    #[value(name = "genS")]
    GenS,
    #[value(name = "genM")]
    GenM,
}

#[derive(Debug, Args)]
pub struct SumsArgs {
    #[arg(long, value_enum)]
    pub kind: SumsKindArg,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: u64,
    /// Only used by the generalized kinds.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub lambda: Rational,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub identity: String,
    /// `default`, or an inline JSON list of points.
    #[arg(long, default_value = "default", conflicts_with = "grid_file")]
    pub grid: String,
    /// A JSON file holding a list of points.
    #[arg(long)]
    pub grid_file: Option<PathBuf>,
}

/// A failed command: diagnostic plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_domain_error() {
                EXIT_DOMAIN
            } else {
                EXIT_USAGE
            },
            message: e.to_string(),
        }
    }
}

/// Rendered output and the exit code to finish with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub text: String,
    pub code: i32,
}

fn ok(text: String) -> Result<Rendered, Failure> {
    Ok(Rendered {
        text,
        code: EXIT_OK,
    })
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Runs a parsed command and returns what it would print.
pub fn execute(cli: &Cli) -> Result<Rendered, Failure> {
    match &cli.command {
        Command::Expand(a) => expand(a, cli.format.unwrap_or(Format::Text)),
        Command::Sums(a) => sums(a, cli.format.unwrap_or(Format::Text)),
        Command::Verify(a) => verify(a, cli.format.unwrap_or(Format::Json)),
        Command::List => list(cli.format.unwrap_or(Format::Text)),
    }
}

fn parse_base(a: &ExpandArgs) -> Result<BaseKind, Failure> {
    if a.base.contains(':') {
        if a.s.is_some() || a.r.is_some() {
            return Err(Failure::usage(
                "give the base degree either in --base or with --s/--r",
            ));
        }
        return a.base.parse().map_err(Failure::usage);
    }
    let degree = match (a.s, a.r) {
        (Some(_), Some(_)) => return Err(Failure::usage("--s and --r are mutually exclusive")),
        (s, r) => s.or(r),
    };
    BaseKind::from_tag(&a.base, degree).map_err(Failure::usage)
}

fn expand_with<R: Ring>(a: &ExpandArgs, base: BaseKind, x: &R, y: &R) -> Result<PolySeq<R>, Error> {
    let classical = match a.family {
        FamilyArg::Atp => None,
        FamilyArg::Bernoulli => Some(Classical::Bernoulli),
        FamilyArg::Euler => Some(Classical::Euler),
        FamilyArg::Genocchi => Some(Classical::Genocchi),
    };
    match classical {
        Some(c) => {
            c.unified(a.m, &a.lambda, base).0.validate()?;
            classical_reduce(c, a.m, &a.lambda, x, y, base, a.n)
        }
        None => atp_sequence(
            &FamilyParams::new(a.m, a.lambda.clone(), a.mu, a.nu, base),
            x,
            y,
            a.n,
        ),
    }
}

fn coord_poly(c: &Coord, var: Var) -> PolyXY {
    match c {
        Coord::Sym => PolyXY::var(var),
        Coord::Value(v) => PolyXY::constant(v.clone()),
    }
}

fn expand(a: &ExpandArgs, format: Format) -> Result<Rendered, Failure> {
    let base = parse_base(a)?;
    let symbolic = a.x == Coord::Sym || a.y == Coord::Sym;
    let entries: Vec<String> = match (&a.x, &a.y) {
        (Coord::Value(x), Coord::Value(y)) => expand_with(a, base, x, y)?
            .iter()
            .map(|v| v.to_string())
            .collect(),
        _ => expand_with(
            a,
            base,
            &coord_poly(&a.x, Var::X),
            &coord_poly(&a.y, Var::Y),
        )?
        .iter()
        .map(|v| v.to_string())
        .collect(),
    };
    let coord = |c: &Coord| match c {
        Coord::Sym => "sym".to_string(),
        Coord::Value(v) => v.to_string(),
    };
    let family = match a.family {
        FamilyArg::Atp => "atp",
        FamilyArg::Bernoulli => "bernoulli",
        FamilyArg::Euler => "euler",
        FamilyArg::Genocchi => "genocchi",
    };
    match format {
        Format::Json => {
            let mut params = json!({
                "m": a.m,
                "lambda": a.lambda,
                "base": base,
            });
            if a.family == FamilyArg::Atp {
                params["mu"] = json!(a.mu);
                params["nu"] = json!(a.nu);
            }
            ok(to_json(&json!({
                "schema": REPORT_SCHEMA,
                "family": family,
                "params": params,
                "x": coord(&a.x),
                "y": coord(&a.y),
                "entries": entries,
            })))
        }
        Format::Csv => {
            let column = if symbolic { "polynomial" } else { "value" };
            let rows = entries
                .into_iter()
                .enumerate()
                .map(|(n, e)| vec![n.to_string(), e])
                .collect();
            ok(csv_text(&["n", column], rows))
        }
        Format::Text => ok(entries
            .iter()
            .enumerate()
            .map(|(n, e)| format!("{n}: {e}\n"))
            .collect()),
    }
}

fn sums(a: &SumsArgs, format: Format) -> Result<Rendered, Failure> {
    let (tag, value, lambda) = match a.kind {
        SumsKindArg::S => ("S", power_sum_direct(SumKind::S, a.k, a.n), None),
        SumsKindArg::M => ("M", power_sum_direct(SumKind::M, a.k, a.n), None),
        SumsKindArg::GenS => (
            "genS",
            gen_power_sum(SumKind::S, a.k, a.n, &a.lambda)?,
            Some(&a.lambda),
        ),
        SumsKindArg::GenM => (
            "genM",
            gen_power_sum(SumKind::M, a.k, a.n, &a.lambda)?,
            Some(&a.lambda),
        ),
    };
    match format {
        Format::Json => {
            let mut v = json!({
                "schema": REPORT_SCHEMA,
                "kind": tag,
                "k": a.k,
                "n": a.n,
                "value": value,
            });
            if let Some(l) = lambda {
                v["lambda"] = json!(l);
            }
            ok(to_json(&v))
        }
        Format::Csv => ok(csv_text(
            &["kind", "k", "n", "lambda", "value"],
            vec![vec![
                tag.to_string(),
                a.k.to_string(),
                a.n.to_string(),
                lambda.map(|l| l.to_string()).unwrap_or_default(),
                value.to_string(),
            ]],
        )),
        Format::Text => ok(format!("{value}\n")),
    }
}

fn read_grid(a: &VerifyArgs, id: IdentityId) -> Result<Vec<IdentityPoint>, Failure> {
    let parse = |s: &str| -> Result<Vec<IdentityPoint>, Failure> {
        serde_json::from_str(s).map_err(|e| Failure::usage(format!("invalid grid: {e}")))
    };
    match &a.grid_file {
        Some(path) => {
            let s = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            parse(&s)
        }
        None if a.grid == "default" => Ok(default_grid(id)),
        None => parse(&a.grid),
    }
}

fn report_text(r: &VerificationReport) -> String {
    let s = &r.summary;
    let mut out = format!(
        "{}: {} points, {} passed, {} failed, {} errored\n",
        r.identity, s.total, s.passed, s.failed, s.errored
    );
    for p in r.points.iter().filter(|p| !p.pass) {
        let detail = match (&p.lhs, &p.rhs, &p.error) {
            (_, _, Some(e)) => format!("error: {e}"),
            (Some(l), Some(r), None) => format!("lhs = {l}, rhs = {r}"),
            _ => String::new(),
        };
        out.push_str(&format!(
            "  {} {}\n",
            serde_json::to_string(&p.point).expect("serializable"),
            detail
        ));
    }
    out
}

fn report_csv(r: &VerificationReport) -> String {
    let header = [
        "shape", "n", "m", "c", "d", "lambda", "mu", "nu", "base", "x", "y", "X", "Y", "lhs",
        "rhs", "pass", "category", "error",
    ];
    let opt = |v: &Option<Rational>| v.as_ref().map(|q| q.to_string()).unwrap_or_default();
    let rows = r
        .points
        .iter()
        .map(|p| {
            let q = &p.point;
            let category = serde_json::to_value(p.category).expect("serializable");
            vec![
                q.shape.to_string(),
                q.n.to_string(),
                q.m.to_string(),
                q.c.to_string(),
                q.d.to_string(),
                q.lambda.to_string(),
                q.mu.to_string(),
                q.nu.to_string(),
                q.base.to_string(),
                q.x.to_string(),
                q.y.to_string(),
                q.big_x.to_string(),
                q.big_y.to_string(),
                opt(&p.lhs),
                opt(&p.rhs),
                p.pass.to_string(),
                category.as_str().unwrap_or_default().to_string(),
                p.error.clone().unwrap_or_default(),
            ]
        })
        .collect();
    csv_text(&header, rows)
}

fn verify(a: &VerifyArgs, format: Format) -> Result<Rendered, Failure> {
    let id: IdentityId = a.identity.parse().map_err(Failure::usage)?;
    let grid = read_grid(a, id)?;
    let report = verify_grid(id, &grid);
    let text = match format {
        Format::Json => to_json(&report),
        Format::Csv => report_csv(&report),
        Format::Text => report_text(&report),
    };
    Ok(Rendered {
        text,
        code: if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_FAILURES
        },
    })
}

fn list(format: Format) -> Result<Rendered, Failure> {
    let cat = catalog();
    match format {
        Format::Json => ok(to_json(&cat)),
        Format::Csv => ok(csv_text(
            &["tag", "anchor", "shapes", "base", "substitution"],
            cat.iter()
                .map(|d| {
                    let shapes: Vec<String> = d.shapes.iter().map(|s| s.to_string()).collect();
                    vec![
                        d.tag.to_string(),
                        d.anchor.to_string(),
                        shapes.join(" "),
                        d.base.to_string(),
                        d.substitution.to_string(),
                    ]
                })
                .collect(),
        )),
        Format::Text => {
            let width = cat.iter().map(|d| d.tag.len()).max().unwrap_or(0);
            ok(cat
                .iter()
                .map(|d| format!("{:width$}  {}  [{}]\n", d.tag, d.anchor, d.substitution))
                .collect())
        }
    }
}

/// Caps the global rayon pool from `APX_THREADS`, if set.
pub fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("APX_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::usage(format!(
            "APX_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    // a pool may already exist when embedded; that is not an error here
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Parses `args`, runs the command, writes the output and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = configure_threads().and_then(|_| execute(&cli));
    match outcome {
        Ok(r) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &r.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    use std::io::Write;
                    let mut out = std::io::stdout().lock();
                    out.write_all(r.text.as_bytes())
                        .and_then(|_| out.flush())
                        .map_err(|e| e.to_string())
                }
            };
            match written {
                Ok(()) => r.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

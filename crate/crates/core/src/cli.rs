//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::board::{enumerate_file_placements, enumerate_rook_placements, FerrersBoard};
use crate::error::Error;
use crate::identities::{gen_series_sf, join, sequence_export, sequence_names, SequenceMatch};
use crate::report::{CheckReport, Status};
use crate::stirling::{build_triangle, involution_verify, triangle_from_boards, Kind};
use crate::tiling::TileFamily;
use crate::verify::{run_suite, Bounds, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const TRIANGLE_LIMIT: usize = 40;
const ENUMERATION_LIMIT: usize = 9;

#[derive(Parser, Debug)]
#[command(
    name = "fibrook",
    version,
    about = "Fibonacci analogues of Stirling numbers on Ferrers boards"
)]
struct Cli {
    /// Replaces the default size limits (40 for triangles, 9 for enumeration).
    #[arg(long, global = true, env = "FIBROOK_MAX_N")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    File,
    Rook,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a coefficient triangle (cf, sf, Sf, Lf, cp, sp, Sp).
    Table {
        #[arg(value_parser = parse_kind)]
        kind: Kind,
        n: usize,
        /// Build from board placements instead of the recursion.
        #[arg(long)]
        from_boards: bool,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Triangle and identity size; also the staircase and involution size.
        #[arg(long = "N")]
        big_n: Option<usize>,
        /// Check the involution for this single n (needs --k).
        #[arg(long, requires = "k")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        k: Option<usize>,
        /// Use small bounds.
        #[arg(long)]
        quick: bool,
        /// Treat warnings as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: Output,
    },
    /// List file or rook placements on a board.
    Enumerate {
        /// Board such as "F(0,1,2)".
        board: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Model::File)]
        model: Model,
        #[arg(long, default_value = "F", value_parser = parse_family)]
        family: TileFamily,
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Coefficients of the generating series of Sf(n,k) in n.
    Series {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Regenerate the bundled integer sequences and compare.
    Sequences {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: Output,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
        .map_err(|_| format!("expected one of {}", Suite::NAMES.join(", ")))
}

fn parse_family(s: &str) -> Result<TileFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn check_limit(what: &str, n: usize, limit: usize, force: bool) -> Result<(), Failure> {
    if n > limit && !force {
        return Err(Failure::Usage(format!(
            "{what} size {n} exceeds the limit {limit}; pass --force or raise FIBROOK_MAX_N"
        )));
    }
    Ok(())
}

fn emit(out: &Output, stdout: &mut dyn Write, body: &str) -> io::Result<()> {
    let mut body = body.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &out.output {
        Some(path) => File::create(path)?.write_all(body.as_bytes()),
        None => stdout.write_all(body.as_bytes()),
    }
}

fn no_csv(out: &Output, cmd: &str) -> Result<(), Failure> {
    if out.format == Format::Csv {
        return Err(Failure::Usage(format!("{cmd} has no csv output")));
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let triangle_limit = cli.max_n.unwrap_or(TRIANGLE_LIMIT);
    let enum_limit = cli.max_n.unwrap_or(ENUMERATION_LIMIT);
    match cli.command {
        Command::Table {
            kind,
            n,
            from_boards,
            force,
            out,
        } => {
            let t = if from_boards {
                check_limit("enumeration", n, enum_limit, force)?;
                triangle_from_boards(kind, n)?
            } else {
                check_limit("triangle", n, triangle_limit, force)?;
                build_triangle(kind, n)
            };
            let body = match out.format {
                Format::Json => pretty(&t.to_json()),
                Format::Csv => {
                    let mut buf = Vec::new();
                    t.write_csv(&mut buf).map_err(|e| Failure::Io(e.into()))?;
                    String::from_utf8(buf).expect("csv is utf-8")
                }
                Format::Text => t.to_text(),
            };
            emit(&out, stdout, &body)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            big_n,
            n,
            k,
            quick,
            strict,
            force,
            out,
        } => {
            no_csv(&out, "verify")?;
            if let (Some(n), Some(k)) = (n, k) {
                check_limit("enumeration", n, enum_limit, force)?;
                let r = involution_verify(n, k, &TileFamily::fibonacci());
                let check = r.to_check();
                let body = match out.format {
                    Format::Json => pretty(&serde_json::to_value(&r).expect("serializes")),
                    _ => format!(
                        "{}\ndomain size {}; rook-to-file {}, file-to-rook {}, reduction {} (max depth {}); signed sum {}",
                        status_line(&check),
                        r.domain_size,
                        r.case_counts[0],
                        r.case_counts[1],
                        r.case_counts[2],
                        r.max_reduction_depth,
                        r.signed_sum
                    ),
                };
                emit(&out, stdout, &body)?;
                return Ok(if check.is_fail() { EXIT_FAIL } else { EXIT_OK });
            }
            let mut bounds = if quick {
                Bounds::quick()
            } else {
                Bounds::default()
            };
            if let Some(big_n) = big_n {
                check_limit("triangle", big_n, triangle_limit, force)?;
                bounds.triangle_n = big_n;
                bounds.triangle_p_n = big_n;
                bounds.identities_n = big_n;
                if matches!(
                    suite,
                    Suite::RecursionVsEnumeration
                        | Suite::Products
                        | Suite::Involution
                        | Suite::All
                ) {
                    check_limit("enumeration", big_n, enum_limit, force)?;
                    bounds.staircase_n = big_n;
                    bounds.involution_n = big_n;
                }
            }
            let reports = run_suite(suite, &bounds);
            let body = match out.format {
                Format::Json => pretty(&serde_json::to_value(&reports).expect("serializes")),
                _ => reports
                    .iter()
                    .map(status_line)
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(&out, stdout, &body)?;
            Ok(exit_for(&reports, strict))
        }
        Command::Enumerate {
            board,
            k,
            model,
            family,
            force,
            out,
        } => {
            no_csv(&out, "enumerate")?;
            let b: FerrersBoard = board.parse()?;
            check_limit("enumeration", b.num_columns(), enum_limit, force)?;
            let rows: Vec<(String, crate::Monomial)> = match model {
                Model::File => enumerate_file_placements(&b, &family, k)
                    .iter()
                    .map(|p| (p.to_string(), p.monomial()))
                    .collect(),
                Model::Rook => enumerate_rook_placements(&b, &family, k)?
                    .iter()
                    .map(|p| (p.to_string(), p.monomial()))
                    .collect(),
            };
            let total: crate::PQRPoly =
                rows.iter().map(|(_, m)| crate::PQRPoly::monomial(*m)).sum();
            let body = match out.format {
                Format::Json => pretty(&json!({
                    "board": b.to_string(),
                    "family": family.name(),
                    "model": if model == Model::File { "file" } else { "rook" },
                    "k": k,
                    "placements": rows.iter().map(|(p, w)| json!({"placement": p, "weight": w.to_string()})).collect::<Vec<_>>(),
                    "count": rows.len(),
                    "total": total.to_string(),
                })),
                _ => {
                    let mut s = String::new();
                    for (p, w) in &rows {
                        let p = if p.is_empty() { "(empty)" } else { p };
                        s.push_str(&format!("{p}\t{w}\n"));
                    }
                    s.push_str(&format!("count: {}\ntotal: {total}", rows.len()));
                    s
                }
            };
            emit(&out, stdout, &body)?;
            Ok(EXIT_OK)
        }
        Command::Series { k, order, out } => {
            no_csv(&out, "series")?;
            check_limit("triangle", order, triangle_limit, false)?;
            let s = gen_series_sf(k, order)?;
            let body = match out.format {
                Format::Json => pretty(&json!({
                    "k": k,
                    "order": order,
                    "coefficients": s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                })),
                _ => s
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(n, c)| format!("t^{n}: {c}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(&out, stdout, &body)?;
            Ok(EXIT_OK)
        }
        Command::Sequences {
            name,
            all,
            strict,
            out,
        } => {
            no_csv(&out, "sequences")?;
            let names: Vec<String> = if all {
                sequence_names().into_iter().map(String::from).collect()
            } else {
                name.into_iter().collect()
            };
            let mut reports = Vec::new();
            let mut lines = Vec::new();
            let mut values = Vec::new();
            for name in &names {
                let e = sequence_export(name)?;
                let tag = match &e.outcome {
                    SequenceMatch::Match => "MATCH".to_string(),
                    SequenceMatch::Omitted(_) => "WARN".to_string(),
                    SequenceMatch::Mismatch => "MISMATCH".to_string(),
                };
                let check = e.to_check();
                let detail = check
                    .counterexamples
                    .first()
                    .map(|c| format!(" ({c})"))
                    .unwrap_or_default();
                let line = format!("{} {tag}{detail}", join(&e.generated));
                lines.push(if all { format!("{name}: {line}") } else { line });
                values.push(json!({
                    "name": name,
                    "generated": e.generated.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "fixture": e.fixture.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "source": e.fixture.source,
                    "status": tag,
                }));
                reports.push(check);
            }
            let body = match out.format {
                Format::Json => pretty(&serde_json::Value::Array(values)),
                _ => lines.join("\n"),
            };
            emit(&out, stdout, &body)?;
            Ok(exit_for(&reports, strict))
        }
    }
}

fn status_line(r: &CheckReport) -> String {
    let tag = match r.status {
        Status::Pass => "PASS",
        Status::Warn => "WARN",
        Status::Fail => "FAIL",
    };
    let mut s = format!("{tag} {} [{}]", r.check, r.range);
    for c in r.counterexamples.iter().take(5) {
        s.push_str(&format!("\n  {c}"));
    }
    s
}

fn exit_for(reports: &[CheckReport], strict: bool) -> i32 {
    let bad = reports
        .iter()
        .any(|r| r.is_fail() || (strict && r.is_warn()));
    if bad {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

//! Command-line front end: `gallery list`, `analyze` and `curves`.
//!
//! Exit codes: 0 success, 1 usage or input error (including expression
//! syntax errors), 2 evaluation/domain error, 3 config file error.

mod config;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result, Stage};
use crate::funcspace::{Gallery, Grid, Interval};
use crate::report::{classify, emit_curves, emit_report, Format};

pub use config::{
    parse_ns, sequence_and_limit, AnalysisConfig, IntervalConfig, NsConfig, Resolved,
    TolerancesConfig, DEFAULT_NS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_EVAL: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "uniconv",
    version,
    about = "Diagnose uniform convergence of function sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Built-in example sequences.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Classify a sequence and print the convergence report.
    Analyze(AnalyzeArgs),
    /// Write sampled curves and the sup-deviation trend as CSV.
    Curves(CurvesArgs),
}

#[derive(Debug, Subcommand)]
enum GalleryAction {
    /// List gallery ids with descriptions.
    List,
}

#[derive(Debug, Args)]
struct SequenceArgs {
    /// Gallery id or expression in x and n.
    #[arg(long)]
    seq: Option<String>,
    /// Limit expression in x (required for expressions).
    #[arg(long)]
    limit: Option<String>,
    /// Interval endpoints.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
    interval: Option<Vec<f64>>,
    /// Grid size.
    #[arg(long = "grid")]
    grid: Option<usize>,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    sequence: SequenceArgs,
    /// Indices: lo..hi, lo..hi:step, lo..hi:geometric or a comma list.
    #[arg(long)]
    ns: Option<String>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON analysis config; replaces the sequence flags.
    #[arg(long, conflicts_with_all = ["seq", "limit", "interval", "grid", "ns"])]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CurvesArgs {
    #[command(flatten)]
    sequence: SequenceArgs,
    #[arg(long)]
    ns: String,
    /// Curves CSV path; the trend CSV gets a `_trend` suffix.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, A>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Gallery {
            action: GalleryAction::List,
        } => list_gallery(stdout),
        Command::Analyze(a) => analyze(a, stdout, stderr),
        Command::Curves(c) => curves(c, stdout),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error [{} stage]: {}", e.root().stage(), e);
            exit_code(&e)
        }
    }
}

/// Exit code for an error, judged by its innermost cause.
pub fn exit_code(e: &Error) -> i32 {
    match e.root().stage() {
        Stage::Eval => EXIT_EVAL,
        Stage::Config => EXIT_CONFIG,
        Stage::Parse | Stage::Input | Stage::Metric | Stage::Criteria => EXIT_USAGE,
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Input(format!("cannot write {}: {}", path.display(), e))
}

fn list_gallery(stdout: &mut dyn Write) -> Result<()> {
    for g in Gallery::ALL {
        let _ = writeln!(
            stdout,
            "{:<20} Example {}  {}",
            g.id(),
            g.example_number(),
            g.description()
        );
    }
    Ok(())
}

fn from_flags(s: &SequenceArgs, ns: Option<&str>) -> Result<AnalysisConfig> {
    let sequence = s
        .seq
        .clone()
        .ok_or_else(|| Error::Input("--seq or --config is required".into()))?;
    Ok(AnalysisConfig {
        sequence,
        limit: s.limit.clone(),
        interval: s
            .interval
            .as_ref()
            .map(|v| IntervalConfig { a: v[0], b: v[1] }),
        ns: ns.map(|t| NsConfig::Spec(t.to_string())),
        grid_size: s.grid,
        ..AnalysisConfig::default()
    })
}

fn analyze(a: AnalyzeArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let resolved = match &a.config {
        Some(path) => AnalysisConfig::from_path(path)?
            .resolve()
            .map_err(|e| match e {
                // Bad values in a config file are config errors.
                Error::Input(msg) => Error::Config(msg),
                other => other,
            })?,
        None => from_flags(&a.sequence, a.ns.as_deref())?.resolve()?,
    };
    let format = Format::from(a.format);
    let report = match classify(
        &resolved.seq,
        &resolved.lim,
        resolved.interval,
        &resolved.ns,
        &resolved.config,
    ) {
        Ok(r) => r,
        Err(Error::Analysis {
            stage,
            source,
            partial,
        }) => {
            let _ = writeln!(stderr, "partial report:");
            let _ = write!(stderr, "{}", emit_report(&partial, format));
            return Err(Error::Analysis {
                stage,
                source,
                partial,
            });
        }
        Err(e) => return Err(e),
    };
    let text = emit_report(&report, format);
    match &a.out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_error(path, e)),
        None => {
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

/// `dir/name.ext` -> `dir/name_trend.ext`.
pub fn trend_path(path: &Path) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{}_trend.{}", stem, ext.to_string_lossy()),
        None => format!("{}_trend", stem),
    };
    path.with_file_name(name)
}

fn curves(c: CurvesArgs, stdout: &mut dyn Write) -> Result<()> {
    let cfg = from_flags(&c.sequence, Some(&c.ns))?;
    let (seq, lim, default_interval) = sequence_and_limit(&cfg.sequence, cfg.limit.as_deref())?;
    let interval = match cfg.interval {
        Some(IntervalConfig { a, b }) => Interval::new(a, b)?,
        None => default_interval,
    };
    let ns = parse_ns(&c.ns)?;
    let grid = Grid::uniform(interval, c.sequence.grid.unwrap_or(4097))?;
    let files = emit_curves(&seq, &lim, &ns, &grid)?;
    let trend = trend_path(&c.out);
    std::fs::write(&c.out, files.curves).map_err(|e| io_error(&c.out, e))?;
    std::fs::write(&trend, files.trend).map_err(|e| io_error(&trend, e))?;
    let _ = writeln!(stdout, "wrote {}", c.out.display());
    let _ = writeln!(stdout, "wrote {}", trend.display());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("uniconv").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn lists_six_entries() {
        let (code, out, _) = run_args(&["gallery", "list"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        assert!(out.contains("tent_spike") && out.contains("Example 4"));
    }

    #[test]
    fn syntax_error_exits_one_with_position() {
        let (code, _, err) = run_args(&["analyze", "--seq", "sqrt(x", "--limit", "0"]);
        assert_eq!(code, 1);
        assert!(
            err.contains("parse") && err.contains("position 5"),
            "{}",
            err
        );
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, _, err) = run_args(&["analyze", "--bogus"]);
        assert_eq!(code, 1);
        assert!(!err.is_empty());
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn trend_suffix() {
        assert_eq!(
            trend_path(Path::new("a/b.csv")),
            PathBuf::from("a/b_trend.csv")
        );
        assert_eq!(trend_path(Path::new("out")), PathBuf::from("out_trend"));
    }
}

//! Command-line front end for the `detpinv` library.
//!
//! Every command reads matrices in the text format accepted by
//! [`detpinv::parse_matrix`] and writes diagnostics as `#` comment lines
//! followed by the result, so exact output can be fed back in as input.

mod demo;
mod report;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use detpinv::{
    classify, count_subsets, lss_ax, lss_axb, lss_xa, mp_det, mp_det_variant, parse_matrix,
    penrose_check, with_threads, Error, ExactMatrix, GramVariant, RankProfile, SolvePath,
};

pub use report::OutputMode;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DIMENSION: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

pub const DEFAULT_WARN_TERMS: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Pinv { a: PathBuf },
    SolveAx { a: PathBuf, b: PathBuf },
    SolveXa { a: PathBuf, b: PathBuf },
    SolveAxb { a: PathBuf, b: PathBuf, d: PathBuf },
    Check { a: PathBuf, x: PathBuf },
    Demo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub variant: Option<GramVariant>,
    pub path: SolvePath,
    pub output: OutputMode,
    pub threads: Option<usize>,
    pub warn_terms: u128,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            variant: None,
            path: SolvePath::default(),
            output: OutputMode::Exact,
            threads: None,
            warn_terms: DEFAULT_WARN_TERMS,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "detpinv",
    version,
    about = "Exact Moore-Penrose inverses and minimum-norm least-squares solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Gram matrix used by `pinv`.
    #[arg(long, global = true, value_enum)]
    variant: Option<VariantArg>,
    /// Formula used by `solve-axb` (default: both in debug builds, db otherwise).
    #[arg(long, global = true, value_enum)]
    path: Option<PathArg>,
    /// exact, decimal:<k> or json.
    #[arg(long, global = true, default_value = "exact")]
    output: OutputMode,
    /// Worker threads for entry-level parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Warn when C(n,r)*C(m,r) exceeds this.
    #[arg(long, global = true, default_value_t = DEFAULT_WARN_TERMS)]
    warn_terms: u128,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Moore-Penrose inverse of A.
    Pinv { a: PathBuf },
    /// Minimum-norm least-squares solution of AX = B.
    SolveAx { a: PathBuf, b: PathBuf },
    /// Minimum-norm least-squares solution of XA = B.
    SolveXa { a: PathBuf, b: PathBuf },
    /// Minimum-norm least-squares solution of AXB = D.
    SolveAxb { a: PathBuf, b: PathBuf, d: PathBuf },
    /// Verify the four Penrose equations for (A, X).
    Check { a: PathBuf, x: PathBuf },
    /// Run the built-in 4x3 worked example.
    Demo,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Column,
    Row,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PathArg {
    Db,
    Da,
    Both,
}

impl From<Cli> for JobSpec {
    fn from(cli: Cli) -> Self {
        let command = match cli.command {
            CliCommand::Pinv { a } => Command::Pinv { a },
            CliCommand::SolveAx { a, b } => Command::SolveAx { a, b },
            CliCommand::SolveXa { a, b } => Command::SolveXa { a, b },
            CliCommand::SolveAxb { a, b, d } => Command::SolveAxb { a, b, d },
            CliCommand::Check { a, x } => Command::Check { a, x },
            CliCommand::Demo => Command::Demo,
        };
        let o = cli.opts;
        JobSpec {
            command,
            variant: o.variant.map(|v| match v {
                VariantArg::Column => GramVariant::ColumnGram,
                VariantArg::Row => GramVariant::RowGram,
            }),
            path: o.path.map_or_else(SolvePath::default, |p| match p {
                PathArg::Db => SolvePath::DB,
                PathArg::Da => SolvePath::DA,
                PathArg::Both => SolvePath::Both,
            }),
            output: o.output,
            threads: o.threads,
            warn_terms: o.warn_terms,
        }
    }
}

/// Parse arguments (including the program name) and run. Usage errors exit
/// with [`EXIT_PARSE`]; `--help` and `--version` exit 0.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&JobSpec::from(cli), out, err),
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{}", e.render());
            EXIT_OK
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            EXIT_PARSE
        }
    }
}

#[derive(Debug)]
enum Failure {
    Io(PathBuf, std::io::Error),
    Input(PathBuf, Error),
    Compute(Error),
    Output(std::io::Error),
    CheckFailed,
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_, Error::DimensionMismatch { .. })
            | Failure::Compute(Error::DimensionMismatch { .. }) => EXIT_DIMENSION,
            Failure::CheckFailed => EXIT_CHECK_FAILED,
            _ => EXIT_PARSE,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(p, e) => write!(f, "{}: {e}", p.display()),
            Failure::Input(p, e) => write!(f, "{}: {e}", p.display()),
            Failure::Compute(e) => write!(f, "{e}"),
            Failure::Output(e) => write!(f, "writing output: {e}"),
            Failure::CheckFailed => f.write_str("Penrose check failed"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Output(e)
    }
}

/// Execute a job, writing the report to `out` and warnings/errors to `err`.
/// Returns the process exit status.
pub fn run(job: &JobSpec, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let outcome = match job.threads {
        Some(k) => {
            let mut buf = Vec::new();
            let mut ebuf = Vec::new();
            let r = with_threads(k.max(1), || execute(job, &mut buf, &mut ebuf));
            let _ = out.write_all(&buf);
            let _ = err.write_all(&ebuf);
            r
        }
        None => execute(job, out, err),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::CheckFailed) => EXIT_CHECK_FAILED,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn read_matrix(path: &Path) -> Result<ExactMatrix, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    parse_matrix(&text).map_err(|e| Failure::Input(path.to_path_buf(), e))
}

/// `C(n,r)·C(m,r)`, saturating.
pub fn term_count(profile: &RankProfile) -> u128 {
    let c = |n| count_subsets(profile.rank, n).unwrap_or(0);
    c(profile.cols).saturating_mul(c(profile.rows))
}

fn warn_cost(
    name: &str,
    profile: &RankProfile,
    job: &JobSpec,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let terms = term_count(profile);
    if terms > job.warn_terms {
        writeln!(
            err,
            "warning: {name}: minor-sum term count C({n},{r})*C({m},{r}) = {terms} exceeds {}",
            job.warn_terms,
            n = profile.cols,
            m = profile.rows,
            r = profile.rank,
        )?;
    }
    Ok(())
}

fn execute(job: &JobSpec, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let mut rep = report::Report::new(job.output);
    match &job.command {
        Command::Pinv { a } => {
            let a = read_matrix(a)?;
            let profile = classify(&a);
            warn_cost("A", &profile, job, err)?;
            rep.profile("rank A", &profile);
            rep.subset_counts(&profile);
            let x = match job.variant {
                Some(v) if profile.rank > 0 => {
                    rep.note("variant", variant_name(v));
                    mp_det_variant(&a, v)?
                }
                Some(_) => {
                    rep.note("variant", "ignored for a zero matrix");
                    mp_det(&a)
                }
                None => mp_det(&a),
            };
            rep.result("pinv", &x);
        }
        Command::SolveAx { a, b } => {
            let (a, b) = (read_matrix(a)?, read_matrix(b)?);
            let profile = classify(&a);
            warn_cost("A", &profile, job, err)?;
            let sol = lss_ax(&a, &b)?;
            rep.profile("rank A", &profile);
            rep.solution(&sol);
        }
        Command::SolveXa { a, b } => {
            let (a, b) = (read_matrix(a)?, read_matrix(b)?);
            let profile = classify(&a);
            warn_cost("A", &profile, job, err)?;
            let sol = lss_xa(&a, &b)?;
            rep.profile("rank A", &profile);
            rep.solution(&sol);
        }
        Command::SolveAxb { a, b, d } => {
            let (a, b, d) = (read_matrix(a)?, read_matrix(b)?, read_matrix(d)?);
            let (pa, pb) = (classify(&a), classify(&b));
            warn_cost("A", &pa, job, err)?;
            warn_cost("B", &pb, job, err)?;
            let sol = lss_axb(&a, &b, &d, job.path)?;
            rep.profile("rank A", &pa);
            rep.profile("rank B", &pb);
            rep.note("path", &format!("{:?}", job.path));
            rep.solution(&sol);
        }
        Command::Check { a, x } => {
            let (a, x) = (read_matrix(a)?, read_matrix(x)?);
            let report = penrose_check(&a, &x)?;
            rep.penrose(&report);
            rep.write(out)?;
            return if report.all_pass() {
                Ok(())
            } else {
                Err(Failure::CheckFailed)
            };
        }
        Command::Demo => {
            demo::build(&mut rep, job.path)?;
        }
    }
    rep.write(out)?;
    Ok(())
}

fn variant_name(v: GramVariant) -> &'static str {
    match v {
        GramVariant::ColumnGram => "column",
        GramVariant::RowGram => "row",
    }
}

impl FromStr for OutputMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(OutputMode::Exact),
            "json" => Ok(OutputMode::Json),
            _ => {
                let digits = s
                    .strip_prefix("decimal:")
                    .ok_or_else(|| format!("expected exact, decimal:<k> or json, got '{s}'"))?;
                digits
                    .parse()
                    .map(OutputMode::Decimal)
                    .map_err(|_| format!("invalid digit count '{digits}'"))
            }
        }
    }
}

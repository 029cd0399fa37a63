//! The `klcat` command line: argument parsing, configuration, the
//! subcommands and report output. [`run`] is the whole program minus the
//! process boundary, so it can be driven from tests.

mod commands;
pub mod config;
pub mod emit;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use klcat_core::weyl::DEFAULT_ORDER_CAP;
use klcat_core::{BasisKind, BlockSuite, Suite};
use thiserror::Error;

pub use config::{Config, CONFIG_ENV};
pub use emit::{emit, EmitOptions, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] klcat_core::Error),
    #[error("config: {0}")]
    Config(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {reason}")]
    Write { path: String, reason: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            // the block could not be set up: a failed check, not bad input
            CliError::Core(klcat_core::Error::AdjunctionSolve(_))
            | CliError::Core(klcat_core::Error::CatalogCheck(_)) => EXIT_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "klcat",
    version,
    about = "Kazhdan-Lusztig combinatorics and category O checks"
)]
struct Cli {
    /// key = value config file (keys: cap, format, width); overrides $KLCAT_CONFIG
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Refuse Weyl groups with more elements than this
    #[arg(long, global = true)]
    cap: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weyl group data: order, longest element, Bruhat covers
    Weyl(WeylArgs),
    /// Coefficient of H_y in a Kazhdan-Lusztig basis element
    ///
    /// With the default basis C the answer is h_{y,x} in the v-normalization.
    /// The classical polynomial in q is P_{y,x}(q) = v^(l(y)-l(x)) h_{y,x}(v) read at v^-2 = q,
    /// e.g. h = v^4 + v^2 for l(x) - l(y) = 4 gives P = 1 + q.
    Klpoly(KlpolyArgs),
    /// Expand a basis class of the Grothendieck group in another basis
    BasisChange(BasisChangeArgs),
    /// Run the Weyl, Hecke and Grothendieck-group checks for a Cartan type
    Verify(VerifyArgs),
    /// Run the checks of the rank-one block algebra
    BlockCheck(BlockCheckArgs),
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Wrap width for table output
    #[arg(long)]
    width: Option<usize>,
}

#[derive(Debug, Args)]
struct WeylArgs {
    #[arg(long = "type", value_name = "TYPE")]
    cartan: String,
    /// Only order, length and reduced word of the longest element
    #[arg(long)]
    info: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KlBasis {
    /// C_x, congruent to H_x modulo vZ[v]
    C,
    /// C'_x, congruent to H_x modulo v^-1 Z[v^-1]
    CPrime,
}

#[derive(Debug, Args)]
struct KlpolyArgs {
    #[arg(long = "type", value_name = "TYPE")]
    cartan: String,
    #[arg(long, value_name = "WORD")]
    x: String,
    /// Omit to list every nonzero coefficient
    #[arg(long, value_name = "WORD")]
    y: Option<String>,
    #[arg(long, value_enum, default_value_t = KlBasis::C)]
    basis: KlBasis,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct BasisChangeArgs {
    #[arg(long = "type", value_name = "TYPE")]
    cartan: String,
    #[arg(long)]
    from: BasisKind,
    #[arg(long)]
    to: BasisKind,
    #[arg(long, value_name = "WORD")]
    x: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "type", value_name = "TYPE")]
    cartan: String,
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// Include elapsed milliseconds per check
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct BlockCheckArgs {
    #[arg(long, default_value = "all")]
    suite: BlockSuite,
    #[arg(long)]
    timings: bool,
    /// Also write the homology table of the wall-crossing complexes as CSV
    #[arg(long, value_name = "PATH")]
    homology: Option<PathBuf>,
    #[command(flatten)]
    out: Output,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &CliError) -> Self {
        Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Runs the program with `args` (including the program name), taking the
/// config path from `$KLCAT_CONFIG` if `--config` is not given.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var_os(CONFIG_ENV).map(PathBuf::from))
}

pub fn run_with_env<I, T>(args: I, env_config: Option<PathBuf>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(EXIT_OK, text)
            };
        }
    };
    match dispatch(cli, env_config) {
        Ok(out) => out,
        Err(e) => Outcome::error(&e),
    }
}

struct Settings {
    cap: u128,
    format: Format,
    opts: EmitOptions,
}

fn settings(
    cli_cap: Option<u128>,
    cfg: &Config,
    out: &Output,
    timings: bool,
) -> Result<Settings, CliError> {
    let width = out.width.or(cfg.width).unwrap_or(emit::DEFAULT_WIDTH);
    if width == 0 {
        return Err(CliError::Usage("--width must be positive".into()));
    }
    Ok(Settings {
        cap: cli_cap.or(cfg.cap).unwrap_or(DEFAULT_ORDER_CAP),
        format: out.format.or(cfg.format).unwrap_or(Format::Json),
        opts: EmitOptions { width, timings },
    })
}

fn dispatch(cli: Cli, env_config: Option<PathBuf>) -> Result<Outcome, CliError> {
    let cfg = match cli.config.or(env_config) {
        Some(path) => Config::load(&path)?,
        None => Config::default(),
    };
    let cap = cli.cap;
    match cli.command {
        Command::Weyl(a) => {
            let s = settings(cap, &cfg, &a.out, false)?;
            commands::weyl(&a.cartan, a.info, &s).map(|t| Outcome::ok(EXIT_OK, t))
        }
        Command::Klpoly(a) => {
            let s = settings(cap, &cfg, &a.out, false)?;
            commands::klpoly(&a.cartan, &a.x, a.y.as_deref(), a.basis, &s)
                .map(|t| Outcome::ok(EXIT_OK, t))
        }
        Command::BasisChange(a) => {
            let s = settings(cap, &cfg, &a.out, false)?;
            commands::basis_change(&a.cartan, a.from, a.to, &a.x, &s)
                .map(|t| Outcome::ok(EXIT_OK, t))
        }
        Command::Verify(a) => {
            let s = settings(cap, &cfg, &a.out, a.timings)?;
            let report = commands::verify(&a.cartan, a.suite, &s)?;
            let code = if report.pass() { EXIT_OK } else { EXIT_FAILED };
            Ok(Outcome::ok(code, emit(&report, s.format, s.opts)))
        }
        Command::BlockCheck(a) => {
            let s = settings(cap, &cfg, &a.out, a.timings)?;
            let report = commands::block_check(a.suite, a.homology.as_deref())?;
            let code = if report.pass() { EXIT_OK } else { EXIT_FAILED };
            Ok(Outcome::ok(code, emit(&report, s.format, s.opts)))
        }
    }
}

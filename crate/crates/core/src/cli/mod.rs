//! The `bethe-symm` command line: `verify`, `eval` and `list`.

pub mod config;
pub mod eval;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::lattice::ModelKind;
use crate::verifier::{matching_tasks, run_suite, Mode, Profile, RunOptions, VerificationReport};

use self::config::{parse_bool, ConfigFile};
use self::eval::EvalArgs;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INFRA: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

pub const SEED_ENV: &str = "BETHE_SYMM_SEED";
const DEFAULT_SEED: u64 = 1;

#[derive(Parser, Debug)]
#[command(name = "bethe-symm", version, about = "Exact checks of vertex-model partition functions against symmetric polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification tasks and report.
    Verify(VerifyArgs),
    /// Evaluate one formula exactly.
    Eval(Box<EvalArgs>),
    /// List models or tasks.
    List(ListArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Default)]
pub struct VerifyArgs {
    /// Task id glob; `all` runs everything.
    #[arg(long)]
    pub suite: Option<String>,
    /// smoke, standard or deep.
    #[arg(long)]
    pub profile: Option<String>,
    /// Defaults to $BETHE_SYMM_SEED, then 1.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Keep every variable symbolic instead of sampling points.
    #[arg(long)]
    pub symbolic: bool,
    /// Skip instances with any size above this bound.
    #[arg(long)]
    pub max_size: Option<usize>,
    /// key=value file with defaults for the flags above.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListWhat {
    Models,
    Tasks,
}

#[derive(Args, Debug)]
pub struct ListArgs {
    #[arg(value_enum)]
    pub what: ListWhat,
    /// Glob on names or ids.
    #[arg(long)]
    pub filter: Option<String>,
}

/// Fully resolved verify settings: flags, then config file, then defaults.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub suite: String,
    pub profile: Profile,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub symbolic: bool,
    pub max_size: Option<usize>,
}

impl RunConfig {
    pub fn resolve(args: &VerifyArgs, env_seed: Option<String>) -> Result<Self, Error> {
        let file = match &args.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let seed = match (args.seed, file.get("seed"), env_seed) {
            (Some(s), _, _) => s,
            (None, Some(s), _) => parse_seed(s)?,
            (None, None, Some(s)) => parse_seed(&s)?,
            _ => DEFAULT_SEED,
        };
        let profile = match (&args.profile, file.get("profile")) {
            (Some(p), _) => p.parse()?,
            (None, Some(p)) => p.parse()?,
            _ => Profile::Standard,
        };
        let format = match (args.format, file.get("format")) {
            (Some(f), _) => f,
            (None, Some(f)) => Format::from_str(f, true).map_err(|_| Error::Parse(format!("unknown format {f:?}")))?,
            _ => Format::Text,
        };
        let max_size = match (args.max_size, file.get("max-size")) {
            (Some(m), _) => Some(m),
            (None, Some(m)) => Some(m.parse().map_err(|_| Error::Parse(format!("bad max-size {m:?}")))?),
            _ => None,
        };
        Ok(Self {
            suite: args
                .suite
                .clone()
                .or_else(|| file.get("suite").map(String::from))
                .unwrap_or_else(|| "all".into()),
            profile,
            seed,
            output: args.output.clone().or_else(|| file.get("output").map(PathBuf::from)),
            format,
            symbolic: args.symbolic || file.get("symbolic").map(parse_bool).transpose()?.unwrap_or(false),
            max_size,
        })
    }

    pub fn run_options(&self) -> RunOptions {
        let mut opts = RunOptions::new(self.profile, self.seed);
        opts.max_size = self.max_size;
        if self.symbolic {
            opts.mode = Mode::Symbolic;
        }
        opts
    }
}

fn parse_seed(s: &str) -> Result<u64, Error> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad seed {s:?}")))
}

/// Exit status implied by a set of reports.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

pub fn render_text(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&r.summary_line());
        s.push('\n');
        for f in &r.failures {
            s.push_str("  failure:");
            for (k, v) in &f.inputs {
                s.push_str(&format!(" {k}={v}"));
            }
            s.push_str(&format!("\n    lhs = {}\n    rhs = {}\n", f.lhs, f.rhs));
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    s.push_str(&format!("{passed}/{} tasks passed\n", reports.len()));
    s
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = match RunConfig::resolve(args, std::env::var(SEED_ENV).ok()) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match matching_tasks(&cfg.suite) {
        Ok(t) if t.is_empty() => {
            let _ = writeln!(err, "error: no task matches {:?}", cfg.suite);
            return EXIT_USAGE;
        }
        Ok(_) => {}
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    }
    let reports = match run_suite(&cfg.suite, &cfg.run_options()) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INFRA;
        }
    };
    let body = match cfg.format {
        Format::Json => match serde_json::to_string_pretty(&reports) {
            Ok(s) => s + "\n",
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INFRA;
            }
        },
        Format::Text => render_text(&reports),
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &body).map(|_| {
            for r in &reports {
                let _ = writeln!(out, "{}", r.summary_line());
            }
        }),
        None => out.write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write report: {e}");
        return EXIT_INFRA;
    }
    exit_code(&reports)
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match eval::evaluate(args) {
        Ok(v) => {
            let _ = writeln!(out, "{}", eval::render(&v));
            EXIT_OK
        }
        Err(e @ (Error::SingularPoint(_) | Error::DivisionByZero)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_SINGULAR
        }
        Err(
            e @ (Error::Parse(_)
            | Error::ShapeMismatch(_)
            | Error::BoxViolation(_)
            | Error::NotStrictlyIncreasing(_)
            | Error::CapExceeded { .. }
            | Error::MissingVariable(_)
            | Error::InvalidModel(_)),
        ) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INFRA
        }
    }
}

fn name_filter(filter: &Option<String>) -> Result<Option<glob::Pattern>, Error> {
    filter
        .as_deref()
        .map(|f| {
            let lead = if f.starts_with('*') { "" } else { "*" };
            let tail = if f.ends_with('*') { "" } else { "*" };
            glob::Pattern::new(&format!("{lead}{f}{tail}")).map_err(|e| Error::Parse(e.to_string()))
        })
        .transpose()
}

fn cmd_list(args: &ListArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match args.what {
        ListWhat::Models => {
            let pattern = match name_filter(&args.filter) {
                Ok(p) => p,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            for k in ModelKind::ALL {
                if pattern.as_ref().is_none_or(|p| p.matches(k.name())) {
                    let _ = writeln!(out, "{:<22} {}", k.name(), k.summary());
                }
            }
        }
        ListWhat::Tasks => {
            let tasks = match matching_tasks(args.filter.as_deref().unwrap_or("all")) {
                Ok(t) => t,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            for t in tasks {
                let _ = writeln!(out, "{:<34} {} [{}]", t.id(), t.about(), t.anchor());
            }
        }
    }
    EXIT_OK
}

/// Parses `argv` (program name first) and runs the command, returning the
/// exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match &cli.command {
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Eval(a) => cmd_eval(a, out, err),
        Command::List(a) => cmd_list(a, out, err),
    }
}

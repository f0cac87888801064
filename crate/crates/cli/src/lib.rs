//! The `whk` command-line tool: loads structure-constant documents (or
//! builtin examples), runs the checks of `whk-core` on them and prints a
//! report as text or JSON.
//!
//! Exit codes: [`EXIT_PASS`] when every check passes, [`EXIT_FAIL`] for a
//! mathematical failure (a failed check or an unmet precondition),
//! [`EXIT_INPUT`] for unreadable, malformed or inconsistent input and usage
//! errors.

pub mod commands;
mod error;
pub mod format;
pub mod input;
pub mod mutations;
pub mod report;
pub mod suite;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use commands::Method;
pub use error::CliError;
use mutations::Mutation;
use report::CliReport;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Environment variable capping the worker threads used by the library.
pub const THREADS_ENV: &str = "WHK_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "whk",
    version,
    about = "Exact computations with finite-dimensional weak Hopf algebras"
)]
pub struct Cli {
    /// Output format of the report.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Sources are paths to JSON documents or `builtin:NAME`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of an algebra, coalgebra, weak Hopf algebra, module
    /// algebra or groupoid.
    Validate {
        source: String,
        /// Corrupt the weak Hopf algebra before validating it.
        #[arg(long, value_enum)]
        mutate: Option<Mutation>,
    },
    /// Counital subalgebras, center, quantum commutativity and coradical
    /// filtration of a weak Hopf algebra.
    Analyze { source: String },
    /// The (e,f)-inverse of u in Hom(C, A).
    EfInverse {
        /// Coalgebra C: a coalgebra, weak Hopf or groupoid source.
        source: String,
        /// Algebra A; defaults to the algebra of a weak Hopf source.
        #[arg(long)]
        target: Option<String>,
        /// A named map (id, antipode, eps_t, eps_s, unit, zero) or a conv_map source.
        #[arg(long)]
        u: String,
        #[arg(long)]
        e: String,
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value_t = Method::Solve)]
        method: Method,
        /// Inverse of u on the coradical, seeding the series; solved for when absent.
        #[arg(long)]
        psi0: Option<String>,
    },
    /// Build the smash product of a module algebra with its weak Hopf algebra.
    Smash {
        wha: String,
        action: String,
        /// Also evaluate the five-way battery and, for groupoid algebras, the
        /// conjugation action criterion.
        #[arg(long)]
        battery: bool,
    },
    /// Run every check on the builtin corpus.
    Corpus {
        #[arg(long)]
        run_all: bool,
        /// Restrict to these entries (repeatable).
        #[arg(long)]
        filter: Vec<String>,
        /// Corrupt every builtin weak Hopf algebra first (the run must fail).
        #[arg(long, value_enum)]
        inject_mutation: Option<Mutation>,
    },
    /// Print a source as a normalized JSON document.
    Export { source: String },
    /// List builtin sources.
    Builtins,
}

enum Output {
    Report(CliReport),
    Text(String),
}

fn execute(cmd: &Command) -> Result<Output, CliError> {
    Ok(match cmd {
        Command::Validate { source, mutate } => {
            Output::Report(commands::validate(source, *mutate)?)
        }
        Command::Analyze { source } => Output::Report(commands::analyze(source)?),
        Command::EfInverse {
            source,
            target,
            u,
            e,
            f,
            method,
            psi0,
        } => Output::Report(commands::ef_inverse(&commands::EfInverseArgs {
            source,
            target: target.as_deref(),
            u,
            e,
            f,
            method: *method,
            psi0: psi0.as_deref(),
        })?),
        Command::Smash {
            wha,
            action,
            battery,
        } => Output::Report(commands::smash(wha, action, *battery)?),
        Command::Corpus {
            run_all,
            filter,
            inject_mutation,
        } => {
            if !run_all {
                return Ok(Output::Text(format!(
                    "corpus entries: {}\nrun them with `whk corpus --run-all`\n",
                    suite::ENTRIES.join(", ")
                )));
            }
            Output::Report(suite::run_all(filter, *inject_mutation))
        }
        Command::Export { source } => {
            Output::Text(format::to_json(&input::load(source)?.to_document()) + "\n")
        }
        Command::Builtins => Output::Text(
            input::builtin_names()
                .iter()
                .map(|n| format!("{}{n}\n", input::BUILTIN_PREFIX))
                .collect(),
        ),
    })
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_INPUT;
            }
            let _ = write!(out, "{e}");
            return EXIT_PASS;
        }
    };
    match execute(&cli.command) {
        Ok(Output::Text(s)) => {
            let _ = write!(out, "{s}");
            EXIT_PASS
        }
        Ok(Output::Report(r)) => {
            let _ = match cli.format {
                OutputFormat::Text => write!(out, "{}", r.to_text()),
                OutputFormat::Json => writeln!(out, "{}", r.to_json()),
            };
            if r.passed() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Sizes the global thread pool from [`THREADS_ENV`].
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("whk").chain(args.iter().copied()),
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
    fn exit_codes() {
        assert_eq!(run_capture(&["validate", "builtin:qs3"]).0, EXIT_PASS);
        assert_eq!(
            run_capture(&["validate", "builtin:p2", "--mutate", "antipode-identity"]).0,
            EXIT_FAIL
        );
        assert_eq!(run_capture(&["validate", "builtin:nope"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run_capture(&["--help"]).0, EXIT_PASS);
    }

    #[test]
    fn json_output_is_deterministic() {
        let a = run_capture(&["analyze", "builtin:qs3", "--format", "json"]);
        let b = run_capture(&["analyze", "builtin:qs3", "--format", "json"]);
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a.1).unwrap();
        assert_eq!(v["verdict"], "pass");
    }

    #[test]
    fn builtins_listing_round_trips_through_export() {
        let (code, out, _) = run_capture(&["builtins"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.lines().any(|l| l == "builtin:p2-ht-action"));
        let (code, json, _) = run_capture(&["export", "builtin:p2"]);
        assert_eq!(code, EXIT_PASS);
        assert!(json.contains("\"kind\": \"weak_hopf\""));
    }
}

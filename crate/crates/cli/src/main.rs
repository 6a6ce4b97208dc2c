//! `hook-census`: tables, checks, constants, asymptotics and conjecture
//! scans for hook counts in restricted partition classes.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid
//! arguments, 3 two independent computations disagree.

mod cache;
mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hook_census::partitions::PartitionClass;

use cache::Cache;
use commands::{parse_list, Report, Span};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("integrity failure: {0}")]
    Integrity(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Integrity(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Oracle,
    Series,
}

impl Source {
    fn tag(self) -> &'static str {
        match self {
            Source::Oracle => "oracle",
            Source::Series => "series",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Gf,
    Identities,
    Constants,
    Balanced,
    Andrews,
    Nekrasov,
}

impl Suite {
    fn tag(self) -> &'static str {
        match self {
            Suite::Gf => "gf",
            Suite::Identities => "identities",
            Suite::Constants => "constants",
            Suite::Balanced => "balanced",
            Suite::Andrews => "andrews",
            Suite::Nekrasov => "nekrasov",
        }
    }
}

fn parse_class(text: &str) -> Result<PartitionClass, String> {
    text.parse().map_err(|e: hook_census::Error| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "hook-census", version, about = "Hook length statistics of restricted partition classes")]
struct Cli {
    /// Print a run banner and cache activity on stderr.
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit the grid of hook counts for a class.
    Table {
        /// all, odd, distinct, self-conjugate or distinct-odd.
        #[arg(long, value_parser = parse_class)]
        class: PartitionClass,
        /// Hook lengths, `a..b` inclusive.
        #[arg(long)]
        h: String,
        /// Sizes, `a..b` inclusive.
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value = "series")]
        source: Source,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Neither read nor write the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Run a named check suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        h_max: usize,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
    },
    /// Emit alpha_h, beta_h and gamma_h for h = 1..=h_max.
    Constants {
        #[arg(long, default_value_t = 10)]
        h_max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare exact counts with their asymptotic main terms.
    Asymptotics {
        /// Comma-separated hook lengths or ranges.
        #[arg(long)]
        h: String,
        /// Comma-separated sizes or ranges.
        #[arg(long)]
        n: String,
        #[arg(long, value_parser = parse_class, default_value = "odd")]
        class: PartitionClass,
        #[arg(long, value_enum, default_value = "main")]
        report: Report,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Scan the self-conjugate and distinct-odd conjectures.
    Conjectures {
        #[arg(long, default_value_t = 5)]
        m_max: usize,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        /// Hook length for the a*/b* ratio table.
        #[arg(long, default_value_t = 2)]
        gamma_h: usize,
    },
}

struct Output {
    stdout: String,
    code: u8,
    notes: Vec<String>,
}

fn run(command: Command) -> Result<Output, CliError> {
    let ok = |stdout: String| Output {
        stdout,
        code: 0,
        notes: Vec::new(),
    };
    match command {
        Command::Table {
            class,
            h,
            n,
            source,
            format,
            no_cache,
        } => {
            let (h, n) = (Span::parse(&h)?, Span::parse(&n)?);
            let cache = if no_cache { None } else { Cache::from_env() };
            let out = commands::table(class, h, n, source, format, cache.as_ref())?;
            Ok(Output {
                stdout: out.text,
                code: 0,
                notes: vec![out.cache_note],
            })
        }
        Command::Verify { suite, h_max, n_max } => {
            let out = commands::verify(suite, h_max, n_max)?;
            Ok(Output {
                stdout: out.text,
                code: if out.passed { 0 } else { 1 },
                notes: Vec::new(),
            })
        }
        Command::Constants { h_max, format } => commands::constants(h_max, format).map(ok),
        Command::Asymptotics {
            h,
            n,
            class,
            report,
            format,
        } => commands::asymptotics(&parse_list(&h)?, &parse_list(&n)?, class, report, format).map(ok),
        Command::Conjectures { m_max, n_max, gamma_h } => commands::conjectures(m_max, n_max, gamma_h).map(ok),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    if cli.verbose {
        eprintln!("hook-census {} {:?}", env!("CARGO_PKG_VERSION"), cli.command);
    }
    let result = run(cli.command);
    let code = match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if cli.verbose {
                for note in out.notes {
                    eprintln!("{note}");
                }
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if cli.verbose {
        eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    }
    ExitCode::from(code)
}

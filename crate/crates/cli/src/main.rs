use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use lexrev_cli::{commands, session, Engine, Options, Report, Status, ERROR_CODE};
use lexrev_core::logic::DEFAULT_MAX_VARS;

/// Lexicographic closure of default bases and iterated entrenchment revision.
#[derive(Parser)]
#[command(name = "lexrev", version)]
struct Cli {
    /// Knowledge base file (`vars:` and `default:` lines).
    #[arg(long, global = true)]
    kb: Option<PathBuf>,
    /// Seed for random instances.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of random instances.
    #[arg(long, global = true)]
    count: Option<usize>,
    /// Print the reasoning behind an answer.
    #[arg(long, global = true)]
    explain: bool,
    /// Variable cap for loaded vocabularies, or for random bases in `conjecture`.
    #[arg(long, global = true)]
    max_vars: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Z-partition of the knowledge base.
    Partition,
    /// Answer `θ |~ φ`; exit 0 for YES, 1 for NO.
    Query {
        theta: String,
        phi: String,
        #[arg(long, value_enum, default_value_t = Engine::LexDirect)]
        engine: Engine,
    },
    /// Run a revision script.
    Session { script: PathBuf },
    /// Run a property suite (`all` for every suite); exit 1 on any failure.
    Verify { suite: String },
    /// Compare the conjunction chain with rational closure.
    Conjecture,
}

fn run(cli: Cli) -> Result<Report> {
    let options = Options {
        kb: cli.kb,
        seed: cli.seed,
        count: cli.count,
        explain: cli.explain,
        max_vars: cli.max_vars,
    };
    let report = match cli.command {
        Command::Partition => commands::partition(&options)?,
        Command::Query { theta, phi, engine } => commands::query(&options, &theta, &phi, engine)?,
        Command::Session { script } => {
            let text = std::fs::read_to_string(&script)
                .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", script.display()))?;
            let fallback = options.load_kb()?.map(|base| base.vocab().clone());
            let out = session::run_script(&text, fallback.as_ref(), options.max_vars.unwrap_or(DEFAULT_MAX_VARS))?;
            Report {
                text: out,
                status: Status::Pass,
            }
        }
        Command::Verify { suite } => commands::verify(&options, &suite)?,
        Command::Conjecture => commands::conjecture(&options)?,
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(report.status.code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(ERROR_CODE as u8)
        }
    }
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use pickset_cli::formats::HintsFile;
use pickset_cli::report::ErrorReport;
use pickset_cli::run::{Output, DEFAULT_SEED, DEFAULT_TRIALS};
use pickset_cli::{execute, CliError, Command, RunConfig};
use pickset_core::agler::DEFAULT_BUDGET;
use pickset_core::poly::Blaschke;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Sub {
    Solve1d,
    Check,
    Classify,
    Strongpick,
    Bezout,
    Hardy,
}

impl From<Sub> for Command {
    fn from(s: Sub) -> Self {
        match s {
            Sub::Solve1d => Command::Solve1d,
            Sub::Check => Command::Check,
            Sub::Classify => Command::Classify,
            Sub::Strongpick => Command::Strongpick,
            Sub::Bezout => Command::Bezout,
            Sub::Hardy => Command::Hardy,
        }
    }
}

/// Nevanlinna-Pick interpolation on the disk and bidisk.
#[derive(Debug, Parser)]
#[command(name = "pick", version)]
struct Args {
    #[arg(value_enum)]
    command: Sub,
    file: PathBuf,
    /// PSD and residual tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Overridden by the PICK_SEED environment variable.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    max_iter: usize,
    #[arg(long)]
    json: bool,
    /// Run the kernel-based extremality and minimality tests.
    #[arg(long, visible_alias = "full-extremality")]
    extremal: bool,
    /// JSON list of Blaschke products whose graphs pass through the nodes.
    #[arg(long)]
    hints: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn config(args: &Args) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig {
        seed: args.seed,
        max_iter: args.max_iter,
        output: if args.json { Output::Json } else { Output::Text },
        extremal: args.extremal,
        trials: args.trials,
        ..RunConfig::default()
    };
    if let Ok(s) = std::env::var("PICK_SEED") {
        cfg.seed = s
            .trim()
            .parse()
            .map_err(|e| CliError::parse(format!("PICK_SEED: {e}")))?;
    }
    if let Some(t) = args.tol {
        cfg.tolerances.psd_tol = t;
        cfg.tolerances.residual_tol = t;
    }
    if let Some(h) = &args.hints {
        let hints: HintsFile = serde_json::from_str(&read(h)?).map_err(CliError::parse)?;
        cfg.hints = hints
            .iter()
            .map(|m| m.to_blaschke())
            .collect::<Result<Vec<Blaschke>, _>>()?;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = config(&args).and_then(|cfg| {
        let input = read(&args.file)?;
        execute(args.command.into(), &input, &cfg).map(|r| (r, cfg))
    });
    match result {
        Ok(((report, code), cfg)) => {
            println!("{}", cfg.render(&report));
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if args.json {
                let r = ErrorReport {
                    error: e.message.clone(),
                    exit_code: e.code,
                };
                println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));
            }
            ExitCode::from(e.code as u8)
        }
    }
}

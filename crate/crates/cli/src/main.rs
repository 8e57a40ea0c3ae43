//! Command-line front end for the resolution engine.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use freeres::harness::{
    emit_report, parse_input, run_batch, single_report, BatchParams, CheckSet, JStrategy,
    JobOptions,
};
use freeres::polyring::{MonomialOrder, DEFAULT_CHARACTERISTIC};

#[derive(Parser)]
#[command(
    name = "freeres",
    version,
    about = "Minimal graded free resolutions, Betti tables, and shift-bound checks over F_p"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
    /// Output format: table | json
    #[arg(long, global = true, default_value = "table")]
    format: String,
    /// Per-instance time budget in seconds
    #[arg(long, global = true)]
    timeout: Option<u64>,
    /// Override the coefficient characteristic (prime)
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the minimal free resolution of the module in FILE
    Resolve { file: PathBuf },
    /// Print the Betti table, optionally cross-checked against the
    /// Koszul-homology oracle
    Betti {
        file: PathBuf,
        #[arg(long)]
        oracle: bool,
        /// Oracle degree cap (default: Taylor bound for monomial input)
        #[arg(long)]
        cap: Option<i64>,
    },
    /// Evaluate shift bounds against the module in FILE
    Check {
        file: PathBuf,
        /// all | comma list of codim1,regthm,maincor,ehu1,ehu2,conj
        #[arg(long, default_value = "all")]
        bounds: String,
        /// Annihilator strategy: self | ci:<degree>
        #[arg(long = "j", default_value = "self")]
        j: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Batch verification over seeded random monomial ideals
    Search {
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
        #[arg(long, default_value_t = 4)]
        gens: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Annihilator strategy: self | ci:<degree>
        #[arg(long = "j", default_value = "self")]
        j: String,
        /// all | comma list of codim1,regthm,maincor,ehu1,ehu2,conj
        #[arg(long, default_value = "all")]
        bounds: String,
        /// Cross-check every instance against the Koszul-homology oracle
        #[arg(long)]
        oracle: bool,
        /// Monomial order: degrevlex | deglex | lex
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let stringify = |e: freeres::EngineError| e.to_string();
    match cli.cmd {
        Command::Resolve { file } => {
            let parsed = parse_file(&file, cli.characteristic)?;
            let opts = JobOptions {
                checks: CheckSet::none(),
                timeout_secs: cli.timeout,
                ..Default::default()
            };
            let report = single_report(&parsed, &opts).map_err(stringify)?;
            print!("{}", emit_report(&report, &cli.format).map_err(stringify)?);
            Ok(report.exit_code() as u8)
        }
        Command::Betti { file, oracle, cap } => {
            let parsed = parse_file(&file, cli.characteristic)?;
            let opts = JobOptions {
                checks: CheckSet::none(),
                oracle,
                degree_cap: cap,
                timeout_secs: cli.timeout,
                ..Default::default()
            };
            let report = single_report(&parsed, &opts).map_err(stringify)?;
            print!("{}", emit_report(&report, &cli.format).map_err(stringify)?);
            Ok(report.exit_code() as u8)
        }
        Command::Check { file, bounds, j, seed } => {
            let parsed = parse_file(&file, cli.characteristic)?;
            let opts = JobOptions {
                checks: CheckSet::parse(&bounds).map_err(stringify)?,
                j_strategy: parse_strategy(&j)?,
                seed,
                timeout_secs: cli.timeout,
                ..Default::default()
            };
            let report = single_report(&parsed, &opts).map_err(stringify)?;
            print!("{}", emit_report(&report, &cli.format).map_err(stringify)?);
            Ok(report.exit_code() as u8)
        }
        Command::Search { vars, maxdeg, gens, count, seed, j, bounds, oracle, order } => {
            let params = BatchParams {
                vars,
                max_deg: maxdeg,
                gens,
                count,
                seed,
                characteristic: cli.characteristic.unwrap_or(DEFAULT_CHARACTERISTIC),
                order: MonomialOrder::parse(&order)
                    .ok_or_else(|| format!("unknown order `{order}`"))?,
                options: JobOptions {
                    checks: CheckSet::parse(&bounds).map_err(stringify)?,
                    j_strategy: parse_strategy(&j)?,
                    seed,
                    degree_cap: None,
                    timeout_secs: Some(cli.timeout.unwrap_or(10)),
                    oracle,
                },
            };
            let report = run_batch(&params).map_err(stringify)?;
            print!("{}", emit_report(&report, &cli.format).map_err(stringify)?);
            Ok(report.exit_code() as u8)
        }
    }
}

fn parse_file(
    path: &PathBuf,
    char_override: Option<u64>,
) -> Result<freeres::harness::ParsedInput, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_input(&text, char_override).map_err(|e| e.to_string())
}

fn parse_strategy(s: &str) -> Result<JStrategy, String> {
    JStrategy::parse(s).ok_or_else(|| format!("unknown J strategy `{s}` (expected self or ci:<d>)"))
}

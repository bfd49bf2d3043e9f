//! Batch front end: reads interval-grade datasets and loss profiles, runs
//! one of the approximation pipelines, and prints a deterministic JSON or
//! CSV report. Exit code 0 on success, 1 on any input or validation error,
//! 2 when a verification suite reports violations.

mod ingest;
mod report;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};

use report::{ConfigEcho, OutputFormat};
use threeway_core::oracle::{DEFAULT_CASES, DEFAULT_SEED};
use threeway_core::Theta;

#[derive(Parser)]
#[command(
    name = "threeway",
    version,
    about = "Three-way approximation of interval-valued fuzzy sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Reduction weight for collapsing intervals to scalars.
    #[arg(long, default_value_t = 0.5)]
    theta: f64,
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Collapse every interval grade to a scalar with the theta weight.
    Reduce {
        #[arg(long)]
        dataset: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Shadowed-set regions; thresholds explicit or found by the optimizer.
    Shadow {
        #[arg(long)]
        dataset: PathBuf,
        /// Elevation threshold; requires --beta.
        #[arg(long, requires = "beta")]
        alpha: Option<f64>,
        /// Reduction threshold; requires --alpha.
        #[arg(long, requires = "alpha")]
        beta: Option<f64>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Three-way approximation at explicit thresholds, with error totals.
    Approx {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Closed-form thresholds derived from a loss profile.
    Thresholds {
        #[arg(long)]
        losses: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide every object from theta-reduced losses.
    Decide {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        losses: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Decide every object by possibility-degree ranking of interval risks.
    DecideIv {
        #[arg(long)]
        dataset: PathBuf,
        #[arg(long)]
        losses: PathBuf,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run the brute-force verification suites.
    Check {
        /// Seed for the generated instances.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of generated cases per seeded suite.
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
        /// Points in the grade grid used by the agreement scans.
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        /// Exclusion band around thresholds for the agreement scan.
        #[arg(long, default_value_t = 1e-9)]
        epsilon: f64,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn config_echo(
    common: &CommonOpts,
    grid: usize,
    seed: u64,
    epsilon: f64,
    cases: Option<usize>,
) -> ConfigEcho {
    ConfigEcho {
        theta: common.theta,
        grid_points: grid,
        seed,
        epsilon,
        format: common.format,
        cases,
    }
}

fn theta_of(common: &CommonOpts) -> Result<Theta> {
    Theta::new(common.theta).map_err(|e| anyhow!("{e}"))
}

fn execute(cli: Cli) -> Result<bool> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Reduce { dataset, common } => {
            let theta = theta_of(&common)?;
            let set = ingest::ingest_dataset(&dataset)?;
            let config = config_echo(&common, 1001, DEFAULT_SEED, 1e-9, None);
            report::write_report(&run::cmd_reduce(&set, theta, config), &mut out)?;
        }
        Command::Shadow {
            dataset,
            alpha,
            beta,
            common,
        } => {
            let theta = theta_of(&common)?;
            let set = ingest::ingest_dataset(&dataset)?;
            let config = config_echo(&common, 1001, DEFAULT_SEED, 1e-9, None);
            let explicit = alpha.zip(beta);
            report::write_report(&run::cmd_shadow(&set, theta, explicit, config)?, &mut out)?;
        }
        Command::Approx {
            dataset,
            alpha,
            beta,
            common,
        } => {
            let theta = theta_of(&common)?;
            let set = ingest::ingest_dataset(&dataset)?;
            let config = config_echo(&common, 1001, DEFAULT_SEED, 1e-9, None);
            report::write_report(
                &run::cmd_approx(&set, theta, alpha, beta, config)?,
                &mut out,
            )?;
        }
        Command::Thresholds { losses, common } => {
            let theta = theta_of(&common)?;
            let losses = ingest::ingest_losses(&losses)?;
            let config = config_echo(&common, 1001, DEFAULT_SEED, 1e-9, None);
            report::write_report(&run::cmd_thresholds(&losses, theta, config)?, &mut out)?;
        }
        Command::Decide {
            dataset,
            losses,
            common,
        } => {
            let theta = theta_of(&common)?;
            let set = ingest::ingest_dataset(&dataset)?;
            let losses = ingest::ingest_losses(&losses)?;
            let config = config_echo(&common, 1001, DEFAULT_SEED, 1e-9, None);
            report::write_report(&run::cmd_decide(&set, &losses, theta, config)?, &mut out)?;
        }
        Command::DecideIv {
            dataset,
            losses,
            common,
        } => {
            let theta = theta_of(&common)?;
            let set = ingest::ingest_dataset(&dataset)?;
            let losses = ingest::ingest_losses(&losses)?;
            let config = config_echo(&common, 1001, DEFAULT_SEED, 1e-9, None);
            report::write_report(&run::cmd_decide_iv(&set, &losses, theta, config), &mut out)?;
        }
        Command::Check {
            seed,
            cases,
            grid,
            epsilon,
            common,
        } => {
            theta_of(&common)?;
            let config = config_echo(&common, grid, seed, epsilon, Some(cases));
            let outcome = run::cmd_check(seed, cases, grid, epsilon, config)?;
            report::write_report(&outcome.report, &mut out)?;
            return Ok(outcome.clean);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            use clap::error::ErrorKind;
            if matches!(
                error.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{error}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{error}");
            return ExitCode::from(1);
        }
    };
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(1)
        }
    }
}

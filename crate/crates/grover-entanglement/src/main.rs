use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use grover_entanglement::cli::{
    run_command, CommandKind, MarkedSpec, OutputFormat, SweepConfig,
};
use grover_entanglement::error::Error;
use grover_entanglement::grover::AngleConvention;

#[derive(Parser)]
#[command(
    name = "grover-ent",
    about = "Geometric entanglement across Grover-search iterations",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Angle convention: paper | exact
    #[arg(long, default_value = "paper")]
    angle: String,
    /// Output format: csv | json | svg
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Absolute tolerance of the overlap maximization
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Seed for the product-oracle restarts
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random restarts of the product-oracle optimization
    #[arg(long, default_value_t = 16)]
    restarts: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Per-iteration entanglement sweep for one instance
    Curve {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
        /// all-zeros | zeros-ones | paper-m | weight-one | explicit:1,2,4
        #[arg(long)]
        marked: Option<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Optimal-vs-peak iteration table for M = 1, 2, 3, 5, 10
    Table1 {
        #[arg(long, default_value_t = 10)]
        n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sweep with |0..0> and |1..1> marked (GHZ-convergent search)
    Ghz {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sweep with the weight-one set marked (W-convergent search)
    Wstate {
        #[arg(long, default_value_t = 12)]
        n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Closed-form vs numeric Dicke entanglement for every excitation count
    Dicke {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// GHZ/W/Dicke closed-form table for n = 2..=max
    Closedforms {
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Cross-check the fast path against both brute-force oracles
    Validate {
        #[arg(long)]
        n: u32,
        #[arg(long = "max-m", default_value_t = 2)]
        max_m: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn parse_angle(text: &str) -> Result<AngleConvention, Error> {
    match text {
        "paper" => Ok(AngleConvention::PaperStep),
        "exact" => Ok(AngleConvention::ExactRotation),
        other => Err(Error::InfeasibleSpec(format!(
            "unknown angle convention {other:?}; expected paper or exact"
        ))),
    }
}

fn build_config(command: Command) -> Result<SweepConfig, Error> {
    let (kind, n, m, marked, common, max_m) = match command {
        Command::Curve {
            n,
            m,
            marked,
            common,
        } => (CommandKind::Curve, n, m, marked, common, 0),
        Command::Table1 { n, common } => (CommandKind::Table1, n, 1, None, common, 0),
        Command::Ghz { n, common } => (
            CommandKind::Ghz,
            n,
            2,
            Some("zeros-ones".to_string()),
            common,
            0,
        ),
        Command::Wstate { n, common } => (
            CommandKind::Wstate,
            n,
            u64::from(n),
            Some("weight-one".to_string()),
            common,
            0,
        ),
        Command::Dicke { n, common } => (CommandKind::Dicke, n, 1, None, common, 0),
        Command::Closedforms { max_n, common } => {
            (CommandKind::Closedforms, max_n, 1, None, common, 0)
        }
        Command::Validate { n, max_m, common } => {
            (CommandKind::Validate, n, 1, None, common, max_m)
        }
    };
    let marked_spec = match marked {
        Some(text) => MarkedSpec::parse(&text)?,
        None => MarkedSpec::default_for(m),
    };
    Ok(SweepConfig {
        command: kind,
        n,
        m,
        marked_spec,
        angle_convention: parse_angle(&common.angle)?,
        output_format: OutputFormat::parse(&common.format)?,
        output_path: common.out,
        tol: common.tol,
        seed: common.seed,
        restarts: common.restarts,
        max_m,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are not config errors.
            if err.use_stderr() {
                eprintln!("{err}");
                return ExitCode::from(1);
            }
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
    };
    let config = match build_config(cli.command) {
        Ok(config) => config,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    match run_command(&config) {
        Ok(outcome) if outcome.validation_failures > 0 => {
            eprintln!(
                "error: {} validation check(s) failed",
                outcome.validation_failures
            );
            ExitCode::from(2)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(Error::Io(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

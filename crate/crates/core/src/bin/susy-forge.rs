use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use susy_forge::cli::{self, CliError};

#[derive(Parser)]
#[command(name = "susy-forge", version, about = "Confluent second-order SUSY spectral design")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario described by a `key = value` config file.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run one of the built-in figure scenarios.
    Preset {
        /// fig1 ... fig6
        name: String,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Print the built-in scenarios.
    ListPresets,
}

fn execute(args: Args) -> Result<i32, CliError> {
    let config = match args.command {
        Command::ListPresets => {
            for p in cli::list_presets() {
                println!("{}: {}", p.name, p.summary);
            }
            return Ok(0);
        }
        Command::Run { config } => cli::load_config(&config)?,
        Command::Preset { name, out_dir } => cli::preset(&name, &out_dir)?,
    };
    let tol = cli::tolerance_from_env()?;
    let (report, code) = cli::run_scenario(&config, tol)?;
    println!("classification: {} (expected {})", report.classification, report.expected);
    println!("base levels:    {:?}", report.base.eigenvalues);
    println!("partner levels: {:?}", report.partner.eigenvalues);
    println!("wrote {} and {}", config.csv_path.display(), config.json_path.display());
    if code != 0 {
        eprintln!("spectrum mismatch: partner spectrum does not realize the requested {} design", config.mode.as_str());
    }
    Ok(code)
}

fn main() -> ExitCode {
    match execute(Args::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("susy-forge: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

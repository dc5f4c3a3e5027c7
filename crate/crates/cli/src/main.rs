use std::process::ExitCode;

use acn_cli::commands::{self, BranchArg, ExportTarget, Format, Which};
use acn_cli::CliError;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "acn", version, about = "Exact checks for almost contact structures with Norden metric on Lie algebras")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jacobi identity and structure axioms.
    Check { file: String },
    /// Print connection, curvature or F components.
    Tensors {
        file: String,
        #[arg(long, value_enum, default_value = "f")]
        which: Which,
    },
    /// Classify the normal section, decompose, induce and report.
    Sub { file: String },
    /// Run the built-in examples against their expected values.
    VerifyExamples {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        epsilon: i64,
        #[arg(long, value_enum, default_value = "lambda1")]
        branch: BranchArg,
    },
    /// Print a built-in example as an input document.
    Export {
        #[arg(value_enum)]
        target: ExportTarget,
    },
}

fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let out = match &cli.command {
        Command::Check { file } => commands::check(&commands::read_document(file)?)?,
        Command::Tensors { file, which } => commands::tensors(&commands::read_document(file)?, *which)?,
        Command::Sub { file } => commands::submanifold(&commands::read_document(file)?)?,
        Command::VerifyExamples { epsilon, branch } => commands::verify_examples(*epsilon, (*branch).into())?,
        Command::Export { target } => return Ok((commands::export(*target)?, 0)),
    };
    Ok((out.render(cli.format), out.exit))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

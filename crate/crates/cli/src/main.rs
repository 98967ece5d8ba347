use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::CliError;

#[derive(Debug, Parser)]
#[command(name = "ellipscheme", version, about = "Real trigonal curves, patchworks and real elliptic surface types")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    M,
    M2,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the diagram of allowed points with their types and the extremal ones.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Build a patchwork curve, write it as a fixture and report its scheme.
    Construct {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        lambda: u32,
        /// Target oriented scheme `a,b` reached by collapsing ovals.
        #[arg(long, value_name = "A,B")]
        collapse: Option<String>,
        /// Also write the depressed T-polynomial at this `t`, e.g. `1/2`.
        #[arg(long, value_name = "T")]
        emit: Option<String>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// `svg` prints the patchwork picture after writing the files.
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Genericity, real scheme and cover types of a curve file.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Check the classification and the invariant suites for k = 1..k-max.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Classify { k, format } => commands::classify(k, format),
        Command::Construct { k, family, lambda, collapse, emit, out, format } => {
            commands::construct(&commands::ConstructArgs { k, family, lambda, collapse, emit, out, format })
        }
        Command::Analyze { file, format } => commands::analyze(&file, format),
        Command::Verify { k_max, format } => commands::verify(k_max, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(text)) => {
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Err(e)) => {
            if let Some(out) = e.stdout() {
                let _ = std::io::stdout().write_all(out.as_bytes());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(_) => ExitCode::from(3),
    }
}

use clap::{Parser, Subcommand, ValueEnum};
use gentle_cli::commands::{self, Common, Format, Outcome};
use gentle_cli::input::default_field;
use gentle_cli::verify::CorpusOptions;
use gentle_cli::CliError;
use gentle_core::Field;
use gentle_lie::Target;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gentle-hh1", version, about = "First Hochschild cohomology of gentle algebras and their trivial extensions")]
struct Cli {
    /// Field override: Q, F2, F3, Fp:5, ... (default: the document's field, then HH1_FIELD, then Q)
    #[arg(long, global = true)]
    field: Option<String>,
    /// Add wall-clock timing to reports (breaks byte-for-byte reproducibility)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Of {
    #[value(name = "A")]
    A,
    #[value(name = "TA")]
    Ta,
}

impl From<Of> for Target {
    fn from(of: Of) -> Target {
        match of {
            Of::A => Target::Algebra,
            Of::Ta => Target::TrivialExtension,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that a document presents a gentle algebra
    Validate { file: PathBuf },
    /// Bases of HH¹(A) or HH¹(TA), cross-checked against the cochain complexes
    Hh1 {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "A")]
        of: Of,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Structure constants, series and classification
    Lie {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "A")]
        of: Of,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        /// Also write the structure constants as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// The marked ribbon graph (DOT on stdout unless an output file is given)
    Ribbon {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The trivial extension as a Brauer graph algebra
    Trivext {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Admissible cuts of the ribbon graph
    Cuts {
        file: PathBuf,
        /// Only the first cut whose algebra has Alt = 0
        #[arg(long)]
        alt_free: bool,
    },
    /// Run the invariant suite over all small gentle presentations
    Corpus {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 5)]
        max_arrows: usize,
        /// Comma-separated fields
        #[arg(long, value_delimiter = ',', default_value = "Q,F2,F3")]
        fields: Vec<String>,
        /// Also compare HH¹(TA) with commutators of derivations of TA
        #[arg(long)]
        deep: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let common = Common { field: cli.field, timing: cli.timing };
    match cli.command {
        Command::Validate { file } => commands::validate(&file),
        Command::Hh1 { file, of, format } => commands::hh1(&file, of.into(), format.into(), &common),
        Command::Lie { file, of, format, csv } => commands::lie(&file, of.into(), format.into(), csv.as_deref(), &common),
        Command::Ribbon { file, dot, json } => commands::ribbon(&file, dot.as_deref(), json.as_deref(), &common),
        Command::Trivext { file, dot } => commands::trivext(&file, dot.as_deref(), &common),
        Command::Cuts { file, alt_free } => commands::cuts(&file, alt_free, &common),
        Command::Corpus { max_vertices, max_arrows, fields, deep, format } => {
            let fields = if fields.is_empty() {
                vec![default_field()?]
            } else {
                fields
                    .iter()
                    .map(|f| Field::parse(f).map_err(|e| CliError::Usage(e.to_string())))
                    .collect::<Result<_, _>>()?
            };
            let options = CorpusOptions { max_vertices, max_arrows, fields, deep };
            Ok(commands::corpus(&options, format.into(), &common))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

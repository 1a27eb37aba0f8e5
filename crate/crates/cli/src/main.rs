use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chromo_cli::input::{parse_field, parse_triangle};
use chromo_cli::report::build_report;
use chromo_cli::svg::{render, Element, DEFAULT_WIDTH};
use chromo_cli::sweep::{run, Mode, SweepConfig};
use chromo_cli::CliError;
use chromogeometry::CheckFamily;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "chromo", version, about = "Exact chromogeometry of triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Exact dossier of one triangle: measures, centers, circles and checks
    Report {
        /// Three points `x,y` separated by `;`, e.g. "0,0;6,1;2,3"
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        /// `rational` or `fp:<prime>`
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// SVG figure of a rational triangle
    Svg {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "euler,circumcircles,ninepoint,centers"
        )]
        elements: Vec<Element>,
        /// Output file; standard output if omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_WIDTH)]
        width: u32,
    },
    /// Evaluate theorem checks on every triangle of an enumeration over F_p
    Sweep {
        #[arg(long)]
        prime: u64,
        /// `exhaustive` or `random:N`
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Check families, comma separated
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "laws,quadrea,coloured,centers,midpoints,euler,circles,altitudes"
        )]
        laws: Vec<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Output {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Output {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn execute(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Report {
            points,
            field,
            format,
        } => {
            let field = parse_field(&field)?;
            let t = parse_triangle(&points, field)?;
            let doc = build_report(&t)?;
            let text = match format {
                Format::Json => doc.to_json() + "\n",
                Format::Text => doc.to_text(),
            };
            emit(&text, None)?;
            if !doc.all_checks_hold {
                let failed: Vec<&str> = doc
                    .checks
                    .failures()
                    .chain(doc.incidence.failures())
                    .collect();
                return Err(CliError::CheckFailed(failed.join(", ")));
            }
            Ok(())
        }
        Command::Svg {
            points,
            elements,
            out,
            width,
        } => {
            let t = parse_triangle(&points, chromogeometry::FieldSpec::RATIONAL)?;
            let doc = render(&t, &elements, width)?;
            emit(&doc, out.as_ref())
        }
        Command::Sweep {
            prime,
            mode,
            laws,
            jobs,
            seed,
            format,
        } => {
            let mut cfg = SweepConfig::new(prime, mode.parse::<Mode>()?)?;
            cfg.families = laws
                .iter()
                .map(|s| {
                    s.parse::<CheckFamily>()
                        .map_err(|e| CliError::Input(e.to_string()))
                })
                .collect::<Result<_, _>>()?;
            cfg.jobs = jobs;
            cfg.seed = seed;
            let summary = run(&cfg)?;
            eprintln!("elapsed: {:.3?}", summary.elapsed);
            let text = match format {
                Format::Json => summary.to_json() + "\n",
                Format::Text => summary.to_text(),
            };
            emit(&text, None)?;
            if summary.total_failures > 0 {
                return Err(CliError::CheckFailed(format!(
                    "{} check failures",
                    summary.total_failures
                )));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("chromo: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

//! `sepax`: classify finite spaces, browse the catalog, and run the
//! exhaustive verifiers from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification finds a counterexample,
//! 2 on usage or input errors.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sepax_core::axioms::{classify_points, classify_space, AxiomId};
use sepax_core::catalog;
use sepax_core::diagram::{self, DiagramForm};
use sepax_core::json::parse_space;
use sepax_core::miner::{self, enumerate_topologies, mine_witness, verify_diagram, MAX_ENUMERATION_POINTS};
use sepax_core::props::{self, verify_propositions};

use report::*;

const DEFAULT_MAX_POINTS: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "sepax", version, about = "Separation axioms on finite topological spaces")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Markdown, global = true)]
    format: Format,

    /// Largest carrier accepted by --points and --max-points (at most 5)
    #[arg(long, env = "SEPAX_MAX_POINTS", default_value_t = DEFAULT_MAX_POINTS, global = true, hide = true)]
    point_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Markdown,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide every axiom for a space given as JSON
    Classify { path: PathBuf },
    /// Named example spaces
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Count the topologies on N points
    Enumerate {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        up_to_homeo: bool,
    },
    /// Exhaustive verification runs
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Search for the smallest space with the given axioms true and false
    Mine(MineArgs),
    /// The implication diagram
    ExportDiagram {
        #[arg(long, value_enum, default_value_t = FormArg::Full)]
        form: FormArg,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    List,
    Show { name: String },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Check every implication on all spaces with at most N points
    Diagram {
        #[arg(long)]
        points: usize,
    },
    /// Run the named properties on all spaces with at most N points
    Props {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        prop: Option<String>,
    },
}

#[derive(Args, Debug)]
struct MineArgs {
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    satisfy: Vec<AxiomId>,
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    violate: Vec<AxiomId>,
    #[arg(long)]
    max_points: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormArg {
    Full,
    Finite,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    verified: bool,
}

fn render<T: Serialize + Markdown>(payload: &T, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(payload).expect("payload serializes") + "\n"),
        Format::Markdown => Ok(payload.markdown()),
        Format::Dot => Err(Failure::Usage("--format dot is only available for export-diagram".into())),
    }
}

fn check_points(n: usize, cap: usize) -> Result<(), Failure> {
    let cap = cap.min(MAX_ENUMERATION_POINTS);
    if n == 0 || n > cap {
        return Err(Failure::Usage(format!(
            "point count {n} outside 1..={cap}; set SEPAX_MAX_POINTS to raise the cap up to {MAX_ENUMERATION_POINTS}"
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let format = cli.format;
    let ok = |text| Ok(Output { text, verified: true });
    match cli.command {
        Command::Classify { path } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let space = parse_space(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let axioms = classify_space(&space);
            let payload = ClassifyPayload {
                points: classify_points(&space),
                violations: diagram::violations(&axioms, true),
                axioms,
                space,
            };
            ok(render(&payload, format)?)
        }
        Command::Catalog(CatalogCommand::List) => ok(render(&CatalogList::new(&catalog::catalog()), format)?),
        Command::Catalog(CatalogCommand::Show { name }) => {
            let entry = catalog::lookup(&name).ok_or_else(|| Failure::Usage(format!("no catalog entry `{name}`")))?;
            let payload = CatalogShow::new(&entry);
            Ok(Output { text: render(&payload, format)?, verified: payload.mismatches() == 0 })
        }
        Command::Enumerate { points, up_to_homeo } => {
            check_points(points, cli.point_cap)?;
            let (spaces, report) = enumerate_topologies(points, up_to_homeo)?;
            ok(render(&EnumeratePayload { report, up_to_homeo, spaces }, format)?)
        }
        Command::Verify(VerifyCommand::Diagram { points }) => {
            check_points(points, cli.point_cap)?;
            let report = verify_diagram(points)?;
            Ok(Output { text: render(&report, format)?, verified: report.passed() })
        }
        Command::Verify(VerifyCommand::Props { points, prop }) => {
            check_points(points, cli.point_cap.min(props::MAX_PROPOSITION_POINTS))?;
            let outcomes = verify_propositions(points, prop.as_deref()).map_err(|e| match e {
                miner::MinerError::UnknownProperty(name) => Failure::Usage(format!(
                    "unknown property `{name}`; known: {}",
                    props::property_names().collect::<Vec<_>>().join(", ")
                )),
                other => other.into(),
            })?;
            let payload = PropsPayload { points, outcomes };
            Ok(Output { text: render(&payload, format)?, verified: payload.failures() == 0 })
        }
        Command::Mine(args) => {
            check_points(args.max_points, cli.point_cap)?;
            let report = mine_witness(&args.satisfy, &args.violate, args.max_points)?;
            ok(render(&report, format)?)
        }
        Command::ExportDiagram { form } => {
            let form = match form {
                FormArg::Full => DiagramForm::Full,
                FormArg::Finite => DiagramForm::Finite,
            };
            let witnesses = catalog::non_implication_witnesses();
            match format {
                Format::Dot => ok(diagram::to_dot(form, &witnesses)),
                _ => ok(render(&DiagramExport::new(form, &witnesses), format)?),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Output { text, verified }) => {
            print!("{text}");
            if verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

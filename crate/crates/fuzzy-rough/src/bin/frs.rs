//! Thin command-line front end over the fuzzy-rough library: each subcommand
//! reads the JSON documents described in the library's `io::document`
//! module, calls one library operation and prints its document.
//!
//! Exit codes: 0 success or accepted verdict, 2 usage error, 3 rejected
//! verdict, 4 validation failure, 5 budget exceeded, 1 I/O failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fuzzy_rough::characterize::{self, DEFAULT_ORACLE_BUDGET};
use fuzzy_rough::error::Error;
use fuzzy_rough::io::document::{self, SetDocument, VerdictDocument};
use fuzzy_rough::io::verify::{self, VerifyConfig};
use fuzzy_rough::io::{dot, ingest};
use fuzzy_rough::quasiorder;
use fuzzy_rough::rational::Chain;
use fuzzy_rough::space::{ApproximationSpace, FuzzySet};
use fuzzy_rough::{lattice, UnitRational};

#[derive(Parser)]
#[command(
    name = "frs",
    about = "Exact fuzzy rough approximations, induced class structure and lattice enumeration",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the lower and upper approximations of a fuzzy set.
    Approx(ApproxArgs),
    /// Induced quasiorders, equivalence classes, factor posets and maximal
    /// classes of a set's two approximations.
    Classes(ClassesArgs),
    /// Decide whether a (lower, upper) pair is a fuzzy rough set.
    CheckPair(CheckPairArgs),
    /// Greatest lower bound of the fuzzy rough pairs of the given sets.
    Meet(MeetJoinArgs),
    /// Least upper bound of the fuzzy rough pairs of the given sets.
    Join(MeetJoinArgs),
    /// Enumerate every fuzzy rough pair of a chain-mode space.
    Enumerate(EnumerateArgs),
    /// Render an enumerated diagram as a Graphviz Hasse diagram.
    ExportDot(ExportDotArgs),
    /// Build a chain-valued similarity space from CSV data.
    Ingest(IngestArgs),
    /// Run the seeded randomized law-verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ApproxArgs {
    /// Space document (JSON).
    #[arg(long)]
    space: PathBuf,
    /// Fuzzy set document (JSON).
    #[arg(long)]
    set: PathBuf,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassesArgs {
    #[arg(long)]
    space: PathBuf,
    #[arg(long)]
    set: PathBuf,
    /// Write the upper-side quasiorder as DOT.
    #[arg(long)]
    dot_upper: Option<PathBuf>,
    /// Write the lower-side quasiorder as DOT.
    #[arg(long)]
    dot_lower: Option<PathBuf>,
    /// Write the upper-side factor poset as DOT.
    #[arg(long)]
    dot_upper_poset: Option<PathBuf>,
    /// Write the lower-side factor poset as DOT.
    #[arg(long)]
    dot_lower_poset: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckPairArgs {
    #[arg(long)]
    space: PathBuf,
    /// Candidate upper set document.
    #[arg(long)]
    upper: PathBuf,
    /// Candidate lower set document.
    #[arg(long)]
    lower: PathBuf,
    /// Write the certifying reference set here on acceptance.
    #[arg(long)]
    witness_out: Option<PathBuf>,
    /// Also run the exhaustive search oracle and report agreement.
    #[arg(long)]
    oracle: bool,
    /// Candidate budget for the oracle.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct MeetJoinArgs {
    #[arg(long)]
    space: PathBuf,
    /// Reference set documents; their fuzzy rough pairs are combined.
    #[arg(long, num_args = 1.., required = true)]
    sets: Vec<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    space: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum number of reference sets to enumerate.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    budget: u64,
    /// Append the lattice property report to the diagram document.
    #[arg(long)]
    properties: bool,
}

#[derive(Args)]
struct ExportDotArgs {
    /// Diagram document produced by `enumerate`.
    #[arg(long)]
    diagram: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct IngestArgs {
    /// CSV input with a header row.
    #[arg(long)]
    input: PathBuf,
    /// Target chain, e.g. "0,1/4,1/2,3/4,1".
    #[arg(long)]
    chain: String,
    /// Columns to use (default: all numeric columns).
    #[arg(long, value_delimiter = ',')]
    columns: Option<Vec<String>>,
    /// Column holding row names.
    #[arg(long)]
    id_column: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    samples: u32,
    #[arg(long, default_value_t = 5)]
    max_universe: usize,
    #[arg(long, default_value_t = 5)]
    max_chain: usize,
    #[arg(long, default_value_t = 3)]
    sets_per_space: u32,
    /// Generate non-symmetric relations; similarity-dependent checks are
    /// skipped.
    #[arg(long)]
    asymmetric: bool,
    /// Candidate budget for per-space enumeration and oracle runs.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    budget: u64,
    /// Emit the run as JSON instead of the text transcript.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 5,
        _ => 4,
    }
}

fn read_to_string(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("cannot read {}: {e}", path.display())))
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Error::Document(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn load_space(path: &Path) -> Result<ApproximationSpace, Error> {
    document::space_from_json(&read_to_string(path)?)
}

fn load_set(space: &ApproximationSpace, path: &Path) -> Result<FuzzySet, Error> {
    document::set_from_json(space.universe(), &read_to_string(path)?)
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Approx(args) => {
            let space = load_space(&args.space)?;
            let set = load_set(&space, &args.set)?;
            let lower = space.lower(&set)?;
            let upper = space.upper(&set)?;
            let doc = serde_json::json!({
                "lower": document::emit_set(&lower),
                "upper": document::emit_set(&upper),
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
            text.push('\n');
            write_output(args.out.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes(args) => {
            let space = load_space(&args.space)?;
            let set = load_set(&space, &args.set)?;
            let upper = space.upper(&set)?;
            let lower = space.lower(&set)?;
            let upper_q = quasiorder::from_upper(&space, &upper)?;
            let lower_q = quasiorder::from_lower(&space, &lower)?;
            let upper_poset = quasiorder::factor_poset(&upper_q)?;
            let lower_poset = quasiorder::factor_poset(&lower_q)?;

            if let Some(path) = &args.dot_upper {
                write_output(Some(path), &dot::quasiorder_dot(&upper_q))?;
            }
            if let Some(path) = &args.dot_lower {
                write_output(Some(path), &dot::quasiorder_dot(&lower_q))?;
            }
            if let Some(path) = &args.dot_upper_poset {
                write_output(Some(path), &dot::factor_poset_dot(&upper_poset))?;
            }
            if let Some(path) = &args.dot_lower_poset {
                write_output(Some(path), &dot::factor_poset_dot(&lower_poset))?;
            }

            let side_doc = |set: &FuzzySet,
                            q: &quasiorder::CrispQuasiorder,
                            poset: &quasiorder::FactorPoset| {
                let u = space.universe();
                let edges: Vec<[String; 2]> = q
                    .pairs()
                    .filter(|(a, b)| a != b)
                    .map(|(a, b)| [u.name(a).to_string(), u.name(b).to_string()])
                    .collect();
                serde_json::json!({
                    "values": document::emit_set(set),
                    "edges": edges,
                    "classes": (0..poset.class_count())
                        .map(|c| poset.partition().class_names(c))
                        .collect::<Vec<_>>(),
                    "covers": poset.covers(),
                    "maximal": poset.maximal(),
                })
            };
            let doc = serde_json::json!({
                "upper": side_doc(&upper, &upper_q, &upper_poset),
                "lower": side_doc(&lower, &lower_q, &lower_poset),
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
            text.push('\n');
            write_output(args.out.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckPair(args) => {
            let space = load_space(&args.space)?;
            let upper = load_set(&space, &args.upper)?;
            let lower = load_set(&space, &args.lower)?;
            let verdict = characterize::is_fuzzy_rough_pair(&space, &upper, &lower)?;
            let mut doc = VerdictDocument::new(&verdict);
            if args.oracle {
                let found =
                    characterize::exhaustive_witness_search(&space, &upper, &lower, args.budget)?;
                doc = doc.with_oracle(found.as_ref());
            }
            print!("{}", doc.to_json());
            if let (Some(path), Some(witness)) = (&args.witness_out, &verdict.witness) {
                write_output(Some(path), &document::set_to_json(witness))?;
            }
            Ok(if verdict.accepted {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Meet(args) => run_meet_join(args, lattice::meet),
        Command::Join(args) => run_meet_join(args, lattice::join),
        Command::Enumerate(args) => {
            let space = load_space(&args.space)?;
            let diagram = lattice::enumerate_lattice(&space, args.budget)?;
            let text = if args.properties {
                let report = lattice::check_properties(&space, &diagram);
                let doc = serde_json::json!({
                    "diagram": document::emit_diagram(&space, &diagram),
                    "properties": report,
                });
                let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
                text.push('\n');
                text
            } else {
                document::diagram_to_json(&space, &diagram)
            };
            write_output(args.out.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot(args) => {
            let doc = document::diagram_from_json(&read_to_string(&args.diagram)?)?;
            let lowers: Vec<Vec<UnitRational>> =
                doc.elements.iter().map(|e| e.lower.clone()).collect();
            let uppers: Vec<Vec<UnitRational>> =
                doc.elements.iter().map(|e| e.upper.clone()).collect();
            let text = dot::diagram_dot_from_vectors(&lowers, &uppers, &doc.covers);
            write_output(args.out.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ingest(args) => {
            let chain_values: Vec<&str> = args.chain.split(',').collect();
            let chain = Chain::parse(&chain_values)?;
            let options = ingest::IngestOptions {
                columns: args.columns.clone(),
                id_column: args.id_column.clone(),
            };
            let data = read_to_string(&args.input)?;
            let (_, relation) = ingest::ingest_similarity(data.as_bytes(), &chain, &options)?;
            let space = ApproximationSpace::new(
                relation,
                fuzzy_rough::Algebra::kleene_dienes(),
                Some(chain),
            )?;
            write_output(args.out.as_ref(), &document::space_to_json(&space))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let config = VerifyConfig {
                seed: args.seed,
                samples: args.samples,
                max_universe: args.max_universe,
                max_chain: args.max_chain,
                sets_per_space: args.sets_per_space,
                symmetric: !args.asymmetric,
                oracle_budget: args.budget,
            };
            let run = verify::run(&config);
            if args.json {
                let mut text = serde_json::to_string_pretty(&run).expect("serializable");
                text.push('\n');
                print!("{text}");
            } else {
                print!("{}", run.transcript());
            }
            Ok(if run.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            })
        }
    }
}

fn run_meet_join(
    args: MeetJoinArgs,
    op: fn(
        &ApproximationSpace,
        &[characterize::RoughPair],
    ) -> Result<characterize::RoughPair, Error>,
) -> Result<ExitCode, Error> {
    let space = load_space(&args.space)?;
    let pairs = args
        .sets
        .iter()
        .map(|path| {
            let set = load_set(&space, path)?;
            lattice::rough_pair_of(&space, &set)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let result = op(&space, &pairs)?;
    let doc = serde_json::json!({
        "lower": document::emit_set(result.lower()),
        "upper": document::emit_set(result.upper()),
        "witness": result.witness().map(|w| SetDocument {
            values: document::emit_set(w).values,
        }),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    write_output(args.out.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

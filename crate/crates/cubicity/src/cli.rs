//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use cubicity_core::orderings::{
    arcs_to_graph, atfree_ordering, circular_arc_ordering, cocomparability_ordering,
    find_transitive_orientation, DEFAULT_ORIENTATION_CAP,
};
use cubicity_core::{
    build_representation, exact_bandwidth, families, heuristic_ordering, ordering_width, to_cubes,
    verify_representation, Graph, IndifferenceRepresentation, LinearOrdering, DEFAULT_EXACT_CAP,
};

use crate::error::{Error, Result};
use crate::{format, generate};

#[derive(Debug, Parser)]
#[command(
    name = "cubicity",
    version,
    about = "Unit-cube representations from low-width vertex orderings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Produce a vertex ordering and report its width.
    Order(OrderArgs),
    /// Build the layered representation (optionally with cube anchors).
    Construct(ConstructArgs),
    /// Check a representation against a graph.
    Verify(VerifyArgs),
    /// order, construct and verify in one go; exits 1 if verification fails.
    Pipeline(ConstructArgs),
    /// pipeline plus the dimension bound that belongs to the strategy.
    Bound(ConstructArgs),
    /// Write a generated instance.
    Gen(GenArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Exact,
    Heuristic,
    File,
    CircularArc,
    Cocomparability,
    Atfree,
}

impl Strategy {
    fn name(self) -> &'static str {
        match self {
            Strategy::Exact => "exact",
            Strategy::Heuristic => "heuristic",
            Strategy::File => "file",
            Strategy::CircularArc => "circular-arc",
            Strategy::Cocomparability => "cocomparability",
            Strategy::Atfree => "atfree",
        }
    }
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    /// Graph edge list. Optional for `circular-arc`, where the arc model
    /// defines the graph.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "heuristic")]
    pub strategy: Strategy,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Size cap for `exact` (vertices) or `--find-orientation` (complement edges).
    #[arg(long)]
    pub cap: Option<usize>,
    /// Ordering file for `file`.
    #[arg(long)]
    pub ordering: Option<PathBuf>,
    /// Arc model for `circular-arc`.
    #[arg(long)]
    pub arcs: Option<PathBuf>,
    /// Transitive orientation of the complement for `cocomparability`.
    #[arg(long)]
    pub orientation: Option<PathBuf>,
    /// Search for the orientation instead of reading one.
    #[arg(long)]
    pub find_orientation: bool,
    /// Spanning caterpillar for `atfree`.
    #[arg(long)]
    pub caterpillar: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub order: OrderArgs,
    /// Append the unit-cube anchors to the representation document.
    #[arg(long)]
    pub cubes: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Representation document.
    #[arg(long)]
    pub rep: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Random,
    Arcs,
    Cocomparability,
    Caterpillar,
    Path,
    Cycle,
    Complete,
    Star,
    Banded,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Edge probability (`random`, `cocomparability`, `caterpillar`) or
    /// relative arc length (`arcs`).
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    /// Band width for `banded`.
    #[arg(long, default_value_t = 2)]
    pub band: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Graph edge list destination (standard output when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Destination for the arc model, orientation or caterpillar.
    #[arg(long)]
    pub aux: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_to(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(path) => write_to(path, text),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

fn required<'a>(path: &'a Option<PathBuf>, flag: &str, strategy: Strategy) -> Result<&'a Path> {
    path.as_deref()
        .ok_or_else(|| Error::Usage(format!("strategy {} needs --{flag}", strategy.name())))
}

/// Loads the graph and computes the ordering the strategy asks for.
fn graph_and_ordering(args: &OrderArgs) -> Result<(Graph, LinearOrdering)> {
    let arcs = match args.strategy {
        Strategy::CircularArc => {
            let path = required(&args.arcs, "arcs", args.strategy)?;
            Some(format::parse_arc_model(&read(path)?)?)
        }
        _ => None,
    };
    let g = match (&args.input, &arcs) {
        (Some(path), arcs) => {
            let g = format::parse_graph(&read(path)?)?;
            if let Some(model) = arcs {
                if arcs_to_graph(model) != g {
                    return Err(Error::Core(cubicity_core::Error::Validation(
                        "the arc model's intersection graph differs from the input graph".into(),
                    )));
                }
            }
            g
        }
        (None, Some(model)) => arcs_to_graph(model),
        (None, None) => return Err(Error::Usage("--input is required".into())),
    };
    let ord = match args.strategy {
        Strategy::Heuristic => heuristic_ordering(&g, args.seed),
        Strategy::Exact => exact_bandwidth(&g, args.cap.unwrap_or(DEFAULT_EXACT_CAP))?.0,
        Strategy::File => {
            let path = required(&args.ordering, "ordering", args.strategy)?;
            let ord = format::parse_ordering(&read(path)?)?;
            ordering_width(&g, &ord)?;
            ord
        }
        Strategy::CircularArc => circular_arc_ordering(arcs.as_ref().expect("loaded above")),
        Strategy::Cocomparability => {
            let orientation = match (&args.orientation, args.find_orientation) {
                (Some(path), _) => format::parse_orientation(&read(path)?)?,
                (None, true) => {
                    find_transitive_orientation(&g, args.cap.unwrap_or(DEFAULT_ORIENTATION_CAP))?
                        .ok_or_else(|| {
                            cubicity_core::Error::Validation(
                                "the complement has no transitive orientation".into(),
                            )
                        })?
                }
                (None, false) => {
                    return Err(Error::Usage(
                        "strategy cocomparability needs --orientation or --find-orientation".into(),
                    ))
                }
            };
            cocomparability_ordering(&g, &orientation)?
        }
        Strategy::Atfree => {
            let path = required(&args.caterpillar, "caterpillar", args.strategy)?;
            atfree_ordering(&g, &format::parse_caterpillar(&read(path)?)?)?
        }
    };
    Ok((g, ord))
}

fn representation_text(rep: &IndifferenceRepresentation, cubes: bool) -> Result<String> {
    let mut text = format::write_representation(rep);
    if cubes {
        text.push_str(&format::write_cubes(&to_cubes(rep)?));
    }
    Ok(text)
}

/// Dimension bound promised for an ordering from `strategy` on a graph of
/// maximum degree `delta` whose ordering has width `width`.
pub fn claimed_bound(strategy: Strategy, delta: usize, width: usize) -> usize {
    let bound = match strategy {
        Strategy::CircularArc => 2 * delta + 1,
        Strategy::Cocomparability => 2 * delta,
        Strategy::Atfree => (3 * delta).saturating_sub(1),
        Strategy::Exact | Strategy::Heuristic | Strategy::File => width + 1,
    };
    bound.max(1)
}

/// Runs one command and returns the process exit status. Errors are input
/// problems; their exit status comes from [`Error::exit_code`].
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Order(args) => {
            let (g, ord) = graph_and_ordering(&args)?;
            let width = ordering_width(&g, &ord)?;
            emit(
                args.output.as_deref(),
                &format::write_ordering(&ord, Some(width)),
                stdout,
            )?;
            Ok(0)
        }
        Command::Construct(args) => {
            let (g, ord) = graph_and_ordering(&args.order)?;
            let rep = build_representation(&g, &ord)?;
            emit(
                args.order.output.as_deref(),
                &representation_text(&rep, args.cubes)?,
                stdout,
            )?;
            Ok(0)
        }
        Command::Verify(args) => {
            let g = format::parse_graph(&read(&args.input)?)?;
            let rep = format::parse_representation(&read(&args.rep)?)?;
            let report = verify_representation(&g, &rep)?;
            emit(
                args.output.as_deref(),
                &format::write_report(&report),
                stdout,
            )?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Pipeline(args) => pipeline(args, false, stdout),
        Command::Bound(args) => pipeline(args, true, stdout),
        Command::Gen(args) => generate_instance(args, stdout),
    }
}

fn pipeline(args: ConstructArgs, bound: bool, stdout: &mut dyn Write) -> Result<i32> {
    let (g, ord) = graph_and_ordering(&args.order)?;
    let rep = build_representation(&g, &ord)?;
    if let Some(path) = &args.order.output {
        write_to(path, &representation_text(&rep, args.cubes)?)?;
    }
    let report = verify_representation(&g, &rep)?;
    let mut text = format::write_report(&report);
    let mut ok = report.passed;
    if bound {
        let delta = g.max_degree();
        let claimed = claimed_bound(args.order.strategy, delta, report.width_checked);
        let holds = report.passed && rep.dims() <= claimed;
        text.push_str(&format!(
            "bound strategy {} delta {delta} width {} dims {} <= {claimed} holds {holds}\n",
            args.order.strategy.name(),
            report.width_checked,
            rep.dims(),
        ));
        ok &= holds;
    }
    emit(None, &text, stdout)?;
    Ok(if ok { 0 } else { 1 })
}

fn generate_instance(args: GenArgs, stdout: &mut dyn Write) -> Result<i32> {
    let (n, p, seed) = (args.n, args.density, args.seed);
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Usage(format!("--density {p} is outside [0, 1]")));
    }
    let (g, aux) = match args.family {
        Family::Random => (generate::random_graph(n, p, seed), None),
        Family::Arcs => {
            let model = generate::random_arc_model(n, p, seed);
            (arcs_to_graph(&model), Some(format::write_arc_model(&model)))
        }
        Family::Cocomparability => {
            let (g, o) = generate::random_cocomparability(n, p, seed);
            (g, Some(format::write_orientation(&o)))
        }
        Family::Caterpillar => {
            let (g, t) = generate::random_caterpillar(n, p, seed);
            (g, Some(format::write_caterpillar(&t)))
        }
        Family::Path => (families::path(n), None),
        Family::Cycle => (families::cycle(n), None),
        Family::Complete => (families::complete(n), None),
        Family::Star => (families::star(n), None),
        Family::Banded => (families::banded(n, args.band), None),
    };
    match (&args.aux, aux) {
        (Some(path), Some(text)) => write_to(path, &text)?,
        (Some(_), None) => {
            return Err(Error::Usage(
                "--aux only applies to arcs, cocomparability and caterpillar".into(),
            ))
        }
        _ => {}
    }
    emit(args.output.as_deref(), &format::write_graph(&g), stdout)?;
    Ok(0)
}

//! Command-line front end: generation, ordering, conversion, verification,
//! and exact parameter search over the canonical JSON documents.
//!
//! Exit codes: 0 success or exact match, 1 verification mismatch, 2 invalid
//! input, 3 brute-force size limit exceeded. All file writes are atomic and
//! canonical, so any command rerun on the same inputs is byte-identical.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use boxcube::io::{
    box_rep_from_json, boxicity_outcome_to_json, cube_rep_to_json, cube_rep_to_normalized_json,
    cubicity_outcome_to_json, graph_from_edge_list, graph_from_json, graph_to_json,
    interval_rep_from_json, interval_rep_to_json, ordering_to_json, representation_from_json,
    write_atomic, CubeDocument, RepresentationDocument,
};
use boxcube::{
    box_to_cube, boxicity_oracle, cube_construction, cubicity_oracle, edge_intersection,
    left_endpoint_ordering, random_interval_representation, verify_layers, Error, Graph, Result,
    DEFAULT_ORACLE_LIMIT,
};

/// Most lines a single report section may spend on per-edge listings.
const REPORT_CAP: usize = 16;

#[derive(Parser)]
#[command(
    name = "boxcube",
    version,
    about = "Convert interval and box intersection representations into unit cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family or a seeded random interval family.
    Gen(GenArgs),
    /// Emit the left-endpoint vertex ordering of an interval document.
    Order(OrderArgs),
    /// Convert an interval or box document into a cube document.
    Convert(ConvertArgs),
    /// Check a representation document against a graph and report diffs.
    Verify(VerifyArgs),
    /// Exact boxicity or cubicity of a tiny graph, with witnesses.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Star,
    Path,
    Cycle,
    Complete,
    RandomInterval,
}

#[derive(Args)]
struct GenArgs {
    /// Graph family to generate.
    #[arg(long, value_enum)]
    family: Family,
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// RNG seed; required by (and only used for) random-interval.
    #[arg(long)]
    seed: Option<u64>,
    /// Destination for the graph document.
    #[arg(long)]
    out: PathBuf,
    /// Destination for the witnessing interval document (random-interval).
    #[arg(long)]
    rep_out: Option<PathBuf>,
}

#[derive(Args)]
struct OrderArgs {
    /// Interval document to order.
    #[arg(long = "in")]
    input: PathBuf,
    /// Destination for the ordering document.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertKind {
    IntervalToCube,
    BoxToCube,
}

#[derive(Args)]
struct ConvertArgs {
    /// Which conversion to run.
    #[arg(long, value_enum)]
    kind: ConvertKind,
    /// Source interval or box document.
    #[arg(long = "in")]
    input: PathBuf,
    /// Destination for the cube document.
    #[arg(long)]
    out: PathBuf,
    /// Emit side 1 with rational anchors instead of integer anchors.
    #[arg(long)]
    normalize: bool,
    /// Skip re-checking the output against the input graph before writing.
    #[arg(long)]
    no_selfcheck: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph document (JSON) or plain edge list.
    #[arg(long)]
    graph: PathBuf,
    /// Representation document of any kind.
    #[arg(long)]
    rep: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Parameter {
    Cubicity,
    Boxicity,
}

#[derive(Args)]
struct OracleArgs {
    /// Graph document (JSON) or plain edge list.
    #[arg(long)]
    graph: PathBuf,
    /// Which parameter to compute exactly.
    #[arg(long, value_enum)]
    parameter: Parameter,
    /// Largest layer count to try before reporting an exceeded marker.
    #[arg(long = "max-b", default_value_t = 4)]
    max_b: usize,
    /// Vertex-count ceiling for the exponential search; overrides the
    /// BOXCUBE_BRUTE_LIMIT environment variable.
    #[arg(long)]
    limit: Option<usize>,
    /// Destination for the result document.
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::SizeLimit { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Order(args) => cmd_order(args),
        Command::Convert(args) => cmd_convert(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

/// Reads a graph from canonical JSON or, when the file does not start with
/// an object, from a plain `u v` edge list.
fn load_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        graph_from_json(&text)
    } else {
        graph_from_edge_list(&text)
    }
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode> {
    if args.n == 0 {
        return Err(Error::InvalidArgument("--n must be at least 1".into()));
    }
    if args.family != Family::RandomInterval && args.seed.is_some() {
        return Err(Error::InvalidArgument(
            "--seed is only meaningful for --family random-interval".into(),
        ));
    }
    let graph = match args.family {
        Family::Star => Graph::star(args.n)?,
        Family::Path => Graph::path(args.n),
        Family::Cycle => Graph::cycle(args.n)?,
        Family::Complete => Graph::complete(args.n),
        Family::RandomInterval => {
            let seed = args.seed.ok_or_else(|| {
                Error::InvalidArgument("--family random-interval requires --seed".into())
            })?;
            let rep = random_interval_representation(args.n, seed);
            let rep_out = args.rep_out.as_deref().ok_or_else(|| {
                Error::InvalidArgument("--family random-interval requires --rep-out".into())
            })?;
            write_atomic(rep_out, &interval_rep_to_json(&rep))?;
            rep.intersection_graph()
        }
    };
    if args.family != Family::RandomInterval && args.rep_out.is_some() {
        return Err(Error::InvalidArgument(
            "--rep-out is only meaningful for --family random-interval".into(),
        ));
    }
    write_atomic(&args.out, &graph_to_json(&graph))?;
    println!("wrote graph with n={} and {} edges", graph.n(), graph.edge_count());
    Ok(ExitCode::SUCCESS)
}

fn cmd_order(args: OrderArgs) -> Result<ExitCode> {
    let rep = interval_rep_from_json(&std::fs::read_to_string(&args.input)?)?;
    let f = left_endpoint_ordering(&rep);
    write_atomic(&args.out, &ordering_to_json(&f))?;
    println!("wrote left-endpoint ordering for {} vertices", rep.n());
    Ok(ExitCode::SUCCESS)
}

fn cmd_convert(args: ConvertArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&args.input)?;
    let (cube, input_graph) = match args.kind {
        ConvertKind::IntervalToCube => {
            let rep = interval_rep_from_json(&text)?;
            let built = cube_construction(&rep);
            if !args.no_selfcheck {
                if let Some(pipeline) = &built.pipeline {
                    let report = verify_layers(&pipeline.padded_graph, &pipeline.layers)?;
                    if !report.all_ok() {
                        return Err(Error::Internal(
                            "constructed layers failed their audit".into(),
                        ));
                    }
                }
            }
            (built.cube, rep.intersection_graph())
        }
        ConvertKind::BoxToCube => {
            let rep = box_rep_from_json(&text)?;
            (box_to_cube(&rep), rep.intersection_graph())
        }
    };
    if !args.no_selfcheck && cube.intersection_graph() != input_graph {
        return Err(Error::Internal(
            "cube intersection graph differs from the input graph".into(),
        ));
    }
    let document = if args.normalize {
        cube_rep_to_normalized_json(&cube)
    } else {
        cube_rep_to_json(&cube)
    };
    write_atomic(&args.out, &document)?;
    println!(
        "wrote cube family with dims={} side={} for n={}",
        cube.dims(),
        cube.side(),
        cube.n()
    );
    Ok(ExitCode::SUCCESS)
}

/// Prints a capped list of pair lines, returning how many matched.
fn list_pairs(
    pairs: impl Iterator<Item = (usize, usize)>,
    mut line: impl FnMut(usize, usize) -> String,
) -> usize {
    let mut count = 0;
    for (u, v) in pairs {
        count += 1;
        if count <= REPORT_CAP {
            println!("{}", line(u, v));
        }
    }
    if count > REPORT_CAP {
        println!("  ... and {} more", count - REPORT_CAP);
    }
    count
}

fn describe_representation(doc: &RepresentationDocument) -> String {
    match doc {
        RepresentationDocument::Interval(rep) => format!("interval family (n={})", rep.n()),
        RepresentationDocument::Unit(rep) => format!(
            "shared-length interval family (n={}, length={})",
            rep.n(),
            rep.length()
        ),
        RepresentationDocument::Boxes(rep) => {
            format!("box family (n={}, dims={})", rep.n(), rep.dims())
        }
        RepresentationDocument::Cube(CubeDocument::Integer(cube)) => format!(
            "cube family (n={}, dims={}, side={})",
            cube.n(),
            cube.dims(),
            cube.side()
        ),
        RepresentationDocument::Cube(CubeDocument::Normalized(cube)) => format!(
            "cube family (n={}, dims={}, side=1, rational anchors)",
            cube.n(),
            cube.dims()
        ),
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let doc = representation_from_json(&std::fs::read_to_string(&args.rep)?)?;
    if doc.n() != graph.n() {
        return Err(Error::InvalidArgument(format!(
            "representation has {} vertices but the graph has {}",
            doc.n(),
            graph.n()
        )));
    }
    println!("graph: n={}, edges={}", graph.n(), graph.edge_count());
    println!("representation: {}", describe_representation(&doc));

    let layers = doc.interval_layers();
    let layer_graphs: Vec<Graph> = layers.iter().map(|l| l.intersection_graph()).collect();
    let realized = if layer_graphs.is_empty() {
        println!("no dimensions: the representation claims a complete graph");
        Graph::complete(graph.n())
    } else {
        edge_intersection(&layer_graphs)?
    };

    for (p, lg) in layer_graphs.iter().enumerate() {
        let superset = graph.edges().all(|(u, v)| lg.has_edge(u, v));
        let verdict = if superset {
            "contains all input edges"
        } else {
            "MISSING input edges"
        };
        let report = lg.diameter();
        println!(
            "dimension {p}: {verdict}; component diameters {:?}",
            report.component_diameters
        );
    }

    if !layer_graphs.is_empty() {
        let non_edges = (0..graph.n())
            .flat_map(|u| ((u + 1)..graph.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !graph.has_edge(u, v));
        list_pairs(non_edges, |u, v| {
            let killers: Vec<usize> = layer_graphs
                .iter()
                .enumerate()
                .filter(|(_, lg)| !lg.has_edge(u, v))
                .map(|(p, _)| p)
                .collect();
            if killers.is_empty() {
                format!("non-edge ({u}, {v}): not separated in any dimension")
            } else {
                format!("non-edge ({u}, {v}): separated by dimensions {killers:?}")
            }
        });
    }

    if realized == graph {
        println!("result: MATCH");
        return Ok(ExitCode::SUCCESS);
    }
    let missing = list_pairs(
        graph.edges().filter(|&(u, v)| !realized.has_edge(u, v)),
        |u, v| format!("missing edge ({u}, {v})"),
    );
    let extra = list_pairs(
        realized.edges().filter(|&(u, v)| !graph.has_edge(u, v)),
        |u, v| format!("extra edge ({u}, {v})"),
    );
    println!("result: MISMATCH ({missing} missing, {extra} extra)");
    Ok(ExitCode::from(1))
}

/// The brute-force ceiling: an explicit flag wins, then the
/// BOXCUBE_BRUTE_LIMIT environment variable, then the built-in default.
fn resolve_limit(flag: Option<usize>) -> Result<usize> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var("BOXCUBE_BRUTE_LIMIT") {
        Ok(raw) => raw.parse().map_err(|_| {
            Error::InvalidArgument(format!(
                "BOXCUBE_BRUTE_LIMIT must be a non-negative integer, got {raw:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORACLE_LIMIT),
        Err(err) => Err(Error::InvalidArgument(format!("BOXCUBE_BRUTE_LIMIT: {err}"))),
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode> {
    let graph = load_graph(&args.graph)?;
    let limit = resolve_limit(args.limit)?;
    let (document, value) = match args.parameter {
        Parameter::Cubicity => {
            let outcome = cubicity_oracle(&graph, args.max_b, limit)?;
            (cubicity_outcome_to_json(&outcome), outcome.value())
        }
        Parameter::Boxicity => {
            let outcome = boxicity_oracle(&graph, args.max_b, limit)?;
            (boxicity_outcome_to_json(&outcome), outcome.value())
        }
    };
    write_atomic(&args.out, &document)?;
    let name = match args.parameter {
        Parameter::Cubicity => "cubicity",
        Parameter::Boxicity => "boxicity",
    };
    match value {
        Some(v) => println!("{name} = {v}"),
        None => println!("{name} exceeds max-b = {}", args.max_b),
    }
    Ok(ExitCode::SUCCESS)
}

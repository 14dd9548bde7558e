//! `resolve`: exact metric and partition dimension, corona products and
//! claim checks from the command line.
//!
//! Exit status: 0 when everything computed or passed, 1 when a guarded claim
//! failed or a construction did not verify, 2 on usage or input errors, 3
//! when a result is inconclusive (budget or size limits).

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use resolving_core::construct::{
    construct_from_resolving_set, construct_path_empty_partition, construct_star_partition,
    construct_sum_partition, ConstructionOutput,
};
use resolving_core::harness::{
    default_grid, evaluate_claims, parse_claim_list, parse_grid, run_sweep, ClaimResult,
    HarnessConfig, Instance, Status, Summary,
};
use resolving_core::resolve::{check_resolving_partition, check_resolving_set};
use resolving_core::solver::{
    metric_dimension, metric_dimension_oracle, partition_dimension, partition_dimension_oracle,
    DEFAULT_NODE_BUDGET,
};
use resolving_core::{
    corona, CoronaGraph, Error, FamilySpec, Graph, Partition, SolverConfig, Verdict, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "resolve",
    version,
    about = "Exact metric and partition dimension of graphs and corona products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SolveOpts {
    /// Search-node budget per solve.
    #[arg(long, env = "RESOLVE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

impl SolveOpts {
    fn config(self) -> SolverConfig {
        let cfg = SolverConfig::with_budget(self.budget);
        match self.threads {
            Some(n) => cfg.threads(n),
            None => cfg,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Metric dimension with a minimum resolving set.
    Dim {
        /// Family spec (e.g. `corona(path:3,complete:2)`) or edge-list file.
        graph: String,
        /// Use the naive enumeration instead of the pruned search.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// Partition dimension with a minimum resolving partition.
    Pd {
        graph: String,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// Emit the corona product of two graphs.
    Corona {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value_t = Emit::Edgelist)]
        emit: Emit,
    },
    /// Check whether a vertex set resolves a graph.
    VerifySet {
        graph: String,
        /// Comma-separated vertex ids.
        #[arg(long)]
        set: String,
    },
    /// Check whether a partition resolves a graph.
    VerifyPartition {
        graph: String,
        /// Blocks separated by `|`, vertices by `,`.
        #[arg(long)]
        partition: String,
    },
    /// Build and verify an explicit resolving partition of a corona.
    Construct {
        #[command(subcommand)]
        which: Construction,
    },
    /// Evaluate claims on one (G, H) instance.
    Check {
        /// Claim id (`C1`..`C18`), comma-separated list or `all`.
        claims: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Report wall-clock milliseconds instead of 0.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// Evaluate claims over a grid of instances.
    Sweep {
        /// `default` or a file of `G H` spec pairs.
        #[arg(long, default_value = "default")]
        grid: String,
        #[arg(long, default_value = "all")]
        claims: String,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        opts: SolveOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Edgelist,
}

#[derive(Subcommand)]
enum Construction {
    /// From a minimum resolving set of G ⊙ H and a minimum resolving partition of G.
    Thm2 {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// From minimum resolving partitions of G and H (needs diam(H) <= 2).
    Sum {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// G ⊙ K_{1,n}.
    Star {
        #[arg(long)]
        g: String,
        /// Number of leaves of the star.
        #[arg(long)]
        n: usize,
    },
    /// P_{n1} ⊙ N_{n2}.
    PathEmpty {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
    },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded(_) | Error::OrderTooLarge { .. } => 3,
            Error::VerificationFailed(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// A family spec, or else a path to an edge-list file.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    match arg.parse::<FamilySpec>() {
        Ok(spec) => Ok(spec.build()?),
        Err(spec_err) => {
            let path = Path::new(arg);
            if path.is_file() {
                let text = fs::read_to_string(path)?;
                Ok(Graph::from_edge_list(&text)?)
            } else {
                Err(Failure::from(spec_err))
            }
        }
    }
}

fn load_spec(arg: &str) -> Result<FamilySpec, Failure> {
    Ok(arg.parse::<FamilySpec>()?)
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Dim {
            graph,
            oracle,
            opts,
        } => {
            let g = load_graph(&graph)?;
            let r = if oracle {
                metric_dimension_oracle(&g)?
            } else {
                metric_dimension(&g, &opts.config())?
            };
            writeln!(out, "dim = {}", r.value)?;
            writeln!(out, "set = {}", r.witness)?;
            Ok(0)
        }
        Command::Pd {
            graph,
            oracle,
            opts,
        } => {
            let g = load_graph(&graph)?;
            let r = if oracle {
                partition_dimension_oracle(&g)?
            } else {
                partition_dimension(&g, &opts.config())?
            };
            writeln!(out, "pd = {}", r.value)?;
            writeln!(out, "partition = {}", r.witness)?;
            Ok(0)
        }
        Command::Corona {
            g,
            h,
            emit: Emit::Edgelist,
        } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let cg = corona(&g, &h)?;
            write_corona(out, &cg)?;
            Ok(0)
        }
        Command::VerifySet { graph, set } => {
            let g = load_graph(&graph)?;
            let s = VertexSet::parse(&set, g.order())?;
            write_verdict(out, check_resolving_set(&g.distances(), &s))?;
            Ok(0)
        }
        Command::VerifyPartition { graph, partition } => {
            let g = load_graph(&graph)?;
            let p = Partition::parse(&partition, g.order())?;
            write_verdict(out, check_resolving_partition(&g.distances(), &p))?;
            Ok(0)
        }
        Command::Construct { which } => construct(which, out),
        Command::Check {
            claims,
            g,
            h,
            timings,
            opts,
        } => {
            let ids = parse_claim_list(&claims)?;
            let (gs, hs) = (load_spec(&g)?, load_spec(&h)?);
            let inst = Instance::from_specs(&gs, &hs)?;
            let cfg = HarnessConfig {
                solver: opts.config(),
            };
            let results = evaluate_claims(&ids, &inst, &cfg);
            write_report(out, &results, timings)?;
            Ok(report_status(&results))
        }
        Command::Sweep {
            grid,
            claims,
            out: path,
            timings,
            opts,
        } => {
            let ids = parse_claim_list(&claims)?;
            let grid = if grid == "default" {
                default_grid()
            } else {
                parse_grid(&fs::read_to_string(&grid)?)?
            };
            let cfg = HarnessConfig {
                solver: opts.config(),
            };
            let results = run_sweep(&grid, &ids, &cfg)?;
            match path {
                Some(p) => {
                    let mut file = io::BufWriter::new(fs::File::create(p)?);
                    write_report(&mut file, &results, timings)?;
                    file.flush()?;
                }
                None => write_report(out, &results, timings)?,
            }
            eprintln!("{}", Summary::of(&results));
            Ok(report_status(&results))
        }
    }
}

fn construct(which: Construction, out: &mut impl Write) -> Outcome {
    let (cg, built) = match which {
        Construction::Thm2 { g, h, opts } => {
            let cg = corona_of(&g, &h)?;
            let cfg = opts.config();
            let s = metric_dimension(&cg.graph, &cfg)?.witness;
            let pg = partition_dimension(cg.base(), &cfg)?.witness;
            let built = construct_from_resolving_set(&cg, &s, &pg);
            (cg, built)
        }
        Construction::Sum { g, h, opts } => {
            let cg = corona_of(&g, &h)?;
            let cfg = opts.config();
            let pg = partition_dimension(cg.base(), &cfg)?.witness;
            let ph = partition_dimension(cg.fiber(), &cfg)?.witness;
            let built = construct_sum_partition(&cg, &pg, &ph);
            (cg, built)
        }
        Construction::Star { g, n } => {
            let cg = corona_of(&g, &FamilySpec::Star(n).to_string())?;
            let built = construct_star_partition(&cg);
            (cg, built)
        }
        Construction::PathEmpty { n1, n2 } => {
            let (cg, built) = construct_path_empty_partition(n1, n2)?;
            (cg, Ok(built))
        }
    };
    let built: ConstructionOutput = built?;
    writeln!(out, "# {}", built.provenance)?;
    writeln!(
        out,
        "# corona order {}, {} blocks",
        cg.graph.order(),
        built.size
    )?;
    writeln!(out, "# verified: resolving")?;
    writeln!(out, "{}", built.partition)?;
    Ok(0)
}

fn corona_of(g: &str, h: &str) -> Result<CoronaGraph, Failure> {
    Ok(corona(&load_graph(g)?, &load_graph(h)?)?)
}

fn write_corona(out: &mut impl Write, cg: &CoronaGraph) -> io::Result<()> {
    let (n1, n2) = (cg.n1(), cg.n2());
    writeln!(
        out,
        "# corona product: n1 = {n1}, n2 = {n2}, order {}",
        cg.graph.order()
    )?;
    writeln!(out, "# centres: 0..{}", n1 - 1)?;
    for i in 0..n1 {
        let r = cg.copy(i);
        writeln!(
            out,
            "# copy {i}: {}..{} (attached to centre {i})",
            r.start,
            r.end - 1
        )?;
    }
    write!(out, "{}", cg.graph.to_edge_list())
}

fn write_verdict(out: &mut impl Write, v: Verdict) -> io::Result<()> {
    match v {
        Verdict::Resolving => writeln!(out, "resolving"),
        Verdict::Conflict(u, w) => writeln!(
            out,
            "not resolving: vertices {u} and {w} share a representation"
        ),
    }
}

fn write_report(out: &mut impl Write, results: &[ClaimResult], timings: bool) -> io::Result<()> {
    for r in results {
        writeln!(out, "{}", r.to_json_line(timings))?;
    }
    Ok(())
}

fn report_status(results: &[ClaimResult]) -> u8 {
    if results.iter().any(|r| r.status == Status::Fail) {
        1
    } else if results.iter().any(|r| r.status == Status::Inconclusive) {
        3
    } else {
        0
    }
}

//! Command-line front end. [`run`] returns the process exit code:
//! 0 found / accepted, 1 none / rejected, 2 invalid input, 3 budget.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::certify::{cross_validate, verify_certificate, Certificate, CrossValidation};
use crate::construct::{self, Construction};
use crate::decompose::{self, ComponentSearch};
use crate::dot::to_dot;
use crate::error::{CertError, ConstructError, DecomposeError};
use crate::graph::PartitionedGraph;
use crate::listcover::{self, ListInstance};
use crate::transversal::{find_it, is_block_minimal, ItOutcome, SearchBudget};

const OK: i32 = 0;
const REJECTED: i32 = 1;
const INVALID: i32 = 2;
const BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "itkit", version, about = "Partitioned graphs with no independent transversal")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Search node limit.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Wall-clock limit in milliseconds.
    #[arg(long)]
    millis: Option<u64>,
}

impl BudgetArgs {
    fn get(self) -> SearchBudget {
        let b = SearchBudget::nodes(self.budget);
        match self.millis {
            Some(ms) => b.with_millis(ms),
            None => b,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    CompleteBipartite,
    SzaboTardos,
    Yuster,
    CyclePartition,
    ThreeCycles,
    Multipartite,
    LocallySparse,
    ListColoring,
    StarFree,
    Ahhs,
    JoinPower,
    GeneralSzaboTardos,
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    l1: Option<usize>,
    #[arg(long)]
    l2: Option<usize>,
    #[arg(long)]
    l3: Option<usize>,
    /// Side sizes for complete-bipartite.
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Seed graph for join-power.
    #[arg(long)]
    seed: Option<PathBuf>,
    #[arg(short, long)]
    output: PathBuf,
    #[arg(long)]
    cert: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// Search for an independent transversal.
    It {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// No IT, but one after deleting any block.
    Minimal {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Degrees, multiplicity, components and block sizes.
    Stats {
        graph: PathBuf,
    },
    /// List cover graph conditions.
    Listcover {
        graph: PathBuf,
    },
    /// Block-minimal, union of complete bipartite graphs, r - 1 components.
    Abc {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named construction.
    Gen(GenArgs),
    /// Inspect a graph.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Replay and verify a certificate.
    Certify {
        certificate: PathBuf,
        /// Graph the replay must reproduce.
        #[arg(long)]
        against: Option<PathBuf>,
        /// Vertex map written by `decompose --map`, applied before comparing.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        cross_validate: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Turn a qualifying graph into a join certificate.
    Decompose {
        graph: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Where to write the replayed-to-input vertex map.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Locate components through induced matching configurations.
        #[arg(long)]
        imc: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// List instance to list cover graph.
    Cover {
        instance: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// List cover graph to list instance.
    Recover {
        graph: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Graphviz rendering with blocks as clusters.
    ExportDot {
        graph: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// A failure mapped to an exit code and a machine-readable message.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: INVALID, kind: "invalid_input", message: message.into() }
    }

    fn budget(nodes: u64) -> Self {
        Failure {
            code: BUDGET,
            kind: "budget_exceeded",
            message: format!("search budget exhausted after {nodes} nodes"),
        }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Budget(b) => Failure::budget(b.nodes),
            e => Failure::invalid(e.to_string()),
        }
    }
}

impl From<DecomposeError> for Failure {
    fn from(e: DecomposeError) -> Self {
        match e {
            DecomposeError::Budget(b) => Failure::budget(b.nodes),
            DecomposeError::PreconditionFailed(m) => {
                Failure { code: REJECTED, kind: "precondition_failed", message: m }
            }
            e => Failure { code: REJECTED, kind: "decompose_failed", message: e.to_string() },
        }
    }
}

impl From<CertError> for Failure {
    fn from(e: CertError) -> Self {
        match e {
            CertError::Malformed(m) => Failure::invalid(m),
            CertError::Budget(b) => Failure::budget(b.nodes),
            CertError::BaseBudgetExceeded { nodes, .. } => Failure::budget(nodes),
            e => Failure { code: REJECTED, kind: "certificate_rejected", message: e.to_string() },
        }
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<PartitionedGraph, Failure> {
    PartitionedGraph::from_json_str(&read(path)?).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::invalid(format!("missing --{flag}")))
}

fn generate(args: &GenArgs) -> Outcome {
    let (c, report): (Construction, Option<serde_json::Value>) = match args.family {
        Family::CompleteBipartite => {
            let g = construct::gen_complete_bipartite(need(args.a, "a")?, need(args.b, "b")?)?;
            (construct::CertifiedBuilder::new(g).finish(), None)
        }
        Family::SzaboTardos => (construct::gen_szabo_tardos(need(args.d, "d")?)?, None),
        Family::Yuster => (construct::gen_yuster(need(args.d, "d")?)?, None),
        Family::CyclePartition => (construct::gen_cycle_partition(need(args.r, "r")?)?, None),
        Family::ThreeCycles => {
            let c = construct::gen_three_cycles(need(args.l1, "l1")?, need(args.l2, "l2")?, need(args.l3, "l3")?)?;
            (c, None)
        }
        Family::Multipartite => {
            let g = construct::gen_multipartite_base(need(args.r, "r")?, need(args.m, "m")?)?;
            (construct::CertifiedBuilder::new(g).finish(), None)
        }
        Family::LocallySparse => (construct::gen_locally_sparse(need(args.d, "d")?, need(args.m, "m")?)?, None),
        Family::ListColoring => (construct::gen_list_coloring_cx(need(args.d, "d")?)?, None),
        Family::StarFree => {
            let (c, rep) = construct::gen_star_free_cx(need(args.k, "k")?, need(args.m, "m")?)?;
            (c, Some(json!(rep)))
        }
        Family::Ahhs => (construct::gen_ahhs_cx(need(args.d, "d")?)?, None),
        Family::JoinPower => {
            let seed_path = args.seed.as_ref().ok_or_else(|| Failure::invalid("missing --seed"))?;
            let seed = load_graph(seed_path)?;
            let (c, rep) = construct::gen_join_power(&seed, need(args.n, "n")?, args.k, &args.budget.get())?;
            (c, Some(json!(rep)))
        }
        Family::GeneralSzaboTardos => {
            (construct::gen_general_szabo_tardos(need(args.n, "n")?, need(args.r, "r")?)?, None)
        }
    };
    write(&args.output, &(c.graph.to_json_string() + "\n"))?;
    if let Some(path) = &args.cert {
        write(path, &(c.certificate.to_json_string() + "\n"))?;
    }
    if let Some(rep) = report {
        println!("{rep}");
    }
    Ok(OK)
}

fn check(cmd: &CheckCommand) -> Outcome {
    match cmd {
        CheckCommand::It { graph, budget } => {
            let g = load_graph(graph)?;
            match find_it(&g, &budget.get()) {
                ItOutcome::Found(t) => {
                    println!("{}", json!({"result": "found", "transversal": t.vertices()}));
                    Ok(OK)
                }
                ItOutcome::NoneExists { nodes } => {
                    println!("{}", json!({"result": "none", "nodes": nodes}));
                    Ok(REJECTED)
                }
                ItOutcome::BudgetExceeded { nodes } => Err(Failure::budget(nodes)),
            }
        }
        CheckCommand::Minimal { graph, budget } => {
            let g = load_graph(graph)?;
            let minimal = is_block_minimal(&g, &budget.get()).map_err(|b| Failure::budget(b.nodes))?;
            println!("{}", json!({ "block_minimal": minimal }));
            Ok(if minimal { OK } else { REJECTED })
        }
        CheckCommand::Stats { graph } => {
            println!("{}", json!(load_graph(graph)?.stats()));
            Ok(OK)
        }
        CheckCommand::Listcover { graph } => {
            let cond = listcover::check_list_cover_conditions(&load_graph(graph)?);
            println!("{}", json!(cond));
            Ok(if cond.a && cond.b { OK } else { REJECTED })
        }
        CheckCommand::Abc { graph, budget } => {
            let abc = decompose::check_abc(&load_graph(graph)?, &budget.get()).map_err(|b| Failure::budget(b.nodes))?;
            println!("{}", json!(abc));
            Ok(if abc.all() { OK } else { REJECTED })
        }
    }
}

fn certify(cert: &Path, against: Option<&Path>, map: Option<&Path>, cross: bool, budget: SearchBudget) -> Outcome {
    let cert = Certificate::from_json_str(&read(cert)?)?;
    let (mut replayed, report) = verify_certificate(&cert, &budget)?;
    if let Some(path) = map {
        let relabel: Vec<usize> =
            serde_json::from_str(&read(path)?).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
        replayed = replayed.relabeled(&relabel).map_err(|e| Failure::invalid(e.to_string()))?;
    }
    let mut summary = json!({
        "result": "verified",
        "n": replayed.n(),
        "r": replayed.r(),
        "base_checks": report.base_checks,
        "cached_checks": report.cached_checks,
    });
    if let Some(path) = against {
        let target = load_graph(path)?;
        let same = target.to_json_string() == replayed.to_json_string();
        summary["matches_target"] = json!(same);
        if !same {
            summary["result"] = json!("mismatch");
            println!("{summary}");
            return Ok(REJECTED);
        }
    }
    if cross {
        match cross_validate(&cert, &budget)?.1 {
            CrossValidation::Agree { nodes } => summary["cross_validation"] = json!({"agree": true, "nodes": nodes}),
            CrossValidation::Counterexample(t) => {
                summary["result"] = json!("counterexample");
                summary["transversal"] = json!(t.vertices());
                println!("{summary}");
                return Ok(REJECTED);
            }
        }
    }
    println!("{summary}");
    Ok(OK)
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen(args) => generate(&args),
        Command::Check(cmd) => check(&cmd),
        Command::Certify { certificate, against, map, cross_validate, budget } => {
            certify(&certificate, against.as_deref(), map.as_deref(), cross_validate, budget.get())
        }
        Command::Decompose { graph, output, map, imc, budget } => {
            let g = load_graph(&graph)?;
            let search = if imc { ComponentSearch::Imc } else { ComponentSearch::Scan };
            let d = decompose::decompose_to_certificate_with(&g, &budget.get(), search)?;
            write(&output, &(d.certificate.to_json_string() + "\n"))?;
            if let Some(path) = map {
                write(&path, &(json!(d.relabel).to_string() + "\n"))?;
            }
            Ok(OK)
        }
        Command::Cover { instance, output } => {
            let inst = ListInstance::from_json_str(&read(&instance)?).map_err(|e| Failure::invalid(e.to_string()))?;
            let g = listcover::cover_graph(&inst).map_err(|e| Failure::invalid(e.to_string()))?;
            write(&output, &(g.to_json_string() + "\n"))?;
            Ok(OK)
        }
        Command::Recover { graph, output } => {
            let g = load_graph(&graph)?;
            let inst = listcover::recover_instance(&g).map_err(|e| Failure {
                code: REJECTED,
                kind: "not_cover_graph",
                message: e.to_string(),
            })?;
            write(&output, &(inst.to_json_string() + "\n"))?;
            Ok(OK)
        }
        Command::ExportDot { graph, output } => {
            write(&output, &to_dot(&load_graph(&graph)?))?;
            Ok(OK)
        }
    }
}

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return OK;
        }
        Err(e) => {
            let message = e.to_string();
            eprintln!("{}", json!({"error": "usage", "message": message.trim_end()}));
            return INVALID;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("{}", json!({"error": f.kind, "message": f.message}));
            f.code
        }
    }
}

//! `distgame`: solve, check, generate, kernelize and benchmark placement
//! game instances stored as named JSON documents.
//!
//! Exit codes: 0 found/stable, 1 none/unstable, 2 budget exhausted,
//! 3 input or usage error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use distgame::exact::{brute_force_search, solve_ef_and_jump, solve_ef_fixed_interested};
use distgame::generators::{
    gen_3partition_path, gen_3partition_tree, gen_counterexample, gen_from_3partition,
    gen_from_clique, gen_from_cnf, gen_from_cubic_bisection, gen_random, CounterexampleFamily,
    PrefShapeKind, RandomGameParams, ReductionArtifact,
};
use distgame::parameterized::{
    compute_vertex_cover, kernelize_by_vc, solve_ef_diameter, solve_ef_nd, solve_ef_vc,
};
use distgame::structured::{
    dispatch_solve, dynamics_symmetric, solve_ef_clique_or_star, solve_ef_in_star,
    solve_ef_out_star, solve_jump_swap_acyclic, MoveKind,
};
use distgame::{
    build_distance_matrix, stability, Allocation, Game, GameError, SearchConfig, SolveOutcome,
    SolveStatus, StabilityNotion, Topology,
};

use distgame_cli::format::{
    allocation_names, load_allocation, load_instance, parse_dimacs_3cnf, render_report_human,
    render_result_human, report_doc, result_document, save_instance, serialize_allocation,
    status_name, CheckDocument, CliError, NamedGame, FORMAT_VERSION,
};

#[derive(Parser)]
#[command(name = "distgame", version, about = "Distance-preservation placement games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide existence of a stable allocation and print a witness if found.
    Solve(SolveArgs),
    /// Recompute the stability report of a given allocation.
    Check(CheckArgs),
    /// Build an instance from a reduction, counterexample or random family.
    Generate(GenerateArgs),
    /// Shrink an instance to its vertex-cover kernel.
    Kernelize(KernelizeArgs),
    /// Run solvers over a directory of instances and cross-check them.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NotionArg {
    Ef,
    Swap,
    Jump,
    EfJump,
}

impl NotionArg {
    fn notion(self) -> StabilityNotion {
        match self {
            NotionArg::Ef => StabilityNotion::EnvyFree,
            NotionArg::Swap => StabilityNotion::SwapStable,
            NotionArg::Jump => StabilityNotion::JumpStable,
            NotionArg::EfJump => StabilityNotion::EnvyFreeJumpStable,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolverArg {
    Auto,
    Brute,
    InStar,
    OutStar,
    Nd,
    Vc,
    Diameter,
    SymmetricDynamics,
    Acyclic,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file to solve.
    file: PathBuf,
    /// Stability notion to decide.
    #[arg(long, value_enum)]
    notion: NotionArg,
    /// Solver to run; `auto` picks by topology and preference shape.
    #[arg(long, value_enum, default_value_t = SolverArg::Auto)]
    solver: SolverArg,
    /// Keep the fixed deterministic schedule (always on; accepted for
    /// scripting symmetry).
    #[arg(long)]
    deterministic: bool,
    /// Node budget for enumerative solvers; exceeding it aborts (exit 2).
    #[arg(long)]
    budget: Option<u64>,
    /// Emit the result document as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Instance file.
    file: PathBuf,
    /// Allocation file: an object mapping agent names to vertex names.
    #[arg(long)]
    allocation: PathBuf,
    /// Emit the check document as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    family: FamilyArg,
}

#[derive(Subcommand)]
enum FamilyArg {
    /// Numeric-partition instance: groups of items must fill equal-sum bins.
    ThreePartition {
        /// Item sizes, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        items: Vec<u32>,
        /// Number of bins.
        #[arg(long)]
        groups: usize,
        /// Common bin sum.
        #[arg(long)]
        bound: u32,
        /// Topology layout for the bins.
        #[arg(long, value_enum, default_value_t = LayoutArg::Blocks)]
        layout: LayoutArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Balanced-bisection instance over a cubic source topology.
    Bisection {
        /// Instance file providing the cubic topology (agents ignored).
        #[arg(long, conflicts_with = "complete")]
        source: Option<PathBuf>,
        /// Use the complete graph on N vertices as the source.
        #[arg(long, value_name = "N")]
        complete: Option<usize>,
        /// Cut-size parameter of the bisection question.
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Satisfiability instance from a DIMACS file of 3-literal clauses.
    Cnf {
        /// DIMACS CNF input path.
        dimacs: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Clique-search instance over a source topology.
    Clique {
        /// Instance file providing the source topology (agents ignored).
        #[arg(long, conflicts_with_all = ["complete", "cycle"])]
        source: Option<PathBuf>,
        /// Use the complete graph on N vertices as the source.
        #[arg(long, value_name = "N", conflicts_with = "cycle")]
        complete: Option<usize>,
        /// Use the N-cycle as the source.
        #[arg(long, value_name = "N")]
        cycle: Option<usize>,
        /// Clique size to search for.
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Small instances with a provable stability gap.
    Counterexample {
        #[arg(value_enum)]
        family: CounterexampleArg,
        /// Agent count (no-ef-cycle only).
        #[arg(long)]
        agents: Option<usize>,
        /// Write the bundled swap-stable witness (swap-not-ef only).
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Seeded random instance on a connected topology.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        agents: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ShapeArg::Generic)]
        shape: ShapeArg,
        /// Probability of each extra edge on top of the random tree.
        #[arg(long, default_value_t = 0.15)]
        edge_prob: f64,
        /// Probability that an agent pair (or arc) carries a preference.
        #[arg(long, default_value_t = 0.5)]
        want_prob: f64,
        /// Ideal distances are uniform in 1..=max-ideal.
        #[arg(long, default_value_t = 3)]
        max_ideal: u32,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LayoutArg {
    Blocks,
    Tree,
    Path,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CounterexampleArg {
    NoEfCycle,
    NoJumpPath,
    NoSwapPath,
    SwapNotEf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Generic,
    Symmetric,
    Dag,
    InStar,
    OutStar,
}

impl ShapeArg {
    fn kind(self) -> PrefShapeKind {
        match self {
            ShapeArg::Generic => PrefShapeKind::Generic,
            ShapeArg::Symmetric => PrefShapeKind::Symmetric,
            ShapeArg::Dag => PrefShapeKind::Dag,
            ShapeArg::InStar => PrefShapeKind::InStar,
            ShapeArg::OutStar => PrefShapeKind::OutStar,
        }
    }
}

#[derive(Args)]
struct KernelizeArgs {
    /// Instance file to shrink.
    file: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory scanned for `*.json` instance files.
    dir: PathBuf,
    /// Also run brute force and every applicable specialized solver, and
    /// cross-check all statuses and witnesses.
    #[arg(long)]
    oracle: bool,
    /// Node budget per solver run.
    #[arg(long)]
    budget: Option<u64>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints --help/--version on stdout with a zero status.
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Solve(args) => run_solve(&args),
        Command::Check(args) => run_check(&args),
        Command::Generate(args) => run_generate(&args.family),
        Command::Kernelize(args) => run_kernelize(&args),
        Command::Bench(args) => run_bench(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn search_config(budget: Option<u64>) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(budget) = budget {
        cfg.budget = budget;
    }
    cfg
}

fn exit_for_status(status: SolveStatus) -> u8 {
    match status {
        SolveStatus::Found => 0,
        SolveStatus::None => 1,
        SolveStatus::Aborted => 2,
    }
}

/// Copy of the game with indifferent agents added until every vertex gets
/// one; an envy-free allocation of the copy restricts to an envy-free and
/// jump-stable allocation of the original.
fn pad_with_indifferent(g: &Game) -> Game {
    let mut wants = g.wants.clone();
    wants.resize(g.topology.vertex_count(), BTreeMap::new());
    Game { topology: g.topology.clone(), wants }
}

fn restrict_to(outcome: SolveOutcome, g: &Game) -> Result<SolveOutcome, GameError> {
    let witness = match outcome.witness {
        Some(w) => {
            let mut slots = w.slots().to_vec();
            slots.truncate(g.agent_count());
            Some(Allocation::for_game(slots, g)?)
        }
        None => None,
    };
    Ok(SolveOutcome { witness, ..outcome })
}

/// Runs an envy-freeness solver under `--notion ef` directly or under
/// `--notion ef-jump` through the indifferent-padding equivalence.
fn run_ef_family(
    g: &Game,
    notion: StabilityNotion,
    name: &'static str,
    solve: impl Fn(&Game) -> Result<SolveOutcome, GameError>,
) -> Result<(SolveOutcome, String), CliError> {
    match notion {
        StabilityNotion::EnvyFree => Ok((solve(g).map_err(usage)?, String::from(name))),
        StabilityNotion::EnvyFreeJumpStable => {
            let padded = pad_with_indifferent(g);
            let outcome = solve(&padded).map_err(usage)?;
            Ok((restrict_to(outcome, g).map_err(usage)?, format!("pad+{name}")))
        }
        _ => Err(CliError::Usage(format!(
            "solver `{name}` decides envy-freeness; use --notion ef or ef-jump"
        ))),
    }
}

fn usage(e: GameError) -> CliError {
    CliError::Usage(e.to_string())
}

fn run_selected_solver(
    g: &Game,
    notion: StabilityNotion,
    solver: SolverArg,
    cfg: &SearchConfig,
) -> Result<(SolveOutcome, String), CliError> {
    match solver {
        SolverArg::Auto => dispatch_solve(g, notion, cfg).map_err(usage),
        SolverArg::Brute => {
            Ok((brute_force_search(g, notion, cfg).map_err(usage)?, String::from("brute")))
        }
        SolverArg::InStar => run_ef_family(g, notion, "in-star", |g| solve_ef_in_star(g, cfg)),
        SolverArg::OutStar => run_ef_family(g, notion, "out-star", solve_ef_out_star),
        SolverArg::Nd => run_ef_family(g, notion, "nd", |g| solve_ef_nd(g, cfg)),
        SolverArg::Vc => run_ef_family(g, notion, "vc", |g| solve_ef_vc(g, cfg)),
        SolverArg::Diameter => {
            run_ef_family(g, notion, "diameter", |g| solve_ef_diameter(g, cfg))
        }
        SolverArg::SymmetricDynamics => {
            let mode = match notion {
                StabilityNotion::SwapStable => MoveKind::Swap,
                StabilityNotion::JumpStable => MoveKind::Jump,
                _ => {
                    return Err(CliError::Usage(String::from(
                        "solver `symmetric-dynamics` decides swap or jump stability; \
                         use --notion swap or jump",
                    )))
                }
            };
            let trace = dynamics_symmetric(g, mode).map_err(usage)?;
            let moves = trace.steps.len() as u64;
            Ok((
                SolveOutcome::found(trace.final_allocation, moves),
                String::from("symmetric-dynamics"),
            ))
        }
        SolverArg::Acyclic => match notion {
            StabilityNotion::SwapStable | StabilityNotion::JumpStable => Ok((
                solve_jump_swap_acyclic(g).map_err(usage)?,
                String::from("acyclic-greedy"),
            )),
            _ => Err(CliError::Usage(String::from(
                "solver `acyclic` decides swap or jump stability; use --notion swap or jump",
            ))),
        },
    }
}

fn run_solve(args: &SolveArgs) -> Result<u8, CliError> {
    let named = load_instance(&args.file)?;
    let cfg = search_config(args.budget);
    let notion = args.notion.notion();
    let started = Instant::now();
    let (outcome, solver) = run_selected_solver(&named.game, notion, args.solver, &cfg)?;
    let wall_time_ms = started.elapsed().as_millis() as u64;
    let doc = result_document(&named, notion.name(), &solver, &outcome, wall_time_ms)
        .map_err(usage)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&doc).expect("result serializes"));
    } else {
        print!("{}", render_result_human(&doc));
    }
    Ok(exit_for_status(outcome.status))
}

fn run_check(args: &CheckArgs) -> Result<u8, CliError> {
    let named = load_instance(&args.file)?;
    let alloc = load_allocation(&args.allocation, &named)?;
    let report = report_doc(&named, &alloc).map_err(usage)?;
    let stable = report.is_envy_free && report.is_swap_stable && report.is_jump_stable;
    if args.json {
        let doc = CheckDocument { format_version: FORMAT_VERSION, stable, report };
        println!("{}", serde_json::to_string_pretty(&doc).expect("check serializes"));
    } else {
        print!("{}", render_report_human(&report));
        println!("verdict: {}", if stable { "stable" } else { "unstable" });
    }
    Ok(u8::from(!stable))
}

fn load_topology(path: &Path) -> Result<Topology, CliError> {
    Ok(load_instance(path)?.game.topology)
}

fn note_artifact(artifact: &ReductionArtifact) {
    eprintln!(
        "instance: {} vertices, {} agents",
        artifact.game.topology.vertex_count(),
        artifact.game.agent_count()
    );
    for (label, group) in &artifact.vertex_groups {
        eprintln!("  vertices[{label}]: {}", group.len());
    }
    for (label, group) in &artifact.agent_groups {
        eprintln!("  agents[{label}]: {}", group.len());
    }
    for warning in &artifact.warnings {
        eprintln!("warning: {warning}");
    }
}

fn emit_instance(game: Game, output: &Path) -> Result<u8, CliError> {
    let named = NamedGame::with_default_names(game);
    save_instance(&named, output)?;
    eprintln!("wrote {}", output.display());
    Ok(0)
}

fn gen_err(e: distgame::GenError) -> CliError {
    CliError::Usage(e.to_string())
}

fn run_generate(family: &FamilyArg) -> Result<u8, CliError> {
    match family {
        FamilyArg::ThreePartition { items, groups, bound, layout, output } => {
            let artifact = match layout {
                LayoutArg::Blocks => gen_from_3partition(items, *groups, *bound),
                LayoutArg::Tree => gen_3partition_tree(items, *groups, *bound),
                LayoutArg::Path => gen_3partition_path(items, *groups, *bound),
            }
            .map_err(gen_err)?;
            note_artifact(&artifact);
            emit_instance(artifact.game, output)
        }
        FamilyArg::Bisection { source, complete, k, output } => {
            let topology = match (source, complete) {
                (Some(path), None) => load_topology(path)?,
                (None, Some(n)) => distgame::game::shapes::clique(*n).map_err(usage)?,
                _ => {
                    return Err(CliError::Usage(String::from(
                        "bisection needs exactly one of --source or --complete",
                    )))
                }
            };
            let artifact = gen_from_cubic_bisection(&topology, *k).map_err(gen_err)?;
            note_artifact(&artifact);
            emit_instance(artifact.game, output)
        }
        FamilyArg::Cnf { dimacs, output } => {
            let text = std::fs::read_to_string(dimacs).map_err(|source| CliError::Io {
                action: "read",
                path: dimacs.clone(),
                source,
            })?;
            let clauses = parse_dimacs_3cnf(&text).map_err(|msg| CliError::Invalid {
                path: dimacs.clone(),
                violations: vec![msg],
            })?;
            let artifact = gen_from_cnf(&clauses).map_err(gen_err)?;
            note_artifact(&artifact);
            emit_instance(artifact.game, output)
        }
        FamilyArg::Clique { source, complete, cycle, k, output } => {
            let topology = match (source, complete, cycle) {
                (Some(path), None, None) => load_topology(path)?,
                (None, Some(n), None) => distgame::game::shapes::clique(*n).map_err(usage)?,
                (None, None, Some(n)) => distgame::game::shapes::cycle(*n).map_err(usage)?,
                _ => {
                    return Err(CliError::Usage(String::from(
                        "clique needs exactly one of --source, --complete or --cycle",
                    )))
                }
            };
            let artifact = gen_from_clique(&topology, *k).map_err(gen_err)?;
            note_artifact(&artifact);
            emit_instance(artifact.game, output)
        }
        FamilyArg::Counterexample { family, agents, witness_out, output } => {
            if agents.is_some() && *family != CounterexampleArg::NoEfCycle {
                return Err(CliError::Usage(String::from(
                    "--agents only applies to the no-ef-cycle family",
                )));
            }
            if witness_out.is_some() && *family != CounterexampleArg::SwapNotEf {
                return Err(CliError::Usage(String::from(
                    "--witness-out only applies to the swap-not-ef family",
                )));
            }
            let picked = match family {
                CounterexampleArg::NoEfCycle => {
                    CounterexampleFamily::NoEfCycle { agents: agents.unwrap_or(3) }
                }
                CounterexampleArg::NoJumpPath => CounterexampleFamily::NoJumpPath,
                CounterexampleArg::NoSwapPath => CounterexampleFamily::NoSwapPath,
                CounterexampleArg::SwapNotEf => CounterexampleFamily::SwapNotEf,
            };
            let (game, witness) = gen_counterexample(picked).map_err(gen_err)?;
            let named = NamedGame::with_default_names(game);
            if let Some(path) = witness_out {
                let witness = witness.as_ref().expect("swap-not-ef bundles a witness");
                let text = serialize_allocation(&allocation_names(&named, witness));
                std::fs::write(path, text).map_err(|source| CliError::Io {
                    action: "write",
                    path: path.clone(),
                    source,
                })?;
                eprintln!("wrote witness {}", path.display());
            }
            save_instance(&named, output)?;
            eprintln!("wrote {}", output.display());
            Ok(0)
        }
        FamilyArg::Random {
            vertices,
            agents,
            seed,
            shape,
            edge_prob,
            want_prob,
            max_ideal,
            output,
        } => {
            let params = RandomGameParams {
                vertices: *vertices,
                extra_edge_prob: *edge_prob,
                agents: *agents,
                want_prob: *want_prob,
                max_ideal: *max_ideal,
                shape: shape.kind(),
                seed: *seed,
            };
            let game = gen_random(&params).map_err(gen_err)?;
            emit_instance(game, output)
        }
    }
}

fn run_kernelize(args: &KernelizeArgs) -> Result<u8, CliError> {
    let named = load_instance(&args.file)?;
    let cover = compute_vertex_cover(&named.game.topology);
    let kernel = kernelize_by_vc(&named.game, &cover).map_err(usage)?;
    let kept = kernel.vertex_map.len();
    let total = named.game.topology.vertex_count();
    let out = NamedGame {
        game: kernel.game,
        vertex_names: kernel
            .vertex_map
            .iter()
            .map(|&v| named.vertex_names[v].clone())
            .collect(),
        agent_names: named.agent_names.clone(),
    };
    save_instance(&out, &args.output)?;
    eprintln!("cover size {}; kernel keeps {kept} of {total} vertices", cover.len());
    eprintln!("wrote {}", args.output.display());
    Ok(0)
}

/// One timed solver execution during `bench`. `None` means the solver does
/// not apply to this instance (wrong topology or preference shape).
fn applicable(
    run: impl FnOnce() -> Result<SolveOutcome, GameError>,
) -> Result<Option<(SolveOutcome, u64)>, CliError> {
    let started = Instant::now();
    match run() {
        Ok(outcome) => Ok(Some((outcome, started.elapsed().as_millis() as u64))),
        Err(GameError::ShapeMismatch { .. }) => Ok(None),
        Err(e) => Err(usage(e)),
    }
}

fn dynamics_outcome(g: &Game, mode: MoveKind) -> Result<SolveOutcome, GameError> {
    let trace = dynamics_symmetric(g, mode)?;
    let moves = trace.steps.len() as u64;
    Ok(SolveOutcome::found(trace.final_allocation, moves))
}

fn oracle_runs(
    g: &Game,
    notion: StabilityNotion,
    cfg: &SearchConfig,
) -> Result<Vec<(String, SolveOutcome, u64)>, CliError> {
    let mut runs: Vec<(String, SolveOutcome, u64)> = Vec::new();
    let mut push = |name: &str,
                    outcome: Result<Option<(SolveOutcome, u64)>, CliError>|
     -> Result<(), CliError> {
        if let Some((outcome, ms)) = outcome? {
            runs.push((name.to_string(), outcome, ms));
        }
        Ok(())
    };
    match notion {
        StabilityNotion::EnvyFree => {
            push("brute", applicable(|| brute_force_search(g, notion, cfg)))?;
            push("clique-star", applicable(|| solve_ef_clique_or_star(g)))?;
            push("in-star", applicable(|| solve_ef_in_star(g, cfg)))?;
            push("out-star", applicable(|| solve_ef_out_star(g)))?;
            push("nd", applicable(|| solve_ef_nd(g, cfg)))?;
            push("vc", applicable(|| solve_ef_vc(g, cfg)))?;
            push("diameter", applicable(|| solve_ef_diameter(g, cfg)))?;
            push("fixed-interested", applicable(|| solve_ef_fixed_interested(g, cfg)))?;
        }
        StabilityNotion::SwapStable => {
            push("brute", applicable(|| brute_force_search(g, notion, cfg)))?;
            push(
                "symmetric-dynamics",
                applicable(|| dynamics_outcome(g, MoveKind::Swap)),
            )?;
            push("acyclic-greedy", applicable(|| solve_jump_swap_acyclic(g)))?;
        }
        StabilityNotion::JumpStable => {
            push("brute", applicable(|| brute_force_search(g, notion, cfg)))?;
            push(
                "symmetric-dynamics",
                applicable(|| dynamics_outcome(g, MoveKind::Jump)),
            )?;
            push("acyclic-greedy", applicable(|| solve_jump_swap_acyclic(g)))?;
        }
        StabilityNotion::EnvyFreeJumpStable => {
            push("brute", applicable(|| brute_force_search(g, notion, cfg)))?;
            push("pad+brute", applicable(|| solve_ef_and_jump(g, cfg)))?;
        }
    }
    Ok(runs)
}

fn run_bench(args: &BenchArgs) -> Result<u8, CliError> {
    let entries = std::fs::read_dir(&args.dir).map_err(|source| CliError::Io {
        action: "read directory",
        path: args.dir.clone(),
        source,
    })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();

    let cfg = search_config(args.budget);
    let notions = [
        StabilityNotion::EnvyFree,
        StabilityNotion::SwapStable,
        StabilityNotion::JumpStable,
        StabilityNotion::EnvyFreeJumpStable,
    ];
    let mut instances = 0u64;
    let mut total_runs = 0u64;
    let mut disagreements = 0u64;
    println!("{:<28} {:<8} {:<24} {:<8} {:>12} {:>8}", "instance", "notion", "solver", "status", "nodes", "ms");

    for path in &paths {
        let named = match load_instance(path) {
            Ok(named) => named,
            Err(CliError::Parse { .. }) => {
                eprintln!("skipping {}: not an instance document", path.display());
                continue;
            }
            Err(e) => return Err(e),
        };
        instances += 1;
        let display = path
            .file_name()
            .map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
        let dist = build_distance_matrix(&named.game.topology).map_err(usage)?;

        for notion in notions {
            let mut runs: Vec<(String, SolveOutcome, u64)> = Vec::new();
            let started = Instant::now();
            let (outcome, inner) = dispatch_solve(&named.game, notion, &cfg).map_err(usage)?;
            let auto_ms = started.elapsed().as_millis() as u64;
            runs.push((format!("auto[{inner}]"), outcome, auto_ms));
            if args.oracle {
                runs.extend(oracle_runs(&named.game, notion, &cfg)?);
            }

            let mut statuses: Vec<SolveStatus> = Vec::new();
            for (solver, outcome, ms) in &runs {
                println!(
                    "{:<28} {:<8} {:<24} {:<8} {:>12} {:>8}",
                    display,
                    notion.name(),
                    solver,
                    status_name(outcome.status),
                    outcome.nodes_explored,
                    ms
                );
                total_runs += 1;
                if let Some(w) = &outcome.witness {
                    if !stability::satisfies(&named.game, &dist, w, notion) {
                        disagreements += 1;
                        eprintln!(
                            "disagreement: {display} {} {solver}: witness fails the check",
                            notion.name()
                        );
                    }
                }
                if outcome.status != SolveStatus::Aborted {
                    statuses.push(outcome.status);
                }
            }
            if statuses.windows(2).any(|w| w[0] != w[1]) {
                disagreements += 1;
                eprintln!("disagreement: {display} {}: statuses differ", notion.name());
            }
        }
    }
    println!("{instances} instances, {total_runs} runs, {disagreements} disagreements");
    Ok(u8::from(disagreements > 0))
}

//! Named document schemas over the dense-id core types.
//!
//! Instance files carry vertex names, an edge list of name pairs and one
//! wants map per agent; everything else (solver results, stability reports,
//! allocation files) is keyed by those names. Loading resolves names to
//! dense ids once and keeps the mapping for output.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use distgame::{
    build_distance_matrix, cost, stability_report, validate_game, Allocation, Game, GameError,
    SolveOutcome, SolveStatus, Topology, VertexId,
};

/// Schema version written and accepted by this build.
pub const FORMAT_VERSION: u32 = 1;

/// On-disk instance document. `wants` values are ideal distances (>= 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub agents: Vec<AgentEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AgentEntry {
    pub name: String,
    #[serde(default)]
    pub wants: BTreeMap<String, u32>,
}

/// A validated game plus the name tables needed to print results. Vertex
/// and agent ids are the positions in the respective name lists.
#[derive(Debug, Clone)]
pub struct NamedGame {
    pub game: Game,
    pub vertex_names: Vec<String>,
    pub agent_names: Vec<String>,
}

impl NamedGame {
    /// Wraps a bare game with the default `v0..`/`a0..` names.
    #[must_use]
    pub fn with_default_names(game: Game) -> NamedGame {
        let vertex_names = (0..game.topology.vertex_count()).map(|v| format!("v{v}")).collect();
        let agent_names = (0..game.agent_count()).map(|a| format!("a{a}")).collect();
        NamedGame { game, vertex_names, agent_names }
    }

    /// Renders back into the document form; the inverse of [`NamedGame::from_file`].
    #[must_use]
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            format_version: FORMAT_VERSION,
            vertices: self.vertex_names.clone(),
            edges: self
                .game
                .topology
                .edges()
                .iter()
                .map(|&(u, v)| (self.vertex_names[u].clone(), self.vertex_names[v].clone()))
                .collect(),
            agents: (0..self.game.agent_count())
                .map(|a| AgentEntry {
                    name: self.agent_names[a].clone(),
                    wants: self.game.wants[a]
                        .iter()
                        .map(|(&b, &d)| (self.agent_names[b].clone(), d))
                        .collect(),
                })
                .collect(),
        }
    }

    /// Resolves names to ids and validates the game. Name-level violations
    /// are collected and reported together; structural violations come from
    /// the core validators with names substituted back in.
    pub fn from_file(file: &InstanceFile) -> Result<NamedGame, Vec<String>> {
        let mut violations = Vec::new();
        if file.format_version != FORMAT_VERSION {
            violations.push(format!(
                "format_version {} unsupported; this build reads version {FORMAT_VERSION}",
                file.format_version
            ));
        }

        let mut vertex_ids: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, name) in file.vertices.iter().enumerate() {
            if vertex_ids.insert(name, i).is_some() {
                violations.push(format!("duplicate vertex name `{name}`"));
            }
        }
        let mut agent_ids: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, entry) in file.agents.iter().enumerate() {
            if agent_ids.insert(&entry.name, i).is_some() {
                violations.push(format!("duplicate agent name `{}`", entry.name));
            }
        }

        let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(file.edges.len());
        for (u, v) in &file.edges {
            let pair = (vertex_ids.get(u.as_str()), vertex_ids.get(v.as_str()));
            if let (Some(&a), Some(&b)) = pair {
                edges.push((a, b));
            } else {
                for name in [u, v] {
                    if !vertex_ids.contains_key(name.as_str()) {
                        violations.push(format!("edge endpoint `{name}` is not a declared vertex"));
                    }
                }
            }
        }

        let mut wants = Vec::with_capacity(file.agents.len());
        for entry in &file.agents {
            let mut map = BTreeMap::new();
            for (target, &d) in &entry.wants {
                match agent_ids.get(target.as_str()) {
                    Some(&b) => {
                        map.insert(b, d);
                    }
                    None => violations.push(format!(
                        "agent `{}` wants unknown agent `{target}`",
                        entry.name
                    )),
                }
            }
            wants.push(map);
        }

        if !violations.is_empty() {
            return Err(violations);
        }

        let topology = Topology::new(file.vertices.len(), &edges)
            .map_err(|e| vec![named_violation(&e, file)])?;
        let game = Game { topology, wants };
        validate_game(&game).map_err(|e| vec![named_violation(&e, file)])?;

        Ok(NamedGame {
            game,
            vertex_names: file.vertices.clone(),
            agent_names: file.agents.iter().map(|a| a.name.clone()).collect(),
        })
    }
}

/// Core validator messages with ids swapped for the document's names.
fn named_violation(e: &GameError, file: &InstanceFile) -> String {
    let vertex = |id: usize| {
        file.vertices.get(id).map_or_else(|| format!("#{id}"), |n| format!("`{n}`"))
    };
    let agent = |id: usize| {
        file.agents.get(id).map_or_else(|| format!("#{id}"), |a| format!("`{}`", a.name))
    };
    match e {
        GameError::SelfLoop { vertex: v } => format!("self-loop at vertex {}", vertex(*v)),
        GameError::DuplicateEdge { u, v } => {
            format!("duplicate edge between {} and {}", vertex(*u), vertex(*v))
        }
        GameError::SelfWant { agent: a } => {
            format!("agent {} lists itself in its wants", agent(*a))
        }
        GameError::ZeroIdealDistance { agent: a, target } => format!(
            "agent {} wants agent {} at distance 0; ideal distances are >= 1",
            agent(*a),
            agent(*target)
        ),
        other => other.to_string(),
    }
}

/// Front-end failures; every variant maps to exit code 3.
#[derive(Debug)]
pub enum CliError {
    Io { action: &'static str, path: PathBuf, source: std::io::Error },
    /// Serde error; its message carries line and column context.
    Parse { path: PathBuf, source: serde_json::Error },
    Invalid { path: PathBuf, violations: Vec<String> },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { action, path, source } => {
                write!(f, "cannot {action} {}: {source}", path.display())
            }
            CliError::Parse { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Invalid { path, violations } => {
                write!(f, "{}: invalid document", path.display())?;
                for v in violations {
                    write!(f, "\n  - {v}")?;
                }
                Ok(())
            }
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

pub fn load_instance(path: &Path) -> Result<NamedGame, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        action: "read",
        path: path.into(),
        source,
    })?;
    let file: InstanceFile = serde_json::from_str(&text)
        .map_err(|source| CliError::Parse { path: path.into(), source })?;
    NamedGame::from_file(&file)
        .map_err(|violations| CliError::Invalid { path: path.into(), violations })
}

/// Canonical serialization: pretty JSON with a trailing newline. Loading and
/// saving a file produced this way is byte-identical.
#[must_use]
pub fn serialize_instance(file: &InstanceFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("schema serializes infallibly");
    text.push('\n');
    text
}

pub fn save_instance(named: &NamedGame, path: &Path) -> Result<(), CliError> {
    fs::write(path, serialize_instance(&named.to_file())).map_err(|source| CliError::Io {
        action: "write",
        path: path.into(),
        source,
    })
}

/// Allocation documents are bare objects mapping agent name to vertex name.
#[must_use]
pub fn allocation_names(named: &NamedGame, alloc: &Allocation) -> BTreeMap<String, String> {
    (0..alloc.agent_count())
        .map(|a| {
            (named.agent_names[a].clone(), named.vertex_names[alloc.vertex_of(a)].clone())
        })
        .collect()
}

#[must_use]
pub fn serialize_allocation(map: &BTreeMap<String, String>) -> String {
    let mut text = serde_json::to_string_pretty(map).expect("string map serializes infallibly");
    text.push('\n');
    text
}

pub fn load_allocation(path: &Path, named: &NamedGame) -> Result<Allocation, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        action: "read",
        path: path.into(),
        source,
    })?;
    let map: BTreeMap<String, String> = serde_json::from_str(&text)
        .map_err(|source| CliError::Parse { path: path.into(), source })?;

    let mut violations = Vec::new();
    let mut slots = vec![usize::MAX; named.game.agent_count()];
    for (a, name) in named.agent_names.iter().enumerate() {
        match map.get(name) {
            None => violations.push(format!("agent `{name}` has no vertex")),
            Some(vertex) => match named.vertex_names.iter().position(|v| v == vertex) {
                None => violations.push(format!(
                    "agent `{name}` placed on unknown vertex `{vertex}`"
                )),
                Some(v) => slots[a] = v,
            },
        }
    }
    for name in map.keys() {
        if !named.agent_names.contains(name) {
            violations.push(format!("allocation lists unknown agent `{name}`"));
        }
    }
    if violations.is_empty() {
        match Allocation::for_game(slots, &named.game) {
            Ok(alloc) => return Ok(alloc),
            Err(GameError::AllocationNotInjective { vertex }) => violations.push(format!(
                "two agents share vertex `{}`",
                named.vertex_names[vertex]
            )),
            Err(e) => violations.push(e.to_string()),
        }
    }
    Err(CliError::Invalid { path: path.into(), violations })
}

/// Stability report with names and, for every deviation, the deviating
/// agents' costs before and after the move.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub costs: BTreeMap<String, u64>,
    pub is_envy_free: bool,
    pub is_swap_stable: bool,
    pub is_jump_stable: bool,
    pub envy: Vec<EnvyDoc>,
    pub swap_deviations: Vec<SwapDoc>,
    pub jump_deviations: Vec<JumpDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnvyDoc {
    pub agent: String,
    pub target: String,
    pub cost_before: u64,
    pub cost_after: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SwapDoc {
    pub first: String,
    pub second: String,
    pub first_cost_before: u64,
    pub first_cost_after: u64,
    pub second_cost_before: u64,
    pub second_cost_after: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct JumpDoc {
    pub agent: String,
    pub vertex: String,
    pub cost_before: u64,
    pub cost_after: u64,
}

pub fn report_doc(named: &NamedGame, alloc: &Allocation) -> Result<ReportDoc, GameError> {
    let g = &named.game;
    let dist = build_distance_matrix(&g.topology)?;
    let report = stability_report(g, &dist, alloc);
    let agent = |a: usize| named.agent_names[a].clone();

    let envy = report
        .envy_pairs
        .iter()
        .map(|&(a, b)| EnvyDoc {
            agent: agent(a),
            target: agent(b),
            cost_before: report.costs[a],
            cost_after: cost(g, &dist, &alloc.swapped(a, b), a),
        })
        .collect();
    let swap_deviations = report
        .swap_deviations
        .iter()
        .map(|&(a, b)| {
            let swapped = alloc.swapped(a, b);
            SwapDoc {
                first: agent(a),
                second: agent(b),
                first_cost_before: report.costs[a],
                first_cost_after: cost(g, &dist, &swapped, a),
                second_cost_before: report.costs[b],
                second_cost_after: cost(g, &dist, &swapped, b),
            }
        })
        .collect();
    let jump_deviations = report
        .jump_deviations
        .iter()
        .map(|&(a, v)| JumpDoc {
            agent: agent(a),
            vertex: named.vertex_names[v].clone(),
            cost_before: report.costs[a],
            cost_after: cost(g, &dist, &alloc.jumped(a, v), a),
        })
        .collect();

    Ok(ReportDoc {
        costs: report.costs.iter().enumerate().map(|(a, &c)| (agent(a), c)).collect(),
        is_envy_free: report.is_envy_free,
        is_swap_stable: report.is_swap_stable,
        is_jump_stable: report.is_jump_stable,
        envy,
        swap_deviations,
        jump_deviations,
    })
}

/// Machine-readable outcome of `solve`. The allocation and report keys are
/// present exactly when the status is `found`.
#[derive(Debug, Clone, Serialize)]
pub struct ResultDocument {
    pub format_version: u32,
    pub status: &'static str,
    pub notion: String,
    pub solver: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub allocation: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDoc>,
    pub nodes_explored: u64,
    /// Present for solvers whose work unit is an applied improving move.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dynamics_steps: Option<u64>,
    pub wall_time_ms: u64,
}

#[must_use]
pub fn status_name(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Found => "found",
        SolveStatus::None => "none",
        SolveStatus::Aborted => "aborted",
    }
}

pub fn result_document(
    named: &NamedGame,
    notion: &str,
    solver: &str,
    outcome: &SolveOutcome,
    wall_time_ms: u64,
) -> Result<ResultDocument, GameError> {
    let (allocation, report) = match &outcome.witness {
        Some(w) => (Some(allocation_names(named, w)), Some(report_doc(named, w)?)),
        None => (None, None),
    };
    let is_dynamics = matches!(solver, "symmetric-dynamics" | "out-star" | "pad+out-star");
    Ok(ResultDocument {
        format_version: FORMAT_VERSION,
        status: status_name(outcome.status),
        notion: notion.to_string(),
        solver: solver.to_string(),
        allocation,
        report,
        nodes_explored: outcome.nodes_explored,
        dynamics_steps: is_dynamics.then_some(outcome.nodes_explored),
        wall_time_ms,
    })
}

/// Machine-readable outcome of `check`. `stable` is the conjunction of the
/// three flags in the report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckDocument {
    pub format_version: u32,
    pub stable: bool,
    pub report: ReportDoc,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[must_use]
pub fn render_report_human(r: &ReportDoc) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "costs:");
    for (agent, c) in &r.costs {
        let _ = writeln!(s, "  {agent}: {c}");
    }
    let _ = writeln!(s, "envy-free: {}", yes_no(r.is_envy_free));
    let _ = writeln!(s, "swap-stable: {}", yes_no(r.is_swap_stable));
    let _ = writeln!(s, "jump-stable: {}", yes_no(r.is_jump_stable));
    if !r.envy.is_empty() {
        let _ = writeln!(s, "envy:");
        for e in &r.envy {
            let _ = writeln!(
                s,
                "  {} envies {} (cost {} -> {})",
                e.agent, e.target, e.cost_before, e.cost_after
            );
        }
    }
    if !r.swap_deviations.is_empty() {
        let _ = writeln!(s, "swap deviations:");
        for d in &r.swap_deviations {
            let _ = writeln!(
                s,
                "  {} <-> {} (costs {} -> {} and {} -> {})",
                d.first,
                d.second,
                d.first_cost_before,
                d.first_cost_after,
                d.second_cost_before,
                d.second_cost_after
            );
        }
    }
    if !r.jump_deviations.is_empty() {
        let _ = writeln!(s, "jump deviations:");
        for d in &r.jump_deviations {
            let _ = writeln!(
                s,
                "  {} jumps to {} (cost {} -> {})",
                d.agent, d.vertex, d.cost_before, d.cost_after
            );
        }
    }
    s
}

#[must_use]
pub fn render_result_human(doc: &ResultDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "status: {}", doc.status);
    let _ = writeln!(s, "notion: {}", doc.notion);
    let _ = writeln!(s, "solver: {}", doc.solver);
    let _ = writeln!(s, "nodes explored: {}", doc.nodes_explored);
    if let Some(steps) = doc.dynamics_steps {
        let _ = writeln!(s, "dynamics steps: {steps}");
    }
    let _ = writeln!(s, "wall time: {} ms", doc.wall_time_ms);
    if let Some(alloc) = &doc.allocation {
        let _ = writeln!(s, "allocation:");
        for (agent, vertex) in alloc {
            let _ = writeln!(s, "  {agent} -> {vertex}");
        }
    }
    if let Some(report) = &doc.report {
        s.push_str(&render_report_human(report));
    }
    s
}

/// Reads DIMACS CNF text into 3-literal clauses. Lines starting with `c` or
/// `%` are comments; an optional `p cnf <vars> <clauses>` header pins the
/// variable range; clauses are zero-terminated and may span lines.
pub fn parse_dimacs_3cnf(text: &str) -> Result<Vec<[i32; 3]>, String> {
    let mut declared_vars: Option<i64> = None;
    let mut clauses: Vec<[i32; 3]> = Vec::new();
    let mut current: Vec<i32> = Vec::new();

    let close = |current: &mut Vec<i32>, clauses: &mut Vec<[i32; 3]>, line: usize| {
        let lits = std::mem::take(current);
        match <[i32; 3]>::try_from(lits.as_slice()) {
            Ok(arr) => {
                clauses.push(arr);
                Ok(())
            }
            Err(_) => Err(format!(
                "line {line}: clause {} has {} literals; every clause needs exactly 3",
                clauses.len() + 1,
                lits.len()
            )),
        }
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('p') {
            if declared_vars.is_some() {
                return Err(format!("line {line}: repeated `p` header"));
            }
            let mut fields = rest.split_whitespace();
            let vars = match (fields.next(), fields.next()) {
                (Some("cnf"), Some(count)) => count
                    .parse::<i64>()
                    .map_err(|_| format!("line {line}: header must be `p cnf <vars> <clauses>`"))?,
                _ => return Err(format!("line {line}: header must be `p cnf <vars> <clauses>`")),
            };
            declared_vars = Some(vars);
            continue;
        }
        for token in trimmed.split_whitespace() {
            let lit: i64 = token
                .parse()
                .map_err(|_| format!("line {line}: `{token}` is not an integer literal"))?;
            if lit == 0 {
                close(&mut current, &mut clauses, line)?;
            } else {
                if let Some(vars) = declared_vars {
                    if lit.abs() > vars {
                        return Err(format!(
                            "line {line}: literal {lit} exceeds the declared {vars} variables"
                        ));
                    }
                }
                let lit = i32::try_from(lit)
                    .map_err(|_| format!("line {line}: literal {lit} does not fit 32 bits"))?;
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        close(&mut current, &mut clauses, text.lines().count())?;
    }
    if clauses.is_empty() {
        return Err(String::from("no clauses found"));
    }
    Ok(clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use distgame::structured::dispatch_solve;
    use distgame::{SearchConfig, SolveStatus, StabilityNotion};

    fn ring_doc() -> InstanceFile {
        serde_json::from_str(
            r#"{
                "format_version": 1,
                "vertices": ["v0", "v1", "v2", "v3", "v4", "v5"],
                "edges": [["v0","v1"],["v1","v2"],["v2","v3"],["v3","v4"],["v4","v5"],["v0","v5"]],
                "agents": [
                    {"name": "a", "wants": {"b": 1, "c": 1}},
                    {"name": "b", "wants": {"a": 2}},
                    {"name": "c", "wants": {}}
                ]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn resolves_names_to_dense_ids() {
        let named = NamedGame::from_file(&ring_doc()).unwrap();
        assert_eq!(named.game.topology.vertex_count(), 6);
        assert_eq!(named.game.agent_count(), 3);
        assert_eq!(named.game.wants[0].get(&1), Some(&1));
        assert_eq!(named.game.wants[1].get(&0), Some(&2));
        assert!(named.game.wants[2].is_empty());
    }

    #[test]
    fn unknown_and_duplicate_names_are_listed() {
        let mut doc = ring_doc();
        doc.edges.push((String::from("v0"), String::from("nope")));
        doc.agents[0].wants.insert(String::from("ghost"), 1);
        doc.vertices.push(String::from("v0"));
        let violations = NamedGame::from_file(&doc).unwrap_err();
        assert_eq!(violations.len(), 3);
        assert!(violations.iter().any(|v| v.contains("`nope`")));
        assert!(violations.iter().any(|v| v.contains("`ghost`")));
        assert!(violations.iter().any(|v| v.contains("duplicate vertex name `v0`")));
    }

    #[test]
    fn structural_violations_use_names() {
        let mut doc = ring_doc();
        doc.agents[1].wants.insert(String::from("b"), 2);
        let violations = NamedGame::from_file(&doc).unwrap_err();
        assert_eq!(violations, vec![String::from("agent `b` lists itself in its wants")]);

        let mut doc = ring_doc();
        doc.agents[0].wants.insert(String::from("b"), 0);
        let violations = NamedGame::from_file(&doc).unwrap_err();
        assert!(violations[0].contains("agent `a` wants agent `b` at distance 0"));
    }

    #[test]
    fn wrong_format_version_is_rejected() {
        let mut doc = ring_doc();
        doc.format_version = 2;
        let violations = NamedGame::from_file(&doc).unwrap_err();
        assert!(violations[0].contains("format_version 2"));
    }

    #[test]
    fn unknown_fields_fail_parsing() {
        let err = serde_json::from_str::<InstanceFile>(
            r#"{"format_version": 1, "vertices": ["x"], "edges": [], "agents": [], "extra": 1}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("extra"));
    }

    #[test]
    fn empty_agent_list_is_a_valid_game() {
        let doc = InstanceFile {
            format_version: 1,
            vertices: vec![String::from("x"), String::from("y")],
            edges: vec![(String::from("x"), String::from("y"))],
            agents: vec![],
        };
        let named = NamedGame::from_file(&doc).unwrap();
        let (out, _) = dispatch_solve(
            &named.game,
            StabilityNotion::EnvyFree,
            &SearchConfig::default(),
        )
        .unwrap();
        assert_eq!(out.status, SolveStatus::Found);
        assert_eq!(out.witness.unwrap().agent_count(), 0);
    }

    #[test]
    fn serialization_round_trips() {
        let named = NamedGame::from_file(&ring_doc()).unwrap();
        let text = serialize_instance(&named.to_file());
        let reparsed: InstanceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(reparsed, named.to_file());
        // A second pass is byte-identical: the canonical form is a fixpoint.
        let again = NamedGame::from_file(&reparsed).unwrap();
        assert_eq!(serialize_instance(&again.to_file()), text);
    }

    #[test]
    fn report_doc_names_costs_and_deviations() {
        let named = NamedGame::from_file(&ring_doc()).unwrap();
        let alloc = Allocation::for_game(vec![2, 4, 0], &named.game).unwrap();
        let report = report_doc(&named, &alloc).unwrap();
        assert_eq!(report.costs.get("a"), Some(&2));
        assert_eq!(report.costs.get("b"), Some(&0));
        assert!(report.is_envy_free && report.is_swap_stable && !report.is_jump_stable);
        assert_eq!(report.jump_deviations.len(), 1);
        let jump = &report.jump_deviations[0];
        assert_eq!((jump.agent.as_str(), jump.vertex.as_str()), ("a", "v5"));
        assert_eq!((jump.cost_before, jump.cost_after), (2, 0));
    }

    #[test]
    fn dimacs_reader_handles_comments_headers_and_errors() {
        let clauses =
            parse_dimacs_3cnf("c sample\np cnf 3 2\n1 2 3 0\n-1 -2\n-3 0\n").unwrap();
        assert_eq!(clauses, vec![[1, 2, 3], [-1, -2, -3]]);

        // Final clause may omit its terminating zero.
        let clauses = parse_dimacs_3cnf("1 2 3 0 -1 -2 -3").unwrap();
        assert_eq!(clauses.len(), 2);

        let err = parse_dimacs_3cnf("p cnf 2 1\n1 2 3 0\n").unwrap_err();
        assert!(err.contains("exceeds"));
        let err = parse_dimacs_3cnf("1 2 0\n").unwrap_err();
        assert!(err.contains("exactly 3"));
        let err = parse_dimacs_3cnf("c only comments\n").unwrap_err();
        assert!(err.contains("no clauses"));
    }
}

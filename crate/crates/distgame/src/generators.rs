//! Instance generators: families whose envy-free allocations encode
//! solutions of hard source problems (numeric 3-partitioning, cubic graph
//! bisection, 3-literal satisfiability, clique finding), small families
//! without stable allocations, and a seeded random generator for property
//! tests.
//!
//! Every generator validates the game it builds before returning it. The
//! reduction generators also return named vertex and agent groups that
//! partition the instance, so a solution of the source problem can be
//! turned into a concrete allocation (see
//! [`ef_allocation_from_partition`]).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenError;
use crate::game::{
    validate_game, AgentId, Allocation, Game, Topology, VertexId,
};

/// Which reduction produced an artifact, with the source-problem payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionFamily {
    /// Clique blocks plus an apex; item groups must share a block.
    ThreePartitionCliques { items: Vec<u32>, b: u32 },
    /// Depth-two tree: stars under an apex.
    ThreePartitionTree { items: Vec<u32>, b: u32 },
    /// A single path with anchor agents every `b + 1` vertices.
    ThreePartitionPath { items: Vec<u32>, b: u32 },
    /// Two stars joined by parallel length-2 paths; encodes bisection of a
    /// cubic graph.
    CubicBisection { vertices: usize, k: usize },
    /// Literal-occurrence vertices plus universal vertices; encodes
    /// satisfiability of 3-literal clauses.
    Cnf { clauses: Vec<[i32; 3]> },
    /// A source graph plus a universal vertex; encodes a k-clique search.
    Clique { k: usize },
}

/// A generated game with named vertex and agent groups. The groups
/// partition the vertices and agents respectively; `warnings` collects
/// advisory notes about parameters outside the ranges the hardness
/// arguments assume.
#[derive(Debug, Clone)]
pub struct ReductionArtifact {
    pub game: Game,
    pub family: ReductionFamily,
    pub vertex_groups: BTreeMap<String, Vec<VertexId>>,
    pub agent_groups: BTreeMap<String, Vec<AgentId>>,
    pub warnings: Vec<String>,
}

fn check_items(items: &[u32], groups: usize, b: u32) -> Result<(), GenError> {
    if groups == 0 || items.len() != 3 * groups {
        return Err(GenError::ItemCount { items: items.len() });
    }
    let sum: u64 = items.iter().map(|&s| s as u64).sum();
    if sum != groups as u64 * b as u64 {
        return Err(GenError::SumNotDivisible { sum, groups });
    }
    Ok(())
}

fn size_warnings(items: &[u32], b: u32) -> Vec<String> {
    let mut warnings = Vec::new();
    for (i, &s) in items.iter().enumerate() {
        // Hardness needs every item strictly between b/4 and b/2.
        if 4 * s as u64 <= b as u64 || 2 * s as u64 >= b as u64 {
            warnings.push(format!("item {i} of size {s} lies outside ({}/4, {}/2)", b, b));
        }
    }
    warnings
}

fn usize_cast(value: u64) -> Result<usize, GenError> {
    usize::try_from(value).map_err(|_| GenError::ValueTooLarge { value })
}

/// Places `3 * groups` item agents and one guard on `groups` clique blocks
/// of size `b` plus one apex vertex adjacent to everything. Each item
/// contributes as many agents as its size, pairwise wanting each other
/// adjacent; the guard wants every agent adjacent, which forces it onto the
/// apex and the item groups into blocks. Vertices and agents both count
/// `groups * b + 1`.
pub fn gen_from_3partition(
    items: &[u32],
    groups: usize,
    b: u32,
) -> Result<ReductionArtifact, GenError> {
    check_items(items, groups, b)?;
    let nb = usize_cast(groups as u64 * b as u64)?;
    let apex = nb;
    let block = b as usize;

    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for j in 0..groups {
        let base = j * block;
        for x in 0..block {
            for y in (x + 1)..block {
                edges.push((base + x, base + y));
            }
        }
    }
    for v in 0..nb {
        edges.push((v, apex));
    }
    let topology = Topology::new(nb + 1, &edges)?;

    let agent_ranges = item_agent_ranges(items);
    let guard = nb;
    let mut wants = vec![BTreeMap::new(); nb + 1];
    for range in &agent_ranges {
        for a in range.clone() {
            for b2 in range.clone() {
                if a != b2 {
                    wants[a].insert(b2, 1);
                }
            }
        }
    }
    for a in 0..nb {
        wants[guard].insert(a, 1);
    }

    let game = Game { topology, wants };
    validate_game(&game)?;

    let mut vertex_groups = BTreeMap::new();
    for j in 0..groups {
        vertex_groups.insert(format!("block-{j}"), (j * block..(j + 1) * block).collect());
    }
    vertex_groups.insert(String::from("apex"), vec![apex]);
    let mut agent_groups = BTreeMap::new();
    for (i, range) in agent_ranges.iter().enumerate() {
        agent_groups.insert(format!("item-{i}"), range.clone().collect());
    }
    agent_groups.insert(String::from("guard"), vec![guard]);

    Ok(ReductionArtifact {
        game,
        family: ReductionFamily::ThreePartitionCliques { items: items.to_vec(), b },
        vertex_groups,
        agent_groups,
        warnings: size_warnings(items, b),
    })
}

/// Depth-two tree variant: `groups` star centers under an apex, each star
/// with `b` leaves. Item agents want their group mates and the guard at
/// distance 2 (leaf to leaf, leaf to apex); the guard wants the `groups`
/// marker agents adjacent and every item agent at distance 2; each marker
/// wants the guard adjacent. Vertices and agents both count
/// `groups * b + groups + 1`.
pub fn gen_3partition_tree(
    items: &[u32],
    groups: usize,
    b: u32,
) -> Result<ReductionArtifact, GenError> {
    check_items(items, groups, b)?;
    let nb = usize_cast(groups as u64 * b as u64)?;
    let block = b as usize;
    let centers = nb..nb + groups;
    let apex = nb + groups;

    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for j in 0..groups {
        let center = nb + j;
        for leaf in j * block..(j + 1) * block {
            edges.push((leaf, center));
        }
        edges.push((center, apex));
    }
    let topology = Topology::new(nb + groups + 1, &edges)?;

    let agent_ranges = item_agent_ranges(items);
    let guard = nb;
    let markers = nb + 1..nb + 1 + groups;
    let mut wants = vec![BTreeMap::new(); nb + groups + 1];
    for range in &agent_ranges {
        for a in range.clone() {
            for b2 in range.clone() {
                if a != b2 {
                    wants[a].insert(b2, 2);
                }
            }
            wants[a].insert(guard, 2);
        }
    }
    for m in markers.clone() {
        wants[guard].insert(m, 1);
        wants[m].insert(guard, 1);
    }
    for a in 0..nb {
        wants[guard].insert(a, 2);
    }

    let game = Game { topology, wants };
    validate_game(&game)?;

    let mut vertex_groups = BTreeMap::new();
    for j in 0..groups {
        vertex_groups.insert(format!("star-{j}"), (j * block..(j + 1) * block).collect());
    }
    vertex_groups.insert(String::from("centers"), centers.collect());
    vertex_groups.insert(String::from("apex"), vec![apex]);
    let mut agent_groups = BTreeMap::new();
    for (i, range) in agent_ranges.iter().enumerate() {
        agent_groups.insert(format!("item-{i}"), range.clone().collect());
    }
    agent_groups.insert(String::from("guard"), vec![guard]);
    agent_groups.insert(String::from("markers"), markers.collect());

    let mut warnings = size_warnings(items, b);
    if groups <= 2 {
        warnings.push(format!("hardness argument assumes more than 2 groups, got {groups}"));
    }
    if b as u64 <= groups as u64 {
        warnings.push(format!("hardness argument assumes b > groups, got b = {b}"));
    }

    Ok(ReductionArtifact {
        game,
        family: ReductionFamily::ThreePartitionTree { items: items.to_vec(), b },
        vertex_groups,
        agent_groups,
        warnings,
    })
}

/// Path variant: a path with `groups * b + groups + 1` vertices. The
/// `groups + 1` anchor agents want their successors at distance `b + 1`,
/// pinning them (up to symmetry) to every `(b + 1)`-th vertex; each item
/// contributes a chain of agents with consecutive mutual ideal 1 that must
/// fill the gap between two anchors together with its group mates.
pub fn gen_3partition_path(
    items: &[u32],
    groups: usize,
    b: u32,
) -> Result<ReductionArtifact, GenError> {
    check_items(items, groups, b)?;
    let gap = b.checked_add(1).ok_or(GenError::ValueTooLarge { value: b as u64 + 1 })?;
    let nb = usize_cast(groups as u64 * b as u64)?;
    let n = nb + groups + 1;
    let topology = crate::game::shapes::path(n)?;

    let agent_ranges = item_agent_ranges(items);
    let anchors = nb..nb + groups + 1;
    let mut wants = vec![BTreeMap::new(); n];
    for range in &agent_ranges {
        for a in range.clone() {
            if range.contains(&(a + 1)) {
                wants[a].insert(a + 1, 1);
                wants[a + 1].insert(a, 1);
            }
        }
    }
    for t in anchors.clone() {
        if t + 1 < nb + groups + 1 {
            wants[t].insert(t + 1, gap);
            wants[t + 1].insert(t, gap);
        }
    }

    let game = Game { topology, wants };
    validate_game(&game)?;

    let mut vertex_groups = BTreeMap::new();
    let gap_len = gap as usize;
    vertex_groups
        .insert(String::from("anchors"), (0..=groups).map(|t| t * gap_len).collect());
    for j in 0..groups {
        vertex_groups
            .insert(format!("segment-{j}"), (j * gap_len + 1..(j + 1) * gap_len).collect());
    }
    let mut agent_groups = BTreeMap::new();
    for (i, range) in agent_ranges.iter().enumerate() {
        agent_groups.insert(format!("item-{i}"), range.clone().collect());
    }
    agent_groups.insert(String::from("anchors"), anchors.collect());

    Ok(ReductionArtifact {
        game,
        family: ReductionFamily::ThreePartitionPath { items: items.to_vec(), b },
        vertex_groups,
        agent_groups,
        warnings: size_warnings(items, b),
    })
}

fn item_agent_ranges(items: &[u32]) -> Vec<core::ops::Range<AgentId>> {
    let mut ranges = Vec::with_capacity(items.len());
    let mut next = 0usize;
    for &s in items {
        ranges.push(next..next + s as usize);
        next += s as usize;
    }
    ranges
}

/// Maps a claimed solution of a 3-partitioning instance (groups of item
/// indices) to the allocation it certifies: anchors, guards and markers go
/// to their forced vertices and each group's item agents fill one block,
/// star or path segment. The result has all costs zero when the groups are
/// valid. Errors on families without a forward map.
pub fn ef_allocation_from_partition(
    artifact: &ReductionArtifact,
    partition: &[Vec<usize>],
) -> Result<Allocation, GenError> {
    let (items, b, kind) = match &artifact.family {
        ReductionFamily::ThreePartitionCliques { items, b } => (items, *b, 0u8),
        ReductionFamily::ThreePartitionTree { items, b } => (items, *b, 1),
        ReductionFamily::ThreePartitionPath { items, b } => (items, *b, 2),
        _ => return Err(GenError::UnsupportedFamily),
    };
    let groups = items.len() / 3;
    if partition.len() != groups {
        return Err(GenError::BadPartition { reason: "wrong number of groups" });
    }
    let mut seen = vec![false; items.len()];
    for group in partition {
        let mut size: u64 = 0;
        for &i in group {
            if i >= items.len() {
                return Err(GenError::BadPartition { reason: "item index out of range" });
            }
            if seen[i] {
                return Err(GenError::BadPartition { reason: "item used twice" });
            }
            seen[i] = true;
            size += items[i] as u64;
        }
        if size != b as u64 {
            return Err(GenError::BadPartition { reason: "group does not sum to the target" });
        }
    }
    // groups * b == sum(items), so full coverage follows from disjointness,
    // except when some items have size zero; check explicitly.
    if seen.iter().any(|&s| !s) {
        return Err(GenError::BadPartition { reason: "some item is unused" });
    }

    let ranges = item_agent_ranges(items);
    let nb: usize = items.iter().map(|&s| s as usize).sum();
    let agents = artifact.game.agent_count();
    let mut slots = vec![usize::MAX; agents];
    match kind {
        0 => {
            // Blocks at j*b..(j+1)*b, apex last; guard is agent nb.
            slots[nb] = nb;
            for (j, group) in partition.iter().enumerate() {
                let mut v = j * b as usize;
                for &i in group {
                    for a in ranges[i].clone() {
                        slots[a] = v;
                        v += 1;
                    }
                }
            }
        }
        1 => {
            // Stars at j*b..(j+1)*b, centers nb..nb+groups, apex last.
            slots[nb] = nb + groups; // guard on the apex
            for t in 0..groups {
                slots[nb + 1 + t] = nb + t; // marker t on center t
            }
            for (j, group) in partition.iter().enumerate() {
                let mut v = j * b as usize;
                for &i in group {
                    for a in ranges[i].clone() {
                        slots[a] = v;
                        v += 1;
                    }
                }
            }
        }
        _ => {
            // Anchors every b+1 vertices; group j fills the gap after
            // anchor j.
            let gap = b as usize + 1;
            for t in 0..=groups {
                slots[nb + t] = t * gap;
            }
            for (j, group) in partition.iter().enumerate() {
                let mut v = j * gap + 1;
                for &i in group {
                    for a in ranges[i].clone() {
                        slots[a] = v;
                        v += 1;
                    }
                }
            }
        }
    }
    Ok(Allocation::for_game(slots, &artifact.game)?)
}

/// Encodes bisection of a cubic graph `h` (split into halves with `k`
/// crossing edges): two stars with `(3n/2 - k)/2` leaves each, joined by
/// `k` parallel length-2 paths. One agent per edge of `h`, adjacent edges
/// wanting each other at distance 2, plus two guards wanting everyone
/// adjacent (forcing them onto the centers). The resulting topology has
/// vertex cover number 2.
pub fn gen_from_cubic_bisection(h: &Topology, k: usize) -> Result<ReductionArtifact, GenError> {
    let n_h = h.vertex_count();
    for v in 0..n_h {
        if h.degree(v) != 3 {
            return Err(GenError::NotCubic { vertex: v, degree: h.degree(v) });
        }
    }
    let source_edges = h.edges();
    let edge_count = source_edges.len(); // 3 * n_h / 2
    if k == 0 || k > edge_count {
        return Err(GenError::BadParameter {
            reason: "k must be between 1 and the source edge count",
        });
    }
    if (edge_count - k) % 2 != 0 {
        return Err(GenError::BadParameter {
            reason: "source edge count minus k must be even",
        });
    }
    let b = (edge_count - k) / 2;

    // Layout: centers 0 and 1, first star's leaves, second star's leaves,
    // then the k middle vertices.
    let leaves_1 = 2..2 + b;
    let leaves_2 = 2 + b..2 + 2 * b;
    let middles = 2 + 2 * b..2 + 2 * b + k;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for v in leaves_1.clone() {
        edges.push((0, v));
    }
    for v in leaves_2.clone() {
        edges.push((1, v));
    }
    for v in middles.clone() {
        edges.push((0, v));
        edges.push((1, v));
    }
    let topology = Topology::new(2 + 2 * b + k, &edges)?;

    let agents = edge_count + 2;
    let guards = [edge_count, edge_count + 1];
    let mut wants = vec![BTreeMap::new(); agents];
    for (i, &(u1, v1)) in source_edges.iter().enumerate() {
        for (j, &(u2, v2)) in source_edges.iter().enumerate().skip(i + 1) {
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                wants[i].insert(j, 2);
                wants[j].insert(i, 2);
            }
        }
    }
    for g in guards {
        for a in 0..agents {
            if a != g {
                wants[g].insert(a, 1);
            }
        }
    }

    let game = Game { topology, wants };
    validate_game(&game)?;

    let mut vertex_groups = BTreeMap::new();
    vertex_groups.insert(String::from("centers"), vec![0, 1]);
    vertex_groups.insert(String::from("star-0-leaves"), leaves_1.collect());
    vertex_groups.insert(String::from("star-1-leaves"), leaves_2.collect());
    vertex_groups.insert(String::from("middles"), middles.collect());
    let mut agent_groups = BTreeMap::new();
    agent_groups.insert(String::from("edge-agents"), (0..edge_count).collect());
    agent_groups.insert(String::from("guards"), guards.to_vec());

    let mut warnings = Vec::new();
    if k <= 4 || k >= n_h / 2 {
        warnings.push(format!(
            "hardness argument assumes {} > k > 4, got k = {k}",
            n_h / 2
        ));
    }

    Ok(ReductionArtifact {
        game,
        family: ReductionFamily::CubicBisection { vertices: n_h, k },
        vertex_groups,
        agent_groups,
        warnings,
    })
}

/// Encodes satisfiability of 3-literal clauses. One vertex per literal
/// occurrence, adjacent across clauses unless the literals are
/// complementary, plus `2m + 1` universal vertices; `3m + 1` agents all
/// want each other adjacent, so an envy-free allocation must sit on a
/// clique hitting one non-conflicting literal per clause.
pub fn gen_from_cnf(clauses: &[[i32; 3]]) -> Result<ReductionArtifact, GenError> {
    let m = clauses.len();
    for (j, clause) in clauses.iter().enumerate() {
        if clause.iter().any(|&l| l == 0) {
            return Err(GenError::BadClause { clause: j });
        }
    }

    let literal_vertices = 3 * m;
    let universals = literal_vertices..literal_vertices + 2 * m + 1;
    let n = literal_vertices + 2 * m + 1;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for j in 0..m {
        for p in 0..3 {
            for j2 in (j + 1)..m {
                for p2 in 0..3 {
                    if clauses[j][p] != -clauses[j2][p2] {
                        edges.push((3 * j + p, 3 * j2 + p2));
                    }
                }
            }
        }
    }
    for u in universals.clone() {
        for v in 0..n {
            if v < u {
                edges.push((v, u));
            }
        }
    }
    let topology = Topology::new(n, &edges)?;

    let agents = 3 * m + 1;
    let mut wants = vec![BTreeMap::new(); agents];
    for a in 0..agents {
        for b in 0..agents {
            if a != b {
                wants[a].insert(b, 1);
            }
        }
    }
    // The family's defining density bound: |A| <= (3/5)|V| + 1.
    debug_assert!(5 * agents <= 3 * n + 5);

    let game = Game { topology, wants };
    validate_game(&game)?;

    let mut vertex_groups = BTreeMap::new();
    if literal_vertices > 0 {
        vertex_groups
            .insert(String::from("literal-occurrences"), (0..literal_vertices).collect());
    }
    vertex_groups.insert(String::from("universals"), universals.collect());
    let mut agent_groups = BTreeMap::new();
    agent_groups.insert(String::from("agents"), (0..agents).collect());

    Ok(ReductionArtifact {
        game,
        family: ReductionFamily::Cnf { clauses: clauses.to_vec() },
        vertex_groups,
        agent_groups,
        warnings: Vec::new(),
    })
}

/// Encodes a k-clique search in `source`: the source graph plus one
/// universal vertex, `k + 1` agents pairwise wanting each other adjacent
/// and `|V(source)| - k` indifferent agents filling the rest.
pub fn gen_from_clique(source: &Topology, k: usize) -> Result<ReductionArtifact, GenError> {
    let n_src = source.vertex_count();
    if k > n_src {
        return Err(GenError::BadParameter { reason: "k exceeds the source vertex count" });
    }
    let universal = n_src;
    let mut edges = source.edges();
    for v in 0..n_src {
        edges.push((v, universal));
    }
    let topology = Topology::new(n_src + 1, &edges)?;

    let agents = n_src + 1;
    let interested = k + 1;
    let mut wants = vec![BTreeMap::new(); agents];
    for a in 0..interested {
        for b in 0..interested {
            if a != b {
                wants[a].insert(b, 1);
            }
        }
    }

    let game = Game { topology, wants };
    validate_game(&game)?;

    let mut vertex_groups = BTreeMap::new();
    vertex_groups.insert(String::from("source"), (0..n_src).collect());
    vertex_groups.insert(String::from("universal"), vec![universal]);
    let mut agent_groups = BTreeMap::new();
    agent_groups.insert(String::from("interested"), (0..interested).collect());
    if interested < agents {
        agent_groups.insert(String::from("indifferent"), (interested..agents).collect());
    }

    Ok(ReductionArtifact {
        game,
        family: ReductionFamily::Clique { k },
        vertex_groups,
        agent_groups,
        warnings: Vec::new(),
    })
}

/// Small families separating the stability notions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CounterexampleFamily {
    /// `agents` agents on an even cycle, each wanting its successor at
    /// distance 2; no envy-free allocation.
    NoEfCycle { agents: usize },
    /// Two agents on a 4-path disagreeing about their distance; no
    /// jump-stable allocation.
    NoJumpPath,
    /// Three agents on a 3-path with rotated ideals; no swap-stable
    /// allocation.
    NoSwapPath,
    /// Three agents on a 4-cycle; swap-stable allocations exist (one is
    /// bundled) but envy-free ones do not.
    SwapNotEf,
}

/// Builds the requested counterexample, with a witness allocation for the
/// family whose point is that a non-envy-free allocation is swap stable.
pub fn gen_counterexample(
    family: CounterexampleFamily,
) -> Result<(Game, Option<Allocation>), GenError> {
    let wants = |pairs: &[(AgentId, u32)]| -> BTreeMap<AgentId, u32> {
        pairs.iter().copied().collect()
    };
    match family {
        CounterexampleFamily::NoEfCycle { agents } => {
            if agents < 3 {
                return Err(GenError::TooFewAgents { agents, minimum: 3 });
            }
            let n = if agents % 2 == 0 { agents } else { agents + 1 };
            let mut w = vec![BTreeMap::new(); agents];
            for a in 0..agents {
                w[a].insert((a + 1) % agents, 2);
            }
            let game = Game { topology: crate::game::shapes::cycle(n)?, wants: w };
            validate_game(&game)?;
            Ok((game, None))
        }
        CounterexampleFamily::NoJumpPath => {
            let game = Game {
                topology: crate::game::shapes::path(4)?,
                wants: vec![wants(&[(1, 1)]), wants(&[(0, 2)])],
            };
            validate_game(&game)?;
            Ok((game, None))
        }
        CounterexampleFamily::NoSwapPath => {
            let game = Game {
                topology: crate::game::shapes::path(3)?,
                wants: vec![
                    wants(&[(1, 1), (2, 2)]),
                    wants(&[(0, 2), (2, 1)]),
                    wants(&[(0, 1), (1, 2)]),
                ],
            };
            validate_game(&game)?;
            Ok((game, None))
        }
        CounterexampleFamily::SwapNotEf => {
            let game = Game {
                topology: crate::game::shapes::cycle(4)?,
                wants: vec![wants(&[(1, 2)]), wants(&[(2, 2)]), wants(&[(0, 2)])],
            };
            validate_game(&game)?;
            let witness = Allocation::for_game(vec![0, 2, 1], &game)?;
            Ok((game, Some(witness)))
        }
    }
}

/// Preference shape produced by [`gen_random`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefShapeKind {
    /// Independent coin per ordered agent pair.
    Generic,
    /// Coin per unordered pair; both directions share the ideal.
    Symmetric,
    /// Arcs only from smaller to larger agent id.
    Dag,
    /// Non-hub agents may want agent 0.
    InStar,
    /// Agent 0 may want the others.
    OutStar,
}

/// Parameters for [`gen_random`]. `extra_edge_prob` adds edges on top of a
/// random attachment tree; `want_prob` is the per-pair (or per-arc)
/// preference probability; ideals are uniform in `1..=max_ideal`.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomGameParams {
    pub vertices: usize,
    pub extra_edge_prob: f64,
    pub agents: usize,
    pub want_prob: f64,
    pub max_ideal: u32,
    pub shape: PrefShapeKind,
    pub seed: u64,
}

/// Generates a connected game, deterministic in the seed: a random
/// attachment tree plus extra edges, and preferences drawn per `shape`.
pub fn gen_random(params: &RandomGameParams) -> Result<Game, GenError> {
    if params.vertices == 0 {
        return Err(GenError::BadRandomParams { reason: "need at least one vertex" });
    }
    if params.agents > params.vertices {
        return Err(GenError::BadRandomParams { reason: "more agents than vertices" });
    }
    for p in [params.extra_edge_prob, params.want_prob] {
        if !(0.0..=1.0).contains(&p) {
            return Err(GenError::BadRandomParams {
                reason: "probabilities must lie within [0, 1]",
            });
        }
    }
    if params.max_ideal == 0 {
        return Err(GenError::BadRandomParams { reason: "max ideal distance must be positive" });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let n = params.vertices;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let tree: alloc::collections::BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    for u in 0..n {
        for v in (u + 1)..n {
            if !tree.contains(&(u, v)) && rng.gen_bool(params.extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let topology = Topology::new(n, &edges)?;

    let agents = params.agents;
    let mut wants = vec![BTreeMap::new(); agents];
    let ideal = |rng: &mut ChaCha8Rng| rng.gen_range(1..=params.max_ideal);
    match params.shape {
        PrefShapeKind::Generic => {
            for a in 0..agents {
                for b in 0..agents {
                    if a != b && rng.gen_bool(params.want_prob) {
                        let d = ideal(&mut rng);
                        wants[a].insert(b, d);
                    }
                }
            }
        }
        PrefShapeKind::Symmetric => {
            for a in 0..agents {
                for b in (a + 1)..agents {
                    if rng.gen_bool(params.want_prob) {
                        let d = ideal(&mut rng);
                        wants[a].insert(b, d);
                        wants[b].insert(a, d);
                    }
                }
            }
        }
        PrefShapeKind::Dag => {
            for a in 0..agents {
                for b in (a + 1)..agents {
                    if rng.gen_bool(params.want_prob) {
                        let d = ideal(&mut rng);
                        wants[a].insert(b, d);
                    }
                }
            }
        }
        PrefShapeKind::InStar => {
            for a in 1..agents {
                if rng.gen_bool(params.want_prob) {
                    let d = ideal(&mut rng);
                    wants[a].insert(0, d);
                }
            }
        }
        PrefShapeKind::OutStar => {
            for b in 1..agents {
                if rng.gen_bool(params.want_prob) {
                    let d = ideal(&mut rng);
                    wants[0].insert(b, d);
                }
            }
        }
    }

    let game = Game { topology, wants };
    validate_game(&game)?;
    Ok(game)
}

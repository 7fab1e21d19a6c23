//! Envy-free solvers driven by structural graph parameters: neighborhood
//! diversity (twin classes), vertex cover (distance-preserving kernels), and
//! diameter (equidistant vertex sets).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GameError;
use crate::exact::{brute_force_search, SearchConfig, SolveOutcome, StabilityNotion};
use crate::game::{
    build_distance_matrix, validate_game, Allocation, Game, Topology, VertexId,
};
use crate::stability;

/// Twin classes of a topology. Two vertices are twins when their
/// neighborhoods agree outside the pair; each class is either a clique or an
/// independent set, every vertex outside a class is adjacent to all of it or
/// none of it, and consequently the distance between two vertices depends
/// only on their classes. Classes are listed by smallest member, members
/// ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypePartition {
    pub classes: Vec<Vec<VertexId>>,
    pub is_clique_class: Vec<bool>,
}

/// Computes the twin-class partition by grouping equal open neighborhoods
/// (non-adjacent twins) and equal closed neighborhoods (adjacent twins). The
/// two groupings never overlap non-trivially, so their union is already an
/// equivalence.
pub fn neighborhood_partition(t: &Topology) -> TypePartition {
    let n = t.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let up = parent[v];
            let root = find(parent, up);
            parent[v] = root;
        }
        parent[v]
    }

    let mut open: BTreeMap<Vec<VertexId>, usize> = BTreeMap::new();
    let mut closed: BTreeMap<Vec<VertexId>, usize> = BTreeMap::new();
    for v in 0..n {
        let open_sig = t.neighbors(v).to_vec();
        let mut closed_sig = open_sig.clone();
        closed_sig.push(v);
        closed_sig.sort_unstable();
        for (map, sig) in [(&mut open, open_sig), (&mut closed, closed_sig)] {
            match map.get(&sig) {
                Some(&u) => {
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    // Attach the larger root so class ids follow smallest
                    // members.
                    parent[ru.max(rv)] = ru.min(rv);
                }
                None => {
                    map.insert(sig, v);
                }
            }
        }
    }

    let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        let id = *class_of_root.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
    }
    let is_clique_class = classes
        .iter()
        .map(|c| c.len() >= 2 && t.has_edge(c[0], c[1]))
        .collect();
    TypePartition { classes, is_clique_class }
}

/// Envy-free search over twin classes. Because distances depend only on
/// classes, it suffices to enumerate the `classes^|A|` assignments of agents
/// to classes; each capacity-respecting assignment is realized canonically
/// (agents ascending onto class vertices ascending) and checked. Aborts
/// upfront when the assignment count exceeds the budget.
pub fn solve_ef_nd(g: &Game, cfg: &SearchConfig) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    let dist = build_distance_matrix(&g.topology)?;
    let partition = neighborhood_partition(&g.topology);
    let delta = partition.classes.len();
    let agents = g.agent_count();

    let fits = (delta as u64)
        .checked_pow(agents.min(u32::MAX as usize) as u32)
        .is_some_and(|mappings| mappings <= cfg.budget);
    if !fits {
        return Ok(SolveOutcome::aborted(0));
    }

    let mut assignment = vec![0usize; agents];
    let mut nodes: u64 = 0;
    loop {
        nodes += 1;
        let mut count = vec![0usize; delta];
        for &c in &assignment {
            count[c] += 1;
        }
        if count.iter().zip(&partition.classes).all(|(&k, class)| k <= class.len()) {
            let mut next_in_class = vec![0usize; delta];
            let mut slots = vec![0usize; agents];
            for (a, &c) in assignment.iter().enumerate() {
                slots[a] = partition.classes[c][next_in_class[c]];
                next_in_class[c] += 1;
            }
            let alloc = Allocation::for_game(slots, g)?;
            if stability::is_envy_free(g, &dist, &alloc) {
                return Ok(SolveOutcome::found(alloc, nodes));
            }
        }
        // Advance the assignment lexicographically (agent 0 most
        // significant).
        let mut pos = agents;
        while pos > 0 {
            pos -= 1;
            assignment[pos] += 1;
            if assignment[pos] < delta {
                break;
            }
            assignment[pos] = 0;
            if pos == 0 {
                return Ok(SolveOutcome::none(nodes));
            }
        }
        if agents == 0 {
            return Ok(SolveOutcome::none(nodes));
        }
    }
}

/// Finds a minimum vertex cover by iterative deepening on the standard
/// edge branching: pick the first uncovered edge in lexicographic order and
/// try its smaller endpoint first, so the returned cover is deterministic.
#[must_use]
pub fn compute_vertex_cover(t: &Topology) -> Vec<VertexId> {
    vertex_cover_upto(t, t.vertex_count()).expect("the full vertex set is a cover")
}

/// Minimum vertex cover if one of size at most `cap` exists.
pub(crate) fn vertex_cover_upto(t: &Topology, cap: usize) -> Option<Vec<VertexId>> {
    let edges = t.edges();
    let mut in_cover = vec![false; t.vertex_count()];
    for k in 0..=cap.min(t.vertex_count()) {
        if let Some(cover) = cover_branch(&edges, &mut in_cover, k) {
            return Some(cover);
        }
    }
    None
}

fn cover_branch(
    edges: &[(VertexId, VertexId)],
    in_cover: &mut Vec<bool>,
    k: usize,
) -> Option<Vec<VertexId>> {
    let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !in_cover[u] && !in_cover[v]) else {
        return Some((0..in_cover.len()).filter(|&w| in_cover[w]).collect());
    };
    if k == 0 {
        return None;
    }
    for w in [u, v] {
        in_cover[w] = true;
        let found = cover_branch(edges, in_cover, k - 1);
        in_cover[w] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// A distance-preserving kernel together with the map from kernel vertex
/// ids back to the original ids.
#[derive(Debug, Clone)]
pub struct VcKernel {
    pub game: Game,
    pub vertex_map: Vec<VertexId>,
}

/// Shrinks a game to a kernel around a vertex cover. Non-cover vertices are
/// independent and their shortest paths run through the cover, so vertices
/// with the same cover neighborhood are interchangeable; keeping
/// `max(|A|, 1)` of each kind preserves both the distances among kept
/// vertices and the existence of an envy-free allocation.
pub fn kernelize_by_vc(g: &Game, cover: &[VertexId]) -> Result<VcKernel, GameError> {
    validate_game(g)?;
    let n = g.topology.vertex_count();
    let mut in_cover = vec![false; n];
    for &c in cover {
        in_cover[c] = true;
    }
    debug_assert!(
        g.topology.edges().iter().all(|&(u, v)| in_cover[u] || in_cover[v]),
        "the given set must cover every edge"
    );

    let mut types: BTreeMap<Vec<VertexId>, Vec<VertexId>> = BTreeMap::new();
    for v in 0..n {
        if !in_cover[v] {
            let sig: Vec<VertexId> =
                g.topology.neighbors(v).iter().copied().filter(|&u| in_cover[u]).collect();
            types.entry(sig).or_default().push(v);
        }
    }

    let keep_per_type = g.agent_count().max(1);
    let mut keep: Vec<VertexId> = (0..n).filter(|&v| in_cover[v]).collect();
    for members in types.values() {
        keep.extend(members.iter().take(keep_per_type));
    }
    keep.sort_unstable();

    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let edges: Vec<(VertexId, VertexId)> = g
        .topology
        .edges()
        .into_iter()
        .filter(|&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
        .map(|(u, v)| (new_id[u], new_id[v]))
        .collect();
    let topology = Topology::new(keep.len(), &edges)?;
    Ok(VcKernel { game: Game { topology, wants: g.wants.clone() }, vertex_map: keep })
}

/// Envy-free search through a vertex-cover kernel: kernelize, brute-force
/// the kernel, and map any witness back to original vertex ids.
pub fn solve_ef_vc(g: &Game, cfg: &SearchConfig) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    let cover = compute_vertex_cover(&g.topology);
    let kernel = kernelize_by_vc(g, &cover)?;
    let out = brute_force_search(&kernel.game, StabilityNotion::EnvyFree, cfg)?;
    let witness = match out.witness {
        Some(w) => {
            let slots: Vec<VertexId> =
                w.slots().iter().map(|&v| kernel.vertex_map[v]).collect();
            let mapped = Allocation::for_game(slots, g)?;
            debug_assert!({
                let dist = build_distance_matrix(&g.topology)?;
                stability::is_envy_free(g, &dist, &mapped)
            });
            Some(mapped)
        }
        None => None,
    };
    Ok(SolveOutcome { status: out.status, witness, nodes_explored: out.nodes_explored })
}

/// Searches for `k` vertices with equal pairwise distance. Recursively
/// pivots on the smallest working vertex and partitions the rest by their
/// distance to it; a set of pivots sharing one distance value, plus any
/// vertex still in the working set, is equidistant. Branches are explored
/// largest class first (ties by smaller distance), so when
/// `diameter^(diameter * k) <= |V|` the first dive already succeeds.
pub fn equidistant_set(t: &Topology, k: usize) -> Result<Option<Vec<VertexId>>, GameError> {
    let dist = build_distance_matrix(t)?;
    if k <= 1 {
        return Ok(Some((0..k).collect()));
    }
    let working: Vec<VertexId> = (0..t.vertex_count()).collect();
    Ok(equidistant_search(&dist, &working, &mut Vec::new(), k))
}

fn equidistant_search(
    dist: &crate::game::DistanceMatrix,
    working: &[VertexId],
    chain: &mut Vec<(VertexId, u32)>,
    k: usize,
) -> Option<Vec<VertexId>> {
    // A color class of the chain plus one working vertex is equidistant.
    let mut by_color: BTreeMap<u32, Vec<VertexId>> = BTreeMap::new();
    for &(p, c) in chain.iter() {
        by_color.entry(c).or_default().push(p);
    }
    let bonus = usize::from(!working.is_empty());
    for pivots in by_color.values() {
        if pivots.len() + bonus >= k {
            let mut set: Vec<VertexId> = pivots.clone();
            if let Some(&w) = working.first() {
                set.push(w);
            }
            set.truncate(k);
            set.sort_unstable();
            return Some(set);
        }
    }

    let Some((&pivot, rest)) = working.split_first() else {
        return None;
    };
    let mut by_dist: BTreeMap<u32, Vec<VertexId>> = BTreeMap::new();
    for &w in rest {
        by_dist.entry(dist.get(pivot, w)).or_default().push(w);
    }
    let mut order: Vec<(u32, Vec<VertexId>)> = by_dist.into_iter().collect();
    order.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
    for (color, class) in order {
        chain.push((pivot, color));
        let found = equidistant_search(dist, &class, chain, k);
        chain.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Envy-free solver for large diameters. If the topology contains `|A|`
/// pairwise equidistant vertices, placing the agents there is envy-free for
/// every preference profile: swapping two agents changes neither their
/// mutual distance nor any distance to a third agent. Falls back to brute
/// force when no such set is found.
pub fn solve_ef_diameter(g: &Game, cfg: &SearchConfig) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    if let Some(set) = equidistant_set(&g.topology, g.agent_count())? {
        let alloc = Allocation::for_game(set, g)?;
        debug_assert!({
            let dist = build_distance_matrix(&g.topology)?;
            stability::is_envy_free(g, &dist, &alloc)
        });
        return Ok(SolveOutcome::found(alloc, 1));
    }
    brute_force_search(g, StabilityNotion::EnvyFree, cfg)
}

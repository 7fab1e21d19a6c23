//! Game model: topology, shortest-path metric, agents, allocations, costs.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GameError;

pub type VertexId = usize;
pub type AgentId = usize;

/// Simple undirected graph on dense vertex ids `0..vertex_count()`.
///
/// Construction rejects out-of-range endpoints, self-loops and duplicate
/// edges. Connectivity is a *game* requirement and is checked by
/// [`validate_game`] / [`build_distance_matrix`], so partial structures can
/// still be built and inspected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    adj: Vec<Vec<VertexId>>,
}

impl Topology {
    pub fn new(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GameError> {
        if vertex_count == 0 {
            return Err(GameError::EmptyTopology);
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GameError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GameError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                let dup = list.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(GameError::DuplicateEdge {
                    u: v.min(dup),
                    v: v.max(dup),
                });
            }
        }
        Ok(Topology { adj })
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[must_use]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    #[must_use]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    #[must_use]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edge list with `u < v`, lexicographically sorted.
    #[must_use]
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    #[must_use]
    pub fn bfs_distances(&self, src: VertexId) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.adj.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    #[must_use]
    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// True iff every pair of distinct vertices is adjacent.
    #[must_use]
    pub fn is_clique(&self) -> bool {
        let n = self.adj.len();
        self.adj.iter().all(|list| list.len() == n - 1)
    }

    /// Returns the center of a star (one vertex adjacent to all others, the
    /// rest pairwise non-adjacent). `None` when the topology is not a star.
    /// Graphs on one or two vertices count as stars with center 0.
    #[must_use]
    pub fn star_center(&self) -> Option<VertexId> {
        let n = self.adj.len();
        if n <= 2 {
            return if self.is_connected() { Some(0) } else { None };
        }
        let center = (0..n).find(|&v| self.adj[v].len() == n - 1)?;
        let leaves_ok = (0..n)
            .filter(|&v| v != center)
            .all(|v| self.adj[v].len() == 1);
        leaves_ok.then_some(center)
    }
}

/// All-pairs shortest-path distances of a connected topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[must_use]
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.d[u * self.n + v]
    }

    #[must_use]
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Runs one BFS per vertex. Fails with [`GameError::Disconnected`] when any
/// pair is unreachable.
pub fn build_distance_matrix(t: &Topology) -> Result<DistanceMatrix, GameError> {
    let n = t.vertex_count();
    let mut d = Vec::with_capacity(n * n);
    for v in 0..n {
        for dist in t.bfs_distances(v) {
            d.push(dist.ok_or(GameError::Disconnected)?);
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// A game: a topology plus one wants map per agent.
///
/// `wants[a]` maps each agent `b` that `a` cares about to the ideal distance
/// `d_a(b) >= 1`. Agents and vertices use dense ids; any naming lives in
/// front-end layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    pub topology: Topology,
    pub wants: Vec<BTreeMap<AgentId, u32>>,
}

impl Game {
    #[must_use]
    pub fn agent_count(&self) -> usize {
        self.wants.len()
    }
}

/// Checks the full game contract: connected topology, `|A| <= |V|`, wants
/// maps free of self-wants, unknown agents and zero ideal distances.
pub fn validate_game(g: &Game) -> Result<(), GameError> {
    if !g.topology.is_connected() {
        return Err(GameError::Disconnected);
    }
    let agents = g.agent_count();
    let vertices = g.topology.vertex_count();
    if agents > vertices {
        return Err(GameError::TooManyAgents { agents, vertices });
    }
    for (a, wants) in g.wants.iter().enumerate() {
        for (&b, &d) in wants {
            if b == a {
                return Err(GameError::SelfWant { agent: a });
            }
            if b >= agents {
                return Err(GameError::UnknownAgent { agent: b, agent_count: agents });
            }
            if d == 0 {
                return Err(GameError::ZeroIdealDistance { agent: a, target: b });
            }
        }
    }
    Ok(())
}

/// Injective placement of agents onto vertices; `slots[a]` is agent `a`'s
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Allocation {
    slots: Vec<VertexId>,
}

impl Allocation {
    pub fn new(slots: Vec<VertexId>, vertex_count: usize) -> Result<Self, GameError> {
        let mut seen = vec![false; vertex_count];
        for &v in &slots {
            if v >= vertex_count {
                return Err(GameError::VertexOutOfRange { vertex: v, vertex_count });
            }
            if seen[v] {
                return Err(GameError::AllocationNotInjective { vertex: v });
            }
            seen[v] = true;
        }
        Ok(Allocation { slots })
    }

    /// Checks the allocation against a specific game (length and range).
    pub fn for_game(slots: Vec<VertexId>, g: &Game) -> Result<Self, GameError> {
        if slots.len() != g.agent_count() {
            return Err(GameError::AllocationLengthMismatch {
                expected: g.agent_count(),
                actual: slots.len(),
            });
        }
        Self::new(slots, g.topology.vertex_count())
    }

    #[must_use]
    pub fn vertex_of(&self, a: AgentId) -> VertexId {
        self.slots[a]
    }

    #[must_use]
    pub fn slots(&self) -> &[VertexId] {
        &self.slots
    }

    #[must_use]
    pub fn agent_count(&self) -> usize {
        self.slots.len()
    }

    /// Linear scan; allocations are small.
    #[must_use]
    pub fn agent_at(&self, v: VertexId) -> Option<AgentId> {
        self.slots.iter().position(|&w| w == v)
    }

    /// `occupied[v]` iff some agent stands on `v`.
    #[must_use]
    pub fn occupied(&self, vertex_count: usize) -> Vec<bool> {
        let mut occ = vec![false; vertex_count];
        for &v in &self.slots {
            occ[v] = true;
        }
        occ
    }

    /// The allocation after agents `a` and `b` exchange vertices.
    #[must_use]
    pub fn swapped(&self, a: AgentId, b: AgentId) -> Allocation {
        let mut slots = self.slots.clone();
        slots.swap(a, b);
        Allocation { slots }
    }

    /// The allocation after agent `a` moves to vertex `v`. The caller
    /// guarantees `v` is unoccupied.
    #[must_use]
    pub fn jumped(&self, a: AgentId, v: VertexId) -> Allocation {
        debug_assert!(self.agent_at(v).is_none());
        let mut slots = self.slots.clone();
        slots[a] = v;
        Allocation { slots }
    }
}

/// `cost(a, pi) = sum over (b, d) in wants[a] of |d - dist(pi(a), pi(b))|`.
#[must_use]
pub fn cost(g: &Game, dist: &DistanceMatrix, alloc: &Allocation, a: AgentId) -> u64 {
    cost_standing_at(g, dist, alloc, a, alloc.vertex_of(a))
}

/// Cost of `a` if it stood at `v` while everyone else keeps their slot.
/// Evaluates jumps (`v` empty) and, because swapping partners preserves the
/// mover's distance to the vertex it vacates, also the mover side of swaps
/// with agents outside `wants[a]`.
#[must_use]
pub(crate) fn cost_standing_at(
    g: &Game,
    dist: &DistanceMatrix,
    alloc: &Allocation,
    a: AgentId,
    v: VertexId,
) -> u64 {
    g.wants[a]
        .iter()
        .map(|(&b, &d)| u64::from(d.abs_diff(dist.get(v, alloc.vertex_of(b)))))
        .sum()
}

/// Cost of `a` after swapping vertices with `b` (correct even when `b` is in
/// `wants[a]`: the mutual distance is preserved by the swap).
#[must_use]
pub(crate) fn cost_after_swap(
    g: &Game,
    dist: &DistanceMatrix,
    alloc: &Allocation,
    a: AgentId,
    b: AgentId,
) -> u64 {
    let va = alloc.vertex_of(a);
    let vb = alloc.vertex_of(b);
    g.wants[a]
        .iter()
        .map(|(&c, &d)| {
            let target = if c == b { va } else { alloc.vertex_of(c) };
            u64::from(d.abs_diff(dist.get(vb, target)))
        })
        .sum()
}

/// Structural flags of the preference digraph (arc `a -> b` iff `b` is in
/// `wants[a]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceShape {
    /// Every arc is mutual with equal ideal distances.
    pub symmetric: bool,
    /// No agent wants anything.
    pub indifferent: bool,
    /// At most one agent is wanted, and every non-empty wants map is exactly
    /// `{hub}`. A fully indifferent profile qualifies vacuously.
    pub in_star: bool,
    /// At most one agent has a non-empty wants map.
    pub out_star: bool,
    /// The preference digraph has no directed cycle.
    pub acyclic: bool,
    /// The unique wanted agent, when `in_star` holds non-vacuously.
    pub in_star_hub: Option<AgentId>,
    /// The unique interested agent, when `out_star` holds non-vacuously.
    pub out_star_hub: Option<AgentId>,
}

#[must_use]
pub fn classify_preferences(g: &Game) -> PreferenceShape {
    let n = g.agent_count();
    let indifferent = g.wants.iter().all(BTreeMap::is_empty);

    let symmetric = g.wants.iter().enumerate().all(|(a, wants)| {
        wants
            .iter()
            .all(|(&b, &d)| g.wants[b].get(&a) == Some(&d))
    });

    let mut wanted: Vec<AgentId> = g.wants.iter().flat_map(|w| w.keys().copied()).collect();
    wanted.sort_unstable();
    wanted.dedup();
    let in_star_hub = match wanted.as_slice() {
        [hub] => Some(*hub),
        _ => None,
    };
    let in_star = wanted.len() <= 1
        && g.wants
            .iter()
            .all(|w| w.is_empty() || (w.len() == 1 && in_star_hub.map_or(false, |h| w.contains_key(&h))));

    let interested: Vec<AgentId> = (0..n).filter(|&a| !g.wants[a].is_empty()).collect();
    let out_star = interested.len() <= 1;
    let out_star_hub = match interested.as_slice() {
        [hub] => Some(*hub),
        _ => None,
    };

    // Kahn's algorithm on the preference digraph.
    let mut indeg = vec![0usize; n];
    for wants in &g.wants {
        for &b in wants.keys() {
            if b < n {
                indeg[b] += 1;
            }
        }
    }
    let mut stack: Vec<AgentId> = (0..n).filter(|&a| indeg[a] == 0).collect();
    let mut seen = 0usize;
    while let Some(a) = stack.pop() {
        seen += 1;
        for &b in g.wants[a].keys() {
            if b < n {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    stack.push(b);
                }
            }
        }
    }
    let acyclic = seen == n;

    PreferenceShape {
        symmetric,
        indifferent,
        in_star,
        out_star,
        acyclic,
        in_star_hub,
        out_star_hub,
    }
}

/// Builders for common topologies, used across tests and generators.
pub mod shapes {
    use super::{GameError, Topology, VertexId};
    use alloc::vec::Vec;

    pub fn path(n: usize) -> Result<Topology, GameError> {
        let edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (v - 1, v)).collect();
        Topology::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Topology, GameError> {
        let mut edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (v - 1, v)).collect();
        if n > 2 {
            edges.push((n - 1, 0));
        }
        Topology::new(n, &edges)
    }

    pub fn clique(n: usize) -> Result<Topology, GameError> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Topology::new(n, &edges)
    }

    /// Star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Result<Topology, GameError> {
        let edges: Vec<(VertexId, VertexId)> = (1..n).map(|v| (0, v)).collect();
        Topology::new(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    fn wants(pairs: &[(AgentId, u32)]) -> BTreeMap<AgentId, u32> {
        pairs.iter().copied().collect()
    }

    /// Ring on six vertices with agents a=0 (wants b at 1, c at 1), b=1
    /// (wants a at 2), c=2 (indifferent), standing at v2, v4, v0.
    fn ring_game() -> (Game, Allocation) {
        let g = Game {
            topology: shapes::cycle(6).unwrap(),
            wants: alloc::vec![wants(&[(1, 1), (2, 1)]), wants(&[(0, 2)]), wants(&[])],
        };
        let alloc = Allocation::for_game(alloc::vec![2, 4, 0], &g).unwrap();
        (g, alloc)
    }

    #[test]
    fn rejects_malformed_topologies() {
        assert_eq!(Topology::new(0, &[]), Err(GameError::EmptyTopology));
        assert_eq!(
            Topology::new(2, &[(0, 2)]),
            Err(GameError::VertexOutOfRange { vertex: 2, vertex_count: 2 })
        );
        assert_eq!(Topology::new(2, &[(1, 1)]), Err(GameError::SelfLoop { vertex: 1 }));
        assert_eq!(
            Topology::new(2, &[(0, 1), (1, 0)]),
            Err(GameError::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn distances_on_small_topologies() {
        let d = build_distance_matrix(&shapes::path(4).unwrap()).unwrap();
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(1, 3), 2);
        assert_eq!(d.diameter(), 3);

        let d = build_distance_matrix(&shapes::cycle(6).unwrap()).unwrap();
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(0, 4), 2);
        assert_eq!(d.diameter(), 3);

        let d = build_distance_matrix(&shapes::star(5).unwrap()).unwrap();
        assert_eq!(d.get(1, 2), 2);
        assert_eq!(d.get(0, 4), 1);

        let d = build_distance_matrix(&shapes::clique(4).unwrap()).unwrap();
        assert_eq!(d.diameter(), 1);

        let disconnected = Topology::new(3, &[(0, 1)]).unwrap();
        assert_eq!(build_distance_matrix(&disconnected), Err(GameError::Disconnected));
    }

    #[test]
    fn validation_rejects_bad_games() {
        let t = shapes::path(2).unwrap();
        let g = Game {
            topology: t.clone(),
            wants: alloc::vec![wants(&[]), wants(&[]), wants(&[])],
        };
        assert_eq!(
            validate_game(&g),
            Err(GameError::TooManyAgents { agents: 3, vertices: 2 })
        );

        let g = Game { topology: t.clone(), wants: alloc::vec![wants(&[(0, 1)])] };
        assert_eq!(validate_game(&g), Err(GameError::SelfWant { agent: 0 }));

        let g = Game { topology: t.clone(), wants: alloc::vec![wants(&[(3, 1)])] };
        assert_eq!(
            validate_game(&g),
            Err(GameError::UnknownAgent { agent: 3, agent_count: 1 })
        );

        let g = Game {
            topology: t,
            wants: alloc::vec![wants(&[(1, 0)]), wants(&[])],
        };
        assert_eq!(
            validate_game(&g),
            Err(GameError::ZeroIdealDistance { agent: 0, target: 1 })
        );

        let g = Game {
            topology: Topology::new(3, &[(0, 1)]).unwrap(),
            wants: alloc::vec![wants(&[])],
        };
        assert_eq!(validate_game(&g), Err(GameError::Disconnected));
    }

    #[test]
    fn allocation_checks() {
        let (g, _) = ring_game();
        assert_eq!(
            Allocation::for_game(alloc::vec![0, 0, 1], &g),
            Err(GameError::AllocationNotInjective { vertex: 0 })
        );
        assert_eq!(
            Allocation::for_game(alloc::vec![0, 1], &g),
            Err(GameError::AllocationLengthMismatch { expected: 3, actual: 2 })
        );
        let a = Allocation::for_game(alloc::vec![2, 4, 0], &g).unwrap();
        assert_eq!(a.agent_at(4), Some(1));
        assert_eq!(a.agent_at(3), None);
        assert_eq!(a.swapped(0, 1).slots(), &[4, 2, 0]);
        assert_eq!(a.jumped(0, 5).slots(), &[5, 4, 0]);
    }

    #[test]
    fn ring_example_costs() {
        let (g, alloc) = ring_game();
        let d = build_distance_matrix(&g.topology).unwrap();
        // a at v2: b sits 2 away (ideal 1), c sits 2 away (ideal 1).
        assert_eq!(cost(&g, &d, &alloc, 0), 2);
        assert_eq!(cost(&g, &d, &alloc, 1), 0);
        assert_eq!(cost(&g, &d, &alloc, 2), 0);
    }

    #[test]
    fn swap_cost_uses_preserved_mutual_distance() {
        let (g, alloc) = ring_game();
        let d = build_distance_matrix(&g.topology).unwrap();
        // a swaps with b: a stands at v4, b at v2; their distance stays 2.
        let swapped = alloc.swapped(0, 1);
        assert_eq!(cost_after_swap(&g, &d, &alloc, 0, 1), cost(&g, &d, &swapped, 0));
        // a swaps with c: a stands at v0, c at v2.
        let swapped = alloc.swapped(0, 2);
        assert_eq!(cost_after_swap(&g, &d, &alloc, 0, 2), cost(&g, &d, &swapped, 0));
    }

    #[test]
    fn classify_flags() {
        let (g, _) = ring_game();
        let shape = classify_preferences(&g);
        assert!(!shape.symmetric);
        assert!(!shape.indifferent);
        assert!(!shape.in_star);
        assert!(!shape.out_star);
        assert!(!shape.acyclic);

        // Single agent: everything holds vacuously.
        let g = Game { topology: shapes::path(1).unwrap(), wants: alloc::vec![wants(&[])] };
        let shape = classify_preferences(&g);
        assert!(shape.symmetric && shape.indifferent && shape.in_star && shape.out_star && shape.acyclic);
        assert_eq!(shape.in_star_hub, None);
        assert_eq!(shape.out_star_hub, None);

        // Mutual pair at equal distance: symmetric, cyclic.
        let g = Game {
            topology: shapes::path(4).unwrap(),
            wants: alloc::vec![wants(&[(1, 2)]), wants(&[(0, 2)])],
        };
        let shape = classify_preferences(&g);
        assert!(shape.symmetric && !shape.acyclic && !shape.indifferent);

        // Everyone wants agent 2: in-star with hub 2.
        let g = Game {
            topology: shapes::star(5).unwrap(),
            wants: alloc::vec![wants(&[(2, 1)]), wants(&[(2, 2)]), wants(&[]), wants(&[(2, 1)])],
        };
        let shape = classify_preferences(&g);
        assert!(shape.in_star && !shape.out_star && shape.acyclic);
        assert_eq!(shape.in_star_hub, Some(2));

        // Hub wanting two others at once is not an in-star.
        let g = Game {
            topology: shapes::star(5).unwrap(),
            wants: alloc::vec![wants(&[(1, 1), (2, 1)]), wants(&[]), wants(&[])],
        };
        let shape = classify_preferences(&g);
        assert!(!shape.in_star && shape.out_star && shape.acyclic);
        assert_eq!(shape.out_star_hub, Some(0));
    }

    #[test]
    fn clique_and_star_detection() {
        assert!(shapes::clique(1).unwrap().is_clique());
        assert!(shapes::clique(4).unwrap().is_clique());
        assert!(!shapes::path(3).unwrap().is_clique());
        assert_eq!(shapes::star(5).unwrap().star_center(), Some(0));
        assert_eq!(shapes::path(2).unwrap().star_center(), Some(0));
        assert_eq!(shapes::path(3).unwrap().star_center(), Some(1));
        assert_eq!(shapes::path(4).unwrap().star_center(), None);
        assert_eq!(shapes::cycle(4).unwrap().star_center(), None);
    }
}

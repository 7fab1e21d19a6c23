//! Budgeted exhaustive search and exact solvers.
//!
//! Placements are enumerated lexicographically: agent 0 picks the smallest
//! free vertex first, then agent 1, and so on. The first witness found is
//! therefore the lexicographically smallest one, independent of platform.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GameError;
use crate::game::{
    build_distance_matrix, cost_standing_at, validate_game, AgentId, Allocation, DistanceMatrix,
    Game, VertexId,
};
use crate::stability;

/// Which property the searched allocation must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityNotion {
    EnvyFree,
    SwapStable,
    JumpStable,
    /// Both envy-free and jump stable.
    EnvyFreeJumpStable,
}

impl StabilityNotion {
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            StabilityNotion::EnvyFree => "ef",
            StabilityNotion::SwapStable => "swap",
            StabilityNotion::JumpStable => "jump",
            StabilityNotion::EnvyFreeJumpStable => "ef-jump",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// A witness allocation was found.
    Found,
    /// The search space was exhausted; no allocation satisfies the notion.
    None,
    /// The search would exceed the configured budget and was not attempted
    /// (or was cut off). Existence remains undecided.
    Aborted,
}

/// Outcome of a solver run. `nodes_explored` counts solver-specific work
/// units: complete placements checked for enumerating solvers, applied moves
/// for dynamics solvers, reachable states for the layered in-star search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub witness: Option<Allocation>,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    #[must_use]
    pub fn found(witness: Allocation, nodes_explored: u64) -> Self {
        SolveOutcome { status: SolveStatus::Found, witness: Some(witness), nodes_explored }
    }

    #[must_use]
    pub fn none(nodes_explored: u64) -> Self {
        SolveOutcome { status: SolveStatus::None, witness: None, nodes_explored }
    }

    #[must_use]
    pub fn aborted(nodes_explored: u64) -> Self {
        SolveOutcome { status: SolveStatus::Aborted, witness: None, nodes_explored }
    }
}

/// Search limits. `budget` caps complete placements (or solver states) before
/// the search gives up with [`SolveStatus::Aborted`].
///
/// `deterministic = false` permits solvers to explore in any order that
/// yields the same status; this crate keeps every solver sequential, so both
/// modes return identical witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub deterministic: bool,
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { deterministic: true, budget: 100_000_000 }
    }
}

/// Number of injective placements of `k` agents on `n` vertices:
/// `n * (n-1) * ... * (n-k+1)`. `None` on overflow.
#[must_use]
pub fn falling_factorial(n: usize, k: usize) -> Option<u64> {
    let mut total: u64 = 1;
    for i in 0..k {
        let factor = (n.checked_sub(i)?) as u64;
        total = total.checked_mul(factor)?;
    }
    Some(total)
}

/// Lexicographically smallest placement: agent `a` on vertex `a`.
pub(crate) fn first_lex_allocation(g: &Game) -> Allocation {
    Allocation::for_game((0..g.agent_count()).collect(), g)
        .expect("identity placement is injective on a validated game")
}

/// Exhaustive search over all injective placements for an allocation
/// satisfying `notion`. Aborts upfront when the placement count exceeds
/// `cfg.budget`.
pub fn brute_force_search(
    g: &Game,
    notion: StabilityNotion,
    cfg: &SearchConfig,
) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    let dist = build_distance_matrix(&g.topology)?;
    Ok(brute_force_with_dist(g, &dist, notion, cfg))
}

/// Internal variant reusing a prebuilt metric (the game must be validated).
pub(crate) fn brute_force_with_dist(
    g: &Game,
    dist: &DistanceMatrix,
    notion: StabilityNotion,
    cfg: &SearchConfig,
) -> SolveOutcome {
    let n = g.topology.vertex_count();
    let k = g.agent_count();
    match falling_factorial(n, k) {
        Some(total) if total <= cfg.budget => {}
        _ => return SolveOutcome::aborted(0),
    }

    // Recursion depth is at most the agent count.
    fn rec(
        g: &Game,
        dist: &DistanceMatrix,
        notion: StabilityNotion,
        slots: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
        depth: usize,
        nodes: &mut u64,
    ) -> Option<Allocation> {
        if depth == slots.len() {
            *nodes += 1;
            let alloc = Allocation::new(slots.clone(), used.len())
                .expect("enumeration yields injective placements");
            return stability::satisfies(g, dist, &alloc, notion).then_some(alloc);
        }
        for v in 0..used.len() {
            if used[v] {
                continue;
            }
            slots[depth] = v;
            used[v] = true;
            if let Some(found) = rec(g, dist, notion, slots, used, depth + 1, nodes) {
                return Some(found);
            }
            used[v] = false;
        }
        None
    }

    let mut slots: Vec<VertexId> = vec![0; k];
    let mut used = vec![false; n];
    let mut nodes: u64 = 0;
    match rec(g, dist, notion, &mut slots, &mut used, 0, &mut nodes) {
        Some(alloc) => SolveOutcome::found(alloc, nodes),
        None => SolveOutcome::none(nodes),
    }
}

/// The padded game: indifferent agents fill the `|V| - |A|` spare vertices,
/// making every vertex occupied.
pub(crate) fn pad_indifferent(g: &Game) -> Game {
    let mut wants = g.wants.clone();
    wants.resize(g.topology.vertex_count(), BTreeMap::new());
    Game { topology: g.topology.clone(), wants }
}

/// Decides existence of an allocation that is simultaneously envy-free and
/// jump stable, via the padding equivalence: such an allocation exists iff
/// the padded game (indifferent agents on every spare vertex) admits an
/// envy-free allocation. The witness is the padded witness restricted to the
/// original agents.
pub fn solve_ef_and_jump(g: &Game, cfg: &SearchConfig) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    let padded = pad_indifferent(g);
    let outcome = brute_force_search(&padded, StabilityNotion::EnvyFree, cfg)?;
    Ok(restrict_outcome(outcome, g))
}

/// Drops padding agents from a padded-game outcome.
pub(crate) fn restrict_outcome(outcome: SolveOutcome, g: &Game) -> SolveOutcome {
    let witness = outcome.witness.map(|w| {
        let slots = w.slots()[..g.agent_count()].to_vec();
        Allocation::for_game(slots, g).expect("restriction of injective placement")
    });
    SolveOutcome { status: outcome.status, witness, nodes_explored: outcome.nodes_explored }
}

/// Envy-free search that only enumerates placements of *interested* agents
/// (nonzero degree in the preference digraph). Runs in
/// `O(|V|^{interested})` instead of `O(|V|^{|A|})`.
///
/// Indifferent agents have in-degree 0 here, so only their positions can be
/// envied, not their identities: after placing the interested agents it
/// suffices to count vertices no interested agent strictly prefers and check
/// that the indifferent agents fit on them.
pub fn solve_ef_fixed_interested(g: &Game, cfg: &SearchConfig) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    let dist = build_distance_matrix(&g.topology)?;
    let n = g.topology.vertex_count();

    let mut degree = vec![0usize; g.agent_count()];
    for (a, wants) in g.wants.iter().enumerate() {
        degree[a] += wants.len();
        for &b in wants.keys() {
            degree[b] += 1;
        }
    }
    let interested: Vec<AgentId> = (0..g.agent_count()).filter(|&a| degree[a] > 0).collect();
    let indifferent: Vec<AgentId> = (0..g.agent_count()).filter(|&a| degree[a] == 0).collect();

    match falling_factorial(n, interested.len()) {
        Some(total) if total <= cfg.budget => {}
        _ => return Ok(SolveOutcome::aborted(0)),
    }

    // Sub-game among the interested agents, with ids remapped densely.
    let mut remap = BTreeMap::new();
    for (i, &a) in interested.iter().enumerate() {
        remap.insert(a, i);
    }
    let sub_wants: Vec<BTreeMap<AgentId, u32>> = interested
        .iter()
        .map(|&a| g.wants[a].iter().map(|(&b, &d)| (remap[&b], d)).collect())
        .collect();
    let sub = Game { topology: g.topology.clone(), wants: sub_wants };

    let k = interested.len();
    let mut slots: Vec<VertexId> = vec![0; k];
    let mut used = vec![false; n];
    let mut nodes: u64 = 0;

    // Recursive enumeration is clearer here; depth <= |A| keeps it shallow.
    fn rec(
        sub: &Game,
        dist: &DistanceMatrix,
        slots: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
        depth: usize,
        nodes: &mut u64,
        spare_needed: usize,
    ) -> Option<Allocation> {
        let n = sub.topology.vertex_count();
        if depth == slots.len() {
            *nodes += 1;
            let alloc = Allocation::new(slots.clone(), n).expect("injective by construction");
            if !stability::is_envy_free(sub, dist, &alloc) {
                return None;
            }
            // Count vertices no interested agent strictly prefers over its
            // current slot.
            let mut spare = 0usize;
            for v in 0..n {
                if used[v] {
                    continue;
                }
                let envied = (0..sub.agent_count()).any(|a| {
                    cost_standing_at(sub, dist, &alloc, a, v) < crate::game::cost(sub, dist, &alloc, a)
                });
                if !envied {
                    spare += 1;
                    if spare >= spare_needed {
                        return Some(alloc);
                    }
                }
            }
            if spare >= spare_needed {
                return Some(alloc);
            }
            return None;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            slots[depth] = v;
            used[v] = true;
            if let Some(found) = rec(sub, dist, slots, used, depth + 1, nodes, spare_needed) {
                return Some(found);
            }
            used[v] = false;
        }
        None
    }

    let found = rec(&sub, &dist, &mut slots, &mut used, 0, &mut nodes, indifferent.len());
    match found {
        Some(sub_alloc) => {
            // Reassemble: interested agents keep their slots, indifferent
            // agents fill non-envied free vertices in ascending order.
            let mut full = vec![usize::MAX; g.agent_count()];
            let mut used = vec![false; n];
            for (i, &a) in interested.iter().enumerate() {
                full[a] = sub_alloc.vertex_of(i);
                used[sub_alloc.vertex_of(i)] = true;
            }
            let mut fills = Vec::with_capacity(indifferent.len());
            for v in 0..n {
                if fills.len() == indifferent.len() {
                    break;
                }
                if used[v] {
                    continue;
                }
                let envied = (0..sub.agent_count()).any(|i| {
                    cost_standing_at(&sub, &dist, &sub_alloc, i, v)
                        < crate::game::cost(&sub, &dist, &sub_alloc, i)
                });
                if !envied {
                    fills.push(v);
                }
            }
            debug_assert_eq!(fills.len(), indifferent.len());
            for (&a, &v) in indifferent.iter().zip(fills.iter()) {
                full[a] = v;
            }
            let alloc = Allocation::for_game(full, g)?;
            debug_assert!(stability::is_envy_free(g, &dist, &alloc));
            Ok(SolveOutcome::found(alloc, nodes))
        }
        None => Ok(SolveOutcome::none(nodes)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::shapes;
    use alloc::collections::BTreeMap;

    fn wants(pairs: &[(AgentId, u32)]) -> BTreeMap<AgentId, u32> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn falling_factorial_basics() {
        assert_eq!(falling_factorial(6, 3), Some(120));
        assert_eq!(falling_factorial(4, 0), Some(1));
        assert_eq!(falling_factorial(3, 4), Some(0));
        assert!(falling_factorial(100, 50).is_none());
    }

    /// Three agents chasing each other at distance 2 on a 4-ring admit no
    /// envy-free allocation, but do admit a swap-stable one.
    #[test]
    fn ring4_chase_has_no_ef_but_swap_stable_exists() {
        let g = Game {
            topology: shapes::cycle(4).unwrap(),
            wants: vec![wants(&[(1, 2)]), wants(&[(2, 2)]), wants(&[(0, 2)])],
        };
        let cfg = SearchConfig::default();
        let ef = brute_force_search(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(ef.status, SolveStatus::None);
        assert_eq!(ef.nodes_explored, 24);

        let swap = brute_force_search(&g, StabilityNotion::SwapStable, &cfg).unwrap();
        assert_eq!(swap.status, SolveStatus::Found);
        let dist = build_distance_matrix(&g.topology).unwrap();
        assert!(stability::is_swap_stable(&g, &dist, swap.witness.as_ref().unwrap()));
    }

    /// Two agents disagreeing about their mutual distance on a 4-path: all
    /// 12 placements admit an improving jump.
    #[test]
    fn path4_disagreement_has_no_jump_stable() {
        let g = Game {
            topology: shapes::path(4).unwrap(),
            wants: vec![wants(&[(1, 1)]), wants(&[(0, 2)])],
        };
        let out = brute_force_search(&g, StabilityNotion::JumpStable, &SearchConfig::default()).unwrap();
        assert_eq!(out.status, SolveStatus::None);
        assert_eq!(out.nodes_explored, 12);
    }

    /// Cyclically shifted ideals on a 3-path: all 6 placements admit a
    /// mutually improving swap.
    #[test]
    fn path3_shifted_ideals_have_no_swap_stable() {
        let g = Game {
            topology: shapes::path(3).unwrap(),
            wants: vec![
                wants(&[(1, 1), (2, 2)]),
                wants(&[(0, 2), (2, 1)]),
                wants(&[(0, 1), (1, 2)]),
            ],
        };
        let out = brute_force_search(&g, StabilityNotion::SwapStable, &SearchConfig::default()).unwrap();
        assert_eq!(out.status, SolveStatus::None);
        assert_eq!(out.nodes_explored, 6);
    }

    #[test]
    fn budget_aborts_upfront() {
        let g = Game {
            topology: shapes::clique(12).unwrap(),
            wants: vec![BTreeMap::new(); 10],
        };
        let out = brute_force_search(
            &g,
            StabilityNotion::EnvyFree,
            &SearchConfig { deterministic: true, budget: 1000 },
        )
        .unwrap();
        assert_eq!(out.status, SolveStatus::Aborted);
        assert_eq!(out.nodes_explored, 0);
    }

    #[test]
    fn indifferent_game_finds_lex_smallest() {
        let g = Game {
            topology: shapes::path(4).unwrap(),
            wants: vec![BTreeMap::new(); 2],
        };
        let out = brute_force_search(&g, StabilityNotion::EnvyFree, &SearchConfig::default()).unwrap();
        assert_eq!(out.witness.unwrap().slots(), &[0, 1]);
    }

    #[test]
    fn zero_agents_trivially_stable() {
        let g = Game { topology: shapes::path(3).unwrap(), wants: vec![] };
        let out =
            brute_force_search(&g, StabilityNotion::EnvyFreeJumpStable, &SearchConfig::default())
                .unwrap();
        assert_eq!(out.status, SolveStatus::Found);
        assert_eq!(out.witness.unwrap().slots(), &[] as &[VertexId]);
    }

    /// Padding equivalence against the direct combined-notion search.
    #[test]
    fn padding_agrees_with_direct_search() {
        let cfg = SearchConfig::default();
        // The 4-path disagreement instance has no jump-stable allocation at
        // all, hence no EF+jump one either.
        let g = Game {
            topology: shapes::path(4).unwrap(),
            wants: vec![wants(&[(1, 1)]), wants(&[(0, 2)])],
        };
        let padded = solve_ef_and_jump(&g, &cfg).unwrap();
        let direct = brute_force_search(&g, StabilityNotion::EnvyFreeJumpStable, &cfg).unwrap();
        assert_eq!(padded.status, SolveStatus::None);
        assert_eq!(direct.status, SolveStatus::None);

        // The 6-ring fixture admits one; both routes must agree and the
        // padded witness must pass both checks.
        let g = Game {
            topology: shapes::cycle(6).unwrap(),
            wants: vec![wants(&[(1, 1), (2, 1)]), wants(&[(0, 2)]), wants(&[])],
        };
        let padded = solve_ef_and_jump(&g, &cfg).unwrap();
        let direct = brute_force_search(&g, StabilityNotion::EnvyFreeJumpStable, &cfg).unwrap();
        assert_eq!(padded.status, SolveStatus::Found);
        assert_eq!(direct.status, SolveStatus::Found);
        let dist = build_distance_matrix(&g.topology).unwrap();
        let w = padded.witness.unwrap();
        assert!(stability::is_envy_free(&g, &dist, &w));
        assert!(stability::is_jump_stable(&g, &dist, &w));
    }

    #[test]
    fn fixed_interested_matches_brute_force() {
        let cfg = SearchConfig::default();
        // One interested pair among four agents on a 5-path.
        let g = Game {
            topology: shapes::path(5).unwrap(),
            wants: vec![wants(&[(1, 3)]), wants(&[]), wants(&[]), wants(&[])],
        };
        let fast = solve_ef_fixed_interested(&g, &cfg).unwrap();
        let brute = brute_force_search(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(fast.status, SolveStatus::Found);
        assert_eq!(brute.status, SolveStatus::Found);
        let dist = build_distance_matrix(&g.topology).unwrap();
        assert!(stability::is_envy_free(&g, &dist, fast.witness.as_ref().unwrap()));

        // All indifferent: immediately the lexicographically first placement.
        let g = Game { topology: shapes::path(4).unwrap(), wants: vec![BTreeMap::new(); 3] };
        let fast = solve_ef_fixed_interested(&g, &cfg).unwrap();
        assert_eq!(fast.witness.unwrap().slots(), &[0, 1, 2]);
    }
}

//! Deviation finders and stability reports for a fixed allocation.
//!
//! All finders enumerate lexicographically (agents by id, vertices by id),
//! so the first entry of a deviation list is the canonical witness.

use alloc::vec::Vec;

use crate::exact::StabilityNotion;
use crate::game::{
    cost, cost_after_swap, cost_standing_at, AgentId, Allocation, DistanceMatrix, Game, VertexId,
};

/// Envy pairs `(a, b)`: agent `a` would strictly lower its cost by taking
/// `b`'s vertex (with `b` moved to `a`'s vertex for the comparison).
#[must_use]
pub fn find_envy(g: &Game, dist: &DistanceMatrix, alloc: &Allocation) -> Vec<(AgentId, AgentId)> {
    let n = g.agent_count();
    let mut out = Vec::new();
    for a in 0..n {
        let base = cost(g, dist, alloc, a);
        if base == 0 {
            continue;
        }
        for b in 0..n {
            if b != a && cost_after_swap(g, dist, alloc, a, b) < base {
                out.push((a, b));
            }
        }
    }
    out
}

/// Unordered pairs `(a, b)` with `a < b` where the swap strictly improves
/// both sides.
#[must_use]
pub fn find_swap_deviations(
    g: &Game,
    dist: &DistanceMatrix,
    alloc: &Allocation,
) -> Vec<(AgentId, AgentId)> {
    let n = g.agent_count();
    let mut out = Vec::new();
    for a in 0..n {
        let cost_a = cost(g, dist, alloc, a);
        if cost_a == 0 {
            continue;
        }
        for b in (a + 1)..n {
            if cost_after_swap(g, dist, alloc, a, b) < cost_a
                && cost_after_swap(g, dist, alloc, b, a) < cost(g, dist, alloc, b)
            {
                out.push((a, b));
            }
        }
    }
    out
}

/// Pairs `(a, v)`: agent `a` would strictly lower its cost by jumping to the
/// unoccupied vertex `v`.
#[must_use]
pub fn find_jump_deviations(
    g: &Game,
    dist: &DistanceMatrix,
    alloc: &Allocation,
) -> Vec<(AgentId, VertexId)> {
    let occupied = alloc.occupied(g.topology.vertex_count());
    let mut out = Vec::new();
    for a in 0..g.agent_count() {
        let base = cost(g, dist, alloc, a);
        if base == 0 {
            continue;
        }
        for (v, &occ) in occupied.iter().enumerate() {
            if !occ && cost_standing_at(g, dist, alloc, a, v) < base {
                out.push((a, v));
            }
        }
    }
    out
}

#[must_use]
pub fn is_envy_free(g: &Game, dist: &DistanceMatrix, alloc: &Allocation) -> bool {
    let n = g.agent_count();
    (0..n).all(|a| {
        let base = cost(g, dist, alloc, a);
        base == 0 || (0..n).all(|b| b == a || cost_after_swap(g, dist, alloc, a, b) >= base)
    })
}

#[must_use]
pub fn is_swap_stable(g: &Game, dist: &DistanceMatrix, alloc: &Allocation) -> bool {
    let n = g.agent_count();
    (0..n).all(|a| {
        let cost_a = cost(g, dist, alloc, a);
        cost_a == 0
            || ((a + 1)..n).all(|b| {
                cost_after_swap(g, dist, alloc, a, b) >= cost_a
                    || cost_after_swap(g, dist, alloc, b, a) >= cost(g, dist, alloc, b)
            })
    })
}

#[must_use]
pub fn is_jump_stable(g: &Game, dist: &DistanceMatrix, alloc: &Allocation) -> bool {
    let occupied = alloc.occupied(g.topology.vertex_count());
    (0..g.agent_count()).all(|a| {
        let base = cost(g, dist, alloc, a);
        base == 0
            || occupied
                .iter()
                .enumerate()
                .all(|(v, &occ)| occ || cost_standing_at(g, dist, alloc, a, v) >= base)
    })
}

/// Short-circuit check of one notion.
#[must_use]
pub fn satisfies(
    g: &Game,
    dist: &DistanceMatrix,
    alloc: &Allocation,
    notion: StabilityNotion,
) -> bool {
    match notion {
        StabilityNotion::EnvyFree => is_envy_free(g, dist, alloc),
        StabilityNotion::SwapStable => is_swap_stable(g, dist, alloc),
        StabilityNotion::JumpStable => is_jump_stable(g, dist, alloc),
        StabilityNotion::EnvyFreeJumpStable => {
            is_envy_free(g, dist, alloc) && is_jump_stable(g, dist, alloc)
        }
    }
}

/// Full diagnostic for one allocation: per-agent costs and every deviation
/// of each kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub costs: Vec<u64>,
    pub envy_pairs: Vec<(AgentId, AgentId)>,
    pub swap_deviations: Vec<(AgentId, AgentId)>,
    pub jump_deviations: Vec<(AgentId, VertexId)>,
    pub is_envy_free: bool,
    pub is_swap_stable: bool,
    pub is_jump_stable: bool,
}

#[must_use]
pub fn stability_report(g: &Game, dist: &DistanceMatrix, alloc: &Allocation) -> StabilityReport {
    let costs = (0..g.agent_count()).map(|a| cost(g, dist, alloc, a)).collect();
    let envy_pairs = find_envy(g, dist, alloc);
    let swap_deviations = find_swap_deviations(g, dist, alloc);
    let jump_deviations = find_jump_deviations(g, dist, alloc);
    StabilityReport {
        is_envy_free: envy_pairs.is_empty(),
        is_swap_stable: swap_deviations.is_empty(),
        is_jump_stable: jump_deviations.is_empty(),
        costs,
        envy_pairs,
        swap_deviations,
        jump_deviations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{shapes, Allocation, Game};
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn wants(pairs: &[(AgentId, u32)]) -> BTreeMap<AgentId, u32> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn indifferent_agents_never_deviate() {
        let g = Game {
            topology: shapes::path(3).unwrap(),
            wants: vec![wants(&[]), wants(&[])],
        };
        let d = crate::game::build_distance_matrix(&g.topology).unwrap();
        let alloc = Allocation::for_game(vec![0, 2], &g).unwrap();
        let report = stability_report(&g, &d, &alloc);
        assert!(report.is_envy_free && report.is_swap_stable && report.is_jump_stable);
        assert_eq!(report.costs, vec![0, 0]);
    }

    /// Ring fixture: the only improving deviation is a's jump to v5.
    #[test]
    fn ring_example_report() {
        let g = Game {
            topology: shapes::cycle(6).unwrap(),
            wants: vec![wants(&[(1, 1), (2, 1)]), wants(&[(0, 2)]), wants(&[])],
        };
        let d = crate::game::build_distance_matrix(&g.topology).unwrap();
        let alloc = Allocation::for_game(vec![2, 4, 0], &g).unwrap();
        let report = stability_report(&g, &d, &alloc);
        assert!(report.is_envy_free);
        assert!(report.is_swap_stable);
        assert!(!report.is_jump_stable);
        assert_eq!(report.jump_deviations, vec![(0, 5)]);
        assert_eq!(report.costs, vec![2, 0, 0]);
    }

    /// Three agents on a 4-ring chasing each other at ideal distance 2:
    /// swap stable yet not envy-free.
    #[test]
    fn swap_stable_but_envious() {
        let g = Game {
            topology: shapes::cycle(4).unwrap(),
            wants: vec![wants(&[(1, 2)]), wants(&[(2, 2)]), wants(&[(0, 2)])],
        };
        let d = crate::game::build_distance_matrix(&g.topology).unwrap();
        // a1 at v0, a3 at v1, a2 at v2.
        let alloc = Allocation::for_game(vec![0, 2, 1], &g).unwrap();
        let report = stability_report(&g, &d, &alloc);
        assert_eq!(report.costs, vec![0, 1, 1]);
        assert!(report.is_swap_stable);
        assert!(!report.is_envy_free);
        assert!(report.envy_pairs.contains(&(2, 1)));
    }

    /// Cyclically shifted ideals on a path: the outer pair both gain by
    /// swapping.
    #[test]
    fn mutual_improvement_is_found() {
        let g = Game {
            topology: shapes::path(3).unwrap(),
            wants: vec![
                wants(&[(1, 1), (2, 2)]),
                wants(&[(0, 2), (2, 1)]),
                wants(&[(0, 1), (1, 2)]),
            ],
        };
        let d = crate::game::build_distance_matrix(&g.topology).unwrap();
        let alloc = Allocation::for_game(vec![0, 1, 2], &g).unwrap();
        let report = stability_report(&g, &d, &alloc);
        assert_eq!(report.swap_deviations, vec![(1, 2)]);
        assert!(!report.is_swap_stable);
    }
}

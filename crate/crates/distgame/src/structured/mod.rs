//! Polynomial solvers for restricted topologies and preference shapes, and
//! the dispatcher that routes a game to the cheapest applicable solver.
//!
//! Every solver validates its structural precondition and fails with
//! [`GameError::ShapeMismatch`] instead of answering outside its class.

pub mod acyclic;
pub mod dynamics;
pub mod in_star;

pub use acyclic::solve_jump_swap_acyclic;
pub use dynamics::{
    dynamics_symmetric, dynamics_symmetric_from, potential, DynamicsStep, DynamicsTrace, Move,
    MoveKind,
};
pub use in_star::{bfs_layers, solve_ef_in_star, BfsLayers};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::GameError;
use crate::exact::{
    brute_force_search, falling_factorial, first_lex_allocation, pad_indifferent,
    restrict_outcome, SearchConfig, SolveOutcome, StabilityNotion,
};
use crate::game::{
    build_distance_matrix, classify_preferences, cost, cost_after_swap, validate_game, Allocation,
    Game, VertexId,
};
use crate::parameterized;
use crate::stability;

/// Envy-free solver for clique and star topologies.
///
/// On a clique every placement is envy-free (all occupied distances are 1),
/// so the lexicographically first placement is returned. On a star the cost
/// profile depends only on who occupies the center; the candidates are
/// "center empty" followed by each agent on the center in id order, with the
/// remaining agents filling leaves in ascending order.
pub fn solve_ef_clique_or_star(g: &Game) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    let dist = build_distance_matrix(&g.topology)?;
    let n = g.topology.vertex_count();
    let agents = g.agent_count();

    if g.topology.is_clique() {
        let alloc = first_lex_allocation(g);
        debug_assert!(stability::is_envy_free(g, &dist, &alloc));
        return Ok(SolveOutcome::found(alloc, 1));
    }

    let Some(center) = g.topology.star_center() else {
        return Err(GameError::ShapeMismatch {
            solver: "clique-star",
            requirement: "a clique or star topology",
        });
    };

    let leaves: Vec<VertexId> = (0..n).filter(|&v| v != center).collect();
    let mut checked: u64 = 0;
    // Candidate center occupants: none (when a spare vertex exists), then
    // each agent by id.
    let mut candidates: Vec<Option<usize>> = Vec::with_capacity(agents + 1);
    if agents < n {
        candidates.push(None);
    }
    candidates.extend((0..agents).map(Some));

    for occupant in candidates {
        let mut slots = alloc::vec![usize::MAX; agents];
        let mut next_leaf = leaves.iter().copied();
        for a in 0..agents {
            slots[a] = if Some(a) == occupant {
                center
            } else {
                next_leaf.next().expect("enough leaves for the remaining agents")
            };
        }
        let alloc = Allocation::for_game(slots, g)?;
        checked += 1;
        if stability::is_envy_free(g, &dist, &alloc) {
            return Ok(SolveOutcome::found(alloc, checked));
        }
    }
    Ok(SolveOutcome::none(checked))
}

/// Envy-free solver for out-star preferences (at most one agent has any
/// wants). Starts from the lexicographically first placement and repeatedly
/// applies the interested agent's best improving swap (largest improvement,
/// smallest partner id on ties) until none remains. Every swap strictly
/// lowers the hub's cost, so the loop terminates after at most
/// `diameter * |A|` iterations; everyone else is indifferent, hence the
/// result is envy-free.
pub fn solve_ef_out_star(g: &Game) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    let shape = classify_preferences(g);
    if !shape.out_star {
        return Err(GameError::ShapeMismatch {
            solver: "out-star",
            requirement: "at most one agent with a non-empty wants map",
        });
    }
    let dist = build_distance_matrix(&g.topology)?;
    let mut alloc = first_lex_allocation(g);
    let Some(hub) = shape.out_star_hub else {
        return Ok(SolveOutcome::found(alloc, 0));
    };

    let mut iterations: u64 = 0;
    loop {
        let base = cost(g, &dist, &alloc, hub);
        if base == 0 {
            break;
        }
        let mut best: Option<(u64, usize)> = None;
        for b in 0..g.agent_count() {
            if b == hub {
                continue;
            }
            let new = cost_after_swap(g, &dist, &alloc, hub, b);
            if new < base {
                let improvement = base - new;
                if best.map_or(true, |(bi, _)| improvement > bi) {
                    best = Some((improvement, b));
                }
            }
        }
        let Some((_, partner)) = best else { break };
        alloc = alloc.swapped(hub, partner);
        iterations += 1;
    }
    debug_assert!(stability::is_envy_free(g, &dist, &alloc));
    Ok(SolveOutcome::found(alloc, iterations))
}

/// Routes a game to the cheapest applicable solver for `notion` and returns
/// the outcome together with the chosen solver's name.
///
/// Envy-freeness is routed in this order: trivial (at most one agent),
/// clique/star topology, in-star preferences, out-star preferences,
/// neighborhood-diversity enumeration (when `classes^|A|` fits the budget),
/// vertex-cover kernelization (when the kernel bound fits the budget), the
/// equidistant-set route (when the guarantee threshold `d^(d|A|) <= |V|`
/// holds), the fixed-interested-agents search (when some agents are
/// indifferent and its enumeration fits the budget), and finally budgeted
/// brute force. Swap and jump stability go to the potential-descent dynamics
/// on symmetric preferences, the greedy placement on acyclic preferences,
/// and brute force otherwise. The combined notion pads the game with
/// indifferent agents and dispatches the padded game for envy-freeness.
pub fn dispatch_solve(
    g: &Game,
    notion: StabilityNotion,
    cfg: &SearchConfig,
) -> Result<(SolveOutcome, String), GameError> {
    validate_game(g)?;
    match notion {
        StabilityNotion::EnvyFree => dispatch_ef(g, cfg),
        StabilityNotion::SwapStable => dispatch_dynamic(g, cfg, MoveKind::Swap, notion),
        StabilityNotion::JumpStable => dispatch_dynamic(g, cfg, MoveKind::Jump, notion),
        StabilityNotion::EnvyFreeJumpStable => {
            let padded = pad_indifferent(g);
            let (outcome, inner) = dispatch_ef(&padded, cfg)?;
            Ok((restrict_outcome(outcome, g), format!("pad+{inner}")))
        }
    }
}

fn dispatch_ef(g: &Game, cfg: &SearchConfig) -> Result<(SolveOutcome, String), GameError> {
    let shape = classify_preferences(g);
    let n = g.topology.vertex_count();
    let agents = g.agent_count();

    if agents <= 1 {
        return Ok((SolveOutcome::found(first_lex_allocation(g), 0), String::from("trivial")));
    }
    if g.topology.is_clique() || g.topology.star_center().is_some() {
        return Ok((solve_ef_clique_or_star(g)?, String::from("clique-star")));
    }
    if shape.in_star {
        return Ok((solve_ef_in_star(g, cfg)?, String::from("in-star")));
    }
    if shape.out_star {
        return Ok((solve_ef_out_star(g)?, String::from("out-star")));
    }

    let partition = parameterized::neighborhood_partition(&g.topology);
    let class_count = partition.classes.len() as u64;
    if class_count
        .checked_pow(agents.min(u32::MAX as usize) as u32)
        .is_some_and(|mappings| mappings <= cfg.budget)
    {
        return Ok((parameterized::solve_ef_nd(g, cfg)?, String::from("nd")));
    }

    // Probe for a small vertex cover; the kernel keeps at most
    // |C| + 2^|C| * |A| vertices.
    const COVER_PROBE_CAP: usize = 18;
    if let Some(cover) = parameterized::vertex_cover_upto(&g.topology, COVER_PROBE_CAP) {
        let kernel_bound = (cover.len() as u64)
            .checked_add(
                1u64.checked_shl(cover.len() as u32)
                    .and_then(|t| t.checked_mul(agents.max(1) as u64))
                    .unwrap_or(u64::MAX),
            )
            .unwrap_or(u64::MAX);
        let within = kernel_bound < n as u64
            && falling_factorial(kernel_bound.min(n as u64) as usize, agents)
                .is_some_and(|total| total <= cfg.budget);
        if within {
            return Ok((parameterized::solve_ef_vc(g, cfg)?, String::from("vc")));
        }
    }

    let dist = build_distance_matrix(&g.topology)?;
    let d = dist.diameter() as u64;
    let exponent = (d as u128).saturating_mul(agents as u128);
    let threshold_met = if exponent > 64 {
        false // d^(d|A|) would exceed u64, far beyond any real vertex count
    } else {
        d.checked_pow(exponent as u32).is_some_and(|thr| n as u64 >= thr)
    };
    if threshold_met {
        return Ok((parameterized::solve_ef_diameter(g, cfg)?, String::from("diameter")));
    }

    let interested = (0..agents).filter(|&a| {
        !g.wants[a].is_empty() || g.wants.iter().any(|w| w.contains_key(&a))
    });
    let interested_count = interested.count();
    if interested_count < agents
        && falling_factorial(n, interested_count).is_some_and(|total| total <= cfg.budget)
    {
        return Ok((
            crate::exact::solve_ef_fixed_interested(g, cfg)?,
            String::from("fixed-interested"),
        ));
    }

    Ok((brute_force_search(g, StabilityNotion::EnvyFree, cfg)?, String::from("brute")))
}

fn dispatch_dynamic(
    g: &Game,
    cfg: &SearchConfig,
    mode: MoveKind,
    notion: StabilityNotion,
) -> Result<(SolveOutcome, String), GameError> {
    let shape = classify_preferences(g);
    if shape.symmetric {
        let trace = dynamics_symmetric(g, mode)?;
        let moves = trace.steps.len() as u64;
        return Ok((
            SolveOutcome::found(trace.final_allocation, moves),
            String::from("symmetric-dynamics"),
        ));
    }
    if shape.acyclic {
        return Ok((solve_jump_swap_acyclic(g)?, String::from("acyclic-greedy")));
    }
    Ok((brute_force_search(g, notion, cfg)?, String::from("brute")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::SolveStatus;
    use crate::game::{shapes, AgentId};
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn wants(pairs: &[(AgentId, u32)]) -> BTreeMap<AgentId, u32> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn clique_always_envy_free() {
        let g = Game {
            topology: shapes::clique(5).unwrap(),
            wants: vec![wants(&[(1, 1), (2, 1)]), wants(&[(0, 1)]), wants(&[(0, 1), (1, 1)])],
        };
        let out = solve_ef_clique_or_star(&g).unwrap();
        assert_eq!(out.status, SolveStatus::Found);
        assert_eq!(out.witness.unwrap().slots(), &[0, 1, 2]);
    }

    #[test]
    fn star_tries_center_occupants() {
        // Two agents wanting each other at distance 2 go on leaves.
        let g = Game {
            topology: shapes::star(4).unwrap(),
            wants: vec![wants(&[(1, 2)]), wants(&[(0, 2)])],
        };
        let out = solve_ef_clique_or_star(&g).unwrap();
        let w = out.witness.unwrap();
        let d = build_distance_matrix(&g.topology).unwrap();
        assert_eq!(d.get(w.vertex_of(0), w.vertex_of(1)), 2);

        // Forced center: all vertices occupied.
        let g = Game {
            topology: shapes::star(3).unwrap(),
            wants: vec![wants(&[(1, 1), (2, 1)]), wants(&[(0, 1)]), wants(&[(0, 1)])],
        };
        let out = solve_ef_clique_or_star(&g).unwrap();
        let w = out.witness.unwrap();
        // Agent 0 wants both others adjacent, so it must hold the center.
        assert_eq!(w.vertex_of(0), 0);
    }

    #[test]
    fn clique_star_rejects_other_topologies() {
        let g = Game { topology: shapes::path(4).unwrap(), wants: vec![wants(&[]); 2] };
        assert!(matches!(
            solve_ef_clique_or_star(&g),
            Err(GameError::ShapeMismatch { solver: "clique-star", .. })
        ));
    }

    #[test]
    fn out_star_reaches_zero_cost_on_path() {
        // Hub wants three partners at distances 1, 2, 3 on a 6-path.
        let g = Game {
            topology: shapes::path(6).unwrap(),
            wants: vec![wants(&[(1, 1), (2, 2), (3, 3)]), wants(&[]), wants(&[]), wants(&[])],
        };
        let out = solve_ef_out_star(&g).unwrap();
        assert_eq!(out.status, SolveStatus::Found);
        let d = build_distance_matrix(&g.topology).unwrap();
        let w = out.witness.unwrap();
        assert_eq!(cost(&g, &d, &w, 0), 0);
        // Iteration bound: diameter times agent count.
        assert!(out.nodes_explored <= 5 * 4);
    }

    #[test]
    fn out_star_rejects_two_interested_agents() {
        let g = Game {
            topology: shapes::path(4).unwrap(),
            wants: vec![wants(&[(1, 1)]), wants(&[(0, 2)])],
        };
        assert!(matches!(
            solve_ef_out_star(&g),
            Err(GameError::ShapeMismatch { solver: "out-star", .. })
        ));
    }

    #[test]
    fn dispatch_picks_expected_solvers() {
        let cfg = SearchConfig::default();

        let g = Game { topology: shapes::clique(3).unwrap(), wants: vec![wants(&[(1, 1)]), wants(&[(0, 1)])] };
        let (_, name) = dispatch_solve(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(name, "clique-star");

        let g = Game {
            topology: shapes::cycle(6).unwrap(),
            wants: vec![wants(&[(2, 1)]), wants(&[(2, 2)]), wants(&[])],
        };
        let (_, name) = dispatch_solve(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(name, "in-star");

        let g = Game {
            topology: shapes::cycle(6).unwrap(),
            wants: vec![wants(&[(1, 1), (2, 2)]), wants(&[]), wants(&[])],
        };
        let (_, name) = dispatch_solve(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(name, "out-star");

        // Symmetric pair: swap and jump go to the dynamics.
        let g = Game {
            topology: shapes::cycle(6).unwrap(),
            wants: vec![wants(&[(1, 2)]), wants(&[(0, 2)])],
        };
        let (out, name) = dispatch_solve(&g, StabilityNotion::SwapStable, &cfg).unwrap();
        assert_eq!(name, "symmetric-dynamics");
        assert_eq!(out.status, SolveStatus::Found);

        // Acyclic non-symmetric goes to the greedy.
        let g = Game {
            topology: shapes::cycle(6).unwrap(),
            wants: vec![wants(&[(1, 1)]), wants(&[(2, 2)]), wants(&[])],
        };
        let (_, name) = dispatch_solve(&g, StabilityNotion::JumpStable, &cfg).unwrap();
        assert_eq!(name, "acyclic-greedy");

        // Cyclic asymmetric prefs on a ring fall back to brute force.
        let g = Game {
            topology: shapes::cycle(4).unwrap(),
            wants: vec![wants(&[(1, 2)]), wants(&[(2, 2)]), wants(&[(0, 2)])],
        };
        let (_, name) = dispatch_solve(&g, StabilityNotion::SwapStable, &cfg).unwrap();
        assert_eq!(name, "brute");

        let (_, name) = dispatch_solve(&g, StabilityNotion::EnvyFreeJumpStable, &cfg).unwrap();
        assert!(name.starts_with("pad+"));
    }
}

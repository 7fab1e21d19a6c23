//! Greedy placement for acyclic preferences.
//!
//! When the preference digraph has no directed cycle, agents can be placed
//! one at a time so that everyone an agent cares about already stands on its
//! final vertex. Each agent then picks an empty vertex minimizing its cost.
//! The result is simultaneously jump stable and swap stable:
//!
//! * jumps: an agent's cost depends only on agents placed before it, whose
//!   positions never change afterwards; the empty vertices left at the end
//!   are a subset of the options it already minimized over;
//! * swaps: if `b` was placed after `a`, then `b`'s vertex was empty when
//!   `a` chose, and `b` is not in `a`'s wants (those were all placed before
//!   `a`), so `a` standing on `b`'s vertex scores no better than `a`'s own
//!   choice; the swap is never strictly improving for `a`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GameError;
use crate::exact::SolveOutcome;
use crate::game::{
    build_distance_matrix, classify_preferences, validate_game, AgentId, Allocation, Game,
    VertexId,
};
use crate::stability;

/// Places agents in ready order (smallest id whose wants are all placed)
/// onto the empty vertex of least cost (smallest id on ties). Returns an
/// allocation that is jump stable and swap stable. `nodes_explored` counts
/// evaluated (agent, vertex) candidates.
pub fn solve_jump_swap_acyclic(g: &Game) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    if !classify_preferences(g).acyclic {
        return Err(GameError::ShapeMismatch {
            solver: "acyclic-greedy",
            requirement: "an acyclic preference digraph",
        });
    }
    let dist = build_distance_matrix(&g.topology)?;
    let n = g.topology.vertex_count();
    let agents = g.agent_count();

    let mut position: Vec<Option<VertexId>> = vec![None; agents];
    let mut used = vec![false; n];
    let mut evaluated: u64 = 0;

    for _ in 0..agents {
        let a: AgentId = (0..agents)
            .find(|&a| {
                position[a].is_none() && g.wants[a].keys().all(|&b| position[b].is_some())
            })
            .expect("an acyclic digraph always has a placeable agent");

        let mut best: Option<(u64, VertexId)> = None;
        for v in 0..n {
            if used[v] {
                continue;
            }
            evaluated += 1;
            let c: u64 = g.wants[a]
                .iter()
                .map(|(&b, &d)| {
                    let pos = position[b].expect("wants placed before their wanter");
                    u64::from(d.abs_diff(dist.get(v, pos)))
                })
                .sum();
            if best.map_or(true, |(bc, _)| c < bc) {
                best = Some((c, v));
            }
        }
        let (_, v) = best.expect("|A| <= |V| leaves an empty vertex");
        position[a] = Some(v);
        used[v] = true;
    }

    let slots: Vec<VertexId> = position.into_iter().map(Option::unwrap).collect();
    let alloc = Allocation::for_game(slots, g)?;
    debug_assert!(stability::is_jump_stable(g, &dist, &alloc));
    debug_assert!(stability::is_swap_stable(g, &dist, &alloc));
    Ok(SolveOutcome::found(alloc, evaluated))
}

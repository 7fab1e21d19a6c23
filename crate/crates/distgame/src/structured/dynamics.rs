//! Best-response dynamics for symmetric preferences.
//!
//! With symmetric preferences every improving jump or swap strictly lowers
//! the potential
//!
//! ```text
//! P(pi) = sum over a, (b, d) in wants[a] of |min(d, |V|) - dist(pi(a), pi(b))|
//! ```
//!
//! Capping ideals at `|V|` bounds `P` by `|A|^2 * |V|` without changing any
//! improvement comparison: a capped ideal still exceeds every realizable
//! distance, so both the capped and the real term vary with slope -1 in the
//! distance. Each pair term appears twice (once per endpoint), hence a jump
//! improving the mover by `delta` lowers `P` by exactly `2 * delta`, and a
//! swap improving the movers by `delta_a`, `delta_b` lowers it by
//! `2 * (delta_a + delta_b)`. Convergence therefore takes at most
//! `|A|^2 * |V| / 2` moves.

use alloc::vec::Vec;

use crate::error::GameError;
use crate::exact::first_lex_allocation;
use crate::game::{
    build_distance_matrix, classify_preferences, cost, cost_after_swap, cost_standing_at,
    validate_game, AgentId, Allocation, DistanceMatrix, Game, VertexId,
};
use crate::stability;

/// Which deviations the dynamics may apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveKind {
    Jump,
    Swap,
    Both,
}

impl MoveKind {
    /// Whether the mode allows moves onto empty vertices.
    #[must_use]
    pub fn jumps(self) -> bool {
        matches!(self, MoveKind::Jump | MoveKind::Both)
    }

    /// Whether the mode allows position exchanges.
    #[must_use]
    pub fn swaps(self) -> bool {
        matches!(self, MoveKind::Swap | MoveKind::Both)
    }
}

/// One applied improving move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    Jump { to: VertexId },
    Swap { with: AgentId },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsStep {
    pub agent: AgentId,
    pub mv: Move,
    pub cost_before: u64,
    pub cost_after: u64,
    /// Swap partner's costs; `None` for jumps.
    pub partner_cost_before: Option<u64>,
    pub partner_cost_after: Option<u64>,
    pub potential_before: u64,
    pub potential_after: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsTrace {
    pub steps: Vec<DynamicsStep>,
    pub final_allocation: Allocation,
}

/// The capped potential; see the module docs.
#[must_use]
pub fn potential(g: &Game, dist: &DistanceMatrix, alloc: &Allocation) -> u64 {
    let cap = g.topology.vertex_count() as u32;
    g.wants
        .iter()
        .enumerate()
        .flat_map(|(a, wants)| {
            wants.iter().map(move |(&b, &d)| (a, b, d.min(cap)))
        })
        .map(|(a, b, d)| u64::from(d.abs_diff(dist.get(alloc.vertex_of(a), alloc.vertex_of(b)))))
        .sum()
}

/// Runs the dynamics from the lexicographically first placement.
pub fn dynamics_symmetric(g: &Game, mode: MoveKind) -> Result<DynamicsTrace, GameError> {
    let start = first_lex_allocation(g);
    dynamics_symmetric_from(g, start, mode)
}

/// Runs the dynamics from `start` until no agent has an improving move of
/// the permitted kind.
///
/// Schedule: agents are visited round-robin by id; a visited agent applies
/// its single best move (largest own improvement; ties broken by the
/// smallest target vertex id, where a swap's target is the partner's current
/// vertex). The run ends after a full visiting round without any move.
pub fn dynamics_symmetric_from(
    g: &Game,
    start: Allocation,
    mode: MoveKind,
) -> Result<DynamicsTrace, GameError> {
    validate_game(g)?;
    if !classify_preferences(g).symmetric {
        return Err(GameError::ShapeMismatch {
            solver: "symmetric-dynamics",
            requirement: "mutual wants with equal ideal distances",
        });
    }
    let dist = build_distance_matrix(&g.topology)?;
    let n_agents = g.agent_count();
    let n = g.topology.vertex_count();
    let mut alloc = start;
    let mut steps = Vec::new();

    // Convergence guarantee: the potential starts at most |A|^2 * |V| and
    // every move lowers it by at least 2. The hard cap below only guards
    // against implementation bugs.
    let cap = (n_agents as u64) * (n_agents as u64) * (n as u64) + 16;

    if n_agents > 0 {
        let mut idle_visits = 0usize;
        let mut a: AgentId = 0;
        while idle_visits < n_agents {
            let best = best_move(g, &dist, &alloc, a, mode);
            match best {
                Some((_, mv)) => {
                    let potential_before = potential(g, &dist, &alloc);
                    let cost_before = cost(g, &dist, &alloc, a);
                    let (next, partner_before) = match mv {
                        Move::Jump { to } => (alloc.jumped(a, to), None),
                        Move::Swap { with } => {
                            (alloc.swapped(a, with), Some(cost(g, &dist, &alloc, with)))
                        }
                    };
                    let partner_after = match mv {
                        Move::Jump { .. } => None,
                        Move::Swap { with } => Some(cost(g, &dist, &next, with)),
                    };
                    steps.push(DynamicsStep {
                        agent: a,
                        mv,
                        cost_before,
                        cost_after: cost(g, &dist, &next, a),
                        partner_cost_before: partner_before,
                        partner_cost_after: partner_after,
                        potential_before,
                        potential_after: potential(g, &dist, &next),
                    });
                    alloc = next;
                    idle_visits = 0;
                    debug_assert!((steps.len() as u64) <= cap, "dynamics exceeded potential bound");
                    if steps.len() as u64 > cap {
                        break;
                    }
                }
                None => idle_visits += 1,
            }
            a = (a + 1) % n_agents;
        }
    }

    debug_assert!(!mode.jumps() || stability::is_jump_stable(g, &dist, &alloc));
    debug_assert!(!mode.swaps() || stability::is_swap_stable(g, &dist, &alloc));
    Ok(DynamicsTrace { steps, final_allocation: alloc })
}

/// Best improving move for `a`: largest improvement, smallest target vertex
/// on ties. Jump and swap targets never collide (empty vs occupied vertex).
fn best_move(
    g: &Game,
    dist: &DistanceMatrix,
    alloc: &Allocation,
    a: AgentId,
    mode: MoveKind,
) -> Option<(u64, Move)> {
    let base = cost(g, dist, alloc, a);
    if base == 0 {
        return None;
    }
    let mut best: Option<(u64, VertexId, Move)> = None;
    let mut consider = |improvement: u64, target: VertexId, mv: Move| {
        if best.map_or(true, |(bi, bt, _)| improvement > bi || (improvement == bi && target < bt)) {
            best = Some((improvement, target, mv));
        }
    };
    if mode.jumps() {
        let occupied = alloc.occupied(g.topology.vertex_count());
        for (v, &occ) in occupied.iter().enumerate() {
            if occ {
                continue;
            }
            let new = cost_standing_at(g, dist, alloc, a, v);
            if new < base {
                consider(base - new, v, Move::Jump { to: v });
            }
        }
    }
    if mode.swaps() {
        for b in 0..g.agent_count() {
            if b == a {
                continue;
            }
            let mine = cost_after_swap(g, dist, alloc, a, b);
            if mine >= base {
                continue;
            }
            if cost_after_swap(g, dist, alloc, b, a) < cost(g, dist, alloc, b) {
                consider(base - mine, alloc.vertex_of(b), Move::Swap { with: b });
            }
        }
    }
    best.map(|(imp, _, mv)| (imp, mv))
}

//! Envy-free solver for in-star preferences.
//!
//! In an in-star game every non-empty wants map is `{hub}`, so once the hub
//! agent is pinned to a center vertex `v`, an agent's cost depends only on
//! its BFS layer around `v`: an agent with ideal distance `j` standing on
//! layer `i` costs `|j - i|`, and it envies exactly the occupants of layers
//! strictly closer to `j` (swapping with the hub itself preserves its
//! distance to the hub and never helps). Ideals above the eccentricity are
//! clamped to the top layer, which preserves the envy comparisons.
//!
//! An allocation with the hub at `v` is therefore envy-free iff
//!
//! * agents with the same (clamped) ideal `j` occupy at most two layers
//!   `j - delta` and `j + delta` for some `delta >= 0`, and
//! * no vertex of a layer strictly inside `(j - delta, j + delta)` is
//!   occupied, and
//! * indifferent agents (who envy nobody) avoid those open strips too.
//!
//! The solver sweeps candidate centers in ascending vertex order; per center
//! it processes the distinct ideals in increasing order with a reachability
//! search over states `(parts placed, frontier layer, free vertices on the
//! frontier, indifferent agents placed)`. The frontier is the topmost
//! occupied layer; processed parts never land below it, and the only
//! above-frontier layers blocked by earlier parts form the interval
//! `(frontier, max(frontier + 1, 2 * last_ideal - frontier))`, which is
//! derivable from the state. Indifferent agents are distributed greedily
//! into whatever capacity each step opens; a final check places the
//! leftovers on the frontier's free vertices and the layers above the last
//! blocked interval.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GameError;
use crate::exact::{first_lex_allocation, SearchConfig, SolveOutcome};
use crate::game::{
    classify_preferences, validate_game, AgentId, Allocation, Game, VertexId,
};
use crate::stability;

/// BFS layer structure around a candidate center, with the agent partition
/// by clamped ideal distance. `layers[0]` is the center itself;
/// `agent_parts[0]` holds the indifferent agents (hub excluded),
/// `agent_parts[j]` the agents whose ideal distance to the hub clamps to
/// `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayers {
    pub center: VertexId,
    pub layers: Vec<Vec<VertexId>>,
    pub agent_parts: Vec<Vec<AgentId>>,
}

/// Computes [`BfsLayers`] for an in-star game. Errors on other preference
/// shapes (the partition is defined by the hub) and on disconnected
/// topologies.
pub fn bfs_layers(g: &Game, center: VertexId) -> Result<BfsLayers, GameError> {
    validate_game(g)?;
    let shape = classify_preferences(g);
    if !shape.in_star {
        return Err(GameError::ShapeMismatch {
            solver: "in-star",
            requirement: "every non-empty wants map equal to {hub}",
        });
    }
    Ok(layers_for_center(g, center, shape.in_star_hub))
}

fn layers_for_center(g: &Game, center: VertexId, hub: Option<AgentId>) -> BfsLayers {
    let dist = g.topology.bfs_distances(center);
    let ell = dist
        .iter()
        .map(|d| d.expect("validated topology is connected"))
        .max()
        .unwrap_or(0) as usize;
    let mut layers = vec![Vec::new(); ell + 1];
    for (v, d) in dist.iter().enumerate() {
        layers[d.unwrap() as usize].push(v);
    }
    let mut agent_parts = vec![Vec::new(); ell + 1];
    for a in 0..g.agent_count() {
        if Some(a) == hub {
            continue;
        }
        match hub.and_then(|h| g.wants[a].get(&h)) {
            Some(&d) => agent_parts[(d as usize).min(ell)].push(a),
            None => agent_parts[0].push(a),
        }
    }
    BfsLayers { center, layers, agent_parts }
}

/// One reconstruction step of the per-center search. Fill counts refer to
/// indifferent agents; part agents are placed ascending by id, the first
/// `x_lo` of a split going to the lower layer.
#[derive(Debug, Clone, Copy)]
enum Step {
    /// First part entirely on the frontier layer `i` (at or below its
    /// ideal), `s_below` fills spread greedily over layers `1..i`.
    BaseLow { s_at_i: usize, s_below: usize },
    /// First part split between layers `z` and `i` (`x_lo` may be zero);
    /// fills at `z`, below `z`, and on `i`.
    BaseSplit { z: usize, x_lo: usize, s_at_z: usize, s_below: usize, s_at_i: usize },
    /// Part joins the current frontier; no fills.
    Join,
    /// Part advances to a new frontier at or below its ideal; fills go to
    /// the old frontier's free vertices, the window between the previous
    /// blocked interval and the new frontier, and the new frontier.
    AdvLow { s_old: usize, s_window: usize, s_at_i: usize },
    /// Part advances above its ideal, optionally splitting `x_lo` agents to
    /// the mirror layer `z`.
    AdvSplit { z: usize, x_lo: usize, s_old: usize, s_window: usize, s_at_z: usize, s_at_i: usize },
}

#[derive(Debug, Clone, Copy)]
struct Rec {
    prev: Option<(usize, usize, usize)>,
    step: Step,
}

/// Decides envy-freeness for in-star preferences and returns the witness
/// with the smallest center vertex (trying centers in ascending order).
/// `nodes_explored` counts marked search states across all centers.
pub fn solve_ef_in_star(g: &Game, cfg: &SearchConfig) -> Result<SolveOutcome, GameError> {
    validate_game(g)?;
    let shape = classify_preferences(g);
    if !shape.in_star {
        return Err(GameError::ShapeMismatch {
            solver: "in-star",
            requirement: "every non-empty wants map equal to {hub}",
        });
    }
    let Some(hub) = shape.in_star_hub else {
        // Fully indifferent: every placement is envy-free.
        return Ok(SolveOutcome::found(first_lex_allocation(g), 0));
    };

    let n = g.topology.vertex_count();
    let mut nodes: u64 = 0;
    for center in 0..n {
        let layers = layers_for_center(g, center, Some(hub));
        match search_center(g, hub, &layers, cfg, &mut nodes)? {
            CenterResult::Found(alloc) => {
                debug_assert!({
                    let dist = crate::game::build_distance_matrix(&g.topology)?;
                    stability::is_envy_free(g, &dist, &alloc)
                });
                return Ok(SolveOutcome::found(alloc, nodes));
            }
            CenterResult::Exhausted => {}
            CenterResult::OverBudget => return Ok(SolveOutcome::aborted(nodes)),
        }
    }
    Ok(SolveOutcome::none(nodes))
}

enum CenterResult {
    Found(Allocation),
    Exhausted,
    OverBudget,
}

fn search_center(
    g: &Game,
    hub: AgentId,
    layers: &BfsLayers,
    cfg: &SearchConfig,
    nodes: &mut u64,
) -> Result<CenterResult, GameError> {
    let ell = layers.layers.len() - 1;
    let caps: Vec<usize> = layers.layers.iter().map(Vec::len).collect();
    // prefix[i] = capacity of layers 1..=i.
    let mut prefix = vec![0usize; ell + 1];
    for i in 1..=ell {
        prefix[i] = prefix[i - 1] + caps[i];
    }
    let window_cap = |from: usize, to_exclusive: usize| -> usize {
        // Capacity of layers from..to_exclusive (both within 1..=ell+1).
        if from >= to_exclusive {
            0
        } else {
            prefix[to_exclusive - 1] - prefix[from - 1]
        }
    };

    let parts: Vec<(usize, &Vec<AgentId>)> = (1..=ell)
        .filter(|&j| !layers.agent_parts[j].is_empty())
        .map(|j| (j, &layers.agent_parts[j]))
        .collect();
    let n0 = layers.agent_parts[0].len();
    let m = parts.len();

    if m == 0 {
        // Hub plus indifferent agents only: hub on the center, the rest on
        // the smallest vertices available.
        let mut slots = vec![usize::MAX; g.agent_count()];
        slots[hub] = layers.center;
        let mut next = (0..g.topology.vertex_count()).filter(|&v| v != layers.center);
        for a in 0..g.agent_count() {
            if a != hub {
                slots[a] = next.next().expect("|A| <= |V|");
            }
        }
        return Ok(CenterResult::Found(Allocation::for_game(slots, g)?));
    }

    let max_e = caps[1..].iter().copied().max().unwrap_or(0);
    let dim_i = ell + 1;
    let dim_e = max_e + 1;
    let dim_s = n0 + 1;
    let table_size = m * dim_i * dim_e * dim_s;
    if *nodes + table_size as u64 > cfg.budget {
        return Ok(CenterResult::OverBudget);
    }

    let mut table: Vec<Option<Rec>> = vec![None; table_size];
    let idx = |t: usize, i: usize, e: usize, s: usize| -> usize {
        (((t - 1) * dim_i + i) * dim_e + e) * dim_s + s
    };

    // Blocked interval above frontier i after placing a part with ideal p:
    // layers in (i, dead_end(p, i)) can never be occupied.
    let dead_end = |p: usize, i: usize| -> usize { (i + 1).max((2 * p).saturating_sub(i)) };

    let mark = |table: &mut Vec<Option<Rec>>,
                    nodes: &mut u64,
                    t: usize,
                    i: usize,
                    e: usize,
                    s: usize,
                    rec: Rec| {
        let cell = &mut table[idx(t, i, e, s)];
        if cell.is_none() {
            *cell = Some(rec);
            *nodes += 1;
        }
    };

    // Base: place the first part.
    let (j1, agents1) = (parts[0].0, parts[0].1);
    let n1 = agents1.len();
    for i in 1..=j1.min(ell) {
        if n1 > caps[i] {
            continue;
        }
        for e in 0..=(caps[i] - n1) {
            let s_at_i = caps[i] - n1 - e;
            if s_at_i > n0 {
                continue;
            }
            let below = prefix[i - 1];
            for s_below in 0..=below.min(n0 - s_at_i) {
                mark(
                    &mut table,
                    nodes,
                    1,
                    i,
                    e,
                    s_at_i + s_below,
                    Rec { prev: None, step: Step::BaseLow { s_at_i, s_below } },
                );
            }
        }
    }
    for i in (j1 + 1)..=ell {
        let z_signed = 2 * j1 as i64 - i as i64;
        let (z, z_exists) = if z_signed >= 1 {
            (z_signed as usize, true)
        } else {
            (0, false)
        };
        let x_lo_max = if z_exists { (n1 - 1).min(caps[z]) } else { 0 };
        for x_lo in 0..=x_lo_max {
            let x_up = n1 - x_lo;
            if x_up > caps[i] {
                continue;
            }
            let z_fill_cap = if z_exists { caps[z] - x_lo } else { 0 };
            let below_cap = if z_exists { prefix[z - 1] } else { 0 };
            for e in 0..=(caps[i] - x_up) {
                let s_at_i = caps[i] - x_up - e;
                if s_at_i > n0 {
                    continue;
                }
                for extra in 0..=(z_fill_cap + below_cap).min(n0 - s_at_i) {
                    let s_at_z = extra.min(z_fill_cap);
                    let s_below = extra - s_at_z;
                    mark(
                        &mut table,
                        nodes,
                        1,
                        i,
                        e,
                        s_at_i + extra,
                        Rec {
                            prev: None,
                            step: Step::BaseSplit { z, x_lo, s_at_z, s_below, s_at_i },
                        },
                    );
                }
            }
        }
    }

    // Transitions: process parts 2..=m.
    for t in 1..m {
        let p_cur = parts[t - 1].0;
        let (j, agents_next) = (parts[t].0, parts[t].1);
        let nj = agents_next.len();
        for i_prev in 1..=ell {
            for e_prev in 0..=max_e.min(caps[i_prev].saturating_sub(1)) {
                for s_prev in 0..=n0 {
                    if table[idx(t, i_prev, e_prev, s_prev)].is_none() {
                        continue;
                    }
                    let dead = dead_end(p_cur, i_prev);
                    let prev = Some((i_prev, e_prev, s_prev));

                    // Join the frontier.
                    if nj <= e_prev {
                        mark(
                            &mut table,
                            nodes,
                            t + 1,
                            i_prev,
                            e_prev - nj,
                            s_prev,
                            Rec { prev, step: Step::Join },
                        );
                    }

                    // Advance to a new frontier (past the blocked interval).
                    for i_new in dead..=ell {
                        if i_new <= j {
                            // Entire part at or below its ideal.
                            if nj > caps[i_new] {
                                continue;
                            }
                            let wcap = window_cap(dead, i_new);
                            for e_new in 0..=(caps[i_new] - nj) {
                                let s_at_i = caps[i_new] - nj - e_new;
                                if s_prev + s_at_i > n0 {
                                    continue;
                                }
                                for extra in 0..=(e_prev + wcap).min(n0 - s_prev - s_at_i) {
                                    let s_old = extra.min(e_prev);
                                    let s_window = extra - s_old;
                                    mark(
                                        &mut table,
                                        nodes,
                                        t + 1,
                                        i_new,
                                        e_new,
                                        s_prev + s_at_i + extra,
                                        Rec { prev, step: Step::AdvLow { s_old, s_window, s_at_i } },
                                    );
                                }
                            }
                        } else {
                            // Part lands above its ideal; mirror layer z.
                            let z_signed = 2 * j as i64 - i_new as i64;
                            if z_signed < i_prev as i64 {
                                continue; // strip would cover the old frontier
                            }
                            let z = z_signed as usize;
                            let (x_lo_max, old_cap, wcap) = if z == i_prev {
                                ((nj - 1).min(e_prev), 0, 0)
                            } else if z < dead {
                                (0, e_prev, 0)
                            } else {
                                ((nj - 1).min(caps[z]), e_prev, window_cap(dead, z))
                            };
                            for x_lo in 0..=x_lo_max {
                                let x_up = nj - x_lo;
                                if x_up > caps[i_new] {
                                    continue;
                                }
                                let z_fill_cap = if z == i_prev {
                                    e_prev - x_lo
                                } else if z < dead {
                                    0
                                } else {
                                    caps[z] - x_lo
                                };
                                for e_new in 0..=(caps[i_new] - x_up) {
                                    let s_at_i = caps[i_new] - x_up - e_new;
                                    if s_prev + s_at_i > n0 {
                                        continue;
                                    }
                                    let free = old_cap + wcap + z_fill_cap;
                                    for extra in 0..=free.min(n0 - s_prev - s_at_i) {
                                        let s_old = extra.min(old_cap);
                                        let rem = extra - s_old;
                                        let s_window = rem.min(wcap);
                                        let s_at_z = rem - s_window;
                                        mark(
                                            &mut table,
                                            nodes,
                                            t + 1,
                                            i_new,
                                            e_new,
                                            s_prev + s_at_i + extra,
                                            Rec {
                                                prev,
                                                step: Step::AdvSplit {
                                                    z,
                                                    x_lo,
                                                    s_old,
                                                    s_window,
                                                    s_at_z,
                                                    s_at_i,
                                                },
                                            },
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // Accept: all parts placed and the remaining indifferent agents fit on
    // the frontier's free vertices plus the layers past the blocked
    // interval.
    let p_last = parts[m - 1].0;
    for i in 1..=ell {
        for e in 0..=max_e {
            for s in 0..=n0 {
                if table[idx(m, i, e, s)].is_none() {
                    continue;
                }
                let dead = dead_end(p_last, i);
                let tail_cap = if dead > ell { 0 } else { prefix[ell] - prefix[dead - 1] };
                let remaining = n0 - s;
                if remaining <= e + tail_cap {
                    let alloc =
                        materialize(g, hub, layers, &parts, &table, &idx, (i, e, s), remaining)?;
                    return Ok(CenterResult::Found(alloc));
                }
            }
        }
    }
    Ok(CenterResult::Exhausted)
}

/// Replays the step chain ending at `accept`, assigning concrete vertices.
/// Within a layer vertices are consumed in ascending id order; part agents
/// go before fills placed by the same step; indifferent agents are consumed
/// in ascending id order.
#[allow(clippy::too_many_arguments)]
fn materialize(
    g: &Game,
    hub: AgentId,
    layers: &BfsLayers,
    parts: &[(usize, &Vec<AgentId>)],
    table: &[Option<Rec>],
    idx: &dyn Fn(usize, usize, usize, usize) -> usize,
    accept: (usize, usize, usize),
    remaining: usize,
) -> Result<Allocation, GameError> {
    let ell = layers.layers.len() - 1;
    let m = parts.len();

    // Walk back to the base, then replay forward.
    let mut chain: Vec<((usize, usize, usize), Step)> = Vec::with_capacity(m);
    let mut state = accept;
    for t in (1..=m).rev() {
        let rec = table[idx(t, state.0, state.1, state.2)].expect("chain states are marked");
        chain.push((state, rec.step));
        if let Some(prev) = rec.prev {
            state = prev;
        }
    }
    chain.reverse();

    let mut slots = vec![usize::MAX; g.agent_count()];
    slots[hub] = layers.center;
    let mut cursor = vec![0usize; ell + 1];
    cursor[0] = 1; // center consumed by the hub
    let mut fills = layers.agent_parts[0].iter().copied();

    let take = |slots: &mut Vec<usize>, cursor: &mut Vec<usize>, layer: usize, agent: AgentId| {
        let v = layers.layers[layer][cursor[layer]];
        cursor[layer] += 1;
        slots[agent] = v;
    };
    // Greedy fill of `count` indifferent agents over `layer_range`, each
    // layer up to capacity.
    let fill_layers = |slots: &mut Vec<usize>,
                       cursor: &mut Vec<usize>,
                       fills: &mut dyn Iterator<Item = AgentId>,
                       range: core::ops::RangeInclusive<usize>,
                       mut count: usize| {
        for layer in range {
            while count > 0 && cursor[layer] < layers.layers[layer].len() {
                let a = fills.next().expect("fill counts bounded by indifferent agents");
                let v = layers.layers[layer][cursor[layer]];
                cursor[layer] += 1;
                slots[a] = v;
                count -= 1;
            }
        }
        debug_assert_eq!(count, 0, "fill capacity accounting mismatch");
    };
    let fill_at = |slots: &mut Vec<usize>,
                   cursor: &mut Vec<usize>,
                   fills: &mut dyn Iterator<Item = AgentId>,
                   layer: usize,
                   count: usize| {
        for _ in 0..count {
            let a = fills.next().expect("fill counts bounded by indifferent agents");
            let v = layers.layers[layer][cursor[layer]];
            cursor[layer] += 1;
            slots[a] = v;
        }
    };

    let mut prev_coords: Option<(usize, usize, usize)> = None;
    for (t0, &((i, e_cur, s_cur), step)) in chain.iter().enumerate() {
        let part_agents = parts[t0].1;
        match step {
            Step::BaseLow { s_at_i, s_below } => {
                for &a in part_agents.iter() {
                    take(&mut slots, &mut cursor, i, a);
                }
                fill_at(&mut slots, &mut cursor, &mut fills, i, s_at_i);
                if s_below > 0 {
                    fill_layers(&mut slots, &mut cursor, &mut fills, 1..=(i - 1), s_below);
                }
            }
            Step::BaseSplit { z, x_lo, s_at_z, s_below, s_at_i } => {
                for &a in part_agents.iter().take(x_lo) {
                    take(&mut slots, &mut cursor, z, a);
                }
                fill_at(&mut slots, &mut cursor, &mut fills, z, s_at_z);
                if s_below > 0 {
                    fill_layers(&mut slots, &mut cursor, &mut fills, 1..=(z - 1), s_below);
                }
                for &a in part_agents.iter().skip(x_lo) {
                    take(&mut slots, &mut cursor, i, a);
                }
                fill_at(&mut slots, &mut cursor, &mut fills, i, s_at_i);
            }
            Step::Join => {
                for &a in part_agents.iter() {
                    take(&mut slots, &mut cursor, i, a);
                }
            }
            Step::AdvLow { s_old, s_window, s_at_i } => {
                let (pi, _, _) = prev_coords.expect("advances have a predecessor");
                let dead = (pi + 1).max((2 * parts[t0 - 1].0).saturating_sub(pi));
                fill_at(&mut slots, &mut cursor, &mut fills, pi, s_old);
                if s_window > 0 {
                    fill_layers(&mut slots, &mut cursor, &mut fills, dead..=(i - 1), s_window);
                }
                for &a in part_agents.iter() {
                    take(&mut slots, &mut cursor, i, a);
                }
                fill_at(&mut slots, &mut cursor, &mut fills, i, s_at_i);
            }
            Step::AdvSplit { z, x_lo, s_old, s_window, s_at_z, s_at_i } => {
                let (pi, _, _) = prev_coords.expect("advances have a predecessor");
                let dead = (pi + 1).max((2 * parts[t0 - 1].0).saturating_sub(pi));
                fill_at(&mut slots, &mut cursor, &mut fills, pi, s_old);
                if s_window > 0 {
                    fill_layers(&mut slots, &mut cursor, &mut fills, dead..=(z - 1), s_window);
                }
                for &a in part_agents.iter().take(x_lo) {
                    take(&mut slots, &mut cursor, z, a);
                }
                fill_at(&mut slots, &mut cursor, &mut fills, z, s_at_z);
                for &a in part_agents.iter().skip(x_lo) {
                    take(&mut slots, &mut cursor, i, a);
                }
                fill_at(&mut slots, &mut cursor, &mut fills, i, s_at_i);
            }
        }
        prev_coords = Some((i, e_cur, s_cur));
    }

    // Final fills: frontier free vertices first, then the layers past the
    // blocked interval.
    let (i_fin, e_fin, _) = accept;
    let p_last = parts[m - 1].0;
    let dead = (i_fin + 1).max((2 * p_last).saturating_sub(i_fin));
    let on_frontier = remaining.min(e_fin);
    fill_at(&mut slots, &mut cursor, &mut fills, i_fin, on_frontier);
    let tail = remaining - on_frontier;
    if tail > 0 {
        fill_layers(&mut slots, &mut cursor, &mut fills, dead..=ell, tail);
    }
    debug_assert!(fills.next().is_none(), "all indifferent agents placed");

    Allocation::for_game(slots, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{brute_force_search, SolveStatus, StabilityNotion};
    use crate::game::{build_distance_matrix, shapes};
    use alloc::collections::BTreeMap;

    fn wants(pairs: &[(AgentId, u32)]) -> BTreeMap<AgentId, u32> {
        pairs.iter().copied().collect()
    }

    fn assert_matches_brute(g: &Game) {
        let cfg = SearchConfig::default();
        let fast = solve_ef_in_star(g, &cfg).unwrap();
        let brute = brute_force_search(g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(fast.status, brute.status, "disagreement on {g:?}");
        if fast.status == SolveStatus::Found {
            let dist = build_distance_matrix(&g.topology).unwrap();
            assert!(stability::is_envy_free(g, &dist, fast.witness.as_ref().unwrap()));
        }
    }

    #[test]
    fn rejects_non_in_star() {
        let g = Game {
            topology: shapes::path(4).unwrap(),
            wants: vec![wants(&[(1, 1)]), wants(&[(0, 2)])],
        };
        assert!(matches!(
            solve_ef_in_star(&g, &SearchConfig::default()),
            Err(GameError::ShapeMismatch { solver: "in-star", .. })
        ));
    }

    #[test]
    fn layer_partition_clamps_ideals() {
        // Path on 5 vertices, center 0: layers 0..4; ideal 9 clamps to 4.
        let g = Game {
            topology: shapes::path(5).unwrap(),
            wants: vec![wants(&[]), wants(&[(0, 9)]), wants(&[(0, 2)])],
        };
        let layers = bfs_layers(&g, 0).unwrap();
        assert_eq!(layers.layers.len(), 5);
        assert_eq!(layers.agent_parts[4], vec![1]);
        assert_eq!(layers.agent_parts[2], vec![2]);
        assert!(layers.agent_parts[0].is_empty());
    }

    #[test]
    fn single_follower_on_path() {
        // Follower wants the hub at distance 2 on a 5-path. Any placement
        // of the pair alone is envy-free (swapping with the hub preserves
        // the distance between them), so this must report Found.
        let g = Game {
            topology: shapes::path(5).unwrap(),
            wants: vec![wants(&[]), wants(&[(0, 2)])],
        };
        let out = solve_ef_in_star(&g, &SearchConfig::default()).unwrap();
        assert_eq!(out.status, SolveStatus::Found);
        assert_matches_brute(&g);
    }

    /// Trailing indifferent agents must be allowed above the last frontier:
    /// hub at a path end, one follower at distance 1, the rest indifferent.
    #[test]
    fn trailing_indifferent_agents_fit_above_the_frontier() {
        let g = Game {
            topology: shapes::path(7).unwrap(),
            wants: vec![
                wants(&[]),
                wants(&[(0, 1)]),
                wants(&[]),
                wants(&[]),
                wants(&[]),
                wants(&[]),
                wants(&[]),
            ],
        };
        let out = solve_ef_in_star(&g, &SearchConfig::default()).unwrap();
        assert_eq!(out.status, SolveStatus::Found, "a full-path placement exists");
        assert_matches_brute(&g);
    }

    #[test]
    fn split_across_mirror_layers() {
        // Five agents want the hub at distance 2 on a 7-path: layer 2 around
        // any center is too small, so the part must split onto layers 1 and
        // 3 or fail; brute force decides which.
        let g = Game {
            topology: shapes::path(7).unwrap(),
            wants: vec![
                wants(&[]),
                wants(&[(0, 2)]),
                wants(&[(0, 2)]),
                wants(&[(0, 2)]),
                wants(&[(0, 2)]),
                wants(&[(0, 2)]),
            ],
        };
        assert_matches_brute(&g);
    }

    #[test]
    fn blocked_interval_is_respected() {
        // One agent at ideal 1 and one at ideal 4 on a 6-path: placing the
        // first at layer 1 blocks layers 2..3 only when mirrored; the
        // search must still find a valid arrangement if any exists.
        let g = Game {
            topology: shapes::path(6).unwrap(),
            wants: vec![wants(&[]), wants(&[(0, 1)]), wants(&[(0, 4)]), wants(&[])],
        };
        assert_matches_brute(&g);
    }

    #[test]
    fn fully_indifferent_in_star_short_circuits() {
        let g = Game { topology: shapes::path(4).unwrap(), wants: vec![wants(&[]); 3] };
        let out = solve_ef_in_star(&g, &SearchConfig::default()).unwrap();
        assert_eq!(out.witness.unwrap().slots(), &[0, 1, 2]);
    }

    #[test]
    fn hub_with_only_indifferent_followers() {
        let g = Game {
            topology: shapes::cycle(5).unwrap(),
            wants: vec![wants(&[(2, 1)]), wants(&[(2, 3)]), wants(&[]), wants(&[])],
        };
        assert_matches_brute(&g);
    }
}

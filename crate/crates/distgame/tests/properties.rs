//! Property tests for the stability definitions on randomly generated
//! games and placements.

use distgame::generators::{gen_random, PrefShapeKind, RandomGameParams};
use distgame::{build_distance_matrix, stability_report, Allocation, Game};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn game_from(seed: u64, shape_idx: usize) -> Game {
    let shape = [
        PrefShapeKind::Generic,
        PrefShapeKind::Symmetric,
        PrefShapeKind::Dag,
        PrefShapeKind::InStar,
        PrefShapeKind::OutStar,
    ][shape_idx];
    let vertices = 3 + (seed % 5) as usize;
    let params = RandomGameParams {
        vertices,
        extra_edge_prob: 0.3,
        agents: 1 + (seed as usize / 11) % vertices,
        want_prob: 0.6,
        max_ideal: 1 + (seed % 5) as u32,
        shape,
        seed,
    };
    gen_random(&params).unwrap()
}

fn shuffled_allocation(g: &Game, seed: u64) -> Allocation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verts: Vec<usize> = (0..g.topology.vertex_count()).collect();
    for i in (1..verts.len()).rev() {
        let j = rng.gen_range(0..=i);
        verts.swap(i, j);
    }
    Allocation::for_game(verts[..g.agent_count()].to_vec(), g).unwrap()
}

proptest! {
    /// Envy-freeness implies swap stability on every placement (a blocking
    /// swap pair is mutual envy), and the report's flags agree with its
    /// deviation lists.
    #[test]
    fn envy_freeness_implies_swap_stability(
        seed in any::<u64>(),
        shape_idx in 0usize..5,
        placement_seed in any::<u64>(),
    ) {
        let g = game_from(seed, shape_idx);
        let alloc = shuffled_allocation(&g, placement_seed);
        let dist = build_distance_matrix(&g.topology).unwrap();
        let report = stability_report(&g, &dist, &alloc);
        prop_assert_eq!(report.is_envy_free, report.envy_pairs.is_empty());
        prop_assert_eq!(report.is_swap_stable, report.swap_deviations.is_empty());
        prop_assert_eq!(report.is_jump_stable, report.jump_deviations.is_empty());
        if report.is_envy_free {
            prop_assert!(report.is_swap_stable, "game {:?} alloc {:?}", g, alloc);
        }
        // Every reported swap deviation is mutual envy.
        for &(a, b) in &report.swap_deviations {
            prop_assert!(report.envy_pairs.contains(&(a, b)));
            prop_assert!(report.envy_pairs.contains(&(b, a)));
        }
    }

    /// Deviations never list satisfied agents: an agent at cost zero
    /// appears in no envy pair, swap pair or jump move.
    #[test]
    fn zero_cost_agents_never_deviate(
        seed in any::<u64>(),
        shape_idx in 0usize..5,
        placement_seed in any::<u64>(),
    ) {
        let g = game_from(seed, shape_idx);
        let alloc = shuffled_allocation(&g, placement_seed);
        let dist = build_distance_matrix(&g.topology).unwrap();
        let report = stability_report(&g, &dist, &alloc);
        for a in 0..g.agent_count() {
            if report.costs[a] == 0 {
                prop_assert!(report.envy_pairs.iter().all(|&(x, _)| x != a));
                prop_assert!(report
                    .swap_deviations
                    .iter()
                    .all(|&(x, y)| x != a && y != a));
                prop_assert!(report.jump_deviations.iter().all(|&(x, _)| x != a));
            }
        }
    }
}

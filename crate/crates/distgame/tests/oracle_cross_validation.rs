//! Cross-validation of every specialised solver against the brute-force
//! oracle on seeded random instances, plus the dynamics descent and bound
//! checks that do not need an oracle.

use distgame::exact::{brute_force_search, solve_ef_and_jump, solve_ef_fixed_interested};
use distgame::generators::{gen_random, PrefShapeKind, RandomGameParams};
use distgame::parameterized::{solve_ef_diameter, solve_ef_nd, solve_ef_vc};
use distgame::stability;
use distgame::structured::{
    dispatch_solve, dynamics_symmetric, solve_ef_in_star, solve_ef_out_star,
    solve_jump_swap_acyclic, Move, MoveKind,
};
use distgame::{
    build_distance_matrix, Game, SearchConfig, SolveOutcome, SolveStatus, StabilityNotion,
};

/// Small instance with all parameters derived from the seed; vertex counts
/// stay within brute-force reach.
fn rand_game(seed: u64, shape: PrefShapeKind) -> Game {
    let vertices = 4 + (seed % 4) as usize;
    let agents = 2 + (seed as usize / 7) % (vertices - 1);
    let params = RandomGameParams {
        vertices,
        extra_edge_prob: [0.0, 0.2, 0.5][(seed % 3) as usize],
        agents,
        want_prob: [0.25, 0.5, 0.8, 1.0][(seed % 4) as usize],
        max_ideal: 1 + (seed % 6) as u32,
        shape,
        seed,
    };
    gen_random(&params).unwrap()
}

fn assert_witness_satisfies(g: &Game, out: &SolveOutcome, notion: StabilityNotion, ctx: &str) {
    assert_ne!(out.status, SolveStatus::Aborted, "{ctx}: unexpected abort");
    if out.status == SolveStatus::Found {
        let dist = build_distance_matrix(&g.topology).unwrap();
        let w = out.witness.as_ref().expect("found outcomes carry a witness");
        assert!(stability::satisfies(g, &dist, w, notion), "{ctx}: witness unstable");
    } else {
        assert!(out.witness.is_none());
    }
}

#[test]
fn in_star_solver_matches_brute_force() {
    let cfg = SearchConfig::default();
    for seed in 0..600 {
        let g = rand_game(seed, PrefShapeKind::InStar);
        let fast = solve_ef_in_star(&g, &cfg).unwrap();
        let brute = brute_force_search(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(fast.status, brute.status, "seed {seed}: {g:?}");
        assert_witness_satisfies(&g, &fast, StabilityNotion::EnvyFree, &format!("seed {seed}"));
    }
}

#[test]
fn class_kernel_and_fixed_solvers_match_brute_force() {
    let cfg = SearchConfig::default();
    for seed in 0..200 {
        let g = rand_game(seed, PrefShapeKind::Generic);
        let brute = brute_force_search(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        let ctx = format!("seed {seed}");
        for (name, out) in [
            ("nd", solve_ef_nd(&g, &cfg).unwrap()),
            ("vc", solve_ef_vc(&g, &cfg).unwrap()),
            ("fixed", solve_ef_fixed_interested(&g, &cfg).unwrap()),
        ] {
            assert_eq!(out.status, brute.status, "{name}, seed {seed}: {g:?}");
            assert_witness_satisfies(&g, &out, StabilityNotion::EnvyFree, &ctx);
        }
    }
}

#[test]
fn diameter_solver_matches_brute_force_on_trees() {
    let cfg = SearchConfig::default();
    for seed in 0..200 {
        // Trees maximise diameters relative to size.
        let params = RandomGameParams {
            vertices: 5 + (seed % 4) as usize,
            extra_edge_prob: 0.0,
            agents: 2 + (seed as usize / 5) % 3,
            want_prob: 0.6,
            max_ideal: 1 + (seed % 5) as u32,
            shape: PrefShapeKind::Generic,
            seed,
        };
        let g = gen_random(&params).unwrap();
        let fast = solve_ef_diameter(&g, &cfg).unwrap();
        let brute = brute_force_search(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(fast.status, brute.status, "seed {seed}: {g:?}");
        assert_witness_satisfies(&g, &fast, StabilityNotion::EnvyFree, &format!("seed {seed}"));
    }
}

#[test]
fn dispatch_agrees_with_brute_force_on_every_notion() {
    let cfg = SearchConfig::default();
    let shapes = [
        PrefShapeKind::Generic,
        PrefShapeKind::Symmetric,
        PrefShapeKind::Dag,
        PrefShapeKind::InStar,
        PrefShapeKind::OutStar,
    ];
    let notions = [
        StabilityNotion::EnvyFree,
        StabilityNotion::SwapStable,
        StabilityNotion::JumpStable,
        StabilityNotion::EnvyFreeJumpStable,
    ];
    for seed in 0..60 {
        for shape in shapes {
            let g = rand_game(seed, shape);
            for notion in notions {
                let (out, solver) = dispatch_solve(&g, notion, &cfg).unwrap();
                let brute = brute_force_search(&g, notion, &cfg).unwrap();
                assert_eq!(
                    out.status, brute.status,
                    "solver {solver}, notion {}, seed {seed}: {g:?}",
                    notion.name()
                );
                let ctx = format!("solver {solver}, seed {seed}");
                assert_witness_satisfies(&g, &out, notion, &ctx);
            }
        }
    }
}

#[test]
fn padded_search_matches_direct_combined_search() {
    let cfg = SearchConfig::default();
    for seed in 0..150 {
        let shape = [PrefShapeKind::Generic, PrefShapeKind::Symmetric, PrefShapeKind::Dag]
            [(seed % 3) as usize];
        let g = rand_game(seed, shape);
        let padded = solve_ef_and_jump(&g, &cfg).unwrap();
        let direct = brute_force_search(&g, StabilityNotion::EnvyFreeJumpStable, &cfg).unwrap();
        assert_eq!(padded.status, direct.status, "seed {seed}: {g:?}");
        assert_witness_satisfies(
            &g,
            &padded,
            StabilityNotion::EnvyFreeJumpStable,
            &format!("seed {seed}"),
        );
    }
}

#[test]
fn dynamics_descend_the_potential_and_converge_within_the_bound() {
    for seed in 0..200 {
        let g = rand_game(seed, PrefShapeKind::Symmetric);
        let n = g.topology.vertex_count() as u64;
        let a = g.agent_count() as u64;
        for mode in [MoveKind::Jump, MoveKind::Swap, MoveKind::Both] {
            let trace = dynamics_symmetric(&g, mode).unwrap();
            assert!(
                (trace.steps.len() as u64) <= 2 * a * a * n,
                "seed {seed}: {} moves exceeds the bound",
                trace.steps.len()
            );
            for step in &trace.steps {
                assert!(step.potential_after < step.potential_before, "seed {seed}");
                let own = step.cost_before - step.cost_after;
                let drop = step.potential_before - step.potential_after;
                match step.mv {
                    Move::Jump { .. } => assert_eq!(drop, 2 * own, "seed {seed}"),
                    Move::Swap { .. } => {
                        let partner = step.partner_cost_before.unwrap()
                            - step.partner_cost_after.unwrap();
                        assert_eq!(drop, 2 * (own + partner), "seed {seed}");
                    }
                }
            }
            let dist = build_distance_matrix(&g.topology).unwrap();
            let fin = &trace.final_allocation;
            if mode.jumps() {
                assert!(stability::is_jump_stable(&g, &dist, fin), "seed {seed}");
            }
            if mode.swaps() {
                assert!(stability::is_swap_stable(&g, &dist, fin), "seed {seed}");
            }
        }
    }
}

#[test]
fn out_star_solver_respects_its_iteration_bound() {
    let cfg = SearchConfig::default();
    for seed in 0..200 {
        let g = rand_game(seed, PrefShapeKind::OutStar);
        let out = solve_ef_out_star(&g).unwrap();
        assert_eq!(out.status, SolveStatus::Found);
        let dist = build_distance_matrix(&g.topology).unwrap();
        let bound = dist.diameter() as u64 * g.agent_count() as u64;
        assert!(out.nodes_explored <= bound, "seed {seed}: {} swaps", out.nodes_explored);
        assert_witness_satisfies(&g, &out, StabilityNotion::EnvyFree, &format!("seed {seed}"));
        // The specialised solver must agree with brute force trivially: an
        // envy-free allocation always exists here.
        let brute = brute_force_search(&g, StabilityNotion::EnvyFree, &cfg).unwrap();
        assert_eq!(brute.status, SolveStatus::Found);
    }
}

#[test]
fn acyclic_greedy_output_is_jump_and_swap_stable() {
    for seed in 0..200 {
        let g = rand_game(seed, PrefShapeKind::Dag);
        let out = solve_jump_swap_acyclic(&g).unwrap();
        assert_eq!(out.status, SolveStatus::Found, "seed {seed}");
        let dist = build_distance_matrix(&g.topology).unwrap();
        let w = out.witness.unwrap();
        assert!(stability::is_jump_stable(&g, &dist, &w), "seed {seed}");
        assert!(stability::is_swap_stable(&g, &dist, &w), "seed {seed}");
    }
}

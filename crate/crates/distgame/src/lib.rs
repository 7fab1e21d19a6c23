//! Distance-preservation placement games on graphs.
//!
//! A game places `|A|` agents injectively onto the vertices of a connected
//! undirected graph. Each agent `a` carries a wants map `M_a`: for every
//! agent `b` it cares about, an ideal distance `d_a(b) >= 1`. Under an
//! allocation `pi` the cost of `a` is
//!
//! ```text
//! cost(a, pi) = sum over b in M_a of |d_a(b) - dist(pi(a), pi(b))|
//! ```
//!
//! where `dist` is the shortest-path metric of the topology. Three
//! stability notions are supported:
//!
//! * **envy-free**: no agent would strictly lower its cost by taking another
//!   agent's vertex (the two agents swap positions for the comparison);
//! * **swap stable**: no pair of agents can swap positions so that *both*
//!   strictly lower their costs;
//! * **jump stable**: no agent can strictly lower its cost by moving to an
//!   unoccupied vertex.
//!
//! Envy-freeness implies swap stability; jump stability is independent of
//! both. Allocations that are envy-free *and* jump stable correspond exactly
//! to envy-free allocations of the padded game in which indifferent agents
//! fill every unoccupied vertex (see [`exact::solve_ef_and_jump`]).
//!
//! The crate is organised bottom-up:
//!
//! * [`game`]: topology, shortest-path metric, games, allocations, costs,
//!   preference-shape classification;
//! * [`stability`]: deviation finders and stability reports;
//! * [`exact`]: budgeted brute-force search plus exact solvers that remain
//!   feasible when only few agents have preferences;
//! * [`structured`]: polynomial solvers for restricted topologies (cliques,
//!   stars) and restricted preference shapes (in-star, out-star, acyclic,
//!   symmetric), plus the shape-dispatching entry point;
//! * [`parameterized`]: vertex-cover kernelization, neighborhood-diversity
//!   enumeration, and the equidistant-set route that works on huge graphs of
//!   small diameter;
//! * [`generators`]: hardness-reduction instance families, counterexample
//!   families, and a seeded random-instance generator.
//!
//! The crate is `no_std` (with `alloc`); everything is deterministic:
//! identical inputs produce identical witnesses.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod exact;
pub mod game;
pub mod generators;
pub mod parameterized;
pub mod stability;
pub mod structured;

pub use error::{GameError, GenError};
pub use exact::{SearchConfig, SolveOutcome, SolveStatus, StabilityNotion};
pub use game::{
    build_distance_matrix, classify_preferences, cost, validate_game, AgentId, Allocation,
    DistanceMatrix, Game, PreferenceShape, Topology, VertexId,
};
pub use stability::{stability_report, StabilityReport};

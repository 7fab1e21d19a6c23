//! Error types for game construction, validation and instance generation.

use core::fmt;

use crate::game::{AgentId, VertexId};

/// Rejection reasons for malformed topologies, games and allocations, plus
/// shape mismatches when a specialised solver is applied outside its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    /// Topologies must have at least one vertex.
    EmptyTopology,
    VertexOutOfRange { vertex: VertexId, vertex_count: usize },
    SelfLoop { vertex: VertexId },
    DuplicateEdge { u: VertexId, v: VertexId },
    /// All topologies must be connected; the shortest-path metric is total.
    Disconnected,
    /// Injective placement needs at least as many vertices as agents.
    TooManyAgents { agents: usize, vertices: usize },
    SelfWant { agent: AgentId },
    UnknownAgent { agent: AgentId, agent_count: usize },
    /// Ideal distances are strictly positive.
    ZeroIdealDistance { agent: AgentId, target: AgentId },
    AllocationLengthMismatch { expected: usize, actual: usize },
    AllocationNotInjective { vertex: VertexId },
    /// A solver with a structural precondition was handed a game outside its
    /// class. Never a silent wrong answer.
    ShapeMismatch {
        solver: &'static str,
        requirement: &'static str,
    },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::EmptyTopology => write!(f, "topology has no vertices"),
            GameError::VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range (vertex count {vertex_count})")
            }
            GameError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GameError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GameError::Disconnected => write!(f, "topology is not connected"),
            GameError::TooManyAgents { agents, vertices } => {
                write!(f, "{agents} agents cannot be placed injectively on {vertices} vertices")
            }
            GameError::SelfWant { agent } => {
                write!(f, "agent {agent} lists itself in its wants")
            }
            GameError::UnknownAgent { agent, agent_count } => {
                write!(f, "wanted agent {agent} out of range (agent count {agent_count})")
            }
            GameError::ZeroIdealDistance { agent, target } => {
                write!(f, "agent {agent} wants agent {target} at distance 0; ideal distances are >= 1")
            }
            GameError::AllocationLengthMismatch { expected, actual } => {
                write!(f, "allocation places {actual} agents, game has {expected}")
            }
            GameError::AllocationNotInjective { vertex } => {
                write!(f, "allocation places two agents on vertex {vertex}")
            }
            GameError::ShapeMismatch { solver, requirement } => {
                write!(f, "solver `{solver}` requires {requirement}")
            }
        }
    }
}

impl core::error::Error for GameError {}

/// Rejection reasons for the instance generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    /// Numeric-partition generators need 3N items, N >= 1.
    ItemCount { items: usize },
    /// The item sum must split into N equal groups.
    SumNotDivisible { sum: u64, groups: usize },
    /// Derived quantities (group bound, chain gaps) must fit a u32 distance.
    ValueTooLarge { value: u64 },
    NotCubic { vertex: VertexId, degree: usize },
    /// Parameter errors for the bisection and clique families.
    BadParameter { reason: &'static str },
    /// CNF clauses use nonzero literals; each clause has exactly 3.
    BadClause { clause: usize },
    /// Counterexample families have minimum sizes.
    TooFewAgents { agents: usize, minimum: usize },
    /// Random-generator parameter errors.
    BadRandomParams { reason: &'static str },
    /// A claimed partition does not certify the reduction instance.
    BadPartition { reason: &'static str },
    /// Forward witnesses exist only for the numeric-partition families.
    UnsupportedFamily,
    /// A generator produced an invalid game; indicates a bug upstream.
    Game(GameError),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::ItemCount { items } => {
                write!(f, "need a positive multiple of 3 items, got {items}")
            }
            GenError::SumNotDivisible { sum, groups } => {
                write!(f, "item sum {sum} is not divisible into {groups} equal groups")
            }
            GenError::ValueTooLarge { value } => {
                write!(f, "derived value {value} does not fit a distance")
            }
            GenError::NotCubic { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, graph is not cubic")
            }
            GenError::BadParameter { reason } => write!(f, "{reason}"),
            GenError::BadClause { clause } => {
                write!(f, "clause {clause} must have exactly 3 nonzero literals")
            }
            GenError::TooFewAgents { agents, minimum } => {
                write!(f, "family needs at least {minimum} agents, got {agents}")
            }
            GenError::BadRandomParams { reason } => write!(f, "{reason}"),
            GenError::BadPartition { reason } => write!(f, "{reason}"),
            GenError::UnsupportedFamily => {
                write!(f, "no forward witness map for this family")
            }
            GenError::Game(e) => write!(f, "generated game invalid: {e}"),
        }
    }
}

impl core::error::Error for GenError {}

impl From<GameError> for GenError {
    fn from(e: GameError) -> Self {
        GenError::Game(e)
    }
}

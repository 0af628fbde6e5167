//! Cones that make every cycle of a graph contractible while keeping all
//! weights bounded.
//!
//! The construction runs in three layers:
//!
//! 1. [`swap_schedule`] finds non-interacting SWAPs that rotate the two
//!    halves of an `h`-bit address;
//! 2. [`sequence_cone`] stacks labeled binary trees along those SWAPs,
//!    joined by interpolation complexes through a mapping cone;
//! 3. [`parsimonious_cone`] places a bipartite graph's edges on the leaves
//!    and records a deformation of the graph inside the cone, and
//!    [`cellulated_cone`] subdivides an arbitrary graph, builds the pruned*
//!    cone and [`cellulate`]s it so that the graph itself is a subgraph.
//!
//! Every cone is contractible (homology `(0, 0, 1)`), with face size at most
//! 5 and vertex degree bounded independently of the graph size.

mod cellulation;
mod deformation;
mod parsimonious;
mod schedule;
mod sequence;

pub use cellulation::{
    bipartite_lift, cellulate, cellulated_cone, cellulated_cone_with, naive_apex_cone, Lift,
};
pub use cs_trees::Variant;
pub use deformation::{Deformation, HostPath};
pub use parsimonious::{
    address_bits, deformation_bound, parsimonious_cone, BipartiteGraph, ConeResult,
};
pub use schedule::{compose_layers, realizes_rotation, rotation, swap_schedule, SwapSchedule};
pub use sequence::{interpolation_cone, sequence_cone, shift_up, SequenceCone};

use cs_core::{ChainError, F2Error};
use cs_meshgraph::GraphError;
use cs_trees::TreeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConeError {
    #[error("invalid input graph: {0}")]
    Input(String),
    #[error("vertex {vertex} of part {part} has degree {degree}, need at least {required}")]
    DegreeTooLow {
        part: usize,
        vertex: usize,
        degree: usize,
        required: usize,
    },
    #[error("SWAP schedule: {0}")]
    Schedule(String),
    #[error("missing cell: {0}")]
    MissingCell(String),
    #[error("path bookkeeping: {0}")]
    Path(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<F2Error> for ConeError {
    fn from(e: F2Error) -> Self {
        ConeError::Chain(ChainError::F2(e))
    }
}

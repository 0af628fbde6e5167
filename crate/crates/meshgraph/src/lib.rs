//! Measurement graphs and their expansion.
//!
//! The measurement graph of an X-type logical `X(ℓ)` has one vertex per
//! qubit of `ℓ` and, for every check meeting `ℓ` in Y/Z positions, one edge
//! per pair of the (even) overlap. Extra edges drawn by [`augment_expander`]
//! are mapped to no check; they only improve the Cheeger constant, which is
//! certified exactly on small graphs and by a spectral bound on large ones.

mod cheeger;
mod graph;
mod measurement;
mod random;

pub use cheeger::{
    certify, cheeger_exact, cheeger_spectral_lb, edge_expansion_lb, CheegerCertificate,
    CheegerMethod, MAX_EXACT_VERTICES,
};
pub use graph::{parse_edge_list, EdgeTags, Graph};
pub use measurement::{
    augment_expander, build_measurement_graph, build_measurement_graph_css, default_degree_cap,
    AugmentOptions, MeasurementGraph,
};
pub use random::{random_connected, random_regular};

use cs_codes::CodeError;
use thiserror::Error;

/// Errors raised by graph construction, certification and augmentation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("edge {edge} has endpoint {vertex}, but there are only {n} vertices")]
    BadEndpoint {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {0} is a self-loop")]
    SelfLoop(usize),
    #[error("exact Cheeger computation is limited to {MAX_EXACT_VERTICES} vertices (got {0}); use the spectral bound")]
    TooLarge(usize),
    #[error("a graph with {0} vertices has no cuts")]
    TooSmall(usize),
    #[error("degree cap {cap} must exceed the current maximum degree {max}")]
    DegreeCap { cap: usize, max: usize },
    #[error("augmentation budget exhausted: best certified value {best:.4} < target {target}")]
    BudgetExhausted { best: f64, target: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

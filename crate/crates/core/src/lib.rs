//! GF(2) linear algebra and short chain complexes.
//!
//! Two layers live here:
//!
//! - [`f2`]: sparse matrices and vectors over GF(2) with rank, kernel and
//!   linear-system solving.
//! - [`chain`]: basis-labeled complexes `C₂ → C₁ → C₀`, chain maps, mapping
//!   cones, homology dimensions and weight audits.
//!
//! Everything downstream (codes, trees, cones, surgery) is expressed in terms
//! of these two modules.

pub mod chain;
pub mod f2;

pub use chain::{
    homology_dims, mapping_cone, snake_check, transpose_complex, verify_chain_map, verify_complex,
    weight_audit, CellComplex, ChainError, ChainMap, ConeMap, Homology, SnakeReport, WeightDiagram,
};
pub use f2::{F2Error, F2Matrix, F2Vector};

//! Labeled binary trees and the SWAP machinery that interpolates between
//! them.
//!
//! Vertices of a height-`h` binary tree are bit strings of length `≤ h`; the
//! parent of `s` is `ω(s)`, `s` with its last bit removed. A tree *with
//! labels* `τ = (τ₁, …, τ_h)` names the vertex reached by the standard string
//! `s` as `τ̄s`, i.e. the bits are reordered by a permutation that depends on
//! the depth. Changing labels by a [`Swap`] of adjacent positions gives a
//! second tree sharing all leaves; an [`Interpolation`] complex sits between
//! the two and merges, via `σ⋆`, the vertices whose last bit is ambiguous.
//!
//! Three variants are supported:
//!
//! - [`Variant::Full`]: the complete tree;
//! - [`Variant::Pruned`]: only prefixes of the leaves in a leaf set `𝓛`;
//! - [`Variant::PrunedStar`]: only *branching* prefixes, with parents given by
//!   the branching truncation `Ω`, so the size is `O(|𝓛|)`.

mod frame;
mod perm;
mod tree;
mod word;

pub use frame::LeafFrame;
pub use perm::{apply_label, sigma_star, PermSeq, Swap};
pub use tree::{
    branching_truncation, build_interpolation, build_interpolation_tagged, build_tree,
    build_tree_tagged, interpolating_truncation, Interpolation, LabeledTree, Variant,
};
pub use word::Word;

use thiserror::Error;

/// Largest supported tree height (words are packed into 64-bit masks).
pub const MAX_HEIGHT: usize = 63;

/// Errors raised by tree, word and permutation constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree height must be at least 1")]
    ZeroHeight,
    #[error("height {0} exceeds the supported maximum of {MAX_HEIGHT}")]
    HeightTooLarge(usize),
    #[error("a full tree of height {0} is too large to materialize")]
    FullTreeTooLarge(usize),
    #[error("invalid word {0:?}")]
    BadWord(String),
    #[error("word of length {len} exceeds height {h}")]
    LengthOverflow { len: usize, h: usize },
    #[error("invalid permutation at length {0}")]
    BadPermutation(usize),
    #[error("invalid swap index set {indices:?} for height {h}")]
    BadSwap { h: usize, indices: Vec<usize> },
    #[error("leaf {0} does not have full length")]
    LeafLength(String),
    #[error("the pruned variants need a nonempty leaf set")]
    MissingLeaves,
    #[error("{0} is not a truncation of the leaf set")]
    NotATruncation(String),
    #[error("{0} is neither branching nor the swap of a branching string")]
    NotInterpolating(String),
    #[error("interpolation cell {0} has inconsistent boundaries")]
    IllDefined(String),
    #[error("heights disagree: {0} vs {1}")]
    HeightMismatch(usize, usize),
    #[error(transparent)]
    Chain(#[from] cs_core::ChainError),
}

//! Quantum codes in their GF(2) form.
//!
//! A CSS code is a pair of parity-check matrices `Hx`, `Hz` with
//! `Hx·Hzᵀ = 0`, equivalently the length-2 complex
//! `Z-checks → qubits → X-checks` with `∂₂ = Hzᵀ` and `∂₁ = Hx`. General
//! stabilizer codes are kept in symplectic form `(x | z)`; phases are never
//! tracked because no construction here depends on them.
//!
//! Besides the code types this crate provides logical representatives,
//! an exhaustive (weight-ordered, parallel, deterministic) distance search,
//! single-qubit Clifford conjugation and the reduction of an arbitrary Pauli
//! logical to X-type, and the alist / matrix / symplectic file formats.

mod clifford;
mod css;
mod distance;
pub mod fixtures;
mod io;
mod pauli;

pub use clifford::{
    apply_local_cliffords, local_clifford_conjugate, pauli_to_xtype, yz_overlap_pairs,
    LocalClifford, XTypeReduction,
};
pub use css::{logical_reps, CssCode, Side};
pub use distance::{
    distance_bruteforce, min_weight_logical, Distance, DistanceSearch, MAX_UNCAPPED_QUBITS,
};
pub use io::{parse_alist, parse_symplectic, to_alist, to_symplectic_text};
pub use pauli::{pauli_weight_support, Pauli, PauliOp, StabilizerCode};

use cs_core::{ChainError, F2Error};
use thiserror::Error;

/// Errors raised by code constructions and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    F2(#[from] F2Error),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("qubit counts disagree: {0} vs {1}")]
    QubitMismatch(usize, usize),
    #[error("checks {0} and {1} do not commute")]
    NonCommuting(String, String),
    #[error("operator anticommutes with generator {0}, so it is not a logical")]
    NotALogical(usize),
    #[error("generator {check} meets the logical in an odd number ({size}) of Y/Z positions")]
    OddOverlap { check: usize, size: usize },
    #[error("qubit {qubit} is out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },
    #[error("exhaustive distance search needs at most {MAX_UNCAPPED_QUBITS} qubits or a weight cap (n = {0})")]
    TooLarge(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid Pauli symbol {0:?}")]
    BadPauli(char),
}

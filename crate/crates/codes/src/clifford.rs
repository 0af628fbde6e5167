//! Single-qubit Cliffords and the reduction of a Pauli logical to X-type.

use std::fmt;
use std::str::FromStr;

use cs_core::F2Vector;

use crate::css::pair_up;
use crate::{CodeError, Pauli, PauliOp, StabilizerCode};

/// A single-qubit Clifford, acting on Paulis by conjugation (phases dropped).
///
/// | gate | X | Y | Z |
/// |------|---|---|---|
/// | H    | Z | Y | X |
/// | S    | Y | X | Z |
/// | HS   | Y | Z | X |
/// | SH   | Z | X | Y |
/// | HSH  | X | Z | Y |
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LocalClifford {
    #[default]
    Id,
    H,
    S,
    HS,
    SH,
    HSH,
}

impl LocalClifford {
    pub const ALL: [LocalClifford; 6] = [
        LocalClifford::Id,
        LocalClifford::H,
        LocalClifford::S,
        LocalClifford::HS,
        LocalClifford::SH,
        LocalClifford::HSH,
    ];

    pub fn act(self, p: Pauli) -> Pauli {
        use LocalClifford::*;
        use Pauli::{I, X, Y, Z};
        match (self, p) {
            (_, I) | (Id, _) => p,
            (H, X) => Z,
            (H, Y) => Y,
            (H, Z) => X,
            (S, X) => Y,
            (S, Y) => X,
            (S, Z) => Z,
            (HS, X) => Y,
            (HS, Y) => Z,
            (HS, Z) => X,
            (SH, X) => Z,
            (SH, Y) => X,
            (SH, Z) => Y,
            (HSH, X) => X,
            (HSH, Y) => Z,
            (HSH, Z) => Y,
        }
    }

    /// The inverse action.
    pub fn adjoint(self) -> LocalClifford {
        match self {
            LocalClifford::HS => LocalClifford::SH,
            LocalClifford::SH => LocalClifford::HS,
            other => other,
        }
    }

    /// The Clifford sending `p` to `X` (`Id` for `I` and `X`).
    pub fn to_x(p: Pauli) -> LocalClifford {
        match p {
            Pauli::I | Pauli::X => LocalClifford::Id,
            Pauli::Z => LocalClifford::H,
            Pauli::Y => LocalClifford::SH,
        }
    }
}

impl fmt::Display for LocalClifford {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocalClifford::Id => "id",
            LocalClifford::H => "H",
            LocalClifford::S => "S",
            LocalClifford::HS => "HS",
            LocalClifford::SH => "SH",
            LocalClifford::HSH => "HSH",
        })
    }
}

impl FromStr for LocalClifford {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        LocalClifford::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown Clifford {s:?}"))
    }
}

impl PauliOp {
    /// The operator conjugated by `c` on `qubit`.
    pub fn conjugated(&self, qubit: usize, c: LocalClifford) -> PauliOp {
        self.with(qubit, c.act(self.get(qubit)))
    }
}

/// Conjugates every generator by `which` on `qubit`.
pub fn local_clifford_conjugate(
    code: &StabilizerCode,
    qubit: usize,
    which: LocalClifford,
) -> Result<StabilizerCode, CodeError> {
    if qubit >= code.n() {
        return Err(CodeError::QubitOutOfRange { qubit, n: code.n() });
    }
    let gens = code
        .generators()
        .iter()
        .map(|g| g.conjugated(qubit, which))
        .collect();
    StabilizerCode::new(code.n(), gens)
}

/// Applies `cliffords[q]` on qubit `q` for every listed qubit (the list may
/// be shorter than `n`; the remaining qubits are untouched).
pub fn apply_local_cliffords(
    code: &StabilizerCode,
    cliffords: &[LocalClifford],
) -> Result<StabilizerCode, CodeError> {
    if cliffords.len() > code.n() {
        return Err(CodeError::QubitOutOfRange {
            qubit: cliffords.len() - 1,
            n: code.n(),
        });
    }
    let gens = code
        .generators()
        .iter()
        .map(|g| {
            cliffords
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != LocalClifford::Id)
                .fold(g.clone(), |acc, (q, &c)| acc.conjugated(q, c))
        })
        .collect();
    StabilizerCode::new(code.n(), gens)
}

/// The result of turning a Pauli logical into `X(ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XTypeReduction {
    /// The code after the local Cliffords.
    pub code: StabilizerCode,
    /// The support of the logical, now acted on by `X` only.
    pub ell: F2Vector,
    /// The Clifford applied on each qubit (`Id` off the support).
    pub cliffords: Vec<LocalClifford>,
}

impl XTypeReduction {
    /// The per-qubit inverse Cliffords.
    pub fn adjoint(&self) -> Vec<LocalClifford> {
        self.cliffords.iter().map(|c| c.adjoint()).collect()
    }

    /// Applies the adjoint on the first `n` qubits of `code`, where `n` is
    /// the original qubit count (ancilla qubits are left as they are).
    pub fn restore(&self, code: &StabilizerCode) -> Result<StabilizerCode, CodeError> {
        apply_local_cliffords(code, &self.adjoint())
    }
}

/// Conjugates each qubit of `P`'s support by the Clifford sending its local
/// Pauli to `X`, so that `P` becomes `X(ℓ)`.
pub fn pauli_to_xtype(code: &StabilizerCode, p: &PauliOp) -> Result<XTypeReduction, CodeError> {
    if p.n() != code.n() {
        return Err(CodeError::QubitMismatch(p.n(), code.n()));
    }
    if let Some(i) = code.first_anticommuting(p)? {
        return Err(CodeError::NotALogical(i));
    }
    let cliffords: Vec<LocalClifford> = (0..code.n())
        .map(|q| LocalClifford::to_x(p.get(q)))
        .collect();
    let reduced = apply_local_cliffords(code, &cliffords)?;
    let ell = F2Vector::from_support(code.n(), p.support())?;
    Ok(XTypeReduction {
        code: reduced,
        ell,
        cliffords,
    })
}

/// For each generator, its `Y`/`Z` positions inside `ℓ` split into sorted
/// consecutive pairs. An odd count means `X(ℓ)` anticommutes with it.
pub fn yz_overlap_pairs(
    code: &StabilizerCode,
    ell: &F2Vector,
) -> Result<Vec<Vec<(usize, usize)>>, CodeError> {
    if ell.len() != code.n() {
        return Err(CodeError::QubitMismatch(ell.len(), code.n()));
    }
    code.generators()
        .iter()
        .enumerate()
        .map(|(check, g)| {
            let overlap: Vec<usize> = g
                .z()
                .support()
                .iter()
                .copied()
                .filter(|&q| ell.get(q))
                .collect();
            pair_up(check, &overlap)
        })
        .collect()
}

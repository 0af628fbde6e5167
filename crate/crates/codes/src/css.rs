//! CSS codes and their logical operators.

use std::fmt;
use std::str::FromStr;

use cs_core::{CellComplex, F2Matrix, F2Vector};

use crate::{CodeError, PauliOp, StabilizerCode};

/// Which logical type a query is about.
///
/// `X` logicals are X-type operators commuting with the Z-checks
/// (`ker Hz`), modulo the X-stabilizers (`rowspace Hx`); `Z` logicals are
/// `ker Hx` modulo `rowspace Hz`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Z,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Z,
            Side::Z => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "X",
            Side::Z => "Z",
        })
    }
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "x" | "X" => Ok(Side::X),
            "z" | "Z" => Ok(Side::Z),
            _ => Err(format!("unknown side {s:?}")),
        }
    }
}

/// A CSS code on `n` qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    n: usize,
    hx: F2Matrix,
    hz: F2Matrix,
}

impl CssCode {
    /// Wraps `Hx` (X-checks × qubits) and `Hz` (Z-checks × qubits), checking
    /// that every X-check commutes with every Z-check.
    pub fn new(hx: F2Matrix, hz: F2Matrix) -> Result<Self, CodeError> {
        if hx.cols() != hz.cols() {
            return Err(CodeError::QubitMismatch(hx.cols(), hz.cols()));
        }
        let product = hx.mul(&hz.transpose())?;
        if let Some((i, j)) = product.entries().min() {
            return Err(CodeError::NonCommuting(format!("X{i}"), format!("Z{j}")));
        }
        Ok(Self {
            n: hx.cols(),
            hx,
            hz,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hx(&self) -> &F2Matrix {
        &self.hx
    }

    pub fn hz(&self) -> &F2Matrix {
        &self.hz
    }

    /// Number of logical qubits, `n − rank Hx − rank Hz`.
    pub fn k(&self) -> usize {
        self.n - self.hx.rank() - self.hz.rank()
    }

    /// The checks an operator of the given side must commute with.
    pub fn syndrome_checks(&self, side: Side) -> &F2Matrix {
        match side {
            Side::X => &self.hz,
            Side::Z => &self.hx,
        }
    }

    /// The stabilizers of the given side.
    pub fn stabilizer_checks(&self, side: Side) -> &F2Matrix {
        match side {
            Side::X => &self.hx,
            Side::Z => &self.hz,
        }
    }

    /// The code with the roles of X and Z exchanged (the dual complex).
    pub fn dual(&self) -> CssCode {
        CssCode {
            n: self.n,
            hx: self.hz.clone(),
            hz: self.hx.clone(),
        }
    }

    /// The complex `Z-checks → qubits → X-checks` with `∂₂ = Hzᵀ`,
    /// `∂₁ = Hx`, cells labeled `Z{i}`, `q{i}`, `X{i}`.
    pub fn to_complex(&self) -> CellComplex {
        let names = |p: &str, k: usize| (0..k).map(|i| format!("{p}{i}")).collect();
        CellComplex::new(
            names("Z", self.hz.rows()),
            names("q", self.n),
            names("X", self.hx.rows()),
            self.hz.transpose(),
            self.hx.clone(),
        )
        .expect("shapes agree by construction")
    }

    /// Reads a code back from its complex (inverse of [`to_complex`]).
    ///
    /// [`to_complex`]: CssCode::to_complex
    pub fn from_complex(c: &CellComplex) -> Result<Self, CodeError> {
        Self::new(c.d1().clone(), c.d2().transpose())
    }

    /// True iff the operator of type `side` on `v` commutes with all checks.
    pub fn commutes_with(&self, side: Side, v: &F2Vector) -> Result<bool, CodeError> {
        self.check_len(v)?;
        Ok(self.syndrome_checks(side).mul_vec(v)?.is_zero())
    }

    /// True iff `v` lies in the row space of the side's stabilizers.
    pub fn is_stabilizer(&self, side: Side, v: &F2Vector) -> Result<bool, CodeError> {
        self.check_len(v)?;
        Ok(self.stabilizer_checks(side).transpose().solve(v)?.is_some())
    }

    /// True iff `v` represents a nontrivial logical of the given side.
    pub fn is_logical(&self, side: Side, v: &F2Vector) -> Result<bool, CodeError> {
        Ok(self.commutes_with(side, v)? && !self.is_stabilizer(side, v)?)
    }

    /// For each Z-check, its overlap with `ell` split into consecutive pairs
    /// of the sorted overlap. Fails on an odd overlap (X(ℓ) is then not a
    /// logical).
    pub fn overlap_pairs(&self, ell: &F2Vector) -> Result<Vec<Vec<(usize, usize)>>, CodeError> {
        self.check_len(ell)?;
        self.hz
            .row_supports()
            .iter()
            .enumerate()
            .map(|(check, row)| {
                let overlap: Vec<usize> = row.iter().copied().filter(|&q| ell.get(q)).collect();
                pair_up(check, &overlap)
            })
            .collect()
    }

    /// The same code as a stabilizer code (X-checks first, then Z-checks).
    pub fn to_stabilizer(&self) -> StabilizerCode {
        let mut gens = Vec::with_capacity(self.hx.rows() + self.hz.rows());
        for r in 0..self.hx.rows() {
            gens.push(PauliOp::x_type(self.hx.row_vector(r)));
        }
        for r in 0..self.hz.rows() {
            gens.push(PauliOp::z_type(self.hz.row_vector(r)));
        }
        StabilizerCode::new(self.n, gens).expect("CSS checks commute")
    }

    fn check_len(&self, v: &F2Vector) -> Result<(), CodeError> {
        if v.len() != self.n {
            return Err(CodeError::QubitMismatch(v.len(), self.n));
        }
        Ok(())
    }
}

pub(crate) fn pair_up(check: usize, overlap: &[usize]) -> Result<Vec<(usize, usize)>, CodeError> {
    if overlap.len() % 2 == 1 {
        return Err(CodeError::OddOverlap {
            check,
            size: overlap.len(),
        });
    }
    Ok(overlap.chunks(2).map(|c| (c[0], c[1])).collect())
}

/// An incrementally built row-echelon basis of dense bit rows.
#[derive(Clone, Debug)]
pub(crate) struct Span {
    words: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Span {
    pub(crate) fn new(len: usize) -> Self {
        Self {
            words: len.div_ceil(64).max(1),
            rows: Vec::new(),
        }
    }

    pub(crate) fn pack(&self, v: &F2Vector) -> Vec<u64> {
        let mut out = vec![0u64; self.words];
        for &i in v.support() {
            out[i / 64] ^= 1 << (i % 64);
        }
        out
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (p, row) in &self.rows {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        v
    }

    /// Adds `v` if independent; returns whether it was.
    pub(crate) fn insert(&mut self, v: &F2Vector) -> bool {
        let r = self.reduce(self.pack(v));
        let Some(w) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let pivot = w * 64 + r[w].trailing_zeros() as usize;
        // Keep the basis fully reduced on pivots so `reduce` is one pass.
        for (_, row) in &mut self.rows {
            if row[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(&r) {
                    *a ^= b;
                }
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

/// Representatives of a basis of the logicals of one side, `k` of them.
///
/// The Z side gives `H₁ = ker Hx / rowspace Hz`, the X side
/// `H¹ = ker Hz / rowspace Hx`. Representatives are taken greedily from a
/// kernel basis, skipping vectors dependent on the stabilizers and on the
/// representatives already chosen.
pub fn logical_reps(code: &CssCode, side: Side) -> Vec<F2Vector> {
    let mut span = Span::new(code.n);
    let stab = code.stabilizer_checks(side);
    for r in 0..stab.rows() {
        span.insert(&stab.row_vector(r));
    }
    code.syndrome_checks(side)
        .kernel_basis()
        .into_iter()
        .filter(|v| span.insert(v))
        .collect()
}

//! Pauli operators and stabilizer codes in symplectic form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use cs_core::{F2Matrix, F2Vector};

use crate::{CodeError, CssCode};

/// A single-qubit Pauli, phase ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// From the symplectic bits `(x, z)`.
    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    /// The symplectic bits `(x, z)`.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

impl TryFrom<char> for Pauli {
    type Error = CodeError;
    fn try_from(c: char) -> Result<Self, CodeError> {
        match c {
            'I' | 'i' | '_' | '.' => Ok(Pauli::I),
            'X' | 'x' => Ok(Pauli::X),
            'Y' | 'y' => Ok(Pauli::Y),
            'Z' | 'z' => Ok(Pauli::Z),
            _ => Err(CodeError::BadPauli(c)),
        }
    }
}

/// An `n`-qubit Pauli operator `X(x)Z(z)` up to phase.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliOp {
    x: F2Vector,
    z: F2Vector,
}

impl PauliOp {
    pub fn new(x: F2Vector, z: F2Vector) -> Result<Self, CodeError> {
        if x.len() != z.len() {
            return Err(CodeError::QubitMismatch(x.len(), z.len()));
        }
        Ok(Self { x, z })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            x: F2Vector::zeros(n),
            z: F2Vector::zeros(n),
        }
    }

    /// `X(v)`.
    pub fn x_type(v: F2Vector) -> Self {
        let n = v.len();
        Self {
            x: v,
            z: F2Vector::zeros(n),
        }
    }

    /// `Z(v)`.
    pub fn z_type(v: F2Vector) -> Self {
        let n = v.len();
        Self {
            x: F2Vector::zeros(n),
            z: v,
        }
    }

    pub fn from_paulis(ps: &[Pauli]) -> Self {
        let x: Vec<bool> = ps.iter().map(|p| p.bits().0).collect();
        let z: Vec<bool> = ps.iter().map(|p| p.bits().1).collect();
        Self {
            x: F2Vector::from_bits(&x),
            z: F2Vector::from_bits(&z),
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &F2Vector {
        &self.x
    }

    pub fn z(&self) -> &F2Vector {
        &self.z
    }

    pub fn get(&self, qubit: usize) -> Pauli {
        Pauli::from_bits(self.x.get(qubit), self.z.get(qubit))
    }

    /// The operator with qubit `qubit` replaced by `p`.
    pub fn with(&self, qubit: usize, p: Pauli) -> Self {
        let mut xs = self.x.to_bits();
        let mut zs = self.z.to_bits();
        (xs[qubit], zs[qubit]) = p.bits();
        Self {
            x: F2Vector::from_bits(&xs),
            z: F2Vector::from_bits(&zs),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// True iff the operator is `X(v)` for some `v`.
    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// Qubits acted on nontrivially, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .x
            .support()
            .iter()
            .chain(self.z.support())
            .copied()
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn weight(&self) -> usize {
        self.support().len()
    }

    /// The symplectic form `x·z' + z·x'`: true iff the operators commute.
    pub fn commutes(&self, other: &Self) -> Result<bool, CodeError> {
        if self.n() != other.n() {
            return Err(CodeError::QubitMismatch(self.n(), other.n()));
        }
        Ok(self.x.dot(&other.z)? == self.z.dot(&other.x)?)
    }

    /// The product, phase dropped.
    pub fn mul(&self, other: &Self) -> Result<Self, CodeError> {
        Ok(Self {
            x: self.x.add(&other.x)?,
            z: self.z.add(&other.z)?,
        })
    }

    /// The operator extended by identities to `n` qubits.
    pub fn padded(&self, n: usize) -> Result<Self, CodeError> {
        Ok(Self {
            x: self.x.padded(n)?,
            z: self.z.padded(n)?,
        })
    }

    /// The restriction to the first `n` qubits.
    pub fn restricted(&self, n: usize) -> Self {
        let cut = |v: &F2Vector| {
            F2Vector::from_support(n, v.support().iter().copied().filter(|&i| i < n))
                .expect("positions below n")
        };
        Self {
            x: cut(&self.x),
            z: cut(&self.z),
        }
    }

    /// The row `(x | z)` of length `2n`.
    pub fn symplectic(&self) -> F2Vector {
        let n = self.n();
        F2Vector::from_support(
            2 * n,
            self.x
                .support()
                .iter()
                .copied()
                .chain(self.z.support().iter().map(|&i| i + n)),
        )
        .expect("disjoint halves")
    }

    pub fn from_symplectic(v: &F2Vector) -> Result<Self, CodeError> {
        if v.len() % 2 == 1 {
            return Err(CodeError::Parse {
                line: 0,
                msg: format!("symplectic vector of odd length {}", v.len()),
            });
        }
        let n = v.len() / 2;
        let (xs, zs): (Vec<usize>, Vec<usize>) = v.support().iter().partition(|&&i| i < n);
        Ok(Self {
            x: F2Vector::from_support(n, xs)?,
            z: F2Vector::from_support(n, zs.into_iter().map(|i| i - n))?,
        })
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n() {
            write!(f, "{}", self.get(q).symbol())?;
        }
        Ok(())
    }
}

impl FromStr for PauliOp {
    type Err = CodeError;

    /// Parses a dense string such as `XIZY`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, CodeError> {
        let ps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(Pauli::try_from)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_paulis(&ps))
    }
}

/// The support of `op` with the local Pauli on each supported qubit:
/// `(1,0) → X`, `(1,1) → Y`, `(0,1) → Z`.
pub fn pauli_weight_support(op: &PauliOp) -> BTreeMap<usize, Pauli> {
    op.support().into_iter().map(|q| (q, op.get(q))).collect()
}

/// A stabilizer code given by (possibly dependent) commuting generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliOp>,
}

impl StabilizerCode {
    pub fn new(n: usize, generators: Vec<PauliOp>) -> Result<Self, CodeError> {
        for g in &generators {
            if g.n() != n {
                return Err(CodeError::QubitMismatch(g.n(), n));
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for (j, b) in generators.iter().enumerate().skip(i + 1) {
                if !a.commutes(b)? {
                    return Err(CodeError::NonCommuting(format!("g{i}"), format!("g{j}")));
                }
            }
        }
        Ok(Self { n, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOp] {
        &self.generators
    }

    /// The `m × 2n` matrix with rows `(x | z)`.
    pub fn symplectic_matrix(&self) -> F2Matrix {
        let rows: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| g.symplectic().support().to_vec())
            .collect();
        F2Matrix::from_rows(2 * self.n, &rows).expect("entries within 2n columns")
    }

    pub fn from_symplectic_matrix(m: &F2Matrix) -> Result<Self, CodeError> {
        if m.cols() % 2 == 1 {
            return Err(CodeError::Parse {
                line: 1,
                msg: format!(
                    "a symplectic matrix needs an even column count, got {}",
                    m.cols()
                ),
            });
        }
        let gens = (0..m.rows())
            .map(|r| PauliOp::from_symplectic(&m.row_vector(r)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(m.cols() / 2, gens)
    }

    /// Number of logical qubits, `n − rank`.
    pub fn k(&self) -> usize {
        self.n - self.symplectic_matrix().rank()
    }

    /// The first generator anticommuting with `p`, if any.
    pub fn first_anticommuting(&self, p: &PauliOp) -> Result<Option<usize>, CodeError> {
        for (i, g) in self.generators.iter().enumerate() {
            if !g.commutes(p)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// True iff `p` (up to phase) is a product of generators.
    pub fn in_group(&self, p: &PauliOp) -> Result<bool, CodeError> {
        if p.n() != self.n {
            return Err(CodeError::QubitMismatch(p.n(), self.n));
        }
        Ok(self
            .symplectic_matrix()
            .transpose()
            .solve(&p.symplectic())?
            .is_some())
    }

    /// True iff `p` commutes with every generator but is not in the group.
    pub fn is_logical(&self, p: &PauliOp) -> Result<bool, CodeError> {
        Ok(self.first_anticommuting(p)?.is_none() && !self.in_group(p)?)
    }

    /// The CSS form, if every generator is X-type or Z-type.
    pub fn as_css(&self) -> Option<CssCode> {
        let mut xs = Vec::new();
        let mut zs = Vec::new();
        for g in &self.generators {
            if g.is_identity() {
                continue;
            } else if g.is_x_type() {
                xs.push(g.x().support().to_vec());
            } else if g.is_z_type() {
                zs.push(g.z().support().to_vec());
            } else {
                return None;
            }
        }
        let hx = F2Matrix::from_rows(self.n, &xs).ok()?;
        let hz = F2Matrix::from_rows(self.n, &zs).ok()?;
        CssCode::new(hx, hz).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> PauliOp {
        s.parse().unwrap()
    }

    #[test]
    fn weight_support_examples() {
        let m = pauli_weight_support(&op("XI"));
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(0, Pauli::X)]);
        let m = pauli_weight_support(&op("Y"));
        assert_eq!(m[&0], Pauli::Y);
        let x = F2Vector::from_support(2, [1]).unwrap();
        let m = pauli_weight_support(&PauliOp::new(x.clone(), x).unwrap());
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(1, Pauli::Y)]);
    }

    #[test]
    fn commutation() {
        assert!(op("XX").commutes(&op("ZZ")).unwrap());
        assert!(!op("XI").commutes(&op("ZI")).unwrap());
        assert!(op("XI").commutes(&op("XI")).unwrap());
        assert!(!op("YI").commutes(&op("ZI")).unwrap());
        assert_eq!(op("XIZ").mul(&op("ZIZ")).unwrap(), op("YII"));
    }

    #[test]
    fn bell_pair_code() {
        let code = StabilizerCode::new(2, vec![op("XX"), op("ZZ")]).unwrap();
        assert_eq!(code.k(), 0);
        assert!(code.in_group(&op("YY")).unwrap());
        assert!(StabilizerCode::new(2, vec![op("XI"), op("ZI")]).is_err());
        assert!(code.as_css().is_some());
    }

    #[test]
    fn symplectic_round_trip() {
        let code = StabilizerCode::new(3, vec![op("XZI"), op("ZXZ")]).unwrap();
        let again = StabilizerCode::from_symplectic_matrix(&code.symplectic_matrix()).unwrap();
        assert_eq!(again, code);
        assert_eq!(code.k(), 1);
        assert!(code.as_css().is_none());
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(op("XIZY").to_string(), "XIZY");
        assert!("XQ".parse::<PauliOp>().is_err());
    }
}

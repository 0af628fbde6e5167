//! Small standard codes used in tests, examples and the CLI.

use cs_core::F2Matrix;

use crate::{CssCode, PauliOp, StabilizerCode};

/// The `[[4,2,2]]` code: one all-ones X-check and one all-ones Z-check.
pub fn four_two_two() -> CssCode {
    let row = F2Matrix::from_rows(4, &[vec![0, 1, 2, 3]]).expect("valid row");
    CssCode::new(row.clone(), row).expect("checks commute")
}

/// The parity-check matrix of the `[7,4,3]` Hamming code (column `j` is the
/// binary expansion of `j + 1`).
pub fn hamming7() -> F2Matrix {
    let rows: Vec<Vec<usize>> = (0..3)
        .map(|b| (0..7).filter(|j| (j + 1) >> b & 1 == 1).collect())
        .collect();
    F2Matrix::from_rows(7, &rows).expect("valid rows")
}

/// The Steane `[[7,1,3]]` code, `Hx = Hz = ` Hamming.
pub fn steane() -> CssCode {
    CssCode::new(hamming7(), hamming7()).expect("checks commute")
}

/// The parity checks of a length-`n` repetition code (`n − 1` rows), or of
/// the cyclic one (`n` rows) when `cyclic`.
pub fn repetition(n: usize, cyclic: bool) -> F2Matrix {
    let count = if cyclic { n } else { n.saturating_sub(1) };
    let rows: Vec<Vec<usize>> = (0..count)
        .map(|i| {
            let mut r = vec![i, (i + 1) % n];
            r.sort_unstable();
            r.dedup();
            r
        })
        .collect();
    F2Matrix::from_rows(n, &rows).expect("valid rows")
}

fn kron(a: &F2Matrix, b: &F2Matrix) -> F2Matrix {
    let entries = a.entries().flat_map(|(ra, ca)| {
        b.entries()
            .map(move |(rb, cb)| (ra * b.rows() + rb, ca * b.cols() + cb))
    });
    F2Matrix::from_entries(
        a.rows() * b.rows(),
        a.cols() * b.cols(),
        entries.collect::<Vec<_>>(),
    )
    .expect("disjoint blocks")
}

/// The hypergraph product of classical checks `h1` (`m₁ × n₁`) and `h2`
/// (`m₂ × n₂`), on `n₁n₂ + m₁m₂` qubits:
/// `Hx = [h1 ⊗ I | I ⊗ h2ᵀ]`, `Hz = [I ⊗ h2 | h1ᵀ ⊗ I]`.
pub fn hypergraph_product(h1: &F2Matrix, h2: &F2Matrix) -> CssCode {
    let (m1, n1) = (h1.rows(), h1.cols());
    let (m2, n2) = (h2.rows(), h2.cols());
    let hx = F2Matrix::hstack(&[
        &kron(h1, &F2Matrix::identity(n2)),
        &kron(&F2Matrix::identity(m1), &h2.transpose()),
    ])
    .expect("equal row counts");
    let hz = F2Matrix::hstack(&[
        &kron(&F2Matrix::identity(n1), h2),
        &kron(&h1.transpose(), &F2Matrix::identity(m2)),
    ])
    .expect("equal row counts");
    CssCode::new(hx, hz).expect("hypergraph products commute")
}

/// The `L × L` toric code (`2L²` qubits, `k = 2`, `d = L`).
pub fn toric(l: usize) -> CssCode {
    let r = repetition(l, true);
    hypergraph_product(&r, &r)
}

/// The `[[5,1,3]]` perfect code (cyclic shifts of `XZZXI`), the smallest
/// code that is not CSS.
pub fn five_qubit() -> StabilizerCode {
    let gens = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
        .iter()
        .map(|s| s.parse::<PauliOp>().expect("valid Pauli string"))
        .collect();
    StabilizerCode::new(5, gens).expect("generators commute")
}

//! Basis-labeled chain complexes of length at most three.
//!
//! A [`CellComplex`] is `C₂ --d2--> C₁ --d1--> C₀` over GF(2) together with a
//! name for every basis cell. Graphs are complexes with `C₂ = 0`; CSS codes
//! are complexes `Z-checks → qubits → X-checks`.
//!
//! Two kinds of maps appear:
//!
//! - [`ChainMap`] preserves degree (`g∂ = ∂g`);
//! - [`ConeMap`] lowers degree by one, `gᵢ : Aᵢ → Dᵢ₋₁`, and is the input to
//!   [`mapping_cone`], whose cells in degree `i` are `Aᵢ ⊔ Dᵢ` and whose
//!   boundary is the block matrix `[[∂A, 0], [g, ∂D]]`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2::{F2Error, F2Matrix};

/// Errors raised while building or checking complexes and maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("duplicate label {label:?} in degree {degree}")]
    DuplicateLabel { degree: usize, label: String },
    #[error("boundary of boundary is nonzero")]
    NotAComplex,
    #[error("map does not commute with the differentials: {0}")]
    NotAChainMap(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid complex JSON: {0}")]
    Json(String),
    #[error(transparent)]
    F2(#[from] F2Error),
}

/// A complex `C₂ → C₁ → C₀` with labeled cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    labels: [Vec<String>; 3],
    d2: F2Matrix,
    d1: F2Matrix,
}

/// Homology dimensions `(h2, h1, h0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Homology {
    pub h2: usize,
    pub h1: usize,
    pub h0: usize,
}

impl Homology {
    pub const fn new(h2: usize, h1: usize, h0: usize) -> Self {
        Self { h2, h1, h0 }
    }

    /// The homology of a contractible complex.
    pub const POINT: Homology = Homology::new(0, 0, 1);

    pub fn reversed(self) -> Self {
        Self::new(self.h0, self.h1, self.h2)
    }
}

impl fmt::Display for Homology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.h2, self.h1, self.h0)
    }
}

/// Maximum column weights of `d2`, `d2ᵀ`, `d1`, `d1ᵀ`.
///
/// For a code these are the Z-check weight, qubit Z-degree, qubit X-degree
/// and X-check weight; for a cone they are face size, edge-face degree, edge
/// size (2) and vertex degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDiagram {
    pub w21: usize,
    pub q21: usize,
    pub w10: usize,
    pub q10: usize,
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "w21={} q21={} w10={} q10={}",
            self.w21, self.q21, self.w10, self.q10
        )
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    schema: u32,
    labels2: Vec<String>,
    labels1: Vec<String>,
    labels0: Vec<String>,
    d2: F2Matrix,
    d1: F2Matrix,
}

impl CellComplex {
    /// Builds a complex, checking shapes and label uniqueness. The condition
    /// `d1·d2 = 0` is checked separately by [`verify_complex`] so that broken
    /// inputs can still be represented and reported.
    pub fn new(
        labels2: Vec<String>,
        labels1: Vec<String>,
        labels0: Vec<String>,
        d2: F2Matrix,
        d1: F2Matrix,
    ) -> Result<Self, ChainError> {
        if d2.cols() != labels2.len() || d2.rows() != labels1.len() {
            return Err(ChainError::Shape(format!(
                "d2 is {}x{} but there are {} 2-cells and {} 1-cells",
                d2.rows(),
                d2.cols(),
                labels2.len(),
                labels1.len()
            )));
        }
        if d1.cols() != labels1.len() || d1.rows() != labels0.len() {
            return Err(ChainError::Shape(format!(
                "d1 is {}x{} but there are {} 1-cells and {} 0-cells",
                d1.rows(),
                d1.cols(),
                labels1.len(),
                labels0.len()
            )));
        }
        let labels = [labels0, labels1, labels2];
        for (degree, ls) in labels.iter().enumerate() {
            let mut seen = HashSet::with_capacity(ls.len());
            for l in ls {
                if !seen.insert(l.as_str()) {
                    return Err(ChainError::DuplicateLabel {
                        degree,
                        label: l.clone(),
                    });
                }
            }
        }
        Ok(Self { labels, d2, d1 })
    }

    /// The empty complex.
    pub fn empty() -> Self {
        Self {
            labels: Default::default(),
            d2: F2Matrix::zeros(0, 0),
            d1: F2Matrix::zeros(0, 0),
        }
    }

    /// A graph as a complex with no 2-cells. Parallel edges are allowed,
    /// self-loops are not.
    pub fn graph(
        vertex_labels: Vec<String>,
        edge_labels: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<Self, ChainError> {
        if edges.len() != edge_labels.len() {
            return Err(ChainError::Shape(format!(
                "{} edges but {} edge labels",
                edges.len(),
                edge_labels.len()
            )));
        }
        let mut entries = Vec::with_capacity(2 * edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(ChainError::SelfLoop(u));
            }
            entries.push((u, i));
            entries.push((v, i));
        }
        let d1 = F2Matrix::from_entries(vertex_labels.len(), edges.len(), entries)?;
        let d2 = F2Matrix::zeros(edges.len(), 0);
        Self::new(Vec::new(), edge_labels, vertex_labels, d2, d1)
    }

    /// Number of cells in the given degree (0, 1 or 2; higher degrees are 0).
    pub fn dim(&self, degree: usize) -> usize {
        self.labels.get(degree).map_or(0, Vec::len)
    }

    pub fn labels(&self, degree: usize) -> &[String] {
        &self.labels[degree]
    }

    pub fn d2(&self) -> &F2Matrix {
        &self.d2
    }

    pub fn d1(&self) -> &F2Matrix {
        &self.d1
    }

    /// Map from label to index for one degree.
    pub fn label_index(&self, degree: usize) -> HashMap<&str, usize> {
        self.labels[degree]
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect()
    }

    /// Index of a labeled cell.
    pub fn find(&self, degree: usize, label: &str) -> Option<usize> {
        self.labels[degree].iter().position(|l| l == label)
    }

    /// Direct sum; labels must stay distinct across summands.
    pub fn direct_sum(parts: &[&CellComplex]) -> Result<Self, ChainError> {
        let d2s: Vec<&F2Matrix> = parts.iter().map(|p| &p.d2).collect();
        let d1s: Vec<&F2Matrix> = parts.iter().map(|p| &p.d1).collect();
        let cat = |deg: usize| -> Vec<String> {
            parts
                .iter()
                .flat_map(|p| p.labels[deg].iter().cloned())
                .collect()
        };
        Self::new(
            cat(2),
            cat(1),
            cat(0),
            F2Matrix::block_diag(&d2s),
            F2Matrix::block_diag(&d1s),
        )
    }

    /// Serializes to the versioned JSON format.
    pub fn to_json(&self) -> String {
        let j = ComplexJson {
            schema: 1,
            labels2: self.labels[2].clone(),
            labels1: self.labels[1].clone(),
            labels0: self.labels[0].clone(),
            d2: self.d2.clone(),
            d1: self.d1.clone(),
        };
        serde_json::to_string(&j).expect("complex serialization cannot fail")
    }

    /// Parses the JSON format written by [`CellComplex::to_json`].
    pub fn from_json(text: &str) -> Result<Self, ChainError> {
        let j: ComplexJson =
            serde_json::from_str(text).map_err(|e| ChainError::Json(e.to_string()))?;
        if j.schema != 1 {
            return Err(ChainError::Json(format!("unsupported schema {}", j.schema)));
        }
        Self::new(j.labels2, j.labels1, j.labels0, j.d2, j.d1)
    }
}

/// True iff `d1·d2 = 0`.
pub fn verify_complex(c: &CellComplex) -> bool {
    c.d1.mul(&c.d2).map(|p| p.is_zero()).unwrap_or(false)
}

/// Homology dimensions `hᵢ = dim ker ∂ᵢ − rank ∂ᵢ₊₁`.
pub fn homology_dims(c: &CellComplex) -> Homology {
    let r2 = c.d2.rank();
    let r1 = c.d1.rank();
    Homology {
        h2: c.dim(2) - r2,
        h1: c.dim(1) - r1 - r2,
        h0: c.dim(0) - r1,
    }
}

/// The cocomplex read as a complex: degrees reversed, matrices transposed.
pub fn transpose_complex(c: &CellComplex) -> CellComplex {
    CellComplex {
        labels: [
            c.labels[2].clone(),
            c.labels[1].clone(),
            c.labels[0].clone(),
        ],
        d2: c.d1.transpose(),
        d1: c.d2.transpose(),
    }
}

/// Exact maximum column weights of `d2`, `d2ᵀ`, `d1`, `d1ᵀ`.
pub fn weight_audit(c: &CellComplex) -> WeightDiagram {
    WeightDiagram {
        w21: c.d2.max_col_weight(),
        q21: c.d2.max_row_weight(),
        w10: c.d1.max_col_weight(),
        q10: c.d1.max_row_weight(),
    }
}

/// A degree-preserving map `gᵢ : Aᵢ → Dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub g2: F2Matrix,
    pub g1: F2Matrix,
    pub g0: F2Matrix,
}

impl ChainMap {
    pub fn identity(c: &CellComplex) -> Self {
        Self {
            g2: F2Matrix::identity(c.dim(2)),
            g1: F2Matrix::identity(c.dim(1)),
            g0: F2Matrix::identity(c.dim(0)),
        }
    }

    pub fn zero(source: &CellComplex, target: &CellComplex) -> Self {
        Self {
            g2: F2Matrix::zeros(target.dim(2), source.dim(2)),
            g1: F2Matrix::zeros(target.dim(1), source.dim(1)),
            g0: F2Matrix::zeros(target.dim(0), source.dim(0)),
        }
    }
}

/// Checks `g∂ = ∂g` in both adjacent degree pairs.
pub fn verify_chain_map(
    g: &ChainMap,
    source: &CellComplex,
    target: &CellComplex,
) -> Result<bool, ChainError> {
    for (deg, m) in [(2, &g.g2), (1, &g.g1), (0, &g.g0)] {
        if m.cols() != source.dim(deg) || m.rows() != target.dim(deg) {
            return Err(ChainError::Shape(format!(
                "g{deg} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                target.dim(deg),
                source.dim(deg)
            )));
        }
    }
    let top = g.g1.mul(&source.d2)? == target.d2.mul(&g.g2)?;
    let bottom = g.g0.mul(&source.d1)? == target.d1.mul(&g.g1)?;
    Ok(top && bottom)
}

/// A degree-lowering map `g : A → D[−1]` with `g2 : A₂ → D₁` and
/// `g1 : A₁ → D₀` (the component out of `A₀` is necessarily zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeMap {
    pub g2: F2Matrix,
    pub g1: F2Matrix,
}

impl ConeMap {
    pub fn zero(a: &CellComplex, d: &CellComplex) -> Self {
        Self {
            g2: F2Matrix::zeros(d.dim(1), a.dim(2)),
            g1: F2Matrix::zeros(d.dim(0), a.dim(1)),
        }
    }

    fn check_shape(&self, a: &CellComplex, d: &CellComplex) -> Result<(), ChainError> {
        if self.g2.cols() != a.dim(2) || self.g2.rows() != d.dim(1) {
            return Err(ChainError::Shape(format!(
                "g2 is {}x{}, expected {}x{}",
                self.g2.rows(),
                self.g2.cols(),
                d.dim(1),
                a.dim(2)
            )));
        }
        if self.g1.cols() != a.dim(1) || self.g1.rows() != d.dim(0) {
            return Err(ChainError::Shape(format!(
                "g1 is {}x{}, expected {}x{}",
                self.g1.rows(),
                self.g1.cols(),
                d.dim(0),
                a.dim(1)
            )));
        }
        Ok(())
    }

    /// Checks `g1·∂A₂ = ∂D₁·g2`, the only nontrivial commutation condition.
    pub fn commutes(&self, a: &CellComplex, d: &CellComplex) -> Result<bool, ChainError> {
        self.check_shape(a, d)?;
        Ok(self.g1.mul(a.d2())? == d.d1().mul(&self.g2)?)
    }
}

/// The mapping cone of `g : A → D[−1]`: cells `Aᵢ ⊔ Dᵢ` (A first) with
/// boundary `[[∂A, 0], [g, ∂D]]`.
pub fn mapping_cone(
    a: &CellComplex,
    d: &CellComplex,
    g: &ConeMap,
) -> Result<CellComplex, ChainError> {
    if !g.commutes(a, d)? {
        return Err(ChainError::NotAChainMap(
            "g1·dA2 differs from dD1·g2".into(),
        ));
    }
    let d2 = F2Matrix::block2x2(a.d2(), &F2Matrix::zeros(a.dim(1), d.dim(2)), &g.g2, d.d2())?;
    let d1 = F2Matrix::block2x2(a.d1(), &F2Matrix::zeros(a.dim(0), d.dim(1)), &g.g1, d.d1())?;
    let cat = |deg: usize| -> Vec<String> {
        a.labels(deg).iter().chain(d.labels(deg)).cloned().collect()
    };
    CellComplex::new(cat(2), cat(1), cat(0), d2, d1)
}

/// Outcome of checking cone homology against the long exact sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnakeReport {
    /// Dimensions predicted from `H(A)`, `H(D)` and the ranks of the
    /// connecting maps `[g] : Hᵢ(A) → Hᵢ₋₁(D)`.
    pub predicted: Homology,
    /// Dimensions computed directly on the cone.
    pub actual: Homology,
    /// Ranks of `[g2]` and `[g1]` on homology.
    pub connecting_ranks: (usize, usize),
}

impl SnakeReport {
    pub fn consistent(&self) -> bool {
        self.predicted == self.actual
    }
}

/// Rank of the map induced on homology by `g : Aᵢ → Dᵢ₋₁`, given the
/// boundary `da` out of `Aᵢ` and the boundary `dd` into `Dᵢ₋₁`.
fn induced_rank(g: &F2Matrix, da: &F2Matrix, dd: &F2Matrix) -> Result<usize, ChainError> {
    let cycles = da.kernel_basis();
    let z = F2Matrix::from_columns(
        da.cols(),
        cycles.iter().map(|v| v.support().to_vec()).collect(),
    )?;
    let gz = g.mul(&z)?;
    Ok(F2Matrix::hstack(&[&gz, dd])?.rank() - dd.rank())
}

/// Verifies the cone's homology against the long exact sequence of
/// `0 → D → cone(g) → A → 0`:
///
/// `dim Hᵢ(cone) = (hᵢ(D) − r_{i+1}) + (hᵢ(A) − rᵢ)` where `rᵢ` is the rank
/// of the connecting map `[gᵢ] : Hᵢ(A) → Hᵢ₋₁(D)`.
///
/// When `H₁` of both rows vanishes this reduces to the statement that
/// `H₁(cone)` and `H₀(cone)` are the kernel and cokernel of `[g₁]`.
pub fn snake_check(
    a: &CellComplex,
    d: &CellComplex,
    g: &ConeMap,
    cone: &CellComplex,
) -> Result<SnakeReport, ChainError> {
    g.check_shape(a, d)?;
    let ha = homology_dims(a);
    let hd = homology_dims(d);
    let r2 = induced_rank(&g.g2, a.d2(), d.d2())?;
    let r1 = induced_rank(&g.g1, a.d1(), d.d1())?;
    let predicted = Homology {
        h2: hd.h2 + (ha.h2 - r2),
        h1: (hd.h1 - r2) + (ha.h1 - r1),
        h0: (hd.h0 - r1) + ha.h0,
    };
    Ok(SnakeReport {
        predicted,
        actual: homology_dims(cone),
        connecting_ranks: (r2, r1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(prefix: &str, n: usize) -> Vec<String> {
        (0..n).map(|i| format!("{prefix}{i}")).collect()
    }

    fn triangle(with_face: bool) -> CellComplex {
        let g =
            CellComplex::graph(names("v", 3), names("e", 3), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        if !with_face {
            return g;
        }
        let d2 = F2Matrix::from_columns(3, vec![vec![0, 1, 2]]).unwrap();
        CellComplex::new(
            names("f", 1),
            names("e", 3),
            names("v", 3),
            d2,
            g.d1().clone(),
        )
        .unwrap()
    }

    #[test]
    fn verify_examples() {
        assert!(verify_complex(&CellComplex::empty()));
        assert!(verify_complex(&triangle(true)));
        let t = triangle(false);
        let bad = CellComplex::new(
            names("f", 1),
            names("e", 3),
            names("v", 3),
            F2Matrix::from_columns(3, vec![vec![0]]).unwrap(),
            t.d1().clone(),
        )
        .unwrap();
        assert!(!verify_complex(&bad));
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology_dims(&triangle(false)), Homology::new(0, 1, 1));
        assert_eq!(homology_dims(&triangle(true)), Homology::new(0, 0, 1));
    }

    #[test]
    fn transpose_examples() {
        let t = triangle(true);
        let tt = transpose_complex(&t);
        assert_eq!(homology_dims(&tt), Homology::new(1, 0, 0));
        assert_eq!(transpose_complex(&tt), t);
    }

    #[test]
    fn weights_of_triangle() {
        let w = weight_audit(&triangle(false));
        assert_eq!((w.w10, w.q10), (2, 2));
    }

    #[test]
    fn rejects_bad_shapes_and_labels() {
        assert!(matches!(
            CellComplex::graph(
                names("v", 2),
                vec!["e".into(), "e".into()],
                &[(0, 1), (0, 1)]
            ),
            Err(ChainError::DuplicateLabel { degree: 1, .. })
        ));
        assert!(matches!(
            CellComplex::graph(names("v", 2), names("e", 1), &[(1, 1)]),
            Err(ChainError::SelfLoop(1))
        ));
        assert!(CellComplex::new(
            vec![],
            names("e", 1),
            names("v", 2),
            F2Matrix::zeros(2, 0),
            F2Matrix::zeros(2, 1)
        )
        .is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = triangle(true);
        assert_eq!(CellComplex::from_json(&t.to_json()).unwrap(), t);
        assert!(CellComplex::from_json("{}").is_err());
    }

    #[test]
    fn chain_map_identity_and_zero() {
        let t = triangle(true);
        assert!(verify_chain_map(&ChainMap::identity(&t), &t, &t).unwrap());
        assert!(verify_chain_map(&ChainMap::zero(&t, &t), &t, &t).unwrap());
        let mut bad = ChainMap::identity(&t);
        bad.g0 = bad.g0.with_toggled(0, 1).unwrap();
        assert!(!verify_chain_map(&bad, &t, &t).unwrap());
    }

    /// A as one vertex shifted up to degree 1, D two vertices, g(a) = u + v:
    /// the cone is a single edge.
    #[test]
    fn cone_of_point_into_two_points_is_an_edge() {
        let a = CellComplex::new(
            vec![],
            names("a", 1),
            vec![],
            F2Matrix::zeros(1, 0),
            F2Matrix::zeros(0, 1),
        )
        .unwrap();
        let d = CellComplex::graph(names("v", 2), vec![], &[]).unwrap();
        let g = ConeMap {
            g2: F2Matrix::zeros(0, 0),
            g1: F2Matrix::from_columns(2, vec![vec![0, 1]]).unwrap(),
        };
        let c = mapping_cone(&a, &d, &g).unwrap();
        assert!(verify_complex(&c));
        assert_eq!(homology_dims(&c), Homology::new(0, 0, 1));
        assert!(snake_check(&a, &d, &g, &c).unwrap().consistent());
    }

    /// Identity from a point (shifted) onto a point kills everything.
    #[test]
    fn cone_of_identity_is_acyclic() {
        let a = CellComplex::new(
            vec![],
            names("a", 1),
            vec![],
            F2Matrix::zeros(1, 0),
            F2Matrix::zeros(0, 1),
        )
        .unwrap();
        let d = CellComplex::graph(names("v", 1), vec![], &[]).unwrap();
        let g = ConeMap {
            g2: F2Matrix::zeros(0, 0),
            g1: F2Matrix::identity(1),
        };
        let c = mapping_cone(&a, &d, &g).unwrap();
        assert_eq!(homology_dims(&c), Homology::new(0, 0, 0));
        let report = snake_check(&a, &d, &g, &c).unwrap();
        assert!(report.consistent());
        assert_eq!(report.connecting_ranks, (0, 1));
    }

    #[test]
    fn zero_cone_is_direct_sum() {
        let t = triangle(false);
        let f = triangle(true);
        let relabel = |c: &CellComplex, p: &str| {
            CellComplex::new(
                c.labels(2).iter().map(|l| format!("{p}{l}")).collect(),
                c.labels(1).iter().map(|l| format!("{p}{l}")).collect(),
                c.labels(0).iter().map(|l| format!("{p}{l}")).collect(),
                c.d2().clone(),
                c.d1().clone(),
            )
            .unwrap()
        };
        let (a, d) = (relabel(&t, "a"), relabel(&f, "d"));
        let g = ConeMap::zero(&a, &d);
        let c = mapping_cone(&a, &d, &g).unwrap();
        let (ha, hd, hc) = (homology_dims(&a), homology_dims(&d), homology_dims(&c));
        assert_eq!(
            hc,
            Homology::new(ha.h2 + hd.h2, ha.h1 + hd.h1, ha.h0 + hd.h0)
        );
        assert!(snake_check(&a, &d, &g, &c).unwrap().consistent());
    }

    #[test]
    fn non_commuting_cone_is_rejected() {
        let a = triangle(true);
        let d = triangle(false);
        let g = ConeMap {
            g2: F2Matrix::from_columns(3, vec![vec![0]]).unwrap(),
            g1: F2Matrix::zeros(3, 3),
        };
        assert!(matches!(
            mapping_cone(&a, &d, &g),
            Err(ChainError::NotAChainMap(_))
        ));
    }

    /// Random complexes: pick d2 arbitrary, then d1 with rows in the left
    /// null space of d2 so that d1·d2 = 0.
    fn arb_complex() -> impl Strategy<Value = CellComplex> {
        (0usize..6, 1usize..8, 0usize..6, any::<u64>()).prop_map(|(n2, n1, n0, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let d2 = F2Matrix::from_entries(
                n1,
                n2,
                (0..n1)
                    .flat_map(|r| (0..n2).map(move |c| (r, c)))
                    .filter(|_| rng.gen_bool(0.4))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let left_null = d2.transpose().kernel_basis();
            let rows: Vec<Vec<usize>> = (0..n0)
                .map(|_| {
                    let mut acc = crate::f2::F2Vector::zeros(n1);
                    for v in &left_null {
                        if rng.gen_bool(0.5) {
                            acc = acc.add(v).unwrap();
                        }
                    }
                    acc.support().to_vec()
                })
                .collect();
            let d1 = F2Matrix::from_rows(n1, &rows).unwrap();
            CellComplex::new(names("f", n2), names("e", n1), names("v", n0), d2, d1).unwrap()
        })
    }

    proptest! {
        #[test]
        fn euler_characteristic(c in arb_complex()) {
            prop_assert!(verify_complex(&c));
            let h = homology_dims(&c);
            prop_assert_eq!(
                c.dim(2) as i64 - c.dim(1) as i64 + c.dim(0) as i64,
                h.h2 as i64 - h.h1 as i64 + h.h0 as i64
            );
        }

        #[test]
        fn transpose_reverses_homology(c in arb_complex()) {
            prop_assert_eq!(homology_dims(&transpose_complex(&c)), homology_dims(&c).reversed());
        }

        #[test]
        fn json_round_trips(c in arb_complex()) {
            prop_assert_eq!(CellComplex::from_json(&c.to_json()).unwrap(), c);
        }
    }
}

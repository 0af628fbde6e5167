//! Measurement graphs and expander augmentation.

use std::collections::HashSet;

use cs_codes::{yz_overlap_pairs, CssCode, StabilizerCode};
use cs_core::F2Vector;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{certify, CheegerCertificate, Graph, GraphError};

/// The measurement graph of `X(ℓ)`: vertices are the qubits of `ℓ` (`f0`),
/// each edge is attributed to the check whose overlap pair it came from, or
/// to no check if it was added for expansion (`f1`).
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementGraph {
    graph: Graph,
    n_qubits: usize,
    qubits: Vec<usize>,
    checks: Vec<Option<usize>>,
    certificate: Option<CheegerCertificate>,
}

impl MeasurementGraph {
    /// Assembles a measurement graph from its parts. Vertex `v` sits on qubit
    /// `qubits[v]` (distinct, `< n_qubits`); edge `e` belongs to
    /// `checks[e]`.
    pub fn from_parts(
        graph: Graph,
        n_qubits: usize,
        qubits: Vec<usize>,
        checks: Vec<Option<usize>>,
    ) -> Result<Self, GraphError> {
        if qubits.len() != graph.n_vertices() || checks.len() != graph.n_edges() {
            return Err(GraphError::Mismatch(format!(
                "{} vertices / {} edges but {} qubits / {} edge tags",
                graph.n_vertices(),
                graph.n_edges(),
                qubits.len(),
                checks.len()
            )));
        }
        let mut seen = HashSet::new();
        for &q in &qubits {
            if q >= n_qubits || !seen.insert(q) {
                return Err(GraphError::Mismatch(format!(
                    "vertex qubit {q} is repeated or exceeds {n_qubits}"
                )));
            }
        }
        Ok(Self {
            graph,
            n_qubits,
            qubits,
            checks,
            certificate: None,
        })
    }

    fn from_pairs(ell: &F2Vector, pairs: Vec<Vec<(usize, usize)>>) -> Result<Self, GraphError> {
        let qubits = ell.support().to_vec();
        let index = |q: usize| qubits.binary_search(&q).expect("pairs lie inside ℓ");
        let mut edges = Vec::new();
        let mut checks = Vec::new();
        for (c, ps) in pairs.into_iter().enumerate() {
            for (a, b) in ps {
                edges.push((index(a), index(b)));
                checks.push(Some(c));
            }
        }
        let labels = qubits.iter().map(|q| format!("q{q}")).collect();
        Self::from_parts(Graph::new(labels, edges)?, ell.len(), qubits, checks)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of data qubits of the code.
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// `f0`: the data qubit of every vertex.
    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    /// `f1`: the check of every edge (`None` for augmentation edges).
    pub fn edge_checks(&self) -> &[Option<usize>] {
        &self.checks
    }

    /// The support `ℓ` as a vector.
    pub fn ell(&self) -> F2Vector {
        F2Vector::from_support(self.n_qubits, self.qubits.iter().copied())
            .expect("qubits validated")
    }

    pub fn vertex_of_qubit(&self, q: usize) -> Option<usize> {
        self.qubits.iter().position(|&x| x == q)
    }

    /// Number of edges mapped to no check.
    pub fn augmentation_edges(&self) -> usize {
        self.checks.iter().filter(|c| c.is_none()).count()
    }

    pub fn certificate(&self) -> Option<&CheegerCertificate> {
        self.certificate.as_ref()
    }

    /// Certifies the current graph and stores the result.
    pub fn certified(mut self) -> Result<Self, GraphError> {
        self.certificate = Some(certify(&self.graph)?);
        Ok(self)
    }
}

/// The measurement graph of `X(ℓ)` in a CSS code: one edge per overlap pair
/// of each Z-check (edges are attributed to Z-check indices).
pub fn build_measurement_graph_css(
    code: &CssCode,
    ell: &F2Vector,
) -> Result<MeasurementGraph, GraphError> {
    MeasurementGraph::from_pairs(ell, code.overlap_pairs(ell)?)
}

/// The measurement graph of `X(ℓ)` in a stabilizer code: one edge per pair
/// of each generator's Y/Z overlap with `ℓ` (edges are attributed to
/// generator indices).
pub fn build_measurement_graph(
    code: &StabilizerCode,
    ell: &F2Vector,
) -> Result<MeasurementGraph, GraphError> {
    MeasurementGraph::from_pairs(ell, yz_overlap_pairs(code, ell)?)
}

/// The default augmentation degree cap: `max(w·q, Δ + 1)` for check weight
/// `w`, qubit degree `q` and current maximum degree `Δ`.
pub fn default_degree_cap(check_weight: usize, qubit_degree: usize, current_max: usize) -> usize {
    (check_weight * qubit_degree).max(current_max + 1)
}

/// Parameters of [`augment_expander`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugmentOptions {
    pub degree_cap: usize,
    pub target: Ratio<u64>,
    pub seed: u64,
    /// Number of fresh attempts before giving up.
    pub retries: usize,
}

impl AugmentOptions {
    pub fn new(degree_cap: usize, target: Ratio<u64>, seed: u64) -> Self {
        Self {
            degree_cap,
            target,
            seed,
            retries: 32,
        }
    }
}

/// Adds edges mapped to no check until the certified Cheeger value reaches
/// the target.
///
/// Each round draws a random perfect matching on the vertices still below
/// the degree cap (skipping pairs that are already adjacent) and then
/// re-certifies. When no further edge fits, the attempt is discarded and a
/// new one starts from the original graph. Results depend only on the seed.
pub fn augment_expander(
    mg: &MeasurementGraph,
    opts: &AugmentOptions,
) -> Result<MeasurementGraph, GraphError> {
    let max = mg.graph.max_degree();
    if opts.degree_cap < max + 1 {
        return Err(GraphError::DegreeCap {
            cap: opts.degree_cap,
            max,
        });
    }
    if mg.graph.n_vertices() < 2 {
        return Ok(mg.clone());
    }
    let start = certify(&mg.graph)?;
    if start.meets(opts.target) {
        return Ok(MeasurementGraph {
            certificate: Some(start),
            ..mg.clone()
        });
    }
    let n = mg.graph.n_vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best = start.value;
    for _ in 0..opts.retries.max(1) {
        let mut g = mg.graph.clone();
        let mut checks = mg.checks.clone();
        let mut present: HashSet<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        loop {
            let deg = g.degrees();
            let mut open: Vec<usize> = (0..n).filter(|&v| deg[v] < opts.degree_cap).collect();
            open.shuffle(&mut rng);
            let mut added = 0;
            for pair in open.chunks_exact(2) {
                let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                if present.insert((u, v)) {
                    g.add_edge(u, v)?;
                    checks.push(None);
                    added += 1;
                }
            }
            if added == 0 {
                break;
            }
            if !g.is_connected() {
                continue;
            }
            let cert = certify(&g)?;
            best = best.max(cert.value);
            if cert.meets(opts.target) {
                return Ok(MeasurementGraph {
                    graph: g,
                    checks,
                    certificate: Some(cert),
                    ..mg.clone()
                });
            }
        }
    }
    Err(GraphError::BudgetExhausted {
        best,
        target: opts.target.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cs_codes::fixtures;

    #[test]
    fn four_two_two_graph() {
        let code = fixtures::four_two_two();
        let ell = F2Vector::from_support(4, [0, 1]).unwrap();
        let mg = build_measurement_graph_css(&code, &ell).unwrap();
        assert_eq!(mg.graph().n_vertices(), 2);
        assert_eq!(mg.graph().edges(), &[(0, 1)]);
        assert_eq!(mg.edge_checks(), &[Some(0)]);
        let same = build_measurement_graph(&code.to_stabilizer(), &ell).unwrap();
        // The stabilizer form lists the X-check first.
        assert_eq!(same.edge_checks(), &[Some(1)]);
    }

    #[test]
    fn steane_graph() {
        let code = fixtures::steane();
        // X on {0, 1, 2} is a weight-3 logical (columns 1, 2, 3 XOR to zero).
        let ell = F2Vector::from_support(7, [0, 1, 2]).unwrap();
        assert!(code.is_logical(cs_codes::Side::X, &ell).unwrap());
        let mg = build_measurement_graph_css(&code, &ell).unwrap();
        assert_eq!(mg.graph().n_vertices(), 3);
        for (e, &(u, v)) in mg.graph().edges().iter().enumerate() {
            let c = mg.edge_checks()[e].unwrap();
            let row = code.hz().row_vector(c);
            assert!(row.get(mg.qubits()[u]) && row.get(mg.qubits()[v]));
        }
    }

    #[test]
    fn odd_overlap_is_rejected() {
        let code = fixtures::four_two_two();
        let ell = F2Vector::from_support(4, [0]).unwrap();
        assert!(build_measurement_graph_css(&code, &ell).is_err());
    }

    #[test]
    fn augmentation_examples() {
        let code = fixtures::four_two_two();
        let ell = F2Vector::from_support(4, [0, 1]).unwrap();
        let mg = build_measurement_graph_css(&code, &ell).unwrap();
        let out =
            augment_expander(&mg, &AugmentOptions::new(2, Ratio::from_integer(1), 7)).unwrap();
        assert_eq!(out.graph(), mg.graph());
        assert!(matches!(
            augment_expander(&mg, &AugmentOptions::new(1, Ratio::from_integer(1), 7)),
            Err(GraphError::DegreeCap { cap: 1, max: 1 })
        ));

        let g = Graph::with_vertices(4, vec![(0, 1), (2, 3)]).unwrap();
        let mg =
            MeasurementGraph::from_parts(g, 4, vec![0, 1, 2, 3], vec![Some(0), Some(1)]).unwrap();
        let out =
            augment_expander(&mg, &AugmentOptions::new(3, Ratio::from_integer(1), 1)).unwrap();
        assert!(out.graph().is_connected());
        assert_eq!(&out.edge_checks()[..2], &[Some(0), Some(1)]);
        assert!(out.edge_checks()[2..].iter().all(Option::is_none));
        assert_eq!(out.qubits(), mg.qubits());
    }

    #[test]
    fn augmentation_is_seed_deterministic() {
        let g = Graph::with_vertices(10, vec![]).unwrap();
        let mg = MeasurementGraph::from_parts(g, 10, (0..10).collect(), vec![]).unwrap();
        let opts = AugmentOptions::new(4, Ratio::new(1, 2), 99);
        let a = augment_expander(&mg, &opts).unwrap();
        let b = augment_expander(&mg, &opts).unwrap();
        assert_eq!(a, b);
        assert!(a.graph().max_degree() <= 4);
    }
}

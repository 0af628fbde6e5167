//! The parsimonious cone of a bipartite graph.
//!
//! Vertices of the two parts get binary addresses `ŝ` (their index, written
//! on `h₀` resp. `h₁` bits) and each edge `e = v₀v₁` becomes the leaf
//! `ŝ(v₀)ŝ(v₁)`. A SWAP schedule rotates the address halves over `h = h₀ + h₁`
//! steps, so that in the last tree the same leaf sits below `ŝ(v₁)`. Each
//! edge is deformed into the path
//!
//! `γ⁰(e)`: `v₀` down to the leaf in `T⁰` → `γ^inter(e)`: the leaf path
//! through the sequence → `γʰ(e)`: up to `v₁` in `Tʰ`,
//!
//! of length at most `3h`, and the cone over the sequence contains all of
//! them.

use std::collections::{BTreeMap, HashSet};

use cs_core::CellComplex;
use cs_meshgraph::Graph;
use cs_trees::{PermSeq, Variant, Word};
use serde::Serialize;

use crate::{sequence_cone, swap_schedule, ConeError, Deformation};

/// A bipartite graph with parts `V₀`, `V₁`; edges are `(v₀, v₁)` index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    labels0: Vec<String>,
    labels1: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    /// Validates endpoints and rejects parallel edges (two edges would share
    /// a leaf).
    pub fn new(
        labels0: Vec<String>,
        labels1: Vec<String>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, ConeError> {
        let mut seen = HashSet::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= labels0.len() || b >= labels1.len() {
                return Err(ConeError::Input(format!(
                    "edge {i} = ({a}, {b}) leaves the parts of sizes {} and {}",
                    labels0.len(),
                    labels1.len()
                )));
            }
            if !seen.insert((a, b)) {
                return Err(ConeError::Input(format!(
                    "edge {i} = ({a}, {b}) is repeated"
                )));
            }
        }
        Ok(Self {
            labels0,
            labels1,
            edges,
        })
    }

    /// Parts of sizes `n0`, `n1` with vertices labeled `a{i}`, `b{j}`.
    pub fn with_sizes(n0: usize, n1: usize, edges: Vec<(usize, usize)>) -> Result<Self, ConeError> {
        Self::new(
            (0..n0).map(|i| format!("a{i}")).collect(),
            (0..n1).map(|i| format!("b{i}")).collect(),
            edges,
        )
    }

    pub fn part_sizes(&self) -> (usize, usize) {
        (self.labels0.len(), self.labels1.len())
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degrees of the vertices of `V₀` and of `V₁`.
    pub fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let (n0, n1) = self.part_sizes();
        let (mut d0, mut d1) = (vec![0; n0], vec![0; n1]);
        for &(a, b) in &self.edges {
            d0[a] += 1;
            d1[b] += 1;
        }
        (d0, d1)
    }

    /// The same graph with `V₀` numbered first, then `V₁`.
    pub fn to_graph(&self) -> Graph {
        let n0 = self.labels0.len();
        let labels = self.labels0.iter().chain(&self.labels1).cloned().collect();
        let edges = self.edges.iter().map(|&(a, b)| (a, n0 + b)).collect();
        Graph::new(labels, edges).expect("bipartite edges are valid")
    }
}

/// `max(1, ⌈log₂ n⌉)`: address length for a part of `n` vertices.
pub fn address_bits(n: usize) -> usize {
    let mut h = 1;
    while (1usize << h) < n {
        h += 1;
    }
    h
}

/// A cone complex together with a deformation of a base graph into it.
#[derive(Clone, Debug)]
pub struct ConeResult {
    pub complex: CellComplex,
    pub deformation: Deformation,
    /// 1-cell of every base edge once the base graph itself is embedded
    /// (after cellulation); `None` while only `γ(e)` is present.
    pub edge_cells: Vec<Option<usize>>,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    schema: u32,
    vertices: BTreeMap<&'a str, &'a str>,
    edges: Vec<EdgeEntry<'a>>,
}

#[derive(Serialize)]
struct EdgeEntry<'a> {
    edge: usize,
    endpoints: (&'a str, &'a str),
    cell: Option<&'a str>,
    path: Vec<&'a str>,
}

impl ConeResult {
    /// Cell name of every base vertex.
    pub fn vertex_names(&self) -> Vec<&str> {
        self.deformation
            .vertex_images
            .iter()
            .map(|&v| self.complex.labels(0)[v].as_str())
            .collect()
    }

    /// True iff the base graph is a subgraph: vertex images are distinct and
    /// every base edge has a 1-cell whose endpoints are the images of its
    /// endpoints.
    pub fn embeds_base(&self) -> bool {
        let images = &self.deformation.vertex_images;
        let distinct: HashSet<usize> = images.iter().copied().collect();
        if distinct.len() != images.len()
            || self.edge_cells.len() != self.deformation.base.n_edges()
        {
            return false;
        }
        let mut used = HashSet::new();
        self.deformation
            .base
            .edges()
            .iter()
            .zip(&self.edge_cells)
            .all(|(&(u, v), cell)| match *cell {
                None => false,
                Some(c) => {
                    let mut ends = self.complex.d1().column(c).to_vec();
                    let mut want = vec![images[u], images[v]];
                    ends.sort_unstable();
                    want.sort_unstable();
                    used.insert(c) && ends == want
                }
            })
    }

    /// The embedding as JSON: base vertex label → cell name, and per base
    /// edge its cell (if embedded) and the cell names along `γ(e)`.
    pub fn sidecar_json(&self) -> String {
        let base = &self.deformation.base;
        let names0 = self.complex.labels(0);
        let names1 = self.complex.labels(1);
        let vertices = base
            .labels()
            .iter()
            .zip(&self.deformation.vertex_images)
            .map(|(l, &v)| (l.as_str(), names0[v].as_str()))
            .collect();
        let edges = base
            .edges()
            .iter()
            .enumerate()
            .map(|(j, &(u, v))| EdgeEntry {
                edge: j,
                endpoints: (base.labels()[u].as_str(), base.labels()[v].as_str()),
                cell: self.edge_cells[j].map(|c| names1[c].as_str()),
                path: self.deformation.paths[j]
                    .edges
                    .iter()
                    .map(|&e| names1[e].as_str())
                    .collect(),
            })
            .collect();
        serde_json::to_string_pretty(&Sidecar {
            schema: 1,
            vertices,
            edges,
        })
        .expect("sidecar serialization cannot fail")
    }
}

/// The parsimonious cone of a bipartite graph for the chosen variant.
///
/// Preconditions: both parts are nonempty; for the pruned variant no vertex
/// is isolated; for pruned* every vertex has degree at least 2, so that its
/// image (the branching point of its leaves) survives pruning.
pub fn parsimonious_cone(g: &BipartiteGraph, variant: Variant) -> Result<ConeResult, ConeError> {
    let (n0, n1) = g.part_sizes();
    if n0 == 0 || n1 == 0 {
        return Err(ConeError::Input("both parts must be nonempty".into()));
    }
    let (deg0, deg1) = g.degrees();
    let min_degree = match variant {
        Variant::Full => 0,
        Variant::Pruned => 1,
        Variant::PrunedStar => 2,
    };
    for (part, degs) in [(0, &deg0), (1, &deg1)] {
        if let Some(v) = degs.iter().position(|&d| d < min_degree) {
            return Err(ConeError::DegreeTooLow {
                part,
                vertex: v,
                degree: degs[v],
                required: min_degree,
            });
        }
    }
    let (h0, h1) = (address_bits(n0), address_bits(n1));
    let addr0 = |v: usize| Word::from_index(v as u64, h0);
    let addr1 = |v: usize| Word::from_index(v as u64, h1);
    let leaves: Vec<Word> = g
        .edges()
        .iter()
        .map(|&(a, b)| addr0(a).concat(addr1(b)))
        .collect();

    let schedule = swap_schedule(h0, h1)?;
    let swaps = schedule.padded();
    let h = h0 + h1;
    let leaf_set = match variant {
        Variant::Full => None,
        _ => Some(leaves.as_slice()),
    };
    let sc = sequence_cone(leaf_set, &PermSeq::identity(h), &swaps, variant)?;
    let last = sc.steps();
    let tau_last = sc.trees()[last].labels().clone();

    // Standard strings of the vertex images in T⁰ (part 0) and Tⁿ (part 1).
    let mut std0: Vec<Option<Word>> = vec![None; n0];
    let mut std1: Vec<Option<Word>> = vec![None; n1];
    let meet = |slot: &mut Option<Word>, w: Word| {
        *slot = Some(match *slot {
            None => w,
            Some(p) => p.prefix(p.common_prefix_len(w)),
        });
    };
    if variant == Variant::PrunedStar {
        for (&(a, b), &x) in g.edges().iter().zip(&leaves) {
            meet(&mut std0[a], x);
            meet(&mut std1[b], tau_last.apply(x)?);
        }
    } else {
        std0 = (0..n0).map(|v| Some(addr0(v))).collect();
        std1 = (0..n1).map(|v| Some(addr1(v))).collect();
    }
    let lookup = |tree: usize, s: Option<Word>| -> Result<usize, ConeError> {
        let s = s.expect("every vertex has an image");
        sc.tree_vertex(tree, s)
            .ok_or_else(|| ConeError::MissingCell(format!("image {s:?} in tree {tree}")))
    };
    let mut vertex_images = Vec::with_capacity(n0 + n1);
    for s in &std0 {
        vertex_images.push(lookup(0, *s)?);
    }
    for s in &std1 {
        vertex_images.push(lookup(last, *s)?);
    }

    let mut paths = Vec::with_capacity(leaves.len());
    for (&(a, b), &x) in g.edges().iter().zip(&leaves) {
        let down = sc.tree_path_up(0, x, std0[a].unwrap())?.reversed();
        let inter = sc.leaf_path(x)?;
        let up = sc.tree_path_up(last, tau_last.apply(x)?, std1[b].unwrap())?;
        paths.push(down.join(&inter)?.join(&up)?);
    }
    let complex = sc.into_complex();
    let deformation = Deformation {
        base: g.to_graph(),
        vertex_images,
        paths,
    };
    deformation.check(&complex)?;
    let edge_cells = vec![None; g.edges().len()];
    Ok(ConeResult {
        complex,
        deformation,
        edge_cells,
    })
}

/// Convenience for tests and reports: the paths of a parsimonious cone are
/// of length at most `3h`.
pub fn deformation_bound(g: &BipartiteGraph) -> usize {
    let (n0, n1) = g.part_sizes();
    3 * (address_bits(n0) + address_bits(n1))
}

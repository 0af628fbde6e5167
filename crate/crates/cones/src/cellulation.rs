//! Embedding a graph itself (not just a deformation of it) into a cone.
//!
//! For a base edge `e` whose deformation `γe` visits host vertices
//! `0, 1, …, n`, the cycle `γe + e` is filled by a fan of `n − 1` triangles.
//! Algebraically this is the mapping cone of a map out of a "dangling
//! repetition code" `R(e)`: cells `‖i⟩ → |i⟩ + |i+1⟩` for `i = 1..n−1`
//! (with `|n⟩ = 0`). The 0-cell `|i⟩` becomes a new edge joining path
//! vertices `⌊i/2⌋` and `n − ⌈i/2⌉ + 1`, and the 1-cell `‖i⟩` a triangle
//! bounded by new edges `i`, `i+1` and one path edge:
//!
//! - `(ℓ, ℓ+1)` for odd `i = 2ℓ+1`,
//! - `(n−ℓ, n−ℓ+1)` for even `i = 2ℓ`,
//! - the two middle edges around `⌈n/2⌉` for the last triangle `i = n−1`,
//!   which has only one new edge.
//!
//! New edge 1 joins vertices `0` and `n`, the endpoints of `e`, and is the
//! cell identified with `e`.

use cs_core::{mapping_cone, CellComplex, ConeMap, F2Matrix};
use cs_meshgraph::Graph;
use cs_trees::Variant;

use crate::{parsimonious_cone, BipartiteGraph, ConeError, ConeResult, Deformation, HostPath};

/// The 2-subdivision of a graph and where its cells came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    /// Parts: the (augmented) vertices and one midpoint per augmented edge.
    pub bipartite: BipartiteGraph,
    /// The graph that was subdivided: the input plus chaining edges.
    pub augmented: Graph,
    /// Number of input edges; augmented edges `0..n_original` are the input's.
    pub n_original: usize,
}

impl Lift {
    /// Indices, in the bipartite graph, of the two half-edges of augmented
    /// edge `j` (from its first and second endpoint to the midpoint).
    pub fn halves(&self, j: usize) -> (usize, usize) {
        (2 * j, 2 * j + 1)
    }
}

/// Edges that raise every vertex of degree `< 2` to degree `≥ 2`.
///
/// Deficient vertices are joined in a cycle; a single deficient vertex is
/// doubly joined to the first other vertex. Parallel edges are fine: the
/// subdivision separates them.
fn chaining_edges(g: &Graph) -> Vec<(usize, usize)> {
    let deg = g.degrees();
    let weak: Vec<usize> = (0..g.n_vertices()).filter(|&v| deg[v] < 2).collect();
    match weak.len() {
        0 => Vec::new(),
        1 => {
            let d = weak[0];
            let other = usize::from(d == 0);
            vec![(d, other); 2 - deg[d]]
        }
        k => (0..k).map(|i| (weak[i], weak[(i + 1) % k])).collect(),
    }
}

/// 2-subdivides `g` (after chaining its low-degree vertices when
/// `min_degree_two` is set, as the pruned* cone requires). The lifted
/// parts are the vertices and the edges of the augmented graph; midpoint
/// `j` is labeled `m{j}`.
pub fn bipartite_lift(g: &Graph, min_degree_two: bool) -> Result<Lift, ConeError> {
    let mut augmented = g.clone();
    if min_degree_two && g.n_vertices() >= 2 {
        for (u, v) in chaining_edges(g) {
            augmented.add_edge(u, v)?;
        }
    }
    let mut edges = Vec::with_capacity(2 * augmented.n_edges());
    for (j, &(u, v)) in augmented.edges().iter().enumerate() {
        edges.push((u, j));
        edges.push((v, j));
    }
    let mids = (0..augmented.n_edges()).map(|j| format!("m{j}")).collect();
    let bipartite = BipartiteGraph::new(augmented.labels().to_vec(), mids, edges)?;
    Ok(Lift {
        bipartite,
        augmented,
        n_original: g.n_edges(),
    })
}

/// Fan triangulation data for one path of length `n ≥ 2`: endpoints (path
/// positions) of new edge `i` and path-edge positions of triangle `i`,
/// for `i = 1..n−1`.
fn fan(n: usize) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let new_edges = (1..n).map(|i| (i / 2, n - i.div_ceil(2) + 1)).collect();
    let faces = (1..n)
        .map(|i| {
            if i == n - 1 {
                let c = n.div_ceil(2);
                vec![c - 1, c]
            } else if i % 2 == 1 {
                vec![(i - 1) / 2]
            } else {
                vec![n - i / 2]
            }
        })
        .collect();
    (new_edges, faces)
}

/// Attaches a fan to every deformed base edge so that the base graph
/// becomes a subgraph. Homology is unchanged; vertices are unchanged.
pub fn cellulate(cone: &ConeResult) -> Result<ConeResult, ConeError> {
    let host = &cone.complex;
    let def = &cone.deformation;
    def.check(host)?;
    let mut a_labels2 = Vec::new();
    let mut a_labels1 = Vec::new();
    let mut a_d2 = Vec::new();
    let mut g2 = Vec::new();
    let mut g1 = Vec::new();
    // Base edge → (index among new edges) or existing host 1-cell.
    let mut identified: Vec<Result<usize, usize>> = Vec::with_capacity(def.paths.len());
    for (j, p) in def.paths.iter().enumerate() {
        let n = p.len();
        if n == 0 {
            return Err(ConeError::Path(format!("edge {j} has an empty path")));
        }
        if n == 1 {
            identified.push(Err(p.edges[0]));
            continue;
        }
        if !p.is_simple() {
            return Err(ConeError::Path(format!(
                "path of edge {j} revisits a vertex"
            )));
        }
        let first = a_labels1.len();
        identified.push(Ok(first));
        let (new_edges, faces) = fan(n);
        for (k, &(x, y)) in new_edges.iter().enumerate() {
            a_labels1.push(if k == 0 {
                format!("G:e{j}")
            } else {
                format!("G:e{j}.{}", k + 1)
            });
            g1.push(vec![p.vertices[x], p.vertices[y]]);
        }
        for (k, path_edges) in faces.iter().enumerate() {
            a_labels2.push(format!("G:f{j}.{}", k + 1));
            let mut bd = vec![first + k];
            if k + 1 < n - 1 {
                bd.push(first + k + 1);
            }
            a_d2.push(bd);
            g2.push(path_edges.iter().map(|&q| p.edges[q]).collect::<Vec<_>>());
        }
    }
    let n_new = a_labels1.len();
    let a = CellComplex::new(
        a_labels2,
        a_labels1,
        Vec::new(),
        F2Matrix::from_columns(n_new, a_d2)?,
        F2Matrix::zeros(0, n_new),
    )?;
    let g = ConeMap {
        g2: F2Matrix::from_columns(host.dim(1), g2)?,
        g1: F2Matrix::from_columns(host.dim(0), g1)?,
    };
    let complex = mapping_cone(&a, host, &g)?;
    let mut deformation: Deformation = def.clone();
    deformation.shift_edges(n_new);
    let edge_cells = identified
        .into_iter()
        .map(|x| Some(x.unwrap_or_else(|old| old + n_new)))
        .collect();
    Ok(ConeResult {
        complex,
        deformation,
        edge_cells,
    })
}

/// The cellulated cone of an arbitrary graph: 2-subdivide (chaining
/// low-degree vertices), build the pruned* parsimonious cone, deform every
/// input edge `uv` along `γ(u, m) γ(v, m)⁻¹` through its midpoint `m`
/// (cancelling the shared tail), and cellulate. The result contains the
/// input graph as a subgraph and has the homology of a point.
pub fn cellulated_cone(g: &Graph) -> Result<ConeResult, ConeError> {
    cellulated_cone_with(g, Variant::PrunedStar)
}

/// [`cellulated_cone`] over the parsimonious cone of the given variant.
/// Only pruned* chains low-degree vertices; the pruned variant rejects
/// isolated vertices, and the full variant accepts any graph.
pub fn cellulated_cone_with(g: &Graph, variant: Variant) -> Result<ConeResult, ConeError> {
    if g.n_vertices() <= 1 {
        let labels = if g.n_vertices() == 1 {
            g.labels().to_vec()
        } else {
            vec!["pt".to_string()]
        };
        let complex = CellComplex::new(
            Vec::new(),
            Vec::new(),
            labels,
            F2Matrix::zeros(0, 0),
            F2Matrix::zeros(1, 0),
        )?;
        return Ok(ConeResult {
            complex,
            deformation: Deformation {
                base: g.clone(),
                vertex_images: (0..g.n_vertices()).collect(),
                paths: Vec::new(),
            },
            edge_cells: Vec::new(),
        });
    }
    let lift = bipartite_lift(g, variant == Variant::PrunedStar)?;
    let cone = parsimonious_cone(&lift.bipartite, variant)?;
    let lifted = &cone.deformation;
    let paths = (0..lift.n_original)
        .map(|j| {
            let (a, b) = lift.halves(j);
            let p: HostPath = lifted.paths[a].clone().join(&lifted.paths[b].reversed())?;
            Ok(p.reduced())
        })
        .collect::<Result<Vec<_>, ConeError>>()?;
    let base = Deformation {
        base: g.clone(),
        vertex_images: lifted.vertex_images[..g.n_vertices()].to_vec(),
        paths,
    };
    let embedded = ConeResult {
        complex: cone.complex,
        deformation: base,
        edge_cells: vec![None; g.n_edges()],
    };
    cellulate(&embedded)
}

/// The naive cone: one apex joined to every vertex, and one triangle per
/// edge. Every cycle is filled and, since each triangle owns its edge, no
/// 2-cycles appear; the price is an apex of degree `|V|`. Used only as a
/// size baseline.
pub fn naive_apex_cone(g: &Graph) -> Result<CellComplex, ConeError> {
    let n = g.n_vertices();
    let m = g.n_edges();
    let mut labels0 = g.labels().to_vec();
    labels0.push("apex".into());
    let mut labels1: Vec<String> = (0..m).map(|j| format!("e{j}")).collect();
    labels1.extend((0..n).map(|v| format!("spoke{v}")));
    let mut cols1: Vec<Vec<usize>> = g.edges().iter().map(|&(u, v)| vec![u, v]).collect();
    cols1.extend((0..n).map(|v| vec![v, n]));
    let cols2: Vec<Vec<usize>> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(j, &(u, v))| vec![j, m + u, m + v])
        .collect();
    Ok(CellComplex::new(
        (0..m).map(|j| format!("f{j}")).collect(),
        labels1,
        labels0,
        F2Matrix::from_columns(m + n, cols2)?,
        F2Matrix::from_columns(n + 1, cols1)?,
    )?)
}

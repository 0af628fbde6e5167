//! Paths in a host complex and deformations of graphs.

use std::collections::HashMap;

use cs_core::CellComplex;
use cs_meshgraph::Graph;

use crate::ConeError;

/// A walk in the 1-skeleton of a host complex: `vertices[k]` and
/// `vertices[k+1]` are the endpoints of `edges[k]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HostPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl HostPath {
    /// The path of length zero sitting at `v`.
    pub fn at(v: usize) -> Self {
        Self {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths have a vertex")
    }

    pub fn step(&mut self, edge: usize, to: usize) {
        self.edges.push(edge);
        self.vertices.push(to);
    }

    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        out.vertices.reverse();
        out.edges.reverse();
        out
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn join(mut self, other: &HostPath) -> Result<Self, ConeError> {
        if self.end() != other.start() {
            return Err(ConeError::Path(format!(
                "cannot join a path ending at {} to one starting at {}",
                self.end(),
                other.start()
            )));
        }
        self.vertices.extend_from_slice(&other.vertices[1..]);
        self.edges.extend_from_slice(&other.edges);
        Ok(self)
    }

    /// Removes immediate backtracking (`… u –e→ v –e→ u …`).
    pub fn reduced(&self) -> Self {
        let mut out = HostPath::at(self.start());
        for (k, &e) in self.edges.iter().enumerate() {
            if out.edges.last() == Some(&e) {
                out.edges.pop();
                out.vertices.pop();
            } else {
                out.step(e, self.vertices[k + 1]);
            }
        }
        out
    }

    /// True iff consecutive vertices are the endpoints of each edge in
    /// `host` (degree 1 → degree 0).
    pub fn is_walk_in(&self, host: &CellComplex) -> bool {
        if self.vertices.len() != self.edges.len() + 1 {
            return false;
        }
        self.edges.iter().enumerate().all(|(k, &e)| {
            if e >= host.dim(1) {
                return false;
            }
            let mut ends = host.d1().column(e).to_vec();
            let mut want = vec![self.vertices[k], self.vertices[k + 1]];
            ends.sort_unstable();
            want.sort_unstable();
            ends == want
        })
    }

    /// True iff no vertex repeats.
    pub fn is_simple(&self) -> bool {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }
}

/// A deformation `γ` of a graph into a host complex: every base edge is
/// replaced by a host path between the images of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deformation {
    pub base: Graph,
    /// Host 0-cell of every base vertex.
    pub vertex_images: Vec<usize>,
    /// `γ(e)` for every base edge, oriented from `e.0` to `e.1`.
    pub paths: Vec<HostPath>,
}

impl Deformation {
    /// The longest path length.
    pub fn length(&self) -> usize {
        self.paths.iter().map(HostPath::len).max().unwrap_or(0)
    }

    /// The maximum number of paths through a single host edge.
    pub fn congestion(&self) -> usize {
        let mut count: HashMap<usize, usize> = HashMap::new();
        for p in &self.paths {
            for &e in &p.edges {
                *count.entry(e).or_default() += 1;
            }
        }
        count.into_values().max().unwrap_or(0)
    }

    /// Shifts every host 1-cell index by `offset` (used when new 1-cells
    /// are placed in front of the host's own).
    pub fn shift_edges(&mut self, offset: usize) {
        for p in &mut self.paths {
            for e in &mut p.edges {
                *e += offset;
            }
        }
    }

    /// Checks that every path is a walk in `host` joining the images of its
    /// edge's endpoints.
    pub fn check(&self, host: &CellComplex) -> Result<(), ConeError> {
        if self.paths.len() != self.base.n_edges()
            || self.vertex_images.len() != self.base.n_vertices()
        {
            return Err(ConeError::Path(
                "deformation does not cover its base".into(),
            ));
        }
        for (j, (&(u, v), p)) in self.base.edges().iter().zip(&self.paths).enumerate() {
            if p.start() != self.vertex_images[u] || p.end() != self.vertex_images[v] {
                return Err(ConeError::Path(format!(
                    "path of edge {j} has wrong endpoints"
                )));
            }
            if !p.is_walk_in(host) {
                return Err(ConeError::Path(format!("path of edge {j} is not a walk")));
            }
        }
        Ok(())
    }
}

//! Finite multigraphs without self-loops, with text and DOT export.

use std::fmt::Write as _;

use cs_core::{CellComplex, ChainError};

use crate::GraphError;

/// A labeled multigraph. Parallel edges are allowed, self-loops are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let n = labels.len();
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::BadEndpoint {
                        edge: i,
                        vertex: w,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(i));
            }
        }
        Ok(Self { labels, edges })
    }

    /// A graph on vertices labeled `v0 … v{n−1}`.
    pub fn with_vertices(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        Self::new((0..n).map(|i| format!("v{i}")).collect(), edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        let i = self.edges.len();
        let n = self.n_vertices();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::BadEndpoint {
                    edge: i,
                    vertex: w,
                    n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(i));
        }
        self.edges.push((u, v));
        Ok(i)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n_vertices()];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Neighbor lists with multiplicity, as `(neighbor, edge index)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n_vertices()];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        adj
    }

    /// Component index of every vertex, numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n_vertices()];
        let mut next = 0;
        for s in 0..self.n_vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(v, _) in &adj[u] {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    /// True for the empty graph and for any single component.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `|E| − |V| + #components`, the dimension of the cycle space.
    pub fn cycle_rank(&self) -> usize {
        self.n_edges() + self.component_count() - self.n_vertices()
    }

    /// The graph as a complex with edges labeled `edge_labels` (or `e{i}`).
    pub fn to_complex(&self, edge_labels: Option<Vec<String>>) -> Result<CellComplex, ChainError> {
        let names =
            edge_labels.unwrap_or_else(|| (0..self.n_edges()).map(|i| format!("e{i}")).collect());
        CellComplex::graph(self.labels.clone(), names, &self.edges)
    }

    /// The edge-list text format: a `# vertices N` header, an optional
    /// `# labels …` line, then `u v [tag]` per edge. Tags are a check index
    /// or `*` for an edge mapped to no check.
    pub fn to_edge_list(&self, tags: Option<&[Option<usize>]>) -> String {
        let mut out = format!("# vertices {}\n", self.n_vertices());
        if !self.labels.is_empty() {
            let _ = writeln!(out, "# labels {}", self.labels.join(" "));
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            match tags.map(|t| t[i]) {
                None => writeln!(out, "{u} {v}"),
                Some(Some(c)) => writeln!(out, "{u} {v} {c}"),
                Some(None) => writeln!(out, "{u} {v} *"),
            }
            .expect("writing to a string");
        }
        out
    }

    /// Graphviz DOT; tagged edges are labeled `Z{check}`, untagged ones are
    /// dashed.
    pub fn to_dot(&self, tags: Option<&[Option<usize>]>) -> String {
        let mut out = String::from("graph G {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{l}\"];");
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let attr = match tags.map(|t| t[i]) {
                None => String::new(),
                Some(Some(c)) => format!(" [label=\"Z{c}\"]"),
                Some(None) => " [style=dashed]".to_string(),
            };
            let _ = writeln!(out, "  {u} -- {v}{attr};");
        }
        out.push_str("}\n");
        out
    }
}

/// Per-edge check index; `None` marks an edge mapped to no check.
pub type EdgeTags = Vec<Option<usize>>;

/// Parses the edge-list format. Returns the graph and, when any edge carries
/// a tag, the per-edge check indices (`None` for `*`).
pub fn parse_edge_list(text: &str) -> Result<(Graph, Option<EdgeTags>), GraphError> {
    let mut n: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut edges = Vec::new();
    let mut tags = Vec::new();
    let mut tagged = false;
    let err = |line: usize, msg: String| GraphError::Parse { line, msg };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        if let Some(rest) = l.strip_prefix('#') {
            let mut parts = rest.split_whitespace();
            match parts.next() {
                Some("vertices") => {
                    let v = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err(line, "bad vertex count".into()))?;
                    n = Some(v);
                }
                Some("labels") => labels = Some(parts.map(str::to_string).collect()),
                _ => {}
            }
            continue;
        }
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(err(line, format!("expected `u v [tag]`, found {l:?}")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| err(line, format!("{s:?}: {e}")))
        };
        edges.push((parse(fields[0])?, parse(fields[1])?));
        tags.push(match fields.get(2) {
            None => None,
            Some(&"*") => {
                tagged = true;
                None
            }
            Some(s) => {
                tagged = true;
                Some(parse(s)?)
            }
        });
    }
    let n = match n {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    let labels = match labels {
        Some(ls) if ls.len() != n => {
            return Err(err(0, format!("{} labels for {n} vertices", ls.len())))
        }
        Some(ls) => ls,
        None => (0..n).map(|i| format!("v{i}")).collect(),
    };
    let g = Graph::new(labels, edges)?;
    Ok((g, tagged.then_some(tags)))
}

//! Labeled trees and interpolation complexes as graph complexes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use cs_core::CellComplex;

use crate::{sigma_star, LeafFrame, PermSeq, Swap, TreeError, Word};

/// Full trees above this height are refused (they have `2^{h+1} − 1` cells).
const MAX_FULL_HEIGHT: usize = 22;

/// Which cells of the binary tree are kept.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Every string of length `≤ h`.
    Full,
    /// Prefixes of leaves, parent `ω`.
    Pruned,
    /// Branching prefixes of leaves, parent `Ω`.
    #[default]
    PrunedStar,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::Pruned => "pruned",
            Variant::PrunedStar => "pruned_star",
        })
    }
}

impl FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(Variant::Full),
            "pruned" => Ok(Variant::Pruned),
            "pruned_star" | "pruned*" | "prunedstar" => Ok(Variant::PrunedStar),
            _ => Err(format!(
                "unknown variant {s:?} (expected full, pruned or pruned_star)"
            )),
        }
    }
}

fn check_height(h: usize, labels: &PermSeq) -> Result<(), TreeError> {
    if h == 0 {
        return Err(TreeError::ZeroHeight);
    }
    if h > crate::MAX_HEIGHT {
        return Err(TreeError::HeightTooLarge(h));
    }
    if labels.h() != h {
        return Err(TreeError::HeightMismatch(labels.h(), h));
    }
    Ok(())
}

fn frame_for(
    h: usize,
    leaves: Option<&[Word]>,
    labels: &PermSeq,
    variant: Variant,
) -> Result<LeafFrame, TreeError> {
    match variant {
        Variant::Full => {
            if h > MAX_FULL_HEIGHT {
                return Err(TreeError::FullTreeTooLarge(h));
            }
            Ok(LeafFrame::all(h))
        }
        Variant::Pruned | Variant::PrunedStar => {
            let ls = leaves.ok_or(TreeError::MissingLeaves)?;
            if ls.is_empty() {
                return Err(TreeError::MissingLeaves);
            }
            LeafFrame::relabeled(h, Some(ls), labels)
        }
    }
}

/// A binary tree of height `h` with labels `τ`, restricted to a variant's
/// cells. Cells are indexed by their *standard string* `s`; the cell's name
/// is `tag:τ̄s`. Edge `s` joins vertex `s` to its parent.
#[derive(Clone, Debug)]
pub struct LabeledTree {
    labels: PermSeq,
    inverse: PermSeq,
    frame: LeafFrame,
    variant: Variant,
    tag: String,
    vertices: Vec<Word>,
    vertex_index: HashMap<Word, usize>,
    edge_index: HashMap<Word, usize>,
    edges: Vec<Word>,
    complex: CellComplex,
}

impl LabeledTree {
    pub fn h(&self) -> usize {
        self.frame.h()
    }

    pub fn labels(&self) -> &PermSeq {
        &self.labels
    }

    /// The leaf set in this tree's standard frame (`τ𝓛`).
    pub fn frame(&self) -> &LeafFrame {
        &self.frame
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    /// The tree as a graph complex (edges in degree 1, vertices in degree 0).
    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    /// Standard strings of the vertices, in index order.
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    /// Standard strings of the edges (the child endpoint), in index order.
    pub fn edges(&self) -> &[Word] {
        &self.edges
    }

    pub fn vertex(&self, s: Word) -> Option<usize> {
        self.vertex_index.get(&s).copied()
    }

    pub fn edge(&self, s: Word) -> Option<usize> {
        self.edge_index.get(&s).copied()
    }

    /// The parent of standard string `s` (`ω` or, for pruned*, `Ω`).
    pub fn parent(&self, s: Word) -> Word {
        match self.variant {
            Variant::Full | Variant::Pruned => s.parent(),
            Variant::PrunedStar => self.frame.omega(s),
        }
    }

    /// The name `τ̄s` of the cell with standard string `s`.
    pub fn name(&self, s: Word) -> Word {
        self.inverse.apply(s).expect("cell within tree height")
    }

    /// The label `tag:τ̄s`.
    pub fn label(&self, s: Word) -> String {
        format!("{}:{}", self.tag, self.name(s))
    }

    /// The same tree with every cell label re-tagged (used for the copies
    /// that appear in interpolation cones).
    pub fn retagged(&self, tag: &str) -> Result<Self, TreeError> {
        let mut out = self.clone();
        out.tag = tag.to_string();
        out.complex = out.build_complex()?;
        Ok(out)
    }

    fn build_complex(&self) -> Result<CellComplex, TreeError> {
        let names0 = self.vertices.iter().map(|&s| self.label(s)).collect();
        let names1 = self.edges.iter().map(|&s| self.label(s)).collect();
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&s| (self.vertex_index[&s], self.vertex_index[&self.parent(s)]))
            .collect();
        Ok(CellComplex::graph(names0, names1, &pairs)?)
    }
}

/// Builds a tree tagged `T`. See [`build_tree_tagged`].
pub fn build_tree(
    h: usize,
    labels: &PermSeq,
    leaves: Option<&[Word]>,
    variant: Variant,
) -> Result<LabeledTree, TreeError> {
    build_tree_tagged("T", h, labels, leaves, variant)
}

/// Builds a labeled tree. `leaves` is the leaf set `𝓛` in the trivial frame
/// (ignored by [`Variant::Full`], required by the pruned variants).
pub fn build_tree_tagged(
    tag: &str,
    h: usize,
    labels: &PermSeq,
    leaves: Option<&[Word]>,
    variant: Variant,
) -> Result<LabeledTree, TreeError> {
    check_height(h, labels)?;
    let frame = frame_for(h, leaves, labels, variant)?;
    let vertices = match variant {
        Variant::Full | Variant::Pruned => frame.truncations(),
        Variant::PrunedStar => frame.branching(),
    };
    let vertex_index: HashMap<Word, usize> =
        vertices.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let edges: Vec<Word> = vertices.iter().copied().filter(|s| !s.is_empty()).collect();
    let edge_index = edges.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut tree = LabeledTree {
        inverse: labels.inverse(),
        labels: labels.clone(),
        frame,
        variant,
        tag: tag.to_string(),
        vertices,
        vertex_index,
        edge_index,
        edges,
        complex: CellComplex::empty(),
    };
    tree.complex = tree.build_complex()?;
    Ok(tree)
}

/// The interpolation complex `S` between `T'` (labels `στ`) and `T`
/// (labels `τ`). Cells are keyed by `σ⋆s` for standard strings `s` of `T`;
/// the name of the cell keyed `k` is `tag:τ̄k`.
#[derive(Clone, Debug)]
pub struct Interpolation {
    tau: PermSeq,
    inverse: PermSeq,
    sigma: Swap,
    variant: Variant,
    frame: LeafFrame,
    frame_swapped: LeafFrame,
    tag: String,
    vertices: Vec<Word>,
    vertex_index: HashMap<Word, usize>,
    edges: Vec<Word>,
    edge_index: HashMap<Word, usize>,
    complex: CellComplex,
}

impl Interpolation {
    pub fn h(&self) -> usize {
        self.frame.h()
    }

    pub fn tau(&self) -> &PermSeq {
        &self.tau
    }

    pub fn sigma(&self) -> &Swap {
        &self.sigma
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// `τ𝓛`, the frame of `T`.
    pub fn frame(&self) -> &LeafFrame {
        &self.frame
    }

    /// `στ𝓛`, the frame of `T'`.
    pub fn frame_swapped(&self) -> &LeafFrame {
        &self.frame_swapped
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    /// Vertex keys (`σ⋆s`), in index order.
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    /// Edge keys (`σ⋆s`), in index order.
    pub fn edges(&self) -> &[Word] {
        &self.edges
    }

    /// `σ⋆s`.
    pub fn key(&self, s: Word) -> Word {
        sigma_star(&self.sigma, s)
    }

    pub fn vertex(&self, key: Word) -> Option<usize> {
        self.vertex_index.get(&key).copied()
    }

    pub fn edge(&self, key: Word) -> Option<usize> {
        self.edge_index.get(&key).copied()
    }

    /// The interpolating truncation `Ω̃s`: the longer of `Ωs` and `σΩ'σs`,
    /// ties resolved to `Ωs`.
    pub fn omega_tilde(&self, s: Word) -> Word {
        let a = self.frame.omega(s);
        let b = self
            .sigma
            .apply(self.frame_swapped.omega(self.sigma.apply(s)));
        if b.len() > a.len() {
            b
        } else {
            a
        }
    }

    /// The parent used in the adjacency: `ω` or, for pruned*, `Ω̃`.
    pub fn parent(&self, s: Word) -> Word {
        match self.variant {
            Variant::Full | Variant::Pruned => s.parent(),
            Variant::PrunedStar => self.omega_tilde(s),
        }
    }

    pub fn name(&self, key: Word) -> Word {
        self.inverse.apply(key).expect("cell within tree height")
    }

    pub fn label(&self, key: Word) -> String {
        format!("{}:{}", self.tag, self.name(key))
    }

    /// True iff `s` is one of the strings that generate cells.
    pub fn generates(&self, s: Word) -> bool {
        match self.variant {
            Variant::Full => s.len() <= self.h() && !s.has_star(),
            Variant::Pruned => self.frame.is_truncation(s),
            Variant::PrunedStar => {
                self.frame.is_branching(s) || self.frame_swapped.is_branching(self.sigma.apply(s))
            }
        }
    }
}

/// Builds an interpolation tagged `S`. See [`build_interpolation_tagged`].
pub fn build_interpolation(
    leaves: Option<&[Word]>,
    tau: &PermSeq,
    sigma: &Swap,
    variant: Variant,
) -> Result<Interpolation, TreeError> {
    build_interpolation_tagged("S", leaves, tau, sigma, variant)
}

/// Builds the interpolation complex for labels `τ`, SWAP `σ` and leaf set
/// `𝓛` (trivial frame). Fails if two strings with the same key would give
/// different boundaries.
pub fn build_interpolation_tagged(
    tag: &str,
    leaves: Option<&[Word]>,
    tau: &PermSeq,
    sigma: &Swap,
    variant: Variant,
) -> Result<Interpolation, TreeError> {
    let h = tau.h();
    check_height(h, tau)?;
    if sigma.h() != h {
        return Err(TreeError::HeightMismatch(sigma.h(), h));
    }
    let frame = frame_for(h, leaves, tau, variant)?;
    let swapped_labels = sigma.as_perm_seq().compose(tau)?;
    let frame_swapped = frame_for(h, leaves, &swapped_labels, variant)?;
    let mut generators: Vec<Word> = match variant {
        Variant::Full | Variant::Pruned => frame.truncations(),
        Variant::PrunedStar => {
            let mut g = frame.branching();
            g.extend(
                frame_swapped
                    .branching()
                    .into_iter()
                    .map(|t| sigma.apply(t)),
            );
            g
        }
    };
    generators.sort_unstable();
    generators.dedup();

    let mut interp = Interpolation {
        inverse: tau.inverse(),
        tau: tau.clone(),
        sigma: sigma.clone(),
        variant,
        frame,
        frame_swapped,
        tag: tag.to_string(),
        vertices: Vec::new(),
        vertex_index: HashMap::new(),
        edges: Vec::new(),
        edge_index: HashMap::new(),
        complex: CellComplex::empty(),
    };

    let mut boundary: HashMap<Word, Word> = HashMap::new();
    for &s in &generators {
        let key = interp.key(s);
        if !interp.vertex_index.contains_key(&key) {
            interp.vertex_index.insert(key, interp.vertices.len());
            interp.vertices.push(key);
        }
        if s.is_empty() {
            continue;
        }
        let up = interp.key(interp.parent(s));
        match boundary.get(&key) {
            Some(&prev) if prev != up => return Err(TreeError::IllDefined(key.to_string())),
            Some(_) => {}
            None => {
                boundary.insert(key, up);
                interp.edge_index.insert(key, interp.edges.len());
                interp.edges.push(key);
            }
        }
    }
    let mut pairs = Vec::with_capacity(interp.edges.len());
    for key in &interp.edges {
        let up = boundary[key];
        let v = interp
            .vertex(up)
            .ok_or_else(|| TreeError::IllDefined(key.to_string()))?;
        pairs.push((interp.vertex_index[key], v));
    }
    let names0 = interp.vertices.iter().map(|&k| interp.label(k)).collect();
    let names1 = interp.edges.iter().map(|&k| interp.label(k)).collect();
    interp.complex = CellComplex::graph(names0, names1, &pairs)?;
    Ok(interp)
}

/// `Ωs` with respect to `τ𝓛`, for a `τ𝓛`-truncation `s`.
pub fn branching_truncation(leaves: &[Word], tau: &PermSeq, s: Word) -> Result<Word, TreeError> {
    let frame = LeafFrame::relabeled(tau.h(), Some(leaves), tau)?;
    if !frame.is_truncation(s) {
        return Err(TreeError::NotATruncation(s.to_string()));
    }
    Ok(frame.omega(s))
}

/// `Ω̃s` for the interpolation of `τ` and `στ` over leaves `𝓛` (`None` for
/// all strings). Requires `s` to be `τ𝓛`-branching or `σs` to be
/// `στ𝓛`-branching.
pub fn interpolating_truncation(
    leaves: Option<&[Word]>,
    tau: &PermSeq,
    sigma: &Swap,
    s: Word,
) -> Result<Word, TreeError> {
    let h = tau.h();
    let frame = LeafFrame::relabeled(h, leaves, tau)?;
    let frame_swapped = LeafFrame::relabeled(h, leaves, &sigma.as_perm_seq().compose(tau)?)?;
    if !(frame.is_branching(s) || frame_swapped.is_branching(sigma.apply(s))) {
        return Err(TreeError::NotInterpolating(s.to_string()));
    }
    let a = frame.omega(s);
    let b = sigma.apply(frame_swapped.omega(sigma.apply(s)));
    Ok(if b.len() > a.len() { b } else { a })
}

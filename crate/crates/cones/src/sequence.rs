//! Interpolation cones and their concatenation along a SWAP sequence.
//!
//! For trees `T⁰, …, Tⁿ` with labels `τⁱ = σⁱτⁱ⁻¹` and interpolations `Sⁱ`
//! between `Tⁱ` and `Tⁱ⁻¹`, the cone is taken over
//!
//! `g : TⁿSⁿ ⊕ SⁿTⁿ⁻¹ ⊕ ⋯ ⊕ S¹T⁰ → Tⁿ ⊕ Sⁿ ⊕ ⋯ ⊕ S¹ ⊕ T⁰`
//!
//! where `TⁱSⁱ` is a copy of `Tⁱ` and `SⁱTⁱ⁻¹` a copy of `Tⁱ⁻¹`. Writing
//! `T' = Tⁱ`, `T = Tⁱ⁻¹`, `S = Sⁱ`, `σ = σⁱ` and `Ω`, `Ω'` for the branching
//! truncations of `T`, `T'`, the map sends the copy cell with standard
//! string `t` (in `T'`) or `s` (in `T`) to
//!
//! | copy | image |
//! |------|-------|
//! | `T'S` edge `t` | `T'(t) + S(σ⋆σt)` `[+ S(σ⋆Ωσt)` if `‖Ωσt‖ > ‖Ω't‖]` |
//! | `ST` edge `s` | `S(σ⋆s) + T(s)` `[+ S(σ⋆σΩ'σs)` if `‖Ω'σs‖ > ‖Ωs‖]` |
//! | `T'S` vertex `t` | `T'(t) + S(σ⋆σt)` |
//! | `ST` vertex `s` | `S(σ⋆s) + T(s)` |
//!
//! with the bracketed terms present only for the pruned* variant. The
//! bracketed term is the `S` path from `σ⋆Ω̃σt` to `σ⋆σΩ't` (resp. from
//! `σ⋆Ω̃s` to `σ⋆σΩ'σs`), which the chain-map condition forces. It is a
//! single edge when the two frames' branching truncations differ by one
//! level. They can differ by two when the only candidate branching string
//! is `s` itself, which `Ω` excludes. The path then has two edges, and `S`
//! gains a *shortcut* edge between its ends, filled by one face. Face size
//! stays at most 5 and every summand of `D` stays contractible. Copies
//! sit one degree up in the cone: their edges become faces and their
//! vertices become the "rungs" joining each tree to its neighbouring
//! interpolations.

use std::collections::{BTreeSet, HashMap};

use cs_core::{mapping_cone, CellComplex, ConeMap, F2Matrix};
use cs_trees::{
    build_interpolation_tagged, build_tree_tagged, sigma_star, Interpolation, LabeledTree, PermSeq,
    Swap, Variant, Word,
};

use crate::{ConeError, HostPath};

/// The complex `C₁ → C₀` of a graph moved up to `C₂ → C₁` (with `C₀ = 0`).
pub fn shift_up(c: &CellComplex) -> Result<CellComplex, ConeError> {
    Ok(CellComplex::new(
        c.labels(1).to_vec(),
        c.labels(0).to_vec(),
        Vec::new(),
        c.d1().clone(),
        F2Matrix::zeros(0, c.dim(0)),
    )?)
}

/// A 1-cell added to an interpolation between two of its vertices, standing
/// in for the tree path (of length ≥ 2) between them.
#[derive(Clone, Debug)]
struct Shortcut {
    /// Endpoints, as rows of `D₀`.
    ends: (usize, usize),
    /// The spanned path, as rows of `D₁`.
    path: Vec<usize>,
}

struct MapColumns {
    g2: Vec<Vec<usize>>,
    g1: Vec<Vec<usize>>,
    shortcuts: Vec<Shortcut>,
}

/// Edges of the path between `a` and `b` in the forest given by parent
/// links, or `None` if they lie in different trees.
fn forest_path(up: &[Option<(usize, usize)>], a: usize, b: usize) -> Option<Vec<usize>> {
    let ancestors = |mut v: usize| {
        let mut chain = vec![(v, None)];
        while let Some((e, p)) = up[v] {
            chain.push((p, Some(e)));
            v = p;
        }
        chain
    };
    let (ca, cb) = (ancestors(a), ancestors(b));
    let on_b: HashMap<usize, usize> = cb.iter().enumerate().map(|(k, &(v, _))| (v, k)).collect();
    let (ka, kb) = ca
        .iter()
        .enumerate()
        .find_map(|(k, &(v, _))| on_b.get(&v).map(|&kb| (k, kb)))?;
    Some(
        ca[1..=ka]
            .iter()
            .chain(&cb[1..=kb])
            .filter_map(|&(_, e)| e)
            .collect(),
    )
}

/// A matrix from the row supports of its columns; repeated rows cancel.
fn columns_to_matrix(rows: usize, cols: Vec<Vec<usize>>) -> Result<F2Matrix, ConeError> {
    let n = cols.len();
    let toggles: Vec<(usize, usize)> = cols
        .into_iter()
        .enumerate()
        .flat_map(|(c, rs)| rs.into_iter().map(move |r| (r, c)))
        .collect();
    Ok(F2Matrix::from_toggles(rows, n, toggles)?)
}

/// A cone interpolating a SWAP sequence, with the bookkeeping needed to
/// locate tree cells and leaf paths inside it.
#[derive(Clone, Debug)]
pub struct SequenceCone {
    variant: Variant,
    trees: Vec<LabeledTree>,
    interps: Vec<Interpolation>,
    /// Offsets of the summands of `D` (order `T⁰, S¹, T¹, …, Sⁿ, Tⁿ`) in
    /// degrees 1 and 0.
    d_off1: Vec<usize>,
    d_off0: Vec<usize>,
    /// Offsets of the copy vertices (`TⁱSⁱ`, `SⁱTⁱ⁻¹` for `i = 1..n`) in `A₁`.
    a_off1: Vec<usize>,
    a: CellComplex,
    d: CellComplex,
    g: ConeMap,
    complex: CellComplex,
}

/// Builds the cone interpolating the trees with labels `τ⁰ = tau0` and
/// `τⁱ = σⁱτⁱ⁻¹`. `leaves` is the leaf set in the trivial frame (`None`
/// for all strings, full variant only).
pub fn sequence_cone(
    leaves: Option<&[Word]>,
    tau0: &PermSeq,
    swaps: &[Swap],
    variant: Variant,
) -> Result<SequenceCone, ConeError> {
    let h = tau0.h();
    let mut labels = vec![tau0.clone()];
    for sigma in swaps {
        let next = sigma
            .as_perm_seq()
            .compose(labels.last().expect("nonempty"))?;
        labels.push(next);
    }
    let trees = labels
        .iter()
        .enumerate()
        .map(|(i, tau)| build_tree_tagged(&format!("T{i}"), h, tau, leaves, variant))
        .collect::<Result<Vec<_>, _>>()?;
    let interps = swaps
        .iter()
        .enumerate()
        .map(|(k, sigma)| {
            build_interpolation_tagged(&format!("S{}", k + 1), leaves, &labels[k], sigma, variant)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut d_parts: Vec<&CellComplex> = vec![trees[0].complex()];
    for i in 1..trees.len() {
        d_parts.push(interps[i - 1].complex());
        d_parts.push(trees[i].complex());
    }
    let offsets = |deg: usize, parts: &[&CellComplex]| -> Vec<usize> {
        let mut off = vec![0];
        for p in parts {
            off.push(off.last().unwrap() + p.dim(deg));
        }
        off
    };
    let d_off1 = offsets(1, &d_parts);
    let d_off0 = offsets(0, &d_parts);
    let d = CellComplex::direct_sum(&d_parts)?;

    let mut copies = Vec::with_capacity(2 * swaps.len());
    for i in 1..trees.len() {
        copies.push(trees[i].retagged(&format!("T{i}S{i}"))?);
        copies.push(trees[i - 1].retagged(&format!("S{i}T{}", i - 1))?);
    }
    let shifted = copies
        .iter()
        .map(|c| shift_up(c.complex()))
        .collect::<Result<Vec<_>, _>>()?;
    let shifted_refs: Vec<&CellComplex> = shifted.iter().collect();
    let a_off1 = offsets(1, &shifted_refs);
    let a = if shifted.is_empty() {
        CellComplex::empty()
    } else {
        CellComplex::direct_sum(&shifted_refs)?
    };

    let mut cone = SequenceCone {
        variant,
        trees,
        interps,
        d_off1,
        d_off0,
        a_off1,
        a,
        d,
        g: ConeMap {
            g2: F2Matrix::zeros(0, 0),
            g1: F2Matrix::zeros(0, 0),
        },
        complex: CellComplex::empty(),
    };
    let cols = cone.build_map()?;
    cone.d = cone.with_shortcuts(&cols.shortcuts)?;
    cone.g = ConeMap {
        g2: columns_to_matrix(cone.d.dim(1), cols.g2)?,
        g1: columns_to_matrix(cone.d.dim(0), cols.g1)?,
    };
    cone.complex = mapping_cone(&cone.a, &cone.d, &cone.g)?;
    Ok(cone)
}

/// The cone over a single SWAP: trees with labels `στ` and `τ` and their
/// interpolation.
pub fn interpolation_cone(
    leaves: Option<&[Word]>,
    tau: &PermSeq,
    sigma: &Swap,
    variant: Variant,
) -> Result<SequenceCone, ConeError> {
    sequence_cone(leaves, tau, std::slice::from_ref(sigma), variant)
}

fn missing(what: &str, w: Word) -> ConeError {
    ConeError::MissingCell(format!("{what} {w:?}"))
}

impl SequenceCone {
    /// `n`, the number of SWAP steps.
    pub fn steps(&self) -> usize {
        self.interps.len()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn trees(&self) -> &[LabeledTree] {
        &self.trees
    }

    pub fn interpolations(&self) -> &[Interpolation] {
        &self.interps
    }

    /// The source of the cone map (shifted copies).
    pub fn source(&self) -> &CellComplex {
        &self.a
    }

    /// The target of the cone map (trees and interpolations).
    pub fn target(&self) -> &CellComplex {
        &self.d
    }

    pub fn cone_map(&self) -> &ConeMap {
        &self.g
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn into_complex(self) -> CellComplex {
        self.complex
    }

    /// Row in `D₁` / `D₀` of tree `i`'s edge / vertex with standard string `s`.
    fn d_tree_edge(&self, i: usize, s: Word) -> Result<usize, ConeError> {
        let e = self.trees[i]
            .edge(s)
            .ok_or_else(|| missing("tree edge", s))?;
        Ok(self.d_off1[2 * i] + e)
    }

    fn d_tree_vertex(&self, i: usize, s: Word) -> Result<usize, ConeError> {
        let v = self.trees[i]
            .vertex(s)
            .ok_or_else(|| missing("tree vertex", s))?;
        Ok(self.d_off0[2 * i] + v)
    }

    /// Row of interpolation `Sⁱ` (1-based) edge / vertex keyed `key`.
    fn d_interp_edge(&self, i: usize, key: Word) -> Result<usize, ConeError> {
        let e = self.interps[i - 1]
            .edge(key)
            .ok_or_else(|| missing("interpolation edge", key))?;
        Ok(self.d_off1[2 * i - 1] + e)
    }

    fn d_interp_vertex(&self, i: usize, key: Word) -> Result<usize, ConeError> {
        let v = self.interps[i - 1]
            .vertex(key)
            .ok_or_else(|| missing("interpolation vertex", key))?;
        Ok(self.d_off0[2 * i - 1] + v)
    }

    /// Parent links `(edge, parent vertex)` of interpolation `Sⁱ`
    /// (1-based), in local indices. Edge keyed `k` joins vertex `k` to a
    /// strictly shorter key, so the links form a forest.
    fn interp_parents(&self, i: usize) -> Result<Vec<Option<(usize, usize)>>, ConeError> {
        let interp = &self.interps[i - 1];
        let c = interp.complex();
        let mut up = vec![None; c.dim(0)];
        for (e, &key) in interp.edges().iter().enumerate() {
            let child = interp
                .vertex(key)
                .ok_or_else(|| missing("interpolation vertex", key))?;
            let ends = c.d1().column(e);
            let parent = if ends[0] == child { ends[1] } else { ends[0] };
            up[child] = Some((e, parent));
        }
        Ok(up)
    }

    /// The leftover boundary in `Sⁱ` of a copy edge whose image so far is
    /// `col`, given `g₀` of its endpoints: empty, or the two `S` vertices
    /// (local indices) that the rest of the image must join.
    fn residual_in_interp(
        &self,
        i: usize,
        col: &[usize],
        g0_ends: [&[usize]; 2],
    ) -> Result<Option<(usize, usize)>, ConeError> {
        let mut residual: BTreeSet<usize> = BTreeSet::new();
        let mut toggle = |r: usize| {
            if !residual.remove(&r) {
                residual.insert(r);
            }
        };
        for rows in g0_ends {
            rows.iter().for_each(|&r| toggle(r));
        }
        for &e in col {
            self.d.d1().column(e).iter().for_each(|&r| toggle(r));
        }
        if residual.is_empty() {
            return Ok(None);
        }
        let (lo, hi) = (self.d_off0[2 * i - 1], self.d_off0[2 * i]);
        let ends: Vec<usize> = residual.into_iter().collect();
        if ends.len() != 2 || ends.iter().any(|&r| r < lo || r >= hi) {
            return Err(ConeError::Path(format!(
                "copy edge boundary leaves {} cells outside S{i}",
                ends.len()
            )));
        }
        Ok(Some((ends[0] - lo, ends[1] - lo)))
    }

    /// Columns of `g₂` and `g₁` (as lists of `D` rows) and the shortcuts
    /// the pruned* images need.
    fn build_map(&self) -> Result<MapColumns, ConeError> {
        let mut cols2: Vec<Vec<usize>> = Vec::with_capacity(self.a.dim(2));
        let mut cols1: Vec<Vec<usize>> = Vec::with_capacity(self.a.dim(1));
        let mut shortcuts: Vec<Shortcut> = Vec::new();
        let mut shortcut_index: HashMap<(usize, usize, usize), usize> = HashMap::new();
        let star = self.variant == Variant::PrunedStar;
        for i in 1..self.trees.len() {
            let sigma = self.interps[i - 1].sigma();
            let (tp, t) = (&self.trees[i], &self.trees[i - 1]);
            let up = if star {
                self.interp_parents(i)?
            } else {
                Vec::new()
            };
            let g0_tp = |u: Word| -> Result<Vec<usize>, ConeError> {
                Ok(vec![
                    self.d_tree_vertex(i, u)?,
                    self.d_interp_vertex(i, sigma_star(sigma, sigma.apply(u)))?,
                ])
            };
            let g0_t = |s: Word| -> Result<Vec<usize>, ConeError> {
                Ok(vec![
                    self.d_interp_vertex(i, sigma_star(sigma, s))?,
                    self.d_tree_vertex(i - 1, s)?,
                ])
            };
            // Closes a pruned* image: one `S` edge when the truncations of
            // the two frames differ by one level (the paper's indicator
            // term), a shortcut across the `S` path otherwise.
            let mut close = |col: &mut Vec<usize>, ends: [&[usize]; 2]| -> Result<(), ConeError> {
                let Some((x, y)) = self.residual_in_interp(i, col, ends)? else {
                    return Ok(());
                };
                let path = forest_path(&up, x, y).ok_or_else(|| {
                    ConeError::Path(format!("interpolation S{i} is not connected"))
                })?;
                let base = self.d_off1[2 * i - 1];
                if path.len() == 1 {
                    col.push(base + path[0]);
                    return Ok(());
                }
                let key = (i, x.min(y), x.max(y));
                let k = *shortcut_index.entry(key).or_insert_with(|| {
                    shortcuts.push(Shortcut {
                        ends: (self.d_off0[2 * i - 1] + x, self.d_off0[2 * i - 1] + y),
                        path: path.iter().map(|&e| base + e).collect(),
                    });
                    shortcuts.len() - 1
                });
                col.push(self.d.dim(1) + k);
                Ok(())
            };

            // T'S copy: cells of T' = Tⁱ.
            for &u in tp.edges() {
                let mut col = vec![
                    self.d_tree_edge(i, u)?,
                    self.d_interp_edge(i, sigma_star(sigma, sigma.apply(u)))?,
                ];
                if star {
                    close(&mut col, [&g0_tp(u)?, &g0_tp(tp.parent(u))?])?;
                }
                cols2.push(col);
            }
            // ST copy: cells of T = Tⁱ⁻¹.
            for &s in t.edges() {
                let mut col = vec![
                    self.d_interp_edge(i, sigma_star(sigma, s))?,
                    self.d_tree_edge(i - 1, s)?,
                ];
                if star {
                    close(&mut col, [&g0_t(s)?, &g0_t(t.parent(s))?])?;
                }
                cols2.push(col);
            }
            for &u in tp.vertices() {
                cols1.push(g0_tp(u)?);
            }
            for &s in t.vertices() {
                cols1.push(g0_t(s)?);
            }
        }
        Ok(MapColumns {
            g2: cols2,
            g1: cols1,
            shortcuts,
        })
    }

    /// `D` with every shortcut added as a 1-cell, each filled by one 2-cell
    /// bounded by the shortcut and the `S` path it spans. `D` stays a
    /// disjoint union of contractible pieces.
    fn with_shortcuts(&self, shortcuts: &[Shortcut]) -> Result<CellComplex, ConeError> {
        if shortcuts.is_empty() {
            return Ok(self.d.clone());
        }
        let (n1, n0) = (self.d.dim(1), self.d.dim(0));
        let names0 = self.d.labels(0);
        let mut labels1 = self.d.labels(1).to_vec();
        let mut labels2 = Vec::with_capacity(shortcuts.len());
        let mut d1_cols: Vec<Vec<usize>> =
            (0..n1).map(|e| self.d.d1().column(e).to_vec()).collect();
        let mut d2_cols = Vec::with_capacity(shortcuts.len());
        for (k, sc) in shortcuts.iter().enumerate() {
            let name = format!("{}~{}", names0[sc.ends.0], names0[sc.ends.1]);
            labels1.push(name.clone());
            labels2.push(format!("{name}:fill"));
            d1_cols.push(vec![sc.ends.0, sc.ends.1]);
            let mut face = sc.path.clone();
            face.push(n1 + k);
            d2_cols.push(face);
        }
        let n1_new = labels1.len();
        Ok(CellComplex::new(
            labels2,
            labels1,
            names0.to_vec(),
            F2Matrix::from_columns(n1_new, d2_cols)?,
            F2Matrix::from_columns(n0, d1_cols)?,
        )?)
    }

    /// Cone 0-cell of tree `i`'s vertex with standard string `s`.
    pub fn tree_vertex(&self, i: usize, s: Word) -> Option<usize> {
        self.d_tree_vertex(i, s).ok()
    }

    /// Cone 1-cell of tree `i`'s edge with standard string `s`.
    pub fn tree_edge(&self, i: usize, s: Word) -> Option<usize> {
        self.d_tree_edge(i, s).ok().map(|r| self.a.dim(1) + r)
    }

    /// Cone 0-cell of interpolation `Sⁱ` (1-based) vertex keyed `key`.
    pub fn interp_vertex(&self, i: usize, key: Word) -> Option<usize> {
        self.d_interp_vertex(i, key).ok()
    }

    /// Cone 1-cell of the rung from `Tⁱ` vertex `t` to `Sⁱ` (1-based `i`).
    fn rung_ts(&self, i: usize, t: Word) -> Option<usize> {
        Some(self.a_off1[2 * (i - 1)] + self.trees[i].vertex(t)?)
    }

    /// Cone 1-cell of the rung from `Sⁱ` to `Tⁱ⁻¹` vertex `s`.
    fn rung_st(&self, i: usize, s: Word) -> Option<usize> {
        Some(self.a_off1[2 * (i - 1) + 1] + self.trees[i - 1].vertex(s)?)
    }

    /// The path `|x, T⁰⟩ → |x, S¹⟩ → |x, T¹⟩ → ⋯ → |x, Tⁿ⟩` of length `2n`
    /// for a leaf `x` given in the trivial frame (cell names are `τ̄ⁱ` of
    /// the standard strings, so `x` names the leaf in every tree).
    pub fn leaf_path(&self, x: Word) -> Result<HostPath, ConeError> {
        let std0 = self.trees[0].labels().apply(x)?;
        let mut path = HostPath::at(self.d_tree_vertex(0, std0)?);
        for i in 1..self.trees.len() {
            let sigma = self.interps[i - 1].sigma();
            let s = self.trees[i - 1].labels().apply(x)?;
            let t = self.trees[i].labels().apply(x)?;
            let key = sigma_star(sigma, s);
            let sv = self.d_interp_vertex(i, key)?;
            path.step(self.rung_st(i, s).ok_or_else(|| missing("rung", s))?, sv);
            let tv = self.d_tree_vertex(i, t)?;
            path.step(self.rung_ts(i, t).ok_or_else(|| missing("rung", t))?, tv);
        }
        Ok(path)
    }

    /// The path inside tree `i` from standard string `from` up to its
    /// ancestor `to`, following parent links.
    pub fn tree_path_up(&self, i: usize, from: Word, to: Word) -> Result<HostPath, ConeError> {
        let tree = &self.trees[i];
        if !to.is_prefix_of(from) {
            return Err(ConeError::Path(format!("{to:?} is not above {from:?}")));
        }
        let mut path = HostPath::at(self.d_tree_vertex(i, from)?);
        let mut cur = from;
        while cur != to {
            let up = tree.parent(cur);
            if up.len() < to.len() {
                return Err(ConeError::Path(format!(
                    "{to:?} is not a vertex on the way up from {from:?}"
                )));
            }
            let e = self
                .tree_edge(i, cur)
                .ok_or_else(|| missing("tree edge", cur))?;
            path.step(e, self.d_tree_vertex(i, up)?);
            cur = up;
        }
        Ok(path)
    }
}

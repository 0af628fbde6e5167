//! Cheeger constants: exact by subset enumeration, bounded spectrally.
//!
//! The edge-expansion Cheeger constant is
//! `h(G) = min_{0 < |S| ≤ |V|/2} |∂S| / |S|`. The spectral certificate uses
//! the normalized Laplacian: `λ₂/2` bounds the conductance
//! `φ(G) = min_{vol S ≤ vol V/2} |∂S| / vol S` from below, and
//! `h(G) ≥ d_min · φ(G)`.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::Ratio;

use crate::{Graph, GraphError};

/// Largest vertex count for [`cheeger_exact`] (`2^22` subsets).
pub const MAX_EXACT_VERTICES: usize = 22;

/// Relative safety margin subtracted from floating-point eigenvalue bounds.
const SPECTRAL_MARGIN: f64 = 1e-9;

/// The exact edge-expansion Cheeger constant, enumerating subsets in Gray
/// code order with an incrementally maintained boundary.
pub fn cheeger_exact(g: &Graph) -> Result<Ratio<u64>, GraphError> {
    let n = g.n_vertices();
    if n > MAX_EXACT_VERTICES {
        return Err(GraphError::TooLarge(n));
    }
    if n < 2 {
        return Err(GraphError::TooSmall(n));
    }
    let adj: Vec<Vec<usize>> = g
        .adjacency()
        .into_iter()
        .map(|l| l.into_iter().map(|(v, _)| v).collect())
        .collect();
    let half = n / 2;
    let (mut best_b, mut best_s) = (u64::MAX, 1u64);
    let (mut set, mut size, mut boundary) = (0u32, 0usize, 0i64);
    for i in 1u32..1 << n {
        let v = i.trailing_zeros() as usize;
        let inside = adj[v].iter().filter(|&&u| set >> u & 1 == 1).count() as i64;
        let outside = adj[v].len() as i64 - inside;
        if set >> v & 1 == 1 {
            set &= !(1 << v);
            size -= 1;
            boundary += inside - outside;
        } else {
            set |= 1 << v;
            size += 1;
            boundary += outside - inside;
        }
        if size >= 1 && size <= half {
            let b = boundary as u64;
            if (b as u128) * (best_s as u128) < (best_b as u128) * (size as u128) {
                (best_b, best_s) = (b, size as u64);
            }
        }
    }
    Ok(Ratio::new(best_b, best_s))
}

/// `λ₂/2` for the normalized Laplacian, a lower bound on the conductance
/// (and, since `d_min ≥ 1` on connected graphs, on the edge expansion).
/// Disconnected graphs and graphs with fewer than two vertices give 0.
pub fn cheeger_spectral_lb(g: &Graph) -> f64 {
    let n = g.n_vertices();
    if n < 2 || !g.is_connected() {
        return 0.0;
    }
    let deg = g.degrees();
    let mut l = DMatrix::<f64>::identity(n, n);
    for &(u, v) in g.edges() {
        let w = 1.0 / ((deg[u] * deg[v]) as f64).sqrt();
        l[(u, v)] -= w;
        l[(v, u)] -= w;
    }
    let mut eig: Vec<f64> = SymmetricEigen::new(l).eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    (eig[1] / 2.0 - SPECTRAL_MARGIN * eig[1].abs().max(1.0)).max(0.0)
}

/// `d_min · λ₂/2`, a lower bound on the edge-expansion Cheeger constant.
pub fn edge_expansion_lb(g: &Graph) -> f64 {
    g.min_degree() as f64 * cheeger_spectral_lb(g)
}

/// How a Cheeger value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheegerMethod {
    /// Exact subset enumeration; the value is `h(G)` itself.
    Exact,
    /// The lower bound `d_min·λ₂/2` on `h(G)`.
    Spectral,
}

impl fmt::Display for CheegerMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheegerMethod::Exact => "exact",
            CheegerMethod::Spectral => "spectral",
        })
    }
}

/// A certified lower bound on the edge-expansion Cheeger constant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheegerCertificate {
    pub method: CheegerMethod,
    /// The certified value as a float.
    pub value: f64,
    /// The exact value, for [`CheegerMethod::Exact`].
    pub exact: Option<Ratio<u64>>,
}

impl CheegerCertificate {
    /// True iff the certified value is at least `target`.
    pub fn meets(&self, target: Ratio<u64>) -> bool {
        match self.exact {
            Some(h) => h >= target,
            None => self.value >= *target.numer() as f64 / *target.denom() as f64,
        }
    }

    /// `min(h, 1)` as a float.
    pub fn capped(&self) -> f64 {
        self.value.min(1.0)
    }
}

/// Certifies `g`: exactly when it has at most [`MAX_EXACT_VERTICES`]
/// vertices, spectrally otherwise.
pub fn certify(g: &Graph) -> Result<CheegerCertificate, GraphError> {
    if g.n_vertices() <= MAX_EXACT_VERTICES {
        let h = cheeger_exact(g)?;
        Ok(CheegerCertificate {
            method: CheegerMethod::Exact,
            value: *h.numer() as f64 / *h.denom() as f64,
            exact: Some(h),
        })
    } else {
        Ok(CheegerCertificate {
            method: CheegerMethod::Spectral,
            value: edge_expansion_lb(g),
            exact: None,
        })
    }
}

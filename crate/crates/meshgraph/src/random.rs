//! Seeded random graph families used by the scaling harness and tests.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Graph, GraphError};

const REGULAR_ATTEMPTS: usize = 1000;

/// A uniformly-ish random simple `d`-regular graph on `n` vertices, drawn by
/// the pairing model with restarts on loops or repeated edges.
pub fn random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> Result<Graph, GraphError> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(GraphError::Mismatch(format!(
            "no simple {d}-regular graph on {n} vertices"
        )));
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
    'attempt: for _ in 0..REGULAR_ATTEMPTS {
        stubs.shuffle(rng);
        let mut seen = HashSet::with_capacity(n * d / 2);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        return Graph::with_vertices(n, edges);
    }
    Err(GraphError::Mismatch(format!(
        "pairing model found no simple {d}-regular graph on {n} vertices"
    )))
}

/// A random connected simple graph on `n` vertices with maximum degree at
/// most `max_degree` (≥ 2 when `n > 2`): a random degree-capped spanning
/// tree plus up to `extra` random chords that respect the cap.
pub fn random_connected<R: Rng>(
    n: usize,
    max_degree: usize,
    extra: usize,
    rng: &mut R,
) -> Result<Graph, GraphError> {
    if (n > 2 && max_degree < 2) || (n == 2 && max_degree < 1) {
        return Err(GraphError::Mismatch(format!(
            "cannot connect {n} vertices with maximum degree {max_degree}"
        )));
    }
    let mut deg = vec![0usize; n];
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for k in 1..n {
        let v = order[k];
        // Some earlier vertex always has spare degree: the tree so far has
        // k−1 edges on k vertices, and max_degree ≥ 2.
        let open: Vec<usize> = order[..k]
            .iter()
            .copied()
            .filter(|&u| deg[u] < max_degree)
            .collect();
        let u = *open
            .choose(rng)
            .expect("a tree with cap ≥ 2 has a free slot");
        deg[u] += 1;
        deg[v] += 1;
        seen.insert((u.min(v), u.max(v)));
        edges.push((u.min(v), u.max(v)));
    }
    let mut tries = 0;
    let mut added = 0;
    while added < extra && tries < 20 * (extra + 1) && n >= 2 {
        tries += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let key = (u.min(v), u.max(v));
        if u == v || deg[u] >= max_degree || deg[v] >= max_degree || !seen.insert(key) {
            continue;
        }
        deg[u] += 1;
        deg[v] += 1;
        edges.push(key);
        added += 1;
    }
    Graph::with_vertices(n, edges)
}

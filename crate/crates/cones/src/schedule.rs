//! SWAP schedules realizing the block rotation `τ_h`.
//!
//! `τ_h` exchanges the first `h₀` and last `h₁` positions of an `h`-bit
//! string: `(s₁⋯s_{h₀})(s_{h₀+1}⋯s_h) ↦ (s_{h₀+1}⋯s_h)(s₁⋯s_{h₀})`. A schedule
//! is a list of non-interacting SWAPs whose composition (first layer applied
//! first) acts as `τ_h` on full-length strings. Layers come from odd-even
//! transposition sort, which needs at most `h` rounds, and every schedule is
//! checked by composing it before it is returned.

use cs_trees::{PermSeq, Swap};

use crate::ConeError;

/// A verified schedule for the rotation of `h₀ + h₁` positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapSchedule {
    pub h0: usize,
    pub h1: usize,
    /// The nontrivial layers, in application order.
    pub layers: Vec<Swap>,
}

impl SwapSchedule {
    pub fn h(&self) -> usize {
        self.h0 + self.h1
    }

    /// The layers preceded by trivial SWAPs so that there are exactly `h` of
    /// them; a sequence cone over these has `h` interpolation steps, which
    /// fixes the deformation length at `3h`.
    pub fn padded(&self) -> Vec<Swap> {
        let h = self.h();
        let mut out = vec![Swap::trivial(h); h - self.layers.len()];
        out.extend(self.layers.iter().cloned());
        out
    }

    /// `τⁿ = σⁿ ⋯ σ¹` for the given layers, starting from trivial labels.
    pub fn composed(&self) -> Result<PermSeq, ConeError> {
        compose_layers(self.h(), &self.layers)
    }
}

/// Destination of every position under `τ_h` (0-based).
pub fn rotation(h0: usize, h1: usize) -> Vec<usize> {
    (0..h0 + h1)
        .map(|j| if j < h0 { j + h1 } else { j - h0 })
        .collect()
}

/// `σⁿ ∘ ⋯ ∘ σ¹` as labels of height `h`.
pub fn compose_layers(h: usize, layers: &[Swap]) -> Result<PermSeq, ConeError> {
    let mut tau = PermSeq::identity(h);
    for sigma in layers {
        tau = sigma.as_perm_seq().compose(&tau)?;
    }
    Ok(tau)
}

/// True iff the composed layers act as `τ_h` on length-`h` strings.
pub fn realizes_rotation(h0: usize, h1: usize, layers: &[Swap]) -> Result<bool, ConeError> {
    let h = h0 + h1;
    let tau = compose_layers(h, layers)?;
    Ok(tau
        .perm(h)
        .iter()
        .zip(rotation(h0, h1))
        .all(|(&a, b)| a as usize == b))
}

/// Builds and verifies a schedule realizing `τ_h` in at most `h` layers.
pub fn swap_schedule(h0: usize, h1: usize) -> Result<SwapSchedule, ConeError> {
    if h0 == 0 || h1 == 0 {
        return Err(ConeError::Schedule(format!(
            "partition heights must be positive, got ({h0}, {h1})"
        )));
    }
    let h = h0 + h1;
    // `target[p]` is where the symbol currently at position `p` must end up.
    let mut target = rotation(h0, h1);
    let mut layers = Vec::new();
    for round in 0..h {
        let mut indices = Vec::new();
        let mut p = round % 2;
        while p + 1 < h {
            if target[p] > target[p + 1] {
                target.swap(p, p + 1);
                // SWAP index `p + 1` exchanges 1-based positions p+1 and p+2.
                indices.push(p + 1);
            }
            p += 2;
        }
        if !indices.is_empty() {
            layers.push(Swap::new(h, indices)?);
        }
    }
    if layers.len() > h || !realizes_rotation(h0, h1, &layers)? {
        return Err(ConeError::Schedule(format!(
            "transposition routing failed for ({h0}, {h1})"
        )));
    }
    Ok(SwapSchedule { h0, h1, layers })
}

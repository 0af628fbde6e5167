//! Label sequences and SWAPs.

use crate::{TreeError, Word, MAX_HEIGHT};

/// A sequence of permutations `τ = (τ₁, …, τ_h)`, `τ_ℓ` acting on strings of
/// length `ℓ` by `(τs)_k = s_{τ̄(k)}`, i.e. the symbol at position `j` moves
/// to position `τ(j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermSeq {
    /// `perms[ℓ-1][j] = τ_ℓ(j)`, 0-based.
    perms: Vec<Vec<u8>>,
}

impl PermSeq {
    /// The trivial labels of height `h`.
    pub fn identity(h: usize) -> Self {
        Self {
            perms: (1..=h).map(|l| (0..l as u8).collect()).collect(),
        }
    }

    /// Validates and wraps explicit permutations (`perms[ℓ-1]` has length `ℓ`).
    pub fn new(perms: Vec<Vec<u8>>) -> Result<Self, TreeError> {
        if perms.len() > MAX_HEIGHT {
            return Err(TreeError::HeightTooLarge(perms.len()));
        }
        for (i, p) in perms.iter().enumerate() {
            let l = i + 1;
            let mut seen = vec![false; l];
            if p.len() != l {
                return Err(TreeError::BadPermutation(l));
            }
            for &x in p {
                if x as usize >= l || seen[x as usize] {
                    return Err(TreeError::BadPermutation(l));
                }
                seen[x as usize] = true;
            }
        }
        Ok(Self { perms })
    }

    pub fn h(&self) -> usize {
        self.perms.len()
    }

    /// `τ_ℓ` as a 0-based position map.
    pub fn perm(&self, l: usize) -> &[u8] {
        &self.perms[l - 1]
    }

    /// `τs` (the symbols of `s` reordered by `τ_{‖s‖}`).
    pub fn apply(&self, s: Word) -> Result<Word, TreeError> {
        if s.len() > self.h() {
            return Err(TreeError::LengthOverflow {
                len: s.len(),
                h: self.h(),
            });
        }
        Ok(if s.is_empty() {
            s
        } else {
            s.permuted(self.perm(s.len()))
        })
    }

    /// `τ̄`, the inverse labels.
    pub fn inverse(&self) -> Self {
        Self {
            perms: self
                .perms
                .iter()
                .map(|p| {
                    let mut inv = vec![0u8; p.len()];
                    for (j, &x) in p.iter().enumerate() {
                        inv[x as usize] = j as u8;
                    }
                    inv
                })
                .collect(),
        }
    }

    /// `self ∘ other`: apply `other` first. With the action above,
    /// `P_self P_other = P_{self ∘ other}`.
    pub fn compose(&self, other: &Self) -> Result<Self, TreeError> {
        if self.h() != other.h() {
            return Err(TreeError::HeightMismatch(self.h(), other.h()));
        }
        Ok(Self {
            perms: self
                .perms
                .iter()
                .zip(&other.perms)
                .map(|(a, b)| b.iter().map(|&x| a[x as usize]).collect())
                .collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.perms
            .iter()
            .all(|p| p.iter().enumerate().all(|(j, &x)| j == x as usize))
    }
}

/// `τs` for labels `τ`.
pub fn apply_label(tau: &PermSeq, s: Word) -> Result<Word, TreeError> {
    tau.apply(s)
}

/// A SWAP `σ` of height `h` with index set `I ⊆ {1, …, h}` (1-based):
/// `σ_ℓ` is the product of the transpositions `(i, i+1)` for `i ∈ I`,
/// `i < ℓ`. Indices must not interact (`i + 1 ∉ I` for `i ∈ I`), so every
/// `σ_ℓ` is an involution.
///
/// The index `h` itself is accepted: it never permutes a string of length
/// `≤ h`, but `σ⋆` still marks the last symbol of full-length strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Swap {
    h: usize,
    indices: Vec<usize>,
}

impl Swap {
    pub fn new(h: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self, TreeError> {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let bad = idx.iter().any(|&i| i == 0 || i > h) || idx.windows(2).any(|w| w[1] == w[0] + 1);
        if bad || h > MAX_HEIGHT {
            return Err(TreeError::BadSwap { h, indices: idx });
        }
        Ok(Self { h, indices: idx })
    }

    /// The trivial SWAP.
    pub fn trivial(h: usize) -> Self {
        Self {
            h,
            indices: Vec::new(),
        }
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// The 1-based index set `I`.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.is_empty()
    }

    /// True iff `ℓ ∈ I`.
    pub fn contains(&self, l: usize) -> bool {
        self.indices.binary_search(&l).is_ok()
    }

    /// `σs` for a word of length `≤ h`.
    pub fn apply(&self, s: Word) -> Word {
        let l = s.len();
        self.indices
            .iter()
            .take_while(|&&i| i < l)
            .fold(s, |w, &i| w.swapped(i - 1, i))
    }

    /// `σ` as a label sequence.
    pub fn as_perm_seq(&self) -> PermSeq {
        let perms = (1..=self.h)
            .map(|l| {
                let mut p: Vec<u8> = (0..l as u8).collect();
                for &i in self.indices.iter().take_while(|&&i| i < l) {
                    p.swap(i - 1, i);
                }
                p
            })
            .collect();
        PermSeq { perms }
    }
}

/// `σ⋆s`: if `‖s‖ ∈ I` the last symbol becomes `⋆`, otherwise `s` is
/// unchanged.
pub fn sigma_star(sigma: &Swap, s: Word) -> Word {
    if sigma.contains(s.len()) {
        s.star_last()
    } else {
        s
    }
}

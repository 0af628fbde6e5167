//! Leaf sets seen in a tree's standard frame: truncations, branching strings
//! and the branching truncation `Ω`.

use std::collections::HashSet;

use crate::{PermSeq, TreeError, Word, MAX_HEIGHT};

/// The leaf set `τ𝓛` of a tree, expressed in its standard frame.
///
/// A *truncation* is a prefix of a leaf (the leaf itself included). A
/// truncation `s` is *branching* if it is empty, a leaf, or both `s0` and
/// `s1` are truncations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeafFrame {
    /// Every string of length `h` is a leaf.
    All { h: usize },
    /// An explicit leaf set together with all its truncations.
    Set {
        h: usize,
        leaves: HashSet<Word>,
        truncations: HashSet<Word>,
    },
}

impl LeafFrame {
    pub fn all(h: usize) -> Self {
        LeafFrame::All { h }
    }

    /// Builds the frame of an explicit leaf set. Leaves must have length `h`
    /// and contain no `⋆`.
    pub fn from_leaves(
        h: usize,
        leaves: impl IntoIterator<Item = Word>,
    ) -> Result<Self, TreeError> {
        if h == 0 {
            return Err(TreeError::ZeroHeight);
        }
        if h > MAX_HEIGHT {
            return Err(TreeError::HeightTooLarge(h));
        }
        let leaves: HashSet<Word> = leaves.into_iter().collect();
        let mut truncations = HashSet::with_capacity(leaves.len() * (h + 1));
        for &x in &leaves {
            if x.len() != h || x.has_star() {
                return Err(TreeError::LeafLength(x.to_string()));
            }
            for m in (0..=h).rev() {
                if !truncations.insert(x.prefix(m)) {
                    break;
                }
            }
        }
        Ok(LeafFrame::Set {
            h,
            leaves,
            truncations,
        })
    }

    /// The frame of `τ𝓛` for a leaf set `𝓛` given in the trivial frame
    /// (`None` meaning all strings).
    pub fn relabeled(h: usize, leaves: Option<&[Word]>, tau: &PermSeq) -> Result<Self, TreeError> {
        if tau.h() != h {
            return Err(TreeError::HeightMismatch(tau.h(), h));
        }
        match leaves {
            None => Ok(LeafFrame::All { h }),
            Some(ls) => {
                let mapped = ls
                    .iter()
                    .map(|&x| {
                        if x.len() != h {
                            Err(TreeError::LeafLength(x.to_string()))
                        } else {
                            tau.apply(x)
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Self::from_leaves(h, mapped)
            }
        }
    }

    pub fn h(&self) -> usize {
        match self {
            LeafFrame::All { h } | LeafFrame::Set { h, .. } => *h,
        }
    }

    pub fn is_leaf(&self, s: Word) -> bool {
        match self {
            LeafFrame::All { h } => s.len() == *h && !s.has_star(),
            LeafFrame::Set { leaves, .. } => leaves.contains(&s),
        }
    }

    pub fn is_truncation(&self, s: Word) -> bool {
        match self {
            LeafFrame::All { h } => s.len() <= *h && !s.has_star(),
            LeafFrame::Set { truncations, .. } => truncations.contains(&s),
        }
    }

    pub fn is_branching(&self, s: Word) -> bool {
        if s.is_empty() {
            return true;
        }
        if !self.is_truncation(s) {
            return false;
        }
        s.len() == self.h()
            || (self.is_truncation(s.push(false)) && self.is_truncation(s.push(true)))
    }

    /// `Ω(s)`: the longest proper prefix of `s` that is branching. Defined
    /// for every nonempty `s` (the empty prefix always qualifies); for the
    /// empty word it returns the empty word.
    pub fn omega(&self, s: Word) -> Word {
        if let LeafFrame::All { .. } = self {
            return s.parent();
        }
        (0..s.len())
            .rev()
            .map(|m| s.prefix(m))
            .find(|&p| self.is_branching(p))
            .unwrap_or(Word::EMPTY)
    }

    /// All truncations, sorted by length then bits (deterministic order).
    pub fn truncations(&self) -> Vec<Word> {
        let mut out: Vec<Word> = match self {
            LeafFrame::All { h } => (0..=*h).flat_map(Word::all_of_length).collect(),
            LeafFrame::Set { truncations, .. } => truncations.iter().copied().collect(),
        };
        out.sort_unstable();
        out
    }

    /// All branching strings, sorted.
    pub fn branching(&self) -> Vec<Word> {
        self.truncations()
            .into_iter()
            .filter(|&s| self.is_branching(s))
            .collect()
    }

    /// All leaves, sorted.
    pub fn leaves(&self) -> Vec<Word> {
        let mut out: Vec<Word> = match self {
            LeafFrame::All { h } => Word::all_of_length(*h).collect(),
            LeafFrame::Set { leaves, .. } => leaves.iter().copied().collect(),
        };
        out.sort_unstable();
        out
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            LeafFrame::All { h } => 1 << h,
            LeafFrame::Set { leaves, .. } => leaves.len(),
        }
    }
}

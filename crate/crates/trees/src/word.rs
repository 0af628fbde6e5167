//! Words over `{0, 1, ⋆}` packed into machine words.

use std::fmt;
use std::str::FromStr;

use crate::{TreeError, MAX_HEIGHT};

/// A string of length `≤ 63` over `{0, 1, ⋆}`.
///
/// Position `k` (0-based, left to right) is bit `k` of `bits`; positions
/// holding `⋆` are flagged in `star` and have a zero bit, so prefix tests and
/// `ω` stay plain mask operations.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
    star: u64,
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Word {
    /// The empty word `∅`.
    pub const EMPTY: Word = Word {
        len: 0,
        bits: 0,
        star: 0,
    };

    /// The binary expansion of `value` on `len` bits, most significant first.
    pub fn from_index(value: u64, len: usize) -> Word {
        assert!(len <= MAX_HEIGHT, "word length {len} too large");
        let mut w = Word::EMPTY;
        for k in (0..len).rev() {
            w = w.push(value >> k & 1 == 1);
        }
        w
    }

    /// A word from explicit bits.
    pub fn from_bools(bits: &[bool]) -> Word {
        bits.iter().fold(Word::EMPTY, |w, &b| w.push(b))
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// The bit at position `k`, or `None` for `⋆`.
    pub fn bit(self, k: usize) -> Option<bool> {
        assert!(k < self.len(), "position {k} out of range");
        if self.star >> k & 1 == 1 {
            None
        } else {
            Some(self.bits >> k & 1 == 1)
        }
    }

    pub fn has_star(self) -> bool {
        self.star != 0
    }

    /// Appends one bit.
    pub fn push(self, b: bool) -> Word {
        assert!(self.len() < MAX_HEIGHT, "word too long");
        Word {
            len: self.len + 1,
            bits: self.bits | (u64::from(b) << self.len),
            star: self.star,
        }
    }

    /// `ω`: removes the last symbol (the empty word is its own parent).
    pub fn parent(self) -> Word {
        self.prefix(self.len().saturating_sub(1))
    }

    /// The prefix of length `m ≤ len`.
    pub fn prefix(self, m: usize) -> Word {
        assert!(m <= self.len(), "prefix longer than word");
        Word {
            len: m as u8,
            bits: self.bits & mask(m),
            star: self.star & mask(m),
        }
    }

    /// True iff `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(self, other: Word) -> bool {
        self.len <= other.len && other.prefix(self.len()) == self
    }

    /// Length of the longest common prefix.
    pub fn common_prefix_len(self, other: Word) -> usize {
        let n = self.len.min(other.len) as usize;
        let diff = ((self.bits ^ other.bits) | (self.star ^ other.star)) & mask(n);
        if diff == 0 {
            n
        } else {
            diff.trailing_zeros() as usize
        }
    }

    /// Concatenation.
    pub fn concat(self, other: Word) -> Word {
        let len = self.len() + other.len();
        assert!(len <= MAX_HEIGHT, "concatenation too long");
        Word {
            len: len as u8,
            bits: self.bits | other.bits << self.len,
            star: self.star | other.star << self.len,
        }
    }

    /// Replaces the last symbol by `⋆`.
    pub fn star_last(self) -> Word {
        assert!(self.len > 0, "cannot star the empty word");
        let k = self.len - 1;
        Word {
            len: self.len,
            bits: self.bits & !(1 << k),
            star: self.star | 1 << k,
        }
    }

    /// Moves the symbol at position `j` to position `perm[j]`.
    pub(crate) fn permuted(self, perm: &[u8]) -> Word {
        debug_assert_eq!(perm.len(), self.len());
        let mut out = Word {
            len: self.len,
            bits: 0,
            star: 0,
        };
        for (j, &p) in perm.iter().enumerate() {
            out.bits |= (self.bits >> j & 1) << p;
            out.star |= (self.star >> j & 1) << p;
        }
        out
    }

    /// Exchanges positions `a` and `b`.
    pub(crate) fn swapped(self, a: usize, b: usize) -> Word {
        let swap = |x: u64| {
            let (xa, xb) = (x >> a & 1, x >> b & 1);
            if xa == xb {
                x
            } else {
                x ^ (1 << a | 1 << b)
            }
        };
        Word {
            len: self.len,
            bits: swap(self.bits),
            star: swap(self.star),
        }
    }

    /// All words of length exactly `len` without `⋆`, in index order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0..1u64 << len).map(move |v| Word::from_index(v, len))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.len() {
            f.write_str(match self.bit(k) {
                None => "*",
                Some(true) => "1",
                Some(false) => "0",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for Word {
    type Err = TreeError;

    /// Parses `0`, `1` and `*` (or `⋆`).
    fn from_str(s: &str) -> Result<Self, TreeError> {
        let mut w = Word::EMPTY;
        for ch in s.chars() {
            if w.len() == MAX_HEIGHT {
                return Err(TreeError::BadWord(s.to_string()));
            }
            w = match ch {
                '0' => w.push(false),
                '1' => w.push(true),
                '*' | '⋆' => w.push(false).star_last(),
                _ => return Err(TreeError::BadWord(s.to_string())),
            };
        }
        Ok(w)
    }
}

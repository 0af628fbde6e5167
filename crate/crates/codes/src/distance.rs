//! Exhaustive minimum-weight search for nontrivial logicals.
//!
//! Each qubit gets a *signature*: its column of the syndrome checks followed
//! by its pairings with a basis of the opposite side's logicals. A vector is
//! a nontrivial logical exactly when the XOR of its qubits' signatures has a
//! zero syndrome part and a nonzero logical part. Supports are enumerated in
//! increasing weight and, within a weight, lexicographically; the first hit
//! is therefore the same regardless of how the work is split across threads.

use std::fmt;

use cs_core::F2Vector;
use rayon::prelude::*;

use crate::{logical_reps, CodeError, CssCode, Side};

/// Codes with more qubits need an explicit weight cap.
pub const MAX_UNCAPPED_QUBITS: usize = 28;

/// Outcome of a distance search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    /// The minimum weight of a nontrivial logical.
    Exact(usize),
    /// No nontrivial logical of weight `≤ cap` exists.
    ExceedsCap(usize),
    /// The code encodes no logical qubits.
    NoLogicals,
}

impl Distance {
    /// True iff the distance is known to be at least `bound`.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Distance::Exact(d) => d >= bound,
            Distance::ExceedsCap(c) => c + 1 >= bound,
            Distance::NoLogicals => true,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::ExceedsCap(c) => write!(f, ">{c}"),
            Distance::NoLogicals => f.write_str("no logicals"),
        }
    }
}

/// A distance together with a minimum-weight witness when one was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceSearch {
    pub distance: Distance,
    pub witness: Option<F2Vector>,
}

struct Signatures {
    n: usize,
    words: usize,
    syndrome_words: usize,
    syndrome_tail_mask: u64,
    data: Vec<u64>,
}

impl Signatures {
    fn build(code: &CssCode, side: Side) -> Self {
        let h = code.syndrome_checks(side);
        let duals = logical_reps(code, side.other());
        let m = h.rows();
        let bits = m + duals.len();
        let words = bits.div_ceil(64).max(1);
        let mut data = vec![0u64; code.n() * words];
        let mut set = |q: usize, b: usize| data[q * words + b / 64] ^= 1 << (b % 64);
        for (r, c) in h.entries() {
            set(c, r);
        }
        for (j, l) in duals.iter().enumerate() {
            for &q in l.support() {
                set(q, m + j);
            }
        }
        Signatures {
            n: code.n(),
            words,
            syndrome_words: m / 64,
            syndrome_tail_mask: (1u64 << (m % 64)) - 1,
            data,
        }
    }

    fn of(&self, q: usize) -> &[u64] {
        &self.data[q * self.words..(q + 1) * self.words]
    }

    /// Zero syndrome and nonzero logical part.
    fn is_hit(&self, acc: &[u64]) -> bool {
        let sw = self.syndrome_words;
        if acc[..sw].iter().any(|&x| x != 0) {
            return false;
        }
        if sw < self.words {
            if acc[sw] & self.syndrome_tail_mask != 0 {
                return false;
            }
            (acc[sw] & !self.syndrome_tail_mask) != 0 || acc[sw + 1..].iter().any(|&x| x != 0)
        } else {
            false
        }
    }

    /// Depth-first lexicographic search for `remaining` more indices above
    /// `start`, with the current XOR in `acc`.
    fn search(
        &self,
        acc: &mut [u64],
        start: usize,
        remaining: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if remaining == 0 {
            return self.is_hit(acc);
        }
        for q in start..=self.n - remaining {
            xor_into(acc, self.of(q));
            chosen.push(q);
            if self.search(acc, q + 1, remaining - 1, chosen) {
                return true;
            }
            chosen.pop();
            xor_into(acc, self.of(q));
        }
        false
    }

    fn first_of_weight(&self, w: usize) -> Option<Vec<usize>> {
        (0..=self.n - w).into_par_iter().find_map_first(|first| {
            let mut acc = self.of(first).to_vec();
            let mut chosen = vec![first];
            self.search(&mut acc, first + 1, w - 1, &mut chosen)
                .then_some(chosen)
        })
    }
}

fn xor_into(acc: &mut [u64], other: &[u64]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a ^= b;
    }
}

/// The minimum weight of a nontrivial logical of the given side, searching
/// weights up to `cap` (default `n`, allowed only for `n ≤ 28`).
pub fn distance_bruteforce(
    code: &CssCode,
    side: Side,
    cap: Option<usize>,
) -> Result<Distance, CodeError> {
    Ok(min_weight_logical(code, side, cap)?.distance)
}

/// Like [`distance_bruteforce`], also returning the lexicographically first
/// minimum-weight logical.
pub fn min_weight_logical(
    code: &CssCode,
    side: Side,
    cap: Option<usize>,
) -> Result<DistanceSearch, CodeError> {
    let n = code.n();
    let cap = match cap {
        Some(c) => c.min(n),
        None if n <= MAX_UNCAPPED_QUBITS => n,
        None => return Err(CodeError::TooLarge(n)),
    };
    if code.k() == 0 {
        return Ok(DistanceSearch {
            distance: Distance::NoLogicals,
            witness: None,
        });
    }
    let sigs = Signatures::build(code, side);
    for w in 1..=cap {
        if let Some(support) = sigs.first_of_weight(w) {
            return Ok(DistanceSearch {
                distance: Distance::Exact(w),
                witness: Some(F2Vector::from_support(n, support)?),
            });
        }
    }
    Ok(DistanceSearch {
        distance: Distance::ExceedsCap(cap),
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Enumerates every vector and keeps the lightest nontrivial logical.
    fn oracle(code: &CssCode, side: Side) -> Option<usize> {
        let n = code.n();
        (1u64..1 << n)
            .map(|mask| F2Vector::from_support(n, (0..n).filter(|&i| mask >> i & 1 == 1)).unwrap())
            .filter(|v| code.is_logical(side, v).unwrap())
            .map(|v| v.weight())
            .min()
    }

    #[test]
    fn known_distances() {
        let c = fixtures::four_two_two();
        assert_eq!(
            distance_bruteforce(&c, Side::X, None).unwrap(),
            Distance::Exact(2)
        );
        assert_eq!(
            distance_bruteforce(&c, Side::Z, None).unwrap(),
            Distance::Exact(2)
        );
        let s = fixtures::steane();
        assert_eq!(
            distance_bruteforce(&s, Side::X, None).unwrap(),
            Distance::Exact(3)
        );
        assert_eq!(
            distance_bruteforce(&s, Side::Z, Some(2)).unwrap(),
            Distance::ExceedsCap(2)
        );
        assert!(Distance::ExceedsCap(2).at_least(3));
    }

    #[test]
    fn matches_enumeration_oracle() {
        for code in [
            fixtures::four_two_two(),
            fixtures::steane(),
            fixtures::toric(2),
        ] {
            for side in [Side::X, Side::Z] {
                let got = distance_bruteforce(&code, side, None).unwrap();
                assert_eq!(got, Distance::Exact(oracle(&code, side).unwrap()));
            }
        }
    }

    #[test]
    fn witness_is_a_logical() {
        let code = fixtures::toric(3);
        let found = min_weight_logical(&code, Side::Z, None).unwrap();
        assert_eq!(found.distance, Distance::Exact(3));
        assert!(code.is_logical(Side::Z, &found.witness.unwrap()).unwrap());
    }

    #[test]
    fn no_logicals_and_size_limit() {
        let full = CssCode::new(
            cs_core::F2Matrix::identity(2),
            cs_core::F2Matrix::zeros(0, 2),
        )
        .unwrap();
        assert_eq!(
            distance_bruteforce(&full, Side::X, None).unwrap(),
            Distance::NoLogicals
        );
        let big = fixtures::toric(4);
        assert!(matches!(
            distance_bruteforce(&big, Side::X, None),
            Err(CodeError::TooLarge(32))
        ));
        assert_eq!(
            distance_bruteforce(&big, Side::X, Some(4)).unwrap(),
            Distance::Exact(4)
        );
    }
}

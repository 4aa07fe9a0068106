//! Subsets of a small ground set `{0, …, n−1}` as bitmasks.
//!
//! For a fixed size, increasing bitmask order is colexicographic order, and
//! the colex rank of `{s_0 < s_1 < …}` is `Σ C(s_i, i + 1)`. Plücker vectors
//! are stored densely in this order. Display and parsing use 1-based
//! element labels, e.g. `{1,3}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::binomial;

pub const MAX_GROUND: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn full(n: usize) -> Self {
        Subset((1u64 << n) - 1)
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        Subset(elems.into_iter().fold(0u64, |m, i| m | (1u64 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn union(self, o: Subset) -> Self {
        Subset(self.0 | o.0)
    }

    pub fn intersection(self, o: Subset) -> Self {
        Subset(self.0 & o.0)
    }

    pub fn difference(self, o: Subset) -> Self {
        Subset(self.0 & !o.0)
    }

    pub fn symmetric_difference(self, o: Subset) -> Self {
        Subset(self.0 ^ o.0)
    }

    pub fn is_disjoint(self, o: Subset) -> bool {
        self.0 & o.0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        Subset(Subset::full(n).0 & !self.0)
    }

    /// Elements in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }

    /// Position of this subset among all subsets of its size in colex order.
    pub fn colex_rank(self) -> usize {
        self.elements()
            .enumerate()
            .map(|(k, s)| binomial(s as u64, k as u64 + 1) as usize)
            .sum()
    }
}

/// All `k`-subsets of `{0, …, n−1}` in colex order (`n ≤ 63`).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    assert!(n <= MAX_GROUND, "ground set too large");
    let limit: u64 = 1u64 << n;
    let mut next: Option<u64> = match k {
        k if k > n => None,
        0 => Some(0),
        k => Some((1u64 << k) - 1),
    };
    std::iter::from_fn(move || {
        let cur = next?;
        // Gosper's hack: next integer with the same popcount
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r).filter(|&x| x < limit)
        };
        Some(Subset(cur))
    })
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for Subset {
    type Err = Error;

    /// Parses `{1,2}` (1-based, whitespace allowed). `{}` is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("subset must look like {{1,2}}: {s:?}")))?;
        let mut out = Subset::empty();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i: usize = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad subset element {part:?}")))?;
            if i == 0 || i > MAX_GROUND {
                return Err(Error::Parse(format!("subset element {i} out of range")));
            }
            if out.contains(i - 1) {
                return Err(Error::Parse(format!("repeated subset element {i}")));
            }
            out = out.with(i - 1);
        }
        Ok(out)
    }
}

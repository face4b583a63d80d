//! Subsets of `[n]` stored as bitmasks.

use std::cmp::Ordering;
use std::fmt;

/// A subset of `{1, ..., 64}`. Bit `i - 1` encodes membership of `i`.
///
/// `Ord` is the sorted-tuple lexicographic order (`{1,6,7} < {1,7} < {2}`);
/// [`Subset::colex_cmp`] gives colexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., m}`.
    pub fn interval(m: usize) -> Self {
        Self::range(1, m)
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        (lo..=hi).collect()
    }

    pub fn full(n: usize) -> Self {
        Self::interval(n)
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=64).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!((1..=64).contains(&i), "subset element {i} out of range");
        self.0 |= 1 << (i - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).difference(self)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl DoubleEndedIterator<Item = usize> {
        (1..=64usize).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under `i ↦ f(i)`.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Subset {
        self.iter().map(f).collect()
    }

    pub fn colex_cmp(&self, other: &Subset) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// All `size`-element subsets of `[n]` in colex order.
    pub fn all_of_size(n: usize, size: usize) -> Vec<Subset> {
        assert!(n <= 64);
        let mut out = Vec::new();
        if size > n {
            return out;
        }
        let mut idx: Vec<usize> = (1..=size).collect();
        loop {
            let mut s: Subset = idx.iter().copied().collect();
            if size == 0 {
                s = Subset::EMPTY;
            }
            out.push(s);
            // next combination in colex order: bump the lowest position that can move
            let mut p = 0;
            while p < size {
                let limit = if p + 1 < size { idx[p + 1] } else { n + 1 };
                if idx[p] + 1 < limit {
                    break;
                }
                p += 1;
            }
            if p == size {
                break;
            }
            idx[p] += 1;
            for (q, slot) in idx.iter_mut().enumerate().take(p) {
                *slot = q + 1;
            }
        }
        out
    }

    /// Parse `"167"`, `"1,6,7"` or `"{1,6,7}"`.
    pub fn parse(text: &str) -> Option<Subset> {
        let t = text
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if t.is_empty() {
            return Some(Subset::EMPTY);
        }
        let mut s = Subset::EMPTY;
        if t.contains(',') {
            for part in t.split(',') {
                let v: usize = part.trim().parse().ok()?;
                if !(1..=64).contains(&v) {
                    return None;
                }
                s.insert(v);
            }
        } else {
            for c in t.chars() {
                let v = c.to_digit(10)? as usize;
                if v == 0 {
                    return None;
                }
                s.insert(v);
            }
        }
        Some(s)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    /// Digit string when every element is below 10, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let elems = self.to_vec();
        if elems.iter().all(|&e| e <= 9) {
            for e in elems {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

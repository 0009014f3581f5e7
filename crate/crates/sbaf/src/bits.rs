//! Compact index sets over argument or sentence indices.
//!
//! Frameworks are capped at [`MAX_ELEMS`] arguments and sentences, so a
//! single machine word is enough for every extension and language
//! extension the solver manipulates.

/// Hard limit on arguments and on sentences per framework.
pub const MAX_ELEMS: usize = 64;

/// A set of indices in `0..64`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Bits(pub u64);

impl Bits {
    pub const EMPTY: Bits = Bits(0);

    pub fn singleton(i: usize) -> Bits {
        debug_assert!(i < MAX_ELEMS);
        Bits(1 << i)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Bits {
        debug_assert!(n <= MAX_ELEMS);
        if n == MAX_ELEMS {
            Bits(u64::MAX)
        } else {
            Bits((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Bits {
        let mut b = Bits::EMPTY;
        for i in iter {
            b.insert(i);
        }
        b
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMS && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMS);
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(self, i: usize) -> Bits {
        let mut b = self;
        b.insert(i);
        b
    }

    pub fn without(self, i: usize) -> Bits {
        let mut b = self;
        b.remove(i);
        b
    }

    pub fn union(self, other: Bits) -> Bits {
        Bits(self.0 | other.0)
    }

    pub fn intersection(self, other: Bits) -> Bits {
        Bits(self.0 & other.0)
    }

    pub fn difference(self, other: Bits) -> Bits {
        Bits(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Bits) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersects(self, other: Bits) -> bool {
        self.0 & other.0 != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, smallest mask first.
    pub fn subsets(self) -> impl Iterator<Item = Bits> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                // enumerate submasks of `full` in increasing order
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Bits(cur))
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for Bits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Bits {
        Bits::from_indices(iter)
    }
}

/// Sorts a family of index sets into canonical order: lexicographic on the
/// sorted member sequences, so `{}` comes first and `{0}` before `{1}`.
pub fn canonical_sort(sets: &mut Vec<Bits>) {
    sets.sort_by(|a, b| a.to_vec().cmp(&b.to_vec()));
    sets.dedup();
}

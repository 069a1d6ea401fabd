use std::fmt;

/// A subset of the points `0..n` of an ambient finite space, stored as a
/// 32-bit mask. The ambient size is not carried; operations that need it
/// (complement, full set) take `n` explicitly.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u32);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> PointSet {
        debug_assert!(n <= 32);
        if n == 32 {
            PointSet(u32::MAX)
        } else {
            PointSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> PointSet {
        PointSet(1 << i)
    }

    pub fn from_bits(bits: u32) -> PointSet {
        PointSet(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> PointSet {
        let mut bits = 0u32;
        for i in iter {
            debug_assert!(i < 32);
            bits |= 1 << i;
        }
        PointSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> PointSet {
        PointSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> PointSet {
        PointSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn inter(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn minus(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn complement_in(self, n: usize) -> PointSet {
        PointSet(!self.0).inter(Self::full(n))
    }

    pub fn is_subset_of(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// All subsets of `0..n`, ascending as masks.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        debug_assert!(n < 32);
        (0..1u64 << n).map(|m| PointSet(m as u32))
    }

    /// All subsets of this set, ascending as masks.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let full = self.0;
        let mut cur = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = PointSet(cur);
            if cur == full {
                done = true;
            } else {
                cur = cur.wrapping_sub(full) & full;
            }
            Some(out)
        })
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

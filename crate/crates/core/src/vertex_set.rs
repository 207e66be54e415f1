//! Compact vertex subsets over a universe of at most 64 vertices.

use std::cmp::Ordering;
use std::fmt;

/// Largest vertex universe representable by a [`VertexSet`].
pub const MAX_UNIVERSE: usize = 64;

/// A subset of `{0, .., 63}` stored as a bitmask.
///
/// Iteration is always in ascending vertex order, which is the canonical
/// ordering used for boundary signs. The `Ord` impl is lexicographic on the
/// ascending member sequence (a proper prefix sorts first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_UNIVERSE, "universe of {n} vertices exceeds {MAX_UNIVERSE}");
        if n == MAX_UNIVERSE {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_UNIVERSE);
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_UNIVERSE && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement inside the universe `0..universe`.
    #[inline]
    pub fn complement(self, universe: usize) -> Self {
        VertexSet::full(universe).difference(self)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members strictly greater than `v`.
    #[inline]
    pub fn above(self, v: usize) -> Self {
        if v >= 63 {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u64::MAX << (v + 1)))
        }
    }

    /// Whether every member is `< n`.
    #[inline]
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(VertexSet::full(n))
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Shifts every member up by `offset`.
    pub fn shifted(self, offset: usize) -> Self {
        assert!(self.max_vertex().is_none_or(|m| m + offset < MAX_UNIVERSE));
        VertexSet(self.0 << offset)
    }

    /// Subsets obtained by removing exactly one member, in order of the
    /// removed member's position (smallest vertex first).
    pub fn facets(self) -> impl Iterator<Item = VertexSet> {
        self.iter().map(move |v| self.without(v))
    }

    /// Applies `map[v]` to every member.
    pub fn map(self, map: &[usize]) -> Self {
        self.iter().fold(VertexSet::EMPTY, |acc, v| acc.with(map[v]))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_UNIVERSE, "vertex {v} exceeds {MAX_UNIVERSE}");
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff.trailing_zeros();
        let below = (1u64 << low) - 1;
        // Both share the members below `low`; whichever owns `low` either
        // has the smaller next element or the other one has run out.
        if self.0 >> low & 1 == 1 {
            if other.0 & !below == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & !below == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// All `k`-subsets of `pool`, in lexicographic order.
pub fn subsets_of_size(pool: VertexSet, k: usize) -> Vec<VertexSet> {
    let members: Vec<usize> = pool.iter().collect();
    let mut out = Vec::new();
    if k > members.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| members[i]).collect());
        // advance the rightmost index that can move
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < members.len() - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn set_algebra() {
        let a = set(&[0, 2, 5]);
        let b = set(&[2, 3]);
        assert_eq!(a.union(b), set(&[0, 2, 3, 5]));
        assert_eq!(a.intersection(b), set(&[2]));
        assert_eq!(a.difference(b), set(&[0, 5]));
        assert_eq!(a.complement(6), set(&[1, 3, 4]));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(VertexSet::full(64).len(), 64);
    }

    #[test]
    fn prefix_sorts_first() {
        assert!(set(&[0, 1]) < set(&[0, 1, 2]));
        assert!(set(&[0, 2]) < set(&[1]));
        assert!(VertexSet::EMPTY < set(&[0]));
    }

    #[test]
    fn subsets_of_size_counts() {
        let pool = set(&[1, 3, 4, 7, 9]);
        let s = subsets_of_size(pool, 3);
        assert_eq!(s.len(), 10);
        assert_eq!(s[0], set(&[1, 3, 4]));
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(subsets_of_size(pool, 0), vec![VertexSet::EMPTY]);
        assert!(subsets_of_size(pool, 6).is_empty());
    }

    proptest! {
        #[test]
        fn order_matches_member_lists(a in any::<u16>(), b in any::<u16>()) {
            let (sa, sb) = (VertexSet::from_bits(a as u64), VertexSet::from_bits(b as u64));
            let la: Vec<usize> = sa.iter().collect();
            let lb: Vec<usize> = sb.iter().collect();
            prop_assert_eq!(sa.cmp(&sb), la.cmp(&lb));
        }
    }
}

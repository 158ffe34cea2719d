//! Word-array bitsets over a fixed vertex universe.
//!
//! Every counting routine in this crate bottoms out in row intersections and
//! popcounts, so the representation is a plain `Vec<u64>` with the universe
//! size carried alongside. Bits past `nbits` are always zero.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline(always)]
fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS)
}

/// Fixed-universe bitset backed by `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    nbits: usize,
    words: Vec<u64>,
}

impl Bitset {
    /// Empty set over a universe of `nbits` elements.
    pub fn new(nbits: usize) -> Self {
        Bitset {
            nbits,
            words: vec![0u64; word_count(nbits)],
        }
    }

    /// Full set `{0, .., nbits-1}`.
    pub fn full(nbits: usize) -> Self {
        let mut b = Bitset::new(nbits);
        for i in 0..b.words.len() {
            b.words[i] = u64::MAX;
        }
        b.mask_tail();
        b
    }

    pub fn universe(&self) -> usize {
        self.nbits
    }

    #[inline(always)]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 != 0
    }

    #[inline(always)]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
    }

    #[inline(always)]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
    }

    pub fn clear(&mut self) {
        for w in &mut self.words {
            *w = 0;
        }
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Popcount of the intersection, without allocating.
    #[inline]
    pub fn intersection_count(&self, other: &Bitset) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        debug_assert_eq!(self.nbits, other.nbits);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Bitset {
            nbits: self.nbits,
            words,
        }
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Removes every element of `other` from `self`.
    pub fn subtract(&mut self, other: &Bitset) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset_of(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Iterator over set bits in increasing order.
    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            words: &self.words,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Zeroes any bits at positions >= nbits.
    fn mask_tail(&mut self) {
        let rem = self.nbits % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.nbits == 0 {
            self.words.clear();
        }
    }
}

impl fmt::Debug for Bitset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Bitset {
    /// Collects indices into a bitset sized to the maximum element + 1.
    /// Mostly a test convenience; prefer `Bitset::new` + `insert` with an
    /// explicit universe.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let nbits = items.iter().max().map_or(0, |m| m + 1);
        let mut b = Bitset::new(nbits);
        for i in items {
            b.insert(i);
        }
        b
    }
}

pub struct BitIter<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_index * WORD_BITS + bit);
            }
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
    }
}

/// A set of vertices of a host graph, with cached cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    members: Bitset,
    size: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            members: Bitset::new(universe),
            size: 0,
        }
    }

    pub fn from_bitset(members: Bitset) -> Self {
        let size = members.count();
        VertexSet { members, size }
    }

    /// Builds from explicit vertex indices; indices must lie below `universe`.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut members = Bitset::new(universe);
        for i in items {
            assert!(i < universe, "vertex {i} out of universe {universe}");
            members.insert(i);
        }
        VertexSet::from_bitset(members)
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn universe(&self) -> usize {
        self.members.universe()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn iter(&self) -> BitIter<'_> {
        self.members.iter()
    }

    /// Members in increasing order.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

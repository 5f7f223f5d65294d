//! Fixed-width vertex sets.
//!
//! Vertices are numbered `1..=n` with `n <= MAX_VERTICES`; vertex `v` lives in bit `v - 1`.
//! The same type doubles as a squarefree monomial support `x^σ`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 16;

/// A subset of `{1, .., MAX_VERTICES}` packed into one word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `1..=n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        VertexSet(((1u64 << n) - 1) as u32)
    }

    pub fn from_bits(bits: u32) -> Self {
        debug_assert!(bits >> MAX_VERTICES == 0);
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    /// Builds a set from 1-based vertex indices. Panics on an index outside `1..=MAX_VERTICES`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut bits = 0u32;
        for v in vs {
            assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
            bits |= 1 << (v - 1);
        }
        VertexSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        Self::from_vertices([v])
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
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
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

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.union(Self::singleton(v));
    }

    pub fn remove(&mut self, v: usize) {
        *self = self.difference(Self::singleton(v));
    }

    /// Largest vertex index, or 0 for the empty set.
    pub fn max_vertex(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Smallest vertex index, if any.
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Ascending 1-based vertex indices.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `self`, in increasing bit order (starting with the empty set).
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }

    /// Applies a vertex map `old -> new` (1-based; index 0 of `map` is unused).
    pub fn map_vertices(self, map: &[usize]) -> Self {
        Self::from_vertices(self.iter().map(|v| map[v]))
    }

    /// Canonical order: by cardinality, then lexicographically on the sorted index lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

#[derive(Clone, Debug)]
pub struct Vertices(u32);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        // Carry-rippling enumeration of submasks in increasing order.
        let succ = (cur | !self.mask).wrapping_add(1) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(VertexSet(cur))
    }
}

/// Keeps only the inclusion-minimal sets, deduplicated and in canonical order.
pub fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(VertexSet::canonical_cmp);
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        // Canonical order lists every possible subset of `s` before `s`.
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

/// True when no set in `sets` contains another (duplicates count as containment).
pub fn is_antichain(sets: &[VertexSet]) -> bool {
    sets.iter().enumerate().all(|(i, a)| sets.iter().enumerate().all(|(j, b)| i == j || !a.is_subset(*b)))
}

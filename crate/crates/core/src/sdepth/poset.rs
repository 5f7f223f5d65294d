use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::vertex_set::VertexSet;

/// Which module the poset describes: the ideal `I` or the quotient `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Ideal,
    Quotient,
}

impl Mode {
    pub fn flip(self) -> Mode {
        match self {
            Mode::Ideal => Mode::Quotient,
            Mode::Quotient => Mode::Ideal,
        }
    }
}

/// Squarefree multidegrees of `I` (up-closed) or of `S/I` (down-closed) inside `2^[n]`.
#[derive(Clone, Debug)]
pub struct CharPoset {
    n: usize,
    mode: Mode,
    member: Vec<bool>,
    by_rank: Vec<Vec<VertexSet>>,
}

impl CharPoset {
    pub fn new(ideal: &SquarefreeIdeal, mode: Mode) -> Result<Self> {
        if mode == Mode::Ideal && ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut table = ideal.membership_table();
        if mode == Mode::Quotient {
            table.iter_mut().for_each(|m| *m = !*m);
        }
        let poset = Self::from_table(ideal.n(), mode, table);
        debug_assert!(poset.is_closed());
        Ok(poset)
    }

    /// Builds a poset from an explicit membership table indexed by support bits.
    pub(crate) fn from_table(n: usize, mode: Mode, member: Vec<bool>) -> Self {
        assert_eq!(member.len(), 1 << n);
        let mut by_rank = vec![Vec::new(); n + 1];
        for (bits, _) in member.iter().enumerate().filter(|(_, &m)| m) {
            let s = VertexSet::from_bits(bits as u32);
            by_rank[s.len()].push(s);
        }
        for layer in &mut by_rank {
            layer.sort_by(VertexSet::canonical_cmp);
        }
        CharPoset { n, mode, member, by_rank }
    }

    /// The image under `σ ↦ [n] \ σ`; intervals `[A, B]` map to `[B^c, A^c]`.
    pub fn complement(&self) -> CharPoset {
        let full = (1usize << self.n) - 1;
        let member = (0..=full).map(|b| self.member[full ^ b]).collect();
        Self::from_table(self.n, self.mode.flip(), member)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    #[inline]
    pub fn contains(&self, s: VertexSet) -> bool {
        self.member[s.bits() as usize]
    }

    pub fn len(&self) -> usize {
        self.by_rank.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self, k: usize) -> &[VertexSet] {
        &self.by_rank[k]
    }

    /// Members, lowest rank first, lexicographic within a rank.
    pub fn members(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.by_rank.iter().flatten().copied()
    }

    /// Maximal members.
    pub fn maximal(&self) -> Vec<VertexSet> {
        self.members()
            .filter(|s| {
                VertexSet::full(self.n).difference(*s).iter().all(|v| !self.contains(s.union(VertexSet::singleton(v))))
            })
            .collect()
    }

    /// Up-closed in ideal mode, down-closed in quotient mode.
    pub fn is_closed(&self) -> bool {
        let full = VertexSet::full(self.n);
        self.members().all(|s| match self.mode {
            Mode::Ideal => full.difference(s).iter().all(|v| self.contains(s.union(VertexSet::singleton(v)))),
            Mode::Quotient => s.iter().all(|v| self.contains(s.difference(VertexSet::singleton(v)))),
        })
    }

    /// Whether every set between `lower` and `upper` is a member.
    pub fn contains_interval(&self, lower: VertexSet, upper: VertexSet) -> bool {
        lower.is_subset(upper) && upper.difference(lower).subsets().all(|t| self.contains(lower.union(t)))
    }
}

/// A closed interval `[lower, upper]` of the subset lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lower: VertexSet,
    pub upper: VertexSet,
}

impl Interval {
    pub fn new(lower: VertexSet, upper: VertexSet) -> Self {
        debug_assert!(lower.is_subset(upper));
        Interval { lower, upper }
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.lower.is_subset(s) && s.is_subset(self.upper)
    }

    pub fn members(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.upper.difference(self.lower).subsets().map(|t| self.lower.union(t))
    }
}

/// A partition of a characteristic poset into intervals; the witness for a depth value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalPartition {
    pub intervals: Vec<Interval>,
}

impl IntervalPartition {
    /// `min |upper|`, the Stanley depth of the induced decomposition.
    pub fn value(&self) -> Option<usize> {
        self.intervals.iter().map(|i| i.upper.len()).min()
    }

    /// `max |lower|`, the Stanley regularity of the induced decomposition.
    pub fn regularity(&self) -> Option<usize> {
        self.intervals.iter().map(|i| i.lower.len()).max()
    }

    /// Disjoint intervals inside the poset covering every member exactly once.
    pub fn is_partition_of(&self, poset: &CharPoset) -> bool {
        let mut seen = vec![false; 1 << poset.n()];
        for iv in &self.intervals {
            if !iv.lower.is_subset(iv.upper) {
                return false;
            }
            for s in iv.members() {
                if !poset.contains(s) || std::mem::replace(&mut seen[s.bits() as usize], true) {
                    return false;
                }
            }
        }
        poset.members().all(|s| seen[s.bits() as usize])
    }

    /// The mirrored partition of the complemented poset.
    pub fn complement(&self, n: usize) -> IntervalPartition {
        let full = VertexSet::full(n);
        IntervalPartition {
            intervals: self
                .intervals
                .iter()
                .map(|iv| Interval::new(full.difference(iv.upper), full.difference(iv.lower)))
                .collect(),
        }
    }
}

//! Betti numbers, projective dimension, depth and regularity of `S/I` via Hochster's formula:
//! `β_{i,σ}(I) = dim H̃_{|σ|-i-2}(Δ_σ)` where `Δ` is the Stanley–Reisner complex of `I`.

mod rank;

pub use rank::IntMatrix;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::vertex_set::{minimalize, VertexSet};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..1 << 31).contains(&p) || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::InvalidParameter(format!("field characteristic {p} (need a prime below 2^31)")));
        }
        Ok(Field::Prime(p))
    }

    fn rank(self, m: &IntMatrix) -> usize {
        match self {
            Field::Rationals => m.rank_rational(),
            Field::Prime(p) => m.rank_mod(p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// `q` or `p:<prime>`.
    fn from_str(s: &str) -> Result<Field> {
        match s {
            "q" | "Q" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix("p:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidParameter(format!("field `{s}` (expected q or p:<prime>)")))?;
                Field::prime(p)
            }
        }
    }
}

/// A simplicial complex on `1..=n`, stored by its faces.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    n: usize,
    face: Vec<bool>,
}

impl SimplicialComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_face(&self, s: VertexSet) -> bool {
        self.face[s.bits() as usize]
    }

    pub fn faces(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.face.iter().enumerate().filter(|(_, &f)| f).map(|(b, _)| VertexSet::from_bits(b as u32))
    }

    pub fn facets(&self) -> Vec<VertexSet> {
        let full = VertexSet::full(self.n);
        let maximal = self
            .faces()
            .filter(|s| full.difference(*s).iter().all(|v| !self.is_face(s.union(VertexSet::singleton(v)))))
            .collect();
        minimalize(maximal)
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces().all(|s| s.iter().all(|v| self.is_face(s.difference(VertexSet::singleton(v)))))
    }

    /// Some vertex of `sigma` lies in every facet of the induced subcomplex on `sigma`.
    pub fn induced_is_cone(&self, sigma: VertexSet) -> bool {
        sigma.iter().any(|v| {
            let apex = VertexSet::singleton(v);
            sigma.subsets().filter(|t| self.is_face(*t)).all(|t| self.is_face(t.union(apex)))
        })
    }

    /// Reduced homology ranks `dim H̃_k(Δ_σ)` for `k = -1, 0, ..`, as a vector offset by one.
    pub fn induced_reduced_homology(&self, sigma: VertexSet, field: Field) -> Vec<usize> {
        let mut by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); sigma.len() + 1];
        for t in sigma.subsets().filter(|t| self.is_face(*t)) {
            by_dim[t.len()].push(t);
        }
        while by_dim.last().is_some_and(Vec::is_empty) {
            by_dim.pop();
        }
        if by_dim.is_empty() {
            // The void complex has no reduced homology.
            return Vec::new();
        }
        // by_dim[j] holds faces with j vertices, i.e. of dimension j - 1.
        let top = by_dim.len();
        // ranks[j] = rank of the boundary map from j-vertex faces to (j-1)-vertex faces.
        let mut ranks = vec![0usize; top + 1];
        for j in 1..top {
            ranks[j] = field.rank(&boundary_matrix(&by_dim[j - 1], &by_dim[j]));
        }
        (0..top).map(|j| by_dim[j].len() - ranks[j] - ranks[j + 1]).collect()
    }
}

/// Signed boundary matrix with rows indexed by `lower` and columns by `upper`.
fn boundary_matrix(lower: &[VertexSet], upper: &[VertexSet]) -> IntMatrix {
    let mut m = IntMatrix::zeros(lower.len(), upper.len());
    let index: std::collections::HashMap<u32, usize> = lower.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
    for (c, face) in upper.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let r = index[&face.difference(VertexSet::singleton(v)).bits()];
            m.set(r, c, if pos % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Faces are the supports `σ` with `x^σ ∉ I`.
pub fn stanley_reisner(ideal: &SquarefreeIdeal) -> SimplicialComplex {
    let face = ideal.membership_table().into_iter().map(|m| !m).collect();
    let complex = SimplicialComplex { n: ideal.n(), face };
    debug_assert!(complex.is_downward_closed());
    complex
}

/// One nonzero multigraded Betti number of `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub sigma: VertexSet,
    pub value: usize,
}

/// Multigraded Betti numbers `β_{i,σ}(I)`. The quotient's numbers are
/// `β_{i+1,σ}(S/I) = β_{i,σ}(I)` together with `β_{0,∅}(S/I) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub n: usize,
    pub field: Field,
    /// Nonzero entries sorted by `(i, σ bits)`.
    pub entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: VertexSet) -> usize {
        self.entries.iter().find(|e| e.i == i && e.sigma == sigma).map_or(0, |e| e.value)
    }

    /// `β_{i,σ}(S/I)`.
    pub fn quotient(&self, i: usize, sigma: VertexSet) -> usize {
        match i {
            0 => usize::from(sigma.is_empty()),
            _ => self.get(i - 1, sigma),
        }
    }

    /// Total Betti numbers `β_i(I)`.
    pub fn totals(&self) -> Vec<usize> {
        let len = self.entries.iter().map(|e| e.i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for e in &self.entries {
            out[e.i] += e.value;
        }
        out
    }
}

pub fn betti_table(ideal: &SquarefreeIdeal, field: Field) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let complex = stanley_reisner(ideal);
    let n = ideal.n();
    // Each induced subcomplex is computed exactly once.
    let per_sigma: Vec<Vec<BettiEntry>> = (0u32..1 << n)
        .into_par_iter()
        .map(|bits| {
            let sigma = VertexSet::from_bits(bits);
            let h = complex.induced_reduced_homology(sigma, field);
            // h[j] = dim H̃_{j-1}; β_{i,σ}(I) = H̃_{|σ|-i-2}, so i = |σ| - 1 - j.
            h.iter()
                .enumerate()
                .filter(|&(j, &rank)| rank > 0 && j < sigma.len())
                .map(|(j, &value)| BettiEntry { i: sigma.len() - 1 - j, sigma, value })
                .collect()
        })
        .collect();
    let mut entries: Vec<BettiEntry> = per_sigma.into_iter().flatten().collect();
    entries.sort_by_key(|e| (e.i, e.sigma.bits()));
    Ok(BettiTable { n, field, entries })
}

/// Projective dimension, depth and regularity of `S/I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalInvariants {
    pub projdim: usize,
    pub depth: usize,
    pub reg: usize,
}

impl HomologicalInvariants {
    pub fn from_table(table: &BettiTable) -> Self {
        let projdim = table.entries.iter().map(|e| e.i + 1).max().unwrap_or(0);
        let reg = table.entries.iter().map(|e| e.sigma.len() - e.i - 1).max().unwrap_or(0);
        HomologicalInvariants { projdim, depth: table.n - projdim, reg }
    }
}

/// Invariants of `S/I`; the zero ideal gives `(0, n, 0)` since `S/0 = S` is free.
pub fn homological_invariants(ideal: &SquarefreeIdeal, field: Field) -> Result<HomologicalInvariants> {
    if ideal.is_zero() {
        return Ok(HomologicalInvariants { projdim: 0, depth: ideal.n(), reg: 0 });
    }
    Ok(HomologicalInvariants::from_table(&betti_table(ideal, field)?))
}

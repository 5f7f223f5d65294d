//! Splitting a squarefree ideal along the variables of one primary component.
//!
//! With `I = P_1 ∩ .. ∩ P_s` and splitter `P_k` on variables `Y`, every squarefree
//! `w = u·v ∈ I` (`u` supported in `Y`, `v` outside) lands in exactly one piece `I_τ`,
//! `τ ⊊ [s]`, where `u ∈ ⋂_{j∉τ} P_j' \ Σ_{j∈τ} P_j'` and `v ∈ ⋂_{j∈τ} P_j''`, and each
//! piece factors as a product `H_τ ⊗ L_τ` of a `Y`-part and a complementary part.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::vertex_set::VertexSet;

/// Set of component indices, bit `j` for component `j + 1`.
pub type ComponentMask = u64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitClassification {
    /// 1-based index of the splitting component.
    pub splitter: usize,
    /// Component supports in canonical order.
    pub components: Vec<VertexSet>,
    /// Label of every squarefree support in `I`, in increasing bit order.
    pub labels: Vec<(VertexSet, ComponentMask)>,
    /// Labels whose piece is not the product of its `Y`-parts and complementary parts.
    pub factorization_failures: Vec<ComponentMask>,
}

impl SplitClassification {
    pub fn full_mask(&self) -> ComponentMask {
        full_mask(self.components.len())
    }

    /// Supports grouped by label.
    pub fn pieces(&self) -> BTreeMap<ComponentMask, Vec<VertexSet>> {
        let mut out: BTreeMap<ComponentMask, Vec<VertexSet>> = BTreeMap::new();
        for &(w, tau) in &self.labels {
            out.entry(tau).or_default().push(w);
        }
        out
    }
}

fn full_mask(s: usize) -> ComponentMask {
    if s == 64 {
        u64::MAX
    } else {
        (1u64 << s) - 1
    }
}

/// Number of labels `τ` satisfying the membership conditions for `w = u·v`.
///
/// The conditions split per component: `j ∉ τ` needs `u ∈ P_j'`; `j ∈ τ` needs `u ∉ P_j'` and
/// `v ∈ P_j''`. The count is the product of the per-component option counts, and when it is 1
/// the unique label is returned.
fn admissible_labels(components: &[VertexSet], y: VertexSet, w: VertexSet) -> (usize, ComponentMask) {
    let u = w.intersection(y);
    let v = w.difference(y);
    let mut count = 1usize;
    let mut tau: ComponentMask = 0;
    for (j, &p) in components.iter().enumerate() {
        let p_in = p.intersection(y);
        let p_out = p.difference(y);
        let outside = u.intersects(p_in);
        let inside = !u.intersects(p_in) && v.intersects(p_out);
        count *= usize::from(outside) + usize::from(inside);
        if inside {
            tau |= 1 << j;
        }
    }
    (count, tau)
}

/// Classifies every squarefree monomial of `ideal` by its splitting label.
pub fn split_decompose(ideal: &SquarefreeIdeal, splitter: usize) -> Result<SplitClassification> {
    let components = ideal.primary_components()?;
    let s = components.len();
    if s > 64 {
        return Err(Error::TooManyComponents(s));
    }
    if splitter == 0 || splitter > s {
        return Err(Error::ComponentOutOfRange { index: splitter, count: s });
    }
    let y = components[splitter - 1];
    let table = ideal.membership_table();
    let mut labels = Vec::new();
    for (bits, _) in table.iter().enumerate().filter(|(_, &m)| m) {
        let w = VertexSet::from_bits(bits as u32);
        let (count, tau) = admissible_labels(&components, y, w);
        if count != 1 {
            return Err(Error::SplitLabel { support: w, labels: count });
        }
        if tau == full_mask(s) {
            return Err(Error::SplitLabel { support: w, labels: 0 });
        }
        labels.push((w, tau));
    }
    let mut classification = SplitClassification { splitter, components, labels, factorization_failures: Vec::new() };
    for (tau, members) in classification.pieces() {
        let mut us: Vec<VertexSet> = members.iter().map(|w| w.intersection(y)).collect();
        let mut vs: Vec<VertexSet> = members.iter().map(|w| w.difference(y)).collect();
        us.sort_unstable_by_key(|x| x.bits());
        us.dedup();
        vs.sort_unstable_by_key(|x| x.bits());
        vs.dedup();
        if us.len() * vs.len() != members.len() {
            classification.factorization_failures.push(tau);
        }
    }
    Ok(classification)
}

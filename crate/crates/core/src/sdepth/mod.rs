//! Stanley depth and Stanley regularity of squarefree ideals and their quotients.
//!
//! Both invariants are read off interval partitions of the characteristic poset: the depth of
//! a partition is `min |upper|` and its regularity is `max |lower|`. Regularity is obtained
//! through the Alexander dual, `sreg(S/I) = n - sdepth(I^∨)` and `sreg(I) = n - sdepth(S/I^∨)`.

mod links;
mod oracle;
mod poset;
mod search;

pub use oracle::{brute_oracle_sdepth, brute_oracle_sreg, ORACLE_MAX_N};
pub use poset::{CharPoset, Interval, IntervalPartition, Mode};
pub use search::{decide, Decision, NodeBudget, DEFAULT_NODE_BUDGET};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideal::SquarefreeIdeal;

/// Result of an optimization over interval partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Exact {
        value: usize,
        witness: IntervalPartition,
    },
    /// The budget ran out; the true value lies in `lower..=upper`.
    Indeterminate {
        lower: usize,
        upper: usize,
    },
}

impl Outcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            Outcome::Exact { value, .. } => Some(*value),
            Outcome::Indeterminate { .. } => None,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        match self {
            Outcome::Exact { value, .. } => (*value, *value),
            Outcome::Indeterminate { lower, upper } => (*lower, *upper),
        }
    }

    pub fn witness(&self) -> Option<&IntervalPartition> {
        match self {
            Outcome::Exact { witness, .. } => Some(witness),
            Outcome::Indeterminate { .. } => None,
        }
    }

    /// `n - x`, with the witness mirrored onto the complemented poset.
    fn reflect(self, n: usize) -> Outcome {
        match self {
            Outcome::Exact { value, witness } => Outcome::Exact { value: n - value, witness: witness.complement(n) },
            Outcome::Indeterminate { lower, upper } => Outcome::Indeterminate { lower: n - upper, upper: n - lower },
        }
    }
}

/// Upper bound on the depth: the counting test on every subcube, and in quotient mode the smallest
/// facet (a maximal member is always the upper end of its interval).
fn depth_upper_bound(poset: &CharPoset) -> usize {
    let counting = search::subcube_upper_bound(poset);
    match poset.mode() {
        Mode::Ideal => counting,
        Mode::Quotient => {
            let facet = poset.maximal().iter().map(|f| f.len()).min().unwrap_or(poset.n());
            counting.min(facet)
        }
    }
}

/// Stanley depth of a characteristic poset, descending from the trivial upper bound.
pub fn poset_depth(poset: &CharPoset, budget: &mut NodeBudget) -> Outcome {
    let upper = depth_upper_bound(poset);
    let mut ceiling = upper;
    for d in (0..=upper).rev() {
        match decide(poset, d, budget) {
            Decision::Found(witness) => {
                if ceiling == d {
                    let value = witness.value().unwrap_or(d);
                    return Outcome::Exact { value, witness };
                }
                return Outcome::Indeterminate { lower: d, upper: ceiling };
            }
            Decision::Infeasible => {
                if ceiling == d {
                    ceiling = d.saturating_sub(1);
                }
            }
            Decision::Indeterminate => {}
        }
    }
    unreachable!("d = 0 always succeeds on a nonempty poset")
}

/// `sdepth(I)` or `sdepth(S/I)` with the given node budget.
pub fn stanley_depth_with(ideal: &SquarefreeIdeal, mode: Mode, budget: &mut NodeBudget) -> Result<Outcome> {
    let poset = CharPoset::new(ideal, mode)?;
    Ok(poset_depth(&poset, budget))
}

/// `sdepth(I)` or `sdepth(S/I)` with the default budget.
pub fn stanley_depth(ideal: &SquarefreeIdeal, mode: Mode) -> Result<Outcome> {
    stanley_depth_with(ideal, mode, &mut NodeBudget::default())
}

/// `sreg(S/I) = n - sdepth(I^∨)` in quotient mode, `sreg(I) = n - sdepth(S/I^∨)` in ideal
/// mode. The witness is a partition of the module's own poset realizing the regularity.
pub fn stanley_regularity_with(ideal: &SquarefreeIdeal, mode: Mode, budget: &mut NodeBudget) -> Result<Outcome> {
    let dual = ideal.alexander_dual()?;
    let outcome = stanley_depth_with(&dual, mode.flip(), budget)?;
    Ok(outcome.reflect(ideal.n()))
}

pub fn stanley_regularity(ideal: &SquarefreeIdeal, mode: Mode) -> Result<Outcome> {
    stanley_regularity_with(ideal, mode, &mut NodeBudget::default())
}

/// Stanley regularity computed on the module's own poset, without forming the dual ideal:
/// `σ ↦ [n] \ σ` turns "least `max |lower|`" into "greatest `min |upper|`".
pub fn stanley_regularity_direct(ideal: &SquarefreeIdeal, mode: Mode, budget: &mut NodeBudget) -> Result<Outcome> {
    let poset = CharPoset::new(ideal, mode)?;
    Ok(poset_depth(&poset.complement(), budget).reflect(ideal.n()))
}

//! Squarefree monomial ideals of clutters: Stanley depth and regularity, Betti numbers via
//! Hochster's formula, and the combinatorial bounds relating them.
//!
//! Vertices are `1..=n` with `n <= 16`; a vertex set is a bitmask.

pub mod bounds;
pub mod clutter;
mod cover;
pub mod error;
pub mod harness;
pub mod homology;
pub mod ideal;
pub mod sdepth;
pub mod split;
pub mod vertex_set;

pub use clutter::{Clutter, Contraction, Reduction};
pub use error::{Error, Result};
pub use homology::{betti_table, homological_invariants, BettiTable, Field, HomologicalInvariants};
pub use ideal::{ideal_intersection, ideal_sum, SquarefreeIdeal};
pub use sdepth::{
    brute_oracle_sdepth, brute_oracle_sreg, stanley_depth, stanley_depth_with, stanley_regularity,
    stanley_regularity_with, IntervalPartition, Mode, NodeBudget, Outcome,
};
pub use split::{split_decompose, SplitClassification};
pub use vertex_set::{VertexSet, MAX_VERTICES};

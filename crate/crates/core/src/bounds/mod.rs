//! Combinatorial upper and lower bounds for depth-type and regularity-type invariants of edge
//! ideals, and per-instance reports checking them against the computed invariants.

mod collage;
mod domination;
mod graph;
mod matching;
mod report;

pub use collage::{min_two_collage, single_edge_collages, Collage};
pub use domination::{edgewise_dominant_set, edgewise_domination_index};
pub use graph::{
    clique_partition_number, cliques, cochord, cochord_with_limit, complement, delete_vertices, induced_matching,
    is_chordal, is_cochordal, Cochord, COCHORD_EXACT_MAX_EDGES,
};
pub use matching::{matching_numbers, maximum_matching, minimax_matching, MatchingNumbers};
pub use report::{
    bound_report, invariant_report, subadditivity_verdicts, BoundOptions, BoundReport, BoundValues, Gaps,
    InvariantReport, InvariantValues, Kind, Range, Relation, Status, Timing, Verdict, Witnesses, EPSILON_READING,
};

use crate::clutter::Clutter;
use crate::error::{Error, Result};

/// `n - |E| + |E'| - β(C')`, where `C'` drops every edge owning a free vertex and `β` is the
/// matching number.
pub fn lm_bound(c: &Clutter) -> Result<usize> {
    if c.is_edgeless() {
        return Err(Error::Edgeless("the free-vertex bound"));
    }
    let reduced = c.without_free_vertex_edges();
    let beta = maximum_matching(reduced.edges());
    Ok(c.n() + reduced.num_edges() - c.num_edges() - beta)
}

/// `ε(C) + n - |V(C^red)|`.
pub fn ds_bound(c: &Clutter) -> Result<usize> {
    let eps = edgewise_domination_index(c)?;
    Ok(eps + c.n() - c.covered_vertices().len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_examples() {
        for m in 1..=4 {
            assert_eq!(lm_bound(&Clutter::disjoint_edges(m).unwrap()).unwrap(), m);
        }
        let path = Clutter::from_lists(3, &[&[1, 2], &[2, 3]]).unwrap();
        assert_eq!(lm_bound(&path).unwrap(), 1);
        let two = Clutter::disjoint_edges(2).unwrap();
        assert_eq!(ds_bound(&two).unwrap(), 2);
        // An isolated vertex adds one to the domination bound.
        let padded = Clutter::from_lists(5, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(ds_bound(&padded).unwrap(), 3);
        // C4 has no free vertices: 4 - 4 + 4 - 2.
        let c4 = Clutter::from_lists(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
        assert_eq!(lm_bound(&c4).unwrap(), 2);
        assert!(lm_bound(&Clutter::edgeless(2).unwrap()).is_err());
    }
}

//! Fixed benchmark instances shared by the criterion targets.

use edgeideal::{Clutter, SquarefreeIdeal, VertexSet};

/// Cycle graph `C_n`.
pub fn cycle(n: usize) -> Clutter {
    let edges = (1..=n).map(|i| VertexSet::from_vertices([i, i % n + 1])).collect();
    Clutter::new(n, edges).expect("cycle on at least three vertices")
}

/// `m` disjoint edges on `2m` vertices.
pub fn matching(m: usize) -> Clutter {
    Clutter::disjoint_edges(m).expect("m <= 8")
}

/// `⟨x_1 ⋯ x_n⟩`.
pub fn principal(n: usize) -> SquarefreeIdeal {
    SquarefreeIdeal::new(n, vec![VertexSet::full(n)]).expect("n <= 16")
}

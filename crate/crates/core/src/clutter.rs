//! Clutters (simple hypergraphs) and the operations used to build and shrink them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{minimalize, VertexSet, MAX_VERTICES};

/// A clutter on vertices `1..=n`: an antichain of nonempty edges kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Clutter {
    n: usize,
    edges: Vec<VertexSet>,
}

/// Result of removing isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// The reduced clutter on `1..=k`.
    pub clutter: Clutter,
    /// Isolated vertices of the original clutter.
    pub isolated: VertexSet,
    /// `index_map[i]` is the original index of new vertex `i + 1`.
    pub index_map: Vec<usize>,
}

/// Result of `C:A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub clutter: Clutter,
    /// Some edge was swallowed by `A`, so the colon ideal is the unit ideal.
    pub improper: bool,
    /// `index_map[i]` is the original index of new vertex `i + 1`.
    pub index_map: Vec<usize>,
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

pub(crate) fn check_in_range(set: VertexSet, n: usize) -> Result<()> {
    if set.max_vertex() > n {
        return Err(Error::VertexOutOfRange { vertex: set.max_vertex(), n });
    }
    Ok(())
}

/// Validates edges and returns them deduplicated in canonical order; `None` if minimalization
/// would have to drop a non-duplicate edge.
fn validate(n: usize, edges: &[VertexSet]) -> Result<Vec<VertexSet>> {
    check_n(n)?;
    for &e in edges {
        if e.is_empty() {
            return Err(Error::EmptyEdge);
        }
        check_in_range(e, n)?;
    }
    let mut sorted = edges.to_vec();
    sorted.sort_by(VertexSet::canonical_cmp);
    sorted.dedup();
    Ok(sorted)
}

fn first_containment(sorted: &[VertexSet]) -> Option<(VertexSet, VertexSet)> {
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            if a.is_subset(b) {
                return Some((a, b));
            }
        }
    }
    None
}

impl Clutter {
    /// Builds a clutter, rejecting empty edges, out-of-range vertices and containments.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        let edges = validate(n, &edges)?;
        if let Some((a, b)) = first_containment(&edges) {
            return Err(Error::NotAntichain(a, b));
        }
        Ok(Clutter { n, edges })
    }

    /// Builds a clutter from the minimal members of `edges`. The flag reports whether any
    /// non-minimal edge was dropped.
    pub fn minimalized(n: usize, edges: Vec<VertexSet>) -> Result<(Self, bool)> {
        let sorted = validate(n, &edges)?;
        let before = sorted.len();
        let edges = minimalize(sorted);
        let dropped = edges.len() != before;
        Ok((Clutter { n, edges }, dropped))
    }

    /// Convenience constructor from 1-based index lists.
    pub fn from_lists(n: usize, edges: &[&[usize]]) -> Result<Self> {
        check_n(n)?;
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            for &v in e.iter() {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            sets.push(VertexSet::from_vertices(e.iter().copied()));
        }
        Clutter::new(n, sets)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Clutter { n, edges: Vec::new() })
    }

    /// `m` disjoint edges `{2i-1, 2i}`.
    pub fn disjoint_edges(m: usize) -> Result<Self> {
        let edges = (1..=m).map(|i| VertexSet::from_vertices([2 * i - 1, 2 * i])).collect();
        Clutter::new(2 * m, edges)
    }

    pub(crate) fn from_canonical(n: usize, edges: Vec<VertexSet>) -> Self {
        debug_assert!(validate(n, &edges).is_ok());
        debug_assert!(first_containment(&edges).is_none());
        Clutter { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Vertices lying in at least one edge.
    pub fn covered_vertices(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices().difference(self.covered_vertices())
    }

    /// True if every edge has exactly two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    pub fn has_nontrivial_edge(&self) -> bool {
        self.edges.iter().any(|e| e.len() >= 2)
    }

    /// True when every edge is a single vertex (vacuously true when edgeless).
    pub fn all_edges_trivial(&self) -> bool {
        !self.has_nontrivial_edge()
    }

    /// `C^red` together with the isolated vertices.
    pub fn reduce(&self) -> Reduction {
        let isolated = self.isolated_vertices();
        let kept = self.covered_vertices();
        let index_map: Vec<usize> = kept.iter().collect();
        let mut forward = vec![0; self.n + 1];
        for (i, &old) in index_map.iter().enumerate() {
            forward[old] = i + 1;
        }
        let mut edges: Vec<VertexSet> = self.edges.iter().map(|e| e.map_vertices(&forward)).collect();
        edges.sort_by(VertexSet::canonical_cmp);
        Reduction { clutter: Clutter::from_canonical(index_map.len(), edges), isolated, index_map }
    }

    /// `C + A`: the minimal members of `E(C) ∪ {A}` on the same vertex set.
    pub fn add_set(&self, a: VertexSet) -> Result<Clutter> {
        if a.is_empty() {
            return Err(Error::EmptyEdge);
        }
        check_in_range(a, self.n)?;
        let mut edges = self.edges.clone();
        edges.push(a);
        Ok(Clutter { n: self.n, edges: minimalize(edges) })
    }

    /// `C : A`: minimal members of `{e \ A}` on `V \ A`, densely reindexed.
    pub fn contract(&self, a: VertexSet) -> Result<Contraction> {
        if a.is_empty() {
            return Err(Error::EmptyEdge);
        }
        check_in_range(a, self.n)?;
        let remaining = self.vertices().difference(a);
        let index_map: Vec<usize> = remaining.iter().collect();
        let mut forward = vec![0; self.n + 1];
        for (i, &old) in index_map.iter().enumerate() {
            forward[old] = i + 1;
        }
        let mut improper = false;
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let rest = e.difference(a);
            if rest.is_empty() {
                improper = true;
            } else {
                edges.push(rest.map_vertices(&forward));
            }
        }
        let clutter = Clutter { n: index_map.len(), edges: minimalize(edges) };
        Ok(Contraction { clutter, improper, index_map })
    }

    /// Vertices other than `v` sharing an edge with `v`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut nb = self.edges.iter().filter(|e| e.contains(v)).fold(VertexSet::EMPTY, |acc, e| acc.union(*e));
        nb.remove(v);
        Ok(nb)
    }

    /// Indices of edges that own a free vertex (a vertex in no other edge).
    pub fn free_vertex_edges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| {
                let others = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(VertexSet::EMPTY, |acc, (_, e)| acc.union(*e));
                !self.edges[i].is_subset(others)
            })
            .collect()
    }

    /// The clutter `C'` with every edge owning a free vertex removed (same vertex set).
    pub fn without_free_vertex_edges(&self) -> Clutter {
        let free = self.free_vertex_edges();
        let edges = self.edges.iter().enumerate().filter(|(i, _)| !free.contains(i)).map(|(_, e)| *e).collect();
        Clutter { n: self.n, edges }
    }

    /// Relabels vertices by `perm` (1-based, `perm[v]` is the image of `v`; index 0 unused).
    pub fn relabel(&self, perm: &[usize]) -> Result<Clutter> {
        let edges = self.edges.iter().map(|e| e.map_vertices(perm)).collect();
        Clutter::new(self.n, edges)
    }

    /// The same edges viewed in `n + extra` vertices.
    pub fn with_extra_vertices(&self, extra: usize) -> Result<Clutter> {
        check_n(self.n + extra)?;
        Ok(Clutter { n: self.n + extra, edges: self.edges.clone() })
    }

    /// Edges as sorted 1-based index lists.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.to_vec()).collect()
    }
}

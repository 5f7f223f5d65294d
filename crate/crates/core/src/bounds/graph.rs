//! Simple-graph invariants: chordality, co-chordal covers, induced matchings, clique partitions.

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::cover::min_cover;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest edge count for which `cochord` runs the exact cover search.
pub const COCHORD_EXACT_MAX_EDGES: usize = 12;

/// Adjacency masks indexed by vertex (index 0 unused).
#[derive(Clone, Debug)]
struct Adjacency {
    n: usize,
    nb: Vec<VertexSet>,
}

impl Adjacency {
    fn from_edges(n: usize, edges: &[VertexSet]) -> Self {
        let mut nb = vec![VertexSet::EMPTY; n + 1];
        for e in edges {
            let vs = e.to_vec();
            nb[vs[0]].insert(vs[1]);
            nb[vs[1]].insert(vs[0]);
        }
        Adjacency { n, nb }
    }

    fn complement_within(&self, vertices: VertexSet) -> Adjacency {
        let mut nb = vec![VertexSet::EMPTY; self.n + 1];
        for v in vertices.iter() {
            let mut other = vertices.difference(self.nb[v]);
            other.remove(v);
            nb[v] = other;
        }
        Adjacency { n: self.n, nb }
    }

    fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.nb[v]))
    }

    /// Perfect elimination by repeatedly removing a simplicial vertex.
    fn is_chordal_on(&self, vertices: VertexSet) -> bool {
        let mut left = vertices;
        while !left.is_empty() {
            let simplicial = left.iter().find(|&v| self.is_clique(self.nb[v].intersection(left)));
            match simplicial {
                Some(v) => left.remove(v),
                None => return false,
            }
        }
        true
    }
}

fn require_graph(g: &Clutter) -> Result<()> {
    if g.is_graph() {
        Ok(())
    } else {
        Err(Error::NotAGraph)
    }
}

/// Chordality of a simple graph on all `n` vertices.
pub fn is_chordal(g: &Clutter) -> Result<bool> {
    require_graph(g)?;
    let adj = Adjacency::from_edges(g.n(), g.edges());
    Ok(adj.is_chordal_on(g.vertices()))
}

/// Whether the complement of the graph formed by `edges` (on the vertices they span) is chordal.
/// Isolated vertices would become universal vertices of the complement, which never create an
/// induced long cycle, so the choice of vertex set does not matter.
fn edges_cochordal(n: usize, edges: &[VertexSet]) -> bool {
    let adj = Adjacency::from_edges(n, edges);
    let span = edges.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e));
    adj.complement_within(span).is_chordal_on(span)
}

pub fn is_cochordal(g: &Clutter) -> Result<bool> {
    require_graph(g)?;
    Ok(edges_cochordal(g.n(), g.edges()))
}

/// Complement graph on `1..=n`.
pub fn complement(g: &Clutter) -> Result<Clutter> {
    require_graph(g)?;
    let edges = (1..=g.n())
        .flat_map(|a| (a + 1..=g.n()).map(move |b| VertexSet::from_vertices([a, b])))
        .filter(|e| !g.edges().contains(e))
        .collect();
    Clutter::new(g.n(), edges)
}

/// Co-chordal cover number, exact up to `COCHORD_EXACT_MAX_EDGES` edges, greedy above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochord {
    pub value: usize,
    pub exact: bool,
    /// Covering subgraphs as edge-index masks.
    pub cover: Vec<u64>,
}

pub fn cochord(g: &Clutter) -> Result<Cochord> {
    cochord_with_limit(g, COCHORD_EXACT_MAX_EDGES)
}

pub fn cochord_with_limit(g: &Clutter, exact_max_edges: usize) -> Result<Cochord> {
    require_graph(g)?;
    let edges = g.edges();
    let m = edges.len();
    if m == 0 {
        return Ok(Cochord { value: 0, exact: true, cover: Vec::new() });
    }
    let pick = |mask: u64| -> Vec<VertexSet> { (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect() };
    if m <= exact_max_edges.min(20) {
        let all = (1u64 << m) - 1;
        let good: Vec<bool> = (0..=all).map(|mask| mask != 0 && edges_cochordal(g.n(), &pick(mask))).collect();
        // Supersets of a chosen part cover at least as much, so maximal parts suffice.
        let maximal: Vec<u64> = (1..=all)
            .filter(|&mask| good[mask as usize])
            .filter(|&mask| (0..m).all(|i| mask >> i & 1 == 1 || !good[(mask | 1 << i) as usize]))
            .collect();
        let value = min_cover(&maximal, all).expect("single edges are co-chordal");
        let cover = witness_cover(&maximal, all, value);
        return Ok(Cochord { value, exact: true, cover });
    }
    // Greedy: grow a co-chordal part around the first uncovered edge.
    let mut uncovered: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut cover = Vec::new();
    while uncovered != 0 {
        let seed = uncovered.trailing_zeros() as usize;
        let mut part = 1u64 << seed;
        let order = (0..m).filter(|&i| uncovered >> i & 1 == 1).chain((0..m).filter(|&i| uncovered >> i & 1 == 0));
        for i in order {
            if part >> i & 1 == 0 && edges_cochordal(g.n(), &pick(part | 1 << i)) {
                part |= 1 << i;
            }
        }
        uncovered &= !part;
        cover.push(part);
    }
    Ok(Cochord { value: cover.len(), exact: false, cover })
}

/// Some `k` members of `sets` covering `target`, found by exhaustive search.
fn witness_cover(sets: &[u64], target: u64, k: usize) -> Vec<u64> {
    fn go(sets: &[u64], left: usize, uncovered: u64, chosen: &mut Vec<u64>) -> bool {
        if uncovered == 0 {
            return true;
        }
        if left == 0 {
            return false;
        }
        let pivot = uncovered & uncovered.wrapping_neg();
        for &s in sets {
            if s & pivot != 0 {
                chosen.push(s);
                if go(sets, left - 1, uncovered & !s, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    let found = go(sets, k, target, &mut chosen);
    debug_assert!(found);
    chosen
}

/// Largest matching whose vertices induce exactly the matching edges.
pub fn induced_matching(g: &Clutter) -> Result<usize> {
    require_graph(g)?;
    let adj = Adjacency::from_edges(g.n(), g.edges());
    let edges = g.edges();
    fn go(edges: &[VertexSet], adj: &Adjacency, i: usize, blocked: VertexSet, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        if i == edges.len() || size + (edges.len() - i) <= *best {
            return;
        }
        let e = edges[i];
        if !e.intersects(blocked) {
            // Block e and its neighbourhood for later edges.
            let closed = e.iter().fold(e, |acc, v| acc.union(adj.nb[v]));
            go(edges, adj, i + 1, blocked.union(closed), size + 1, best);
        }
        go(edges, adj, i + 1, blocked, size, best);
    }
    let mut best = 0;
    go(edges, &adj, 0, VertexSet::EMPTY, 0, &mut best);
    Ok(best)
}

/// Least `s` such that `V` splits into an independent set and `s` cliques.
pub fn clique_partition_number(g: &Clutter) -> Result<usize> {
    require_graph(g)?;
    let n = g.n();
    if n > 14 {
        return Err(Error::InvalidParameter(format!("clique partition on {n} vertices")));
    }
    let adj = Adjacency::from_edges(n, g.edges());
    let size = 1usize << n;
    let is_clique: Vec<bool> = (0..size).map(|b| adj.is_clique(VertexSet::from_bits(b as u32))).collect();
    // cover[mask]: fewest cliques partitioning mask.
    let mut cover = vec![u8::MAX; size];
    cover[0] = 0;
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask & !low;
        let mut sub = rest;
        loop {
            let clique = sub | low;
            if is_clique[clique] {
                let c = cover[mask & !clique].saturating_add(1);
                cover[mask] = cover[mask].min(c);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let full = size - 1;
    let best = (0..size)
        .filter(|&b| g.edges().iter().all(|e| !e.is_subset(VertexSet::from_bits(b as u32))))
        .map(|independent| cover[full & !independent] as usize)
        .min()
        .expect("the empty set is independent");
    Ok(best)
}

/// All nonempty cliques.
pub fn cliques(g: &Clutter) -> Result<Vec<VertexSet>> {
    require_graph(g)?;
    let adj = Adjacency::from_edges(g.n(), g.edges());
    Ok(g.vertices().subsets().skip(1).filter(|s| adj.is_clique(*s)).collect())
}

/// The graph with the vertices of `set` made isolated (edges touching `set` removed).
pub fn delete_vertices(g: &Clutter, set: VertexSet) -> Result<Clutter> {
    require_graph(g)?;
    let edges = g.edges().iter().copied().filter(|e| !e.intersects(set)).collect();
    Clutter::new(g.n(), edges)
}

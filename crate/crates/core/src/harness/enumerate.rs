//! Exhaustive small instance families.

use std::collections::HashSet;

use crate::bounds::is_cochordal;
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest `n` accepted by `all_clutters`.
pub const ALL_CLUTTERS_MAX_N: usize = 5;
/// Largest `n` accepted by `all_graphs`.
pub const ALL_GRAPHS_MAX_N: usize = 7;

/// Every labelled clutter on `1..=n`, the edgeless one first.
pub fn all_clutters(n: usize) -> Result<Vec<Clutter>> {
    if n > ALL_CLUTTERS_MAX_N {
        return Err(Error::InvalidParameter(format!("exhaustive clutters on {n} vertices")));
    }
    let mut subsets: Vec<VertexSet> = VertexSet::full(n).subsets().skip(1).collect();
    subsets.sort_by(VertexSet::canonical_cmp);
    let mut out = Vec::new();
    // Each antichain is listed once, in increasing canonical order of its edges.
    fn go(subsets: &[VertexSet], start: usize, chosen: &mut Vec<VertexSet>, n: usize, out: &mut Vec<Clutter>) {
        out.push(Clutter::new(n, chosen.clone()).expect("antichain by construction"));
        for i in start..subsets.len() {
            let s = subsets[i];
            if chosen.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
                chosen.push(s);
                go(subsets, i + 1, chosen, n, out);
                chosen.pop();
            }
        }
    }
    go(&subsets, 0, &mut Vec::new(), n, &mut out);
    Ok(out)
}

/// Every simple graph on `1..=n` up to isomorphism, in increasing order of edge count.
pub fn all_graphs(n: usize) -> Result<Vec<Clutter>> {
    if n > ALL_GRAPHS_MAX_N {
        return Err(Error::InvalidParameter(format!("exhaustive graphs on {n} vertices")));
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair");
    let perms = permutations(n);
    // Edge-index images under each vertex permutation.
    let tables: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(a, b)| index(p[a - 1], p[b - 1])).collect()).collect();
    let canonical = |mask: u32| -> u32 {
        tables
            .iter()
            .map(|t| {
                let mut img = 0u32;
                let mut rest = mask;
                while rest != 0 {
                    let i = rest.trailing_zeros() as usize;
                    img |= 1 << t[i];
                    rest &= rest - 1;
                }
                img
            })
            .min()
            .expect("at least the identity")
    };
    let mut seen = HashSet::new();
    let mut masks = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if seen.insert(canonical(mask)) {
            masks.push(mask);
        }
    }
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
        .into_iter()
        .map(|mask| {
            let edges = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| VertexSet::from_vertices([pairs[i].0, pairs[i].1]))
                .collect();
            Clutter::new(n, edges)
        })
        .collect()
}

/// Co-chordal graphs with at least one edge, up to isomorphism.
pub fn cochordal_graphs(n: usize) -> Result<Vec<Clutter>> {
    let mut out = Vec::new();
    for g in all_graphs(n)? {
        if !g.is_edgeless() && is_cochordal(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            cur.swap(j, k - 1);
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_counts() {
        // Dedekind numbers less the antichain {∅}.
        let counts: Vec<usize> = (0..=4).map(|n| all_clutters(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 19, 167]);
        assert!(all_clutters(4).unwrap()[0].is_edgeless());
    }

    #[test]
    fn graph_counts() {
        // Unlabelled simple graphs on n vertices.
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn cochordal_family() {
        // On 4 vertices only 2K2 has a non-chordal complement (C4); the edgeless graph is excluded.
        let g4 = cochordal_graphs(4).unwrap();
        assert_eq!(g4.len(), 9);
        assert!(!g4.contains(&Clutter::disjoint_edges(2).unwrap()));
    }
}

use std::collections::HashMap;

use crate::clutter::Clutter;
use crate::vertex_set::VertexSet;

/// Matching number and minimax matching number (least size of a maximal matching).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MatchingNumbers {
    pub maximum: usize,
    pub minimax: usize,
}

pub fn matching_numbers(c: &Clutter) -> MatchingNumbers {
    MatchingNumbers { maximum: maximum_matching(c.edges()), minimax: minimax_matching(c.edges()) }
}

/// Memoized on the set of blocked vertices: the least vertex still in an available edge is
/// either left unmatched or matched by one of its edges.
pub fn maximum_matching(edges: &[VertexSet]) -> usize {
    fn go(edges: &[VertexSet], blocked: VertexSet, memo: &mut HashMap<u32, usize>) -> usize {
        if let Some(&v) = memo.get(&blocked.bits()) {
            return v;
        }
        let avail: Vec<VertexSet> = edges.iter().copied().filter(|e| !e.intersects(blocked)).collect();
        let best = match avail.iter().filter_map(|e| e.min_vertex()).min() {
            None => 0,
            Some(v) => {
                let mut best = go(edges, blocked.union(VertexSet::singleton(v)), memo);
                for e in avail.iter().filter(|e| e.contains(v)) {
                    best = best.max(1 + go(edges, blocked.union(*e), memo));
                }
                best
            }
        };
        memo.insert(blocked.bits(), best);
        best
    }
    go(edges, VertexSet::EMPTY, &mut HashMap::new())
}

/// Memoized on the matched vertices: the first edge not yet met must be met by an edge
/// added to the matching.
pub fn minimax_matching(edges: &[VertexSet]) -> usize {
    fn go(edges: &[VertexSet], used: VertexSet, memo: &mut HashMap<u32, usize>) -> usize {
        if let Some(&v) = memo.get(&used.bits()) {
            return v;
        }
        let best = match edges.iter().find(|e| !e.intersects(used)) {
            None => 0,
            Some(&open) => edges
                .iter()
                .filter(|f| f.intersects(open) && !f.intersects(used))
                .map(|f| 1 + go(edges, used.union(*f), memo))
                .min()
                .expect("the open edge itself is available"),
        };
        memo.insert(used.bits(), best);
        best
    }
    go(edges, VertexSet::EMPTY, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clutter(n: usize, edges: &[&[usize]]) -> Clutter {
        Clutter::from_lists(n, edges).unwrap()
    }

    /// All matchings by subset enumeration; maximal ones are those no edge can extend.
    fn brute(c: &Clutter) -> (usize, usize) {
        let m = c.num_edges();
        let (mut max, mut minimax) = (0, usize::MAX);
        for mask in 0u32..1 << m {
            let chosen: Vec<VertexSet> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| c.edges()[i]).collect();
            let disjoint = chosen.iter().enumerate().all(|(i, a)| chosen[i + 1..].iter().all(|b| !a.intersects(*b)));
            if !disjoint {
                continue;
            }
            max = max.max(chosen.len());
            let used = chosen.iter().fold(VertexSet::EMPTY, |a, e| a.union(*e));
            if c.edges().iter().all(|e| e.intersects(used)) {
                minimax = minimax.min(chosen.len());
            }
        }
        (max, minimax)
    }

    #[test]
    fn examples() {
        for m in 1..=4 {
            let c = Clutter::disjoint_edges(m).unwrap();
            assert_eq!(matching_numbers(&c), MatchingNumbers { maximum: m, minimax: m });
        }
        let p4 = clutter(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(matching_numbers(&p4), MatchingNumbers { maximum: 2, minimax: 1 });
        let k3 = clutter(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(matching_numbers(&k3), MatchingNumbers { maximum: 1, minimax: 1 });
        assert_eq!(matching_numbers(&Clutter::edgeless(3).unwrap()), MatchingNumbers { maximum: 0, minimax: 0 });
    }

    #[test]
    fn agrees_with_enumeration() {
        let cases = [
            clutter(6, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[6, 1]]),
            clutter(7, &[&[1, 2, 3], &[3, 4], &[4, 5, 6], &[6, 7], &[2, 5]]),
            clutter(6, &[&[1], &[2, 3], &[3, 4, 5], &[5, 6], &[2, 6]]),
            clutter(7, &[&[1, 4], &[2, 4], &[3, 4], &[4, 5], &[5, 6], &[5, 7], &[6, 7]]),
        ];
        for c in cases {
            let got = matching_numbers(&c);
            assert_eq!((got.maximum, got.minimax), brute(&c), "{c:?}");
        }
    }
}

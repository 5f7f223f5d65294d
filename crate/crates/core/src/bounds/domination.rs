use crate::clutter::Clutter;
use crate::cover::min_cover;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Vertices of the reduced clutter that must be dominated: covered, and in no trivial edge.
fn demanding_vertices(c: &Clutter) -> VertexSet {
    let trivial = c.edges().iter().filter(|e| e.len() == 1).fold(VertexSet::EMPTY, |a, e| a.union(*e));
    c.covered_vertices().difference(trivial)
}

/// Index of edgewise domination.
///
/// A vertex `v` is satisfied by `F` when `v` lies in an edge of `F` or has a neighbour there,
/// i.e. when some `f ∈ F` meets `N[v]`. Vertices in a trivial edge are exempt, so a clutter of
/// trivial edges has index 0.
pub fn edgewise_domination_index(c: &Clutter) -> Result<usize> {
    Ok(edgewise_dominant_set(c)?.len())
}

/// A minimum edgewise dominant set, as edge indices in canonical order.
pub fn edgewise_dominant_set(c: &Clutter) -> Result<Vec<usize>> {
    if c.is_edgeless() {
        return Err(Error::Edgeless("the index of edgewise domination"));
    }
    let demand = demanding_vertices(c);
    let closed: Vec<(usize, VertexSet)> =
        demand.iter().map(|v| (v, c.neighbors(v).expect("vertex in range").union(VertexSet::singleton(v)))).collect();
    // Edge f satisfies the demanding vertices whose closed neighbourhood it meets.
    let sets: Vec<u64> = c
        .edges()
        .iter()
        .map(|f| closed.iter().filter(|(_, nv)| f.intersects(*nv)).fold(0u64, |a, (v, _)| a | 1 << (v - 1)))
        .collect();
    let target = demand.bits() as u64;
    let k = min_cover(&sets, target).expect("every covered vertex lies in an edge");
    Ok(first_cover_of_size(&sets, target, k))
}

/// Lexicographically first `k` indices whose sets cover `target`.
fn first_cover_of_size(sets: &[u64], target: u64, k: usize) -> Vec<usize> {
    fn go(sets: &[u64], start: usize, left: usize, uncovered: u64, chosen: &mut Vec<usize>) -> bool {
        if uncovered == 0 {
            return true;
        }
        if left == 0 || start == sets.len() {
            return false;
        }
        for i in start..sets.len() {
            if sets[i] & uncovered != 0 {
                chosen.push(i);
                if go(sets, i + 1, left - 1, uncovered & !sets[i], chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    let found = go(sets, 0, k, target, &mut chosen);
    debug_assert!(found);
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clutter(n: usize, edges: &[&[usize]]) -> Clutter {
        Clutter::from_lists(n, edges).unwrap()
    }

    /// Definition read literally, every edge subset in order of size.
    fn brute_epsilon(c: &Clutter) -> usize {
        let m = c.num_edges();
        let red = c.covered_vertices();
        let trivial: Vec<VertexSet> = c.edges().iter().copied().filter(|e| e.len() == 1).collect();
        let mut best = usize::MAX;
        for mask in 0u32..1 << m {
            let f: Vec<VertexSet> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| c.edges()[i]).collect();
            let in_f = |v: usize| f.iter().any(|e| e.contains(v));
            let ok = red.iter().all(|v| {
                in_f(v)
                    || trivial.iter().any(|t| t.contains(v))
                    || c.edges().iter().any(|e| e.contains(v) && e.iter().any(|u| u != v && in_f(u)))
            });
            if ok {
                best = best.min(f.len());
            }
        }
        best
    }

    #[test]
    fn examples() {
        assert_eq!(edgewise_domination_index(&clutter(2, &[&[1, 2]])).unwrap(), 1);
        assert_eq!(edgewise_domination_index(&clutter(3, &[&[1, 2], &[2, 3]])).unwrap(), 1);
        assert_eq!(edgewise_domination_index(&clutter(4, &[&[1, 2], &[3, 4]])).unwrap(), 2);
        assert_eq!(edgewise_domination_index(&clutter(3, &[&[1], &[2]])).unwrap(), 0);
        assert_eq!(edgewise_domination_index(&clutter(3, &[&[1], &[2, 3]])).unwrap(), 1);
        assert!(matches!(edgewise_domination_index(&Clutter::edgeless(2).unwrap()), Err(Error::Edgeless(_))));
    }

    #[test]
    fn agrees_with_literal_definition() {
        let cases: Vec<Clutter> = vec![
            clutter(5, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]),
            clutter(6, &[&[1, 2, 3], &[3, 4], &[5, 6], &[1, 6]]),
            clutter(6, &[&[1], &[2, 3], &[4, 5, 6], &[3, 4]]),
            clutter(7, &[&[1, 2], &[3, 4], &[5, 6], &[2, 7]]),
        ];
        for c in cases {
            let set = edgewise_dominant_set(&c).unwrap();
            assert_eq!(set.len(), brute_epsilon(&c), "{c:?}");
        }
    }
}

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};

/// A minimum-weight 2-collage: edge indices and `Σ (|e| - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collage {
    pub weight: usize,
    pub edges: Vec<usize>,
}

/// `f` absorbs `e` when deleting one vertex of `e` leaves a subset of `f`.
fn absorbs(f: crate::VertexSet, e: crate::VertexSet) -> bool {
    e.difference(f).len() <= 1
}

/// Edges that form a 2-collage on their own.
pub fn single_edge_collages(c: &Clutter) -> Vec<usize> {
    let edges = c.edges();
    (0..edges.len()).filter(|&i| edges.iter().all(|&e| absorbs(edges[i], e))).collect()
}

/// Weighted exact cover search: every edge must be absorbed by a chosen edge.
pub fn min_two_collage(c: &Clutter) -> Result<Collage> {
    if c.is_edgeless() {
        return Err(Error::Edgeless("a 2-collage"));
    }
    let edges = c.edges();
    let m = edges.len();
    let weight: Vec<usize> = edges.iter().map(|e| e.len() - 1).collect();
    // absorbers[e]: chosen-edge candidates for e, lightest first.
    let absorbers: Vec<Vec<usize>> = (0..m)
        .map(|e| {
            let mut fs: Vec<usize> = (0..m).filter(|&f| absorbs(edges[f], edges[e])).collect();
            fs.sort_by_key(|&f| (weight[f], f));
            fs
        })
        .collect();
    let absorbed: Vec<Vec<usize>> = (0..m).map(|f| (0..m).filter(|&e| absorbs(edges[f], edges[e])).collect()).collect();

    struct Search<'a> {
        weight: &'a [usize],
        absorbers: &'a [Vec<usize>],
        absorbed: &'a [Vec<usize>],
        hits: Vec<usize>,
        chosen: Vec<usize>,
        best: Option<(usize, Vec<usize>)>,
    }

    impl Search<'_> {
        fn go(&mut self, cost: usize) {
            let open: Vec<usize> = (0..self.hits.len()).filter(|&e| self.hits[e] == 0).collect();
            if open.is_empty() {
                if self.best.as_ref().is_none_or(|(w, _)| cost < *w) {
                    let mut set = self.chosen.clone();
                    set.sort_unstable();
                    self.best = Some((cost, set));
                }
                return;
            }
            // Each open edge needs at least its cheapest absorber.
            let floor = open.iter().map(|&e| self.weight[self.absorbers[e][0]]).max().unwrap_or(0);
            if let Some((w, _)) = &self.best {
                if cost + floor >= *w {
                    return;
                }
            }
            let pivot = *open.iter().min_by_key(|&&e| (self.absorbers[e].len(), e)).expect("nonempty");
            for k in 0..self.absorbers[pivot].len() {
                let f = self.absorbers[pivot][k];
                self.chosen.push(f);
                for &e in &self.absorbed[f] {
                    self.hits[e] += 1;
                }
                self.go(cost + self.weight[f]);
                for &e in &self.absorbed[f] {
                    self.hits[e] -= 1;
                }
                self.chosen.pop();
            }
        }
    }

    let mut search = Search {
        weight: &weight,
        absorbers: &absorbers,
        absorbed: &absorbed,
        hits: vec![0; m],
        chosen: Vec::new(),
        best: None,
    };
    search.go(0);
    let (weight, edges) = search.best.expect("the full edge set is a 2-collage");
    Ok(Collage { weight, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clutter(n: usize, edges: &[&[usize]]) -> Clutter {
        Clutter::from_lists(n, edges).unwrap()
    }

    fn brute(c: &Clutter) -> usize {
        let m = c.num_edges();
        let edges = c.edges();
        (1u32..1 << m)
            .filter(|mask| edges.iter().all(|&e| (0..m).any(|f| mask >> f & 1 == 1 && absorbs(edges[f], e))))
            .map(|mask| (0..m).filter(|f| mask >> f & 1 == 1).map(|f| edges[f].len() - 1).sum())
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        let e = clutter(4, &[&[1, 2, 3, 4]]);
        assert_eq!(min_two_collage(&e).unwrap().weight, 3);
        let two = clutter(4, &[&[1, 2, 3], &[1, 2, 4]]);
        assert_eq!(min_two_collage(&two).unwrap().weight, 2);
        assert_eq!(single_edge_collages(&two), vec![0, 1]);
        for m in 1..=4 {
            assert_eq!(min_two_collage(&Clutter::disjoint_edges(m).unwrap()).unwrap().weight, m);
        }
        assert!(min_two_collage(&Clutter::edgeless(2).unwrap()).is_err());
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        let cases = [
            clutter(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 5]]),
            clutter(6, &[&[1], &[2, 3], &[3, 4, 5], &[4, 5, 6], &[2, 6]]),
            clutter(6, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]]),
            clutter(5, &[&[1, 2, 3, 4], &[2, 3, 4, 5], &[1, 5]]),
        ];
        for c in cases {
            let got = min_two_collage(&c).unwrap();
            assert_eq!(got.weight, brute(&c), "{c:?}");
            let chosen: Vec<_> = got.edges.iter().map(|&i| c.edges()[i]).collect();
            assert!(c.edges().iter().all(|&e| chosen.iter().any(|&f| absorbs(f, e))));
            assert_eq!(got.weight, chosen.iter().map(|f| f.len() - 1).sum::<usize>());
        }
    }
}

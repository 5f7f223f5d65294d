//! Squarefree monomial ideals stored as antichains of generator supports.

use serde::{Deserialize, Serialize};

use crate::clutter::{check_in_range, check_n, Clutter};
use crate::error::{Error, Result};
use crate::vertex_set::{minimalize, VertexSet};

/// A proper squarefree monomial ideal of `K[x_1..x_n]`. No generator is empty, so the unit
/// ideal is not representable; an empty generator list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquarefreeIdeal {
    n: usize,
    gens: Vec<VertexSet>,
}

impl SquarefreeIdeal {
    pub fn new(n: usize, gens: Vec<VertexSet>) -> Result<Self> {
        let c = Clutter::new(n, gens)?;
        Ok(Self::edge_ideal(&c))
    }

    /// Ideal generated by `gens`; redundant generators are dropped.
    pub fn generated_by(n: usize, gens: Vec<VertexSet>) -> Result<Self> {
        let (c, _) = Clutter::minimalized(n, gens)?;
        Ok(Self::edge_ideal(&c))
    }

    pub fn from_lists(n: usize, gens: &[&[usize]]) -> Result<Self> {
        Ok(Self::edge_ideal(&Clutter::from_lists(n, gens)?))
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SquarefreeIdeal { n, gens: Vec::new() })
    }

    /// The ideal generated by the variables in `vars`.
    pub fn prime(n: usize, vars: VertexSet) -> Result<Self> {
        check_n(n)?;
        check_in_range(vars, n)?;
        Ok(SquarefreeIdeal { n, gens: vars.iter().map(VertexSet::singleton).collect() })
    }

    /// `(x_1, .., x_n)`.
    pub fn maximal(n: usize) -> Result<Self> {
        Self::prime(n, VertexSet::full(n))
    }

    /// The edge ideal `I(C)`.
    pub fn edge_ideal(c: &Clutter) -> Self {
        SquarefreeIdeal { n: c.n(), gens: c.edges().to_vec() }
    }

    /// The clutter whose edges are the generator supports.
    pub fn to_clutter(&self) -> Clutter {
        Clutter::from_canonical(self.n, self.gens.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Generated by variables only.
    pub fn is_variable_prime(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    /// Whether `x^σ` lies in the ideal.
    #[inline]
    pub fn contains(&self, sigma: VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(sigma))
    }

    /// Membership of every squarefree monomial, indexed by support bits.
    pub fn membership_table(&self) -> Vec<bool> {
        let size = 1usize << self.n;
        let mut table = vec![false; size];
        for g in &self.gens {
            let g = g.bits() as usize;
            // Supersets of g within [n].
            let rest = (size - 1) & !g;
            let mut sub = rest;
            loop {
                table[g | sub] = true;
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        table
    }

    /// `lcm` of the generators, as a support.
    pub fn lcm_support(&self) -> VertexSet {
        self.gens.iter().fold(VertexSet::EMPTY, |acc, g| acc.union(*g))
    }

    /// The same generators in `n + extra` variables.
    pub fn embed(&self, extra: usize) -> Result<Self> {
        check_n(self.n + extra)?;
        Ok(SquarefreeIdeal { n: self.n + extra, gens: self.gens.clone() })
    }

    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        Ok(Self::edge_ideal(&self.to_clutter().relabel(perm)?))
    }

    /// The Alexander dual: generators are the minimal transversals of the generator supports.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc = vec![VertexSet::EMPTY];
        for &g in &self.gens {
            acc = intersect_gens(&acc, &prime_gens(g));
        }
        Ok(SquarefreeIdeal { n: self.n, gens: acc })
    }

    /// Supports of the irredundant primary components `P_F = (x_i : i ∈ F)`, canonically ordered.
    pub fn primary_components(&self) -> Result<Vec<VertexSet>> {
        Ok(self.alexander_dual()?.gens)
    }

    /// `v + n - h - 1` from the irredundant primary decomposition.
    pub fn size(&self) -> Result<usize> {
        let comps = self.primary_components()?;
        let total = comps.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(*c));
        let v = min_union_cover(&comps, total);
        Ok(v + self.n - total.len() - 1)
    }

    /// `deg lcm(u_1..u_m) - w` with `w` the fewest generators reaching the full lcm.
    pub fn cosize(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let lcm = self.lcm_support();
        Ok(lcm.len() - min_union_cover(&self.gens, lcm))
    }
}

fn prime_gens(vars: VertexSet) -> Vec<VertexSet> {
    vars.iter().map(VertexSet::singleton).collect()
}

/// Minimal generators of the intersection of two squarefree ideals given by generators.
fn intersect_gens(a: &[VertexSet], b: &[VertexSet]) -> Vec<VertexSet> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x.union(y));
        }
    }
    minimalize(out)
}

/// Sum of ideals in a common ring.
pub fn ideal_sum(ideals: &[SquarefreeIdeal]) -> Result<SquarefreeIdeal> {
    let n = common_n(ideals)?;
    let gens = ideals.iter().flat_map(|i| i.gens.iter().copied()).collect();
    Ok(SquarefreeIdeal { n, gens: minimalize(gens) })
}

/// Intersection of ideals in a common ring, by pairwise lcm closure.
pub fn ideal_intersection(ideals: &[SquarefreeIdeal]) -> Result<SquarefreeIdeal> {
    let n = common_n(ideals)?;
    let mut acc = vec![VertexSet::EMPTY];
    for i in ideals {
        acc = intersect_gens(&acc, &i.gens);
        if acc.is_empty() {
            break;
        }
    }
    Ok(SquarefreeIdeal { n, gens: acc })
}

fn common_n(ideals: &[SquarefreeIdeal]) -> Result<usize> {
    let first = ideals.first().ok_or_else(|| Error::InvalidParameter("empty ideal list".into()))?;
    for i in ideals {
        if i.n != first.n {
            return Err(Error::MismatchedAmbient(first.n, i.n));
        }
    }
    Ok(first.n)
}

/// Fewest members of `sets` whose union contains `target`.
pub(crate) fn min_union_cover(sets: &[VertexSet], target: VertexSet) -> usize {
    let masks: Vec<u64> = sets.iter().map(|s| s.bits() as u64).collect();
    crate::cover::min_cover(&masks, target.bits() as u64).expect("target lies inside the union of sets")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn ideal(n: usize, gens: &[&[usize]]) -> SquarefreeIdeal {
        SquarefreeIdeal::from_lists(n, gens).unwrap()
    }

    /// Minimal transversals by checking every subset of [n].
    fn brute_transversals(n: usize, edges: &[VertexSet]) -> Vec<VertexSet> {
        let hits = |t: VertexSet| edges.iter().all(|e| e.intersects(t));
        let mut out: Vec<VertexSet> = VertexSet::full(n)
            .subsets()
            .filter(|&t| hits(t) && t.iter().all(|v| !hits(t.difference(VertexSet::singleton(v)))))
            .collect();
        out.sort_by(VertexSet::canonical_cmp);
        out
    }

    #[test]
    fn edge_ideal_examples() {
        let k2 = Clutter::from_lists(2, &[&[1, 2]]).unwrap();
        assert_eq!(SquarefreeIdeal::edge_ideal(&k2).gens(), &[vs(&[1, 2])]);
        let m = Clutter::disjoint_edges(2).unwrap();
        let i = SquarefreeIdeal::edge_ideal(&m);
        assert_eq!(i.gens(), &[vs(&[1, 2]), vs(&[3, 4])]);
        assert_eq!(i.to_clutter(), m);
        assert!(SquarefreeIdeal::edge_ideal(&Clutter::edgeless(3).unwrap()).is_zero());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(ideal(2, &[&[1, 2]]).alexander_dual().unwrap(), ideal(2, &[&[1], &[2]]));
        let i = ideal(4, &[&[1, 2], &[3, 4]]);
        let expected = brute_transversals(4, i.gens());
        assert_eq!(expected, vec![vs(&[1, 3]), vs(&[1, 4]), vs(&[2, 3]), vs(&[2, 4])]);
        assert_eq!(i.alexander_dual().unwrap().gens(), expected.as_slice());

        let i = ideal(3, &[&[1, 2], &[2, 3]]);
        let expected = brute_transversals(3, i.gens());
        assert_eq!(expected, vec![vs(&[2]), vs(&[1, 3])]);
        assert_eq!(i.alexander_dual().unwrap().gens(), expected.as_slice());

        assert_eq!(SquarefreeIdeal::zero(3).unwrap().alexander_dual(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn dual_matches_brute_force_on_small_clutters() {
        let i = ideal(6, &[&[1, 2, 3], &[3, 4], &[4, 5, 6], &[1, 6], &[2, 5]]);
        assert_eq!(i.alexander_dual().unwrap().gens(), brute_transversals(6, i.gens()).as_slice());
        assert_eq!(i.alexander_dual().unwrap().alexander_dual().unwrap(), i);
    }

    #[test]
    fn sum_and_intersection_examples() {
        let a = ideal(2, &[&[1, 2]]);
        let b = ideal(2, &[&[1]]);
        assert_eq!(ideal_sum(&[a, b]).unwrap(), ideal(2, &[&[1]]));
        let a = ideal(2, &[&[1]]);
        let b = ideal(2, &[&[2]]);
        assert_eq!(ideal_intersection(&[a, b]).unwrap(), ideal(2, &[&[1, 2]]));
        let c = ideal(3, &[&[1]]);
        assert_eq!(ideal_sum(&[ideal(2, &[&[1]]), c.clone()]), Err(Error::MismatchedAmbient(2, 3)));
        assert!(ideal_intersection(&[SquarefreeIdeal::zero(3).unwrap(), c]).unwrap().is_zero());
    }

    #[test]
    fn membership_table_agrees_with_contains() {
        let i = ideal(5, &[&[1, 2], &[2, 4, 5], &[3]]);
        let t = i.membership_table();
        for s in VertexSet::full(5).subsets() {
            assert_eq!(t[s.bits() as usize], i.contains(s));
        }
    }

    /// Fewest generators reaching the lcm, by trying every subset.
    fn brute_min_cover(sets: &[VertexSet], target: VertexSet) -> usize {
        (0u32..1 << sets.len())
            .filter(|mask| {
                let u =
                    (0..sets.len()).filter(|i| mask >> i & 1 == 1).fold(VertexSet::EMPTY, |acc, i| acc.union(sets[i]));
                target.is_subset(u)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn cosize_examples() {
        assert_eq!(ideal(2, &[&[1, 2]]).cosize().unwrap(), 1);
        for m in 1..=5 {
            let i = SquarefreeIdeal::edge_ideal(&Clutter::disjoint_edges(m).unwrap());
            assert_eq!(brute_min_cover(i.gens(), i.lcm_support()), m);
            assert_eq!(i.cosize().unwrap(), m);
        }
        for n in 1..=8 {
            assert_eq!(SquarefreeIdeal::prime(n, VertexSet::EMPTY).unwrap().cosize(), Err(Error::ZeroIdeal));
            let p = SquarefreeIdeal::new(n, vec![VertexSet::full(n)]).unwrap();
            assert_eq!(p.cosize().unwrap(), n - 1);
        }
    }

    #[test]
    fn min_union_cover_matches_brute_force() {
        let sets = vec![vs(&[1, 2, 3]), vs(&[3, 4]), vs(&[4, 5, 6]), vs(&[1, 6]), vs(&[2, 5]), vs(&[6, 7])];
        for target in VertexSet::full(7).subsets().filter(|t| t.max_vertex() <= 7) {
            let covered = sets.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
            if target.is_subset(covered) {
                assert_eq!(min_union_cover(&sets, target), brute_min_cover(&sets, target));
            }
        }
    }

    #[test]
    fn size_examples() {
        // (x1, x2) in 3 variables: one component of height 2, so 1 + 3 - 2 - 1.
        assert_eq!(ideal(3, &[&[1], &[2]]).size().unwrap(), 1);
        // Principal x1x2: components (x1), (x2); v = 2, h = 2.
        assert_eq!(ideal(2, &[&[1, 2]]).size().unwrap(), 1);
        // 2K2: four components, two of them cover all variables.
        assert_eq!(ideal(4, &[&[1, 2], &[3, 4]]).size().unwrap(), 1);
        assert_eq!(SquarefreeIdeal::zero(2).unwrap().size(), Err(Error::ZeroIdeal));
    }
}

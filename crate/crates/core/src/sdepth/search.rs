//! Decision procedure: does the poset admit an interval partition with every `|upper| >= d`?
//!
//! Any such partition can be refined so that every interval reaching below rank `d` has an
//! upper end of rank exactly `d`, and everything of rank `>= d` left over becomes a singleton.
//! The search therefore covers the members of rank `< d` by intervals `[σ, B]` with `|B| = d`.
//! An uncovered member with no uncovered co-atom must be a lower end; these forced members
//! need pairwise distinct upper ends, which is checked by bipartite matching at every node,
//! and the search branches on the forced member with the fewest upper ends.

use std::collections::HashSet;

use super::links;
use super::poset::{CharPoset, Interval, IntervalPartition};
use crate::vertex_set::VertexSet;

/// Default node budget; large enough that every poset on up to 10 vertices we have met
/// finishes well inside it.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

const MEMO_CAP: usize = 1 << 21;

/// Outcome of one decision run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Found(IntervalPartition),
    Infeasible,
    /// The node budget ran out first.
    Indeterminate,
}

/// Search nodes shared by a sequence of decision runs.
#[derive(Clone, Copy, Debug)]
pub struct NodeBudget {
    pub limit: u64,
    pub used: u64,
}

impl NodeBudget {
    pub fn new(limit: u64) -> Self {
        NodeBudget { limit, used: 0 }
    }

    pub(crate) fn spend(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }
}

impl Default for NodeBudget {
    fn default() -> Self {
        NodeBudget::new(DEFAULT_NODE_BUDGET)
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Rank-count feasibility. Every uncovered member of rank `a < d` that is not absorbed from
/// below is a lower end, and an interval with lower end of rank `a` and upper end of rank `d`
/// holds exactly `C(d-a, k-a)` members of rank `k`. `counts[k]` is the number of uncovered
/// members of rank `k`, with `counts[d]` the unused upper ends.
pub(crate) fn counts_feasible(counts: &[i64], d: usize, binom: &[Vec<i64>]) -> bool {
    let mut rem = counts.to_vec();
    for a in 0..d {
        let bottoms = rem[a];
        if bottoms == 0 {
            continue;
        }
        for k in a + 1..=d {
            rem[k] -= bottoms * binom[d - a][k - a];
            if rem[k] < 0 {
                return false;
            }
        }
    }
    true
}

/// Largest `d` passing the rank-count test on `counts` (indexed by rank, up to `m`).
fn counting_bound(counts: &[i64], m: usize, binom: &[Vec<i64>]) -> usize {
    let mut best = 0;
    for d in 0..=m {
        if (0..d).all(|k| counts[k] == 0) || counts_feasible(&counts[..=d], d, binom) {
            best = d;
        }
    }
    best
}

/// Largest `d` that passes the rank-count test at the root; an upper bound for the depth.
pub(crate) fn counting_upper_bound(poset: &CharPoset) -> usize {
    let n = poset.n();
    let binom = binomial_table(n);
    let counts: Vec<i64> = (0..=n).map(|k| poset.rank(k).len() as i64).collect();
    counting_bound(&counts, n, &binom)
}

/// Largest subcube count for `subcube_upper_bound`; `4^n` sets are visited.
const SUBCUBE_MAX_N: usize = 12;

/// Upper bound from every subcube `[A, W]`: a partition with value `d` restricts to one of the
/// subcube's members with value at least `d - (n - |W|) - |A|`, so the rank-count test applies
/// there. Falls back to the plain counting bound above `SUBCUBE_MAX_N` vertices.
pub(crate) fn subcube_upper_bound(poset: &CharPoset) -> usize {
    let n = poset.n();
    let mut best = counting_upper_bound(poset);
    if n > SUBCUBE_MAX_N {
        return best;
    }
    let binom = binomial_table(n);
    let full = VertexSet::full(n);
    let mut counts = vec![0i64; n + 1];
    for a in full.subsets() {
        for extra in full.difference(a).subsets() {
            let m = extra.len();
            let slack = n - m;
            if slack >= best {
                continue;
            }
            counts[..=m].fill(0);
            for t in extra.subsets() {
                if poset.contains(a.union(t)) {
                    counts[t.len()] += 1;
                }
            }
            best = best.min(counting_bound(&counts[..=m], m, &binom) + slack);
        }
    }
    best
}

pub(crate) fn binomial_table(n: usize) -> Vec<Vec<i64>> {
    (0..=n).map(|a| (0..=n).map(|b| binomial(a, b)).collect()).collect()
}

struct Frame {
    sigma: VertexSet,
    candidates: Vec<VertexSet>,
    next: usize,
    applied: Option<VertexSet>,
}

struct State<'a> {
    poset: &'a CharPoset,
    d: usize,
    covered: Vec<u64>,
    counts: Vec<i64>,
    binom: Vec<Vec<i64>>,
    /// Matching partner of each upper end, indexed by bits; `usize::MAX` when free.
    partner: Vec<usize>,
    seen: Vec<u32>,
    stamp: u32,
}

impl State<'_> {
    #[inline]
    fn is_covered(&self, s: VertexSet) -> bool {
        let b = s.bits() as usize;
        self.covered[b >> 6] >> (b & 63) & 1 == 1
    }

    #[inline]
    fn toggle(&mut self, s: VertexSet) {
        let b = s.bits() as usize;
        self.covered[b >> 6] ^= 1 << (b & 63);
    }

    fn apply(&mut self, iv: Interval, on: bool) {
        let delta = if on { -1 } else { 1 };
        for s in iv.members() {
            debug_assert_eq!(self.is_covered(s), !on);
            self.toggle(s);
            self.counts[s.len()] += delta;
        }
    }

    /// An uncovered member none of whose co-atoms is an uncovered member cannot be absorbed
    /// from below, so it is the lower end of its interval.
    fn is_forced(&self, sigma: VertexSet) -> bool {
        sigma.iter().all(|v| {
            let c = sigma.difference(VertexSet::singleton(v));
            !self.poset.contains(c) || self.is_covered(c)
        })
    }

    /// Upper ends of rank `d` whose interval above `sigma` is still entirely uncovered.
    fn tops(&self, sigma: VertexSet) -> Vec<VertexSet> {
        let n = self.poset.n();
        let free = VertexSet::full(n).difference(sigma);
        let need = self.d - sigma.len();
        free.subsets()
            .filter(|t| t.len() == need)
            .map(|extra| (extra, sigma.union(extra)))
            .filter(|&(extra, top)| {
                self.poset.contains(top) && !extra.subsets().any(|t| self.is_covered(sigma.union(t)))
            })
            .map(|(_, top)| top)
            .collect()
    }

    /// Orders `tops` so that upper ends with fewer uncovered co-atoms outside the interval,
    /// which would compete for them, come first.
    fn rank_candidates(&self, sigma: VertexSet, tops: Vec<VertexSet>) -> Vec<VertexSet> {
        let mut out: Vec<(usize, VertexSet)> = tops
            .into_iter()
            .map(|top| {
                let contention = sigma
                    .iter()
                    .map(|v| top.difference(VertexSet::singleton(v)))
                    .filter(|c| self.poset.contains(*c) && !self.is_covered(*c))
                    .count();
                (contention, top)
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.canonical_cmp(&b.1)));
        out.into_iter().map(|(_, t)| t).collect()
    }

    /// Distinct lower ends need distinct upper ends: Hall's condition via augmenting paths.
    fn has_matching(&mut self, adj: &[Vec<VertexSet>]) -> bool {
        fn augment(i: usize, adj: &[Vec<VertexSet>], partner: &mut [usize], seen: &mut [u32], stamp: u32) -> bool {
            for top in &adj[i] {
                let b = top.bits() as usize;
                if seen[b] == stamp {
                    continue;
                }
                seen[b] = stamp;
                if partner[b] == usize::MAX || augment(partner[b], adj, partner, seen, stamp) {
                    partner[b] = i;
                    return true;
                }
            }
            false
        }
        let mut ok = true;
        for i in 0..adj.len() {
            self.stamp = self.stamp.wrapping_add(1);
            if self.stamp == 0 {
                self.seen.fill(0);
                self.stamp = 1;
            }
            if !augment(i, adj, &mut self.partner, &mut self.seen, self.stamp) {
                ok = false;
                break;
            }
        }
        for top in adj.iter().flatten() {
            self.partner[top.bits() as usize] = usize::MAX;
        }
        ok
    }

    /// The member to branch on with its ordered candidates, or `None` when the node is dead.
    fn branch(&mut self, items: &[VertexSet]) -> Option<(VertexSet, Vec<VertexSet>)> {
        if !counts_feasible(&self.counts, self.d, &self.binom) {
            return None;
        }
        let forced: Vec<VertexSet> =
            items.iter().copied().filter(|&s| !self.is_covered(s) && self.is_forced(s)).collect();
        let mut adj = Vec::with_capacity(forced.len());
        for &s in &forced {
            let t = self.tops(s);
            if t.is_empty() {
                return None;
            }
            adj.push(t);
        }
        if !self.has_matching(&adj) {
            return None;
        }
        let best = (0..forced.len()).min_by_key(|&i| adj[i].len())?;
        let tops = std::mem::take(&mut adj[best]);
        Some((forced[best], self.rank_candidates(forced[best], tops)))
    }
}

/// Largest dancing-links structure built; beyond it the lazy search runs instead.
const LINKS_MAX: usize = 1 << 23;

/// Searches for a partition of `poset` with value at least `d`.
pub fn decide(poset: &CharPoset, d: usize, budget: &mut NodeBudget) -> Decision {
    if d > poset.n() {
        return Decision::Infeasible;
    }
    if links::link_count(poset, d) <= LINKS_MAX {
        links::decide_links(poset, d, budget)
    } else {
        decide_lazy(poset, d, budget)
    }
}

/// The same search generating upper ends on demand, for posets too large to link.
fn decide_lazy(poset: &CharPoset, d: usize, budget: &mut NodeBudget) -> Decision {
    let n = poset.n();
    let items: Vec<VertexSet> = (0..d).flat_map(|k| poset.rank(k).iter().copied()).collect();
    let mut state = State {
        poset,
        d,
        covered: vec![0u64; (1usize << n).div_ceil(64)],
        counts: (0..=d).map(|k| poset.rank(k).len() as i64).collect(),
        binom: binomial_table(n),
        partner: vec![usize::MAX; 1 << n],
        seen: vec![0; 1 << n],
        stamp: 0,
    };
    let mut failed: HashSet<Vec<u64>> = HashSet::new();
    let mut stack: Vec<Frame> = Vec::new();

    'descend: loop {
        if items.iter().all(|&s| state.is_covered(s)) {
            break 'descend;
        }
        let branch = if failed.contains(&state.covered) { None } else { state.branch(&items) };
        let (sigma, candidates) = branch.unwrap_or((VertexSet::EMPTY, Vec::new()));
        stack.push(Frame { sigma, candidates, next: 0, applied: None });

        // Advance the deepest frame with an untried candidate, backtracking as needed.
        loop {
            let Some(frame) = stack.last_mut() else {
                return Decision::Infeasible;
            };
            let sigma = frame.sigma;
            if let Some(top) = frame.applied.take() {
                state.apply(Interval::new(sigma, top), false);
            }
            if frame.next < frame.candidates.len() {
                let top = frame.candidates[frame.next];
                frame.next += 1;
                frame.applied = Some(top);
                state.apply(Interval::new(sigma, top), true);
                if !budget.spend() {
                    return Decision::Indeterminate;
                }
                continue 'descend;
            }
            stack.pop();
            if failed.len() < MEMO_CAP {
                failed.insert(state.covered.clone());
            }
        }
    }

    let mut intervals: Vec<Interval> =
        stack.iter().map(|f| Interval::new(f.sigma, f.applied.expect("applied on success path"))).collect();
    for s in (d..=n).flat_map(|k| poset.rank(k).iter().copied()) {
        if !state.is_covered(s) {
            intervals.push(Interval::new(s, s));
        }
    }
    Decision::Found(IntervalPartition { intervals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::SquarefreeIdeal;
    use crate::sdepth::Mode;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn counting_bound_for_maximal_ideal() {
        // sdepth of the maximal ideal is ceil(n/2); the counting test alone already pins it.
        for n in 1..=10 {
            let p = CharPoset::new(&SquarefreeIdeal::maximal(n).unwrap(), Mode::Ideal).unwrap();
            assert_eq!(counting_upper_bound(&p), n.div_ceil(2), "n = {n}");
        }
    }

    #[test]
    fn linked_and_lazy_searches_agree() {
        use crate::harness::{random_ideal, seeded_rng};
        use rand::Rng;
        let mut rng = seeded_rng(41);
        for _ in 0..60 {
            let n = rng.gen_range(2..=6);
            let ideal = random_ideal(&mut rng, n, &[0.1, 0.3, 0.2]).unwrap();
            for mode in [Mode::Quotient, Mode::Ideal] {
                let p = CharPoset::new(&ideal, mode).unwrap();
                for d in 0..=n {
                    let lazy = decide_lazy(&p, d, &mut NodeBudget::default());
                    let linked = links::decide_links(&p, d, &mut NodeBudget::default());
                    assert_eq!(
                        matches!(lazy, Decision::Found(_)),
                        matches!(linked, Decision::Found(_)),
                        "{ideal:?} {mode:?} d = {d}"
                    );
                    for dec in [lazy, linked] {
                        match dec {
                            Decision::Found(w) => {
                                assert!(w.is_partition_of(&p));
                                assert!(w.value().unwrap() >= d);
                            }
                            Decision::Infeasible => {}
                            Decision::Indeterminate => panic!("default budget ran out"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subcube_bound_is_at_most_the_plain_one() {
        for n in 1..=8 {
            let p = CharPoset::new(&SquarefreeIdeal::maximal(n).unwrap(), Mode::Ideal).unwrap();
            assert!(subcube_upper_bound(&p) <= counting_upper_bound(&p));
            assert_eq!(subcube_upper_bound(&p), n.div_ceil(2));
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p = CharPoset::new(&SquarefreeIdeal::maximal(6).unwrap(), Mode::Ideal).unwrap();
        let mut budget = NodeBudget::new(1);
        assert_eq!(decide(&p, 3, &mut budget), Decision::Indeterminate);
    }
}

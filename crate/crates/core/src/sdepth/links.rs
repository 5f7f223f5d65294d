//! The decision problem as an exact cover, solved by Algorithm X on dancing links.
//!
//! Members of rank `< d` are primary columns, members of rank `d` secondary ones; each row is
//! an interval `[a, B]` of the poset with `|B| = d` and `a ≠ B`. Branching takes the primary
//! column with the fewest live rows.

use std::collections::HashSet;

use super::poset::{CharPoset, Interval, IntervalPartition};
use super::search::{binomial_table, counts_feasible, Decision, NodeBudget};
use crate::vertex_set::VertexSet;

const ROOT: usize = 0;
const NONE: usize = usize::MAX;
const MEMO_CAP: usize = 1 << 21;

/// Link nodes needed for `poset` at `d`, so callers can decline oversized instances.
pub(crate) fn link_count(poset: &CharPoset, d: usize) -> usize {
    rows(poset, d).map(|iv| 1usize << (iv.upper.len() - iv.lower.len())).sum()
}

/// Rows in order: larger intervals first, then canonical order of `(upper, lower)`.
fn rows(poset: &CharPoset, d: usize) -> impl Iterator<Item = Interval> + '_ {
    let tops = poset.rank(d);
    (0..d).flat_map(move |a| {
        tops.iter().flat_map(move |&top| {
            top.subsets()
                .filter(move |lo| lo.len() == a)
                .filter(move |&lo| poset.contains_interval(lo, top))
                .map(move |lo| Interval::new(lo, top))
        })
    })
}

struct Links {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    col: Vec<usize>,
    row: Vec<usize>,
    size: Vec<usize>,
}

impl Links {
    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.col[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                self.size[self.col[j]] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }
}

struct Solver<'a> {
    poset: &'a CharPoset,
    d: usize,
    links: Links,
    /// Column header of each member, by bits.
    column: Vec<usize>,
    /// Member of each column.
    member: Vec<VertexSet>,
    intervals: Vec<Interval>,
    covered: Vec<u64>,
    counts: Vec<i64>,
    binom: Vec<Vec<i64>>,
    partner: Vec<usize>,
    seen: Vec<u32>,
    stamp: u32,
}

impl<'a> Solver<'a> {
    fn new(poset: &'a CharPoset, d: usize) -> Self {
        let n = poset.n();
        let mut column = vec![NONE; 1 << n];
        let mut member = vec![VertexSet::EMPTY];
        for k in 0..=d {
            for &s in poset.rank(k) {
                column[s.bits() as usize] = member.len();
                member.push(s);
            }
        }
        let heads = member.len();
        let primary = heads - poset.rank(d).len();
        let mut links = Links {
            left: (0..heads).map(|c| if c == 0 { primary - 1 } else { c - 1 }).collect(),
            right: (0..heads).map(|c| if c + 1 == primary { 0 } else { c + 1 }).collect(),
            up: (0..heads).collect(),
            down: (0..heads).collect(),
            col: (0..heads).collect(),
            row: vec![NONE; heads],
            size: vec![0; heads],
        };
        // Secondary columns link only to themselves horizontally.
        for c in primary..heads {
            links.left[c] = c;
            links.right[c] = c;
        }
        if primary == 1 {
            links.left[ROOT] = ROOT;
            links.right[ROOT] = ROOT;
        }
        let intervals: Vec<Interval> = rows(poset, d).collect();
        for (r, iv) in intervals.iter().enumerate() {
            let first = links.col.len();
            for s in iv.members() {
                let c = column[s.bits() as usize];
                let node = links.col.len();
                links.col.push(c);
                links.row.push(r);
                links.up.push(links.up[c]);
                links.down.push(c);
                let last = links.up[c];
                links.down[last] = node;
                links.up[c] = node;
                links.size[c] += 1;
                links.left.push(NONE);
                links.right.push(NONE);
            }
            let end = links.col.len();
            for node in first..end {
                links.left[node] = if node == first { end - 1 } else { node - 1 };
                links.right[node] = if node + 1 == end { first } else { node + 1 };
            }
        }
        Solver {
            poset,
            d,
            links,
            column,
            member,
            intervals,
            covered: vec![0u64; (1usize << n).div_ceil(64)],
            counts: (0..=d).map(|k| poset.rank(k).len() as i64).collect(),
            binom: binomial_table(n),
            partner: vec![NONE; 1 << n],
            seen: vec![0; 1 << n],
            stamp: 0,
        }
    }

    #[inline]
    fn is_covered(&self, s: VertexSet) -> bool {
        let b = s.bits() as usize;
        self.covered[b >> 6] >> (b & 63) & 1 == 1
    }

    fn mark(&mut self, r: usize, on: bool) {
        let delta = if on { -1 } else { 1 };
        for s in self.intervals[r].members() {
            let b = s.bits() as usize;
            self.covered[b >> 6] ^= 1 << (b & 63);
            self.counts[s.len()] += delta;
        }
    }

    /// Uncovered members with every co-atom covered are lower ends and need distinct upper ends.
    fn hall_holds(&mut self) -> bool {
        let mut forced: Vec<Vec<VertexSet>> = Vec::new();
        let mut c = self.links.right[ROOT];
        while c != ROOT {
            let sigma = self.member[c];
            let is_forced = sigma.iter().all(|v| {
                let co = sigma.difference(VertexSet::singleton(v));
                !self.poset.contains(co) || self.is_covered(co)
            });
            if is_forced {
                let mut tops = Vec::new();
                let mut i = self.links.down[c];
                while i != c {
                    let iv = self.intervals[self.links.row[i]];
                    if iv.lower == sigma {
                        tops.push(iv.upper);
                    }
                    i = self.links.down[i];
                }
                if tops.is_empty() {
                    return false;
                }
                forced.push(tops);
            }
            c = self.links.right[c];
        }
        fn augment(i: usize, adj: &[Vec<VertexSet>], partner: &mut [usize], seen: &mut [u32], stamp: u32) -> bool {
            for top in &adj[i] {
                let b = top.bits() as usize;
                if seen[b] == stamp {
                    continue;
                }
                seen[b] = stamp;
                if partner[b] == NONE || augment(partner[b], adj, partner, seen, stamp) {
                    partner[b] = i;
                    return true;
                }
            }
            false
        }
        let mut ok = true;
        for i in 0..forced.len() {
            self.stamp = self.stamp.wrapping_add(1);
            if self.stamp == 0 {
                self.seen.fill(0);
                self.stamp = 1;
            }
            if !augment(i, &forced, &mut self.partner, &mut self.seen, self.stamp) {
                ok = false;
                break;
            }
        }
        for top in forced.iter().flatten() {
            self.partner[top.bits() as usize] = NONE;
        }
        ok
    }

    /// The live primary column with the fewest rows, or `None` when some column has none.
    fn choose(&self) -> Option<usize> {
        let mut best = NONE;
        let mut best_size = usize::MAX;
        let mut c = self.links.right[ROOT];
        while c != ROOT {
            let s = self.links.size[c];
            if s < best_size {
                best = c;
                best_size = s;
                if s == 0 {
                    return None;
                }
            }
            c = self.links.right[c];
        }
        Some(best)
    }

    fn select(&mut self, node: usize) {
        let mut j = self.links.right[node];
        while j != node {
            self.links.cover(self.links.col[j]);
            j = self.links.right[j];
        }
        self.mark(self.links.row[node], true);
    }

    fn deselect(&mut self, node: usize) {
        self.mark(self.links.row[node], false);
        let mut j = self.links.left[node];
        while j != node {
            self.links.uncover(self.links.col[j]);
            j = self.links.left[j];
        }
    }
}

struct Frame {
    column: usize,
    /// Row node currently selected in `column`, or the header before the first.
    node: usize,
}

pub(crate) fn decide_links(poset: &CharPoset, d: usize, budget: &mut NodeBudget) -> Decision {
    let mut s = Solver::new(poset, d);
    let mut failed: HashSet<Vec<u64>> = HashSet::new();
    let mut stack: Vec<Frame> = Vec::new();

    'descend: loop {
        if s.links.right[ROOT] == ROOT {
            break 'descend;
        }
        let live = counts_feasible(&s.counts, d, &s.binom) && !failed.contains(&s.covered) && s.hall_holds();
        match live.then(|| s.choose()).flatten() {
            Some(c) => {
                s.links.cover(c);
                stack.push(Frame { column: c, node: c });
            }
            None => {
                if failed.len() < MEMO_CAP {
                    failed.insert(s.covered.clone());
                }
            }
        }

        loop {
            let Some(frame) = stack.last_mut() else {
                return Decision::Infeasible;
            };
            let (c, node) = (frame.column, frame.node);
            if node != c {
                s.deselect(node);
            }
            let next = s.links.down[node];
            if next != c {
                frame.node = next;
                s.select(next);
                if !budget.spend() {
                    return Decision::Indeterminate;
                }
                continue 'descend;
            }
            s.links.uncover(c);
            stack.pop();
            if failed.len() < MEMO_CAP {
                failed.insert(s.covered.clone());
            }
        }
    }

    let mut intervals: Vec<Interval> = stack.iter().map(|f| s.intervals[s.links.row[f.node]]).collect();
    for m in (d..=poset.n()).flat_map(|k| poset.rank(k).iter().copied()) {
        if !s.is_covered(m) {
            intervals.push(Interval::new(m, m));
        }
    }
    debug_assert!(s.column.len() == 1 << poset.n() && s.d == d);
    Decision::Found(IntervalPartition { intervals })
}

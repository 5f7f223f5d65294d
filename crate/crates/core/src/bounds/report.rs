use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{
    clique_partition_number, cliques, cochord_with_limit, delete_vertices, edgewise_dominant_set, induced_matching,
    is_cochordal, matching_numbers, min_two_collage, single_edge_collages, COCHORD_EXACT_MAX_EDGES,
};
use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::homology::{homological_invariants, Field, HomologicalInvariants};
use crate::ideal::{ideal_intersection, ideal_sum, SquarefreeIdeal};
use crate::sdepth::{
    stanley_depth_with, stanley_regularity_with, Interval, IntervalPartition, Mode, NodeBudget, Outcome,
    DEFAULT_NODE_BUDGET,
};
use crate::vertex_set::VertexSet;

/// How the edgewise domination condition is read; recorded in every report.
pub const EPSILON_READING: &str = "a vertex lying in an edge of F or in a trivial edge needs no dominated neighbour";

/// A value known to lie in `lower..=upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Range {
    pub lower: usize,
    pub upper: usize,
}

impl Range {
    pub fn exact(v: usize) -> Self {
        Range { lower: v, upper: v }
    }

    pub fn value(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }

    fn of(outcome: &Outcome) -> Self {
        let (lower, upper) = outcome.bounds();
        Range { lower, upper }
    }

    fn plus(self, other: Range) -> Range {
        Range { lower: self.lower + other.lower, upper: self.upper + other.upper }
    }

    fn min(self, other: Range) -> Range {
        Range { lower: self.lower.min(other.lower), upper: self.upper.min(other.upper) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// A theorem; a failure is a bug.
    Proved,
    /// A consistency identity between independent computations.
    Check,
    /// Reported only, never fails a run.
    Conjecture,
}

/// `lhs relation rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Some side is only known up to a range that straddles the other.
    Skipped,
    /// The inequality is outside its hypotheses; recorded for reference.
    Informative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub kind: Kind,
    pub lhs: Range,
    pub relation: Relation,
    pub rhs: Range,
    pub informative: bool,
    pub status: Status,
}

impl Verdict {
    fn new(name: &str, kind: Kind, lhs: Range, relation: Relation, rhs: Range) -> Self {
        let status = Self::evaluate(lhs, relation, rhs);
        Verdict { name: name.to_string(), kind, lhs, relation, rhs, informative: false, status }
    }

    fn informative(name: &str, kind: Kind, lhs: Range, relation: Relation, rhs: Range) -> Self {
        Verdict { informative: true, status: Status::Informative, ..Self::new(name, kind, lhs, relation, rhs) }
    }

    /// Pass when every value in the ranges satisfies the relation, fail when none does.
    pub fn evaluate(lhs: Range, relation: Relation, rhs: Range) -> Status {
        let (pass, fail) = match relation {
            Relation::Le => (lhs.upper <= rhs.lower, lhs.lower > rhs.upper),
            Relation::Ge => (lhs.lower >= rhs.upper, lhs.upper < rhs.lower),
            Relation::Eq => {
                (lhs.value().is_some() && lhs.value() == rhs.value(), lhs.upper < rhs.lower || rhs.upper < lhs.lower)
            }
        };
        if pass {
            Status::Pass
        } else if fail {
            Status::Fail
        } else {
            Status::Skipped
        }
    }

    /// Status recomputed from the recorded ranges.
    pub fn recheck(&self) -> Status {
        if self.informative {
            Status::Informative
        } else {
            Self::evaluate(self.lhs, self.relation, self.rhs)
        }
    }

    pub fn is_proved_failure(&self) -> bool {
        self.kind == Kind::Proved && self.status == Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundOptions {
    /// Node budget for each Stanley depth search.
    pub budget: u64,
    pub field: Field,
    pub witnesses: bool,
    /// Wall-clock timings make reports nondeterministic, so they are opt-in.
    pub timing: bool,
    /// Check `sreg(G) <= sreg(G \ A) + 1` over every clique `A` (one search per distinct subgraph).
    pub clique_deletion: bool,
    pub cochord_exact_max_edges: usize,
    /// Check `projdim(S/I) - 1 = reg(S/I^∨)` from a second Betti table.
    pub terai: bool,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            budget: DEFAULT_NODE_BUDGET,
            field: Field::Rationals,
            witnesses: false,
            timing: false,
            clique_deletion: true,
            cochord_exact_max_edges: COCHORD_EXACT_MAX_EDGES,
            terai: true,
        }
    }
}

/// Invariants of `S/I` and `I`; ideal-side values are absent for the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValues {
    pub sdepth_quotient: Range,
    pub sdepth_ideal: Option<Range>,
    pub sreg_quotient: Range,
    pub sreg_ideal: Option<Range>,
    pub depth: usize,
    pub depth_ideal: Option<usize>,
    pub projdim: usize,
    pub reg: usize,
    pub size: Option<usize>,
    pub cosize: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValues {
    pub epsilon: Option<usize>,
    /// `ε + n - |V(C^red)|`, with the `ε` term dropped for an edgeless clutter.
    pub ds: usize,
    pub size_plus_one: Option<usize>,
    pub lm: Option<usize>,
    pub cosize: Option<usize>,
    pub maximum_matching: usize,
    pub minimax_matching: usize,
    pub min_two_collage: Option<usize>,
    pub single_edge_collage: Option<usize>,
    pub cochordal: Option<bool>,
    pub cochord: Option<Range>,
    pub induced_matching: Option<usize>,
    pub clique_partition: Option<usize>,
    pub clique_deletion: Option<Range>,
}

/// Signed gaps of the two conjectured inequalities, when both sides are exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gaps {
    pub sdepth_minus_depth: Option<i64>,
    pub reg_minus_sreg: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub sdepth_quotient: Option<IntervalPartition>,
    pub sdepth_ideal: Option<IntervalPartition>,
    pub sreg_quotient: Option<IntervalPartition>,
    pub dominant_set: Option<Vec<Vec<usize>>>,
    pub two_collage: Option<Vec<Vec<usize>>>,
    pub cochord_cover: Option<Vec<Vec<Vec<usize>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub invariants_us: u64,
    pub bounds_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub id: Option<String>,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    pub epsilon_reading: String,
    pub invariants: InvariantValues,
    pub bounds: BoundValues,
    pub verdicts: Vec<Verdict>,
    pub gaps: Gaps,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witnesses: Option<Witnesses>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<Timing>,
}

impl BoundReport {
    pub fn count(&self, status: Status) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }

    pub fn proved_failures(&self) -> Vec<&Verdict> {
        self.verdicts.iter().filter(|v| v.is_proved_failure()).collect()
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    /// Every recorded status agrees with its recorded ranges.
    pub fn is_consistent(&self) -> bool {
        self.verdicts.iter().all(|v| v.recheck() == v.status)
    }
}

fn sreg_quotient(ideal: &SquarefreeIdeal, budget: u64) -> Result<Outcome> {
    if ideal.is_zero() {
        // S/0 = 1·K[x_1..x_n].
        let n = ideal.n();
        let witness = IntervalPartition { intervals: vec![Interval::new(VertexSet::EMPTY, VertexSet::full(n))] };
        return Ok(Outcome::Exact { value: 0, witness });
    }
    stanley_regularity_with(ideal, Mode::Quotient, &mut NodeBudget::new(budget))
}

fn sdepth_quotient(ideal: &SquarefreeIdeal, budget: u64) -> Result<Outcome> {
    if ideal.is_zero() {
        let n = ideal.n();
        let witness = IntervalPartition { intervals: vec![Interval::new(VertexSet::EMPTY, VertexSet::full(n))] };
        return Ok(Outcome::Exact { value: n, witness });
    }
    stanley_depth_with(ideal, Mode::Quotient, &mut NodeBudget::new(budget))
}

fn edge_lists(c: &Clutter, idx: &[usize]) -> Vec<Vec<usize>> {
    idx.iter().map(|&i| c.edges()[i].to_vec()).collect()
}

/// Invariants of one clutter's edge ideal, without bounds or verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub id: Option<String>,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    pub invariants: InvariantValues,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witnesses: Option<Witnesses>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_us: Option<u64>,
}

fn invariants_of(
    ideal: &SquarefreeIdeal,
    opts: &BoundOptions,
    witnesses: Option<&mut Witnesses>,
) -> Result<(InvariantValues, HomologicalInvariants)> {
    let edgeless = ideal.is_zero();
    let hom = homological_invariants(ideal, opts.field)?;
    let sdq = sdepth_quotient(ideal, opts.budget)?;
    let srq = sreg_quotient(ideal, opts.budget)?;
    let (sdi, sri, size, cosize) = if edgeless {
        (None, None, None, None)
    } else {
        let sdi = stanley_depth_with(ideal, Mode::Ideal, &mut NodeBudget::new(opts.budget))?;
        let sri = stanley_regularity_with(ideal, Mode::Ideal, &mut NodeBudget::new(opts.budget))?;
        (Some(sdi), Some(sri), Some(ideal.size()?), Some(ideal.cosize()?))
    };
    if let Some(w) = witnesses {
        w.sdepth_quotient = sdq.witness().cloned();
        w.sreg_quotient = srq.witness().cloned();
        w.sdepth_ideal = sdi.as_ref().and_then(|o| o.witness().cloned());
    }
    let invariants = InvariantValues {
        sdepth_quotient: Range::of(&sdq),
        sdepth_ideal: sdi.as_ref().map(Range::of),
        sreg_quotient: Range::of(&srq),
        sreg_ideal: sri.as_ref().map(Range::of),
        depth: hom.depth,
        // depth(S/I) < n for I != 0, so the depth lemma gives depth(I) = depth(S/I) + 1.
        depth_ideal: (!edgeless).then_some(hom.depth + 1),
        projdim: hom.projdim,
        reg: hom.reg,
        size,
        cosize,
    };
    Ok((invariants, hom))
}

/// Every invariant of one clutter's edge ideal.
pub fn invariant_report(c: &Clutter, id: Option<String>, opts: &BoundOptions) -> Result<InvariantReport> {
    let mut witnesses = opts.witnesses.then(Witnesses::default);
    let start = Instant::now();
    let (invariants, _) = invariants_of(&SquarefreeIdeal::edge_ideal(c), opts, witnesses.as_mut())?;
    let elapsed = start.elapsed().as_micros() as u64;
    Ok(InvariantReport {
        id,
        n: c.n(),
        edges: c.edge_lists(),
        invariants,
        witnesses,
        timing_us: opts.timing.then_some(elapsed),
    })
}

/// Every invariant, bound and verdict for one clutter.
pub fn bound_report(c: &Clutter, id: Option<String>, opts: &BoundOptions) -> Result<BoundReport> {
    let n = c.n();
    let ideal = SquarefreeIdeal::edge_ideal(c);
    let edgeless = c.is_edgeless();
    let mut witnesses = opts.witnesses.then(Witnesses::default);

    let start = Instant::now();
    let (invariants, hom) = invariants_of(&ideal, opts, witnesses.as_mut())?;
    let invariants_us = start.elapsed().as_micros() as u64;

    let start = Instant::now();
    let inv = &invariants;
    let depth = Range::exact(hom.depth);
    let sreg = inv.sreg_quotient;
    let mut verdicts = Vec::new();
    let matching = matching_numbers(c);
    let mut bounds = BoundValues {
        ds: n - c.covered_vertices().len(),
        maximum_matching: matching.maximum,
        minimax_matching: matching.minimax,
        ..BoundValues::default()
    };

    if edgeless {
        let ds = Range::exact(bounds.ds);
        verdicts.push(Verdict::informative("ds_depth", Kind::Proved, depth, Relation::Ge, ds));
        verdicts.push(Verdict::informative("ds_sdepth", Kind::Proved, inv.sdepth_quotient, Relation::Ge, ds));
    } else {
        let size = inv.size.expect("nonzero ideal");
        let cosize = inv.cosize.expect("nonzero ideal");
        let dominant = edgewise_dominant_set(c)?;
        bounds.epsilon = Some(dominant.len());
        bounds.ds += dominant.len();
        bounds.size_plus_one = Some(size + 1);
        bounds.lm = Some(super::lm_bound(c)?);
        bounds.cosize = Some(cosize);
        let collage = min_two_collage(c)?;
        bounds.min_two_collage = Some(collage.weight);
        bounds.single_edge_collage = single_edge_collages(c).iter().map(|&i| c.edges()[i].len() - 1).min();
        if let Some(w) = witnesses.as_mut() {
            w.dominant_set = Some(edge_lists(c, &dominant));
            w.two_collage = Some(edge_lists(c, &collage.edges));
        }

        let ds = Range::exact(bounds.ds);
        let size_r = Range::exact(size);
        let size1 = Range::exact(size + 1);
        verdicts.push(Verdict::new("size_depth_quotient", Kind::Proved, depth, Relation::Ge, size_r));
        let depth_ideal = Range::exact(inv.depth_ideal.expect("nonzero ideal"));
        verdicts.push(Verdict::new("size_depth_ideal", Kind::Proved, depth_ideal, Relation::Ge, size1));
        let sdepth_ideal = inv.sdepth_ideal.expect("nonzero ideal");
        verdicts.push(Verdict::new("size_sdepth_ideal", Kind::Proved, sdepth_ideal, Relation::Ge, size1));
        // With only trivial edges the domination index is 0 by convention, not by the definition.
        let ds_verdict = if c.has_nontrivial_edge() { Verdict::new } else { Verdict::informative };
        verdicts.push(ds_verdict("ds_depth", Kind::Proved, depth, Relation::Ge, ds));
        verdicts.push(ds_verdict("ds_sdepth", Kind::Proved, inv.sdepth_quotient, Relation::Ge, ds));
        verdicts.push(Verdict::new("cosize", Kind::Proved, sreg, Relation::Le, Range::exact(cosize)));
        let lm = Range::exact(bounds.lm.expect("set above"));
        verdicts.push(Verdict::new("free_vertex_matching", Kind::Proved, sreg, Relation::Le, lm));
        verdicts.push(Verdict::new("two_collage", Kind::Proved, sreg, Relation::Le, Range::exact(collage.weight)));
        if let Some(w) = bounds.single_edge_collage {
            verdicts.push(Verdict::new("single_edge_collage", Kind::Proved, sreg, Relation::Le, Range::exact(w)));
        }

        if c.is_graph() {
            graph_verdicts(c, opts, sreg, &mut bounds, &mut verdicts, witnesses.as_mut())?;
        }

        if opts.terai {
            let dual = homological_invariants(&ideal.alexander_dual()?, opts.field)?;
            let lhs = Range::exact(hom.projdim - 1);
            verdicts.push(Verdict::new("terai", Kind::Check, lhs, Relation::Eq, Range::exact(dual.reg)));
        }
    }

    // sreg(S/I) = 0 exactly for a prime generated by variables.
    if c.all_edges_trivial() {
        verdicts.push(Verdict::new("sreg_zero_iff_prime", Kind::Check, sreg, Relation::Eq, Range::exact(0)));
    } else {
        verdicts.push(Verdict::new("sreg_zero_iff_prime", Kind::Check, sreg, Relation::Ge, Range::exact(1)));
    }

    let conj = |name, lhs, rel, rhs| Verdict::new(name, Kind::Conjecture, lhs, rel, rhs);
    verdicts.push(conj("stanley_quotient", inv.sdepth_quotient, Relation::Ge, depth));
    if let (Some(sd), Some(d)) = (inv.sdepth_ideal, inv.depth_ideal) {
        verdicts.push(conj("stanley_ideal", sd, Relation::Ge, Range::exact(d)));
    }
    verdicts.push(conj("sreg_reg_quotient", sreg, Relation::Le, Range::exact(hom.reg)));

    let gaps = Gaps {
        sdepth_minus_depth: inv.sdepth_quotient.value().map(|s| s as i64 - hom.depth as i64),
        reg_minus_sreg: sreg.value().map(|s| hom.reg as i64 - s as i64),
    };
    let bounds_us = start.elapsed().as_micros() as u64;

    Ok(BoundReport {
        id,
        n,
        edges: c.edge_lists(),
        epsilon_reading: EPSILON_READING.to_string(),
        invariants,
        bounds,
        verdicts,
        gaps,
        witnesses,
        timing: opts.timing.then_some(Timing { invariants_us, bounds_us }),
    })
}

fn graph_verdicts(
    g: &Clutter,
    opts: &BoundOptions,
    sreg: Range,
    bounds: &mut BoundValues,
    verdicts: &mut Vec<Verdict>,
    witnesses: Option<&mut Witnesses>,
) -> Result<()> {
    let cochordal = is_cochordal(g)?;
    let cc = cochord_with_limit(g, opts.cochord_exact_max_edges)?;
    let cochord = if cc.exact || cochordal {
        Range::exact(if cochordal { 1 } else { cc.value })
    } else {
        // Not co-chordal, so at least two parts; the greedy cover bounds from above.
        Range { lower: 2.min(cc.value), upper: cc.value }
    };
    bounds.cochordal = Some(cochordal);
    bounds.cochord = Some(cochord);
    bounds.induced_matching = Some(induced_matching(g)?);
    if let Some(w) = witnesses {
        let parts = cc
            .cover
            .iter()
            .map(|&mask| (0..g.num_edges()).filter(|i| mask >> i & 1 == 1).map(|i| g.edges()[i].to_vec()).collect());
        w.cochord_cover = Some(parts.collect());
    }

    if cochordal {
        verdicts.push(Verdict::new("cochordal", Kind::Proved, sreg, Relation::Le, Range::exact(1)));
    }
    verdicts.push(Verdict::new("cochord", Kind::Proved, sreg, Relation::Le, cochord));
    let minimax = Range::exact(bounds.minimax_matching);
    verdicts.push(Verdict::new("minimax_matching", Kind::Proved, sreg, Relation::Le, minimax));
    verdicts.push(Verdict::new("cochord_minimax", Kind::Check, cochord, Relation::Le, minimax));

    if g.n() <= 14 {
        let parts = clique_partition_number(g)?;
        bounds.clique_partition = Some(parts);
        verdicts.push(Verdict::new("clique_partition", Kind::Proved, sreg, Relation::Le, Range::exact(parts)));
    }

    if opts.clique_deletion {
        let mut memo: HashMap<Vec<VertexSet>, Range> = HashMap::new();
        let mut best: Option<Range> = None;
        for a in cliques(g)? {
            let rest = delete_vertices(g, a)?;
            let key = rest.edges().to_vec();
            let r = match memo.get(&key) {
                Some(r) => *r,
                None => {
                    let r = Range::of(&sreg_quotient(&SquarefreeIdeal::edge_ideal(&rest), opts.budget)?);
                    memo.insert(key, r);
                    r
                }
            };
            let r = r.plus(Range::exact(1));
            best = Some(best.map_or(r, |b| b.min(r)));
        }
        if let Some(rhs) = best {
            bounds.clique_deletion = Some(rhs);
            verdicts.push(Verdict::new("clique_deletion", Kind::Proved, sreg, Relation::Le, rhs));
        }
    }
    Ok(())
}

/// Subadditivity of Stanley regularity over a pair of nonzero ideals:
/// `sreg(S/(I+J)) <= sreg(S/I) + sreg(S/J)` and `sreg(I ∩ J) <= sreg(I) + sreg(J)`.
pub fn subadditivity_verdicts(a: &SquarefreeIdeal, b: &SquarefreeIdeal, budget: u64) -> Result<Vec<Verdict>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let pair = [a.clone(), b.clone()];
    let sreg = |i: &SquarefreeIdeal, mode| -> Result<Range> {
        Ok(Range::of(&stanley_regularity_with(i, mode, &mut NodeBudget::new(budget))?))
    };
    let sum = ideal_sum(&pair)?;
    let meet = ideal_intersection(&pair)?;
    let lhs_q = sreg(&sum, Mode::Quotient)?;
    let rhs_q = sreg(a, Mode::Quotient)?.plus(sreg(b, Mode::Quotient)?);
    let lhs_i = sreg(&meet, Mode::Ideal)?;
    let rhs_i = sreg(a, Mode::Ideal)?.plus(sreg(b, Mode::Ideal)?);
    Ok(vec![
        Verdict::new("subadditive_sum", Kind::Proved, lhs_q, Relation::Le, rhs_q),
        Verdict::new("subadditive_intersection", Kind::Proved, lhs_i, Relation::Le, rhs_i),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(c: &Clutter) -> BoundReport {
        bound_report(c, None, &BoundOptions { witnesses: true, ..BoundOptions::default() }).unwrap()
    }

    #[test]
    fn two_disjoint_edges() {
        let r = report(&Clutter::disjoint_edges(2).unwrap());
        assert!(r.proved_failures().is_empty(), "{:?}", r.verdicts);
        assert_eq!(r.count(Status::Fail), 0);
        assert_eq!(r.invariants.sreg_quotient, Range::exact(1));
        assert_eq!(r.invariants.reg, 2);
        assert_eq!(r.gaps.reg_minus_sreg, Some(1));
        assert_eq!(r.bounds.induced_matching, Some(2));
        assert_eq!(r.bounds.ds, 2);
        assert!(r.is_consistent());
    }

    #[test]
    fn single_edge() {
        let r = report(&Clutter::disjoint_edges(1).unwrap());
        assert_eq!(r.invariants.sreg_quotient, Range::exact(1));
        assert_eq!(r.invariants.cosize, Some(1));
        assert_eq!(r.verdict("cosize").unwrap().status, Status::Pass);
    }

    #[test]
    fn trivial_edges_have_zero_regularity() {
        let c = Clutter::from_lists(3, &[&[1], &[2], &[3]]).unwrap();
        let r = report(&c);
        assert_eq!(r.invariants.sreg_quotient, Range::exact(0));
        assert_eq!(r.bounds.epsilon, Some(0));
        assert_eq!(r.verdict("sreg_zero_iff_prime").unwrap().status, Status::Pass);
        assert_eq!(r.verdict("ds_sdepth").unwrap().status, Status::Informative);
        assert!(r.proved_failures().is_empty());
        assert!(r.is_consistent());
    }

    #[test]
    fn edgeless_is_informative() {
        let r = report(&Clutter::edgeless(3).unwrap());
        assert_eq!(r.verdict("ds_depth").unwrap().status, Status::Informative);
        assert_eq!(r.bounds.ds, 3);
        assert_eq!(r.invariants.sdepth_quotient, Range::exact(3));
        assert!(r.is_consistent());
    }

    #[test]
    fn tiny_budget_skips() {
        let opts = BoundOptions { budget: 1, ..BoundOptions::default() };
        let r = bound_report(&Clutter::disjoint_edges(4).unwrap(), None, &opts).unwrap();
        assert!(r.count(Status::Skipped) > 0);
        assert!(r.proved_failures().is_empty());
    }

    #[test]
    fn verdict_evaluation() {
        let (a, b) = (Range { lower: 1, upper: 3 }, Range::exact(2));
        assert_eq!(Verdict::evaluate(a, Relation::Le, b), Status::Skipped);
        assert_eq!(Verdict::evaluate(Range::exact(1), Relation::Le, b), Status::Pass);
        assert_eq!(Verdict::evaluate(Range::exact(3), Relation::Le, b), Status::Fail);
        assert_eq!(Verdict::evaluate(Range::exact(3), Relation::Ge, a), Status::Pass);
        assert_eq!(Verdict::evaluate(b, Relation::Eq, Range::exact(2)), Status::Pass);
        assert_eq!(Verdict::evaluate(b, Relation::Eq, a), Status::Skipped);
    }

    #[test]
    fn subadditivity_on_a_pair() {
        let a = SquarefreeIdeal::from_lists(4, &[&[1, 2]]).unwrap();
        let b = SquarefreeIdeal::from_lists(4, &[&[3, 4]]).unwrap();
        let v = subadditivity_verdicts(&a, &b, DEFAULT_NODE_BUDGET).unwrap();
        assert!(v.iter().all(|v| v.status == Status::Pass), "{v:?}");
        // sreg(S/(x1x2, x3x4)) = 1 <= 1 + 1.
        assert_eq!(v[0].lhs, Range::exact(1));
    }
}

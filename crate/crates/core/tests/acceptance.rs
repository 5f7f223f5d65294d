//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use edgeideal::bounds::{bound_report, induced_matching, subadditivity_verdicts, BoundOptions, Kind, Status};
use edgeideal::harness::{
    all_clutters, cochordal_graphs, generate, random_ideal, seeded_rng, EdgeModel, GeneratorConfig,
};
use edgeideal::sdepth::{brute_oracle_sdepth, brute_oracle_sreg, stanley_regularity_direct, DEFAULT_NODE_BUDGET};
use edgeideal::{
    betti_table, homological_invariants, ideal_intersection, ideal_sum, split_decompose, stanley_depth,
    stanley_regularity, Clutter, Field, HomologicalInvariants, Mode, NodeBudget, SquarefreeIdeal, VertexSet,
};
use rand::Rng;

type Check = Result<String, String>;

struct Gate {
    failed: Vec<usize>,
}

impl Gate {
    fn run(&mut self, id: usize, title: &str, f: impl FnOnce() -> Check) {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {id:>2} {title}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                println!("FAIL {id:>2} {title}: {detail} [{secs:.1}s]");
                self.failed.push(id);
            }
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_sreg(ideal: &SquarefreeIdeal, mode: Mode) -> Result<usize, String> {
    stanley_regularity(ideal, mode)
        .map_err(|e| e.to_string())?
        .value()
        .ok_or_else(|| format!("budget exhausted on {:?}", ideal.gens()))
}

/// `sreg(S/I)`, with `S/0 = 1·K[x_1..x_n]` of regularity 0.
fn sreg_quotient(c: &Clutter) -> Result<usize, String> {
    if c.is_edgeless() {
        return Ok(0);
    }
    exact_sreg(&SquarefreeIdeal::edge_ideal(c), Mode::Quotient)
}

/// All labelled clutters on 1..=4 vertices.
fn small_clutters() -> Vec<Clutter> {
    (1..=4).flat_map(|n| all_clutters(n).expect("n <= 4")).collect()
}

/// Dual membership straight from the definition: `σ` meets every generator.
fn in_dual(ideal: &SquarefreeIdeal, sigma: VertexSet) -> bool {
    ideal.gens().iter().all(|g| g.intersects(sigma))
}

const GEN_PROBS: [f64; 4] = [0.04, 0.22, 0.12, 0.04];

fn random_ideals(seed: u64, count: usize, n_min: usize, n_max: usize) -> Vec<SquarefreeIdeal> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            random_ideal(&mut rng, n, &GEN_PROBS).expect("valid parameters")
        })
        .collect()
}

fn disjoint_edges() -> Check {
    let mut got = Vec::new();
    for m in 1..=4 {
        let s = sreg_quotient(&Clutter::disjoint_edges(m).unwrap())?;
        ensure(s == m.div_ceil(2), || format!("m = {m}: sreg = {s}, expected {}", m.div_ceil(2)))?;
        got.push(s);
    }
    Ok(format!("sreg for m = 1..4 is {got:?}"))
}

fn principal() -> Check {
    let mut got = Vec::new();
    for n in 3..=8 {
        let i = SquarefreeIdeal::new(n, vec![VertexSet::full(n)]).unwrap();
        let s = exact_sreg(&i, Mode::Quotient)?;
        ensure(s == n / 2, || format!("n = {n}: sreg = {s}, expected {}", n / 2))?;
        got.push(s);
    }
    Ok(format!("sreg for n = 3..8 is {got:?}"))
}

fn zero_regularity() -> Check {
    let all = small_clutters();
    let mut zeros = 0;
    for c in &all {
        let s = sreg_quotient(c)?;
        ensure((s == 0) == c.all_edges_trivial(), || format!("{c:?}: sreg = {s}"))?;
        zeros += usize::from(s == 0);
    }
    Ok(format!("{} clutters, {zeros} with sreg 0, all of them trivial-edged", all.len()))
}

fn duality_consistency() -> Check {
    let ideals = random_ideals(0x5eed_0004, 500, 2, 8);
    for i in &ideals {
        let dual = i.alexander_dual().map_err(|e| e.to_string())?;
        ensure(&dual.alexander_dual().map_err(|e| e.to_string())? == i, || format!("involution fails on {i:?}"))?;
        let table = i.membership_table();
        let dual_table = dual.membership_table();
        for bits in 0..1u32 << i.n() {
            let s = VertexSet::from_bits(bits);
            ensure(dual_table[bits as usize] == in_dual(i, s), || format!("dual membership of {s} for {i:?}"))?;
            ensure(table[bits as usize] == in_dual(&dual, s), || format!("double dual membership of {s}"))?;
        }
        for mode in [Mode::Quotient, Mode::Ideal] {
            let via_dual = exact_sreg(i, mode)?;
            let direct = stanley_regularity_direct(i, mode, &mut NodeBudget::default())
                .map_err(|e| e.to_string())?
                .value()
                .ok_or("budget exhausted")?;
            ensure(via_dual == direct, || format!("{i:?} {mode:?}: {via_dual} via the dual, {direct} directly"))?;
            if i.n() <= 5 {
                let brute = brute_oracle_sreg(i, mode).map_err(|e| e.to_string())?;
                ensure(brute == direct, || format!("{i:?} {mode:?}: oracle {brute}, engine {direct}"))?;
            }
        }
    }
    Ok(format!("{} ideals: involution, dual membership and both sreg routes agree", ideals.len()))
}

fn sum_intersection_duality() -> Check {
    let mut rng = seeded_rng(0x5eed_0005);
    let mut count = 0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let a = random_ideal(&mut rng, n, &GEN_PROBS).unwrap();
        let b = random_ideal(&mut rng, n, &GEN_PROBS).unwrap();
        let pair = [a.clone(), b.clone()];
        let dual_sum = ideal_sum(&pair).and_then(|s| s.alexander_dual()).map_err(|e| e.to_string())?;
        let dual_meet = ideal_intersection(&pair).and_then(|s| s.alexander_dual()).map_err(|e| e.to_string())?;
        let (da, db) = (a.alexander_dual().unwrap(), b.alexander_dual().unwrap());
        for bits in 0..1u32 << n {
            let s = VertexSet::from_bits(bits);
            ensure(dual_sum.contains(s) == (da.contains(s) && db.contains(s)), || {
                format!("sum dual at {s} for {a:?}, {b:?}")
            })?;
            ensure(dual_meet.contains(s) == (da.contains(s) || db.contains(s)), || {
                format!("meet dual at {s} for {a:?}, {b:?}")
            })?;
        }
        count += 1;
    }
    Ok(format!("{count} pairs, both identities on every support"))
}

fn proved_inequalities() -> Check {
    let opts = BoundOptions::default();
    let mixed = GeneratorConfig {
        seed: 0x5eed_0006,
        n_min: 2,
        n_max: 8,
        model: EdgeModel::Mixed { probs: GEN_PROBS.to_vec() },
    };
    let graphs = GeneratorConfig { seed: 0x5eed_0106, n_min: 2, n_max: 8, model: EdgeModel::Uniform { d: 2, p: 0.35 } };
    let mut instances = generate(&mixed, 200).map_err(|e| e.to_string())?;
    instances.extend(generate(&graphs, 100).map_err(|e| e.to_string())?);
    instances.extend(small_clutters());

    let mut fails: BTreeMap<String, usize> = BTreeMap::new();
    let mut passes: BTreeMap<String, usize> = BTreeMap::new();
    let mut skipped = 0;
    let reports: Vec<_> = {
        use rayon::prelude::*;
        instances.par_iter().map(|c| bound_report(c, None, &opts)).collect()
    };
    for (c, r) in instances.iter().zip(reports) {
        let r = r.map_err(|e| format!("{c:?}: {e}"))?;
        for v in r.verdicts.iter().filter(|v| v.kind == Kind::Proved) {
            match v.status {
                Status::Pass => *passes.entry(v.name.clone()).or_default() += 1,
                Status::Fail => *fails.entry(format!("{} on {:?}", v.name, c.edge_lists())).or_default() += 1,
                Status::Skipped => skipped += 1,
                Status::Informative => {}
            }
        }
    }

    let mut rng = seeded_rng(0x5eed_0206);
    let mut pairs = 0;
    for _ in 0..100 {
        let n = rng.gen_range(2..=7);
        let a = random_ideal(&mut rng, n, &GEN_PROBS).unwrap();
        let b = random_ideal(&mut rng, n, &GEN_PROBS).unwrap();
        for v in subadditivity_verdicts(&a, &b, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())? {
            match v.status {
                Status::Pass => *passes.entry(v.name.clone()).or_default() += 1,
                Status::Fail => {
                    *fails.entry(format!("{} on {:?} + {:?}", v.name, a.gens(), b.gens())).or_default() += 1
                }
                _ => skipped += 1,
            }
        }
        pairs += 1;
    }

    let mut cochordal = 0;
    for n in 2..=6 {
        for g in cochordal_graphs(n).map_err(|e| e.to_string())? {
            let s = sreg_quotient(&g)?;
            if s > 1 {
                *fails.entry(format!("co-chordal graph {:?} has sreg {s}", g.edge_lists())).or_default() += 1;
            }
            cochordal += 1;
        }
    }

    ensure(fails.is_empty(), || format!("failures: {fails:?}"))?;
    ensure(skipped == 0, || format!("{skipped} verdicts not decided exactly"))?;
    Ok(format!(
        "{} clutters, {pairs} pairs, {cochordal} co-chordal graphs; passes per inequality {passes:?}",
        instances.len()
    ))
}

fn oracle_equivalence() -> Check {
    let mut ideals: Vec<SquarefreeIdeal> =
        small_clutters().iter().filter(|c| !c.is_edgeless()).map(SquarefreeIdeal::edge_ideal).collect();
    let exhaustive = ideals.len();
    ideals.extend(random_ideals(0x5eed_0007, 100, 5, 5));
    for i in &ideals {
        for mode in [Mode::Quotient, Mode::Ideal] {
            let engine = stanley_depth(i, mode).map_err(|e| e.to_string())?.value().ok_or("budget exhausted")?;
            let brute = brute_oracle_sdepth(i, mode).map_err(|e| e.to_string())?;
            ensure(engine == brute, || format!("{i:?} {mode:?}: engine {engine}, oracle {brute}"))?;
        }
    }
    Ok(format!("{exhaustive} ideals on n <= 4 and 100 on n = 5, both modes"))
}

fn splitting() -> Check {
    let config = GeneratorConfig {
        seed: 0x5eed_0008,
        n_min: 3,
        n_max: 8,
        model: EdgeModel::Mixed { probs: GEN_PROBS.to_vec() },
    };
    let mut done = 0;
    let mut labelled = 0;
    for c in generate(&config, 400).map_err(|e| e.to_string())?.into_iter().filter(|c| !c.is_edgeless()).take(100) {
        let dual = SquarefreeIdeal::edge_ideal(&c).alexander_dual().map_err(|e| e.to_string())?;
        let members: Vec<VertexSet> = (0..1u32 << c.n())
            .map(VertexSet::from_bits)
            .filter(|s| in_dual(&SquarefreeIdeal::edge_ideal(&c), *s))
            .collect();
        for k in 1..=c.num_edges() {
            let split = split_decompose(&dual, k).map_err(|e| e.to_string())?;
            // The components of the dual of an edge ideal are the edges.
            ensure(split.components == c.edges(), || format!("components of the dual of {c:?}"))?;
            let y = split.components[k - 1];
            ensure(split.labels.len() == members.len(), || {
                format!("{} labels for {} monomials", split.labels.len(), members.len())
            })?;
            for (&(w, tau), &m) in split.labels.iter().zip(&members) {
                ensure(w == m, || format!("label order: {w} vs {m}"))?;
                ensure(tau != split.full_mask(), || format!("{w} labelled with every component"))?;
                let (u, v) = (w.intersection(y), w.difference(y));
                // u decides τ; v must then lie in every P_j'' with j ∈ τ.
                for (j, p) in split.components.iter().enumerate() {
                    let in_tau = tau >> j & 1 == 1;
                    ensure(in_tau == !u.intersects(p.intersection(y)), || format!("{w}: component {} label", j + 1))?;
                    ensure(!in_tau || v.intersects(p.difference(y)), || format!("{w}: v misses component {}", j + 1))?;
                }
            }
            ensure(split.factorization_failures.is_empty(), || {
                format!("pieces not products: {:?}", split.factorization_failures)
            })?;
            labelled += split.labels.len();
        }
        done += 1;
    }
    ensure(done == 100, || format!("only {done} instances generated"))?;
    Ok(format!("{done} duals, every splitter, {labelled} labels checked"))
}

fn terai() -> Check {
    let ideals = random_ideals(0x5eed_0009, 200, 2, 7);
    for i in &ideals {
        let dual = i.alexander_dual().map_err(|e| e.to_string())?;
        let left = HomologicalInvariants::from_table(&betti_table(i, Field::Rationals).map_err(|e| e.to_string())?);
        let right =
            HomologicalInvariants::from_table(&betti_table(&dual, Field::Rationals).map_err(|e| e.to_string())?);
        ensure(left.projdim == right.reg + 1, || {
            format!("{i:?}: projdim {} vs reg of dual {}", left.projdim, right.reg)
        })?;
    }
    Ok(format!("{} ideals", ideals.len()))
}

fn induced_matching_gap() -> Check {
    let g = Clutter::disjoint_edges(2).unwrap();
    let s = sreg_quotient(&g)?;
    let im = induced_matching(&g).map_err(|e| e.to_string())?;
    ensure(s == 1 && im == 2, || format!("sreg {s}, indmatch {im}"))?;
    Ok("sreg(S/I(2K2)) = 1 < indmatch(2K2) = 2".into())
}

fn conjecture_report() -> Check {
    let mut sdepth_gaps: BTreeMap<i64, usize> = BTreeMap::new();
    let mut sreg_gaps: BTreeMap<i64, usize> = BTreeMap::new();
    let mut violations = 0;
    let all = small_clutters();
    for c in &all {
        let ideal = SquarefreeIdeal::edge_ideal(c);
        let hom = homological_invariants(&ideal, Field::Rationals).map_err(|e| e.to_string())?;
        let sdepth = if c.is_edgeless() {
            c.n()
        } else {
            stanley_depth(&ideal, Mode::Quotient).map_err(|e| e.to_string())?.value().ok_or("budget exhausted")?
        };
        let sreg = sreg_quotient(c)?;
        let g1 = sdepth as i64 - hom.depth as i64;
        let g2 = hom.reg as i64 - sreg as i64;
        *sdepth_gaps.entry(g1).or_default() += 1;
        *sreg_gaps.entry(g2).or_default() += 1;
        violations += usize::from(g1 < 0) + usize::from(g2 < 0);
    }
    println!("     sdepth - depth histogram: {sdepth_gaps:?}");
    println!("     reg - sreg histogram:     {sreg_gaps:?}");
    ensure(violations == 0, || format!("{violations} violations flagged (evidence only)"))?;
    Ok(format!("{} clutters, no violations; evidence, not proof", all.len()))
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: Vec::new() };
    gate.run(1, "sreg of m disjoint edges is ceil(m/2)", disjoint_edges);
    gate.run(2, "sreg of a principal squarefree ideal is floor(n/2)", principal);
    gate.run(3, "sreg(S/I) = 0 exactly for trivial-edged clutters", zero_regularity);
    gate.run(4, "double dual and the two routes to Stanley regularity", duality_consistency);
    gate.run(5, "duals of sums and intersections", sum_intersection_duality);
    gate.run(6, "proved inequalities on random and exhaustive instances", proved_inequalities);
    gate.run(7, "Stanley depth matches the exhaustive oracle", oracle_equivalence);
    gate.run(8, "splitting labels every monomial exactly once", splitting);
    gate.run(9, "projdim(S/I) - 1 = reg(S/I^dual)", terai);
    gate.run(10, "sreg can be smaller than the induced matching number", induced_matching_gap);
    gate.run(11, "conjectured inequalities on every clutter with n <= 4", conjecture_report);
    if gate.failed.is_empty() {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {:?}", gate.failed);
        ExitCode::FAILURE
    }
}

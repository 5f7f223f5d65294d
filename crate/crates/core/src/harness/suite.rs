use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::instance::Instance;
use crate::bounds::{bound_report, BoundOptions, BoundReport, Kind, Range, Status};

/// Default ceiling on `n` for full suites.
pub const SUITE_DEFAULT_MAX_N: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub bounds: BoundOptions,
    pub max_n: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { bounds: BoundOptions::default(), max_n: SUITE_DEFAULT_MAX_N }
    }
}

/// One record of the report stream: a report, or the error that stopped this instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub id: Option<String>,
    pub minimalized: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub instances: usize,
    pub errors: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub informative: usize,
    pub proved_failures: usize,
    pub check_failures: usize,
    pub conjecture_violations: usize,
    /// Histogram of `sdepth(S/I) - depth(S/I)`.
    pub sdepth_depth_gaps: BTreeMap<i64, usize>,
    /// Histogram of `reg(S/I) - sreg(S/I)`.
    pub reg_sreg_gaps: BTreeMap<i64, usize>,
    /// Verdict name to number of proved failures.
    pub failing_verdicts: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    /// Nonzero exactly when a proved inequality failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.proved_failures > 0)
    }

    /// Skipped verdicts or per-instance errors.
    pub fn has_warnings(&self) -> bool {
        self.summary.skipped > 0 || self.summary.errors > 0
    }

    pub fn records_jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("entries serialize"));
            out.push('\n');
        }
        out
    }

    pub fn csv(&self) -> String {
        summary_csv(&self.entries)
    }
}

/// Reports for every instance, in input order.
pub fn verify_suite(instances: &[Instance], opts: &SuiteOptions) -> SuiteReport {
    let entries: Vec<SuiteEntry> = instances
        .par_iter()
        .enumerate()
        .map(|(index, inst)| {
            let id = inst.id.clone().or_else(|| Some(format!("#{index}")));
            let result = if inst.clutter.n() > opts.max_n {
                Err(format!("n = {} exceeds the suite ceiling {}", inst.clutter.n(), opts.max_n))
            } else {
                bound_report(&inst.clutter, id.clone(), &opts.bounds).map_err(|e| e.to_string())
            };
            let (report, error) = match result {
                Ok(r) => (Some(r), None),
                Err(e) => (None, Some(e)),
            };
            SuiteEntry { index, id, minimalized: inst.minimalized, report, error }
        })
        .collect();
    let summary = summarize(&entries);
    SuiteReport { entries, summary }
}

pub fn summarize(entries: &[SuiteEntry]) -> SuiteSummary {
    let mut s = SuiteSummary { instances: entries.len(), ..SuiteSummary::default() };
    for e in entries {
        let Some(r) = &e.report else {
            s.errors += 1;
            continue;
        };
        for v in &r.verdicts {
            match v.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
                Status::Informative => s.informative += 1,
            }
            if v.status == Status::Fail {
                match v.kind {
                    Kind::Proved => {
                        s.proved_failures += 1;
                        *s.failing_verdicts.entry(v.name.clone()).or_default() += 1;
                    }
                    Kind::Check => s.check_failures += 1,
                    Kind::Conjecture => s.conjecture_violations += 1,
                }
            }
        }
        if let Some(g) = r.gaps.sdepth_minus_depth {
            *s.sdepth_depth_gaps.entry(g).or_default() += 1;
        }
        if let Some(g) = r.gaps.reg_minus_sreg {
            *s.reg_sreg_gaps.entry(g).or_default() += 1;
        }
    }
    s
}

fn cell(r: Option<Range>) -> String {
    match r {
        None => String::new(),
        Some(r) if r.lower == r.upper => r.lower.to_string(),
        Some(r) => format!("{}..{}", r.lower, r.upper),
    }
}

fn num(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

const CSV_HEADER: [&str; 24] = [
    "index",
    "id",
    "n",
    "edges",
    "sdepth_quotient",
    "sdepth_ideal",
    "sreg_quotient",
    "sreg_ideal",
    "depth",
    "projdim",
    "reg",
    "size",
    "cosize",
    "ds_bound",
    "lm_bound",
    "two_collage",
    "cochord",
    "minimax_matching",
    "pass",
    "fail",
    "skipped",
    "informative",
    "proved_failures",
    "error",
];

/// One row per instance; ranges print as `lower..upper`.
pub fn summary_csv(entries: &[SuiteEntry]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for e in entries {
        let mut row = vec![e.index.to_string(), e.id.clone().unwrap_or_default()];
        match &e.report {
            Some(r) => {
                let i = &r.invariants;
                let b = &r.bounds;
                row.extend([
                    r.n.to_string(),
                    r.edges.len().to_string(),
                    cell(Some(i.sdepth_quotient)),
                    cell(i.sdepth_ideal),
                    cell(Some(i.sreg_quotient)),
                    cell(i.sreg_ideal),
                    i.depth.to_string(),
                    i.projdim.to_string(),
                    i.reg.to_string(),
                    num(i.size),
                    num(i.cosize),
                    b.ds.to_string(),
                    num(b.lm),
                    num(b.min_two_collage),
                    cell(b.cochord),
                    b.minimax_matching.to_string(),
                    r.count(Status::Pass).to_string(),
                    r.count(Status::Fail).to_string(),
                    r.count(Status::Skipped).to_string(),
                    r.count(Status::Informative).to_string(),
                    r.proved_failures().len().to_string(),
                    String::new(),
                ]);
            }
            None => {
                row.extend(std::iter::repeat_n(String::new(), CSV_HEADER.len() - 3));
                row.push(e.error.clone().unwrap_or_default());
            }
        }
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clutter::Clutter;

    fn instances(cs: Vec<Clutter>) -> Vec<Instance> {
        cs.into_iter().map(|c| Instance::new(None, c)).collect()
    }

    #[test]
    fn matchings_suite() {
        let insts = instances((1..=3).map(|m| Clutter::disjoint_edges(m).unwrap()).collect());
        let r = verify_suite(&insts, &SuiteOptions::default());
        assert_eq!(r.exit_code(), 0);
        let sreg: Vec<_> = r.entries.iter().map(|e| e.report.as_ref().unwrap().invariants.sreg_quotient).collect();
        assert_eq!(sreg, vec![Range::exact(1), Range::exact(1), Range::exact(2)]);
        assert_eq!(r.entries.iter().map(|e| e.index).collect::<Vec<_>>(), vec![0, 1, 2]);
        let csv = r.csv();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.starts_with("index,id,n,"));
    }

    #[test]
    fn errors_are_localized() {
        let insts = instances(vec![Clutter::disjoint_edges(1).unwrap(), Clutter::disjoint_edges(3).unwrap()]);
        let r = verify_suite(&insts, &SuiteOptions { max_n: 4, ..SuiteOptions::default() });
        assert_eq!(r.summary.errors, 1);
        assert!(r.entries[0].report.is_some());
        assert!(r.entries[1].error.as_deref().unwrap().contains("ceiling"));
        assert_eq!(r.exit_code(), 0);
        assert!(r.has_warnings());
    }
}

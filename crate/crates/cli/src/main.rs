mod args;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use rayon::prelude::*;
use serde::Serialize;

use args::{Cli, Command, CsvArgs, DualArgs, Emit, GenerateArgs, InstanceArgs, Output, ReportArgs, VerifyArgs};
use edgeideal::bounds::{invariant_report, InvariantReport};
use edgeideal::harness::{
    all_clutters, all_graphs, generate, parse_instances, serialize_instance, summarize, verify_suite, Instance,
    ParseOptions, SuiteOptions, SuiteReport,
};
use edgeideal::SquarefreeIdeal;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Invariants(a) => invariants(&a),
        Command::Bounds(a) => bounds(&a),
        Command::Dual(a) => dual(&a),
        Command::Verify(a) => verify(&a),
        Command::Generate(a) => generate_cmd(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &Path, strict: bool) -> Result<Vec<Instance>> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let instances = parse_instances(&text, ParseOptions { strict }).with_context(|| path.display().to_string())?;
    for inst in instances.iter().filter(|i| i.minimalized) {
        eprintln!("warning: {}: line {}: edges were not an antichain and were minimalized", path.display(), inst.line);
    }
    Ok(instances)
}

fn write_to(dest: Option<&PathBuf>, text: &str) -> Result<()> {
    match dest {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing standard output"),
    }
}

fn jsonl<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("records serialize"));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct InvariantEntry {
    index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<String>,
    minimalized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<InvariantReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn invariants(a: &InstanceArgs) -> Result<ExitCode> {
    let instances = read_input(&a.input, a.engine.strict)?;
    let opts = a.engine.bound_options();
    let max_n = args::single_max_n(&a.engine);
    let entries: Vec<InvariantEntry> = instances
        .par_iter()
        .enumerate()
        .map(|(index, inst)| {
            let id = inst.id.clone().or_else(|| Some(format!("#{index}")));
            let result = if inst.clutter.n() > max_n {
                Err(format!("n = {} exceeds the ceiling {max_n}", inst.clutter.n()))
            } else {
                invariant_report(&inst.clutter, id.clone(), &opts).map_err(|e| e.to_string())
            };
            let (report, error) = match result {
                Ok(r) => (Some(r), None),
                Err(e) => (None, Some(e)),
            };
            InvariantEntry { index, id, minimalized: inst.minimalized, report, error }
        })
        .collect();
    let errors = entries.iter().filter(|e| e.error.is_some()).count();
    write_to(a.out.output.as_ref(), &jsonl(&entries))?;
    if errors > 0 {
        eprintln!("warning: {errors} instance(s) failed");
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(report: &SuiteReport, csv: &CsvArgs, out: &Output) -> Result<()> {
    match csv.emit {
        Emit::Records => write_to(out.output.as_ref(), &report.records_jsonl()),
        Emit::Csv => write_to(csv.csv_output.as_ref().or(out.output.as_ref()), &report.csv()),
        Emit::Both => {
            let Some(path) = csv.csv_output.as_ref() else {
                bail!("--emit both needs --csv-output");
            };
            write_to(out.output.as_ref(), &report.records_jsonl())?;
            write_to(Some(path), &report.csv())
        }
    }
}

fn finish(report: &SuiteReport) -> ExitCode {
    let s = &report.summary;
    if s.skipped > 0 {
        eprintln!("warning: {} verdict(s) skipped because a search ran out of budget", s.skipped);
    }
    if s.errors > 0 {
        eprintln!("warning: {} instance(s) failed", s.errors);
    }
    for (name, count) in &s.failing_verdicts {
        eprintln!("FAIL: proved inequality `{name}` failed on {count} instance(s)");
    }
    ExitCode::from(report.exit_code() as u8)
}

fn bounds(a: &ReportArgs) -> Result<ExitCode> {
    let inst = &a.instances;
    let instances = read_input(&inst.input, inst.engine.strict)?;
    let opts = SuiteOptions { bounds: inst.engine.bound_options(), max_n: args::single_max_n(&inst.engine) };
    let report = verify_suite(&instances, &opts);
    emit(&report, &a.csv, &inst.out)?;
    Ok(finish(&report))
}

fn dual(a: &DualArgs) -> Result<ExitCode> {
    let instances = read_input(&a.input, a.strict)?;
    let mut out = String::new();
    for inst in &instances {
        let ideal = SquarefreeIdeal::edge_ideal(&inst.clutter);
        let dual = ideal.alexander_dual().with_context(|| format!("line {}", inst.line))?;
        out.push_str(&serialize_instance(&dual.to_clutter(), inst.id.clone()));
        out.push('\n');
    }
    write_to(a.out.output.as_ref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(a: &VerifyArgs) -> Result<ExitCode> {
    let mut instances = Vec::new();
    if let Some(n) = a.exhaustive {
        for k in 1..=n {
            for (i, c) in all_clutters(k)?.into_iter().enumerate() {
                instances.push(Instance::new(Some(format!("clutter{k}-{i}")), c));
            }
        }
    }
    if let Some(n) = a.graphs {
        for k in 1..=n {
            for (i, c) in all_graphs(k)?.into_iter().enumerate() {
                instances.push(Instance::new(Some(format!("graph{k}-{i}")), c));
            }
        }
    }
    if let Some(count) = a.random {
        for (i, c) in generate(&a.model.config(a.seed), count)?.into_iter().enumerate() {
            instances.push(Instance::new(Some(format!("random{}-{i}", a.seed)), c));
        }
    }
    for path in &a.inputs {
        instances.extend(read_input(path, a.engine.strict)?);
    }
    if instances.is_empty() {
        bail!("nothing to verify: give instance files, --exhaustive, --graphs or --random");
    }
    let opts = SuiteOptions { bounds: a.engine.bound_options(), max_n: a.max_n() };
    let report = verify_suite(&instances, &opts);
    emit(&report, &a.csv, &a.out)?;
    debug_assert_eq!(summarize(&report.entries), report.summary);
    let summary = serde_json::to_string_pretty(&report.summary).expect("summary serializes");
    eprintln!("{summary}");
    if let Some(p) = &a.summary {
        fs::write(p, summary + "\n").with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(finish(&report))
}

fn generate_cmd(a: &GenerateArgs) -> Result<ExitCode> {
    let clutters = generate(&a.model.config(a.seed), a.count)?;
    let mut out = String::new();
    for (i, c) in clutters.iter().enumerate() {
        out.push_str(&serialize_instance(c, Some(format!("random{}-{i}", a.seed))));
        out.push('\n');
    }
    write_to(a.out.output.as_ref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

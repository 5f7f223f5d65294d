//! Line-delimited JSON instance files: one object `{"n": .., "edges": [[..], ..]}` per line,
//! with optional `id` and `labels`. Blank lines and lines starting with `#` are skipped.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clutter::Clutter;
use crate::error::Error;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub id: Option<String>,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub id: Option<String>,
    pub labels: Option<Vec<String>>,
    pub clutter: Clutter,
    /// Some edge contained another and was dropped.
    pub minimalized: bool,
    /// 1-based source line, 0 when built in memory.
    pub line: usize,
}

impl Instance {
    pub fn new(id: Option<String>, clutter: Clutter) -> Self {
        Instance { id, labels: None, clutter, minimalized: false, line: 0 }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("line {line}: malformed record: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}, field `{field}`: {message}")]
    Field { line: usize, field: String, message: String },
    #[error("line {line}: {source}")]
    Clutter { line: usize, source: Error },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Reject non-antichains instead of minimalizing them.
    pub strict: bool,
}

fn field(line: usize, field: impl Into<String>, message: impl Into<String>) -> InstanceError {
    InstanceError::Field { line, field: field.into(), message: message.into() }
}

pub fn parse_record(text: &str, line: usize, opts: ParseOptions) -> Result<Instance, InstanceError> {
    let rec: InstanceRecord =
        serde_json::from_str(text).map_err(|e| InstanceError::Syntax { line, message: e.to_string() })?;
    if rec.n > MAX_VERTICES {
        return Err(field(line, "n", format!("{} exceeds the maximum of {MAX_VERTICES}", rec.n)));
    }
    if let Some(labels) = &rec.labels {
        if labels.len() != rec.n {
            return Err(field(line, "labels", format!("expected {} labels, found {}", rec.n, labels.len())));
        }
    }
    let mut edges = Vec::with_capacity(rec.edges.len());
    for (i, e) in rec.edges.iter().enumerate() {
        if e.is_empty() {
            return Err(field(line, format!("edges[{i}]"), "empty edge"));
        }
        if let Some(&v) = e.iter().find(|&&v| v == 0 || v > rec.n) {
            return Err(field(line, format!("edges[{i}]"), format!("vertex {v} outside 1..={}", rec.n)));
        }
        edges.push(VertexSet::from_vertices(e.iter().copied()));
    }
    let (clutter, minimalized) = if opts.strict {
        (Clutter::new(rec.n, edges).map_err(|source| InstanceError::Clutter { line, source })?, false)
    } else {
        Clutter::minimalized(rec.n, edges).map_err(|source| InstanceError::Clutter { line, source })?
    };
    Ok(Instance { id: rec.id, labels: rec.labels, clutter, minimalized, line })
}

pub fn parse_instances(text: &str, opts: ParseOptions) -> Result<Vec<Instance>, InstanceError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_record(l, i + 1, opts))
        .collect()
}

pub fn read_instances(path: &Path, opts: ParseOptions) -> Result<Vec<Instance>, InstanceError> {
    let text = fs::read_to_string(path)
        .map_err(|e| InstanceError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_instances(&text, opts)
}

pub fn to_record(clutter: &Clutter, id: Option<String>) -> InstanceRecord {
    InstanceRecord { id, n: clutter.n(), edges: clutter.edge_lists(), labels: None }
}

/// One line, edges in canonical order.
pub fn serialize_instance(clutter: &Clutter, id: Option<String>) -> String {
    serde_json::to_string(&to_record(clutter, id)).expect("records serialize")
}

pub fn write_instances(path: &Path, instances: &[Instance]) -> Result<(), InstanceError> {
    let mut out = String::new();
    for inst in instances {
        let mut rec = to_record(&inst.clutter, inst.id.clone());
        rec.labels = inst.labels.clone();
        out.push_str(&serde_json::to_string(&rec).expect("records serialize"));
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| InstanceError::Io { path: path.display().to_string(), message: e.to_string() })
}

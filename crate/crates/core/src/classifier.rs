//! Edge typing from node levels, agreement against external labels, and
//! per-class degree sequences.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::centrality::LevelAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeType {
    /// Endpoints on adjacent levels.
    #[serde(rename = "P2C")]
    P2c,
    /// Endpoints on the same level.
    #[serde(rename = "P2P")]
    P2p,
}

impl EdgeType {
    pub fn flipped(self) -> Self {
        match self {
            EdgeType::P2c => EdgeType::P2p,
            EdgeType::P2p => EdgeType::P2c,
        }
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeType::P2c => "P2C",
            EdgeType::P2p => "P2P",
        })
    }
}

impl FromStr for EdgeType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("P2C") {
            Ok(EdgeType::P2c)
        } else if s.eq_ignore_ascii_case("P2P") {
            Ok(EdgeType::P2p)
        } else {
            Err(format!("invalid edge type `{s}` (expected P2C or P2P)"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    /// One label per edge, aligned with [`Graph::edges`].
    pub labels: Vec<EdgeType>,
    pub p2c_count: usize,
    pub p2p_count: usize,
}

impl EdgeClassification {
    pub fn from_labels(labels: Vec<EdgeType>) -> Self {
        let p2p_count = labels.iter().filter(|&&t| t == EdgeType::P2p).count();
        EdgeClassification {
            p2c_count: labels.len() - p2p_count,
            p2p_count,
            labels,
        }
    }

    /// Writes `u<TAB>v<TAB>P2C|P2P` per edge, using external node labels.
    pub fn write_tsv<W: Write>(&self, g: &Graph, mut out: W) -> Result<()> {
        for (&(u, v), t) in g.edges().iter().zip(&self.labels) {
            writeln!(
                out,
                "{}\t{}\t{}",
                g.label(u as usize),
                g.label(v as usize),
                t
            )?;
        }
        Ok(())
    }
}

/// Labels each edge P2P when both endpoints share a level and P2C when the
/// levels differ by one.
pub fn classify_edges(g: &Graph, levels: &LevelAssignment) -> Result<EdgeClassification> {
    if levels.level.len() != g.node_count() {
        return Err(Error::LengthMismatch {
            what: "level assignment",
            expected: g.node_count(),
            found: levels.level.len(),
        });
    }
    let labels = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (lu, lv) = (levels.level[u as usize], levels.level[v as usize]);
            match lu.abs_diff(lv) {
                0 => Ok(EdgeType::P2p),
                1 => Ok(EdgeType::P2c),
                _ => Err(Error::LevelGap {
                    u: u as usize,
                    v: v as usize,
                    level_u: lu,
                    level_v: lv,
                }),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EdgeClassification::from_labels(labels))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthRow {
    pub u: String,
    pub v: String,
    pub edge_type: EdgeType,
}

/// Externally supplied edge labels (`u v P2C|P2P` per line).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TruthTable {
    pub rows: Vec<TruthRow>,
}

impl TruthTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 3 {
                return Err(Error::parse(
                    lineno + 1,
                    format!("expected `u v TYPE`, found {} tokens", tokens.len()),
                ));
            }
            let edge_type = tokens[2]
                .parse()
                .map_err(|msg: String| Error::parse(lineno + 1, msg))?;
            rows.push(TruthRow {
                u: tokens[0].to_owned(),
                v: tokens[1].to_owned(),
                edge_type,
            });
        }
        Ok(TruthTable { rows })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    /// Truth table reproducing `c` exactly, in graph edge order.
    pub fn from_classification(g: &Graph, c: &EdgeClassification) -> Self {
        let rows = g
            .edges()
            .iter()
            .zip(&c.labels)
            .map(|(&(u, v), &edge_type)| TruthRow {
                u: g.label(u as usize).to_owned(),
                v: g.label(v as usize).to_owned(),
                edge_type,
            })
            .collect();
        TruthTable { rows }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AgreementReport {
    pub matched: usize,
    /// Edges present in both the graph and the truth table.
    pub compared: usize,
    /// `matched / compared`, absent when nothing was compared.
    pub agreement_fraction: Option<f64>,
    /// Graph edges without a truth row.
    pub missing_in_truth: usize,
    /// Truth rows naming an unknown node or an edge absent from the graph.
    pub unmatched_truth_rows: usize,
    /// Repeated truth rows for an already labelled edge; the first row wins.
    pub duplicate_truth_rows: usize,
}

impl AgreementReport {
    /// Agreement as a percentage rounded to one decimal place.
    pub fn agreement_percent(&self) -> Option<f64> {
        self.agreement_fraction.map(|f| (f * 1000.0).round() / 10.0)
    }
}

/// Compares computed labels with `truth`, ignoring edge orientation.
pub fn agreement(g: &Graph, c: &EdgeClassification, truth: &TruthTable) -> Result<AgreementReport> {
    if c.labels.len() != g.edge_count() {
        return Err(Error::LengthMismatch {
            what: "edge classification",
            expected: g.edge_count(),
            found: c.labels.len(),
        });
    }
    let position: HashMap<(u32, u32), usize> =
        g.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut truth_for: Vec<Option<EdgeType>> = vec![None; g.edge_count()];
    let mut unmatched = 0;
    let mut duplicates = 0;
    for row in &truth.rows {
        let (Some(u), Some(v)) = (g.index_of(&row.u), g.index_of(&row.v)) else {
            unmatched += 1;
            continue;
        };
        let key = if u < v {
            (u as u32, v as u32)
        } else {
            (v as u32, u as u32)
        };
        match position.get(&key) {
            None => unmatched += 1,
            Some(&i) if truth_for[i].is_some() => duplicates += 1,
            Some(&i) => truth_for[i] = Some(row.edge_type),
        }
    }
    let mut matched = 0;
    let mut compared = 0;
    for (computed, t) in c.labels.iter().zip(&truth_for) {
        if let Some(t) = t {
            compared += 1;
            if t == computed {
                matched += 1;
            }
        }
    }
    Ok(AgreementReport {
        matched,
        compared,
        agreement_fraction: (compared > 0).then(|| matched as f64 / compared as f64),
        missing_in_truth: g.edge_count() - compared,
        unmatched_truth_rows: unmatched,
        duplicate_truth_rows: duplicates,
    })
}

/// Per-node total, p2c and p2p degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSplit {
    pub total: Vec<u32>,
    pub p2c: Vec<u32>,
    pub p2p: Vec<u32>,
}

pub fn split_degree_sequences(g: &Graph, c: &EdgeClassification) -> Result<DegreeSplit> {
    if c.labels.len() != g.edge_count() {
        return Err(Error::LengthMismatch {
            what: "edge classification",
            expected: g.edge_count(),
            found: c.labels.len(),
        });
    }
    let n = g.node_count();
    let mut p2c = vec![0u32; n];
    let mut p2p = vec![0u32; n];
    for (&(u, v), t) in g.edges().iter().zip(&c.labels) {
        let side = match t {
            EdgeType::P2c => &mut p2c,
            EdgeType::P2p => &mut p2p,
        };
        side[u as usize] += 1;
        side[v as usize] += 1;
    }
    Ok(DegreeSplit {
        total: g.degrees(),
        p2c,
        p2p,
    })
}

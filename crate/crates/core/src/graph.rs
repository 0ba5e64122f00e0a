//! Simple undirected graphs with dense node indices.
//!
//! A [`Graph`] is immutable once built. Nodes carry arbitrary string labels
//! and are numbered densely in first-appearance order. Edges are stored in
//! canonical `(u, v)` form with `u < v`, in insertion order, and adjacency is
//! kept in compressed sparse row layout with sorted neighbor lists.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// Counts of input records removed while normalizing to a simple graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NormalizationSummary {
    pub dropped_self_loops: usize,
    pub collapsed_duplicates: usize,
}

#[derive(Clone, Debug)]
pub struct Graph {
    edges: Vec<(u32, u32)>,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    labels: Vec<String>,
    index: HashMap<String, u32>,
    normalization: NormalizationSummary,
}

impl Graph {
    /// Builds a graph on `node_count` nodes labelled `"0"`, `"1"`, ...
    ///
    /// Self-loops and duplicate edges are dropped and counted.
    pub fn from_index_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut builder = GraphBuilder::with_nodes(node_count);
        for &(u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges (`u < v`) in insertion order.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.node_count())
            .map(|v| self.degree(v) as u32)
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count()
            && v < self.node_count()
            && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).map(|&i| i as usize)
    }

    pub fn normalization(&self) -> NormalizationSummary {
        self.normalization
    }

    /// Position of edge `{u, v}` in [`Graph::edges`], if present.
    ///
    /// Linear in the number of edges; callers doing many lookups should build
    /// their own map.
    pub fn edge_position(&self, u: usize, v: usize) -> Option<usize> {
        let key = canonical(u as u32, v as u32);
        self.edges.iter().position(|&e| e == key)
    }

    /// Writes the graph as edge-list text, one `label label` pair per line.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        for &(u, v) in &self.edges {
            writeln!(
                out,
                "{} {}",
                self.labels[u as usize], self.labels[v as usize]
            )?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("labels are valid UTF-8")
    }
}

#[inline]
fn canonical(u: u32, v: u32) -> (u32, u32) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Incremental constructor that normalizes input into a simple graph.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, u32>,
    edges: Vec<(u32, u32)>,
    seen: HashSet<(u32, u32)>,
    summary: NormalizationSummary,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts with `n` nodes labelled by their decimal index.
    pub fn with_nodes(n: usize) -> Self {
        let mut builder = Self::new();
        for i in 0..n {
            builder.node(&i.to_string());
        }
        builder
    }

    /// Returns the index for `label`, allocating the next dense index on first sight.
    pub fn node(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i as usize;
        }
        let i = self.labels.len() as u32;
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        i as usize
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Adds an edge between existing node indices. Returns `true` when a new
    /// edge was stored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.labels.len();
        for node in [u, v] {
            if node >= n {
                return Err(Error::NodeOutOfRange {
                    node,
                    node_count: n,
                });
            }
        }
        if u == v {
            self.summary.dropped_self_loops += 1;
            return Ok(false);
        }
        let key = canonical(u as u32, v as u32);
        if !self.seen.insert(key) {
            self.summary.collapsed_duplicates += 1;
            return Ok(false);
        }
        self.edges.push(key);
        Ok(true)
    }

    pub fn add_labeled_edge(&mut self, a: &str, b: &str) -> bool {
        let u = self.node(a);
        let v = self.node(b);
        self.add_edge(u, v)
            .expect("both endpoints were just interned")
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &self.edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut neighbors = vec![0u32; 2 * self.edges.len()];
        for &(u, v) in &self.edges {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph {
            edges: self.edges,
            offsets,
            neighbors,
            labels: self.labels,
            index: self.index,
            normalization: self.summary,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParseOptions {
    /// Lines starting with this prefix (after leading whitespace) are skipped.
    pub comment_prefix: String,
    /// Token separator. `None` splits on any run of whitespace.
    pub delimiter: Option<char>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            comment_prefix: "#".to_owned(),
            delimiter: None,
        }
    }
}

/// Parses edge-list text into a normalized [`Graph`].
///
/// Every non-blank, non-comment line must hold exactly two node labels.
/// Self-loops and repeated edges are dropped and counted in
/// [`Graph::normalization`].
pub fn parse_edge_list(text: &str, options: &ParseOptions) -> Result<Graph> {
    let mut builder = GraphBuilder::new();
    let mut records = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty()
            || (!options.comment_prefix.is_empty() && line.starts_with(&options.comment_prefix))
        {
            continue;
        }
        let tokens: Vec<&str> = match options.delimiter {
            None => line.split_whitespace().collect(),
            Some(d) => line.split(d).map(str::trim).collect(),
        };
        if tokens.len() != 2 || tokens.iter().any(|t| t.is_empty()) {
            return Err(Error::parse(
                lineno + 1,
                format!("expected 2 node labels, found {}", tokens.len()),
            ));
        }
        builder.add_labeled_edge(tokens[0], tokens[1]);
        records += 1;
    }
    if records == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(builder.build())
}

pub fn read_edge_list(path: impl AsRef<Path>, options: &ParseOptions) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    parse_edge_list(&text, options)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    /// Component id per node. Ids are numbered by smallest member node.
    pub component_id: Vec<usize>,
    pub component_sizes: Vec<usize>,
    /// Largest component; ties go to the smallest id.
    pub lcc_index: usize,
}

impl ConnectivityReport {
    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sizes.len() <= 1
    }
}

pub fn connected_components(g: &Graph) -> ConnectivityReport {
    const UNSET: usize = usize::MAX;
    let n = g.node_count();
    let mut component_id = vec![UNSET; n];
    let mut component_sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if component_id[start] != UNSET {
            continue;
        }
        let id = component_sizes.len();
        component_id[start] = id;
        queue.push_back(start);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in g.neighbors(u) {
                let w = w as usize;
                if component_id[w] == UNSET {
                    component_id[w] = id;
                    queue.push_back(w);
                }
            }
        }
        component_sizes.push(size);
    }
    let mut lcc_index = 0;
    for (i, &s) in component_sizes.iter().enumerate() {
        if s > component_sizes[lcc_index] {
            lcc_index = i;
        }
    }
    ConnectivityReport {
        component_id,
        component_sizes,
        lcc_index,
    }
}

/// Induced subgraph on the largest component, reindexed densely in the
/// original index order. Labels and edge order are preserved.
pub fn largest_component(g: &Graph, report: &ConnectivityReport) -> Graph {
    if report.is_connected() {
        return g.clone();
    }
    let keep = report.lcc_index;
    let mut builder = GraphBuilder::new();
    let mut remap = vec![u32::MAX; g.node_count()];
    for (v, slot) in remap.iter_mut().enumerate() {
        if report.component_id[v] == keep {
            *slot = builder.node(g.label(v)) as u32;
        }
    }
    for &(u, v) in g.edges() {
        let (a, b) = (remap[u as usize], remap[v as usize]);
        if a != u32::MAX {
            builder
                .add_edge(a as usize, b as usize)
                .expect("endpoints in the same component");
        }
    }
    let mut sub = builder.build();
    sub.normalization = g.normalization;
    sub
}

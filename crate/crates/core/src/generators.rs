//! Seeded Barabási–Albert (BA) and extended BA (EBA) generators.
//!
//! BA grows from a path on `m0` nodes. Each step adds one node joined to
//! `min(m, nodes so far)` distinct existing nodes picked with probability
//! proportional to degree, by uniform draws from the list of edge endpoints.
//!
//! EBA starts from `m0` isolated nodes and at each step performs one of
//! three events, using the kernel `(k_i + 1) / sum_j (k_j + 1)`:
//!
//! * with probability `p`, `m` new links from uniformly chosen nodes to
//!   kernel-chosen nodes;
//! * with probability `q`, `m` rewirings: a uniformly chosen node with at
//!   least one edge drops a uniformly chosen incident edge and reconnects to
//!   a kernel-chosen node;
//! * otherwise a new node with `m` links to kernel-chosen nodes.
//!
//! Self-loops and duplicate edges are rejected and redrawn up to
//! [`MAX_RETRIES`] times, after which the draw is skipped and counted.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{RngStream, RNG_ALGORITHM};

pub const MAX_RETRIES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BaConfig {
    pub m0: usize,
    pub m: usize,
    pub t: usize,
    pub seed: u64,
}

impl BaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.m0 < 2 {
            return Err(Error::InvalidConfig(format!(
                "m0 must be >= 2, got {}",
                self.m0
            )));
        }
        if self.m < 1 {
            return Err(Error::InvalidConfig("m must be >= 1".into()));
        }
        if self.t < 1 {
            return Err(Error::InvalidConfig("t must be >= 1".into()));
        }
        if self.m0 + self.t > u32::MAX as usize {
            return Err(Error::InvalidConfig("too many nodes".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EbaConfig {
    pub p: f64,
    pub q: f64,
    pub m: usize,
    pub m0: usize,
    pub t: usize,
    pub seed: u64,
}

impl EbaConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.p.is_finite() && self.q.is_finite()) || self.p < 0.0 || self.q < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "p and q must be nonnegative, got p={} q={}",
                self.p, self.q
            )));
        }
        if self.p + self.q >= 1.0 {
            return Err(Error::InvalidConfig(format!(
                "p + q must be < 1, got {}",
                self.p + self.q
            )));
        }
        if self.m0 < 2 {
            return Err(Error::InvalidConfig(format!(
                "m0 must be >= 2, got {}",
                self.m0
            )));
        }
        if self.m < 1 {
            return Err(Error::InvalidConfig("m must be >= 1".into()));
        }
        if self.t < 1 {
            return Err(Error::InvalidConfig("t must be >= 1".into()));
        }
        if self.m0 + self.t > u32::MAX as usize {
            return Err(Error::InvalidConfig("too many nodes".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelConfig {
    Ba(BaConfig),
    Eba(EbaConfig),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EbaEvents {
    pub add_links: usize,
    pub rewires: usize,
    pub new_nodes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenerationReport {
    pub config: ModelConfig,
    pub rng: &'static str,
    pub nodes: usize,
    pub edges: usize,
    pub isolated_nodes: usize,
    /// Draws abandoned after [`MAX_RETRIES`] rejections.
    pub skipped_draws: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub events: Option<EbaEvents>,
}

impl GenerationReport {
    /// Pretty JSON with floats rounded to six significant digits.
    pub fn to_json(&self) -> Result<String> {
        let mut value = serde_json::to_value(self)?;
        crate::report::round_floats(&mut value);
        let mut text = serde_json::to_string_pretty(&value)?;
        text.push('\n');
        Ok(text)
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub report: GenerationReport,
}

/// Degree-proportional sampler over a growing list of edge endpoints.
#[derive(Clone, Debug, Default)]
pub struct PreferentialPool {
    endpoints: Vec<u32>,
}

impl PreferentialPool {
    pub fn from_graph(g: &Graph) -> Self {
        let mut pool = Self::default();
        for &(u, v) in g.edges() {
            pool.push_edge(u as usize, v as usize);
        }
        pool
    }

    pub fn push_edge(&mut self, u: usize, v: usize) {
        self.endpoints.push(u as u32);
        self.endpoints.push(v as u32);
    }

    pub fn len(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endpoints.is_empty()
    }

    /// Node drawn with probability `degree / (2 * edges)`.
    pub fn draw(&self, rng: &mut RngStream) -> usize {
        self.endpoints[rng.index(self.endpoints.len())] as usize
    }
}

pub fn generate_ba(cfg: &BaConfig) -> Result<Generated> {
    cfg.validate()?;
    let mut rng = RngStream::new(cfg.seed);
    let n = cfg.m0 + cfg.t;
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(cfg.m0 + cfg.m * cfg.t);
    let mut pool = PreferentialPool::default();
    for i in 1..cfg.m0 {
        edges.push((i - 1, i));
        pool.push_edge(i - 1, i);
    }
    let mut skipped = 0;
    let mut chosen = Vec::with_capacity(cfg.m);
    for new in cfg.m0..n {
        chosen.clear();
        let want = cfg.m.min(new);
        for _ in 0..want {
            match (0..MAX_RETRIES)
                .map(|_| pool.draw(&mut rng))
                .find(|c| !chosen.contains(c))
            {
                Some(c) => chosen.push(c),
                None => skipped += 1,
            }
        }
        for &c in &chosen {
            edges.push((new, c));
            pool.push_edge(new, c);
        }
    }
    let graph = Graph::from_index_edges(n, &edges)?;
    debug_assert_eq!(graph.edge_count(), edges.len());
    let report = GenerationReport {
        config: ModelConfig::Ba(*cfg),
        rng: RNG_ALGORITHM,
        nodes: graph.node_count(),
        edges: graph.edge_count(),
        isolated_nodes: count_isolated(&graph),
        skipped_draws: skipped,
        events: None,
    };
    Ok(Generated { graph, report })
}

fn count_isolated(g: &Graph) -> usize {
    (0..g.node_count()).filter(|&v| g.degree(v) == 0).count()
}

const INACTIVE: u32 = u32::MAX;

/// Mutable EBA state supporting O(1) kernel draws and edge removal.
struct EbaState {
    adj: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
    edge_pos: HashMap<(u32, u32), usize>,
    /// Nodes with degree >= 1, and each node's slot in that list.
    active: Vec<u32>,
    active_pos: Vec<u32>,
}

#[inline]
fn key(u: usize, v: usize) -> (u32, u32) {
    if u < v {
        (u as u32, v as u32)
    } else {
        (v as u32, u as u32)
    }
}

impl EbaState {
    fn new(n: usize) -> Self {
        EbaState {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            edge_pos: HashMap::new(),
            active: Vec::new(),
            active_pos: vec![INACTIVE; n],
        }
    }

    fn node_count(&self) -> usize {
        self.adj.len()
    }

    fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.active_pos.push(INACTIVE);
        self.adj.len() - 1
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_pos.contains_key(&key(u, v))
    }

    /// Draws node `i` with probability `(k_i + 1) / (2E + N)`.
    fn draw_kernel(&self, rng: &mut RngStream) -> usize {
        let stubs = 2 * self.edges.len();
        let r = rng.index(stubs + self.node_count());
        if r < stubs {
            let (u, v) = self.edges[r / 2];
            if r.is_multiple_of(2) {
                u as usize
            } else {
                v as usize
            }
        } else {
            r - stubs
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        let k = key(u, v);
        debug_assert!(u != v && !self.edge_pos.contains_key(&k));
        self.edge_pos.insert(k, self.edges.len());
        self.edges.push(k);
        for (a, b) in [(u, v), (v, u)] {
            self.adj[a].push(b as u32);
            if self.adj[a].len() == 1 {
                self.active_pos[a] = self.active.len() as u32;
                self.active.push(a as u32);
            }
        }
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        let k = key(u, v);
        let i = self.edge_pos.remove(&k).expect("edge exists");
        self.edges.swap_remove(i);
        if i < self.edges.len() {
            self.edge_pos.insert(self.edges[i], i);
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adj[a];
            let at = list
                .iter()
                .position(|&x| x as usize == b)
                .expect("adjacent");
            list.swap_remove(at);
            if list.is_empty() {
                let slot = self.active_pos[a] as usize;
                self.active.swap_remove(slot);
                if slot < self.active.len() {
                    self.active_pos[self.active[slot] as usize] = slot as u32;
                }
                self.active_pos[a] = INACTIVE;
            }
        }
    }
}

pub fn generate_eba(cfg: &EbaConfig) -> Result<Generated> {
    cfg.validate()?;
    let mut rng = RngStream::new(cfg.seed);
    let mut state = EbaState::new(cfg.m0);
    let mut events = EbaEvents::default();
    let mut skipped = 0;
    let mut targets = Vec::with_capacity(cfg.m);

    for _ in 0..cfg.t {
        let before = state.edges.len();
        let u = rng.unit();
        if u < cfg.p {
            events.add_links += 1;
            for _ in 0..cfg.m {
                let n = state.node_count();
                let start = rng.index(n);
                let end = (0..MAX_RETRIES)
                    .map(|_| state.draw_kernel(&mut rng))
                    .find(|&j| j != start && !state.has_edge(start, j));
                match end {
                    Some(j) => state.add_edge(start, j),
                    None => skipped += 1,
                }
            }
            debug_assert!(state.edges.len() >= before);
        } else if u < cfg.p + cfg.q {
            events.rewires += 1;
            for _ in 0..cfg.m {
                if state.active.is_empty() {
                    skipped += 1;
                    continue;
                }
                let i = state.active[rng.index(state.active.len())] as usize;
                let j = state.adj[i][rng.index(state.adj[i].len())] as usize;
                let replacement = (0..MAX_RETRIES)
                    .map(|_| state.draw_kernel(&mut rng))
                    .find(|&jj| jj != i && (jj == j || !state.has_edge(i, jj)));
                match replacement {
                    Some(jj) if jj != j => {
                        state.remove_edge(i, j);
                        state.add_edge(i, jj);
                    }
                    Some(_) => {}
                    None => skipped += 1,
                }
            }
            debug_assert_eq!(state.edges.len(), before);
        } else {
            events.new_nodes += 1;
            targets.clear();
            let want = cfg.m.min(state.node_count());
            for _ in 0..want {
                match (0..MAX_RETRIES)
                    .map(|_| state.draw_kernel(&mut rng))
                    .find(|c| !targets.contains(c))
                {
                    Some(c) => targets.push(c),
                    None => skipped += 1,
                }
            }
            let new = state.add_node();
            for &c in &targets {
                state.add_edge(new, c);
            }
            debug_assert!(state.edges.len() >= before);
        }
    }

    let n = state.node_count();
    let edges: Vec<(usize, usize)> = state
        .edges
        .iter()
        .map(|&(u, v)| (u as usize, v as usize))
        .collect();
    let graph = Graph::from_index_edges(n, &edges)?;
    let report = GenerationReport {
        config: ModelConfig::Eba(*cfg),
        rng: RNG_ALGORITHM,
        nodes: n,
        edges: graph.edge_count(),
        isolated_nodes: n - state.active.len(),
        skipped_draws: skipped,
        events: Some(events),
    };
    Ok(Generated { graph, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_components;

    fn ba(m0: usize, m: usize, t: usize, seed: u64) -> Generated {
        generate_ba(&BaConfig { m0, m, t, seed }).unwrap()
    }

    fn eba(p: f64, q: f64, m: usize, t: usize, seed: u64) -> Generated {
        generate_eba(&EbaConfig {
            p,
            q,
            m,
            m0: 2,
            t,
            seed,
        })
        .unwrap()
    }

    #[test]
    fn ba_with_one_edge_per_step_is_a_tree() {
        for seed in 0..5 {
            let g = ba(2, 1, 3, seed).graph;
            assert_eq!((g.node_count(), g.edge_count()), (5, 4));
            assert!(connected_components(&g).is_connected());
        }
    }

    #[test]
    fn ba_caps_early_steps() {
        // m0=2, m=3: the first node can only attach to 2 nodes.
        let out = ba(2, 3, 4, 1);
        assert_eq!(out.graph.edge_count(), 1 + 2 + 3 + 3 + 3);
        assert_eq!(out.report.skipped_draws, 0);
    }

    #[test]
    fn ba_is_deterministic_per_seed() {
        let a = ba(3, 2, 300, 11).graph.to_edge_list_string();
        let b = ba(3, 2, 300, 11).graph.to_edge_list_string();
        let c = ba(3, 2, 300, 12).graph.to_edge_list_string();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn ba_rejects_bad_config() {
        for cfg in [
            BaConfig {
                m0: 1,
                m: 1,
                t: 1,
                seed: 0,
            },
            BaConfig {
                m0: 2,
                m: 0,
                t: 1,
                seed: 0,
            },
            BaConfig {
                m0: 2,
                m: 1,
                t: 0,
                seed: 0,
            },
        ] {
            assert!(matches!(generate_ba(&cfg), Err(Error::InvalidConfig(_))));
        }
    }

    #[test]
    fn eba_degenerate_parameters_grow_like_ba() {
        let out = eba(0.0, 0.0, 1, 500, 5);
        assert_eq!(out.graph.node_count(), 502);
        assert_eq!(out.graph.edge_count(), 500);
        assert_eq!(out.report.events.unwrap().new_nodes, 500);
    }

    #[test]
    fn eba_rejects_p_plus_q_at_least_one() {
        let bad = EbaConfig {
            p: 0.5,
            q: 0.5,
            m: 1,
            m0: 2,
            t: 10,
            seed: 0,
        };
        assert!(matches!(generate_eba(&bad), Err(Error::InvalidConfig(_))));
        let neg = EbaConfig { p: -0.1, ..bad };
        assert!(generate_eba(&neg).is_err());
    }

    #[test]
    fn eba_state_bookkeeping() {
        let out = eba(0.35, 0.5, 2, 5000, 3);
        let g = &out.graph;
        let r = &out.report;
        assert_eq!(r.nodes, g.node_count());
        assert_eq!(r.edges, g.edge_count());
        // No edge was collapsed while building the Graph.
        assert_eq!(g.normalization().collapsed_duplicates, 0);
        assert_eq!(g.normalization().dropped_self_loops, 0);
        let isolated = (0..g.node_count()).filter(|&v| g.degree(v) == 0).count();
        assert_eq!(r.isolated_nodes, isolated);
        let ev = r.events.unwrap();
        assert_eq!(ev.add_links + ev.rewires + ev.new_nodes, 5000);
        assert_eq!(g.node_count(), 2 + ev.new_nodes);
    }

    #[test]
    fn kernel_weights_degree_plus_one() {
        let mut s = EbaState::new(4);
        s.add_edge(0, 1);
        s.add_edge(0, 2);
        // Weights 3, 2, 2, 1 over 2E + N = 8.
        let mut rng = RngStream::new(17);
        let draws = 400_000;
        let mut counts = [0usize; 4];
        for _ in 0..draws {
            counts[s.draw_kernel(&mut rng)] += 1;
        }
        for (v, w) in [3.0, 2.0, 2.0, 1.0].into_iter().enumerate() {
            let p = w / 8.0;
            let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
            let dev = (counts[v] as f64 - draws as f64 * p).abs();
            assert!(dev < 5.0 * sigma, "node {v}: {} draws", counts[v]);
        }
    }

    #[test]
    fn eba_state_edge_removal_keeps_indices_consistent() {
        let mut s = EbaState::new(5);
        s.add_edge(0, 1);
        s.add_edge(1, 2);
        s.add_edge(3, 4);
        s.remove_edge(0, 1);
        assert_eq!(s.edges.len(), 2);
        for (i, e) in s.edges.iter().enumerate() {
            assert_eq!(s.edge_pos[e], i);
        }
        assert_eq!(s.active_pos[0], INACTIVE);
        assert_eq!(s.active.len(), 4);
        for (slot, &v) in s.active.iter().enumerate() {
            assert_eq!(s.active_pos[v as usize] as usize, slot);
        }
        s.remove_edge(2, 1);
        assert_eq!(s.active.len(), 2);
        assert!(!s.has_edge(1, 2));
    }
}

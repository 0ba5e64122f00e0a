//! Exact eccentricities, graph center and level assignment.
//!
//! Two eccentricity routes are provided with the same exact output:
//!
//! * [`EccAlgorithm::Naive`] runs one BFS per node, in parallel over sources.
//! * [`EccAlgorithm::Pruned`] keeps per-node lower and upper eccentricity
//!   bounds. Every BFS from a root `r` with eccentricity `e(r)` tightens them
//!   for each unresolved node `w` at distance `d`:
//!   `max(d, e(r) - d) <= e(w) <= e(r) + d`. Nodes whose bounds meet are
//!   resolved without their own BFS. Roots alternate between the unresolved
//!   node with the largest upper bound and the one with the smallest lower
//!   bound. Degree-one nodes never need a BFS: their eccentricity is one more
//!   than their neighbor's. When single roots stop resolving many nodes per
//!   sweep, the remaining ones are measured exactly with a bit-parallel
//!   multi-source BFS, 256 sources per pass.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const UNSEEN: u32 = u32::MAX;

/// Reusable BFS scratch space.
pub(crate) struct Bfs {
    dist: Vec<u32>,
    queue: Vec<u32>,
}

impl Bfs {
    pub(crate) fn new(n: usize) -> Self {
        Bfs {
            dist: vec![UNSEEN; n],
            queue: Vec::with_capacity(n),
        }
    }

    /// Runs a BFS from all `sources` at once. Returns the largest distance
    /// reached and the number of reached nodes.
    pub(crate) fn run(&mut self, g: &Graph, sources: &[usize]) -> (u32, usize) {
        self.dist.fill(UNSEEN);
        self.queue.clear();
        for &s in sources {
            if self.dist[s] == UNSEEN {
                self.dist[s] = 0;
                self.queue.push(s as u32);
            }
        }
        let mut head = 0;
        let mut far = 0;
        while head < self.queue.len() {
            let u = self.queue[head] as usize;
            head += 1;
            let next = self.dist[u] + 1;
            for &w in g.neighbors(u) {
                let slot = &mut self.dist[w as usize];
                if *slot == UNSEEN {
                    *slot = next;
                    far = next;
                    self.queue.push(w);
                }
            }
        }
        (far, self.queue.len())
    }

    pub(crate) fn dist(&self) -> &[u32] {
        &self.dist
    }

    fn distances(&self) -> Vec<Option<u32>> {
        self.dist
            .iter()
            .map(|&d| if d == UNSEEN { None } else { Some(d) })
            .collect()
    }

    fn first_unreached(&self) -> Option<usize> {
        self.dist.iter().position(|&d| d == UNSEEN)
    }
}

/// Hop distances from `source`; `None` marks unreachable nodes.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Option<u32>>> {
    check_node(g, source)?;
    let mut bfs = Bfs::new(g.node_count());
    bfs.run(g, &[source]);
    Ok(bfs.distances())
}

/// Hop distances to the nearest node of `sources`.
pub fn multi_source_distances(g: &Graph, sources: &[usize]) -> Result<Vec<Option<u32>>> {
    for &s in sources {
        check_node(g, s)?;
    }
    let mut bfs = Bfs::new(g.node_count());
    bfs.run(g, sources);
    Ok(bfs.distances())
}

fn check_node(g: &Graph, v: usize) -> Result<()> {
    if v >= g.node_count() {
        return Err(Error::NodeOutOfRange {
            node: v,
            node_count: g.node_count(),
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EccAlgorithm {
    Naive,
    #[default]
    Pruned,
}

impl fmt::Display for EccAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EccAlgorithm::Naive => "naive",
            EccAlgorithm::Pruned => "pruned",
        })
    }
}

impl FromStr for EccAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "naive" => Ok(EccAlgorithm::Naive),
            "pruned" => Ok(EccAlgorithm::Pruned),
            other => Err(format!(
                "unknown eccentricity algorithm `{other}` (naive|pruned)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub eccentricity: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// Nodes with eccentricity equal to the radius, ascending.
    pub center: Vec<usize>,
}

impl EccentricityProfile {
    pub fn from_eccentricities(eccentricity: Vec<u32>) -> Result<Self> {
        let radius = *eccentricity.iter().min().ok_or(Error::EmptyGraph)?;
        let diameter = *eccentricity.iter().max().ok_or(Error::EmptyGraph)?;
        let center = eccentricity
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e == radius)
            .map(|(v, _)| v)
            .collect();
        Ok(EccentricityProfile {
            eccentricity,
            radius,
            diameter,
            center,
        })
    }
}

/// Exact eccentricity profile of a connected graph.
pub fn eccentricity_profile(g: &Graph, algorithm: EccAlgorithm) -> Result<EccentricityProfile> {
    eccentricity_profile_counted(g, algorithm).map(|(p, _)| p)
}

/// Like [`eccentricity_profile`], also returning the number of BFS runs.
pub fn eccentricity_profile_counted(
    g: &Graph,
    algorithm: EccAlgorithm,
) -> Result<(EccentricityProfile, usize)> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut bfs = Bfs::new(n);
    let (ecc0, reached) = bfs.run(g, &[0]);
    if reached < n {
        let other = bfs.first_unreached().expect("some node is unreached");
        return Err(Error::Disconnected(
            g.label(0).to_owned(),
            g.label(other).to_owned(),
        ));
    }
    let (ecc, runs) = match algorithm {
        EccAlgorithm::Naive => (naive_eccentricities(g), n),
        EccAlgorithm::Pruned => pruned_eccentricities(g, &mut bfs, ecc0),
    };
    Ok((EccentricityProfile::from_eccentricities(ecc)?, runs))
}

fn naive_eccentricities(g: &Graph) -> Vec<u32> {
    let n = g.node_count();
    (0..n)
        .into_par_iter()
        .map_init(|| Bfs::new(n), |bfs, s| bfs.run(g, &[s]).0)
        .collect()
}

/// `bfs` must hold the completed BFS from node 0 whose eccentricity is `ecc0`.
fn pruned_eccentricities(g: &Graph, bfs: &mut Bfs, ecc0: u32) -> (Vec<u32>, usize) {
    let n = g.node_count();
    let prune_leaves = n > 2;
    let mut candidates: Vec<u32> = (0..n)
        .filter(|&v| !(prune_leaves && g.degree(v) == 1))
        .map(|v| v as u32)
        .collect();

    let mut bounds = Bounds {
        lower: vec![0u32; n],
        upper: vec![n as u32; n],
        ecc: vec![UNSEEN; n],
    };

    // The connectivity check's BFS from node 0 is a valid bound source even
    // when node 0 itself is a pruned leaf.
    let mut runs = 1;
    bounds.ecc[0] = ecc0;
    bounds.tighten(ecc0, bfs.dist(), &mut candidates);

    let mut pick_high = true;
    let mut recent = [usize::MAX; SWITCH_WINDOW];
    let mut round = 0usize;
    let mut diameter_lb = ecc0;
    while !candidates.is_empty() {
        // Once single roots stop resolving enough nodes to pay for their
        // sweep, the rest go through bit-parallel batches.
        let break_even = (64 * LANE_WORDS) / (4 * (diameter_lb as usize + 1));
        if recent.iter().all(|&k| k < break_even.max(1)) {
            break;
        }
        let root = if pick_high {
            *candidates
                .iter()
                .max_by(|&&a, &&b| {
                    let (a, b) = (a as usize, b as usize);
                    bounds.upper[a]
                        .cmp(&bounds.upper[b])
                        .then(g.degree(a).cmp(&g.degree(b)))
                        .then(b.cmp(&a))
                })
                .unwrap()
        } else {
            *candidates
                .iter()
                .min_by(|&&a, &&b| {
                    let (a, b) = (a as usize, b as usize);
                    bounds.lower[a]
                        .cmp(&bounds.lower[b])
                        .then(g.degree(b).cmp(&g.degree(a)))
                        .then(a.cmp(&b))
                })
                .unwrap()
        } as usize;
        pick_high = !pick_high;

        let (root_ecc, _) = bfs.run(g, &[root]);
        runs += 1;
        diameter_lb = diameter_lb.max(root_ecc);
        let before = candidates.len();
        bounds.ecc[root] = root_ecc;
        bounds.tighten(root_ecc, bfs.dist(), &mut candidates);
        recent[round % SWITCH_WINDOW] = before - candidates.len();
        round += 1;
    }

    let mut batch = BatchBfs::new(n);
    for chunk in candidates.chunks(64 * LANE_WORDS) {
        let eccs = batch.eccentricities(g, chunk);
        runs += chunk.len();
        for (&v, e) in chunk.iter().zip(eccs) {
            bounds.ecc[v as usize] = e;
        }
    }

    let Bounds { mut ecc, .. } = bounds;

    if prune_leaves {
        for v in 0..n {
            if g.degree(v) == 1 {
                ecc[v] = ecc[g.neighbors(v)[0] as usize] + 1;
            }
        }
    }
    debug_assert!(ecc.iter().all(|&e| e != UNSEEN));
    (ecc, runs)
}

const SWITCH_WINDOW: usize = 8;
const LANE_WORDS: usize = 4;

type Lanes = [u64; LANE_WORDS];

/// Multi-source BFS with one bit lane per source: up to `64 * LANE_WORDS`
/// sweeps share each pass over the adjacency.
struct BatchBfs {
    seen: Vec<Lanes>,
    frontier: Vec<Lanes>,
    next: Vec<Lanes>,
}

fn lanes_or(a: &mut Lanes, b: &Lanes) {
    for (x, y) in a.iter_mut().zip(b) {
        *x |= y;
    }
}

fn lanes_empty(a: &Lanes) -> bool {
    a.iter().all(|&x| x == 0)
}

impl BatchBfs {
    fn new(n: usize) -> Self {
        BatchBfs {
            seen: vec![[0; LANE_WORDS]; n],
            frontier: vec![[0; LANE_WORDS]; n],
            next: vec![[0; LANE_WORDS]; n],
        }
    }

    /// Eccentricity of every source, in order. The graph must be connected.
    fn eccentricities(&mut self, g: &Graph, sources: &[u32]) -> Vec<u32> {
        assert!(sources.len() <= 64 * LANE_WORDS);
        let n = g.node_count();
        let mut full = [0u64; LANE_WORDS];
        self.seen.fill([0; LANE_WORDS]);
        self.frontier.fill([0; LANE_WORDS]);
        for (i, &s) in sources.iter().enumerate() {
            let (w, bit) = (i / 64, 1u64 << (i % 64));
            self.seen[s as usize][w] |= bit;
            self.frontier[s as usize][w] |= bit;
            full[w] |= bit;
        }
        let mut ecc = vec![0u32; sources.len()];
        let total_arcs = 2 * g.edge_count();
        let mut frontier_arcs: usize = sources.iter().map(|&s| g.degree(s as usize)).sum();
        let mut level = 0u32;
        loop {
            level += 1;
            if frontier_arcs * 8 < total_arcs {
                self.next.fill([0; LANE_WORDS]);
                for v in 0..n {
                    let f = self.frontier[v];
                    if lanes_empty(&f) {
                        continue;
                    }
                    for &u in g.neighbors(v) {
                        lanes_or(&mut self.next[u as usize], &f);
                    }
                }
            } else {
                for u in 0..n {
                    let seen = self.seen[u];
                    let mut acc = [0u64; LANE_WORDS];
                    if seen != full {
                        for &v in g.neighbors(u) {
                            lanes_or(&mut acc, &self.frontier[v as usize]);
                        }
                    }
                    self.next[u] = acc;
                }
            }

            let mut reached = [0u64; LANE_WORDS];
            frontier_arcs = 0;
            for u in 0..n {
                let seen = &mut self.seen[u];
                let next = &mut self.next[u];
                for w in 0..LANE_WORDS {
                    next[w] &= !seen[w];
                    seen[w] |= next[w];
                    reached[w] |= next[w];
                }
                if !lanes_empty(next) {
                    frontier_arcs += g.degree(u);
                }
            }
            if lanes_empty(&reached) {
                break;
            }
            for (i, e) in ecc.iter_mut().enumerate() {
                if reached[i / 64] >> (i % 64) & 1 == 1 {
                    *e = level;
                }
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        ecc
    }
}

struct Bounds {
    lower: Vec<u32>,
    upper: Vec<u32>,
    ecc: Vec<u32>,
}

impl Bounds {
    /// Applies the bounds implied by a BFS with eccentricity `root_ecc` and
    /// drops every candidate that is resolved.
    fn tighten(&mut self, root_ecc: u32, dist: &[u32], candidates: &mut Vec<u32>) {
        candidates.retain(|&w| {
            let w = w as usize;
            if self.ecc[w] != UNSEEN {
                return false;
            }
            let d = dist[w];
            let lo = self.lower[w].max(d).max(root_ecc - d);
            let hi = self.upper[w].min(root_ecc + d);
            self.lower[w] = lo;
            self.upper[w] = hi;
            if lo == hi {
                self.ecc[w] = lo;
                false
            } else {
                true
            }
        });
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelAssignment {
    /// 1 for center nodes, otherwise 1 + hop distance to the nearest center node.
    pub level: Vec<u32>,
    pub max_level: u32,
}

/// Assigns levels by multi-source BFS from the center set.
pub fn assign_levels(g: &Graph, profile: &EccentricityProfile) -> Result<LevelAssignment> {
    if profile.eccentricity.len() != g.node_count() {
        return Err(Error::LengthMismatch {
            what: "eccentricity profile",
            expected: g.node_count(),
            found: profile.eccentricity.len(),
        });
    }
    if profile.center.is_empty() {
        return Err(Error::EmptyCenter);
    }
    for &c in &profile.center {
        check_node(g, c)?;
    }
    let mut bfs = Bfs::new(g.node_count());
    let (far, reached) = bfs.run(g, &profile.center);
    if reached < g.node_count() {
        let other = bfs.first_unreached().expect("some node is unreached");
        return Err(Error::Disconnected(
            g.label(profile.center[0]).to_owned(),
            g.label(other).to_owned(),
        ));
    }
    Ok(LevelAssignment {
        level: bfs.dist().iter().map(|&d| d + 1).collect(),
        max_level: far + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, ParseOptions};

    fn parse(text: &str) -> Graph {
        parse_edge_list(text, &ParseOptions::default()).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_index_edges(n, &edges).unwrap()
    }

    #[test]
    fn batch_sweeps_match_single_sweeps() {
        // Long cycle with chords: deep enough to use both sweep directions.
        let n = 700;
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend(
            (0..n)
                .step_by(37)
                .map(|i| (i, (i * 7 + 3) % n))
                .filter(|&(a, b)| a != b),
        );
        let g = Graph::from_index_edges(n, &edges).unwrap();
        let mut bfs = Bfs::new(n);
        let want: Vec<u32> = (0..n).map(|v| bfs.run(&g, &[v]).0).collect();
        let sources: Vec<u32> = (0..n as u32).rev().collect();
        let mut batch = BatchBfs::new(n);
        for chunk in sources.chunks(64 * LANE_WORDS) {
            for (&v, e) in chunk.iter().zip(batch.eccentricities(&g, chunk)) {
                assert_eq!(e, want[v as usize], "node {v}");
            }
        }
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_index_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_index_edges(leaves + 1, &edges).unwrap()
    }

    fn both(g: &Graph) -> EccentricityProfile {
        let naive = eccentricity_profile(g, EccAlgorithm::Naive).unwrap();
        let pruned = eccentricity_profile(g, EccAlgorithm::Pruned).unwrap();
        assert_eq!(naive, pruned);
        naive
    }

    #[test]
    fn bfs_on_path_and_star() {
        let d = bfs_distances(&path(3), 0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
        let d = bfs_distances(&star(4), 0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), Some(1), Some(1), Some(1)]);
    }

    #[test]
    fn bfs_marks_unreachable_and_rejects_bad_source() {
        let g = parse("a b\nc d");
        assert_eq!(
            bfs_distances(&g, 0).unwrap(),
            vec![Some(0), Some(1), None, None]
        );
        assert!(matches!(
            bfs_distances(&g, 4),
            Err(Error::NodeOutOfRange { node: 4, .. })
        ));
    }

    #[test]
    fn path_of_five() {
        let p = both(&path(5));
        assert_eq!(p.eccentricity, vec![4, 3, 2, 3, 4]);
        assert_eq!(p.radius, 2);
        assert_eq!(p.diameter, 4);
        assert_eq!(p.center, vec![2]);
    }

    #[test]
    fn cycle_of_five_is_all_center() {
        let p = both(&cycle(5));
        assert_eq!(p.eccentricity, vec![2; 5]);
        assert_eq!(p.center, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn tiny_graphs() {
        let p = both(&path(2));
        assert_eq!(p.eccentricity, vec![1, 1]);
        let single = Graph::from_index_edges(1, &[]).unwrap();
        let p = both(&single);
        assert_eq!((p.radius, p.diameter, p.center.clone()), (0, 0, vec![0]));
        let p = both(&star(6));
        assert_eq!(p.eccentricity, vec![1, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn leaf_first_graph() {
        // Node 0 is a leaf, so the pruned route starts from a non-candidate.
        let p = both(&parse("l a\na b\nb c\nc a\nc t"));
        assert_eq!(p.eccentricity, vec![3, 2, 2, 2, 3]);
    }

    #[test]
    fn disconnected_graph_names_two_nodes() {
        let g = parse("a b\nc d");
        for alg in [EccAlgorithm::Naive, EccAlgorithm::Pruned] {
            match eccentricity_profile(&g, alg) {
                Err(Error::Disconnected(a, b)) => assert_eq!((a.as_str(), b.as_str()), ("a", "c")),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn levels_on_path() {
        let g = path(5);
        let levels = assign_levels(&g, &both(&g)).unwrap();
        assert_eq!(levels.level, vec![3, 2, 1, 2, 3]);
        assert_eq!(levels.max_level, 3);
    }

    #[test]
    fn levels_triangle_with_pendant() {
        let g = parse("a b\nb c\nc a\nd a");
        let p = both(&g);
        assert_eq!(p.center, vec![0]);
        let levels = assign_levels(&g, &p).unwrap();
        assert_eq!(levels.level, vec![1, 2, 2, 2]);
    }

    #[test]
    fn two_hops_from_center_is_level_three() {
        // Path of 7: center is node 3; node 1 is two hops away.
        let g = path(7);
        let levels = assign_levels(&g, &both(&g)).unwrap();
        assert_eq!(levels.level[1], 3);
    }

    #[test]
    fn levels_reject_bad_profiles() {
        let g = path(3);
        let mut p = both(&g);
        p.center.clear();
        assert!(matches!(assign_levels(&g, &p), Err(Error::EmptyCenter)));
        let p = both(&path(4));
        assert!(matches!(
            assign_levels(&g, &p),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn algorithm_names() {
        assert_eq!(
            "naive".parse::<EccAlgorithm>().unwrap(),
            EccAlgorithm::Naive
        );
        assert_eq!(EccAlgorithm::Pruned.to_string(), "pruned");
        assert!("fast".parse::<EccAlgorithm>().is_err());
    }
}

//! Property tests over random graphs and CCDFs.

use netmix::centrality::{assign_levels, eccentricity_profile, EccAlgorithm};
use netmix::classifier::{classify_edges, split_degree_sequences, EdgeType};
use netmix::distfit::{build_ccdf, fit_power_law, fit_weibull, CcdfTable};
use netmix::graph::{
    connected_components, largest_component, parse_edge_list, Graph, ParseOptions,
};
use proptest::prelude::*;

/// Node count and raw edges, possibly with loops and duplicates.
fn raw_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_n).prop_flat_map(|n| {
        let edge = (0..n, 0..n);
        (Just(n), prop::collection::vec(edge, 0..3 * n))
    })
}

/// A connected graph: random parent links form a spanning tree, then extras.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            (
                Just(n),
                parents,
                prop::collection::vec((0..n, 0..n), 0..2 * n),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (p, i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::from_index_edges(n, &edges).unwrap()
        })
}

/// Strictly increasing degrees paired with strictly decreasing fractions.
fn monotone_ccdf() -> impl Strategy<Value = Vec<(u32, f64)>> {
    prop::collection::btree_set(1u32..1000, 3..40).prop_flat_map(|ks| {
        let len = ks.len();
        prop::collection::btree_set(1u32..1_000_000, len..=len).prop_map(move |fs| {
            ks.iter()
                .zip(fs.iter().rev())
                .map(|(&k, &f)| (k, f64::from(f) / 1e6))
                .collect()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn edge_list_round_trips((n, edges) in raw_graph(40)) {
        let g = Graph::from_index_edges(n, &edges).unwrap();
        let text = g.to_edge_list_string();
        if g.edge_count() == 0 {
            return Ok(());
        }
        let back = parse_edge_list(&text, &ParseOptions::default()).unwrap();
        prop_assert_eq!(back.edge_count(), g.edge_count());
        for &(u, v) in back.edges() {
            let a = g.index_of(back.label(u as usize)).unwrap();
            let b = g.index_of(back.label(v as usize)).unwrap();
            prop_assert!(g.has_edge(a, b));
        }
        let again = parse_edge_list(&back.to_edge_list_string(), &ParseOptions::default()).unwrap();
        prop_assert_eq!(again.to_edge_list_string(), back.to_edge_list_string());
    }

    #[test]
    fn degrees_sum_to_twice_the_edges((n, edges) in raw_graph(60)) {
        let g = Graph::from_index_edges(n, &edges).unwrap();
        let sum: u64 = g.degrees().iter().map(|&d| u64::from(d)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count() as u64);
        let norm = g.normalization();
        prop_assert_eq!(
            g.edge_count() + norm.dropped_self_loops + norm.collapsed_duplicates,
            edges.len()
        );
    }

    #[test]
    fn largest_component_is_connected((n, edges) in raw_graph(60)) {
        let g = Graph::from_index_edges(n, &edges).unwrap();
        let report = connected_components(&g);
        let lcc = largest_component(&g, &report);
        prop_assert!(connected_components(&lcc).is_connected());
        prop_assert_eq!(lcc.node_count(), *report.component_sizes.iter().max().unwrap());
    }

    #[test]
    fn pruned_equals_naive(g in connected_graph(500)) {
        let naive = eccentricity_profile(&g, EccAlgorithm::Naive).unwrap();
        let pruned = eccentricity_profile(&g, EccAlgorithm::Pruned).unwrap();
        prop_assert!(naive.radius <= naive.diameter);
        prop_assert!(naive.diameter <= 2 * naive.radius);
        prop_assert_eq!(pruned, naive);
    }

    #[test]
    fn levels_are_consistent(g in connected_graph(120)) {
        let p = eccentricity_profile(&g, EccAlgorithm::Pruned).unwrap();
        let levels = assign_levels(&g, &p).unwrap();
        for v in 0..g.node_count() {
            let l = levels.level[v];
            prop_assert_eq!(l == 1, p.eccentricity[v] == p.radius);
            if l > 1 {
                // Every non-center node has a neighbor one level up.
                prop_assert!(g.neighbors(v).iter().any(|&u| levels.level[u as usize] + 1 == l));
            }
        }
        let c = classify_edges(&g, &levels).unwrap();
        prop_assert_eq!(c.p2c_count + c.p2p_count, g.edge_count());
        let split = split_degree_sequences(&g, &c).unwrap();
        for v in 0..g.node_count() {
            prop_assert_eq!(split.p2c[v] + split.p2p[v], split.total[v]);
        }
        let p2p_ends: u32 = split.p2p.iter().sum();
        prop_assert_eq!(p2p_ends as usize, 2 * c.labels.iter().filter(|&&t| t == EdgeType::P2p).count());
    }

    #[test]
    fn ccdf_is_a_decreasing_step_function(degrees in prop::collection::vec(0u32..200, 1..300)) {
        prop_assume!(degrees.iter().any(|&d| d > 0));
        let ccdf = build_ccdf(&degrees).unwrap();
        prop_assert_eq!(ccdf.points[0].1, 1.0);
        for w in ccdf.points.windows(2) {
            prop_assert!(w[0].0 < w[1].0 && w[0].1 > w[1].1);
        }
    }

    #[test]
    fn power_law_r_is_scale_invariant(
        pts in monotone_ccdf(),
        scale in 0.01f64..1.0,
    ) {
        let base = CcdfTable::from_points(pts.clone()).unwrap();
        let scaled = CcdfTable::from_points(pts.iter().map(|&(k, f)| (k, f * scale)).collect()).unwrap();
        if let (Ok(a), Ok(b)) = (fit_power_law(&base), fit_power_law(&scaled)) {
            prop_assert!((a.r_percent - b.r_percent).abs() < 1e-6);
            prop_assert!((a.ccdf_slope - b.ccdf_slope).abs() < 1e-9);
        }
    }

    #[test]
    fn fits_ignore_point_order(
        pts in monotone_ccdf(),
    ) {
        let mut reversed = pts.clone();
        reversed.reverse();
        let a = CcdfTable { points: pts, n_samples: None };
        let b = CcdfTable { points: reversed, n_samples: None };
        if let (Ok(x), Ok(y)) = (fit_power_law(&a), fit_power_law(&b)) {
            prop_assert!((x.r_percent - y.r_percent).abs() < 1e-9);
            prop_assert!((x.gamma - y.gamma).abs() < 1e-9);
        }
        if let (Ok(x), Ok(y)) = (fit_weibull(&a), fit_weibull(&b)) {
            prop_assert!((x.r_percent - y.r_percent).abs() < 1e-9);
            prop_assert!((x.shape_c - y.shape_c).abs() < 1e-9);
        }
    }
}

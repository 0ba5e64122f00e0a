//! Classify the edges of a small network into p2c and p2p.
//!
//! Run with `cargo run --example classify_edges`.

use netmix::centrality::{assign_levels, eccentricity_profile, EccAlgorithm};
use netmix::classifier::classify_edges;
use netmix::graph::{parse_edge_list, ParseOptions};

const EDGES: &str = "\
# a hub with two spokes that also know each other, and a tail
hub a
hub b
a b
hub c
c d
d e
";

fn main() -> netmix::Result<()> {
    let g = parse_edge_list(EDGES, &ParseOptions::default())?;
    let profile = eccentricity_profile(&g, EccAlgorithm::Pruned)?;
    let levels = assign_levels(&g, &profile)?;
    let classes = classify_edges(&g, &levels)?;

    println!(
        "radius {} diameter {} center {:?}",
        profile.radius,
        profile.diameter,
        profile
            .center
            .iter()
            .map(|&v| g.label(v))
            .collect::<Vec<_>>()
    );
    for v in 0..g.node_count() {
        println!(
            "  {:>3}  ecc {}  level {}",
            g.label(v),
            profile.eccentricity[v],
            levels.level[v]
        );
    }
    for (&(u, v), t) in g.edges().iter().zip(&classes.labels) {
        println!("{} - {}  {t}", g.label(u as usize), g.label(v as usize));
    }
    println!("P2C {}  P2P {}", classes.p2c_count, classes.p2p_count);
    Ok(())
}

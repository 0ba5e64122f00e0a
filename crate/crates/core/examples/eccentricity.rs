//! Exact eccentricities two ways: one BFS per node, and bound pruning.
//!
//! `cargo run --release --example eccentricity -- [NODES]`

use std::time::Instant;

use netmix::centrality::{eccentricity_profile_counted, EccAlgorithm};
use netmix::generators::{generate_ba, BaConfig};

fn main() -> netmix::Result<()> {
    let t: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5_000);
    let g = generate_ba(&BaConfig {
        m0: 3,
        m: 2,
        t,
        seed: 1,
    })?
    .graph;
    println!("BA graph: N={} E={}", g.node_count(), g.edge_count());

    let mut profiles = Vec::new();
    for alg in [EccAlgorithm::Naive, EccAlgorithm::Pruned] {
        let start = Instant::now();
        let (p, runs) = eccentricity_profile_counted(&g, alg)?;
        println!(
            "{alg:>6}: radius {} diameter {} |center| {} BFS sources {runs} in {:.2?}",
            p.radius,
            p.diameter,
            p.center.len(),
            start.elapsed()
        );
        profiles.push(p);
    }
    assert_eq!(profiles[0], profiles[1]);
    println!("identical eccentricities");
    Ok(())
}

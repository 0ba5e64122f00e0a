//! Grow BA and EBA networks and print their generation reports.
//!
//! `cargo run --example generate_models -- [OUT_DIR]` also writes the edge lists.

use std::fs;
use std::path::PathBuf;

use netmix::generators::{generate_ba, generate_eba, BaConfig, EbaConfig};

fn main() -> netmix::Result<()> {
    let ba = generate_ba(&BaConfig {
        m0: 2,
        m: 3,
        t: 2_000,
        seed: 42,
    })?;
    let eba = generate_eba(&EbaConfig {
        p: 0.35,
        q: 0.5,
        m: 1,
        m0: 2,
        t: 10_000,
        seed: 42,
    })?;

    let out = std::env::args().nth(1).map(PathBuf::from);
    for (name, model) in [("ba", &ba), ("eba", &eba)] {
        print!("{}", model.report.to_json()?);
        if let Some(dir) = &out {
            fs::create_dir_all(dir)?;
            let path = dir.join(format!("{name}.edges.txt"));
            fs::write(&path, model.graph.to_edge_list_string())?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}

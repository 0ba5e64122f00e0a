//! Compare the peer-degree Weibull fit of pure preferential attachment (BA)
//! with the extended model that also adds and rewires links (EBA).
//!
//! `cargo run --release --example model_origin -- [SCALE]`, where SCALE
//! multiplies the default network sizes (1.0 gives about 30k nodes each).

use netmix::generators::{generate_ba, generate_eba, BaConfig, EbaConfig};
use netmix::pipeline::{analyze_graph, AnalyzeOptions};

fn main() -> netmix::Result<()> {
    let scale: f64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0.1);
    let ba_t = (30_848.0 * scale) as usize;
    let eba_t = (213_680.0 * scale) as usize;

    println!("model\tseed\tN\tE\tP2C\tP2P\tR_W_p2p\tR_PL_p2c");
    for seed in 1..=3 {
        let ba = generate_ba(&BaConfig {
            m0: 2,
            m: 3,
            t: ba_t,
            seed,
        })?;
        let eba = generate_eba(&EbaConfig {
            p: 0.35,
            q: 0.5,
            m: 1,
            m0: 2,
            t: eba_t,
            seed,
        })?;
        for (name, g) in [("BA", ba.graph), ("EBA", eba.graph)] {
            let r = analyze_graph(g, name, None, &AnalyzeOptions::default())?.report;
            let pct = |x: Option<f64>| x.map_or("-".into(), |v| format!("{v:.2}"));
            println!(
                "{name}\t{seed}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.n,
                r.e,
                r.p2c,
                r.p2p,
                pct(r.r_w_p2p),
                pct(r.r_pl_p2c)
            );
        }
    }
    Ok(())
}

//! Full pipeline on an edge-list file: prints the table row and writes the
//! report, CCDF tables and per-edge labels.
//!
//! `cargo run --release --example analyze_dataset -- EDGES [OUT_DIR]`

use std::path::{Path, PathBuf};

use netmix::graph::ParseOptions;
use netmix::pipeline::{analyze_file, AnalyzeOptions, OutputFormat};

fn main() -> netmix::Result<()> {
    let mut args = std::env::args().skip(1);
    let Some(input) = args.next() else {
        eprintln!("usage: analyze_dataset EDGES [OUT_DIR]");
        std::process::exit(1);
    };
    let out = args
        .next()
        .map_or_else(|| PathBuf::from("netmix-out"), PathBuf::from);
    let analysis = analyze_file(
        Path::new(&input),
        None,
        &ParseOptions::default(),
        &AnalyzeOptions::default(),
    )?;
    println!("{}", analysis.report.table_row());
    for path in analysis.write_outputs(&out, OutputFormat::Both)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}

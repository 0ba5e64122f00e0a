//! Score the classification against reference edge labels.
//!
//! `cargo run --example truth_agreement -- EDGES LABELS` for real files;
//! without arguments a small built-in example is used.

use netmix::classifier::TruthTable;
use netmix::graph::{parse_edge_list, read_edge_list, ParseOptions};
use netmix::pipeline::{analyze_graph, AnalyzeOptions};

fn main() -> netmix::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (graph, truth) = match args.as_slice() {
        [edges, labels] => (
            read_edge_list(edges, &ParseOptions::default())?,
            TruthTable::read(labels)?,
        ),
        _ => (
            parse_edge_list("1 2\n1 3\n2 3\n3 4\n4 5\n", &ParseOptions::default())?,
            TruthTable::parse("1 2 P2P\n3 1 P2C\n2 3 P2C\n3 4 p2c\n5 4 P2C\n")?,
        ),
    };
    let options = AnalyzeOptions {
        truth: Some(truth),
        ..Default::default()
    };
    let analysis = analyze_graph(graph, "example", None, &options)?;
    let a = analysis.report.agreement.expect("truth was supplied");
    match a.agreement_percent() {
        Some(pct) => println!(
            "matched {}/{} compared edges ({pct:.1}%)",
            a.matched, a.compared
        ),
        None => println!("no graph edge appears in the labels"),
    }
    println!(
        "{} edges missing from the labels, {} label rows not in the graph, {} duplicate rows",
        a.missing_in_truth, a.unmatched_truth_rows, a.duplicate_truth_rows
    );
    Ok(())
}

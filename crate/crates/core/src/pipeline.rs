//! End-to-end analysis: parse, reduce to the largest component, classify,
//! fit, and write the report files.

use std::fs;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use crate::centrality::{assign_levels, eccentricity_profile_counted, EccAlgorithm};
use crate::centrality::{EccentricityProfile, LevelAssignment};
use crate::classifier::{agreement, classify_edges, EdgeClassification, TruthTable};
use crate::distfit::CcdfTable;
use crate::error::{Error, Result};
use crate::graph::{connected_components, largest_component, read_edge_list, Graph, ParseOptions};
use crate::report::{fit_report, AnalysisReport, ClassCcdfs, Provenance, Structure};

pub const TOOL_VERSION: &str = concat!("netmix ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub ecc_algorithm: EccAlgorithm,
    /// Fail on disconnected input instead of reducing to the largest component.
    pub strict_connected: bool,
    pub truth: Option<TruthTable>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Both,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    /// The analyzed (connected) graph.
    pub graph: Graph,
    pub profile: EccentricityProfile,
    pub levels: LevelAssignment,
    pub classification: EdgeClassification,
    pub ccdfs: ClassCcdfs,
    pub report: AnalysisReport,
}

/// Runs the classification and fitting chain on an in-memory graph.
pub fn analyze_graph(
    graph: Graph,
    dataset_name: &str,
    input: Option<&Path>,
    options: &AnalyzeOptions,
) -> Result<Analysis> {
    if graph.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let components = connected_components(&graph);
    let mut provenance = Provenance {
        input: input.map(|p| p.display().to_string()),
        lcc_reduced: false,
        input_nodes: graph.node_count(),
        input_edges: graph.edge_count(),
        input_components: components.component_count(),
        normalization: graph.normalization(),
        tool_version: TOOL_VERSION.to_owned(),
    };
    let graph = if components.is_connected() {
        graph
    } else if options.strict_connected {
        let lcc = components.lcc_index;
        let a = (0..graph.node_count())
            .find(|&v| components.component_id[v] == lcc)
            .expect("largest component is non-empty");
        let b = (0..graph.node_count())
            .find(|&v| components.component_id[v] != lcc)
            .expect("graph is disconnected");
        return Err(Error::Disconnected(
            graph.label(a).to_owned(),
            graph.label(b).to_owned(),
        ));
    } else {
        provenance.lcc_reduced = true;
        largest_component(&graph, &components)
    };

    let (profile, bfs_runs) = eccentricity_profile_counted(&graph, options.ecc_algorithm)?;
    let levels = assign_levels(&graph, &profile)?;
    let classification = classify_edges(&graph, &levels)?;
    let (mut report, ccdfs) = fit_report(dataset_name, &graph, &classification)?;
    report.structure = Structure {
        radius: profile.radius,
        diameter: profile.diameter,
        center_size: profile.center.len(),
        max_level: levels.max_level,
        ecc_algorithm: options.ecc_algorithm.to_string(),
        bfs_runs,
    };
    if let Some(truth) = &options.truth {
        report.agreement = Some(agreement(&graph, &classification, truth)?);
    }
    report.provenance = provenance;
    Ok(Analysis {
        graph,
        profile,
        levels,
        classification,
        ccdfs,
        report,
    })
}

/// Reads an edge list and analyzes it. The dataset name defaults to the
/// file stem.
pub fn analyze_file(
    path: &Path,
    name: Option<&str>,
    parse: &ParseOptions,
    options: &AnalyzeOptions,
) -> Result<Analysis> {
    let graph = read_edge_list(path, parse)?;
    let stem = dataset_stem(path);
    analyze_graph(graph, name.unwrap_or(&stem), Some(path), options)
}

pub fn dataset_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".to_owned())
}

impl Analysis {
    /// Writes the report, the three CCDF tables and the per-edge labels into
    /// `dir`, creating it if needed. Returns the written paths.
    pub fn write_outputs(&self, dir: &Path, format: OutputFormat) -> Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        if matches!(format, OutputFormat::Json | OutputFormat::Both) {
            let path = dir.join("report.json");
            fs::write(&path, self.report.to_json()?)?;
            written.push(path);
        }
        if matches!(format, OutputFormat::Csv | OutputFormat::Both) {
            let path = dir.join("report.csv");
            fs::write(&path, self.report.to_csv())?;
            written.push(path);
        }
        for (class, ccdf) in [
            ("total", &self.ccdfs.total),
            ("p2c", &self.ccdfs.p2c),
            ("p2p", &self.ccdfs.p2p),
        ] {
            let path = dir.join(format!("{class}.ccdf.tsv"));
            let out = BufWriter::new(fs::File::create(&path)?);
            match ccdf {
                Some(c) => c.write_tsv(out)?,
                None => CcdfTable {
                    points: Vec::new(),
                    n_samples: Some(0),
                }
                .write_tsv(out)?,
            }
            written.push(path);
        }
        let path = dir.join("classification.tsv");
        self.classification
            .write_tsv(&self.graph, BufWriter::new(fs::File::create(&path)?))?;
        written.push(path);
        Ok(written)
    }
}

//! Table-shaped analysis reports and their JSON / CSV encodings.
//!
//! All floats in serialized output are rounded to six significant digits so
//! that repeated runs produce byte-identical files.

use serde::Serialize;
use serde_json::{Number, Value};

use crate::classifier::{split_degree_sequences, AgreementReport, DegreeSplit, EdgeClassification};
use crate::distfit::{build_ccdf, fit_power_law, fit_weibull, CcdfTable, PowerLawFit, WeibullFit};
use crate::error::Result;
use crate::graph::{Graph, NormalizationSummary};
use crate::numfmt::{round6, sig6};

/// Column order of the CSV encoding.
pub const CSV_HEADER: &str = "dataset,N,E,P2C,P2P,R_PL_t,R_PL_p2c,R_W_p2p,R_W_t";

/// A fit that either succeeded or failed with a recorded reason.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum FitOutcome<T> {
    Fit(T),
    Failed { error: String },
}

impl<T> FitOutcome<T> {
    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(fit) => FitOutcome::Fit(fit),
            Err(e) => FitOutcome::Failed {
                error: e.to_string(),
            },
        }
    }

    pub fn fit(&self) -> Option<&T> {
        match self {
            FitOutcome::Fit(f) => Some(f),
            FitOutcome::Failed { .. } => None,
        }
    }

    pub fn is_failed(&self) -> bool {
        matches!(self, FitOutcome::Failed { .. })
    }
}

/// Both model fits for one degree class.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassFits {
    /// Nodes with at least one edge of this class.
    pub samples: usize,
    pub ccdf_points: usize,
    pub power_law: FitOutcome<PowerLawFit>,
    pub weibull: FitOutcome<WeibullFit>,
}

impl ClassFits {
    pub fn from_ccdf(ccdf: Option<&CcdfTable>) -> Self {
        match ccdf {
            Some(c) => ClassFits {
                samples: c.n_samples.unwrap_or(0),
                ccdf_points: c.len(),
                power_law: FitOutcome::from_result(fit_power_law(c)),
                weibull: FitOutcome::from_result(fit_weibull(c)),
            },
            None => {
                let error = "no nodes with degree >= 1 in this class".to_owned();
                ClassFits {
                    samples: 0,
                    ccdf_points: 0,
                    power_law: FitOutcome::Failed {
                        error: error.clone(),
                    },
                    weibull: FitOutcome::Failed { error },
                }
            }
        }
    }

    /// A Weibull fit flagged degenerate counts as a failure here.
    fn has_failure(&self) -> bool {
        self.power_law.is_failed()
            || match &self.weibull {
                FitOutcome::Fit(w) => w.degenerate,
                FitOutcome::Failed { .. } => true,
            }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FitParams {
    pub total: ClassFits,
    pub p2c: ClassFits,
    pub p2p: ClassFits,
}

/// Per-class CCDFs; `None` for a class with no positive degrees.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassCcdfs {
    pub total: Option<CcdfTable>,
    pub p2c: Option<CcdfTable>,
    pub p2p: Option<CcdfTable>,
}

impl ClassCcdfs {
    pub fn from_split(split: &DegreeSplit) -> Self {
        ClassCcdfs {
            total: build_ccdf(&split.total).ok(),
            p2c: build_ccdf(&split.p2c).ok(),
            p2p: build_ccdf(&split.p2p).ok(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Structure {
    pub radius: u32,
    pub diameter: u32,
    pub center_size: usize,
    pub max_level: u32,
    pub ecc_algorithm: String,
    pub bfs_runs: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Provenance {
    pub input: Option<String>,
    pub lcc_reduced: bool,
    pub input_nodes: usize,
    pub input_edges: usize,
    pub input_components: usize,
    pub normalization: NormalizationSummary,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub dataset_name: String,
    pub n: usize,
    pub e: usize,
    pub p2c: usize,
    pub p2p: usize,
    pub r_pl_total: Option<f64>,
    pub r_pl_p2c: Option<f64>,
    pub r_w_p2p: Option<f64>,
    pub r_w_total: Option<f64>,
    pub structure: Structure,
    pub agreement: Option<AgreementReport>,
    pub fit_params: FitParams,
    pub provenance: Provenance,
}

/// Computes the per-class fits for a classified graph and fills the
/// counting and correlation columns. `structure` and `provenance` are left
/// at their defaults for the caller to complete.
pub fn fit_report(
    dataset_name: &str,
    g: &Graph,
    c: &EdgeClassification,
) -> Result<(AnalysisReport, ClassCcdfs)> {
    let split = split_degree_sequences(g, c)?;
    let ccdfs = ClassCcdfs::from_split(&split);
    let fit_params = FitParams {
        total: ClassFits::from_ccdf(ccdfs.total.as_ref()),
        p2c: ClassFits::from_ccdf(ccdfs.p2c.as_ref()),
        p2p: ClassFits::from_ccdf(ccdfs.p2p.as_ref()),
    };
    let report = AnalysisReport {
        dataset_name: dataset_name.to_owned(),
        n: g.node_count(),
        e: g.edge_count(),
        p2c: c.p2c_count,
        p2p: c.p2p_count,
        r_pl_total: fit_params.total.power_law.fit().map(|f| f.r_percent),
        r_pl_p2c: fit_params.p2c.power_law.fit().map(|f| f.r_percent),
        r_w_p2p: fit_params.p2p.weibull.fit().map(|f| f.r_percent),
        r_w_total: fit_params.total.weibull.fit().map(|f| f.r_percent),
        structure: Structure::default(),
        agreement: None,
        fit_params,
        provenance: Provenance::default(),
    };
    Ok((report, ccdfs))
}

impl AnalysisReport {
    /// True when any of the six fits failed or came out degenerate.
    pub fn has_fit_failure(&self) -> bool {
        let f = &self.fit_params;
        f.total.has_failure() || f.p2c.has_failure() || f.p2p.has_failure()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut value = serde_json::to_value(self)?;
        round_floats(&mut value);
        let mut text = serde_json::to_string_pretty(&value)?;
        text.push('\n');
        Ok(text)
    }

    pub fn csv_row(&self) -> String {
        let name = if self.dataset_name.contains([',', '"', '\n']) {
            format!("\"{}\"", self.dataset_name.replace('"', "\"\""))
        } else {
            self.dataset_name.clone()
        };
        let mut cells = vec![
            name,
            self.n.to_string(),
            self.e.to_string(),
            self.p2c.to_string(),
            self.p2p.to_string(),
        ];
        cells.extend(
            self.r_columns()
                .iter()
                .map(|r| r.map(sig6).unwrap_or_default()),
        );
        cells.join(",")
    }

    pub fn to_csv(&self) -> String {
        format!("{CSV_HEADER}\n{}\n", self.csv_row())
    }

    /// Tab-separated header and row for terminal output.
    pub fn table_row(&self) -> String {
        let mut cells = vec![
            self.dataset_name.clone(),
            self.n.to_string(),
            self.e.to_string(),
            self.p2c.to_string(),
            self.p2p.to_string(),
        ];
        cells.extend(self.r_columns().iter().map(|r| {
            r.map(|x| format!("{x:.2}"))
                .unwrap_or_else(|| "-".to_owned())
        }));
        format!("{}\n{}", CSV_HEADER.replace(',', "\t"), cells.join("\t"))
    }

    pub fn r_columns(&self) -> [Option<f64>; 4] {
        [self.r_pl_total, self.r_pl_p2c, self.r_w_p2p, self.r_w_total]
    }
}

/// Rounds every float in a JSON tree to six significant digits.
pub fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            *value = Number::from_f64(round6(x)).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

//! The `netmix` command line: `analyze`, `generate` and `fit`.
//!
//! [`run`] takes the argument list and output streams so the whole command
//! can be driven in-process. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | bad arguments, unreadable or malformed input, invalid model parameters |
//! | 2 | disconnected input under `--strict-connected` |
//! | 3 | fit failure (`fit`, or `analyze --fail-on-fit-error`) |

use std::ffi::OsString;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::centrality::EccAlgorithm;
use crate::classifier::TruthTable;
use crate::distfit::{build_ccdf, fit_power_law, fit_weibull, parse_degree_list, CcdfTable};
use crate::error::{Error, Result};
use crate::generators::{generate_ba, generate_eba, BaConfig, EbaConfig, Generated};
use crate::graph::ParseOptions;
use crate::pipeline::{analyze_file, dataset_stem, AnalyzeOptions, OutputFormat};
use crate::report::{round_floats, FitOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_DISCONNECTED: i32 = 2;
pub const EXIT_FIT_FAILURE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "netmix",
    version,
    about = "Classify network edges as p2c/p2p, fit degree CCDFs, generate BA/EBA graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output directory.
    #[arg(long, global = true, default_value = ".")]
    pub out: PathBuf,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Both)]
    pub format: FormatArg,
    #[arg(long, global = true, value_enum, default_value_t = EccArg::Pruned)]
    pub ecc_algorithm: EccArg,
    /// Fail on disconnected input instead of analyzing the largest component.
    #[arg(long, global = true)]
    pub strict_connected: bool,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Dataset name; defaults to the input file stem.
    #[arg(long, global = true)]
    pub name: Option<String>,
    /// Reference edge labels (`u v P2C|P2P` per line) to score against.
    #[arg(long, global = true)]
    pub truth: Option<PathBuf>,
    /// Worker threads for the eccentricity stage.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EccArg {
    Naive,
    Pruned,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Ba,
    Eba,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FitModelArg {
    PowerLaw,
    Weibull,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the edges of an edge-list file and fit the degree CCDFs.
    Analyze {
        input: PathBuf,
        /// Exit with code 3 when any fit fails or is degenerate.
        #[arg(long)]
        fail_on_fit_error: bool,
    },
    /// Grow a BA or EBA network and write it as an edge list.
    Generate {
        #[arg(value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 2)]
        m0: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Number of growth steps (BA) or events (EBA).
        #[arg(long)]
        t: usize,
        /// EBA: probability of adding links.
        #[arg(long)]
        p: Option<f64>,
        /// EBA: probability of rewiring links.
        #[arg(long)]
        q: Option<f64>,
        /// Analyze the generated edge list afterwards.
        #[arg(long)]
        analyze: bool,
    },
    /// Fit a degree list (one integer per line) or a CCDF table (`k<TAB>F`).
    Fit {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FitModelArg::Both)]
        model: FitModelArg,
    },
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Both => OutputFormat::Both,
        }
    }
}

impl From<EccArg> for EccAlgorithm {
    fn from(a: EccArg) -> Self {
        match a {
            EccArg::Naive => EccAlgorithm::Naive,
            EccArg::Pruned => EccAlgorithm::Pruned,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut (dyn Write + Send), stderr: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_FAILURE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    let code = match cli.global.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, stdout, stderr)),
            Err(e) => Err(CliError::new(EXIT_FAILURE, e.to_string())),
        },
        None => dispatch(&cli, stdout, stderr),
    };
    match code {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Disconnected(..) => EXIT_DISCONNECTED,
            Error::TooFewPoints { .. } | Error::ZeroVariance(_) => EXIT_FIT_FAILURE,
            _ => EXIT_FAILURE,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(EXIT_FAILURE, e.to_string())
    }
}

fn dispatch(
    cli: &Cli,
    stdout: &mut (dyn Write + Send),
    stderr: &mut (dyn Write + Send),
) -> std::result::Result<i32, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze {
            input,
            fail_on_fit_error,
        } => cmd_analyze(g, input, g.name.as_deref(), *fail_on_fit_error, stdout),
        Command::Generate {
            model,
            m0,
            m,
            t,
            p,
            q,
            analyze,
        } => {
            let generated = match model {
                ModelArg::Ba => {
                    if p.is_some() || q.is_some() {
                        return Err(CliError::new(
                            EXIT_FAILURE,
                            "--p and --q apply only to the eba model",
                        ));
                    }
                    generate_ba(&BaConfig {
                        m0: *m0,
                        m: *m,
                        t: *t,
                        seed: g.seed,
                    })?
                }
                ModelArg::Eba => {
                    let (Some(p), Some(q)) = (p, q) else {
                        return Err(CliError::new(
                            EXIT_FAILURE,
                            "the eba model needs --p and --q",
                        ));
                    };
                    generate_eba(&EbaConfig {
                        p: *p,
                        q: *q,
                        m: *m,
                        m0: *m0,
                        t: *t,
                        seed: g.seed,
                    })?
                }
            };
            let name = g.name.clone().unwrap_or_else(|| {
                match model {
                    ModelArg::Ba => "ba",
                    ModelArg::Eba => "eba",
                }
                .to_owned()
            });
            let edges = write_generated(&generated, &g.out, &name)?;
            let r = &generated.report;
            writeln!(
                stdout,
                "{name}: N={} E={} isolated={} skipped={} -> {}",
                r.nodes,
                r.edges,
                r.isolated_nodes,
                r.skipped_draws,
                edges.display()
            )?;
            if *analyze {
                cmd_analyze(g, &edges, Some(&name), false, stdout)
            } else {
                Ok(EXIT_OK)
            }
        }
        Command::Fit { input, model } => cmd_fit(input, *model, stdout, stderr),
    }
}

/// Writes `<name>.edges.txt` and `<name>.generation.json`; returns the edge-list path.
fn write_generated(generated: &Generated, dir: &Path, name: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let edges = dir.join(format!("{name}.edges.txt"));
    generated
        .graph
        .write_edge_list(BufWriter::new(fs::File::create(&edges)?))?;
    fs::write(
        dir.join(format!("{name}.generation.json")),
        generated.report.to_json()?,
    )?;
    Ok(edges)
}

fn cmd_analyze(
    g: &GlobalArgs,
    input: &Path,
    name: Option<&str>,
    fail_on_fit_error: bool,
    stdout: &mut (dyn Write + Send),
) -> std::result::Result<i32, CliError> {
    let truth = g.truth.as_ref().map(TruthTable::read).transpose()?;
    let options = AnalyzeOptions {
        ecc_algorithm: g.ecc_algorithm.into(),
        strict_connected: g.strict_connected,
        truth,
    };
    let analysis = analyze_file(input, name, &ParseOptions::default(), &options)?;
    analysis.write_outputs(&g.out, g.format.into())?;
    let report = &analysis.report;
    writeln!(stdout, "{}", report.table_row())?;
    if let Some(a) = &report.agreement {
        match a.agreement_percent() {
            Some(pct) => writeln!(stdout, "agreement\t{pct:.1}%\t{}/{}", a.matched, a.compared)?,
            None => writeln!(stdout, "agreement\t-\t0/0")?,
        }
    }
    if fail_on_fit_error && report.has_fit_failure() {
        return Err(CliError::new(
            EXIT_FIT_FAILURE,
            format!(
                "{}: at least one fit failed or is degenerate",
                report.dataset_name
            ),
        ));
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct FitOutput {
    input: String,
    kind: &'static str,
    ccdf_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    power_law: Option<FitOutcome<crate::distfit::PowerLawFit>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weibull: Option<FitOutcome<crate::distfit::WeibullFit>>,
}

/// A table whose first record has two fields is a CCDF; otherwise a degree list.
fn looks_like_ccdf(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.split_whitespace().count() >= 2)
}

fn cmd_fit(
    input: &Path,
    model: FitModelArg,
    stdout: &mut (dyn Write + Send),
    stderr: &mut (dyn Write + Send),
) -> std::result::Result<i32, CliError> {
    let text = fs::read_to_string(input)?;
    let (kind, ccdf) = if looks_like_ccdf(&text) {
        ("ccdf", CcdfTable::parse_tsv(&text)?)
    } else {
        ("degrees", build_ccdf(&parse_degree_list(&text)?)?)
    };
    let mut failure = None;
    let power_law = matches!(model, FitModelArg::PowerLaw | FitModelArg::Both)
        .then(|| outcome(fit_power_law(&ccdf), &mut failure));
    let weibull = matches!(model, FitModelArg::Weibull | FitModelArg::Both)
        .then(|| outcome(fit_weibull(&ccdf), &mut failure));
    let output = FitOutput {
        input: input.display().to_string(),
        kind,
        ccdf_points: ccdf.len(),
        power_law,
        weibull,
    };
    let mut value = serde_json::to_value(&output).map_err(Error::from)?;
    round_floats(&mut value);
    writeln!(
        stdout,
        "{}",
        serde_json::to_string_pretty(&value).map_err(Error::from)?
    )?;
    match failure {
        Some(e) => {
            writeln!(stderr, "error: {}: {}", dataset_stem(input), e.message)?;
            Ok(e.code)
        }
        None => Ok(EXIT_OK),
    }
}

fn outcome<T>(r: Result<T>, failure: &mut Option<CliError>) -> FitOutcome<T> {
    match r {
        Ok(fit) => FitOutcome::Fit(fit),
        Err(e) => {
            let e = CliError::from(e);
            let error = e.message.clone();
            failure.get_or_insert(e);
            FitOutcome::Failed { error }
        }
    }
}

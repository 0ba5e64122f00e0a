//! Degree CCDFs and linearized least-squares fits.
//!
//! The CCDF is `F(k) = P(degree >= k)` evaluated at each distinct observed
//! degree `k >= 1`. A power law is fitted as a straight line in
//! `(log10 k, log10 F)` and a Weibull `F(k) = exp(-(k/b)^c)` as a straight
//! line in `(ln k, ln(-ln F))`. Goodness of fit is the absolute Pearson
//! correlation in those coordinates, in percent.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numfmt::sig6;

pub const MIN_FIT_POINTS: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct CcdfTable {
    /// `(k, F)` with `k` strictly increasing and `F` strictly decreasing in `(0, 1]`.
    pub points: Vec<(u32, f64)>,
    /// Number of samples with degree >= 1, when built from a degree sequence.
    pub n_samples: Option<usize>,
}

impl CcdfTable {
    /// Validates externally produced points.
    pub fn from_points(points: Vec<(u32, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidCcdf("no points".into()));
        }
        for (i, &(k, f)) in points.iter().enumerate() {
            if k == 0 {
                return Err(Error::InvalidCcdf("degree 0 in CCDF".into()));
            }
            if !(f > 0.0 && f <= 1.0) {
                return Err(Error::InvalidCcdf(format!("F({k}) = {f} outside (0, 1]")));
            }
            if i > 0 {
                let (pk, pf) = points[i - 1];
                if k <= pk {
                    return Err(Error::InvalidCcdf(format!("k not increasing at {k}")));
                }
                if f >= pf {
                    return Err(Error::InvalidCcdf(format!("F not decreasing at k = {k}")));
                }
            }
        }
        Ok(CcdfTable {
            points,
            n_samples: None,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// TSV with a `k<TAB>F` header.
    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        let mut buf = String::from("k\tF\n");
        for &(k, f) in &self.points {
            writeln!(buf, "{k}\t{}", sig6(f)).expect("writing to a String cannot fail");
        }
        out.write_all(buf.as_bytes())?;
        Ok(())
    }

    pub fn parse_tsv(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split('\t').map(str::trim);
            let (Some(k), Some(f), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(Error::parse(
                    lineno + 1,
                    "expected two tab-separated columns",
                ));
            };
            if points.is_empty() && k == "k" && f == "F" {
                continue;
            }
            let k: u32 = k
                .parse()
                .map_err(|_| Error::parse(lineno + 1, format!("bad degree `{k}`")))?;
            let f: f64 = f
                .parse()
                .map_err(|_| Error::parse(lineno + 1, format!("bad fraction `{f}`")))?;
            points.push((k, f));
        }
        Self::from_points(points)
    }

    pub fn read_tsv(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse_tsv(&fs::read_to_string(path)?)
    }
}

/// Parses one nonnegative integer per line; blank and `#` lines are skipped.
pub fn parse_degree_list(text: &str) -> Result<Vec<u32>> {
    let mut degrees = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let d = line
            .parse()
            .map_err(|_| Error::parse(lineno + 1, format!("bad degree `{line}`")))?;
        degrees.push(d);
    }
    if degrees.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(degrees)
}

/// CCDF over the positive entries of `degrees`.
pub fn build_ccdf(degrees: &[u32]) -> Result<CcdfTable> {
    let mut positive: Vec<u32> = degrees.iter().copied().filter(|&d| d > 0).collect();
    if positive.is_empty() {
        return Err(Error::InvalidCcdf("no samples with degree >= 1".into()));
    }
    positive.sort_unstable();
    let n = positive.len();
    let mut points = Vec::new();
    let mut i = 0;
    while i < n {
        let k = positive[i];
        // `n - i` samples are >= k because the slice is sorted.
        points.push((k, (n - i) as f64 / n as f64));
        while i < n && positive[i] == k {
            i += 1;
        }
    }
    Ok(CcdfTable {
        points,
        n_samples: Some(n),
    })
}

/// Sample Pearson correlation coefficient.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            what: "pearson inputs",
            expected: xs.len(),
            found: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::TooFewPoints {
            needed: 2,
            found: xs.len(),
        });
    }
    let line = regress(xs, ys)?;
    Ok(line.r)
}

/// Ordinary least squares `y = slope * x + intercept` plus the correlation.
#[derive(Clone, Copy, Debug)]
struct Line {
    slope: f64,
    intercept: f64,
    r: f64,
}

fn regress(xs: &[f64], ys: &[f64]) -> Result<Line> {
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 {
        return Err(Error::ZeroVariance("x"));
    }
    if syy == 0.0 {
        return Err(Error::ZeroVariance("y"));
    }
    let slope = sxy / sxx;
    let r = (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0);
    Ok(Line {
        slope,
        intercept: mean_y - slope * mean_x,
        r,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerLawFit {
    /// Slope of `log10 F` against `log10 k`.
    pub ccdf_slope: f64,
    /// Density exponent: `P(k) ~ k^-gamma` with `gamma = 1 - ccdf_slope`.
    pub gamma: f64,
    pub intercept: f64,
    pub r_percent: f64,
    pub points_used: usize,
}

pub fn fit_power_law(ccdf: &CcdfTable) -> Result<PowerLawFit> {
    let points: Vec<_> = ccdf
        .points
        .iter()
        .filter(|&&(k, f)| k >= 1 && f > 0.0)
        .collect();
    if points.len() < MIN_FIT_POINTS {
        return Err(Error::TooFewPoints {
            needed: MIN_FIT_POINTS,
            found: points.len(),
        });
    }
    let xs: Vec<f64> = points.iter().map(|&&(k, _)| f64::from(k).log10()).collect();
    let ys: Vec<f64> = points.iter().map(|&&(_, f)| f.log10()).collect();
    let line = regress(&xs, &ys)?;
    Ok(PowerLawFit {
        ccdf_slope: line.slope,
        gamma: 1.0 - line.slope,
        intercept: line.intercept,
        r_percent: 100.0 * line.r.abs(),
        points_used: points.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeibullFit {
    pub scale_b: f64,
    pub shape_c: f64,
    pub r_percent: f64,
    pub points_used: usize,
    /// Set when the fitted shape is not positive; `scale_b` is then meaningless.
    pub degenerate: bool,
}

/// Fits `F(k) = exp(-(k/b)^c)` over points with `0 < F < 1`.
pub fn fit_weibull(ccdf: &CcdfTable) -> Result<WeibullFit> {
    let points: Vec<_> = ccdf
        .points
        .iter()
        .filter(|&&(k, f)| k >= 1 && f > 0.0 && f < 1.0)
        .collect();
    if points.len() < MIN_FIT_POINTS {
        return Err(Error::TooFewPoints {
            needed: MIN_FIT_POINTS,
            found: points.len(),
        });
    }
    let xs: Vec<f64> = points.iter().map(|&&(k, _)| f64::from(k).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&&(_, f)| (-f.ln()).ln()).collect();
    let line = regress(&xs, &ys)?;
    let shape_c = line.slope;
    let degenerate = shape_c <= 0.0;
    Ok(WeibullFit {
        scale_b: if degenerate {
            f64::NAN
        } else {
            (-line.intercept / shape_c).exp()
        },
        shape_c,
        r_percent: 100.0 * line.r.abs(),
        points_used: points.len(),
        degenerate,
    })
}

//! Fit power-law and Weibull models to degree CCDFs.
//!
//! `cargo run --example fit_distributions`

use netmix::distfit::{build_ccdf, fit_power_law, fit_weibull, CcdfTable};

fn main() -> netmix::Result<()> {
    // An exact power law, F(k) = k^-1.5.
    let pl = CcdfTable::from_points((1..=50u32).map(|k| (k, f64::from(k).powf(-1.5))).collect())?;
    // An exact stretched exponential with b = 8, c = 0.6.
    let we = CcdfTable::from_points(
        (1..=60u32)
            .map(|k| (k, (-(f64::from(k) / 8.0).powf(0.6)).exp()))
            .collect(),
    )?;

    for (name, ccdf) in [("power law", &pl), ("weibull", &we)] {
        let p = fit_power_law(ccdf)?;
        let w = fit_weibull(ccdf)?;
        println!("{name} data:");
        println!("  power law  gamma {:.4}  R {:.2}%", p.gamma, p.r_percent);
        println!(
            "  weibull    b {:.4}  c {:.4}  R {:.2}%",
            w.scale_b, w.shape_c, w.r_percent
        );
    }

    // Degree sequences go through `build_ccdf`; zeros are ignored.
    let degrees = [0, 1, 1, 1, 1, 2, 2, 3, 5, 8, 13];
    let ccdf = build_ccdf(&degrees)?;
    println!("CCDF of {degrees:?}:");
    ccdf.write_tsv(std::io::stdout())?;
    Ok(())
}

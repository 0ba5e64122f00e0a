//! Locale-independent float formatting with six significant digits.

/// Formats like C's `%.6g`: fixed notation for exponents in `-4..6`,
/// scientific otherwise, trailing zeros removed.
pub fn sig6(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_owned();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_owned();
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("`e` formatting has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_owned()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

/// `x` rounded to six significant digits.
pub fn round6(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.5e}")
            .parse()
            .expect("round-trips through text")
    } else {
        x
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

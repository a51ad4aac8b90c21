//! Number formatting shared by the CSV and sample-file writers.

/// C-style scientific notation with `sig` significant digits and a signed,
/// at-least-two-digit exponent: `sci(7.58161e-7, 5) == "7.5816e-07"`.
pub fn sci(v: f64, sig: usize) -> String {
    if !v.is_finite() {
        return non_finite(v);
    }
    let s = format!("{:.*e}", sig.saturating_sub(1), v);
    let (mantissa, exp) = s
        .split_once('e')
        .expect("`e` formatting always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

/// Fixed-point with `decimals` digits after the point.
pub fn fixed(v: f64, decimals: usize) -> String {
    if !v.is_finite() {
        return non_finite(v);
    }
    format!("{v:.decimals$}")
}

fn non_finite(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scientific() {
        assert_eq!(sci(7.58161e-7, 5), "7.5816e-07");
        assert_eq!(sci(1.3637e-4, 5), "1.3637e-04");
        assert_eq!(sci(3.5451e-14, 5), "3.5451e-14");
        assert_eq!(sci(0.0, 5), "0.0000e+00");
        assert_eq!(sci(-2.5e120, 3), "-2.50e+120");
        assert_eq!(sci(0.5, 17), "5.0000000000000000e-01");
        assert_eq!(sci(f64::NEG_INFINITY, 5), "-inf");
    }

    #[test]
    fn fixed_point() {
        assert_eq!(fixed(-14.0923713918, 6), "-14.092371");
        assert_eq!(fixed(f64::NEG_INFINITY, 6), "-inf");
    }
}

//! Gaussian tail integral, Mills-ratio bounds and compensated summation.

mod extended;

pub use extended::{two_prod, two_sum, ExtendedReal};

use crate::error::{domain, Result};

/// Beyond this point `∫ₓ^∞ e^{-τ²} dτ` is below the smallest subnormal.
const TAIL_CUTOFF: f64 = 40.0;
/// Switch from the power series to the continued fraction.
const SERIES_CROSSOVER: f64 = 2.0;

/// `∫ₓ^∞ e^{-τ²} dτ`, i.e. `(√π/2)·erfc(x)`.
pub fn gauss_tail(x: f64) -> f64 {
    gauss_tail_ext(x).to_f64()
}

/// [`gauss_tail`] carried in double-double precision.
pub fn gauss_tail_ext(x: f64) -> ExtendedReal {
    if x.is_nan() {
        return ExtendedReal::from(f64::NAN);
    }
    if x >= TAIL_CUTOFF {
        return ExtendedReal::ZERO;
    }
    if x < 0.0 {
        return ExtendedReal::SQRT_PI - gauss_tail_ext(-x);
    }
    if x < SERIES_CROSSOVER {
        tail_series(x)
    } else {
        tail_continued_fraction(x)
    }
}

/// `√π/2 - x·e^{-x²}·Σ (2x²)ⁿ/(2n+1)!!`; every term positive.
fn tail_series(x: f64) -> ExtendedReal {
    let xe = ExtendedReal::from(x);
    let two_x2 = xe.square().mul_pow2(1);
    let mut term = ExtendedReal::ONE;
    let mut sum = ExtendedReal::ONE;
    let mut k = 1.0;
    loop {
        term = term * two_x2 / (2.0 * k + 1.0);
        sum += term;
        if term.hi() < 1e-34 * sum.hi() {
            break;
        }
        k += 1.0;
    }
    let gauss = (-xe.square()).exp();
    ExtendedReal::SQRT_PI.mul_pow2(-1) - xe * gauss * sum
}

/// `e^{-x²}/2 · 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(x + …))))`, evaluated
/// backwards from a fixed depth.
fn tail_continued_fraction(x: f64) -> ExtendedReal {
    let xe = ExtendedReal::from(x);
    let depth = continued_fraction_depth(x);
    let mut t = xe;
    for k in (1..=depth).rev() {
        t = xe + ExtendedReal::from(0.5 * k as f64) / t;
    }
    (-xe.square()).exp().mul_pow2(-1) / t
}

/// Depth giving double-double accuracy; convergence accelerates with x.
fn continued_fraction_depth(x: f64) -> usize {
    let d = 40.0 + 1200.0 / (x * x);
    d.ceil() as usize
}

/// The three closed-form Mills-ratio bounds at a point `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MillsTriple {
    /// `e^{-x²}/(x + √(x²+2))`
    pub lower: f64,
    /// `e^{-x²}/(x + √(x²+4/π))`
    pub upper: f64,
    /// `e^{-x²}/(2x)`
    pub crude_upper: f64,
}

pub fn mills_bounds(x: f64) -> Result<MillsTriple> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("Mills bounds need finite x > 0, got {x}"));
    }
    let xe = ExtendedReal::from(x);
    let g = (-xe.square()).exp();
    let lower = g / (xe + (xe.square() + 2.0).sqrt());
    let four_over_pi = ExtendedReal::from(4.0) / ExtendedReal::PI;
    let upper = g / (xe + (xe.square() + four_over_pi).sqrt());
    let crude_upper = g / xe.mul_pow2(1);
    Ok(MillsTriple {
        lower: lower.to_f64(),
        upper: upper.to_f64(),
        crude_upper: crude_upper.to_f64(),
    })
}

/// Smallest `x` at which `e^{-x²}/((2+ε)x)` is guaranteed to underestimate
/// the Gaussian tail: `√(2/(ε(2+ε)))`.
pub fn eps_threshold(eps: f64) -> f64 {
    (2.0 / (eps * (2.0 + eps))).sqrt()
}

/// The ε-sharpened lower bound `e^{-x²}/((2+ε)x)`, only defined on
/// `x >= √(2/(ε(2+ε)))`.
pub fn eps_lower(x: f64, eps: f64) -> Result<f64> {
    if !(eps > 0.0 && eps < 1.0) {
        return domain(format!("eps must lie in (0, 1), got {eps}"));
    }
    let threshold = eps_threshold(eps);
    if !(x >= threshold) || !x.is_finite() {
        return domain(format!(
            "x = {x} is below the threshold {threshold} for eps = {eps}"
        ));
    }
    let xe = ExtendedReal::from(x);
    let v = (-xe.square()).exp() / (xe * (2.0 + eps));
    Ok(v.to_f64())
}

/// Sums `terms` in the given order with double-double accumulation.
pub fn comp_sum<I, T>(terms: I) -> ExtendedReal
where
    I: IntoIterator<Item = T>,
    T: Into<ExtendedReal>,
{
    terms
        .into_iter()
        .fold(ExtendedReal::ZERO, |acc, t| acc + t.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate, QuadOptions};

    // mpmath, 40 digits
    const TAIL_1: f64 = 0.139_402_792_640_330_99;
    const TAIL_2: f64 = 0.004_145_534_690_336_333_7;
    const TAIL_10: f64 = 1.850_873_930_204_139_5e-45;

    fn quad_tail(x: f64) -> f64 {
        let opts = QuadOptions {
            abs_tol: 0.0,
            rel_tol: 1e-15,
            ..QuadOptions::default()
        };
        integrate(|t| (-t * t).exp(), x, x.max(0.0) + 30.0, &opts)
            .unwrap()
            .value
    }

    #[test]
    fn tail_at_zero_is_half_gaussian_integral() {
        assert!((gauss_tail(0.0) - 0.886_226_925_452_758).abs() < 1e-16);
    }

    #[test]
    fn tail_at_minus_forty_is_full_integral() {
        assert!((gauss_tail(-40.0) - 1.7724538509055159).abs() < 4e-16);
    }

    #[test]
    fn tail_matches_reference_values() {
        for (x, v) in [(1.0, TAIL_1), (2.0, TAIL_2), (10.0, TAIL_10)] {
            let got = gauss_tail(x);
            assert!(((got - v) / v).abs() < 1e-15, "x={x}: {got} vs {v}");
        }
    }

    #[test]
    fn tail_matches_quadrature_oracle() {
        let got = gauss_tail(1.0);
        let oracle = quad_tail(1.0);
        assert!(((got - oracle) / oracle).abs() < 1e-15);
    }

    #[test]
    fn tail_is_continuous_at_crossover() {
        let below = gauss_tail_ext(SERIES_CROSSOVER - 1e-14);
        let at = gauss_tail_ext(SERIES_CROSSOVER);
        // slope is -e^{-4}, so the step is ~1.8e-16
        let diff = (below - at).to_f64();
        assert!(diff > 0.0 && diff < 1e-15, "{diff}");
    }

    #[test]
    fn continued_fraction_depth_is_converged() {
        for &x in &[2.0, 2.5, 4.0, 9.0] {
            let xe = ExtendedReal::from(x);
            let mut t = xe;
            for k in (1..=20_000).rev() {
                t = xe + ExtendedReal::from(0.5 * k as f64) / t;
            }
            let deep = (-xe.square()).exp().mul_pow2(-1) / t;
            let shallow = tail_continued_fraction(x);
            let rel = ((deep - shallow) / deep).to_f64().abs();
            assert!(rel < 1e-28, "x={x}: rel {rel}");
        }
    }

    #[test]
    fn series_and_fraction_agree_near_crossover() {
        for &x in &[1.5, 2.0, 2.5] {
            let s = tail_series(x);
            let c = tail_continued_fraction(x);
            let rel = ((s - c) / c).to_f64().abs();
            assert!(rel < 1e-28, "x={x}: rel {rel}");
        }
    }

    #[test]
    fn tail_underflow_regime() {
        assert_eq!(gauss_tail(40.0), 0.0);
        assert_eq!(gauss_tail(1e6), 0.0);
    }

    #[test]
    fn mills_triple_at_one() {
        let m = mills_bounds(1.0).unwrap();
        assert!((m.lower - 0.134653).abs() < 1e-6);
        assert!((m.upper - 0.146698).abs() < 1e-6);
        assert!((m.crude_upper - 0.183940).abs() < 1e-6);
        let t = gauss_tail(1.0);
        assert!(m.lower <= t && t <= m.upper && m.upper <= m.crude_upper);
    }

    #[test]
    fn mills_tight_at_ten() {
        let m = mills_bounds(10.0).unwrap();
        let t = quad_tail(10.0);
        for b in [m.lower, m.upper, m.crude_upper] {
            assert!(((b - t) / t).abs() < 0.02);
        }
    }

    #[test]
    fn mills_crude_bound_diverges_at_zero() {
        let m = mills_bounds(1e-12).unwrap();
        assert!(m.crude_upper > 1e11);
        assert!((gauss_tail(1e-12) - 0.886226925452758).abs() < 1e-11);
    }

    #[test]
    fn mills_rejects_non_positive() {
        assert!(mills_bounds(0.0).is_err());
        assert!(mills_bounds(-1.0).is_err());
        assert!(mills_bounds(f64::NAN).is_err());
    }

    #[test]
    fn eps_lower_at_threshold() {
        let eps = 1.0 / 7.0;
        // √(2/((1/7)(15/7))) = √(98/15)
        let x = eps_threshold(eps);
        assert!((x - (98.0f64 / 15.0).sqrt()).abs() < 1e-15);
        let v = eps_lower(x, eps).unwrap();
        assert!(v < quad_tail(x));
    }

    #[test]
    fn eps_lower_at_two() {
        let v = eps_lower(2.0, 0.99).unwrap();
        assert!((v - (-4.0f64).exp() / (2.99 * 2.0)).abs() < 1e-18);
        assert!(v < TAIL_2);
    }

    #[test]
    fn eps_lower_rejects_below_threshold() {
        assert!(eps_lower(1.0, 0.5).is_err());
        assert!((eps_threshold(0.5) - (1.6f64).sqrt()).abs() < 1e-15);
        assert!(eps_lower(2.0, 1.0).is_err());
        assert!(eps_lower(2.0, 0.0).is_err());
    }

    #[test]
    fn comp_sum_examples() {
        let empty: [f64; 0] = [];
        assert_eq!(comp_sum(empty).to_f64(), 0.0);
        assert_eq!(comp_sum([1.0, 1e-20, -1.0]).to_f64(), 1e-20);
    }

    #[test]
    fn comp_sum_of_tenths() {
        // Exact oracle: 100 copies of the double nearest 0.1 sum to
        // 100 * 0.1000000000000000055511151231257827 = 10.000000000000000555111512312578
        let s = comp_sum(std::iter::repeat_n(0.1, 100));
        let exact = ExtendedReal::from(0.1) * 100.0;
        assert!((s - exact).to_f64().abs() < 1e-29);
        assert_eq!(s.hi(), 10.0);
        assert!((s.lo() - 5.551115123125783e-16).abs() < 1e-31);
    }
}

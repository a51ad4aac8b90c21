//! Truncated Shannon series, plain and Gaussian-regularized.
//!
//! ```text
//! (S_{n,r} f)(t) = Σ_{j=−n+1}^{n} f(j) · sinc(t − j) · e^{−(t−j)²/(2r²)}
//! ```
//!
//! Terms are formed in double-double and summed in increasing `j`, so the
//! result is deterministic and carries far less rounding noise than the
//! exponentially small truncation errors it is compared against.

use crate::error::{domain, Result};
use crate::signals::{shifted_sinc, Bandwidth, SampleSet};
use crate::special::{comp_sum, ExtendedReal};

/// Width `r > 0` of the Gaussian window `e^{−(t−j)²/(2r²)}`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GaussWidth(f64);

impl GaussWidth {
    pub fn new(r: f64) -> Result<Self> {
        if r > 0.0 && r.is_finite() {
            Ok(Self(r))
        } else {
            domain(format!(
                "Gaussian width must be positive and finite, got {r}"
            ))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `1/(2r²)` in double-double.
    fn inv_two_r2(self) -> ExtendedReal {
        ExtendedReal::from(self.0).square().mul_pow2(1).recip()
    }
}

/// `r = √((n−1)/(π−δ))`, the width that balances the regularization and
/// truncation errors.
pub fn optimal_width(delta: Bandwidth, n: usize) -> Result<GaussWidth> {
    if n < 2 {
        return domain(format!("optimal width needs n >= 2, got {n}"));
    }
    let r2 = ExtendedReal::from((n - 1) as f64) / delta.gap();
    GaussWidth::new(r2.sqrt().to_f64())
}

/// `sinc(t−j)·e^{−(t−j)²/(2r²)}`.
pub fn gauss_kernel(t: f64, j: i64, r: GaussWidth) -> f64 {
    let s = (ExtendedReal::PI * t).sin();
    kernel_term(s, t, j, r.inv_two_r2()).to_f64()
}

fn kernel_term(sin_pi_t: ExtendedReal, t: f64, j: i64, inv_two_r2: ExtendedReal) -> ExtendedReal {
    let d = ExtendedReal::from(t) - ExtendedReal::from(j);
    let window = (-(d.square() * inv_two_r2)).exp();
    shifted_sinc(sin_pi_t, t, j) * window
}

/// `(S_{n,r} f)(t)` rounded to the nearest double.
pub fn reconstruct_gauss(samples: &SampleSet, r: GaussWidth, t: f64) -> f64 {
    reconstruct_gauss_ext(samples, r, t).to_f64()
}

pub fn reconstruct_gauss_ext(samples: &SampleSet, r: GaussWidth, t: f64) -> ExtendedReal {
    let s = (ExtendedReal::PI * t).sin();
    let inv = r.inv_two_r2();
    comp_sum(samples.iter().map(|(j, v)| kernel_term(s, t, j, inv) * v))
}

/// Plain truncated Shannon series `Σ v_j·sinc(t−j)`.
pub fn reconstruct_shannon(samples: &SampleSet, t: f64) -> f64 {
    reconstruct_shannon_ext(samples, t).to_f64()
}

pub fn reconstruct_shannon_ext(samples: &SampleSet, t: f64) -> ExtendedReal {
    let s = (ExtendedReal::PI * t).sin();
    comp_sum(samples.iter().map(|(j, v)| shifted_sinc(s, t, j) * v))
}

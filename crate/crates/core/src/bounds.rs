//! Certified lower and upper bounds on the worst-case reconstruction error
//!
//! ```text
//! sup_{‖f‖≤1} sup_{t∈(0,1)} |f(t) − (S_{n,r} f)(t)|
//! ```
//!
//! over the unit ball of the Paley–Wiener space with bandwidth `δ`.
//!
//! The lower bound only certifies anything when `δ < π/2`, the constant
//! [`c_const`] is positive, `r` lies in the corridor
//! `2/(√(ε(2+ε))(π−δ)) ≤ r ≤ √((n−1)/(π−δ))` and `n` is large enough
//! ([`n_min`]). Those checks are made explicitly and reported as
//! [`Error::CertificateInvalid`]. The upper bound holds for every `0 < δ < π`,
//! `r > 0`, `n ≥ 2`.
//!
//! All formulas are evaluated in double-double and rounded once at the end.

use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, invalid_certificate, Error, Result};
use crate::quadrature::{integrate, QuadOptions};
use crate::reconstruct::{optimal_width, GaussWidth};
use crate::signals::Bandwidth;
use crate::special::{comp_sum, gauss_tail, ExtendedReal};

type X = ExtendedReal;

/// The sharpening parameter `0 < ε < 1` of the Mills-ratio lower bound.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MillsEpsilon(f64);

impl MillsEpsilon {
    pub fn new(eps: f64) -> Result<Self> {
        if eps > 0.0 && eps < 1.0 {
            Ok(Self(eps))
        } else {
            domain(format!("eps must lie in (0, 1), got {eps}"))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `ε(2+ε)`
    fn product(self) -> X {
        X::from(self.0) * (2.0 + self.0)
    }
}

/// The parameter quadruple `(δ, ε, n, r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    pub delta: Bandwidth,
    pub eps: MillsEpsilon,
    pub n: usize,
    pub r: GaussWidth,
}

impl BoundParams {
    pub fn new(delta: Bandwidth, eps: MillsEpsilon, n: usize, r: GaussWidth) -> Result<Self> {
        if n < 2 {
            return domain(format!("n must be >= 2, got {n}"));
        }
        Ok(Self { delta, eps, n, r })
    }

    /// Parameters with `r` at the optimal width for `n`.
    pub fn optimal(delta: Bandwidth, eps: MillsEpsilon, n: usize) -> Result<Self> {
        Self::new(delta, eps, n, optimal_width(delta, n)?)
    }

    pub fn corridor(&self) -> Result<(f64, f64)> {
        corridor(self.delta, self.eps, self.n)
    }

    /// Inclusive corridor membership.
    pub fn in_corridor(&self) -> Result<bool> {
        let (lo, hi) = self.corridor()?;
        Ok(lo <= self.r.get() && self.r.get() <= hi)
    }
}

/// A lower and an upper bound on the worst-case error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundPair {
    pub lower: f64,
    pub upper: f64,
}

/// Smallest admissible width `2/(√(ε(2+ε))(π−δ))`.
pub fn corridor_floor(delta: Bandwidth, eps: MillsEpsilon) -> f64 {
    (X::from(2.0) / (eps.product().sqrt() * delta.gap())).to_f64()
}

/// Width range `[2/(√(ε(2+ε))(π−δ)), √((n−1)/(π−δ))]` over which the lower
/// bound applies.
pub fn corridor(delta: Bandwidth, eps: MillsEpsilon, n: usize) -> Result<(f64, f64)> {
    Ok((corridor_floor(delta, eps), optimal_width(delta, n)?.get()))
}

/// The constant
///
/// ```text
/// C = sin(δ/2)·[ 4/((2+ε)(π+δ)δ) · (2/((2+ε)(π−δ)) − e^{−2πδr²}/(π+δ)) − 2/((2π−δ)(π−δ)²) ]
/// ```
///
/// May be negative; a lower bound is only certified where it is positive.
pub fn c_const(delta: Bandwidth, eps: MillsEpsilon, r: GaussWidth) -> f64 {
    c_const_ext(delta, eps, r).to_f64()
}

fn c_const_ext(delta: Bandwidth, eps: MillsEpsilon, r: GaussWidth) -> X {
    let d = X::from(delta.get());
    let gap = delta.gap();
    let sum = X::PI + d;
    let two_eps = 2.0 + eps.get();
    let r2 = X::from(r.get()).square();
    let decay = (-(X::PI.mul_pow2(1) * d * r2)).exp();
    let inner = X::from(2.0) / (gap * two_eps) - decay / sum;
    let main = X::from(4.0) / (sum * d * two_eps) * inner;
    let alias = X::from(2.0) / ((X::PI.mul_pow2(1) - d) * gap.square());
    d.mul_pow2(-1).sin() * (main - alias)
}

/// Smallest window half-size for which the optimal-width lower bound with
/// constant `c_value` is certified:
/// `max{2, ⌈4/(ε(2+ε)(π−δ)) + 1⌉, ⌈8/(π c² (π−δ)⁵) − 1⌉}`.
pub fn n_min(delta: Bandwidth, eps: MillsEpsilon, c_value: f64) -> Result<usize> {
    if !(c_value > 0.0) || !c_value.is_finite() {
        return invalid_certificate(format!("constant C = {c_value} is not positive"));
    }
    let corridor_term = corridor_n_min(delta, eps);
    let gap = delta.gap();
    let c = X::from(c_value);
    let positivity = X::from(8.0) / (X::PI * c.square() * gap.square().square() * gap) - 1.0;
    let positivity_term = positivity.to_f64().ceil();
    Ok([2.0, corridor_term as f64, positivity_term]
        .into_iter()
        .fold(2.0, f64::max) as usize)
}

/// `⌈4/(ε(2+ε)(π−δ)) + 1⌉`: below this the corridor is empty at the optimal
/// width.
pub fn corridor_n_min(delta: Bandwidth, eps: MillsEpsilon) -> usize {
    let v = X::from(4.0) / (eps.product() * delta.gap()) + 1.0;
    v.to_f64().ceil().max(2.0) as usize
}

fn require_half_band(delta: Bandwidth) -> Result<()> {
    if delta.get() < FRAC_PI_2 {
        Ok(())
    } else {
        invalid_certificate(format!(
            "the lower bound needs δ < π/2, got δ = {}",
            delta.get()
        ))
    }
}

/// Lower bound for a general width `r` in the corridor.
///
/// The returned value may be negative for small `n`: the certificate then
/// holds but says nothing.
pub fn lower_bound_general(p: &BoundParams) -> Result<f64> {
    require_half_band(p.delta)?;
    let (lo, hi) = p.corridor()?;
    let r = p.r.get();
    if !(lo <= r && r <= hi) {
        return invalid_certificate(format!("r = {r} outside the corridor [{lo}, {hi}]"));
    }
    let c = c_const_ext(p.delta, p.eps, p.r);
    if !(c.hi() > 0.0) {
        return invalid_certificate(format!("constant C = {} is not positive", c.to_f64()));
    }
    let need = corridor_n_min(p.delta, p.eps);
    if p.n < need {
        return invalid_certificate(format!("n = {} below the admissible minimum {need}", p.n));
    }

    let d = X::from(p.delta.get());
    let gap = p.delta.gap();
    let rx = X::from(r);
    let r2 = rx.square();
    let n = X::from(p.n as f64);
    let m = X::from((p.n - 1) as f64);

    let regular = c * (-(gap.square() * r2).mul_pow2(-1)).exp() / (r2 * rx);
    let tail = X::from(2.0).sqrt().mul_pow2(1) * r2 * (-(m.square() / r2.mul_pow2(1))).exp()
        / (n * (n + 0.5) * m * X::SQRT_PI);
    let prefactor = X::PI * d.mul_pow2(1).sqrt();
    Ok(((regular - tail) / prefactor).to_f64())
}

/// Closed-form lower bound at the optimal width, evaluated with a caller
/// supplied constant `c_value`.
///
/// The bound is increasing in the constant, so any certified underestimate of
/// `C` at the optimal width (for instance a uniform floor over a range of
/// `n`) still yields a certified lower bound.
pub fn lower_bound_opt_with_c(delta: Bandwidth, n: usize, c_value: f64) -> Result<f64> {
    if n < 2 {
        return domain(format!("n must be >= 2, got {n}"));
    }
    require_half_band(delta)?;
    if !(c_value > 0.0) {
        return invalid_certificate(format!("constant C = {c_value} is not positive"));
    }
    Ok(lower_opt_formula(delta, n, X::from(c_value)).to_f64())
}

fn lower_opt_formula(delta: Bandwidth, n: usize, c: X) -> X {
    let d = X::from(delta.get());
    let gap = delta.gap();
    let nn = X::from(n as f64);
    let m = X::from((n - 1) as f64);
    let m32 = m * m.sqrt();
    let g32 = gap * gap.sqrt();
    let tail = X::from(2.0).sqrt().mul_pow2(1) / (gap * X::SQRT_PI) * m32 / (nn * (nn + 0.5));
    let decay = (-(gap * m).mul_pow2(-1)).exp();
    (c * g32 - tail) * decay / (X::PI * d.mul_pow2(1).sqrt() * m32)
}

/// Lower bound at `r = √((n−1)/(π−δ))`, using the exact constant
/// `C_{r,δ,ε}` at that width.
pub fn lower_bound_opt(delta: Bandwidth, eps: MillsEpsilon, n: usize) -> Result<f64> {
    require_half_band(delta)?;
    let r = optimal_width(delta, n)?;
    let c = c_const_ext(delta, eps, r);
    let need = n_min(delta, eps, c.to_f64())?;
    if n < need {
        return invalid_certificate(format!("n = {n} below the admissible minimum {need}"));
    }
    Ok(lower_opt_formula(delta, n, c).to_f64())
}

/// The two pieces of the general upper bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperTerms {
    /// Regularization (aliasing) part, decaying like `e^{−(π−δ)²r²/2}/r`.
    pub regularization: f64,
    /// Truncation part, see [`e2_tail_bound`].
    pub truncation: f64,
}

impl UpperTerms {
    pub fn total(&self) -> f64 {
        (X::from(self.regularization) + self.truncation).to_f64()
    }
}

pub fn upper_bound_terms(delta: Bandwidth, r: GaussWidth, n: usize) -> Result<UpperTerms> {
    if n < 2 {
        return domain(format!("n must be >= 2, got {n}"));
    }
    let d = X::from(delta.get());
    let gap = delta.gap();
    let rx = X::from(r.get());
    let r2 = rx.square();
    let two_pi = X::PI.mul_pow2(1);
    let third = X::ONE + X::ONE / (two_pi * (X::PI * 3.0 - d) * r2);
    let far = third * (-(two_pi * (two_pi - d) * r2)).exp();
    let bracket = (X::ONE + far) / (gap.mul_pow2(1).sqrt() * rx) + d.mul_pow2(1).sqrt();
    let regularization = bracket * (-(gap.square() * r2).mul_pow2(-1)).exp() / (X::PI * gap * rx);
    Ok(UpperTerms {
        regularization: regularization.to_f64(),
        truncation: e2_tail_ext(r, n).to_f64(),
    })
}

/// Upper bound for an arbitrary width `r > 0`.
pub fn upper_bound_general(delta: Bandwidth, r: GaussWidth, n: usize) -> Result<f64> {
    Ok(upper_bound_terms(delta, r, n)?.total())
}

/// Upper bound at the optimal width, with the `r`-dependent factor of the
/// far aliasing terms majorized by `1 + (1 + 1/(6π))e^{−4π}`.
pub fn upper_bound_opt(delta: Bandwidth, n: usize) -> Result<f64> {
    if n < 2 {
        return domain(format!("n must be >= 2, got {n}"));
    }
    let d = X::from(delta.get());
    let gap = delta.gap();
    let nn = X::from(n as f64);
    let m = X::from((n - 1) as f64);
    let far = X::ONE + (X::ONE + X::ONE / (X::PI * 6.0)) * (-(X::PI * 4.0)).exp();
    let bracket = d.mul_pow2(1).sqrt() + m.sqrt() / nn + far / m.mul_pow2(1).sqrt();
    let decay = (-(gap * m).mul_pow2(-1)).exp();
    Ok((bracket * decay / (X::PI * (gap * m).sqrt())).to_f64())
}

/// Bound on the error from dropping samples outside `(−n, n]`:
/// `r·e^{−(n−1)²/(2r²)}/(π n √(n−1))`.
pub fn e2_tail_bound(r: GaussWidth, n: usize) -> Result<f64> {
    if n < 2 {
        return domain(format!("n must be >= 2, got {n}"));
    }
    Ok(e2_tail_ext(r, n).to_f64())
}

fn e2_tail_ext(r: GaussWidth, n: usize) -> X {
    let rx = X::from(r.get());
    let m = X::from((n - 1) as f64);
    rx * (-(m.square() / rx.square().mul_pow2(1))).exp() / (X::PI * (n as f64) * m.sqrt())
}

/// Both bounds at the optimal width.
pub fn bound_pair(delta: Bandwidth, eps: MillsEpsilon, n: usize) -> Result<BoundPair> {
    Ok(BoundPair {
        lower: lower_bound_opt(delta, eps, n)?,
        upper: upper_bound_opt(delta, n)?,
    })
}

/// Numeric verification of the two auxiliary inequalities behind the lower
/// bound, with both sides reported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaCheck {
    pub lemma1_ok: bool,
    pub lemma2_ok: bool,
    /// `∫_{−δ}^{δ} (1 − (1/√π)∫_{(ξ−π)r/√2}^{(ξ+π)r/√2} e^{−τ²}dτ) dξ`
    pub lemma1_lhs: f64,
    pub lemma1_rhs: f64,
    /// `Σ_{k=1}^{k_max} ∫_{−δ+2kπ}^{δ+2kπ} e^{−(ξ−π)²r²/2} dξ`
    pub lemma2_lhs: f64,
    /// `e^{−(π−δ)²r²/2}/((π−δ)r²)`
    pub lemma2_rhs: f64,
}

fn lemma_quad_options() -> QuadOptions {
    QuadOptions {
        abs_tol: 1e-18,
        rel_tol: 1e-14,
        max_subdivisions: 1_000_000,
    }
}

pub fn lemma_checks(
    delta: Bandwidth,
    eps: MillsEpsilon,
    r: GaussWidth,
    k_max: usize,
) -> Result<LemmaCheck> {
    if k_max < 50 {
        return domain(format!("k_max must be >= 50, got {k_max}"));
    }
    let floor = corridor_floor(delta, eps);
    if r.get() < floor {
        return invalid_certificate(format!("r = {} below the corridor floor {floor}", r.get()));
    }
    let d = delta.get();
    let gap = delta.gap();
    let rx = X::from(r.get());
    let r2 = rx.square();
    let side = X::from(2.0) / (gap * (2.0 + eps.get()))
        - (-(X::PI.mul_pow2(1) * d * r2)).exp() / (X::PI + d);
    if !(side.hi() > 0.0) {
        return invalid_certificate(format!(
            "side condition 2/((2+ε)(π−δ)) − e^{{−2πδr²}}/(π+δ) = {} is not positive",
            side.to_f64()
        ));
    }
    let opts = lemma_quad_options();
    let rv = r.get();
    let pi = std::f64::consts::PI;
    let scale = rv / std::f64::consts::SQRT_2;

    // 1 − (1/√π)∫_a^b e^{−τ²} = (tail(b) + tail(−a))/√π, no cancellation.
    let missing_mass =
        |xi: f64| (gauss_tail((xi + pi) * scale) + gauss_tail((pi - xi) * scale)) / pi.sqrt();
    let lemma1_lhs = integrate(missing_mass, -d, d, &opts)?.value;
    let decay = (-(gap.square() * r2).mul_pow2(-1)).exp();
    let lemma1_rhs = (X::from(2.0).sqrt().mul_pow2(1)
        / ((X::PI + d) * (2.0 + eps.get()) * X::SQRT_PI)
        * side
        * decay
        / (r2 * rx))
        .to_f64();

    let bump = |xi: f64| {
        let u = (xi - pi) * rv;
        (-0.5 * u * u).exp()
    };
    let pieces = (1..=k_max)
        .map(|k| {
            let c = 2.0 * k as f64 * pi;
            integrate(bump, c - d, c + d, &opts).map(|q| q.value)
        })
        .collect::<Result<Vec<_>>>()?;
    let lemma2_lhs = comp_sum(pieces).to_f64();
    let lemma2_rhs = (decay / (gap * r2)).to_f64();

    Ok(LemmaCheck {
        lemma1_ok: lemma1_lhs > lemma1_rhs,
        lemma2_ok: lemma2_lhs < lemma2_rhs,
        lemma1_lhs,
        lemma1_rhs,
        lemma2_lhs,
        lemma2_rhs,
    })
}

impl From<LemmaCheck> for (bool, bool) {
    fn from(c: LemmaCheck) -> Self {
        (c.lemma1_ok, c.lemma2_ok)
    }
}

/// Reports whether an error is a failed certificate (as opposed to a bad
/// argument or a numerical failure).
pub fn is_certificate_failure(e: &Error) -> bool {
    matches!(e, Error::CertificateInvalid(_))
}

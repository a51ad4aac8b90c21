//! Bandlimited test signals, the sinc kernel and finite sample windows.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::error::{domain, Error, Result};
use crate::format::sci;
use crate::special::{comp_sum, ExtendedReal};

/// Below this magnitude removable singularities are filled with their
/// Taylor polynomial.
const SINGULAR_EPS: f64 = 1e-8;

/// Angular band edge `δ` with `0 < δ < π`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Bandwidth(f64);

impl Bandwidth {
    pub fn new(delta: f64) -> Result<Self> {
        if delta > 0.0 && delta < PI {
            Ok(Self(delta))
        } else {
            domain(format!("bandwidth must lie in (0, π), got {delta}"))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `π − δ` in double-double.
    pub fn gap(self) -> ExtendedReal {
        ExtendedReal::PI - self.0
    }
}

/// A real bandlimited signal in the Paley–Wiener space of its bandwidth.
pub trait PwSignal {
    fn bandwidth(&self) -> Bandwidth;

    fn eval(&self, t: f64) -> f64;

    /// Extended-precision evaluation; defaults to the double value.
    fn eval_ext(&self, t: f64) -> ExtendedReal {
        ExtendedReal::from(self.eval(t))
    }

    /// `‖f‖` in L²(ℝ).
    fn declared_norm(&self) -> f64;
}

/// The unit-norm extremal signal
/// `f0(t) = sin((t−½)δ) / ((t−½)·√(πδ))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F0 {
    bandwidth: Bandwidth,
}

impl F0 {
    pub fn new(bandwidth: Bandwidth) -> Self {
        Self { bandwidth }
    }
}

impl PwSignal for F0 {
    fn bandwidth(&self) -> Bandwidth {
        self.bandwidth
    }

    fn eval(&self, t: f64) -> f64 {
        f0_eval(self.bandwidth, t)
    }

    fn eval_ext(&self, t: f64) -> ExtendedReal {
        f0_eval_ext(self.bandwidth, t)
    }

    fn declared_norm(&self) -> f64 {
        1.0
    }
}

/// A user-supplied signal backed by a closure.
pub struct FnSignal<F> {
    bandwidth: Bandwidth,
    norm: f64,
    f: F,
}

impl<F: Fn(f64) -> f64> FnSignal<F> {
    pub fn new(bandwidth: Bandwidth, norm: f64, f: F) -> Self {
        Self { bandwidth, norm, f }
    }
}

impl<F: Fn(f64) -> f64> PwSignal for FnSignal<F> {
    fn bandwidth(&self) -> Bandwidth {
        self.bandwidth
    }

    fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    fn declared_norm(&self) -> f64 {
        self.norm
    }
}

/// `sin(πx)/(πx)` with `sinc(0) = 1`.
pub fn sinc(x: f64) -> f64 {
    sinc_ext(ExtendedReal::from(x)).to_f64()
}

pub fn sinc_ext(x: ExtendedReal) -> ExtendedReal {
    let px = ExtendedReal::PI * x;
    if x.hi().abs() < SINGULAR_EPS {
        return ExtendedReal::ONE - px.square() / 6.0;
    }
    px.sin() / px
}

/// `sin(π·(t − j))/(π·(t − j))` for an integer `j`, given `sin(πt)`.
///
/// Uses `sin(π(t−j)) = (−1)^j sin(πt)` so that one sine serves a whole
/// window of nodes.
pub(crate) fn shifted_sinc(sin_pi_t: ExtendedReal, t: f64, j: i64) -> ExtendedReal {
    let d = ExtendedReal::from(t) - ExtendedReal::from(j);
    if d.hi().abs() < SINGULAR_EPS {
        let pd = ExtendedReal::PI * d;
        return ExtendedReal::ONE - pd.square() / 6.0;
    }
    let s = if j.rem_euclid(2) == 0 {
        sin_pi_t
    } else {
        -sin_pi_t
    };
    s / (ExtendedReal::PI * d)
}

pub fn f0_eval(delta: Bandwidth, t: f64) -> f64 {
    f0_eval_ext(delta, t).to_f64()
}

pub fn f0_eval_ext(delta: Bandwidth, t: f64) -> ExtendedReal {
    let d = ExtendedReal::from(delta.get());
    let scale = (ExtendedReal::PI * d).sqrt();
    let u = ExtendedReal::from(t) - 0.5;
    let ud = u * d;
    let ratio = if u.hi().abs() < SINGULAR_EPS {
        d * (ExtendedReal::ONE - ud.square() / 6.0)
    } else {
        ud.sin() / u
    };
    ratio / scale
}

/// `|f̂0(ξ)|`: `1/√(2δ)` on `[−δ, δ]`, zero elsewhere.
pub fn f0_hat_abs(delta: Bandwidth, xi: f64) -> f64 {
    if xi.abs() <= delta.get() {
        1.0 / (2.0 * delta.get()).sqrt()
    } else {
        0.0
    }
}

/// Trapezoid estimate of `(∫ |f(t)|² dt)^{1/2}` over `[−half_width, half_width]`.
pub fn pw_norm_estimate<S: PwSignal + ?Sized>(
    signal: &S,
    half_width: f64,
    step: f64,
) -> Result<f64> {
    if !(half_width > 0.0 && half_width.is_finite()) {
        return domain(format!("half_width must be positive, got {half_width}"));
    }
    if !(step > 0.0 && step.is_finite()) {
        return domain(format!("step must be positive, got {step}"));
    }
    let intervals = (2.0 * half_width / step).round().max(1.0) as u64;
    let h = 2.0 * half_width / intervals as f64;
    let sq = |i: u64| {
        let v = signal.eval(-half_width + i as f64 * h);
        v * v
    };
    let interior = comp_sum((1..intervals).map(sq));
    let ends = ExtendedReal::from(sq(0)) + sq(intervals);
    let integral = (interior + ends.mul_pow2(-1)) * h;
    Ok(integral.to_f64().max(0.0).sqrt())
}

/// The sample window `{(j, f(j)) : j = −n+1, …, n}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    n: usize,
    values: Vec<f64>,
}

impl SampleSet {
    /// Takes the `2n` values for `j = −n+1, …, n` in order.
    pub fn new(n: usize, values: Vec<f64>) -> Result<Self> {
        if n < 2 {
            return domain(format!("sample window needs n >= 2, got {n}"));
        }
        if values.len() != 2 * n {
            return domain(format!(
                "window n = {n} needs {} values, got {}",
                2 * n,
                values.len()
            ));
        }
        Ok(Self { n, values })
    }

    /// Builds a window from explicit `(j, value)` pairs, which must be exactly
    /// the consecutive nodes `−n+1, …, n`.
    pub fn from_pairs(pairs: &[(i64, f64)]) -> Result<Self> {
        if pairs.len() < 4 || !pairs.len().is_multiple_of(2) {
            return domain(format!(
                "a sample window has an even number >= 4 of entries, got {}",
                pairs.len()
            ));
        }
        let n = pairs.len() / 2;
        for (k, &(j, _)) in pairs.iter().enumerate() {
            let expected = k as i64 - n as i64 + 1;
            if j != expected {
                return domain(format!(
                    "entry {k} has node {j}, expected {expected} for window n = {n}"
                ));
            }
        }
        Self::new(n, pairs.iter().map(|&(_, v)| v).collect())
    }

    /// Samples `signal` at `j = −n+1, …, n`.
    pub fn sample<S: PwSignal + ?Sized>(signal: &S, n: usize) -> Result<Self> {
        if n < 2 {
            return domain(format!("sample window needs n >= 2, got {n}"));
        }
        let lo = -(n as i64) + 1;
        let values = (lo..=n as i64).map(|j| signal.eval(j as f64)).collect();
        Self::new(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn first_node(&self) -> i64 {
        -(self.n as i64) + 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(j, v_j)` in increasing `j`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let lo = self.first_node();
        self.values
            .iter()
            .enumerate()
            .map(move |(k, &v)| (lo + k as i64, v))
    }

    pub fn value_at(&self, j: i64) -> Option<f64> {
        let k = j - self.first_node();
        usize::try_from(k)
            .ok()
            .and_then(|k| self.values.get(k).copied())
    }

    /// `j,value` lines with 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (j, v) in self.iter() {
            let _ = writeln!(out, "{j},{}", sci(v, 17));
        }
        out
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(self.to_text().as_bytes())?;
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::read_from(text.as_bytes())
    }

    /// Reads `j,value` lines; blank lines and `#` comments are skipped.
    pub fn read_from<R: BufRead>(r: R) -> Result<Self> {
        let mut pairs = Vec::new();
        for (lineno, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || {
                Error::Parse(format!(
                    "line {}: expected `j,value`, got `{line}`",
                    lineno + 1
                ))
            };
            let (j, v) = line.split_once(',').ok_or_else(bad)?;
            let j: i64 = j.trim().parse().map_err(|_| bad())?;
            let v: f64 = v.trim().parse().map_err(|_| bad())?;
            pairs.push((j, v));
        }
        Self::from_pairs(&pairs)
    }
}

/// Samples of `f0` on the window `−n+1, …, n`.
pub fn f0_samples(delta: Bandwidth, n: usize) -> Result<SampleSet> {
    SampleSet::sample(&F0::new(delta), n)
}

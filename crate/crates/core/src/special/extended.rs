//! Double-double ("unevaluated sum") arithmetic.
//!
//! An [`ExtendedReal`] stores a value as `hi + lo` with `|lo| <= ulp(hi)/2`,
//! giving roughly 106 bits of significand. All operations are built from the
//! error-free transformations `two_sum` and `two_prod`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// `s + e == a + b` exactly, `s = fl(a + b)`.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Requires `|a| >= |b|` (or `a == 0`).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// `p + e == a * b` exactly, `p = fl(a * b)`.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

#[derive(Clone, Copy, Default, PartialEq)]
pub struct ExtendedReal {
    hi: f64,
    lo: f64,
}

impl ExtendedReal {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };
    pub const PI: Self = Self {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };
    pub const FRAC_PI_2: Self = Self {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123233995736766e-17,
    };
    pub const LN_2: Self = Self {
        hi: std::f64::consts::LN_2,
        lo: 2.3190468138462996e-17,
    };
    pub const SQRT_PI: Self = Self {
        hi: 1.772453850905516,
        lo: -7.666586499825799e-17,
    };

    /// Builds a normalized value from an arbitrary pair whose sum is the
    /// intended value.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Self { hi, lo }
    }

    pub const fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    /// Nearest double to the represented value.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn square(self) -> Self {
        let (p, e) = two_prod(self.hi, self.hi);
        let e = e + 2.0 * self.hi * self.lo;
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }

    /// Exact multiplication by a power of two (barring over/underflow).
    pub fn mul_pow2(self, k: i32) -> Self {
        let s = pow2(k);
        Self {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Self::ZERO
            } else {
                Self::from_f64(f64::NAN)
            };
        }
        let x = self.hi.sqrt();
        // One Newton step on the residual, computed exactly.
        let (p, e) = two_prod(x, x);
        let residual = (self - Self { hi: p, lo: e }).to_f64();
        Self::new(x, residual / (2.0 * x))
    }

    /// `e^self`, relative error a few units of 2^-104 away from
    /// overflow/underflow.
    pub fn exp(self) -> Self {
        if self.hi.is_nan() {
            return self;
        }
        if self.hi > 709.78 {
            return Self::from_f64(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Self::ZERO;
        }
        if self.hi == 0.0 && self.lo == 0.0 {
            return Self::ONE;
        }
        let k = (self.hi / Self::LN_2.hi).round();
        let reduced = self - Self::LN_2 * k;
        // |reduced| <= ln2/2; scale down so the Taylor series converges fast,
        // then undo with repeated squaring of expm1.
        const SQUARINGS: i32 = 10;
        let s = reduced.mul_pow2(-SQUARINGS);
        let mut term = s;
        let mut acc = s;
        let mut i = 2.0;
        loop {
            term = term * s / i;
            acc += term;
            if term.hi.abs() <= 1e-36 * acc.hi.abs().max(f64::MIN_POSITIVE) {
                break;
            }
            i += 1.0;
        }
        for _ in 0..SQUARINGS {
            acc = acc.mul_pow2(1) + acc.square();
        }
        (acc + 1.0).ldexp(k as i32)
    }

    fn ldexp(self, k: i32) -> Self {
        // Split large shifts so that 2^k itself never over/underflows.
        let mut v = self;
        let mut k = k;
        while k > 1000 {
            v = v.mul_pow2(1000);
            k -= 1000;
        }
        while k < -1000 {
            v = v.mul_pow2(-1000);
            k += 1000;
        }
        v.mul_pow2(k)
    }

    /// Simultaneous `(sin, cos)`.
    pub fn sin_cos(self) -> (Self, Self) {
        if !self.hi.is_finite() {
            return (Self::from_f64(f64::NAN), Self::from_f64(f64::NAN));
        }
        if self.hi == 0.0 && self.lo == 0.0 {
            return (Self::ZERO, Self::ONE);
        }
        let q = (self.hi / Self::FRAC_PI_2.hi).round();
        let r = self - Self::FRAC_PI_2 * q;
        let (s, c) = sin_cos_taylor(r);
        match (q as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(self) -> Self {
        self.sin_cos().1
    }

    /// Natural logarithm by Newton iteration on `exp`.
    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Self::from_f64(if self.hi == 0.0 {
                f64::NEG_INFINITY
            } else {
                f64::NAN
            });
        }
        let mut x = Self::from_f64(self.hi.ln());
        for _ in 0..2 {
            x = x + self * (-x).exp() - 1.0;
        }
        x
    }
}

/// Taylor series for `|r| <= pi/4`.
fn sin_cos_taylor(r: ExtendedReal) -> (ExtendedReal, ExtendedReal) {
    let r2 = r.square();
    let mut sin = r;
    let mut cos = ExtendedReal::ONE;
    let mut term_s = r;
    let mut term_c = ExtendedReal::ONE;
    let mut k = 1.0;
    loop {
        term_c = -(term_c * r2) / (k * (k + 1.0));
        term_s = -(term_s * r2) / ((k + 1.0) * (k + 2.0));
        cos += term_c;
        sin += term_s;
        if term_c.hi.abs() < 1e-36 && term_s.hi.abs() <= 1e-36 * r.hi.abs() {
            break;
        }
        k += 2.0;
    }
    (sin, cos)
}

fn pow2(k: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&k));
    f64::from_bits(((k + 1023) as u64) << 52)
}

impl From<f64> for ExtendedReal {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl From<i64> for ExtendedReal {
    fn from(x: i64) -> Self {
        let hi = x as f64;
        let lo = (x - hi as i64) as f64;
        Self::new(hi, lo)
    }
}

impl From<ExtendedReal> for f64 {
    fn from(x: ExtendedReal) -> f64 {
        x.to_f64()
    }
}

impl fmt::Debug for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtendedReal({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_f64(), f)
    }
}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for ExtendedReal {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for ExtendedReal {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        // IEEE-style accurate addition; survives heavy cancellation.
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Self { hi, lo }
    }
}

impl Add<f64> for ExtendedReal {
    type Output = Self;
    fn add(self, rhs: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs);
        let s2 = s2 + self.lo;
        let (hi, lo) = quick_two_sum(s1, s2);
        Self { hi, lo }
    }
}

impl Sub for ExtendedReal {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Sub<f64> for ExtendedReal {
    type Output = Self;
    fn sub(self, rhs: f64) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExtendedReal {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Mul<f64> for ExtendedReal {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        let (p, e) = two_prod(self.hi, rhs);
        let e = e + self.lo * rhs;
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

impl Div for ExtendedReal {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        if !q1.is_finite() {
            return Self::from_f64(q1);
        }
        let r = self - rhs * q1;
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * q2;
        let q3 = r.hi / rhs.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Self { hi: q1, lo: q2 } + q3
    }
}

impl Div<f64> for ExtendedReal {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        self / Self::from_f64(rhs)
    }
}

impl AddAssign for ExtendedReal {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl AddAssign<f64> for ExtendedReal {
    fn add_assign(&mut self, rhs: f64) {
        *self = *self + rhs;
    }
}

impl SubAssign for ExtendedReal {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for ExtendedReal {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Sum for ExtendedReal {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExtendedReal> for ExtendedReal {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, x| acc + *x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: ExtendedReal, b: ExtendedReal) -> f64 {
        ((a - b) / b).to_f64().abs()
    }

    #[test]
    fn two_sum_is_exact() {
        let (s, e) = two_sum(1.0, 1e-20);
        assert_eq!(s, 1.0);
        assert_eq!(e, 1e-20);
    }

    #[test]
    fn one_third_times_three() {
        let third = ExtendedReal::ONE / 3.0;
        let back = third * 3.0;
        assert!((back - 1.0).to_f64().abs() < 1e-31);
    }

    #[test]
    fn sqrt_two_squared() {
        let s = ExtendedReal::from(2.0).sqrt();
        assert!((s.square() - 2.0).to_f64().abs() < 1e-31);
    }

    #[test]
    fn sqrt_pi_constant_consistent() {
        let s = ExtendedReal::PI.sqrt();
        assert!(rel(s, ExtendedReal::SQRT_PI) < 1e-31);
    }

    #[test]
    fn exp_of_ln2_is_two() {
        let v = ExtendedReal::LN_2.exp();
        assert!(rel(v, ExtendedReal::from(2.0)) < 1e-31);
    }

    #[test]
    fn exp_matches_known_values() {
        // e to 32 digits: 2.7182818284590452353602874713527
        let e = ExtendedReal::ONE.exp();
        let e_ref = ExtendedReal::new(std::f64::consts::E, 1.4456468917292502e-16);
        assert!(rel(e, e_ref) < 1e-31);
        // exp(-x) * exp(x) == 1
        for &x in &[0.001, 0.7, 3.3, 17.25, 250.0] {
            let a = ExtendedReal::from(x).exp() * ExtendedReal::from(-x).exp();
            assert!((a - 1.0).to_f64().abs() < 1e-30, "x={x}");
        }
    }

    #[test]
    fn exp_extremes() {
        assert_eq!(ExtendedReal::from(-800.0).exp().to_f64(), 0.0);
        assert!(ExtendedReal::from(800.0).exp().to_f64().is_infinite());
        let tiny = ExtendedReal::from(-700.0).exp().to_f64();
        assert!((tiny / (-700.0f64).exp() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn sin_cos_identities() {
        for &x in &[0.1, 0.5, 1.0, 2.5, -3.0, 10.0, 123.456] {
            let (s, c) = ExtendedReal::from(x).sin_cos();
            let one = s.square() + c.square();
            assert!((one - 1.0).to_f64().abs() < 1e-30, "x={x}");
            assert!((s.to_f64() - x.sin()).abs() < 1e-15);
        }
        // sin(pi/6) = 1/2
        let s = (ExtendedReal::PI / 6.0).sin();
        assert!((s - 0.5).to_f64().abs() < 1e-31);
    }

    #[test]
    fn ln_inverts_exp() {
        for &x in &[0.5, 2.0, 1e-10, 7.5e12] {
            let v = ExtendedReal::from(x);
            assert!(rel(v.ln().exp(), v) < 1e-30);
        }
    }

    #[test]
    fn ordering_uses_low_word() {
        let a = ExtendedReal::new(1.0, 1e-20);
        let b = ExtendedReal::new(1.0, -1e-20);
        assert!(a > b);
    }
}

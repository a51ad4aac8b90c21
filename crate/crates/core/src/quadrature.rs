//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate meets `max(abs_tol, rel_tol·|I|)`. Partial results are kept in
//! double-double so that thousands of subintervals do not add rounding noise
//! of their own. Subdivision is sequential and deterministic.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::special::ExtendedReal;

#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-18,
            rel_tol: 1e-14,
            max_subdivisions: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

// Kronrod abscissae on [0, 1]; odd indices are the Gauss–Legendre 7-point nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

struct Segment {
    a: f64,
    b: f64,
    value: ExtendedReal,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            // deterministic tie-break: leftmost first
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = ExtendedReal::from(fc) * WGK[7];
    let mut gauss = ExtendedReal::from(fc) * WG[3];
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = ExtendedReal::from(f(center - dx)) + f(center + dx);
        kronrod += pair * wk;
        if i % 2 == 1 {
            gauss += pair * WG[i / 2];
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).to_f64().abs();
    Segment { a, b, value, error }
}

/// Integrates `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: &QuadOptions,
) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!(
            "integration limits must be finite: [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 0,
        });
    }
    if a > b {
        let r = integrate(f, b, a, opts)?;
        return Ok(QuadResult {
            value: -r.value,
            ..r
        });
    }

    let first = kronrod15(&f, a, b);
    let mut total = first.value;
    let mut total_err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    let mut subdivisions = 0;

    loop {
        let target = opts.abs_tol.max(opts.rel_tol * total.to_f64().abs());
        if total_err <= target {
            break;
        }
        if subdivisions >= opts.max_subdivisions {
            return Err(Error::Quadrature(format!(
                "error estimate {total_err:e} above target {target:e} after {subdivisions} subdivisions on [{a}, {b}]"
            )));
        }
        let worst = heap.pop().expect("heap never empties");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            return Err(Error::Quadrature(format!(
                "interval [{}, {}] cannot be bisected further",
                worst.a, worst.b
            )));
        }
        let left = kronrod15(&f, worst.a, mid);
        let right = kronrod15(&f, mid, worst.b);
        total = total - worst.value + left.value + right.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        subdivisions += 1;
        // guard the running error sum against drift
        if subdivisions % 64 == 0 {
            total_err = heap.iter().map(|s| s.error).sum();
        }
    }

    Ok(QuadResult {
        value: total.to_f64(),
        error_estimate: total_err,
        subdivisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let r = integrate(
            |x| x.powi(5) - 3.0 * x * x,
            0.0,
            2.0,
            &QuadOptions::default(),
        )
        .unwrap();
        assert!((r.value - (64.0 / 6.0 - 8.0)).abs() < 1e-14);
        assert_eq!(r.subdivisions, 0);
    }

    #[test]
    fn reversed_limits_flip_sign() {
        let o = QuadOptions::default();
        let f = |x: f64| x.sin();
        let a = integrate(f, 0.0, 1.0, &o).unwrap().value;
        let b = integrate(f, 1.0, 0.0, &o).unwrap().value;
        assert_eq!(a, -b);
        assert!((a - (1.0 - 1f64.cos())).abs() < 1e-15);
    }

    #[test]
    fn sharp_peak_needs_subdivision() {
        // ∫ 1/(1e-4 + x²) over [-1, 1] = 2·atan(100)/0.01
        let r = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, &QuadOptions::default()).unwrap();
        let exact = 2.0 * 100f64.atan() / 0.01;
        assert!(((r.value - exact) / exact).abs() < 1e-13);
        assert!(r.subdivisions > 0);
    }

    #[test]
    fn subdivision_cap_is_reported() {
        let opts = QuadOptions {
            abs_tol: 0.0,
            rel_tol: 0.0,
            max_subdivisions: 5,
        };
        let err = integrate(|x| x.abs().sqrt(), -1.0, 1.0, &opts).unwrap_err();
        assert!(matches!(err, Error::Quadrature(_)));
    }
}

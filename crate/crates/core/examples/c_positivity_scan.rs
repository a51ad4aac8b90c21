//! Where is the constant C positive? Scan δ with ε = 1/20 and the
//! smallest width r = 1/√(π−δ).

use std::f64::consts::PI;

use gauss_shannon::{c_const, Bandwidth, GaussWidth, MillsEpsilon};

fn c_at(delta: f64, eps: MillsEpsilon) -> gauss_shannon::Result<f64> {
    let r = GaussWidth::new(1.0 / (PI - delta).sqrt())?;
    Ok(c_const(Bandwidth::new(delta)?, eps, r))
}

fn main() -> gauss_shannon::Result<()> {
    let eps = MillsEpsilon::new(0.05)?;
    let (lo, hi) = (PI / 200.0, 49.0 * PI / 100.0);
    let steps = 200;
    let mut min = (f64::NAN, f64::INFINITY);
    for k in 0..steps {
        let d = lo + (hi - lo) * k as f64 / (steps - 1) as f64;
        let c = c_at(d, eps)?;
        if c < min.1 {
            min = (d, c);
        }
    }
    println!(
        "min C on [π/200, 49π/100]: {:.6e} at δ = {:.6}",
        min.1, min.0
    );
    for (label, d) in [
        ("π/1000", PI / 1000.0),
        ("π/400", PI / 400.0),
        ("0.499999π", 0.499999 * PI),
    ] {
        println!("C at δ = {label}: {:.6e}", c_at(d, eps)?);
    }
    Ok(())
}

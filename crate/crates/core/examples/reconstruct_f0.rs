//! Reconstruct the extremal signal f0 from its 2n samples around the unit
//! interval and compare against the exact values.

use std::f64::consts::FRAC_PI_4;

use gauss_shannon::{f0_eval, f0_samples, optimal_width, reconstruct_gauss, Bandwidth};

fn main() -> gauss_shannon::Result<()> {
    let delta = Bandwidth::new(FRAC_PI_4)?;
    for n in [7, 13, 25] {
        let samples = f0_samples(delta, n)?;
        let r = optimal_width(delta, n)?;
        println!("n = {n}, r = {:.6}", r.get());
        for t in [0.1, 0.25, 0.5, 0.75, 0.9] {
            let exact = f0_eval(delta, t);
            let approx = reconstruct_gauss(&samples, r, t);
            println!(
                "  t = {t:<4}  f0 = {exact:.16}  S f0 = {approx:.16}  err = {:.3e}",
                (exact - approx).abs()
            );
        }
    }
    Ok(())
}

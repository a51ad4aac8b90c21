//! The plain truncated Shannon series against the Gaussian-regularized one
//! on the same samples.

use std::f64::consts::FRAC_PI_4;

use gauss_shannon::{
    f0_eval, f0_samples, optimal_width, reconstruct_gauss, reconstruct_shannon, Bandwidth,
};

fn main() -> gauss_shannon::Result<()> {
    let delta = Bandwidth::new(FRAC_PI_4)?;
    println!(
        "{:>4} {:>12} {:>12} {:>10}",
        "n", "plain", "regularized", "ratio"
    );
    for n in [5, 10, 25, 50, 100] {
        let samples = f0_samples(delta, n)?;
        let r = optimal_width(delta, n)?;
        let (mut plain, mut regular) = (0.0f64, 0.0f64);
        for j in 1..100 {
            let t = j as f64 / 100.0;
            let f = f0_eval(delta, t);
            plain = plain.max((f - reconstruct_shannon(&samples, t)).abs());
            regular = regular.max((f - reconstruct_gauss(&samples, r, t)).abs());
        }
        println!(
            "{n:>4} {plain:>12.4e} {regular:>12.4e} {:>10.2e}",
            plain / regular
        );
    }
    Ok(())
}

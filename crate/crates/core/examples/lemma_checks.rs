//! Numerical checks of the two integral inequalities the lower bound rests
//! on, for the optimal width at each window size.

use std::f64::consts::FRAC_PI_4;

use gauss_shannon::bounds::is_certificate_failure;
use gauss_shannon::{lemma_checks, optimal_width, Bandwidth, GaussWidth, MillsEpsilon};

fn main() -> gauss_shannon::Result<()> {
    let delta = Bandwidth::new(FRAC_PI_4)?;
    let eps = MillsEpsilon::new(1.0 / 7.0)?;
    for n in (7..=25).step_by(6) {
        let c = lemma_checks(delta, eps, optimal_width(delta, n)?, 100)?;
        println!(
            "n = {n:>2}: mass deficit {:.4e} > {:.4e} ({}), aliasing sum {:.4e} < {:.4e} ({})",
            c.lemma1_lhs, c.lemma1_rhs, c.lemma1_ok, c.lemma2_lhs, c.lemma2_rhs, c.lemma2_ok
        );
    }
    match lemma_checks(delta, eps, GaussWidth::new(0.5)?, 100) {
        Err(e) if is_certificate_failure(&e) => println!("r = 0.5: {e}"),
        other => println!("r = 0.5: {other:?}"),
    }
    Ok(())
}

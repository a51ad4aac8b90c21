//! Lower and upper bounds on the worst-case reconstruction error, the
//! constant C behind the lower bound and the smallest admissible window.

use std::f64::consts::FRAC_PI_4;

use gauss_shannon::bounds::{c_const, corridor};
use gauss_shannon::format::sci;
use gauss_shannon::{bound_pair, n_min, optimal_width, Bandwidth, MillsEpsilon};

fn main() -> gauss_shannon::Result<()> {
    let delta = Bandwidth::new(FRAC_PI_4)?;
    let eps = MillsEpsilon::new(1.0 / 7.0)?;

    let c7 = c_const(delta, eps, optimal_width(delta, 7)?);
    println!("C at n = 7: {c7:.10}");
    println!("smallest admissible n: {}", n_min(delta, eps, c7)?);

    println!(
        "{:>4} {:>12} {:>12} {:>22}",
        "n", "lower", "upper", "width corridor"
    );
    for n in (7..=41).step_by(2) {
        let b = bound_pair(delta, eps, n)?;
        let (lo, hi) = corridor(delta, eps, n)?;
        println!(
            "{n:>4} {:>12} {:>12}   [{lo:.4}, {hi:.4}]",
            sci(b.lower, 5),
            sci(b.upper, 5)
        );
    }

    match bound_pair(delta, eps, 5) {
        Ok(_) => println!("n = 5 unexpectedly certified"),
        Err(e) => println!("n = 5: {e}"),
    }
    Ok(())
}

//! The Gaussian tail integral next to its closed-form bounds.

use gauss_shannon::special::eps_threshold;
use gauss_shannon::{eps_lower, gauss_tail, mills_bounds};

fn main() -> gauss_shannon::Result<()> {
    println!(
        "{:>6} {:>14} {:>14} {:>14} {:>14}",
        "x", "lower", "tail", "upper", "crude"
    );
    for x in [0.1, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 20.0] {
        let m = mills_bounds(x)?;
        println!(
            "{x:>6} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6e}",
            m.lower,
            gauss_tail(x),
            m.upper,
            m.crude_upper
        );
    }
    let eps = 1.0 / 7.0;
    let x0 = eps_threshold(eps);
    println!("\nε = 1/7 sharpened bound holds from x = {x0:.6}");
    for x in [x0, x0 + 1.0, x0 + 5.0] {
        let b = eps_lower(x, eps)?;
        println!("  x = {x:.4}: bound {b:.6e}, tail {:.6e}", gauss_tail(x));
    }
    Ok(())
}

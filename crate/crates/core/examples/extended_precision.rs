//! Double-double arithmetic: where plain doubles lose the answer and the
//! extended type keeps it.

use gauss_shannon::{comp_sum, gauss_tail, ExtendedReal};

fn main() {
    let tiny = 1e-20;
    let naive = (1.0 + tiny) - 1.0;
    let ext = (ExtendedReal::from(1.0) + tiny) - 1.0;
    println!(
        "(1 + 1e-20) - 1: double {naive:e}, extended {:e}",
        ext.to_f64()
    );

    let terms = [1e16, 1.0, -1e16, 1.0];
    println!(
        "sum of {terms:?}: naive {}, compensated {}",
        terms.iter().sum::<f64>(),
        comp_sum(terms.iter().copied())
    );

    let e = ExtendedReal::ONE.exp();
    println!("e = {:?}", e);
    println!("pi = {:?}", ExtendedReal::PI);
    println!(
        "sqrt(2)^2 - 2 = {:e}",
        (ExtendedReal::from(2.0).sqrt().square() - 2.0).to_f64()
    );

    // √π/2 − ∫_0^x e^{−τ²}dτ cancels to nothing in doubles long before x = 10.
    let near_total = std::f64::consts::PI.sqrt() / 2.0 - gauss_tail(10.0);
    println!(
        "tail(10) = {:e}; recovered from the complementary integral in doubles: {:e}",
        gauss_tail(10.0),
        std::f64::consts::PI.sqrt() / 2.0 - near_total
    );
}

//! Reconstruct a user-supplied bandlimited signal. Here
//! g(t) = (sin(δt/2)/(δt/2))², whose spectrum is a triangle on [−δ, δ].

use std::f64::consts::PI;

use gauss_shannon::{
    optimal_width, pw_norm_estimate, reconstruct_gauss, Bandwidth, FnSignal, PwSignal, SampleSet,
};

fn main() -> gauss_shannon::Result<()> {
    let d = 2.0;
    let delta = Bandwidth::new(d)?;
    let g = move |t: f64| {
        let a = 0.5 * d * t;
        if a == 0.0 {
            1.0
        } else {
            (a.sin() / a).powi(2)
        }
    };
    let signal = FnSignal::new(delta, (4.0 * PI / (3.0 * d)).sqrt(), g);
    println!(
        "declared norm {:.6}, trapezoid estimate {:.6}",
        signal.declared_norm(),
        pw_norm_estimate(&signal, 2000.0, 0.01)?
    );

    for n in [8, 16, 32] {
        let samples = SampleSet::sample(&signal, n)?;
        let r = optimal_width(delta, n)?;
        let err = (1..100)
            .map(|j| {
                let t = j as f64 / 100.0;
                (signal.eval(t) - reconstruct_gauss(&samples, r, t)).abs()
            })
            .fold(0.0, f64::max);
        println!("n = {n:>2}: max error on (0, 1) = {err:.3e}");
    }
    Ok(())
}

//! Fit ln(error) against n and compare the slopes with the theoretical
//! rate −(π−δ)/2.

use std::f64::consts::{FRAC_PI_4, PI};

use gauss_shannon::{rate_fit, repro_table, Bandwidth, Column, ExperimentConfig, MillsEpsilon};

fn main() -> gauss_shannon::Result<()> {
    let config = ExperimentConfig::new(
        Bandwidth::new(FRAC_PI_4)?,
        MillsEpsilon::new(1.0 / 7.0)?,
        (15..=25).step_by(2).collect(),
        99,
    )?;
    let rows = repro_table(&config)?;
    let target = -(PI - FRAC_PI_4) / 2.0;
    println!("theoretical slope {target:.4}");
    for column in [Column::Lower, Column::Measured, Column::Upper] {
        let s = rate_fit(&rows, column)?;
        println!(
            "{column:?}: {s:.4} ({:+.1}%)",
            100.0 * (s - target) / target.abs()
        );
    }
    Ok(())
}

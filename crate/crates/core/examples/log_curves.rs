//! Natural logarithms of the three error curves over a long range of n,
//! ready for plotting. Pass a path to write the CSV to a file.

use std::f64::consts::FRAC_PI_4;

use gauss_shannon::{emit_csv, repro_table, Bandwidth, ExperimentConfig, MillsEpsilon};

fn main() -> gauss_shannon::Result<()> {
    let config = ExperimentConfig::new(
        Bandwidth::new(FRAC_PI_4)?,
        MillsEpsilon::new(1.0 / 7.0)?,
        (7..=25).collect(),
        99,
    )?;
    let csv = emit_csv(&repro_table(&config)?, true);
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

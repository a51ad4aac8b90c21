//! Lower bound, measured error and upper bound for δ = π/4, ε = 1/7 and
//! n = 7, 9, …, 25, printed as CSV.

use gauss_shannon::{emit_csv, repro_table, ExperimentConfig};

fn main() -> gauss_shannon::Result<()> {
    let rows = repro_table(&ExperimentConfig::table1())?;
    print!("{}", emit_csv(&rows, false));
    let sandwiched = rows.iter().filter(|r| r.is_sandwiched()).count();
    eprintln!(
        "lower < measured < upper on {sandwiched}/{} rows",
        rows.len()
    );
    Ok(())
}

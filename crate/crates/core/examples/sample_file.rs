//! Write a sample window to a text file, read it back and reconstruct from
//! it. The same file works with `gauss-shannon reconstruct --samples`.

use std::f64::consts::FRAC_PI_4;
use std::fs::File;
use std::io::BufReader;

use gauss_shannon::{f0_samples, optimal_width, reconstruct_gauss, Bandwidth, SampleSet};

fn main() -> gauss_shannon::Result<()> {
    let delta = Bandwidth::new(FRAC_PI_4)?;
    let samples = f0_samples(delta, 7)?;
    let path = std::env::temp_dir().join("gauss_shannon_f0_n7.txt");
    samples.write_to(File::create(&path)?)?;
    println!("wrote {}:\n{}", path.display(), samples.to_text());

    let back = SampleSet::read_from(BufReader::new(File::open(&path)?))?;
    assert_eq!(back, samples);
    let r = optimal_width(delta, back.n())?;
    println!(
        "S f0(0.5) from file = {:.16}",
        reconstruct_gauss(&back, r, 0.5)
    );
    Ok(())
}

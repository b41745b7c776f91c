//! Runs the randomness battery on a file at every stage of encryption and
//! prints the comparison table.
//!
//! ```text
//! cargo run --release --example randomness_table -- [INPUT] [SHOTS]
//! ```

use qpp::cli::{run_demo, ReportFormat};
use qpp::KeyMaterial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let input = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/assets/cat.jpg").into());
    let shots: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);

    let key = KeyMaterial::from_file(concat!(env!("CARGO_MANIFEST_DIR"), "/assets/demo.key"))?;
    let plaintext = std::fs::read(&input)?;
    let report = run_demo(&key, &plaintext, shots, qpp::ShotRng::DEFAULT_SEED)?;
    print!("{}", report.render(ReportFormat::Text));
    Ok(())
}

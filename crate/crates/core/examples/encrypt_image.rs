//! Encrypts a file into superposition states, writes the QPPS file, reads
//! it back and decrypts.
//!
//! ```text
//! cargo run --release --example encrypt_image -- [INPUT] [KEY_FILE]
//! ```

use std::time::Instant;

use qpp::cipher::{self, read_file, write_file};
use qpp::KeyMaterial;

fn main() -> qpp::Result<()> {
    let mut args = std::env::args().skip(1);
    let input = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/assets/cat.jpg").into());
    let key_path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/assets/demo.key").into());

    let key = KeyMaterial::from_file(&key_path)?;
    let plaintext = std::fs::read(&input)?;

    let t = Instant::now();
    let cs = cipher::encrypt(&key, &plaintext)?;
    println!("{} bytes -> {} states in {:.2?}", plaintext.len(), cs.block_count(), t.elapsed());

    let dir = tempfile::tempdir()?;
    let path = dir.path().join("image.qpps");
    write_file(&path, &cs)?;
    println!("QPPS file: {} bytes", std::fs::metadata(&path)?.len());

    let first = cs.states()[0].amps();
    println!("first state: {first:?}");

    let t = Instant::now();
    let recovered = cipher::decrypt(&key, &read_file(&path)?)?;
    println!("decrypted in {:.2?}, identical: {}", t.elapsed(), recovered == plaintext);
    Ok(())
}

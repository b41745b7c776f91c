//! Builds the permutation pad and the block dispatch sequence from a key.
//!
//! ```text
//! cargo run --example pad_and_dispatch -- [KEY_FILE]
//! ```

use qpp::keyschedule::build_dispatch;
use qpp::{KeyMaterial, PermutationPad, PAD_SIZE};

fn main() -> qpp::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/assets/demo.key").into());
    let key = KeyMaterial::from_file(&path)?;
    let pad = PermutationPad::build(&key);

    println!("key: {} bytes from {path}", key.len());
    println!("pad: {} operators, fingerprint {:016x}", pad.len(), pad.fingerprint());
    println!("key space: 56 x log2(24) = {:.4} bits", pad.entropy_bits());

    let mut seen = [0usize; 24];
    let all = qpp::pads::enumerate_s4();
    for (i, (op, inv)) in pad.ops().iter().zip(pad.inverse_ops()).enumerate() {
        let idx = all.iter().position(|p| p == op).unwrap();
        seen[idx] += 1;
        if i < 8 {
            println!("  P[{i:2}] = {:?}  inverse {:?}", op.map(), inv.map());
        }
    }
    let distinct = seen.iter().filter(|&&c| c > 0).count();
    println!("  ... {distinct} of the 24 permutations occur in the pad");

    let dispatch = build_dispatch(&key, 32, PAD_SIZE);
    println!("dispatch for the first 32 blocks: {dispatch:?}");
    Ok(())
}

//! The classical variant: each 2-bit block is permuted directly, so the
//! ciphertext is a byte string of the same length.
//!
//! ```text
//! cargo run --example basis_mode -- "some text"
//! ```

use qpp::{EncryptionContext, KeyMaterial};

fn hex(b: &[u8]) -> String {
    b.iter().map(|x| format!("{x:02x}")).collect()
}

fn main() -> qpp::Result<()> {
    let msg = std::env::args().nth(1).unwrap_or_else(|| "permutation pad".into());
    let key = KeyMaterial::from_file(concat!(env!("CARGO_MANIFEST_DIR"), "/assets/demo.key"))?;

    let ctx = EncryptionContext::for_message(&key, msg.len());
    let ct = ctx.encrypt_basis(msg.as_bytes())?;
    println!("plaintext : {}", hex(msg.as_bytes()));
    println!("ciphertext: {}", hex(&ct));
    println!("dispatch  : {:?}", &ctx.dispatch()[..ctx.dispatch().len().min(16)]);

    let back = ctx.decrypt_basis(&ct)?;
    println!("recovered : {}", String::from_utf8_lossy(&back));

    let mut wrong = key.as_bytes().to_vec();
    wrong[0] ^= 1;
    let wrong = KeyMaterial::new(wrong)?;
    let garbled = qpp::cipher::decrypt_basis(&wrong, &ct)?;
    println!("one key bit flipped: {}", hex(&garbled));
    Ok(())
}

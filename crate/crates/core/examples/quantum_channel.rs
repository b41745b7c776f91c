//! Serializes ciphertext states to the QPPS wire format and shows how the
//! reader rejects damaged streams.
//!
//! ```text
//! cargo run --example quantum_channel
//! ```

use qpp::cipher::{self, deserialize, serialize, HEADER_LEN, STATE_LEN};
use qpp::KeyMaterial;

fn main() -> qpp::Result<()> {
    let key = KeyMaterial::new((0u8..32).collect::<Vec<_>>())?;
    let cs = cipher::encrypt(&key, b"QPP")?;
    let wire = serialize(&cs);

    println!("{} states, {} bytes on the wire", cs.block_count(), wire.len());
    println!("header: {:02x?}", &wire[..HEADER_LEN]);
    println!("state 0: {:02x?}", &wire[HEADER_LEN..HEADER_LEN + STATE_LEN]);

    let back = deserialize(&wire)?;
    println!("roundtrip: {:?}", String::from_utf8(cipher::decrypt(&key, &back)?).unwrap());

    let mut damaged = Vec::new();
    damaged.push(("truncated", wire[..wire.len() - 1].to_vec()));
    let mut extra = wire.clone();
    extra.push(0);
    damaged.push(("trailing byte", extra));
    let mut magic = wire.clone();
    magic[0] = b'Z';
    damaged.push(("bad magic", magic));
    let mut version = wire.clone();
    version[4] = 9;
    damaged.push(("bad version", version));
    let mut norm = wire.clone();
    norm[HEADER_LEN..HEADER_LEN + 8].copy_from_slice(&2.0f64.to_le_bytes());
    damaged.push(("scaled amplitude", norm));

    for (what, bytes) in damaged {
        match deserialize(&bytes) {
            Ok(_) => println!("{what}: accepted"),
            Err(e) => println!("{what}: {e}"),
        }
    }
    Ok(())
}

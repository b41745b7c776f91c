//! What an eavesdropper sees after applying Ĥ† to intercepted states.
//!
//! Every permutation fixes Ĥ|00>, so a block that is 00 after key
//! randomization always comes back as |00>. The other blocks spread over
//! outcomes that depend on the secret pad.
//!
//! ```text
//! cargo run --release --example adversary
//! ```

use qpp::cipher::{self, sample_states};
use qpp::ent::{analyze, report_table};
use qpp::{KeyMaterial, ShotRng};

fn main() -> qpp::Result<()> {
    let key = KeyMaterial::from_file(concat!(env!("CARGO_MANIFEST_DIR"), "/assets/demo.key"))?;

    let cs = cipher::encrypt(&key, &[0x00, 0x1b, 0xff])?;
    let view = cs.adversary_view();
    for (i, (c, a)) in cs.states().iter().zip(view.states()).enumerate() {
        let p = a.probabilities().map(|x| format!("{x:.2}"));
        println!("block {i:2}: ciphertext probs {:?} | after Ĥ† {p:?}", c.probabilities().map(|x| format!("{x:.2}")));
    }

    let image = std::fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/assets/cat.jpg"))?;
    let cs = cipher::encrypt(&key, &image)?;
    let seed = ShotRng::DEFAULT_SEED;
    let direct = analyze(&sample_states(&cs, 1, seed))?;
    let attacked = analyze(&sample_states(&cs.adversary_view(), 1, seed))?;
    println!();
    print!("{}", report_table(&[("Ciphertext", direct), ("After Ĥ†", attacked)]));
    Ok(())
}

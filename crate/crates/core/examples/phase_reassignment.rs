//! Applies all 24 permutations to each superposition state and reports
//! whether the result is still in the set S up to a global phase.
//!
//! ```text
//! cargo run --example phase_reassignment
//! ```

use qpp::pads::enumerate_s4;
use qpp::superposition::{build_h_hat, SuperpositionSetS};

const TOL: f64 = 1e-12;

fn main() {
    let h = build_h_hat();
    let set = SuperpositionSetS::new();
    let perms = enumerate_s4();

    for v in 0..4 {
        let psi = h.column(v);
        let mut stays = 0;
        let mut lines = Vec::new();
        for p in &perms {
            let out = p.permute(&psi);
            let verdict = match set.phase_match(&out, TOL) {
                Some(k) if k == v && out.max_abs_diff(&psi) < TOL => "unchanged".to_string(),
                Some(k) => {
                    let phase = (out.amps()[3] / set.states()[k].amps()[3]).arg();
                    format!("phase {:+.3}π times Ĥ|{k:02b}>", phase / std::f64::consts::PI)
                }
                None => "leaves S".to_string(),
            };
            if !verdict.starts_with("leaves") {
                stays += 1;
            }
            lines.push(format!("    {:?}: {verdict}", p.map()));
        }
        println!("Ĥ|{v:02b}>: {stays}/24 permutations stay in S");
        if v == 1 {
            lines.iter().for_each(|l| println!("{l}"));
        }
    }
}

//! Prints the superposition operator Ĥ, its action on each basis state, and
//! checks that it diagonalizes the permutation P1.
//!
//! ```text
//! cargo run --example superposition_operator
//! ```

use num_complex::Complex64;
use qpp::superposition::{build_h_hat, build_hh_tensor, verify_p1_diagonalization, P1};
use qpp::Statevector4;

fn fmt(z: Complex64) -> String {
    format!("{:+.3}{:+.3}i", z.re, z.im)
}

fn main() -> qpp::Result<()> {
    let h = build_h_hat();
    println!("Ĥ =");
    for row in h.rows() {
        println!("  [{}]", row.map(fmt).join(", "));
    }

    let labels = ["|00>", "|01>", "|10>", "|11>"];
    for (v, label) in labels.iter().enumerate() {
        let psi = h.apply(&Statevector4::basis(v));
        println!("Ĥ{label} = ({})", psi.amps().map(fmt).join(", "));
    }

    let hh = build_hh_tensor();
    println!("\nH⊗H for comparison (real entries only):");
    for row in hh.rows() {
        println!("  [{}]", row.map(|z| format!("{:+.1}", z.re)).join(", "));
    }

    let d = verify_p1_diagonalization()?;
    println!("\nP1 = {:?}", P1.map());
    println!("Ĥ† P1 Ĥ diagonal: ({})", d.diagonal().map(fmt).join(", "));
    println!("largest off-diagonal modulus: {:e}", d.max_off_diagonal());
    println!("determinant of Ĥ: {}", fmt(h.determinant()));
    Ok(())
}

//! The superposition operator Ĥ and its relatives.
//!
//! Ĥ is the eigenbasis of the 4-cycle permutation P1 (`0→2, 2→3, 3→1, 1→0`):
//!
//! ```text
//!       1 [ 1   1  -1  -1 ]
//! Ĥ  =  - [ 1  -1  -i   i ]
//!       2 [ 1  -1   i  -i ]
//!         [ 1   1   1   1 ]
//! ```
//!
//! Every column has four amplitudes of modulus ½, so every `Ĥ|v>` measures
//! uniformly. `Ĥ|00>` is the all-½ vector, which every permutation fixes.
//!
//! Erratum: `Ĥ|10>` is column 2, `½(-1, -i, i, 1)`. Expansions that print
//! `+½` for the `|00>` amplitude disagree with the matrix and would not be
//! orthogonal to `Ĥ|00>`. The matrix is used everywhere here.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pads::Perm4;
use crate::qstate::{Statevector4, Unitary4, EXACT_TOL};

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The permutation Ĥ diagonalizes.
pub const P1: Perm4 = Perm4::from_static([2, 0, 3, 1]);

pub fn build_h_hat() -> Unitary4 {
    Unitary4::from_rows_unchecked([
        [c(0.5, 0.0), c(0.5, 0.0), c(-0.5, 0.0), c(-0.5, 0.0)],
        [c(0.5, 0.0), c(-0.5, 0.0), c(0.0, -0.5), c(0.0, 0.5)],
        [c(0.5, 0.0), c(-0.5, 0.0), c(0.0, 0.5), c(0.0, -0.5)],
        [c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0)],
    ])
}

pub fn build_h_hat_dagger() -> Unitary4 {
    build_h_hat().dagger()
}

/// Hadamard on each qubit, `H ⊗ H`.
pub fn build_hh_tensor() -> Unitary4 {
    Unitary4::from_rows_unchecked([
        [c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0), c(0.5, 0.0)],
        [c(0.5, 0.0), c(-0.5, 0.0), c(0.5, 0.0), c(-0.5, 0.0)],
        [c(0.5, 0.0), c(0.5, 0.0), c(-0.5, 0.0), c(-0.5, 0.0)],
        [c(0.5, 0.0), c(-0.5, 0.0), c(-0.5, 0.0), c(0.5, 0.0)],
    ])
}

/// The four states `Ĥ|v>`, the only states the encryptor ever permutes.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperpositionSetS {
    states: [Statevector4; 4],
}

impl SuperpositionSetS {
    pub fn new() -> Self {
        let h = build_h_hat();
        Self {
            states: std::array::from_fn(|v| h.column(v)),
        }
    }

    pub fn states(&self) -> &[Statevector4; 4] {
        &self.states
    }

    /// Index `r` with `psi = e^{iθ} Ĥ|r>`, if any.
    pub fn phase_match(&self, psi: &Statevector4, tol: f64) -> Option<usize> {
        self.states.iter().position(|s| psi.phase_equivalent(s, tol))
    }
}

impl Default for SuperpositionSetS {
    fn default() -> Self {
        Self::new()
    }
}

/// `D = Ĥ† P1 Ĥ`, checked to be `diag(1, -1, i, -i)` within 1e-12.
pub fn verify_p1_diagonalization() -> Result<Unitary4> {
    check_diagonalizes(&build_h_hat(), &P1)
}

pub(crate) fn check_diagonalizes(h: &Unitary4, p: &Perm4) -> Result<Unitary4> {
    let d = h.dagger().compose(&p.to_unitary().compose(h));
    let off = d.max_off_diagonal();
    if off >= EXACT_TOL {
        return Err(Error::DiagonalizationFailure(format!(
            "off-diagonal magnitude {off:e}"
        )));
    }
    let want = [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)];
    for (i, (got, want)) in d.diagonal().iter().zip(want).enumerate() {
        if (got - want).norm() >= EXACT_TOL {
            return Err(Error::DiagonalizationFailure(format!(
                "diagonal[{i}] = {got}, expected {want}"
            )));
        }
    }
    Ok(d)
}

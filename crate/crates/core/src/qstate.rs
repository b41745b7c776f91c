//! Two-qubit statevectors and 4x4 unitaries.
//!
//! Basis index `v` stands for `|b1 b0>` with `v = 2*b1 + b0`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::keyschedule::{self, DomainTag, KeyMaterial, Keystream};

pub type Amplitude = Complex64;

/// Tolerance for exact algebraic identities.
pub const EXACT_TOL: f64 = 1e-12;
/// Tolerance for accumulated pipelines.
pub const PIPELINE_TOL: f64 = 1e-9;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Normalized state of a 2-qubit register.
#[derive(Clone, Copy, PartialEq)]
pub struct Statevector4 {
    amps: [Amplitude; 4],
}

impl Statevector4 {
    /// Checks finiteness and that the squared norm is 1 within [`PIPELINE_TOL`].
    pub fn new(amps: [Amplitude; 4]) -> Result<Self> {
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sv = Self { amps };
        let n = sv.norm_sqr();
        if (n - 1.0).abs() > PIPELINE_TOL {
            return Err(Error::NotNormalized(n));
        }
        Ok(sv)
    }

    pub(crate) fn from_amps_unchecked(amps: [Amplitude; 4]) -> Self {
        Self { amps }
    }

    /// The standard basis state `|v>`.
    pub fn basis(v: usize) -> Self {
        assert!(v < 4, "basis index {v} out of range");
        let mut amps = [ZERO; 4];
        amps[v] = ONE;
        Self { amps }
    }

    pub fn amps(&self) -> &[Amplitude; 4] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Multiplies every amplitude by `e^{i theta}`.
    pub fn with_global_phase(&self, theta: f64) -> Self {
        let ph = Complex64::from_polar(1.0, theta);
        Self {
            amps: self.amps.map(|a| a * ph),
        }
    }

    pub fn probabilities(&self) -> [f64; 4] {
        self.amps.map(|a| a.norm_sqr())
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// One Born-rule measurement. Advances `rng` exactly once.
    pub fn measure_shot(&self, rng: &mut ShotRng) -> usize {
        let u = rng.next_f64();
        let probs = self.probabilities();
        let mut acc = 0.0;
        for (v, p) in probs.iter().enumerate() {
            acc += p;
            if u < acc {
                return v;
            }
        }
        // Rounding left `acc` just under u: fall back to the last reachable outcome.
        probs.iter().rposition(|&p| p > 0.0).unwrap_or(3)
    }

    /// Index of the basis state this vector sits on, if its probability is at
    /// least `1 - tol`.
    pub fn collapse_expect_basis(&self, tol: f64) -> Result<usize> {
        let probs = self.probabilities();
        let (v, &p) = probs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .expect("four outcomes");
        if p >= 1.0 - tol {
            Ok(v)
        } else {
            Err(Error::NotBasisState {
                index: None,
                max_prob: p,
            })
        }
    }

    /// True iff `self = e^{i theta} other` within `tol` per amplitude. The
    /// phase is read off the first amplitude of `other` whose modulus
    /// exceeds `tol`.
    pub fn phase_equivalent(&self, other: &Self, tol: f64) -> bool {
        let Some(k) = other.amps.iter().position(|a| a.norm() > tol) else {
            return false;
        };
        let ratio = self.amps[k] / other.amps[k];
        let r = ratio.norm();
        if r == 0.0 || !r.is_finite() {
            return false;
        }
        let phase = ratio / r;
        self.amps
            .iter()
            .zip(other.amps.iter())
            .all(|(a, b)| (a - phase * b).norm() <= tol)
    }
}

impl fmt::Debug for Statevector4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.amps.iter().map(|a| format!("{:+.6}{:+.6}i", a.re, a.im)))
            .finish()
    }
}

/// A 4x4 unitary, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Unitary4 {
    m: [[Amplitude; 4]; 4],
}

impl Unitary4 {
    /// Rejects non-finite entries and anything with `|U^dagger U - I| > 1e-12`.
    pub fn new(m: [[Amplitude; 4]; 4]) -> Result<Self> {
        if m.iter().flatten().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let u = Self { m };
        let dev = u.dagger().compose(&u).max_abs_diff(&Self::identity());
        if dev > EXACT_TOL {
            return Err(Error::NotUnitary(dev));
        }
        Ok(u)
    }

    pub(crate) fn from_rows_unchecked(m: [[Amplitude; 4]; 4]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        let mut m = [[ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = ONE;
        }
        Self { m }
    }

    pub fn rows(&self) -> &[[Amplitude; 4]; 4] {
        &self.m
    }

    pub fn get(&self, row: usize, col: usize) -> Amplitude {
        self.m[row][col]
    }

    /// Column `c`, i.e. the image of `|c>`, read without arithmetic.
    pub fn column(&self, c: usize) -> Statevector4 {
        Statevector4::from_amps_unchecked([self.m[0][c], self.m[1][c], self.m[2][c], self.m[3][c]])
    }

    /// `U * psi`.
    pub fn apply(&self, psi: &Statevector4) -> Statevector4 {
        let amps = std::array::from_fn(|r| {
            self.m[r]
                .iter()
                .zip(psi.amps.iter())
                .fold(ZERO, |acc, (u, a)| acc + u * a)
        });
        Statevector4::from_amps_unchecked(amps)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self {
            m: std::array::from_fn(|r| std::array::from_fn(|c| self.m[c][r].conj())),
        }
    }

    /// `self * rhs`: `rhs` acts first.
    pub fn compose(&self, rhs: &Self) -> Self {
        Self {
            m: std::array::from_fn(|r| {
                std::array::from_fn(|c| (0..4).fold(ZERO, |acc, k| acc + self.m[r][k] * rhs.m[k][c]))
            }),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_off_diagonal(&self) -> f64 {
        (0..4)
            .flat_map(|r| (0..4).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| self.m[r][c].norm())
            .fold(0.0, f64::max)
    }

    pub fn diagonal(&self) -> [Amplitude; 4] {
        std::array::from_fn(|i| self.m[i][i])
    }

    /// Determinant by cofactor expansion.
    pub fn determinant(&self) -> Amplitude {
        fn det3(m: [[Complex64; 3]; 3]) -> Complex64 {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        (0..4).fold(ZERO, |acc, c| {
            let minor = std::array::from_fn(|r| {
                let cols: Vec<usize> = (0..4).filter(|&k| k != c).collect();
                std::array::from_fn(|k| self.m[r + 1][cols[k]])
            });
            let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
            acc + self.m[0][c] * det3(minor) * sign
        })
    }
}

impl fmt::Debug for Unitary4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Unitary4 [")?;
        for row in &self.m {
            write!(f, "  ")?;
            for a in row {
                write!(f, "{:+.4}{:+.4}i  ", a.re, a.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Per-shot uniform source. Same mixer as [`Keystream`]; single owner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShotRng {
    state: u64,
}

impl ShotRng {
    pub const DEFAULT_SEED: u64 = 0xC0FFEE;

    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Stream for the `index`-th state under a global seed:
    /// initial state `mix64(mix64(seed) ^ index)`, so distinct seeds never
    /// share per-state streams.
    pub fn for_state(seed: u64, index: u64) -> Self {
        Self::new(keyschedule::mix64(keyschedule::mix64(seed) ^ index))
    }

    /// Seeds from the key's shot domain.
    pub fn from_key(key: &KeyMaterial) -> Self {
        Self::new(Keystream::seed(key, DomainTag::Shots).state())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        keyschedule::finalize(self.state)
    }

    /// Top 53 bits over 2^53, in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

//! Permutations of the four basis states and the key-derived pad.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::keyschedule::{self, fisher_yates_perm, DomainTag, KeyMaterial, Keystream};
use crate::qstate::{Statevector4, Unitary4};

/// Number of operators in a permutation pad.
pub const PAD_SIZE: usize = 56;

const FINGERPRINT_INIT: u64 = 0x243F_6A88_85A3_08D3;

/// An element of S4. `map[v]` is the image of basis index `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4 {
    map: [usize; 4],
}

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4 { map: [0, 1, 2, 3] };

    pub fn new(map: [usize; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &v in &map {
            if v >= 4 || seen[v] {
                return Err(Error::NotPermutation(map));
            }
            seen[v] = true;
        }
        Ok(Self { map })
    }

    /// For compile-time constants; panics on a non-bijection.
    pub const fn from_static(map: [usize; 4]) -> Self {
        let mut seen = [false; 4];
        let mut i = 0;
        while i < 4 {
            assert!(map[i] < 4 && !seen[map[i]], "not a permutation");
            seen[map[i]] = true;
            i += 1;
        }
        Self { map }
    }

    pub(crate) fn from_map_unchecked(map: [usize; 4]) -> Self {
        debug_assert!(Self::new(map).is_ok());
        Self { map }
    }

    pub fn map(&self) -> &[usize; 4] {
        &self.map
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn invert(&self) -> Self {
        let mut inv = [0; 4];
        for (v, &img) in self.map.iter().enumerate() {
            inv[img] = v;
        }
        Self { map: inv }
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn after(&self, rhs: &Self) -> Self {
        Self {
            map: rhs.map.map(|v| self.map[v]),
        }
    }

    /// `M[r][c] = 1` iff `r = map[c]`, so `M|c> = |map[c]>`.
    pub fn to_unitary(&self) -> Unitary4 {
        let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (c, &r) in self.map.iter().enumerate() {
            m[r][c] = Complex64::new(1.0, 0.0);
        }
        Unitary4::from_rows_unchecked(m)
    }

    /// Moves amplitude `c` to position `map[c]`. Same result as applying
    /// [`Perm4::to_unitary`], without the arithmetic.
    pub fn permute(&self, psi: &Statevector4) -> Statevector4 {
        let src = psi.amps();
        let mut out = *src;
        for (c, &r) in self.map.iter().enumerate() {
            out[r] = src[c];
        }
        Statevector4::from_amps_unchecked(out)
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.map;
        write!(f, "Perm4(0→{a}, 1→{b}, 2→{c}, 3→{d})")
    }
}

/// Free-function form of [`Perm4::to_unitary`].
pub fn perm_to_unitary(p: &Perm4) -> Unitary4 {
    p.to_unitary()
}

/// All 24 permutations, lexicographic by map.
pub fn enumerate_s4() -> Vec<Perm4> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if let Ok(p) = Perm4::new([a, b, c, d]) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// The permutation pad and its elementwise inverse. Position in the pad is
/// generation order.
#[derive(Clone, PartialEq, Eq)]
pub struct PermutationPad {
    ops: Vec<Perm4>,
    inverse_ops: Vec<Perm4>,
}

impl PermutationPad {
    /// 56 successive Fisher–Yates draws from the key's pad stream.
    /// Repeats are allowed.
    pub fn build(key: &KeyMaterial) -> Self {
        let mut ks = Keystream::seed(key, DomainTag::Pad);
        let ops = (0..PAD_SIZE).map(|_| fisher_yates_perm(&mut ks)).collect();
        Self::from_ops_unchecked(ops)
    }

    /// Pad from explicit operators; must hold exactly [`PAD_SIZE`] of them.
    pub fn from_ops(ops: Vec<Perm4>) -> Result<Self> {
        if ops.len() != PAD_SIZE {
            return Err(Error::BadPadLength {
                expected: PAD_SIZE,
                found: ops.len(),
            });
        }
        Ok(Self::from_ops_unchecked(ops))
    }

    fn from_ops_unchecked(ops: Vec<Perm4>) -> Self {
        let inverse_ops = ops.iter().map(Perm4::invert).collect();
        Self { ops, inverse_ops }
    }

    pub fn ops(&self) -> &[Perm4] {
        &self.ops
    }

    pub fn inverse_ops(&self) -> &[Perm4] {
        &self.inverse_ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Bookkeeping entropy: `len * log2(24)` bits.
    pub fn entropy_bits(&self) -> f64 {
        self.ops.len() as f64 * 24f64.log2()
    }

    /// 64-bit fingerprint of the concatenated maps, for checking that two
    /// parties derived the same pad.
    pub fn fingerprint(&self) -> u64 {
        keyschedule::fold_bytes(
            FINGERPRINT_INIT,
            self.ops.iter().flat_map(|p| p.map.map(|v| v as u8)),
        )
    }
}

impl fmt::Debug for PermutationPad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationPad")
            .field("len", &self.ops.len())
            .field("fingerprint", &format_args!("{:#018x}", self.fingerprint()))
            .finish()
    }
}

/// Free-function form of [`PermutationPad::build`].
pub fn build_pad(key: &KeyMaterial) -> PermutationPad {
    PermutationPad::build(key)
}

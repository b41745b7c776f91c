//! Key expansion.
//!
//! A pre-shared key file is expanded into independent, tagged 64-bit streams
//! (one for the permutation pad shuffle, one for dispatch, one for shot
//! sampling), plus the cyclic XOR used to randomize plaintext. The mixer is a
//! SplitMix64-style construction, fixed bit for bit so that independent
//! implementations derive the same pad and dispatch from the same key. It is
//! not a CSPRNG.

use std::path::Path;

use crate::error::{Error, Result};
use crate::pads::Perm4;

/// Minimum key length in bytes (256 bits).
pub const MIN_KEY_LEN: usize = 32;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
const FOLD_INIT: u64 = 0x243F_6A88_85A3_08D3;

/// SplitMix64 output finalizer.
#[inline]
pub(crate) fn finalize(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Adds the golden gamma, then finalizes.
#[inline]
pub fn mix64(z: u64) -> u64 {
    finalize(z.wrapping_add(GOLDEN_GAMMA))
}

/// Absorbs `bytes` into `init`, one `mix64` per byte.
pub(crate) fn fold_bytes(init: u64, bytes: impl IntoIterator<Item = u8>) -> u64 {
    bytes
        .into_iter()
        .fold(init, |s, b| mix64(s ^ u64::from(b)))
}

/// Raw pre-shared key bytes. Opaque, at least [`MIN_KEY_LEN`] long.
#[derive(Clone, PartialEq, Eq)]
pub struct KeyMaterial(Vec<u8>);

impl KeyMaterial {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.len() < MIN_KEY_LEN {
            return Err(Error::KeyTooShort {
                len: bytes.len(),
                min: MIN_KEY_LEN,
            });
        }
        Ok(Self(bytes))
    }

    /// Reads a key file verbatim: no decoding, no trimming.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::new(std::fs::read(path)?)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Debug for KeyMaterial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KeyMaterial({} bytes)", self.0.len())
    }
}

/// Stream domain. Distinct tags give unrelated streams from the same key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum DomainTag {
    Pad = 0x01,
    Dispatch = 0x02,
    Shots = 0x03,
}

/// Deterministic 64-bit stream derived from a key and a domain tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Keystream {
    state: u64,
    tag: DomainTag,
}

impl Keystream {
    pub fn seed(key: &KeyMaterial, tag: DomainTag) -> Self {
        let state = fold_bytes(FOLD_INIT ^ tag as u64, key.as_bytes().iter().copied());
        Self { state, tag }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn tag(&self) -> DomainTag {
        self.tag
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        finalize(self.state)
    }

    /// Uniform integer in `0..n` for `n` in `2..=256`, by rejection sampling
    /// on the low byte of successive outputs.
    pub fn next_below(&mut self, n: usize) -> usize {
        assert!((2..=256).contains(&n), "next_below: n = {n} out of 2..=256");
        let limit = 256 - (256 % n);
        loop {
            let b = (self.next_u64() & 0xFF) as usize;
            if b < limit {
                return b % n;
            }
        }
    }
}

/// `out[i] = data[i] ^ key[i mod keylen]`. Self-inverse.
pub fn xor_randomize(data: &[u8], key: &KeyMaterial) -> Vec<u8> {
    data.iter()
        .zip(key.as_bytes().iter().cycle())
        .map(|(d, k)| d ^ k)
        .collect()
}

/// Fisher–Yates over `[0, 1, 2, 3]`, drawing `j` for `i = 3, 2, 1` from
/// `draw(i + 1)`, which must return a value below its argument.
pub fn fisher_yates_with(mut draw: impl FnMut(usize) -> usize) -> Perm4 {
    let mut p = [0usize, 1, 2, 3];
    for i in (1..4).rev() {
        let j = draw(i + 1);
        debug_assert!(j <= i);
        p.swap(i, j);
    }
    Perm4::from_map_unchecked(p)
}

/// One uniformly random element of S4 from the stream.
pub fn fisher_yates_perm(ks: &mut Keystream) -> Perm4 {
    fisher_yates_with(|n| ks.next_below(n))
}

/// Pad positions for `n_blocks` blocks, one operator per block, drawn from
/// the key's dispatch stream.
pub fn build_dispatch(key: &KeyMaterial, n_blocks: usize, pad_size: usize) -> Vec<usize> {
    let mut ks = Keystream::seed(key, DomainTag::Dispatch);
    (0..n_blocks).map(|_| ks.next_below(pad_size)).collect()
}

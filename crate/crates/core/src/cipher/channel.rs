//! QPPS: the on-disk stand-in for a quantum channel.
//!
//! ```text
//! offset  size  field
//! 0       4     magic "QPPS"
//! 4       1     version (0x01)
//! 5       8     block_count, u64 little-endian
//! 13      1     pad_bits
//! 14      64*n  per state: 4 x (re, im), f64 little-endian
//! ```

use std::path::Path;

use num_complex::Complex64;

use super::CipherStates;
use crate::error::{Error, Result};
use crate::qstate::Statevector4;

pub const MAGIC: &[u8; 4] = b"QPPS";
pub const VERSION: u8 = 0x01;
pub const HEADER_LEN: usize = 14;
pub const STATE_LEN: usize = 64;

/// Squared-norm slack accepted when reading states back.
const NORM_SLACK: f64 = 1e-6;

pub fn serialize(cs: &CipherStates) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + STATE_LEN * cs.block_count());
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.extend_from_slice(&(cs.block_count() as u64).to_le_bytes());
    out.push(cs.pad_bits());
    for s in cs.states() {
        for a in s.amps() {
            out.extend_from_slice(&a.re.to_le_bytes());
            out.extend_from_slice(&a.im.to_le_bytes());
        }
    }
    out
}

pub fn deserialize(bytes: &[u8]) -> Result<CipherStates> {
    let magic_len = bytes.len().min(4);
    if bytes[..magic_len] != MAGIC[..magic_len] {
        return Err(Error::BadMagic);
    }
    if bytes.len() < HEADER_LEN {
        return Err(Error::TruncatedStream {
            expected: HEADER_LEN,
            found: bytes.len(),
        });
    }
    if bytes[4] != VERSION {
        return Err(Error::BadVersion(bytes[4]));
    }
    let count = u64::from_le_bytes(bytes[5..13].try_into().expect("8 bytes"));
    let pad_bits = bytes[13];
    if pad_bits > 7 {
        return Err(Error::BadPadBits(pad_bits));
    }
    let expected = usize::try_from(count)
        .ok()
        .and_then(|n| n.checked_mul(STATE_LEN))
        .and_then(|n| n.checked_add(HEADER_LEN))
        .unwrap_or(usize::MAX);
    if bytes.len() < expected {
        return Err(Error::TruncatedStream {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Error::TrailingBytes(bytes.len() - expected));
    }

    let states = bytes[HEADER_LEN..]
        .chunks_exact(STATE_LEN)
        .enumerate()
        .map(|(index, chunk)| {
            let f = |k: usize| f64::from_le_bytes(chunk[8 * k..8 * k + 8].try_into().unwrap());
            let amps = std::array::from_fn(|v| Complex64::new(f(2 * v), f(2 * v + 1)));
            let sv = Statevector4::from_amps_unchecked(amps);
            let norm = sv.norm_sqr();
            if !norm.is_finite() || (norm - 1.0).abs() > NORM_SLACK {
                return Err(Error::NormViolation { index, norm });
            }
            Ok(sv)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CipherStates::new(states, pad_bits))
}

pub fn write_file(path: impl AsRef<Path>, cs: &CipherStates) -> Result<()> {
    std::fs::write(path, serialize(cs))?;
    Ok(())
}

pub fn read_file(path: impl AsRef<Path>) -> Result<CipherStates> {
    deserialize(&std::fs::read(path)?)
}

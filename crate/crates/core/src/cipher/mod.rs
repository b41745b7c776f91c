//! QPP encryption pipelines.
//!
//! Superposition mode, per 2-bit block `v` of the XOR-randomized plaintext:
//! `|v> → Ĥ|v> → P_d|Ĥ v>`, where `P_d` is the pad operator dispatched to
//! that block. Decryption applies `P_d†`, then `Ĥ†`, measures, and undoes
//! the XOR. Basis mode skips Ĥ and permutes the block value directly.
//!
//! Wrong keys are usually caught because the decrypted state is not a basis
//! state, but this is not authentication: there is no MAC.

mod blocks;
mod channel;
mod sampling;

pub use blocks::{blocks_to_bytes, bytes_to_blocks};
pub use channel::{deserialize, read_file, serialize, write_file, HEADER_LEN, MAGIC, STATE_LEN, VERSION};
pub use sampling::sample_states;

use crate::error::{Error, Result};
use crate::keyschedule::{build_dispatch, xor_randomize, KeyMaterial};
use crate::pads::{PermutationPad, PAD_SIZE};
use crate::qstate::{Statevector4, Unitary4, PIPELINE_TOL};
use crate::superposition::{build_h_hat, build_h_hat_dagger};

/// Ciphertext statevectors in block order.
#[derive(Debug, Clone, PartialEq)]
pub struct CipherStates {
    states: Vec<Statevector4>,
    pad_bits: u8,
}

impl CipherStates {
    pub fn new(states: Vec<Statevector4>, pad_bits: u8) -> Self {
        Self { states, pad_bits }
    }

    pub fn states(&self) -> &[Statevector4] {
        &self.states
    }

    pub fn block_count(&self) -> usize {
        self.states.len()
    }

    /// Trailing padding bits in the final byte. Always 0 for byte input.
    pub fn pad_bits(&self) -> u8 {
        self.pad_bits
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Applies `u` to every state.
    pub fn map_unitary(&self, u: &Unitary4) -> Self {
        Self {
            states: self.states.iter().map(|s| u.apply(s)).collect(),
            pad_bits: self.pad_bits,
        }
    }

    /// What an eavesdropper holding Ĥ gets by undoing it on each state.
    pub fn adversary_view(&self) -> Self {
        self.map_unitary(&build_h_hat_dagger())
    }
}

/// Pad and dispatch for one message, derived up front.
#[derive(Debug, Clone)]
pub struct EncryptionContext {
    key: KeyMaterial,
    pad: PermutationPad,
    dispatch: Vec<usize>,
}

impl EncryptionContext {
    pub fn new(key: &KeyMaterial, n_blocks: usize) -> Self {
        Self::with_pad(key, PermutationPad::build(key), n_blocks)
    }

    /// Uses a caller-supplied pad, with the key's normal dispatch.
    pub fn with_pad(key: &KeyMaterial, pad: PermutationPad, n_blocks: usize) -> Self {
        Self {
            key: key.clone(),
            pad,
            dispatch: build_dispatch(key, n_blocks, PAD_SIZE),
        }
    }

    /// Context sized for a plaintext of `len` bytes.
    pub fn for_message(key: &KeyMaterial, len: usize) -> Self {
        Self::new(key, 4 * len)
    }

    pub fn pad(&self) -> &PermutationPad {
        &self.pad
    }

    pub fn dispatch(&self) -> &[usize] {
        &self.dispatch
    }

    pub fn key(&self) -> &KeyMaterial {
        &self.key
    }

    fn check_blocks(&self, n_blocks: usize) -> Result<()> {
        if n_blocks != self.dispatch.len() {
            return Err(Error::DispatchMismatch {
                expected: n_blocks,
                found: self.dispatch.len(),
            });
        }
        Ok(())
    }

    fn randomized_blocks(&self, plaintext: &[u8]) -> Result<Vec<u8>> {
        let blocks = bytes_to_blocks(&xor_randomize(plaintext, &self.key));
        self.check_blocks(blocks.len())?;
        Ok(blocks)
    }

    pub fn encrypt(&self, plaintext: &[u8]) -> Result<CipherStates> {
        let h = build_h_hat();
        let blocks = self.randomized_blocks(plaintext)?;
        let states = blocks
            .iter()
            .zip(&self.dispatch)
            .map(|(&v, &d)| self.pad.ops()[d].permute(&h.column(v as usize)))
            .collect();
        Ok(CipherStates::new(states, 0))
    }

    pub fn decrypt(&self, cs: &CipherStates) -> Result<Vec<u8>> {
        if cs.pad_bits() != 0 || !cs.block_count().is_multiple_of(4) {
            return Err(Error::BadBlockCount(cs.block_count()));
        }
        self.check_blocks(cs.block_count())?;
        let hd = build_h_hat_dagger();
        let blocks = cs
            .states()
            .iter()
            .zip(&self.dispatch)
            .enumerate()
            .map(|(i, (s, &d))| {
                let r = hd.apply(&self.pad.inverse_ops()[d].permute(s));
                r.collapse_expect_basis(PIPELINE_TOL)
                    .map(|v| v as u8)
                    .map_err(|e| match e {
                        Error::NotBasisState { max_prob, .. } => Error::NotBasisState {
                            index: Some(i),
                            max_prob,
                        },
                        e => e,
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(xor_randomize(&blocks_to_bytes(&blocks)?, &self.key))
    }

    pub fn encrypt_basis(&self, plaintext: &[u8]) -> Result<Vec<u8>> {
        let blocks = self.randomized_blocks(plaintext)?;
        let out: Vec<u8> = blocks
            .iter()
            .zip(&self.dispatch)
            .map(|(&v, &d)| self.pad.ops()[d].image(v as usize) as u8)
            .collect();
        blocks_to_bytes(&out)
    }

    pub fn decrypt_basis(&self, ciphertext: &[u8]) -> Result<Vec<u8>> {
        let blocks = bytes_to_blocks(ciphertext);
        self.check_blocks(blocks.len())?;
        let out: Vec<u8> = blocks
            .iter()
            .zip(&self.dispatch)
            .map(|(&c, &d)| self.pad.inverse_ops()[d].image(c as usize) as u8)
            .collect();
        Ok(xor_randomize(&blocks_to_bytes(&out)?, &self.key))
    }
}

pub fn encrypt(key: &KeyMaterial, plaintext: &[u8]) -> Result<CipherStates> {
    EncryptionContext::for_message(key, plaintext.len()).encrypt(plaintext)
}

pub fn decrypt(key: &KeyMaterial, cs: &CipherStates) -> Result<Vec<u8>> {
    if !cs.block_count().is_multiple_of(4) {
        return Err(Error::BadBlockCount(cs.block_count()));
    }
    EncryptionContext::new(key, cs.block_count()).decrypt(cs)
}

pub fn encrypt_basis(key: &KeyMaterial, plaintext: &[u8]) -> Result<Vec<u8>> {
    EncryptionContext::for_message(key, plaintext.len()).encrypt_basis(plaintext)
}

pub fn decrypt_basis(key: &KeyMaterial, ciphertext: &[u8]) -> Result<Vec<u8>> {
    EncryptionContext::for_message(key, ciphertext.len()).decrypt_basis(ciphertext)
}

/// The states `Ĥ|v>` for the randomized plaintext, before any permutation.
pub fn superpose(key: &KeyMaterial, plaintext: &[u8]) -> CipherStates {
    let h = build_h_hat();
    let states = bytes_to_blocks(&xor_randomize(plaintext, key))
        .into_iter()
        .map(|v| h.column(v as usize))
        .collect();
    CipherStates::new(states, 0)
}

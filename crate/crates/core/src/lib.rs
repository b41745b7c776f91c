//! Quantum Permutation Pad (QPP) encryption of 2-qubit superposition states,
//! simulated on a classical statevector.
//!
//! The pipeline: XOR the plaintext with the key, split it into 2-bit blocks,
//! map each block `v` to the superposition `Ĥ|v>`, and apply a key-selected
//! permutation from a 56-entry pad. Decryption runs the inverse permutation,
//! `Ĥ†`, a measurement, and the XOR again.
//!
//! ```
//! use qpp::{cipher, KeyMaterial};
//!
//! let key = KeyMaterial::new(vec![0x5a; 32]).unwrap();
//! let states = cipher::encrypt(&key, b"hello").unwrap();
//! assert_eq!(states.block_count(), 20);
//! assert_eq!(cipher::decrypt(&key, &states).unwrap(), b"hello");
//! ```

pub mod cipher;
pub mod cli;
pub mod ent;
pub mod error;
pub mod keyschedule;
pub mod pads;
pub mod qstate;
pub mod superposition;

pub use cipher::{CipherStates, EncryptionContext};
pub use ent::EntReport;
pub use error::{Error, Result};
pub use keyschedule::{DomainTag, KeyMaterial, Keystream};
pub use pads::{Perm4, PermutationPad, PAD_SIZE};
pub use qstate::{ShotRng, Statevector4, Unitary4};

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("key is {len} bytes, at least {min} required")]
    KeyTooShort { len: usize, min: usize },

    #[error("{} did not collapse to a basis state (max probability {max_prob:.6})", describe_state(index))]
    NotBasisState { index: Option<usize>, max_prob: f64 },

    #[error("block count {0} is not a multiple of 4")]
    BadBlockCount(usize),

    #[error("bad magic, not a QPPS stream")]
    BadMagic,

    #[error("unsupported QPPS version {0:#04x}")]
    BadVersion(u8),

    #[error("stream truncated: expected {expected} bytes, found {found}")]
    TruncatedStream { expected: usize, found: usize },

    #[error("stream has {0} trailing bytes after the declared states")]
    TrailingBytes(usize),

    #[error("invalid pad_bits value {0}")]
    BadPadBits(u8),

    #[error("state {index} has squared norm {norm}, not 1")]
    NormViolation { index: usize, norm: f64 },

    #[error("statevector is not normalized (squared norm {0})")]
    NotNormalized(f64),

    #[error("amplitude is not finite")]
    NonFinite,

    #[error("matrix is not unitary (max |U^dagger U - I| = {0:e})")]
    NotUnitary(f64),

    #[error("not a permutation of 0..4: {0:?}")]
    NotPermutation([usize; 4]),

    #[error("permutation pad must hold {expected} operators, got {found}")]
    BadPadLength { expected: usize, found: usize },

    #[error("dispatch has {found} indices for {expected} blocks")]
    DispatchMismatch { expected: usize, found: usize },

    #[error("superposition operator failed to diagonalize P1: {0}")]
    DiagonalizationFailure(String),

    #[error("input of {len} bytes is too short, need at least {min}")]
    InputTooShort { len: usize, min: usize },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

fn describe_state(index: &Option<usize>) -> String {
    match index {
        Some(i) => format!("state {i}"),
        None => "state".to_string(),
    }
}

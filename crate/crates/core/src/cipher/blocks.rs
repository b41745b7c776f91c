use crate::error::{Error, Result};

/// Splits bytes into 2-bit blocks, MSB first, four per byte.
pub fn bytes_to_blocks(data: &[u8]) -> Vec<u8> {
    data.iter()
        .flat_map(|&b| [b >> 6, (b >> 4) & 3, (b >> 2) & 3, b & 3])
        .collect()
}

/// Inverse of [`bytes_to_blocks`]. Only the low two bits of each block are used.
pub fn blocks_to_bytes(blocks: &[u8]) -> Result<Vec<u8>> {
    if !blocks.len().is_multiple_of(4) {
        return Err(Error::BadBlockCount(blocks.len()));
    }
    Ok(blocks
        .chunks_exact(4)
        .map(|q| (q[0] & 3) << 6 | (q[1] & 3) << 4 | (q[2] & 3) << 2 | (q[3] & 3))
        .collect())
}

/// Packs 2-bit values MSB first, zero-filling the last byte.
#[derive(Debug, Default)]
pub(crate) struct BitPacker {
    out: Vec<u8>,
    acc: u8,
    filled: u8,
}

impl BitPacker {
    pub(crate) fn with_capacity(bytes: usize) -> Self {
        Self {
            out: Vec::with_capacity(bytes),
            ..Self::default()
        }
    }

    pub(crate) fn push(&mut self, v: usize) {
        self.acc = (self.acc << 2) | (v as u8 & 3);
        self.filled += 1;
        if self.filled == 4 {
            self.out.push(self.acc);
            self.acc = 0;
            self.filled = 0;
        }
    }

    pub(crate) fn finish(mut self) -> Vec<u8> {
        if self.filled > 0 {
            self.out.push(self.acc << (2 * (4 - self.filled)));
        }
        self.out
    }
}

use super::blocks::BitPacker;
use super::CipherStates;
use crate::qstate::ShotRng;

/// Measures every state `shots_per_state` times and packs the 2-bit outcomes
/// MSB first, four per byte, states in order. Each state gets its own
/// [`ShotRng::for_state`] stream, so the result does not depend on the order
/// states are visited in.
///
/// Output length is `ceil(block_count * shots_per_state / 4)`.
pub fn sample_states(cs: &CipherStates, shots_per_state: usize, seed: u64) -> Vec<u8> {
    assert!(shots_per_state >= 1, "shots_per_state must be at least 1");
    let total = cs.block_count() * shots_per_state;
    let mut packer = BitPacker::with_capacity(total.div_ceil(4));
    for (i, state) in cs.states().iter().enumerate() {
        let mut rng = ShotRng::for_state(seed, i as u64);
        for _ in 0..shots_per_state {
            packer.push(state.measure_shot(&mut rng));
        }
    }
    packer.finish()
}

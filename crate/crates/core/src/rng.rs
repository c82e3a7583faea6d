//! Counter-keyed random streams.
//!
//! Monte Carlo work is cut into fixed-size blocks. Block `b` under seed `s`
//! always draws from ChaCha8 keyed by `s` on stream `b`, so the samples a
//! block sees do not depend on which worker runs it or in what order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const BLOCK: u64 = 1 << 12;

pub fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

/// Runs `samples` draws split into blocks and merges the per-block states
/// with `merge` in block order.
pub(crate) fn blocked<S, I, F, M>(samples: u64, seed: u64, init: I, body: F, merge: M) -> S
where
    S: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut ChaCha8Rng, &mut S) + Sync + Send,
    M: Fn(S, S) -> S + Sync + Send,
{
    let blocks = samples.div_ceil(BLOCK);
    let states: Vec<S> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = block_rng(seed, b);
            let mut state = init();
            let count = BLOCK.min(samples - b * BLOCK);
            for _ in 0..count {
                body(&mut rng, &mut state);
            }
            state
        })
        .collect();
    states.into_iter().fold(init(), merge)
}

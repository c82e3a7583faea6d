use num_integer::Integer;
use rand::Rng;

use crate::error::{Error, Result};
use crate::rng;
use crate::stats::Proportion;

/// Monte Carlo estimate of `Pr[gcd(X_{n,d}) = 1]` for the standard walk on
/// `Z^d`.
pub fn multidim_primitivity(n: usize, d: usize, samples: u64, seed: u64) -> Result<Proportion> {
    if d < 2 {
        return Err(Error::arg("dimension must be at least 2"));
    }
    if samples == 0 {
        return Err(Error::arg("need at least one sample"));
    }
    let hits = rng::blocked(
        samples,
        seed,
        || (0u64, vec![0i64; d]),
        |rng, (hits, x)| {
            x.iter_mut().for_each(|c| *c = 0);
            for _ in 0..n {
                let step = rng.gen_range(0..2 * d);
                x[step / 2] += if step % 2 == 0 { 1 } else { -1 };
            }
            if x.iter().fold(0i64, |g, c| g.gcd(c)) == 1 {
                *hits += 1;
            }
        },
        |(a, x), (b, _)| (a + b, x),
    )
    .0;
    Ok(Proportion::wilson(hits, samples))
}

//! The walk reduced mod `m`, a Markov chain on `(Z/m)²`.

use num_integer::Integer;
use serde::Serialize;

use super::interval::Interval;
use super::tails::prime_factors;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ModChain {
    m: usize,
    steps: usize,
    probs: Vec<Interval>,
}

impl ModChain {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::arg("modulus must be at least 2"));
        }
        let mut probs = vec![Interval::ZERO; m * m];
        probs[0] = Interval::ONE;
        Ok(ModChain { m, steps: 0, probs })
    }

    /// The chain after `steps` steps from the origin.
    pub fn run(m: usize, steps: usize) -> Result<Self> {
        let mut chain = Self::new(m)?;
        for _ in 0..steps {
            chain = chain.step();
        }
        Ok(chain)
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn step(&self) -> Self {
        let m = self.m;
        let at = |x: usize, y: usize| self.probs[x * m + y];
        let probs = (0..m * m)
            .map(|i| {
                let (x, y) = (i / m, i % m);
                let (xm, xp) = ((x + m - 1) % m, (x + 1) % m);
                let (ym, yp) = ((y + m - 1) % m, (y + 1) % m);
                (at(xm, y) + at(xp, y) + at(x, ym) + at(x, yp)).scale_pow2(0.25)
            })
            .collect();
        ModChain {
            m,
            steps: self.steps + 1,
            probs,
        }
    }

    pub fn prob(&self, x: usize, y: usize) -> Interval {
        self.probs[(x % self.m) * self.m + y % self.m]
    }

    pub fn total(&self) -> Interval {
        self.probs.iter().copied().sum()
    }

    pub fn max_upper(&self) -> f64 {
        self.probs.iter().map(|p| p.hi).fold(0.0, f64::max)
    }

    /// `Pr[gcd(m, x, y) > 1]` at the current step. This includes the walk
    /// sitting at the origin of `Z²`.
    pub fn target_mass(&self) -> Interval {
        let m = self.m;
        (0..m * m)
            .filter(|&i| is_target(m, i / m, i % m))
            .map(|i| self.probs[i])
            .sum()
    }
}

/// Whether `(x, y) mod m` has `gcd(m, x, y) > 1`.
pub fn is_target(m: usize, x: usize, y: usize) -> bool {
    m.gcd(&x).gcd(&y) > 1
}

#[derive(Clone, Debug, Serialize)]
pub struct ModChainBound {
    pub m: usize,
    pub steps: usize,
    /// Target states split by coordinate-sum parity (`m` even), or the single
    /// total in both slots (`m` odd).
    pub targets: [usize; 2],
    pub max_state_upper: f64,
    /// `max(targets) · max_state_upper`, rounded up: an upper bound for
    /// `a_{n,m}` at every `n ≥ steps`.
    pub bound: f64,
}

/// Every state's probability is non-increasing in its running maximum, so
/// the target mass after `n ≥ N` steps is at most (targets reachable at that
/// parity) × (largest state probability at step `N`).
pub fn mod_chain_bound(m: usize, steps: usize) -> Result<ModChainBound> {
    if steps == 0 {
        return Err(Error::arg("cutoff must be at least 1"));
    }
    let chain = ModChain::run(m, steps)?;
    let mut targets = [0usize; 2];
    for x in 0..m {
        for y in 0..m {
            if is_target(m, x, y) {
                if m.is_multiple_of(2) {
                    targets[(x + y) % 2] += 1;
                } else {
                    targets[0] += 1;
                    targets[1] += 1;
                }
            }
        }
    }
    let max_state_upper = chain.max_upper();
    let bound = (targets[0].max(targets[1]) as f64 * max_state_upper).next_up();
    Ok(ModChainBound {
        m,
        steps,
        targets,
        max_state_upper,
        bound,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ModLimitCheck {
    pub m: usize,
    pub n: usize,
    /// Chain value `Pr[gcd(m, X_n) > 1]` (origin included).
    pub chain: Interval,
    pub limit: f64,
    pub difference: f64,
}

/// `lim a_{n,m}` along `n ≡ parity (mod 2)`: `1 − Π(1 − p⁻²)` for odd `m`,
/// `1 − (2/3)Π` (even `n`) or `1 − (4/3)Π` (odd `n`) for even `m`.
pub fn mod_limit(m: usize, parity: usize) -> f64 {
    let prod: f64 = prime_factors(m)
        .iter()
        .map(|&p| 1.0 - 1.0 / (p * p) as f64)
        .product();
    if m % 2 == 1 {
        1.0 - prod
    } else if parity.is_multiple_of(2) {
        1.0 - 2.0 / 3.0 * prod
    } else {
        1.0 - 4.0 / 3.0 * prod
    }
}

pub fn mod_limit_check(m: usize, n: usize) -> Result<ModLimitCheck> {
    let chain = ModChain::run(m, n)?.target_mass();
    let limit = mod_limit(m, n % 2);
    Ok(ModLimitCheck {
        m,
        n,
        chain,
        limit,
        difference: (chain.mid() - limit).abs(),
    })
}

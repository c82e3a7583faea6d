use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::interval::Interval;
use crate::error::{Error, Result};

/// Primes `≤ n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub fn prime_factors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn is_prime(p: usize) -> bool {
    p >= 2 && prime_factors(p) == [p]
}

/// `4/(p+1)²`, the bound on `Pr[X_n ∈ pZ² ∖ {0}]`.
pub fn prime_tail(p: usize) -> Result<BigRational> {
    if p == 2 || !is_prime(p) {
        return Err(Error::arg(format!("{p} is not an odd prime")));
    }
    Ok(BigRational::new(
        BigInt::from(4),
        BigInt::from((p + 1) * (p + 1)),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct TailSums {
    /// Primes `p` with `after < p < before`.
    pub after: usize,
    pub before: usize,
    pub primes: usize,
    /// `Σ 4/(p−1)²`.
    pub displayed: Interval,
    /// `Σ 4/(p+1)²`.
    pub sharp: Interval,
}

pub fn tail_sums(after: usize, before: usize) -> TailSums {
    let primes: Vec<usize> = primes_up_to(before.saturating_sub(1))
        .into_iter()
        .filter(|&p| p > after)
        .collect();
    let sum = |shift: isize| -> Interval {
        primes
            .iter()
            .map(|&p| {
                let d = (p as isize + shift) as f64;
                Interval::ratio(4.0, d * d)
            })
            .sum()
    };
    TailSums {
        after,
        before,
        primes: primes.len(),
        displayed: sum(-1),
        sharp: sum(1),
    }
}

/// `∫_x^∞ 2 dx/x² = 2/x`, rounded up.
pub fn integral_tail(x: f64) -> f64 {
    Interval::ratio(2.0, x).hi
}

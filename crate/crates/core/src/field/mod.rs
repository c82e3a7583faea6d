//! Arithmetic in GF(q) for prime powers q ≤ 2^16.
//!
//! Elements are encoded as integers `0..q` whose base-p digits are the
//! coefficients of a polynomial in the primitive root `α` reduced modulo the
//! defining polynomial. `0` is zero and `1` is one. Multiplication goes
//! through discrete log / antilog tables.

mod matrix;

pub use matrix::{rank as matrix_rank, FqMatrix};

use crate::error::{Error, Result};

pub type Fe = u32;

pub const MAX_FIELD_ORDER: u32 = 1 << 16;
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients `f_0..f_{k-1}` of the monic defining polynomial.
    modulus: Vec<u32>,
    exp: Vec<Fe>,
    log: Vec<u32>,
    neg: Vec<Fe>,
    add: Option<Vec<Fe>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for Field {}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Some((q, 1));
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        if q > MAX_FIELD_ORDER {
            return Err(Error::Guard {
                what: "field order",
                requested: q as u128,
                limit: MAX_FIELD_ORDER as u128,
            });
        }
        let (p, k) = prime_power(q as u64)
            .ok_or_else(|| Error::arg(format!("{q} is not a prime power")))?;
        let (p, k) = (p as u32, k);

        let mut neg = vec![0; q as usize];
        for (a, slot) in neg.iter_mut().enumerate() {
            *slot = digit_map(a as u32, p, k, |d| (p - d) % p);
        }

        // Smallest monic polynomial (in encoding order) for which x has
        // multiplicative order q - 1.
        let mut found = None;
        for code in 1..q {
            let modulus = digits(code, p, k);
            if modulus[0] == 0 {
                continue;
            }
            if let Some(exp) = power_table(&modulus, p, k, q) {
                found = Some((modulus, exp));
                break;
            }
        }
        let (modulus, exp) =
            found.ok_or_else(|| Error::Invariant(format!("no primitive polynomial for GF({q})")))?;
        let mut log = vec![0; q as usize];
        for (i, &e) in exp.iter().enumerate().take((q - 1) as usize) {
            log[e as usize] = i as u32;
        }

        let mut field = Field {
            p,
            k,
            q,
            modulus,
            exp,
            log,
            neg,
            add: None,
        };
        if q <= ADD_TABLE_LIMIT {
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = field.add_digits(a, b);
                }
            }
            field.add = Some(table);
        }
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// The primitive element `α` generating the multiplicative group.
    pub fn primitive(&self) -> Fe {
        self.exp[1]
    }

    /// Additive basis `1, α, …, α^{k-1}` over the prime field.
    pub fn additive_basis(&self) -> Vec<Fe> {
        (0..self.k).map(|i| self.p.pow(i)).collect()
    }

    fn add_digits(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.add {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[s as usize]
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm base `α`.
    pub fn log(&self, a: Fe) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `α^i`.
    pub fn exp(&self, i: u64) -> Fe {
        self.exp[(i % (self.q as u64 - 1)) as usize]
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        n.rem_euclid(self.p as i64) as Fe
    }

    /// Inverse Frobenius, `a^{1/p}`.
    pub fn pth_root(&self, a: Fe) -> Fe {
        self.pow(a, (self.q / self.p) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.q
    }
}

fn digits(mut code: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn from_digits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn digit_map(a: u32, p: u32, k: u32, f: impl Fn(u32) -> u32) -> u32 {
    let ds: Vec<u32> = digits(a, p, k).into_iter().map(f).collect();
    from_digits(&ds, p)
}

/// Powers `x^0, x^1, …` modulo the monic polynomial `x^k + Σ modulus_i x^i`,
/// or `None` when `x` does not have order exactly `q - 1`.
fn power_table(modulus: &[u32], p: u32, k: u32, q: u32) -> Option<Vec<Fe>> {
    let n = (q - 1) as usize;
    let mut exp = Vec::with_capacity(2 * n + 1);
    let mut cur = vec![0u32; k as usize];
    cur[0] = 1;
    exp.push(1);
    for i in 1..=n {
        let top = cur[k as usize - 1];
        for j in (1..k as usize).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        for j in 0..k as usize {
            cur[j] = (cur[j] + (p - top) * modulus[j] % p) % p;
        }
        let code = from_digits(&cur, p);
        if code == 1 && i < n {
            return None;
        }
        exp.push(code);
    }
    if exp[n] != 1 {
        return None;
    }
    // doubled so that log a + log b indexes directly
    let tail: Vec<Fe> = exp[1..n].to_vec();
    exp.extend(tail);
    Some(exp)
}

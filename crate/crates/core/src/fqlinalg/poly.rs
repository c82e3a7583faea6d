//! Univariate polynomials over `GF(q)` and their factorization.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

const SPLIT_SEED: u64 = 0xcafe_f00d;
const SPLIT_ATTEMPTS: usize = 64;

/// Coefficients low degree first, with no trailing zeros (the zero
/// polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: Fe) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    /// `x − a`.
    pub fn linear(a: Fe, f: &Field) -> Self {
        Poly::new(vec![f.neg(a), 1])
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg 0 = 0`, for sizes and loops.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn monic(&self, f: &Field) -> Self {
        match f.inv(self.lead()) {
            Some(inv) => self.scale(inv, f),
            None => self.clone(),
        }
    }

    pub fn eval(&self, a: Fe, f: &Field) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, a), c))
    }

    pub fn scale(&self, c: Fe, f: &Field) -> Self {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, o: &Self, f: &Field) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let at = |p: &Poly, i: usize| p.coeffs.get(i).copied().unwrap_or(0);
        Poly::new((0..n).map(|i| f.add(at(self, i), at(o, i))).collect())
    }

    pub fn neg(&self, f: &Field) -> Self {
        Poly::new(self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn sub(&self, o: &Self, f: &Field) -> Self {
        self.add(&o.neg(f), f)
    }

    pub fn mul(&self, o: &Self, f: &Field) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, mut e: u64, f: &Field) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, d: &Self, f: &Field) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let inv = f.inv(d.lead())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut q = vec![0; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            q[i - dd] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                r[k] = f.sub(r[k], f.mul(c, dc));
            }
        }
        r.truncate(dd);
        Some((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, d: &Self, f: &Field) -> Self {
        self.divrem(d, f).expect("division by zero polynomial").1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Self, f: &Field) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &Field) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn mulmod(&self, o: &Self, m: &Self, f: &Field) -> Self {
        self.mul(o, f).rem(m, f)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &Self, f: &Field) -> Self {
        let mut acc = Poly::one().rem(m, f);
        let base = self.rem(m, f);
        for i in (0..e.bits()).rev() {
            acc = acc.mulmod(&acc, m, f);
            if e.bit(i) {
                acc = acc.mulmod(&base, m, f);
            }
        }
        acc
    }

    /// `g` with `g(x)^p = self(x)`, assuming only exponents divisible by `p`
    /// occur.
    fn pth_root(&self, f: &Field) -> Self {
        let p = f.characteristic() as usize;
        Poly::new(
            self.coeffs
                .iter()
                .step_by(p)
                .map(|&c| f.pth_root(c))
                .collect(),
        )
    }
}

pub struct PolyDisplay<'a>(&'a Poly);

/// Terms from the top, coefficients as field encodings: `x^2 + 2x + 1`.
impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.0;
        if p.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in p.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(out, "{c}")?,
                (1, 1) => write!(out, "x")?,
                (1, c) => write!(out, "{c}x")?,
                (i, 1) => write!(out, "x^{i}")?,
                (i, c) => write!(out, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay(self).fmt(out)
    }
}

/// `x^{q^k} mod m`, by `k` Frobenius steps.
fn frobenius_power(m: &Poly, k: usize, f: &Field) -> Poly {
    let q = BigUint::from(f.order());
    (0..k).fold(Poly::x().rem(m, f), |acc, _| acc.powmod(&q, m, f))
}

/// Rabin's test: `x^{q^n} ≡ x` and `gcd(x^{q^{n/r}} − x, g) = 1` for each
/// prime `r | n`.
pub fn is_irreducible(g: &Poly, f: &Field) -> bool {
    let Some(n) = g.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    let g = g.monic(f);
    let x = Poly::x();
    if frobenius_power(&g, n, f) != x.rem(&g, f) {
        return false;
    }
    prime_divisors(n).into_iter().all(|r| {
        let h = frobenius_power(&g, n / r, f).sub(&x, f);
        h.gcd(&g, f).is_one()
    })
}

impl Poly {
    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `f = unit · Π factors[i].0 ^ factors[i].1` with monic irreducible factors
/// in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Fe,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self, f: &Field) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit), |acc, (p, e)| {
                acc.mul(&p.pow(*e as u64, f), f)
            })
    }
}

/// Squarefree, distinct-degree, then equal-degree (Cantor–Zassenhaus)
/// factorization.
pub fn factor(g: &Poly, f: &Field) -> Result<Factorization> {
    if g.is_zero() {
        return Err(Error::arg("cannot factor the zero polynomial"));
    }
    let unit = g.lead();
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in squarefree(&g.monic(f), f) {
        for (d, group) in distinct_degree(&part, f) {
            for irr in equal_degree(&group, d, f)? {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort();
    // merge equal factors coming from different squarefree parts
    let mut merged: Vec<(Poly, u32)> = Vec::new();
    for (p, e) in factors {
        match merged.last_mut() {
            Some((q, m)) if *q == p => *m += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(Factorization {
        unit,
        factors: merged,
    })
}

/// `g = Π parts[i].0 ^ parts[i].1` with squarefree, pairwise coprime parts.
fn squarefree(g: &Poly, f: &Field) -> Vec<(Poly, u32)> {
    let p = f.characteristic();
    let mut out = Vec::new();
    if g.deg() == 0 {
        return out;
    }
    let d = g.derivative(f);
    if d.is_zero() {
        for (h, m) in squarefree(&g.pth_root(f), f) {
            out.push((h, m * p));
        }
        return out;
    }
    let mut c = g.gcd(&d, f);
    let mut w = g.divrem(&c, f).unwrap().0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c, f);
        let z = w.divrem(&y, f).unwrap().0;
        if z.deg() > 0 {
            out.push((z.monic(f), i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w, f).unwrap().0;
    }
    if c.deg() > 0 {
        for (h, m) in squarefree(&c.monic(f).pth_root(f), f) {
            out.push((h, m * p));
        }
    }
    out
}

/// Splits a squarefree monic `g` into products of irreducibles of equal
/// degree.
fn distinct_degree(g: &Poly, f: &Field) -> Vec<(usize, Poly)> {
    let mut out = Vec::new();
    let mut rest = g.clone();
    let x = Poly::x();
    let q = BigUint::from(f.order());
    let mut h = x.rem(&rest, f);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(&q, &rest, f);
        let part = h.sub(&x, f).gcd(&rest, f);
        if part.deg() > 0 {
            rest = rest.divrem(&part, f).unwrap().0;
            h = h.rem(&rest, f);
            out.push((d, part));
        }
    }
    if rest.deg() > 0 {
        out.push((rest.deg(), rest.monic(f)));
    }
    out
}

/// Irreducible factors of a squarefree monic `g` whose factors all have
/// degree `d`.
fn equal_degree(g: &Poly, d: usize, f: &Field) -> Result<Vec<Poly>> {
    let n = g.deg();
    if n == d {
        return Ok(vec![g.clone()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED ^ n as u64);
    for _ in 0..SPLIT_ATTEMPTS {
        let a = Poly::new((0..n).map(|_| rng.gen_range(0..f.order())).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = splitter(&a, g, d, f);
        let h = b.gcd(g, f);
        if h.deg() > 0 && h.deg() < n {
            let other = g.divrem(&h, f).unwrap().0.monic(f);
            let mut out = equal_degree(&h, d, f)?;
            out.extend(equal_degree(&other, d, f)?);
            out.sort();
            return Ok(out);
        }
    }
    Err(Error::Numerical(format!(
        "equal-degree splitting of a degree-{n} polynomial failed after {SPLIT_ATTEMPTS} attempts"
    )))
}

/// `a^{(q^d−1)/2} − 1` for odd `q`; the trace `Σ a^{2^i}, i < kd` for
/// `q = 2^k`.
fn splitter(a: &Poly, g: &Poly, d: usize, f: &Field) -> Poly {
    let q = BigUint::from(f.order());
    if f.characteristic() == 2 {
        let steps = f.degree() as usize * d;
        let mut t = a.rem(g, f);
        let mut acc = t.clone();
        for _ in 1..steps {
            t = t.mulmod(&t, g, f);
            acc = acc.add(&t, f);
        }
        acc
    } else {
        let e = (q.pow(d as u32) - BigUint::one()) >> 1u32;
        a.powmod(&e, g, f).sub(&Poly::one(), f)
    }
}

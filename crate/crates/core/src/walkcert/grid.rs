//! The distribution of the simple random walk on `Z²` after `n` steps,
//! stored on the octant `a ≥ b ≥ 0` (only cells with `a + b ≡ n mod 2`).

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use super::interval::Interval;

/// Cell layout of the octant at step `n`.
#[derive(Clone, Debug)]
pub struct Octant {
    n: usize,
    row_start: Vec<usize>,
}

impl Octant {
    pub fn new(n: usize) -> Self {
        let mut row_start = Vec::with_capacity(n + 2);
        let mut total = 0;
        for a in 0..=n {
            row_start.push(total);
            total += Self::row_len(n, a);
        }
        row_start.push(total);
        Octant { n, row_start }
    }

    fn row_len(n: usize, a: usize) -> usize {
        let b0 = (n - a) & 1;
        let bmax = a.min(n - a);
        if bmax < b0 {
            0
        } else {
            (bmax - b0) / 2 + 1
        }
    }

    pub fn steps(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.row_start[self.n + 1]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Index of the canonical cell `(a, b)`, `a ≥ b ≥ 0`.
    #[inline]
    pub fn index(&self, a: usize, b: usize) -> Option<usize> {
        debug_assert!(a >= b);
        if a + b > self.n || (a + b + self.n) & 1 == 1 {
            return None;
        }
        Some(self.row_start[a] + b / 2)
    }

    /// Cells as `(a, b)` in storage order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..=n).flat_map(move |a| {
            let b0 = (n - a) & 1;
            let bmax = a.min(n - a);
            (b0..=bmax).step_by(2).filter(move |_| bmax >= b0).map(move |b| (a, b))
        })
    }

    fn row(&self, a: usize) -> std::ops::Range<usize> {
        self.row_start[a]..self.row_start[a + 1]
    }
}

/// `(max(|x|,|y|), min(|x|,|y|))`.
#[inline]
pub fn canonical(x: i64, y: i64) -> (usize, usize) {
    let (x, y) = (x.unsigned_abs() as usize, y.unsigned_abs() as usize);
    (x.max(y), x.min(y))
}

/// Size of the dihedral orbit of the canonical cell `(a, b)`.
#[inline]
pub fn orbit_weight(a: usize, b: usize) -> u32 {
    match (a, b) {
        (0, 0) => 1,
        (_, 0) => 4,
        _ if a == b => 4,
        _ => 8,
    }
}

/// Canonical neighbours of `(a, b)` (with repetition).
#[inline]
fn neighbours(a: usize, b: usize) -> [(usize, usize); 4] {
    let (a, b) = (a as i64, b as i64);
    [
        canonical(a - 1, b),
        canonical(a + 1, b),
        canonical(a, b - 1),
        canonical(a, b + 1),
    ]
}

/// `gcd(a, b)` for `0 ≤ b ≤ a ≤ n`, filled by `gcd(a,b) = gcd(b, a mod b)`.
#[derive(Clone, Debug)]
pub struct GcdTable {
    n: usize,
    table: Vec<u32>,
}

impl GcdTable {
    pub fn new(n: usize) -> Self {
        let mut table = vec![0u32; (n + 1) * (n + 2) / 2];
        let idx = |a: usize, b: usize| a * (a + 1) / 2 + b;
        for a in 0..=n {
            table[idx(a, 0)] = a as u32;
            for b in 1..=a {
                table[idx(a, b)] = table[idx(b, a % b)];
            }
        }
        GcdTable { n, table }
    }

    #[inline]
    pub fn gcd(&self, a: usize, b: usize) -> u32 {
        debug_assert!(b <= a && a <= self.n);
        self.table[a * (a + 1) / 2 + b]
    }
}

/// Path counts: `c_n(a, b) = 4ⁿ · Pr[X_n = (a, b)]`, as little-endian `u64`
/// limbs of a fixed width per step.
#[derive(Clone, Debug)]
pub struct ExactGrid {
    octant: Octant,
    width: usize,
    limbs: Vec<u64>,
}

fn width_for(n: usize) -> usize {
    (2 * n + 1).div_ceil(64).max(1)
}

fn limbs_to_biguint(limbs: &[u64]) -> BigUint {
    let digits: Vec<u32> = limbs
        .iter()
        .flat_map(|&l| [l as u32, (l >> 32) as u32])
        .collect();
    BigUint::from_slice(&digits)
}

fn fold_u128(acc: &[u128]) -> Vec<u64> {
    let mut out = Vec::with_capacity(acc.len() + 2);
    let mut carry: u128 = 0;
    for &x in acc {
        let (s, o) = x.overflowing_add(carry);
        out.push(s as u64);
        carry = (s >> 64) + if o { 1u128 << 64 } else { 0 };
    }
    while carry > 0 {
        out.push(carry as u64);
        carry >>= 64;
    }
    out
}

impl ExactGrid {
    pub fn origin() -> Self {
        ExactGrid {
            octant: Octant::new(0),
            width: 1,
            limbs: vec![1],
        }
    }

    pub fn steps(&self) -> usize {
        self.octant.n
    }

    pub fn octant(&self) -> &Octant {
        &self.octant
    }

    fn cell(&self, i: usize) -> &[u64] {
        &self.limbs[i * self.width..(i + 1) * self.width]
    }

    /// One step of `c_{n+1}(a,b) = Σ c_n(neighbour)`.
    pub fn step(&self) -> Self {
        let n = self.octant.n + 1;
        let octant = Octant::new(n);
        let width = width_for(n);
        let mut limbs = vec![0u64; octant.len() * width];
        let old = &self.octant;
        let old_width = self.width;

        let mut rows: Vec<(usize, &mut [u64])> = Vec::with_capacity(n + 1);
        let mut rest: &mut [u64] = &mut limbs;
        for a in 0..=n {
            let len = octant.row(a).len() * width;
            let (head, tail) = rest.split_at_mut(len);
            rows.push((a, head));
            rest = tail;
        }
        rows.into_par_iter().for_each(|(a, row)| {
            let b0 = (n - a) & 1;
            for (k, out) in row.chunks_mut(width).enumerate() {
                let b = b0 + 2 * k;
                let mut srcs = [0usize; 4];
                let mut k = 0;
                for (x, y) in neighbours(a, b) {
                    if let Some(i) = old.index(x, y) {
                        srcs[k] = i * old_width;
                        k += 1;
                    }
                }
                let srcs = &srcs[..k];
                let mut carry: u128 = 0;
                for (j, o) in out.iter_mut().enumerate() {
                    let mut acc = carry;
                    if j < old_width {
                        for &s in srcs {
                            acc += self.limbs[s + j] as u128;
                        }
                    }
                    *o = acc as u64;
                    carry = acc >> 64;
                }
                debug_assert_eq!(carry, 0);
            }
        });
        ExactGrid {
            octant,
            width,
            limbs,
        }
    }

    /// `c_n(x, y)` for any lattice point.
    pub fn count(&self, x: i64, y: i64) -> BigUint {
        let (a, b) = canonical(x, y);
        match self.octant.index(a, b) {
            Some(i) => limbs_to_biguint(self.cell(i)),
            None => BigUint::ZERO,
        }
    }

    pub fn denominator(&self) -> BigUint {
        BigUint::one() << (2 * self.steps())
    }

    pub fn prob(&self, x: i64, y: i64) -> BigRational {
        BigRational::new(self.count(x, y).into(), self.denominator().into())
    }

    /// `4ⁿ · Pr[X_n ∈ S]` where `S` is the union of the orbits of the
    /// canonical cells accepted by `pred`.
    pub fn weighted_count<F>(&self, pred: F) -> BigUint
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let w = self.width;
        let acc = (0..=self.octant.n)
            .into_par_iter()
            .map(|a| {
                let mut acc = vec![0u128; w];
                let b0 = (self.octant.n - a) & 1;
                for (k, i) in self.octant.row(a).enumerate() {
                    let b = b0 + 2 * k;
                    if !pred(a, b) {
                        continue;
                    }
                    let weight = orbit_weight(a, b) as u128;
                    for (t, &l) in acc.iter_mut().zip(self.cell(i)) {
                        *t += weight * l as u128;
                    }
                }
                acc
            })
            .reduce(
                || vec![0u128; w],
                |mut x, y| {
                    x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                    x
                },
            );
        limbs_to_biguint(&fold_u128(&acc))
    }

    pub fn mass_where<F>(&self, pred: F) -> BigRational
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        BigRational::new(self.weighted_count(pred).into(), self.denominator().into())
    }

    /// `P_n = Pr[gcd(X_n) = 1]`.
    pub fn primitivity(&self, gcd: &GcdTable) -> BigRational {
        self.mass_where(|a, b| gcd.gcd(a, b) == 1)
    }

    /// `max_{(a,b)} c_n(a, b)` and a maximizing canonical cell.
    pub fn max_count(&self) -> (BigUint, (usize, usize)) {
        let mut best = 0;
        for i in 1..self.octant.len() {
            if cmp_limbs(self.cell(i), self.cell(best)).is_gt() {
                best = i;
            }
        }
        let cell = self.octant.cells().nth(best).unwrap();
        (limbs_to_biguint(self.cell(best)), cell)
    }
}

fn cmp_limbs(x: &[u64], y: &[u64]) -> std::cmp::Ordering {
    x.iter().rev().cmp(y.iter().rev())
}

/// `Pr[X_n = (a, b)]` as certified intervals.
#[derive(Clone, Debug)]
pub struct IntervalGrid {
    octant: Octant,
    cells: Vec<Interval>,
}

impl IntervalGrid {
    pub fn origin() -> Self {
        IntervalGrid {
            octant: Octant::new(0),
            cells: vec![Interval::ONE],
        }
    }

    pub fn steps(&self) -> usize {
        self.octant.n
    }

    pub fn step(&self) -> Self {
        let n = self.octant.n + 1;
        let octant = Octant::new(n);
        let old = &self.octant;
        let cells = octant
            .cells()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(a, b)| {
                neighbours(a, b)
                    .iter()
                    .filter_map(|&(x, y)| old.index(x, y))
                    .map(|i| self.cells[i])
                    .sum::<Interval>()
                    .scale_pow2(0.25)
            })
            .collect();
        IntervalGrid { octant, cells }
    }

    pub fn prob(&self, x: i64, y: i64) -> Interval {
        let (a, b) = canonical(x, y);
        self.octant
            .index(a, b)
            .map_or(Interval::ZERO, |i| self.cells[i])
    }

    pub fn mass_where<F>(&self, pred: F) -> Interval
    where
        F: Fn(usize, usize) -> bool,
    {
        self.octant
            .cells()
            .zip(&self.cells)
            .filter(|((a, b), _)| pred(*a, *b))
            .map(|((a, b), v)| {
                let w = orbit_weight(a, b) as f64;
                Interval::new((v.lo * w).next_down().max(0.0), (v.hi * w).next_up())
            })
            .sum()
    }

    pub fn primitivity(&self, gcd: &GcdTable) -> Interval {
        self.mass_where(|a, b| gcd.gcd(a, b) == 1)
    }

    /// The largest upper endpoint over all cells.
    pub fn max_upper(&self) -> f64 {
        self.cells.iter().map(|c| c.hi).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octant_layout_matches_enumeration() {
        for n in 0..12 {
            let o = Octant::new(n);
            let cells: Vec<_> = o.cells().collect();
            assert_eq!(cells.len(), o.len());
            for (i, &(a, b)) in cells.iter().enumerate() {
                assert_eq!(o.index(a, b), Some(i));
                assert!(a >= b && a + b <= n && (a + b) % 2 == n % 2);
            }
        }
    }

    #[test]
    fn gcd_table() {
        let g = GcdTable::new(30);
        for a in 0..=30usize {
            for b in 0..=a {
                assert_eq!(g.gcd(a, b) as usize, num_integer::gcd(a, b));
            }
        }
    }

    #[test]
    fn carries_propagate() {
        let acc = [u128::MAX, 5];
        let out = fold_u128(&acc);
        assert_eq!(limbs_to_biguint(&out), BigUint::from(u128::MAX) + (BigUint::from(5u32) << 64));
    }
}

//! Closed intervals of `f64` with outward rounding.

use std::ops::{Add, Mul};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    /// The smallest interval with `f64` endpoints around `num / den`.
    pub fn ratio(num: f64, den: f64) -> Self {
        let q = num / den;
        Interval {
            lo: q.next_down(),
            hi: q.next_up(),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Multiplication by a power of two: exact unless the product leaves the
    /// normal range, in which case the endpoints are widened.
    pub fn scale_pow2(self, factor: f64) -> Self {
        let scale = |x: f64, down: bool| {
            let r = x * factor;
            if r / factor == x {
                r
            } else if down {
                // a non-negative input keeps a non-negative lower end
                if x >= 0.0 && factor > 0.0 {
                    r.next_down().max(0.0)
                } else {
                    r.next_down()
                }
            } else {
                r.next_up()
            }
        };
        Interval {
            lo: scale(self.lo, true),
            hi: scale(self.hi, false),
        }
    }

    pub fn neg(self) -> Self {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self + other.neg()
    }

    pub fn max(self, other: Self) -> Self {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn min(self, other: Self) -> Self {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }
}

/// `a + b` and the sign of its rounding error (TwoSum).
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, o: Interval) -> Interval {
        let (lo, elo) = two_sum(self.lo, o.lo);
        let (hi, ehi) = two_sum(self.hi, o.hi);
        Interval {
            lo: if elo < 0.0 { lo.next_down() } else { lo },
            hi: if ehi > 0.0 { hi.next_up() } else { hi },
        }
    }
}

impl Mul for Interval {
    type Output = Interval;

    fn mul(self, o: Interval) -> Interval {
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }
}

impl std::iter::Sum for Interval {
    fn sum<I: Iterator<Item = Interval>>(iter: I) -> Interval {
        iter.fold(Interval::ZERO, |a, b| a + b)
    }
}

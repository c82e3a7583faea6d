//! Primitivity of the simple random walk on `Z²`.
//!
//! `P_n = Pr[gcd(X_n) = 1]` is computed exactly (path counts over `4ⁿ`) or
//! with certified intervals, and the large-`n` regime is covered by mod-`m`
//! chains, a prime tail and a return-probability bound.

mod chain;
mod grid;
mod interval;
mod multidim;
mod tails;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

pub use chain::{
    is_target, mod_chain_bound, mod_limit, mod_limit_check, ModChain, ModChainBound,
    ModLimitCheck,
};
pub use grid::{canonical, orbit_weight, ExactGrid, GcdTable, IntervalGrid, Octant};
pub use interval::Interval;
pub use multidim::multidim_primitivity;
pub use tails::{integral_tail, prime_factors, prime_tail, primes_up_to, tail_sums, TailSums};

use crate::error::{Error, Result};

/// Largest step count accepted by the walk sweeps.
pub const MAX_STEPS: usize = 5000;
/// The finite part of the prime tail runs over `P₀ < p < TAIL_END`.
pub const TAIL_END: usize = 10003;
/// Start of the integral bounding the remaining primes.
pub const INTEGRAL_START: f64 = 10000.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Exact,
    Interval,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "interval" => Ok(Mode::Interval),
            _ => Err(Error::arg(format!("unknown mode `{s}` (exact|interval)"))),
        }
    }
}

/// One `P_n`, with a rigorous float enclosure and the exact value when known.
#[derive(Clone, Debug, Serialize)]
pub struct PnValue {
    pub n: usize,
    pub lower: f64,
    pub upper: f64,
    #[serde(skip)]
    pub exact: Option<BigRational>,
}

impl PnValue {
    fn from_exact(n: usize, r: BigRational) -> Self {
        let x = r.to_f64().unwrap_or(f64::NAN);
        PnValue {
            n,
            lower: x.next_down(),
            upper: x.next_up(),
            exact: Some(r),
        }
    }

    pub fn estimate(&self) -> f64 {
        match &self.exact {
            Some(r) => r.to_f64().unwrap_or(f64::NAN),
            None => 0.5 * (self.lower + self.upper),
        }
    }
}

/// `P_1, …, P_{max_n}` together with the grid maximum at step `max_n + 1`
/// (the return-probability bound for all later steps).
#[derive(Clone, Debug, Serialize)]
pub struct Sweep {
    pub mode: Mode,
    pub values: Vec<PnValue>,
    pub final_step: usize,
    pub final_max_upper: f64,
}

fn check_steps(n: usize) -> Result<()> {
    if n > MAX_STEPS {
        return Err(Error::Guard {
            what: "walk steps",
            requested: n as u128,
            limit: MAX_STEPS as u128,
        });
    }
    Ok(())
}

/// Walks `cutoff` steps, recording `P_n` for `1 ≤ n < cutoff` and the largest
/// cell probability at step `cutoff`.
pub fn sweep(cutoff: usize, mode: Mode) -> Result<Sweep> {
    check_steps(cutoff)?;
    if cutoff == 0 {
        return Err(Error::arg("cutoff must be at least 1"));
    }
    let gcd = GcdTable::new(cutoff);
    let mut values = Vec::with_capacity(cutoff);
    let final_max_upper = match mode {
        Mode::Exact => {
            let mut grid = ExactGrid::origin();
            for n in 1..=cutoff {
                grid = grid.step();
                if n < cutoff {
                    values.push(PnValue::from_exact(n, grid.primitivity(&gcd)));
                }
            }
            let (max, _) = grid.max_count();
            let r = BigRational::new(max.into(), grid.denominator().into());
            r.to_f64().unwrap_or(f64::NAN).next_up()
        }
        Mode::Interval => {
            let mut grid = IntervalGrid::origin();
            for n in 1..=cutoff {
                grid = grid.step();
                if n < cutoff {
                    let p = grid.primitivity(&gcd);
                    values.push(PnValue {
                        n,
                        lower: p.lo,
                        upper: p.hi,
                        exact: None,
                    });
                }
            }
            grid.max_upper()
        }
    };
    Ok(Sweep {
        mode,
        values,
        final_step: cutoff,
        final_max_upper,
    })
}

/// `P_n` for `1 ≤ n ≤ max_n`.
pub fn primitivity_probabilities(max_n: usize, mode: Mode) -> Result<Vec<PnValue>> {
    Ok(sweep(max_n + 1, mode)?.values)
}

/// Exact `P_n`.
pub fn primitivity_probability(n: usize) -> Result<BigRational> {
    check_steps(n)?;
    let mut grid = ExactGrid::origin();
    for _ in 0..n {
        grid = grid.step();
    }
    Ok(grid.primitivity(&GcdTable::new(n)))
}

/// `max_{(a,b)} Pr[X_N = (a,b)]`, rounded up; bounds `(0,0)_n` for all `n ≥ N`.
pub fn return_probability_bound(n: usize) -> Result<f64> {
    check_steps(n)?;
    let mut grid = IntervalGrid::origin();
    for _ in 0..n {
        grid = grid.step();
    }
    Ok(grid.max_upper())
}

/// `Pr[X_n ∈ pZ² ∖ {0}]` exactly.
pub fn lattice_multiple_probability(grid: &ExactGrid, p: usize) -> BigRational {
    grid.mass_where(|a, b| (a, b) != (0, 0) && a % p == 0 && b % p == 0)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinPn {
    pub n: usize,
    pub lower: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub cutoff: usize,
    pub prime_cutoff: usize,
    pub mode: Mode,
    /// Smallest `P_n` over `1 ≤ n < cutoff`.
    pub min_pn: Option<MinPn>,
    pub pn_above_0_4: bool,
    pub mod6: ModChainBound,
    pub primes: Vec<ModChainBound>,
    /// `1 − a_6 − Σ_{5 ≤ p ≤ P₀} a_p`, rounded down.
    pub subtotal: f64,
    pub tail: TailSums,
    pub integral_tail: f64,
    pub return_bound: f64,
    /// Lower bound for `inf_{n ≥ cutoff} P_n`.
    pub final_lower_bound: f64,
    pub verdict: bool,
    #[serde(skip)]
    pub sweep: Sweep,
}

/// Assembles the bound `inf_{n≥N} P_n ≥ 1 − a_6 − Σ_p a_p − tails − (0,0)`.
pub fn certificate(cutoff: usize, prime_cutoff: usize, mode: Mode) -> Result<Certificate> {
    if cutoff < 2 {
        return Err(Error::arg("cutoff must be at least 2"));
    }
    if prime_cutoff < 5 {
        return Err(Error::arg("prime cutoff must be at least 5"));
    }
    let sweep = sweep(cutoff, mode)?;
    let min_pn = sweep
        .values
        .iter()
        .min_by(|a, b| a.lower.total_cmp(&b.lower))
        .map(|v| MinPn {
            n: v.n,
            lower: v.lower,
        });
    let pn_above_0_4 = sweep.values.iter().all(|v| v.lower > 0.4);

    let mod6 = mod_chain_bound(6, cutoff)?;
    let primes: Vec<ModChainBound> = primes_up_to(prime_cutoff)
        .into_iter()
        .filter(|&p| p >= 5)
        .map(|p| mod_chain_bound(p, cutoff))
        .collect::<Result<_>>()?;
    let neg = |x: f64| Interval::point(-x);
    let subtotal = primes
        .iter()
        .fold(Interval::ONE + neg(mod6.bound), |acc, b| acc + neg(b.bound));

    let tail = tail_sums(prime_cutoff, TAIL_END);
    let integral_tail = integral_tail(INTEGRAL_START);
    let return_bound = sweep.final_max_upper;
    let final_lower_bound = (subtotal
        + tail.displayed.neg()
        + neg(integral_tail)
        + neg(return_bound))
    .lo;

    let third = 1.0 / 3.0;
    let verdict = min_pn.as_ref().is_some_and(|m| m.lower > third) && final_lower_bound > third;
    Ok(Certificate {
        cutoff,
        prime_cutoff,
        mode,
        min_pn,
        pn_above_0_4,
        mod6,
        primes,
        subtotal: subtotal.lo,
        tail,
        integral_tail,
        return_bound,
        final_lower_bound,
        verdict,
        sweep,
    })
}

impl Certificate {
    pub fn prime_bound(&self, p: usize) -> Option<f64> {
        self.primes.iter().find(|b| b.m == p).map(|b| b.bound)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ParityLimitRow {
    pub n: usize,
    pub pn: f64,
    /// `4/π²` for even `n`, `8/π²` for odd `n`.
    pub reference: f64,
    pub difference: f64,
}

/// Compares `P_n` with `4/π²` (even `n`) and `8/π²` (odd `n`).
pub fn parity_limit_report(values: &[PnValue], ns: &[usize]) -> Vec<ParityLimitRow> {
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    ns.iter()
        .filter_map(|&n| values.iter().find(|v| v.n == n))
        .map(|v| {
            let reference = if v.n % 2 == 0 { 4.0 / pi2 } else { 8.0 / pi2 };
            let pn = v.estimate();
            ParityLimitRow {
                n: v.n,
                pn,
                reference,
                difference: (pn - reference).abs(),
            }
        })
        .collect()
}

/// `4/(p+1)²` as a float, for reporting.
pub fn prime_tail_f64(p: usize) -> Result<f64> {
    Ok(prime_tail(p)?.to_f64().unwrap_or(f64::NAN))
}

/// Exact fraction string `num/den`.
pub fn fraction_string(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::Rng;
use serde::Serialize;

use super::{jordan_data, kernel_dim, Poly};
use crate::dist::fibre_counts;
use crate::error::{Error, Result};
use crate::field::{Fe, Field, FqMatrix};
use crate::group::{FiniteGroup, Group, GroupSpec};
use crate::rng;
use crate::stats::Proportion;
use crate::words::Word;

/// Exhaustive runs enumerate at most this many tuples.
const EXHAUSTIVE_BUDGET: u128 = 50_000_000;
/// Groups up to this order get exact centralizer orders by enumeration when
/// no closed form applies.
const BRUTE_FORCE_ORDER: u128 = 5_000;
/// Materialized groups for exhaustive runs stay below this order.
const MATERIALIZE_GUARD: u64 = 200_000;

/// `GL_n(q)` or `SL_n(q)` acting on explicit matrices.
#[derive(Clone, Debug)]
struct MatrixGroup {
    field: Arc<Field>,
    n: usize,
    special: bool,
}

impl Group for MatrixGroup {
    type Elem = FqMatrix;

    fn identity(&self) -> FqMatrix {
        FqMatrix::identity(self.n)
    }

    fn mul(&self, a: &FqMatrix, b: &FqMatrix) -> FqMatrix {
        a.mul(b, &self.field)
    }

    fn inv(&self, a: &FqMatrix) -> FqMatrix {
        a.inverse(&self.field).expect("group elements are invertible")
    }
}

impl MatrixGroup {
    fn parse(spec: &str) -> Result<Self> {
        let (n, q, special) = match GroupSpec::parse(spec)? {
            GroupSpec::GeneralLinear(n, q) => (n, q, false),
            GroupSpec::SpecialLinear(n, q) => (n, q, true),
            _ => {
                return Err(Error::spec(spec, "sampling is implemented for GL and SL only"));
            }
        };
        if n == 0 || n > 8 {
            return Err(Error::spec(spec, "matrix dimension must be in 1..=8"));
        }
        Ok(MatrixGroup {
            field: Arc::new(Field::new(q)?),
            n,
            special,
        })
    }

    fn q(&self) -> u32 {
        self.field.order()
    }

    fn order(&self) -> u128 {
        let gl = crate::group::gl_order(self.n, self.q());
        if self.special {
            gl / (self.q() as u128 - 1)
        } else {
            gl
        }
    }

    /// Uniform element: rejection sampling for `GL`, then scaling the first
    /// row by `det⁻¹` for `SL`.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FqMatrix {
        let f = &self.field;
        let q = self.q();
        loop {
            let mut m = FqMatrix::zero(self.n);
            for i in 0..self.n {
                for j in 0..self.n {
                    m.set(i, j, rng.gen_range(0..q));
                }
            }
            let det = m.det(f);
            if det == 0 {
                continue;
            }
            if self.special {
                let s = f.inv(det).unwrap();
                for j in 0..self.n {
                    m.set(0, j, f.mul(m.get(0, j), s));
                }
            }
            return m;
        }
    }
}

/// How the size of a centralizer was judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralizerMeasure {
    /// `|C_GL(g)|` from the Jordan data closed form.
    ClosedForm,
    /// `|C_G(g)|` by enumerating `G`.
    Enumeration,
    /// `q^{dim C}` as an upper bound for `|C|`.
    DimensionProxy,
}

#[derive(Clone, Debug, Serialize)]
pub struct SmallCentralizerReport {
    pub word: Word,
    pub group: String,
    /// Rank parameter `r`, taken to be the matrix dimension.
    pub rank: usize,
    pub c: f64,
    pub samples: u64,
    pub seed: u64,
    pub measure: CentralizerMeasure,
    /// `Pr[|C_G(w(g⃗))| ≤ q^{c·r}]`.
    pub estimate: Proportion,
    /// The exact probability as a reduced fraction, for exhaustive runs.
    pub exact: Option<String>,
}

struct SizeTest {
    group: MatrixGroup,
    measure: CentralizerMeasure,
    enumerated: Option<Arc<FiniteGroup>>,
    /// Exponent `c·r` when it is a non-negative integer.
    int_exponent: Option<u32>,
    exponent: f64,
}

impl SizeTest {
    fn new(group: MatrixGroup, c: f64, spec: &str) -> Result<Self> {
        let r = group.n;
        let exponent = c * r as f64;
        let int_exponent = (exponent.fract() == 0.0 && (0.0..=4096.0).contains(&exponent))
            .then_some(exponent as u32);
        let (measure, enumerated) = if !group.special {
            (CentralizerMeasure::ClosedForm, None)
        } else if group.order() <= BRUTE_FORCE_ORDER {
            (
                CentralizerMeasure::Enumeration,
                Some(FiniteGroup::construct(spec)?),
            )
        } else {
            (CentralizerMeasure::DimensionProxy, None)
        };
        Ok(SizeTest {
            group,
            measure,
            enumerated,
            int_exponent,
            exponent,
        })
    }

    fn is_small(&self, m: &FqMatrix) -> bool {
        let f = &self.group.field;
        let q = self.group.q();
        let jd = jordan_data(m, f).expect("group elements are invertible");
        let (size, proxy_exp) = match self.measure {
            CentralizerMeasure::ClosedForm => (jd.gl_centralizer_order(), None),
            CentralizerMeasure::Enumeration => {
                let g = self.enumerated.as_ref().unwrap();
                let x = g.encode_matrix(m).expect("sampled inside the group");
                (g.centralizer_order(x) as u128, None)
            }
            CentralizerMeasure::DimensionProxy => (0, Some(jd.centralizer_dim())),
        };
        if let Some(d) = proxy_exp {
            return d as f64 <= self.exponent;
        }
        match self.int_exponent {
            Some(e) => match (q as u128).checked_pow(e) {
                Some(bound) => size <= bound,
                None => true,
            },
            None => (size as f64).log(q as f64) <= self.exponent + 1e-12,
        }
    }
}

/// Estimates `Pr[|C_G(w(g⃗))| ≤ q^{c·r}]` over uniform tuples in `GL_n(q)` or
/// `SL_n(q)`, with `r = n`. `samples = 0` enumerates every tuple instead.
pub fn small_centralizer_experiment(
    word: &Word,
    spec: &str,
    samples: u64,
    c: f64,
    seed: u64,
) -> Result<SmallCentralizerReport> {
    if !(c.is_finite() && c >= 0.0) {
        return Err(Error::arg(format!("exponent c must be non-negative, got {c}")));
    }
    let group = MatrixGroup::parse(spec)?;
    let rank = group.n;
    let test = SizeTest::new(group, c, spec)?;
    let (estimate, exact) = if samples == 0 {
        let g = FiniteGroup::construct_with_guard(spec, MATERIALIZE_GUARD)?;
        let counts = fibre_counts(word, &g, EXHAUSTIVE_BUDGET)?;
        let (hits, total) = weighted_hits(&g, &counts, |m| test.is_small(m));
        (
            Proportion::wilson(hits, total),
            Some(fraction(hits, total)),
        )
    } else {
        let hits = monte_carlo(word, &test.group, samples, seed, |m| test.is_small(m));
        (Proportion::wilson(hits, samples), None)
    };
    Ok(SmallCentralizerReport {
        word: word.clone(),
        group: spec.trim().to_string(),
        rank,
        c,
        samples,
        seed,
        measure: test.measure,
        estimate,
        exact,
    })
}

/// `q^{−f k ((k−1) l D − 2)}`.
pub fn big_kernel_bound(q: u32, f: u32, l: u32, d: u32, k: u32) -> f64 {
    let exponent = -(f as f64) * k as f64 * ((k as f64 - 1.0) * l as f64 * d as f64 - 2.0);
    (q as f64).powf(exponent)
}

#[derive(Clone, Debug, Serialize)]
pub struct BigKernelReport {
    pub word: Word,
    pub group: String,
    pub degree: u32,
    pub k: u32,
    pub l: u32,
    pub f: u32,
    /// Kernel dimension threshold `2lDk`.
    pub threshold: usize,
    pub samples: u64,
    pub seed: u64,
    /// `Pr[∃ monic Q, deg Q = D : dim ker Q(w(h⃗)) ≥ 2lDk]`.
    pub estimate: Proportion,
    pub exact: Option<String>,
    pub bound: f64,
    /// The lower Wilson endpoint exceeds the bound.
    pub exceeds_bound: bool,
}

/// Monte Carlo (or, with `samples = 0`, exhaustive) estimate of the event
/// bounded by [`big_kernel_bound`], trying every monic `Q` of degree `D`.
#[allow(clippy::too_many_arguments)]
pub fn big_kernel_estimate(
    word: &Word,
    spec: &str,
    degree: u32,
    k: u32,
    l: u32,
    f: u32,
    samples: u64,
    seed: u64,
) -> Result<BigKernelReport> {
    if degree == 0 || k == 0 || l == 0 || !(1..=2).contains(&f) {
        return Err(Error::arg("need D, k, l ≥ 1 and f ∈ {1, 2}"));
    }
    let group = MatrixGroup::parse(spec)?;
    let q = group.q();
    let count = (q as u64).checked_pow(degree).filter(|&c| c <= 1 << 16).ok_or_else(|| {
        Error::Guard {
            what: "monic polynomials of degree D",
            requested: (q as u128).saturating_pow(degree),
            limit: 1 << 16,
        }
    })?;
    let polys: Vec<Poly> = (0..count)
        .map(|mut code| {
            let mut coeffs: Vec<Fe> = (0..degree)
                .map(|_| {
                    let c = (code % q as u64) as Fe;
                    code /= q as u64;
                    c
                })
                .collect();
            coeffs.push(1);
            Poly::new(coeffs)
        })
        .collect();
    let threshold = 2 * (l * degree * k) as usize;
    let field = group.field.clone();
    let big = |m: &FqMatrix| {
        threshold <= m.dim() && polys.iter().any(|p| kernel_dim(m, p, &field) >= threshold)
    };
    let (estimate, exact) = if samples == 0 {
        let g = FiniteGroup::construct_with_guard(spec, MATERIALIZE_GUARD)?;
        let counts = fibre_counts(word, &g, EXHAUSTIVE_BUDGET)?;
        let (hits, total) = weighted_hits(&g, &counts, big);
        (Proportion::wilson(hits, total), Some(fraction(hits, total)))
    } else {
        let hits = monte_carlo(word, &group, samples, seed, big);
        (Proportion::wilson(hits, samples), None)
    };
    let bound = big_kernel_bound(q, f, l, degree, k);
    Ok(BigKernelReport {
        word: word.clone(),
        group: spec.trim().to_string(),
        degree,
        k,
        l,
        f,
        threshold,
        samples,
        seed,
        estimate,
        exact,
        bound,
        exceeds_bound: estimate.lower > bound,
    })
}

fn monte_carlo(
    word: &Word,
    group: &MatrixGroup,
    samples: u64,
    seed: u64,
    pred: impl Fn(&FqMatrix) -> bool + Sync + Send,
) -> u64 {
    let d = word.arity();
    rng::blocked(
        samples,
        seed,
        || 0u64,
        |rng, hits| {
            let args: Vec<FqMatrix> = (0..d).map(|_| group.random(rng)).collect();
            if pred(&word.evaluate(group, &args)) {
                *hits += 1;
            }
        },
        |a, b| a + b,
    )
}

/// `(Σ counts[g]·[pred g], Σ counts[g])`.
fn weighted_hits(
    g: &FiniteGroup,
    counts: &[u64],
    pred: impl Fn(&FqMatrix) -> bool,
) -> (u64, u64) {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .fold((0, 0), |(hits, total), (x, &c)| {
            let m = g.matrix(x as u32).expect("matrix group");
            (hits + if pred(&m) { c } else { 0 }, total + c)
        })
}

fn fraction(hits: u64, total: u64) -> String {
    BigRational::new(BigUint::from(hits).into(), BigUint::from(total).into()).to_string()
}

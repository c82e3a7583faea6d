//! Counting homomorphisms from one-relator groups `⟨x₁, …, x_d | w⟩` into
//! finite groups, and the subgroup counts that follow from them.

mod perms;

use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chartab::{fourier_coefficients, CharacterTable};
use crate::dist::{exact_distribution_with_budget, fibre_counts, CompiledWord, DEFAULT_EVAL_BUDGET};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::rng;
use crate::stats::Proportion;
use crate::words::Word;

pub use perms::MAX_DEGREE;

/// Tuples enumerated by the subgroup counters.
pub const DEFAULT_TUPLE_BUDGET: u128 = 60_000_000;

/// Fewer accepted samples than this makes a Monte Carlo epimorphism
/// estimate fail.
pub const MIN_MC_SOLUTIONS: u64 = 100;

/// `Hom(Γ, G)` for `Γ = ⟨x₁, …, x_d | w⟩`, as the fibre of `w` over `1`.
#[derive(Clone, Debug, Serialize)]
pub struct HomSet {
    pub relator: Word,
    pub arity: usize,
    pub group: String,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solutions: Option<Vec<Vec<Elem>>>,
}

/// `|w⁻¹(1)|` by enumerating `G^d`.
pub fn hom_count(word: &Word, group: &FiniteGroup) -> Result<u64> {
    Ok(fibre_counts(word, group, DEFAULT_EVAL_BUDGET)?[group.identity() as usize])
}

/// The hom set, listing its tuples when there are at most `list_limit`.
pub fn hom_set(word: &Word, group: &Arc<FiniteGroup>, list_limit: Option<usize>) -> Result<HomSet> {
    let count = hom_count(word, group)?;
    let solutions = match list_limit {
        Some(limit) if count as u128 > limit as u128 => {
            return Err(Error::Guard {
                what: "listed homomorphisms",
                requested: count as u128,
                limit: limit as u128,
            })
        }
        Some(_) => Some(solution_tuples(word, group, DEFAULT_EVAL_BUDGET)?),
        None => None,
    };
    Ok(HomSet {
        relator: word.clone(),
        arity: word.arity(),
        group: group.spec().to_string(),
        count,
        solutions,
    })
}

/// `|G|^{d−1} Σ_χ a_{w,χ} χ(1)`, the character-side count of `Hom(Γ, G)`.
pub fn hom_count_via_characters(word: &Word, t: &CharacterTable) -> Result<f64> {
    let group = t.group();
    let p = exact_distribution_with_budget(word, group, DEFAULT_EVAL_BUDGET)?;
    let a = fourier_coefficients(&p, t)?;
    let s: f64 = a
        .values
        .iter()
        .zip(t.degrees())
        .map(|(c, &d)| c.re * d as f64)
        .sum();
    Ok(s * (group.order() as f64).powi(word.arity() as i32 - 1))
}

/// Every tuple in `G^d` with `w = 1`, in lexicographic order.
fn solution_tuples(word: &Word, group: &FiniteGroup, budget: u128) -> Result<Vec<Vec<Elem>>> {
    let d = word.arity();
    let order = group.order();
    let tuples = (order as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if tuples > budget {
        return Err(Error::Guard {
            what: "hom-set enumeration",
            requested: tuples,
            limit: budget,
        });
    }
    if d == 0 {
        return Ok(if word.is_trivial() { vec![vec![]] } else { vec![] });
    }
    let compiled = CompiledWord::new(word, group);
    let id = group.identity();
    let chunks: Vec<Vec<Vec<Elem>>> = (0..order as Elem)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut args = vec![0 as Elem; d];
            args[0] = first;
            loop {
                if compiled.eval(&args) == id {
                    out.push(args.clone());
                }
                if !odometer(&mut args[1..], order as Elem) {
                    return out;
                }
            }
        })
        .collect();
    Ok(chunks.concat())
}

/// Advances the digits (last fastest); `false` once they wrap around.
fn odometer(digits: &mut [Elem], base: Elem) -> bool {
    for x in digits.iter_mut().rev() {
        *x += 1;
        if *x < base {
            return true;
        }
        *x = 0;
    }
    false
}

/// `|Hom_trans(Γ, S_n)|` and `|Hom_prim(Γ, S_n)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ActionCounts {
    pub n: usize,
    pub homs: u128,
    pub transitive: u128,
    pub primitive: u128,
}

/// Enumerates `Hom(Γ, S_n)`. When some variable occurs once with exponent
/// `±1` it is solved for instead of enumerated.
pub fn action_counts(word: &Word, n: usize, budget: u128) -> Result<ActionCounts> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::arg(format!("degree must be in 1..={MAX_DEGREE}")));
    }
    let d = word.arity();
    let elems = perms::all(n);
    let m = elems.len();
    let solved = solvable_variable(word);
    let free = d - solved.is_some() as usize;
    let tuples = (m as u128).checked_pow(free as u32).unwrap_or(u128::MAX);
    if tuples > budget {
        return Err(Error::Guard {
            what: "tuples in S_n^d",
            requested: tuples,
            limit: budget,
        });
    }
    // indices of the enumerated variables
    let enumerated: Vec<usize> = (0..d).filter(|&v| Some(v) != solved.map(|s| s.0)).collect();
    let powers: Vec<Vec<perms::P>> = word
        .syllables()
        .iter()
        .map(|s| elems.iter().map(|p| perms::pow(p, s.exp, n)).collect())
        .collect();
    let id = perms::identity();

    let tally = |idx: &[usize]| -> (u128, u128, u128) {
        // idx[j] is the element index of variable enumerated[j]
        let mut choice: Vec<Option<usize>> = vec![None; d];
        for (j, &v) in enumerated.iter().enumerate() {
            choice[v] = Some(idx[j]);
        }
        let product = |range: std::ops::Range<usize>| {
            word.syllables()[range.clone()]
                .iter()
                .zip(range)
                .fold(id, |acc, (s, k)| {
                    perms::compose(&acc, &powers[k][choice[s.var - 1].unwrap()], n)
                })
        };
        let mut gens: Vec<perms::P> = choice.iter().flatten().map(|&i| elems[i]).collect();
        match solved {
            Some((_, pos, exp)) => {
                // A·x^e·B = 1 ⇒ x^e = A⁻¹B⁻¹
                let a = product(0..pos);
                let b = product(pos + 1..word.syllables().len());
                let xe = perms::inverse(&perms::compose(&b, &a, n), n);
                gens.push(if exp == 1 { xe } else { perms::inverse(&xe, n) });
            }
            None => {
                if product(0..word.syllables().len())[..n] != id[..n] {
                    return (0, 0, 0);
                }
            }
        }
        let t = perms::is_transitive(&gens, n);
        let p = t && perms::is_primitive(&gens, n);
        (1, t as u128, p as u128)
    };

    let (homs, transitive, primitive) = if free == 0 {
        tally(&[])
    } else {
        (0..m)
            .into_par_iter()
            .map(|first| {
                let mut idx = vec![0usize; free];
                idx[0] = first;
                let mut acc = (0u128, 0u128, 0u128);
                loop {
                    let (h, t, p) = tally(&idx);
                    acc = (acc.0 + h, acc.1 + t, acc.2 + p);
                    let mut k = free;
                    loop {
                        if k == 1 {
                            return acc;
                        }
                        k -= 1;
                        idx[k] += 1;
                        if idx[k] < m {
                            break;
                        }
                        idx[k] = 0;
                    }
                }
            })
            .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2))
    };
    Ok(ActionCounts {
        n,
        homs,
        transitive,
        primitive,
    })
}

/// `(variable index, syllable position, exponent)` for a variable that
/// occurs exactly once, with exponent `±1`.
fn solvable_variable(word: &Word) -> Option<(usize, usize, i64)> {
    let syl = word.syllables();
    (0..word.arity()).find_map(|v| {
        let mut occ = syl.iter().enumerate().filter(|(_, s)| s.var == v + 1);
        let (pos, s) = occ.next()?;
        (occ.next().is_none() && s.exp.abs() == 1).then_some((v, pos, s.exp))
    })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn divide_exact(count: u128, n: usize, what: &str) -> Result<u128> {
    let f = factorial(n - 1);
    if !count.is_multiple_of(f) {
        return Err(Error::Invariant(format!(
            "{what} count {count} at n = {n} is not divisible by {f}"
        )));
    }
    Ok(count / f)
}

/// `a_n(Γ) = |Hom_trans(Γ, S_n)| / (n−1)!`.
pub fn subgroup_count(word: &Word, n: usize) -> Result<u128> {
    let c = action_counts(word, n, DEFAULT_TUPLE_BUDGET)?;
    divide_exact(c.transitive, n, "transitive")
}

/// `m_n(Γ) = |Hom_prim(Γ, S_n)| / (n−1)!`, with `m_1 = 0`.
pub fn maximal_subgroup_count(word: &Word, n: usize) -> Result<u128> {
    let c = action_counts(word, n, DEFAULT_TUPLE_BUDGET)?;
    divide_exact(c.primitive, n, "primitive")
}

/// `a_n(F_d)` by Hall's recursion
/// `a_n = n (n!)^{d−1} − Σ_{k<n} ((n−k)!)^{d−1} a_k`.
pub fn free_subgroup_count(d: usize, n: usize) -> u128 {
    let mut a: Vec<u128> = vec![0];
    for m in 1..=n {
        let head = m as u128 * factorial(m).pow(d as u32 - 1);
        let tail: u128 = (1..m)
            .map(|k| factorial(m - k).pow(d as u32 - 1) * a[k])
            .sum();
        a.push(head - tail);
    }
    a[n]
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgrowthRow {
    pub n: usize,
    pub a_n: String,
    pub m_n: String,
    /// `a_n(Γ) / a_n(F_{d−1})`, absent for `d < 2`.
    pub free_ratio: Option<f64>,
}

/// `(n, a_n, m_n)` for `n = 1..=max_n`.
pub fn subgrowth(word: &Word, max_n: usize) -> Result<Vec<SubgrowthRow>> {
    let d = word.arity();
    (1..=max_n)
        .map(|n| {
            let c = action_counts(word, n, DEFAULT_TUPLE_BUDGET)?;
            let a = divide_exact(c.transitive, n, "transitive")?;
            let m = divide_exact(c.primitive, n, "primitive")?;
            let free_ratio = (d >= 2).then(|| a as f64 / free_subgroup_count(d - 1, n) as f64);
            Ok(SubgrowthRow {
                n,
                a_n: a.to_string(),
                m_n: m.to_string(),
                free_ratio,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpiMode {
    Exact,
    MonteCarlo { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct EpiReport {
    pub relator: Word,
    pub group: String,
    pub mode: &'static str,
    /// Homomorphisms found (all of them in exact mode).
    pub homs: u64,
    pub epimorphisms: u64,
    pub probability: f64,
    pub exact: Option<String>,
    pub interval: Option<Proportion>,
}

/// Fraction of homomorphisms `Γ → G` that are onto.
pub fn epimorphism_probability(word: &Word, group: &Arc<FiniteGroup>, mode: EpiMode) -> Result<EpiReport> {
    let d = word.arity();
    let (homs, epis) = match mode {
        EpiMode::Exact => {
            let sols = solution_tuples(word, group, DEFAULT_EVAL_BUDGET)?;
            let epis = sols.par_iter().filter(|t| group.generates(t)).count();
            (sols.len() as u64, epis as u64)
        }
        EpiMode::MonteCarlo { samples, seed } => {
            let compiled = CompiledWord::new(word, group);
            let id = group.identity();
            let (h, e) = rng::blocked(
                samples,
                seed,
                || (0u64, 0u64),
                |rng, acc| {
                    let args: Vec<Elem> =
                        (0..d).map(|_| rng.gen_range(0..group.order() as Elem)).collect();
                    if compiled.eval(&args) == id {
                        acc.0 += 1;
                        if group.generates(&args) {
                            acc.1 += 1;
                        }
                    }
                },
                |a, b| (a.0 + b.0, a.1 + b.1),
            );
            if h < MIN_MC_SOLUTIONS {
                return Err(Error::Numerical(format!(
                    "rejection sampling found only {h} solutions in {samples} draws (need {MIN_MC_SOLUTIONS})"
                )));
            }
            (h, e)
        }
    };
    if homs == 0 {
        return Err(Error::Invariant("no homomorphisms found".into()));
    }
    let exact = matches!(mode, EpiMode::Exact).then(|| {
        BigRational::new(BigUint::from(epis).into(), BigUint::from(homs).into()).to_string()
    });
    Ok(EpiReport {
        relator: word.clone(),
        group: group.spec().to_string(),
        mode: match mode {
            EpiMode::Exact => "exact",
            EpiMode::MonteCarlo { .. } => "mc",
        },
        homs,
        epimorphisms: epis,
        probability: epis as f64 / homs as f64,
        exact,
        interval: matches!(mode, EpiMode::MonteCarlo { .. })
            .then(|| Proportion::wilson(epis, homs)),
    })
}

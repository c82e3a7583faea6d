use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::CharacterTable;
use crate::dist::{exact_distribution, Distribution, Norm};
use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup};
use crate::words::Word;

/// `a_χ = Σ_g p(g) χ(g⁻¹)` for each irreducible `χ`, in table order.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCoefficients {
    pub values: Vec<Complex64>,
}

impl FourierCoefficients {
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }
}

fn check_group(p: &Distribution, t: &CharacterTable) -> Result<()> {
    if p.group().spec() != t.group().spec() {
        return Err(Error::GroupMismatch(
            p.group().spec().to_string(),
            t.group().spec().to_string(),
        ));
    }
    Ok(())
}

pub fn fourier_coefficients(p: &Distribution, t: &CharacterTable) -> Result<FourierCoefficients> {
    check_group(p, t)?;
    let classes = t.group().classes();
    // Mass per class of g⁻¹.
    let mut mass = vec![0.0f64; classes.len()];
    for g in t.group().elements() {
        mass[classes.inverse_class(classes.class_of(g))] += p.prob(g);
    }
    let values = (0..t.len())
        .map(|c| {
            mass.iter()
                .enumerate()
                .map(|(j, m)| t.value(c, j) * *m)
                .sum()
        })
        .collect();
    Ok(FourierCoefficients { values })
}

/// `p = |G|⁻¹ Σ_χ a_χ χ`; fails if an imaginary part exceeds `10⁻⁹`.
pub fn reconstruct(a: &FourierCoefficients, t: &CharacterTable) -> Result<Distribution> {
    let group = t.group();
    let order = group.order() as f64;
    let classes = group.classes();
    let per_class: Vec<Complex64> = (0..classes.len())
        .map(|j| {
            (0..t.len())
                .map(|c| a.values[c] * t.value(c, j))
                .sum::<Complex64>()
                / order
        })
        .collect();
    if let Some(z) = per_class.iter().find(|z| z.im.abs() > 1e-9) {
        return Err(Error::Numerical(format!(
            "reconstructed value {z} is not real"
        )));
    }
    let values = group
        .elements()
        .map(|g| per_class[classes.class_of(g)].re)
        .collect();
    Distribution::from_floats(group, values)
}

/// `max_χ |a_{w₁w₂,χ} − a_{w₁,χ} a_{w₂,χ} / χ(1)|` with `w₁w₂` taken on
/// disjoint variables.
pub fn check_multiplicativity(
    w1: &Word,
    w2: &Word,
    group: &Arc<FiniteGroup>,
    t: &CharacterTable,
) -> Result<f64> {
    let product = Word::disjoint_product(&[w1.clone(), w2.clone()])?;
    let a1 = fourier_coefficients(&exact_distribution(w1, group)?, t)?;
    let a2 = fourier_coefficients(&exact_distribution(w2, group)?, t)?;
    let a12 = fourier_coefficients(&exact_distribution(&product, group)?, t)?;
    Ok((0..t.len())
        .map(|c| (a12.values[c] - a1.values[c] * a2.values[c] / t.degree(c) as f64).norm())
        .fold(0.0, f64::max))
}

/// `Pr[x₁x₂ = g]` for `xᵢ` uniform in class `Cᵢ`, from
/// `|G|⁻¹ Σ_χ χ(C₁)χ(C₂)χ(g⁻¹)/χ(1)`.
pub fn class_convolution_probability(c1: usize, c2: usize, g: Elem, t: &CharacterTable) -> f64 {
    let classes = t.group().classes();
    let gi = classes.inverse_class(classes.class_of(g));
    let s: Complex64 = (0..t.len())
        .map(|c| t.value(c, c1) * t.value(c, c2) * t.value(c, gi) / t.degree(c) as f64)
        .sum();
    s.re / t.group().order() as f64
}

/// The same probability by a double loop over `C₁ × C₂`.
pub fn class_convolution_bruteforce(group: &FiniteGroup, c1: usize, c2: usize, g: Elem) -> f64 {
    let members = group.classes().members();
    let (a, b) = (&members[c1], &members[c2]);
    let hits = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| group.mul(x, y) == g)
        .count();
    hits as f64 / (a.len() * b.len()) as f64
}

/// `ζ_G(s) = Σ_χ χ(1)^{−s}`.
pub fn witten_zeta(t: &CharacterTable, s: f64) -> f64 {
    t.degrees().iter().map(|&d| (d as f64).powf(-s)).sum()
}

fn require_symmetric(p: &Distribution) -> Result<()> {
    if !p.group().is_symmetric() {
        return Err(Error::arg(format!(
            "sign sum needs a symmetric group, got `{}`",
            p.group().spec()
        )));
    }
    Ok(())
}

/// `Σ_g p(g) sgn(g)`.
pub fn sign_sum(p: &Distribution) -> Result<f64> {
    require_symmetric(p)?;
    let g = p.group();
    Ok(g.elements()
        .map(|x| p.prob(x) * g.sign(x).unwrap() as f64)
        .sum())
}

/// Exact `Σ_g p(g) sgn(g)` for an exact distribution.
pub fn sign_sum_exact(p: &Distribution) -> Result<BigRational> {
    require_symmetric(p)?;
    let values = p
        .exact_values()
        .ok_or_else(|| Error::arg("exact sign sum needs an exact distribution"))?;
    let g = p.group();
    Ok(g.elements().fold(BigRational::zero(), |acc, x| {
        let v = &values[x as usize];
        if g.sign(x) == Some(1) {
            acc + v
        } else {
            acc - v
        }
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientBoundRow {
    pub q: u32,
    pub order: usize,
    /// `max_χ |a_{w,χ}|`, trivial character included.
    pub max_abs: f64,
    /// Largest `log|a_{w,χ}| / log χ(1)` over `χ(1) > 1` with `a ≠ 0`.
    pub max_exponent: Option<f64>,
}

/// `max_χ |a_{w,χ}|` over `PSL₂(q)` for each `q`.
pub fn coefficient_bound_report(word: &Word, qs: &[u32]) -> Result<Vec<CoefficientBoundRow>> {
    qs.iter()
        .map(|&q| {
            let group = FiniteGroup::construct(&format!("PSL2:{q}"))?;
            let t = CharacterTable::compute(&group)?;
            let a = fourier_coefficients(&exact_distribution(word, &group)?, &t)?;
            let max_exponent = (0..t.len())
                .filter(|&c| t.degree(c) > 1 && a.values[c].norm() > 1e-12)
                .map(|c| a.values[c].norm().ln() / (t.degree(c) as f64).ln())
                .reduce(f64::max);
            Ok(CoefficientBoundRow {
                q,
                order: group.order(),
                max_abs: a.max_abs(),
                max_exponent,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RatioViolation {
    pub character: usize,
    pub class: usize,
    pub fix: usize,
    pub value_abs: f64,
    pub bound: f64,
}

/// Pairs `(χ, C)` with `fix(C) ≤ n^{1−ε}` but `|χ(C)| > χ(1)^{1−ε/3}`.
/// Diagnostic only: the inequality is asymptotic in `n`.
pub fn character_ratio_check(t: &CharacterTable, eps: f64) -> Result<Vec<RatioViolation>> {
    let group = t.group();
    let n = group
        .degree()
        .ok_or_else(|| Error::arg("character ratio check needs S_n or A_n"))?;
    let threshold = (n as f64).powf(1.0 - eps);
    let classes = group.classes();
    let mut out = Vec::new();
    for (j, class) in classes.classes().iter().enumerate() {
        let fix = group.fix(class.representative).unwrap();
        if fix as f64 > threshold {
            continue;
        }
        for c in 0..t.len() {
            let bound = (t.degree(c) as f64).powf(1.0 - eps / 3.0);
            let value_abs = t.value(c, j).norm();
            if value_abs > bound + 1e-9 {
                out.push(RatioViolation {
                    character: c,
                    class: j,
                    fix,
                    value_abs,
                    bound,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FourTrendRow {
    pub q: u32,
    pub order: usize,
    /// `Σ_{χ≠1} |a_{w,χ}| χ(1)` for `w = x₁²x₂²x₃²x₄²`.
    pub fourier_bound: f64,
    /// `‖p_w − U‖_{L^∞}` from the reconstructed distribution.
    pub linf: f64,
}

/// `w = x₁²x₂²x₃²x₄²` on `PSL₂(q)`, via `a_{w,χ} = a_{x²,χ}⁴ / χ(1)³`.
pub fn four_trend(qs: &[u32]) -> Result<Vec<FourTrendRow>> {
    let square = Word::parse("x1^2")?;
    qs.iter()
        .map(|&q| {
            let group = FiniteGroup::construct(&format!("PSL2:{q}"))?;
            let t = CharacterTable::compute(&group)?;
            let a = fourier_coefficients(&exact_distribution(&square, &group)?, &t)?;
            let four = FourierCoefficients {
                values: (0..t.len())
                    .map(|c| a.values[c].powi(4) / (t.degree(c) as f64).powi(3))
                    .collect(),
            };
            let fourier_bound = (1..t.len())
                .map(|c| four.values[c].norm() * t.degree(c) as f64)
                .sum();
            let p = reconstruct(&four, &t)?;
            let linf = p.lp_distance(&crate::dist::uniform(&group), Norm::Inf)?;
            Ok(FourTrendRow {
                q,
                order: group.order(),
                fourier_bound,
                linf,
            })
        })
        .collect()
}

//! Complex character tables from the class algebra.
//!
//! For each class `C_j` the structure matrix `M_j[i][l] = #{x ∈ C_j : x⁻¹g_l ∈
//! C_i}` has the central characters `ω_χ(C_i) = |C_i|χ(g_i)/χ(1)` as common
//! eigenvectors. Conjugating by `diag(√|C_i|)` makes every `M_j` normal, so a
//! random combination `Σ r_j B_j + conj(r_j) B_jᴴ` is Hermitian and its
//! eigenvectors are the characters up to scaling.

mod fourier;

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

pub use fourier::{
    check_multiplicativity, class_convolution_bruteforce, class_convolution_probability,
    coefficient_bound_report, character_ratio_check, fourier_coefficients, four_trend,
    reconstruct, sign_sum, sign_sum_exact, witten_zeta, CoefficientBoundRow, FourierCoefficients,
    FourTrendRow, RatioViolation,
};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const DEFAULT_CLASS_GUARD: usize = 300;
const SEED: u64 = 0x5eed_c1a5;
const ATTEMPTS: u64 = 16;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    degrees: Vec<u64>,
    /// `values[χ][class]`.
    values: Vec<Vec<Complex64>>,
}

impl CharacterTable {
    pub fn compute(group: &Arc<FiniteGroup>) -> Result<Self> {
        Self::compute_with_guard(group, DEFAULT_CLASS_GUARD)
    }

    pub fn compute_with_guard(group: &Arc<FiniteGroup>, guard: usize) -> Result<Self> {
        let classes = group.classes();
        let k = classes.len();
        if k > guard {
            return Err(Error::Guard {
                what: "number of conjugacy classes",
                requested: k as u128,
                limit: guard as u128,
            });
        }
        let structure = structure_matrices(group);
        let sizes = classes.sizes();
        let roots: Vec<f64> = sizes.iter().map(|&s| (s as f64).sqrt()).collect();
        let normal: Vec<DMatrix<Complex64>> = structure
            .iter()
            .map(|m| {
                DMatrix::from_fn(k, k, |i, l| {
                    Complex64::new(m[i * k + l] as f64 * roots[l] / roots[i], 0.0)
                })
            })
            .collect();

        let mut last_err = None;
        for attempt in 0..ATTEMPTS {
            match attempt_table(group, &normal, &sizes, attempt) {
                Ok(table) => return Ok(table),
                Err(e) => last_err = Some(e),
            }
        }
        Err(last_err.unwrap())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Number of irreducible characters, `k(G)`.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn value(&self, chi: usize, class: usize) -> Complex64 {
        self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[Complex64] {
        &self.values[chi]
    }

    /// `χ(g)` for an element.
    pub fn at(&self, chi: usize, g: u32) -> Complex64 {
        self.values[chi][self.group.classes().class_of(g)]
    }

    /// Largest deviation of `Σ_j |C_j| χ(C_j) conj χ'(C_j) / |G|` from `δ`.
    pub fn row_orthogonality_error(&self) -> f64 {
        let sizes = self.group.classes().sizes();
        let order = self.group.order() as f64;
        let mut worst: f64 = 0.0;
        for a in 0..self.len() {
            for b in 0..self.len() {
                let s: Complex64 = (0..sizes.len())
                    .map(|j| self.values[a][j] * self.values[b][j].conj() * sizes[j] as f64)
                    .sum();
                let target = if a == b { order } else { 0.0 };
                worst = worst.max((s - target).norm() / order);
            }
        }
        worst
    }

    /// Largest deviation of `Σ_χ χ(C_j) conj χ(C_j') |C_j| / |G|` from `δ`.
    pub fn column_orthogonality_error(&self) -> f64 {
        let sizes = self.group.classes().sizes();
        let order = self.group.order() as f64;
        let k = sizes.len();
        let mut worst: f64 = 0.0;
        for j in 0..k {
            for l in 0..k {
                let s: Complex64 = (0..self.len())
                    .map(|c| self.values[c][j] * self.values[c][l].conj())
                    .sum();
                let scale = order / sizes[j] as f64;
                let target = if j == l { scale } else { 0.0 };
                worst = worst.max((s - target).norm() / scale);
            }
        }
        worst
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes = self.group.classes();
        json!({
            "group": self.group.spec(),
            "classes": classes.classes().iter().map(|c| json!({
                "size": c.size,
                "representative": c.representative,
            })).collect::<Vec<_>>(),
            "characters": (0..self.len()).map(|c| json!({
                "degree": self.degrees[c],
                "values": self.values[c].iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Flattened `k×k` structure matrices, one per class.
fn structure_matrices(group: &FiniteGroup) -> Vec<Vec<u64>> {
    let classes = group.classes();
    let k = classes.len();
    let members = classes.members();
    let reps: Vec<u32> = classes.classes().iter().map(|c| c.representative).collect();
    members
        .iter()
        .map(|cj| {
            let mut m = vec![0u64; k * k];
            for &x in cj {
                let xi = group.inv(x);
                for (l, &gl) in reps.iter().enumerate() {
                    let i = classes.class_of(group.mul(xi, gl));
                    m[i * k + l] += 1;
                }
            }
            m
        })
        .collect()
}

fn attempt_table(
    group: &Arc<FiniteGroup>,
    normal: &[DMatrix<Complex64>],
    sizes: &[usize],
    attempt: u64,
) -> Result<CharacterTable> {
    let k = sizes.len();
    let order = group.order() as f64;
    let id = group.classes().identity_class();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(attempt);
    let mut h = DMatrix::<Complex64>::zeros(k, k);
    for b in normal {
        let r = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        h += b * r + b.adjoint() * r.conj();
    }
    let eig = h.clone().symmetric_eigen();

    let mut evals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    evals.sort_by(f64::total_cmp);
    let scale = evals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if let Some(w) = evals.windows(2).find(|w| w[1] - w[0] < 1e-7 * scale) {
        return Err(Error::Numerical(format!(
            "eigenvalues {} and {} of the combined class matrix are not separated; matrix:\n{h}",
            w[0], w[1]
        )));
    }

    let mut chars: Vec<(u64, Vec<Complex64>)> = Vec::with_capacity(k);
    for c in 0..k {
        let x = eig.eigenvectors.column(c);
        let mut y: Vec<Complex64> = (0..k).map(|l| x[l] / (sizes[l] as f64).sqrt()).collect();
        let pivot = y[id];
        if pivot.norm() < 1e-12 {
            return Err(Error::Numerical("eigenvector vanishes at the identity".into()));
        }
        y.iter_mut().for_each(|v| *v /= pivot);
        let weight: f64 = (0..k).map(|l| sizes[l] as f64 * y[l].norm_sqr()).sum();
        let d2 = order / weight;
        let d = d2.sqrt();
        let rounded = d.round();
        if (d - rounded).abs() > 1e-6 || rounded < 1.0 {
            return Err(Error::Numerical(format!(
                "character degree {d} is not an integer"
            )));
        }
        y.iter_mut().for_each(|v| *v *= rounded);
        chars.push((rounded as u64, y));
    }

    let key = |row: &[Complex64]| -> Vec<(i64, i64)> {
        row.iter()
            .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
            .collect()
    };
    chars.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| key(&b.1).cmp(&key(&a.1))));

    let table = CharacterTable {
        group: group.clone(),
        degrees: chars.iter().map(|c| c.0).collect(),
        values: chars.into_iter().map(|c| c.1).collect(),
    };
    let sum_sq: u64 = table.degrees.iter().map(|d| d * d).sum();
    if sum_sq != group.order() as u64 {
        return Err(Error::Numerical(format!(
            "Σ χ(1)² = {sum_sq}, expected {}",
            group.order()
        )));
    }
    let (row, col) = (
        table.row_orthogonality_error(),
        table.column_orthogonality_error(),
    );
    if row > 1e-9 || col > 1e-9 {
        return Err(Error::Numerical(format!(
            "orthogonality residuals {row:e} (rows) and {col:e} (columns)"
        )));
    }
    Ok(table)
}

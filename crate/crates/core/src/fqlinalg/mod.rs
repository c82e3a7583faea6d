//! Linear algebra over `GF(q)`: characteristic polynomials, Jordan data read
//! off kernel dimensions, and centralizer sizes.

mod experiment;
mod poly;

use std::collections::BTreeMap;

use serde::Serialize;

pub use experiment::{
    big_kernel_bound, big_kernel_estimate, small_centralizer_experiment, BigKernelReport,
    CentralizerMeasure, SmallCentralizerReport,
};
pub use poly::{factor, is_irreducible, Factorization, Poly};

use crate::error::{Error, Result};
use crate::field::{matrix_rank, Fe, Field, FqMatrix};
use crate::group::FiniteGroup;

/// Largest group `centralizer_order_bruteforce` will enumerate by default.
pub const DEFAULT_ENUMERATION_GUARD: u64 = 1_000_000;

/// Characteristic polynomial `det(xI − g)`, via reduction to upper
/// Hessenberg form.
pub fn charpoly(g: &FqMatrix, f: &Field) -> Poly {
    let n = g.dim();
    let mut h: Vec<Vec<Fe>> = (0..n).map(|i| (0..n).map(|j| g.get(i, j)).collect()).collect();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]).expect("nonzero pivot");
        for i in j + 2..n {
            let m = f.mul(h[i][j], inv);
            if m == 0 {
                continue;
            }
            // R_i -= m R_{j+1}, then C_{j+1} += m C_i keeps the similarity class
            for c in 0..n {
                let v = f.mul(m, h[j + 1][c]);
                h[i][c] = f.sub(h[i][c], v);
            }
            for row in h.iter_mut() {
                let v = f.mul(m, row[i]);
                row[j + 1] = f.add(row[j + 1], v);
            }
        }
    }
    // p_k = (x − h_kk) p_{k−1} − Σ_{i<k} h_ik (Π_{i<m≤k} h_{m,m−1}) p_{i−1}
    let mut p: Vec<Poly> = vec![Poly::one()];
    for k in 0..n {
        let mut next = Poly::linear(h[k][k], f).mul(&p[k], f);
        let mut sub = 1;
        for i in (0..k).rev() {
            sub = f.mul(sub, h[i + 1][i]);
            if sub == 0 {
                break;
            }
            let c = f.mul(h[i][k], sub);
            next = next.sub(&p[i].scale(c, f), f);
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Jordan block sizes of a matrix, grouped by the monic irreducible factor
/// of the characteristic polynomial they belong to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanData {
    n: usize,
    q: u32,
    blocks: BTreeMap<Poly, Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
struct BlockRow {
    factor: String,
    degree: usize,
    blocks: Vec<usize>,
}

impl JordanData {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Block sizes per factor, non-increasing.
    pub fn blocks(&self) -> &BTreeMap<Poly, Vec<usize>> {
        &self.blocks
    }

    /// `Σ_{P,m} a_{P,m} deg P`, which equals the matrix dimension.
    pub fn total(&self) -> usize {
        self.blocks
            .iter()
            .map(|(p, a)| p.deg() * a.iter().sum::<usize>())
            .sum()
    }

    /// `Σ_P deg P Σ_m (2m−1) a_{P,m}`.
    pub fn centralizer_dim(&self) -> usize {
        self.blocks
            .iter()
            .map(|(p, a)| {
                p.deg()
                    * a.iter()
                        .enumerate()
                        .map(|(i, &am)| (2 * i + 1) * am)
                        .sum::<usize>()
            })
            .sum()
    }

    /// Exact `|C_{GL_n(q)}(g)|`: each factor of degree `d` contributes
    /// `Q^{dim − Σ mᵢ²} Π |GL_{mᵢ}(Q)|` with `Q = q^d` and `mᵢ` the number of
    /// blocks of size `i`. Saturates at `u128::MAX`.
    pub fn gl_centralizer_order(&self) -> u128 {
        self.blocks
            .iter()
            .fold(1u128, |acc, (p, a)| {
                let big_q = (self.q as u128).saturating_pow(p.deg() as u32);
                let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
                for &s in a {
                    *mult.entry(s).or_default() += 1;
                }
                let dim: usize = a.iter().enumerate().map(|(i, &am)| (2 * i + 1) * am).sum();
                let sq: usize = mult.values().map(|m| m * m).sum();
                let gl = mult
                    .values()
                    .fold(1u128, |acc, &m| acc.saturating_mul(gl_order_u128(m, big_q)));
                acc.saturating_mul(big_q.saturating_pow((dim - sq) as u32))
                    .saturating_mul(gl)
            })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<BlockRow> = self
            .blocks
            .iter()
            .map(|(p, a)| BlockRow {
                factor: p.to_string(),
                degree: p.deg(),
                blocks: a.clone(),
            })
            .collect();
        serde_json::json!({ "n": self.n, "q": self.q, "factors": rows })
    }
}

fn gl_order_u128(m: usize, q: u128) -> u128 {
    let qm = q.saturating_pow(m as u32);
    (0..m as u32).fold(1u128, |acc, i| {
        acc.saturating_mul(qm.saturating_sub(q.saturating_pow(i)))
    })
}

/// Jordan data of an invertible matrix. For each irreducible `P` of the
/// characteristic polynomial the numbers `r_m = (dim ker P(g)^m − dim ker
/// P(g)^{m−1}) / deg P` count blocks of size at least `m`; the block sizes
/// are the conjugate partition.
pub fn jordan_data(g: &FqMatrix, f: &Field) -> Result<JordanData> {
    if !g.is_invertible(f) {
        return Err(Error::arg("jordan_data needs an invertible matrix"));
    }
    let n = g.dim();
    let fac = factor(&charpoly(g, f), f)?;
    let mut blocks = BTreeMap::new();
    for (p, mult) in fac.factors {
        let d = p.deg();
        let target = d * mult as usize;
        let pg = g.eval_poly(p.coeffs(), f);
        let mut power = pg.clone();
        let mut prev = 0;
        let mut r = Vec::new();
        loop {
            let dm = power.kernel_dim(f);
            if dm == prev || !(dm - prev).is_multiple_of(d) {
                return Err(Error::Invariant(format!(
                    "kernel dimensions of P(g)^m stalled at {dm} (expected {target})"
                )));
            }
            r.push((dm - prev) / d);
            prev = dm;
            if dm == target {
                break;
            }
            power = power.mul(&pg, f);
        }
        let sizes: Vec<usize> = (1..=r[0])
            .map(|i| r.iter().filter(|&&rm| rm >= i).count())
            .collect();
        blocks.insert(p, sizes);
    }
    let jd = JordanData {
        n,
        q: f.order(),
        blocks,
    };
    if jd.total() != n {
        return Err(Error::Invariant(format!(
            "Jordan blocks cover {} of {n} dimensions",
            jd.total()
        )));
    }
    Ok(jd)
}

/// `dim ker Q(g)`.
pub fn kernel_dim(g: &FqMatrix, q: &Poly, f: &Field) -> usize {
    g.eval_poly(q.coeffs(), f).kernel_dim(f)
}

/// Dimension of `{X ∈ M_n : Xg = gX}`, from the rank of the `n² × n²`
/// system.
pub fn commuting_dim(g: &FqMatrix, f: &Field) -> usize {
    let n = g.dim();
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // (Xg − gX)_ij = Σ_k X_ik g_kj − g_ik X_kj
            let mut row = vec![0; n * n];
            for k in 0..n {
                let a = &mut row[i * n + k];
                *a = f.add(*a, g.get(k, j));
                let b = &mut row[k * n + j];
                *b = f.sub(*b, g.get(i, k));
            }
            rows.push(row);
        }
    }
    n * n - matrix_rank(rows, f)
}

/// `|{h ∈ G : hg = gh}|` by enumeration.
pub fn centralizer_order_bruteforce(g: &FqMatrix, group: &FiniteGroup, guard: u64) -> Result<usize> {
    if group.order() as u64 > guard {
        return Err(Error::Guard {
            what: "centralizer enumeration",
            requested: group.order() as u128,
            limit: guard as u128,
        });
    }
    let x = group
        .encode_matrix(g)
        .ok_or_else(|| Error::arg(format!("matrix is not an element of {}", group.spec())))?;
    Ok(group.centralizer_order(x))
}

/// One row of the `centralizer --all` listing.
#[derive(Clone, Debug, Serialize)]
pub struct CentralizerRow {
    pub element: u32,
    pub code: u64,
    pub dim: usize,
    pub order: u128,
}

/// Centralizer dimension and exact order for every element of a `GL`
/// group.
pub fn centralizer_table(group: &FiniteGroup) -> Result<Vec<CentralizerRow>> {
    let (Some(f), Some(_)) = (group.field(), group.matrix_dim()) else {
        return Err(Error::arg(format!("{} is not a matrix group", group.spec())));
    };
    let gl = matches!(group.kind(), crate::group::GroupKind::GeneralLinear { .. });
    group
        .elements()
        .map(|x| {
            let m = group.matrix(x).expect("matrix group");
            let jd = jordan_data(&m, f)?;
            let order = if gl {
                jd.gl_centralizer_order()
            } else {
                group.centralizer_order(x) as u128
            };
            Ok(CentralizerRow {
                element: x,
                code: m.code(f.order()),
                dim: jd.centralizer_dim(),
                order,
            })
        })
        .collect()
}

use super::{Fe, Field};

/// Square matrix over GF(q), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    n: usize,
    data: Vec<Fe>,
}

impl FqMatrix {
    pub fn zero(n: usize) -> Self {
        FqMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(n: usize, c: Fe) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Fe>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        FqMatrix {
            n,
            data: rows.concat(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Fe] {
        &self.data
    }

    /// Row-major base-q code; the (0,0) entry is the most significant digit.
    pub fn code(&self, q: u32) -> u64 {
        self.data.iter().fold(0u64, |acc, &e| acc * q as u64 + e as u64)
    }

    pub fn from_code(n: usize, q: u32, mut code: u64) -> Self {
        let mut data = vec![0; n * n];
        for slot in data.iter_mut().rev() {
            *slot = (code % q as u64) as Fe;
            code /= q as u64;
        }
        FqMatrix { n, data }
    }

    pub fn mul(&self, other: &Self, f: &Field) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b != 0 {
                        let idx = i * n + j;
                        out.data[idx] = f.add(out.data[idx], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self, f: &Field) -> Self {
        FqMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self, f: &Field) -> Self {
        FqMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: Fe, f: &Field) -> Self {
        FqMatrix {
            n: self.n,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn neg(&self, f: &Field) -> Self {
        FqMatrix {
            n: self.n,
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j];
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64, f: &Field) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
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

    /// `Q(self)` for `Q = Σ coeffs[i] x^i`, by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[Fe], f: &Field) -> Self {
        let mut acc = Self::zero(self.n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self, f);
            for i in 0..self.n {
                let idx = i * self.n + i;
                acc.data[idx] = f.add(acc.data[idx], c);
            }
        }
        acc
    }

    pub fn rank(&self, f: &Field) -> usize {
        let rows: Vec<Vec<Fe>> = self.data.chunks(self.n).map(<[Fe]>::to_vec).collect();
        rank(rows, f)
    }

    pub fn kernel_dim(&self, f: &Field) -> usize {
        self.n - self.rank(f)
    }

    pub fn det(&self, f: &Field) -> Fe {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let pv = a[col * n + col];
            det = f.mul(det, pv);
            let pinv = f.inv(pv).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(a[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.sub(a[r * n + j], v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self, f: &Field) -> bool {
        self.det(f) != 0
    }

    pub fn inverse(&self, f: &Field) -> Option<Self> {
        let n = self.n;
        let w = 2 * n;
        let mut a = vec![0; n * w];
        for i in 0..n {
            a[i * w..i * w + n].copy_from_slice(&self.data[i * n..(i + 1) * n]);
            a[i * w + n + i] = 1;
        }
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r * w + col] != 0)?;
            if piv != col {
                for j in 0..w {
                    a.swap(piv * w + j, col * w + j);
                }
            }
            let pinv = f.inv(a[col * w + col])?;
            for j in 0..w {
                a[col * w + j] = f.mul(a[col * w + j], pinv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * w + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..w {
                    let v = f.mul(factor, a[col * w + j]);
                    a[r * w + j] = f.sub(a[r * w + j], v);
                }
            }
        }
        let mut out = Self::zero(n);
        for i in 0..n {
            out.data[i * n..(i + 1) * n].copy_from_slice(&a[i * w + n..(i + 1) * w]);
        }
        Some(out)
    }
}

/// Rank of a rectangular matrix given by rows.
pub fn rank(mut rows: Vec<Vec<Fe>>, f: &Field) -> usize {
    let m = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(piv) = (r..m).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let pinv = f.inv(rows[r][col]).expect("nonzero pivot");
        for i in r + 1..m {
            let factor = f.mul(rows[i][col], pinv);
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                let v = f.mul(factor, rows[r][j]);
                rows[i][j] = f.sub(rows[i][j], v);
            }
        }
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det_agree() {
        let f = Field::new(5).unwrap();
        let m = FqMatrix::from_rows(&[vec![1, 2, 0], vec![3, 4, 1], vec![0, 1, 1]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&inv, &f), FqMatrix::identity(3));
        assert_ne!(m.det(&f), 0);
        let singular = FqMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.det(&f), 0);
        assert!(singular.inverse(&f).is_none());
        assert_eq!(singular.rank(&f), 1);
    }

    #[test]
    fn code_round_trip() {
        let m = FqMatrix::from_rows(&[vec![1, 2], vec![0, 3]]);
        let c = m.code(4);
        assert_eq!(c, 64 + 2 * 16 + 3);
        assert_eq!(FqMatrix::from_code(2, 4, c), m);
    }

    #[test]
    fn horner_matches_powers() {
        let f = Field::new(7).unwrap();
        let g = FqMatrix::from_rows(&[vec![2, 1], vec![0, 3]]);
        // Q = 3 + x + 2x^2
        let q = g.eval_poly(&[3, 1, 2], &f);
        let direct = FqMatrix::scalar(2, 3)
            .add(&g, &f)
            .add(&g.mul(&g, &f).scale(2, &f), &f);
        assert_eq!(q, direct);
    }
}

//! Dense permutations of at most [`MAX_DEGREE`] points for subgroup
//! counting.

pub const MAX_DEGREE: usize = 8;

pub type P = [u8; MAX_DEGREE];

pub fn identity() -> P {
    std::array::from_fn(|i| i as u8)
}

/// `(a·b)(i) = b(a(i))`: apply `a` first.
#[inline]
pub fn compose(a: &P, b: &P, n: usize) -> P {
    let mut out = identity();
    for i in 0..n {
        out[i] = b[a[i] as usize];
    }
    out
}

pub fn inverse(a: &P, n: usize) -> P {
    let mut out = identity();
    for i in 0..n {
        out[a[i] as usize] = i as u8;
    }
    out
}

pub fn pow(a: &P, e: i64, n: usize) -> P {
    let mut base = if e < 0 { inverse(a, n) } else { *a };
    let mut e = e.unsigned_abs();
    let mut acc = identity();
    while e > 0 {
        if e & 1 == 1 {
            acc = compose(&acc, &base, n);
        }
        e >>= 1;
        base = compose(&base, &base, n);
    }
    acc
}

/// All of `S_n` in lexicographic order.
pub fn all(n: usize) -> Vec<P> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        let mut p = identity();
        p[..n].copy_from_slice(&cur);
        out.push(p);
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

pub fn is_transitive(gens: &[P], n: usize) -> bool {
    let mut seen = [false; MAX_DEGREE];
    seen[0] = true;
    let mut stack = vec![0u8];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g[x as usize];
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

fn find(parent: &mut [u8], x: u8) -> u8 {
    let mut r = x;
    while parent[r as usize] != r {
        r = parent[r as usize];
    }
    let mut x = x;
    while parent[x as usize] != r {
        let next = parent[x as usize];
        parent[x as usize] = r;
        x = next;
    }
    r
}

/// Whether the finest block system with `0 ~ i` is the trivial one with a
/// single block. Blocks are closed under the generators: `a ~ b` forces
/// `g(a) ~ g(b)`.
fn block_is_everything(gens: &[P], n: usize, i: u8) -> bool {
    let mut parent: [u8; MAX_DEGREE] = identity();
    let mut pending = vec![(0u8, i)];
    let mut merged = 0;
    while let Some((a, b)) = pending.pop() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            continue;
        }
        parent[rb as usize] = ra;
        merged += 1;
        if merged == n - 1 {
            return true;
        }
        for g in gens {
            pending.push((g[a as usize], g[b as usize]));
        }
    }
    false
}

/// Transitive with no block system other than points and the whole set.
/// Degree one is not primitive by convention.
pub fn is_primitive(gens: &[P], n: usize) -> bool {
    n >= 2 && is_transitive(gens, n) && (1..n as u8).all(|i| block_is_everything(gens, n, i))
}

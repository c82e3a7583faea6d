use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}` stored as its image array.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::arg(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation on `n` letters from cycles written with 1-based
    /// letters, e.g. `&[&[1, 2, 3]]` for `(1 2 3)`.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &letter) in cycle.iter().enumerate() {
                if letter == 0 || letter as usize > n {
                    return Err(Error::arg(format!("letter {letter} outside 1..={n}")));
                }
                let from = (letter - 1) as usize;
                if touched[from] {
                    return Err(Error::arg(format!("letter {letter} repeated in cycles")));
                }
                touched[from] = true;
                images[from] = cycle[(idx + 1) % cycle.len()] - 1;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn compose(&self, other: &Self) -> Self {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn fix(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i as u32 == j)
            .count()
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
            }
        }
        cycles
    }

    pub fn sign(&self) -> i8 {
        if (self.images.len() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Rank in the lexicographic (Lehmer code) order of all `n!` permutations.
    /// Valid for `n ≤ 20`.
    pub fn lehmer_rank(&self) -> u64 {
        let n = self.images.len();
        let mut rank = 0u64;
        let mut used: u64 = 0;
        for i in 0..n {
            let v = self.images[i];
            let smaller_unused = v - (used & ((1u64 << v) - 1)).count_ones();
            rank = rank * (n - i) as u64 + smaller_unused as u64;
            used |= 1u64 << v;
        }
        rank
    }

    pub fn from_lehmer_rank(n: usize, mut rank: u64) -> Self {
        let mut digits = vec![0u32; n];
        for i in (0..n).rev() {
            let radix = (n - i) as u64;
            digits[i] = (rank % radix) as u32;
            rank /= radix;
        }
        let mut avail: Vec<u32> = (0..n as u32).collect();
        let images = digits
            .into_iter()
            .map(|d| avail.remove(d as usize))
            .collect();
        Permutation { images }
    }

    /// Dense index of an even permutation among the `n!/2` even ones.
    ///
    /// Lehmer ranks `2j` and `2j + 1` differ by swapping the last two
    /// letters, so exactly one of each pair is even.
    pub fn alternating_rank(&self) -> u64 {
        self.lehmer_rank() / 2
    }

    pub fn from_alternating_rank(n: usize, j: u64) -> Self {
        let mut p = Self::from_lehmer_rank(n, 2 * j);
        if n >= 2 && !p.is_even() {
            p.images.swap(n - 2, n - 1);
        }
        p
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation on 1-based letters; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_and_fix_examples() {
        let id = Permutation::identity(5);
        assert_eq!((id.sign(), id.fix()), (1, 5));
        let five = Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        assert_eq!((five.sign(), five.fix()), (1, 0));
        let t = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        assert_eq!((t.sign(), t.fix()), (-1, 2));
    }

    #[test]
    fn lehmer_round_trip_and_order() {
        let n = 5;
        let mut prev: Option<Permutation> = None;
        for r in 0..120 {
            let p = Permutation::from_lehmer_rank(n, r);
            assert_eq!(p.lehmer_rank(), r);
            if let Some(q) = prev {
                assert!(q < p, "lexicographic order");
            }
            prev = Some(p);
        }
        assert_eq!(Permutation::identity(4).lehmer_rank(), 0);
    }

    #[test]
    fn alternating_ranks_are_dense() {
        for n in 2..=6usize {
            let half = (1..=n as u64).product::<u64>() / 2;
            let mut seen = vec![false; half as usize];
            for j in 0..half {
                let p = Permutation::from_alternating_rank(n, j);
                assert!(p.is_even());
                assert_eq!(p.alternating_rank(), j);
                seen[j as usize] = true;
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }

    #[test]
    fn display_cycles() {
        let p = Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 3)(2 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 4]]).is_err());
    }
}

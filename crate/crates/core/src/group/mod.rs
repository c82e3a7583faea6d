//! Finite groups with a dense integer encoding of their elements.
//!
//! Every [`FiniteGroup`] numbers its elements `0..|G|` deterministically:
//! Lehmer rank for `S_n`, halved Lehmer rank for `A_n`, sorted row-major
//! codes for matrix groups (with the smaller of `±M` representing a class of
//! `PSL_2`), and the file order for Cayley tables. Groups of order at most
//! [`TABLE_LIMIT`] keep a full multiplication table.

mod classes;
mod perm;
mod spec;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;
use serde::Serialize;

pub use classes::{Class, ConjugacyClasses};
pub use perm::Permutation;
pub use spec::GroupSpec;

use crate::error::{Error, Result};
use crate::field::{Fe, Field, FqMatrix};

/// Dense element index in `0..|G|`.
pub type Elem = u32;

pub const DEFAULT_ORDER_GUARD: u64 = 10_000_000;
pub const TABLE_LIMIT: usize = 1024;

/// The operations word evaluation needs.
pub trait Group {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// `a^e` by square-and-multiply; negative exponents go through `inv`.
    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        let mut base = if e < 0 { self.inv(a) } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Symmetric group on `n` letters acting on explicit permutations, for
/// degrees far beyond what a dense encoding can index.
#[derive(Clone, Copy, Debug)]
pub struct SymmetricPerms {
    pub n: usize,
}

impl Group for SymmetricPerms {
    type Elem = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.n)
    }

    fn mul(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }

    fn inv(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }
}

impl SymmetricPerms {
    /// Uniform permutation by Fisher–Yates.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut images: Vec<u32> = (0..self.n as u32).collect();
        for i in (1..self.n).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        Permutation::from_images(images).expect("shuffle is a bijection")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupKind {
    Symmetric { n: usize },
    Alternating { n: usize },
    GeneralLinear { n: usize, q: u32 },
    SpecialLinear { n: usize, q: u32 },
    ProjectiveSpecialLinear2 { q: u32 },
    Cayley,
}

enum Backend {
    Perm {
        n: usize,
        alternating: bool,
    },
    Matrix {
        field: Arc<Field>,
        n: usize,
        codes: Vec<u64>,
        projective: bool,
    },
    Table,
}

pub struct FiniteGroup {
    spec: String,
    kind: GroupKind,
    order: usize,
    backend: Backend,
    table: Option<Vec<Elem>>,
    inverses: Option<Vec<Elem>>,
    identity: Elem,
    generators: Vec<Elem>,
    classes: OnceLock<ConjugacyClasses>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("spec", &self.spec)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `|GL_n(q)|`, saturating at `u128::MAX`.
pub fn gl_order(n: usize, q: u32) -> u128 {
    let q = q as u128;
    let qn = q.saturating_pow(n as u32);
    (0..n as u32).fold(1u128, |acc, i| acc.saturating_mul(qn - q.pow(i)))
}

pub fn sl_order(n: usize, q: u32) -> u128 {
    gl_order(n, q) / (q as u128 - 1)
}

pub fn psl2_order(q: u32) -> u128 {
    let g = if q % 2 == 1 { 2 } else { 1 };
    sl_order(2, q) / g
}

fn check_guard(what: &'static str, requested: u128, limit: u64) -> Result<()> {
    if requested > limit as u128 {
        return Err(Error::Guard {
            what,
            requested,
            limit: limit as u128,
        });
    }
    Ok(())
}

impl FiniteGroup {
    /// Builds a group from a spec string such as `S:4`, `PSL2:7` or
    /// `cayley:path/to/table.txt`, with the default order guard.
    pub fn construct(spec: &str) -> Result<Arc<Self>> {
        Self::construct_with_guard(spec, DEFAULT_ORDER_GUARD)
    }

    pub fn construct_with_guard(spec: &str, guard: u64) -> Result<Arc<Self>> {
        let parsed = GroupSpec::parse(spec)?;
        let group = match parsed {
            GroupSpec::Symmetric(n) => Self::symmetric(n, guard)?,
            GroupSpec::Alternating(n) => Self::alternating(n, guard)?,
            GroupSpec::GeneralLinear(n, q) => Self::matrix_group(n, q, false, false, guard)?,
            GroupSpec::SpecialLinear(n, q) => Self::matrix_group(n, q, true, false, guard)?,
            GroupSpec::Psl2(q) => Self::matrix_group(2, q, true, true, guard)?,
            GroupSpec::Cayley(path) => {
                let text = std::fs::read_to_string(&path)?;
                let (order, table) = spec::parse_cayley(&text)?;
                check_guard("group order", order as u128, guard)?;
                Self::from_table(spec.trim().to_string(), order, table)?
            }
        };
        Ok(Arc::new(group))
    }

    /// A group given by its multiplication table (row `a`, column `b` holds
    /// `a·b`); element 0 must be the identity.
    pub fn from_cayley_table(name: &str, order: usize, table: Vec<Elem>) -> Result<Arc<Self>> {
        Ok(Arc::new(Self::from_table(name.to_string(), order, table)?))
    }

    fn symmetric(n: usize, guard: u64) -> Result<Self> {
        if n == 0 || n > 20 {
            return Err(Error::spec(&format!("S:{n}"), "degree must be in 1..=20"));
        }
        let order = factorial(n);
        check_guard("group order", order, guard)?;
        let generators = (0..n.saturating_sub(1))
            .map(|i| {
                let mut im: Vec<u32> = (0..n as u32).collect();
                im.swap(i, i + 1);
                Permutation::from_images(im).unwrap().lehmer_rank() as Elem
            })
            .collect();
        Self::finish(
            format!("S:{n}"),
            GroupKind::Symmetric { n },
            order as usize,
            Backend::Perm {
                n,
                alternating: false,
            },
            0,
            generators,
        )
    }

    fn alternating(n: usize, guard: u64) -> Result<Self> {
        if n == 0 || n > 20 {
            return Err(Error::spec(&format!("A:{n}"), "degree must be in 1..=20"));
        }
        let order = if n < 2 { 1 } else { factorial(n) / 2 };
        check_guard("group order", order, guard)?;
        let generators = (2..n)
            .map(|i| {
                let p = Permutation::from_cycles(n, &[&[1, 2, i as u32 + 1]]).unwrap();
                p.alternating_rank() as Elem
            })
            .collect();
        Self::finish(
            format!("A:{n}"),
            GroupKind::Alternating { n },
            order as usize,
            Backend::Perm {
                n,
                alternating: true,
            },
            0,
            generators,
        )
    }

    fn matrix_group(n: usize, q: u32, special: bool, projective: bool, guard: u64) -> Result<Self> {
        let spec_str = match (special, projective) {
            (_, true) => format!("PSL2:{q}"),
            (true, false) => format!("SL:{n}:{q}"),
            (false, false) => format!("GL:{n}:{q}"),
        };
        if n == 0 {
            return Err(Error::spec(&spec_str, "dimension must be positive"));
        }
        crate::field::prime_power(q as u64)
            .ok_or_else(|| Error::spec(&spec_str, format!("{q} is not a prime power")))?;
        let expected = match (special, projective) {
            (_, true) => psl2_order(q),
            (true, false) => sl_order(n, q),
            (false, false) => gl_order(n, q),
        };
        check_guard("group order", expected, guard)?;
        let field = Arc::new(Field::new(q)?);

        let mut codes = enumerate_gl(n, &field);
        if special {
            codes.retain(|&c| FqMatrix::from_code(n, q, c).det(&field) == 1);
        }
        if projective {
            codes.retain(|&c| {
                let m = FqMatrix::from_code(n, q, c);
                c <= m.neg(&field).code(q)
            });
        }
        if codes.len() as u128 != expected {
            return Err(Error::Invariant(format!(
                "{spec_str}: enumerated {} elements, expected {expected}",
                codes.len()
            )));
        }

        let kind = match (special, projective) {
            (_, true) => GroupKind::ProjectiveSpecialLinear2 { q },
            (true, false) => GroupKind::SpecialLinear { n, q },
            (false, false) => GroupKind::GeneralLinear { n, q },
        };
        let backend = Backend::Matrix {
            field: field.clone(),
            n,
            codes,
            projective,
        };
        let mut gens_m = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for b in field.additive_basis() {
                    let mut t = FqMatrix::identity(n);
                    t.set(i, j, b);
                    gens_m.push(t);
                }
            }
        }
        if !special {
            let mut d = FqMatrix::identity(n);
            d.set(0, 0, field.primitive());
            gens_m.push(d);
        }
        let encode = |m: &FqMatrix| encode_matrix_in(&backend, m);
        let identity = encode(&FqMatrix::identity(n)).expect("identity is in the group");
        let mut generators: Vec<Elem> = gens_m.iter().filter_map(encode).collect();
        generators.sort_unstable();
        generators.dedup();
        generators.retain(|&g| g != identity);
        Self::finish(spec_str, kind, expected as usize, backend, identity, generators)
    }

    fn from_table(spec: String, order: usize, table: Vec<Elem>) -> Result<Self> {
        spec::validate_cayley(order, &table)?;
        let mut g = FiniteGroup {
            spec,
            kind: GroupKind::Cayley,
            order,
            backend: Backend::Table,
            table: Some(table),
            inverses: None,
            identity: 0,
            generators: Vec::new(),
            classes: OnceLock::new(),
        };
        g.inverses = Some(g.inverse_table());
        g.generators = g.greedy_generators();
        Ok(g)
    }

    fn finish(
        spec: String,
        kind: GroupKind,
        order: usize,
        backend: Backend,
        identity: Elem,
        generators: Vec<Elem>,
    ) -> Result<Self> {
        let mut g = FiniteGroup {
            spec,
            kind,
            order,
            backend,
            table: None,
            inverses: None,
            identity,
            generators,
            classes: OnceLock::new(),
        };
        if order <= TABLE_LIMIT {
            let mut table = vec![0; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = g.slow_mul(a as Elem, b as Elem);
                }
            }
            g.table = Some(table);
            g.inverses = Some(g.inverse_table());
        }
        Ok(g)
    }

    fn inverse_table(&self) -> Vec<Elem> {
        let table = self.table.as_ref().expect("table present");
        let n = self.order;
        let mut inv = vec![0; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            inv[a] = row.iter().position(|&x| x == self.identity).expect("latin square") as Elem;
        }
        inv
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut member = vec![false; self.order];
        member[self.identity as usize] = true;
        for x in 0..self.order as Elem {
            if member[x as usize] {
                continue;
            }
            gens.push(x);
            member = self.closure_mask(&gens);
        }
        gens
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    /// The fixed generating set used for conjugacy-class closure.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a as usize * self.order + b as usize],
            None => self.slow_mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        match &self.inverses {
            Some(t) => t[a as usize],
            None => self.slow_inv(a),
        }
    }

    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        Group::pow(self, &a, e)
    }

    pub fn conjugate(&self, x: Elem, by: Elem) -> Elem {
        self.mul(self.mul(by, x), self.inv(by))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(0..self.order as Elem)
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            Backend::Perm { .. } => {
                let p = self.permutation(a).unwrap().compose(&self.permutation(b).unwrap());
                self.encode_permutation(&p).expect("closed under products")
            }
            Backend::Matrix { field, .. } => {
                let m = self.matrix(a).unwrap().mul(&self.matrix(b).unwrap(), field);
                encode_matrix_in(&self.backend, &m).expect("closed under products")
            }
            Backend::Table => unreachable!("table groups always carry their table"),
        }
    }

    fn slow_inv(&self, a: Elem) -> Elem {
        match &self.backend {
            Backend::Perm { .. } => {
                let p = self.permutation(a).unwrap().inverse();
                self.encode_permutation(&p).unwrap()
            }
            Backend::Matrix { field, .. } => {
                let m = self.matrix(a).unwrap().inverse(field).expect("invertible");
                encode_matrix_in(&self.backend, &m).unwrap()
            }
            Backend::Table => unreachable!(),
        }
    }

    /// Degree of the natural permutation representation (symmetric and
    /// alternating kinds only).
    pub fn degree(&self) -> Option<usize> {
        match self.backend {
            Backend::Perm { n, .. } => Some(n),
            _ => None,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self.kind, GroupKind::Symmetric { .. })
    }

    pub fn is_permutation_group(&self) -> bool {
        matches!(self.backend, Backend::Perm { .. })
    }

    pub fn permutation(&self, x: Elem) -> Option<Permutation> {
        match self.backend {
            Backend::Perm { n, alternating } => Some(if alternating {
                Permutation::from_alternating_rank(n, x as u64)
            } else {
                Permutation::from_lehmer_rank(n, x as u64)
            }),
            _ => None,
        }
    }

    pub fn encode_permutation(&self, p: &Permutation) -> Option<Elem> {
        match self.backend {
            Backend::Perm { n, alternating } if p.degree() == n => {
                if alternating {
                    p.is_even().then(|| p.alternating_rank() as Elem)
                } else {
                    Some(p.lehmer_rank() as Elem)
                }
            }
            _ => None,
        }
    }

    pub fn sign(&self, x: Elem) -> Option<i8> {
        self.permutation(x).map(|p| p.sign())
    }

    pub fn fix(&self, x: Elem) -> Option<usize> {
        self.permutation(x).map(|p| p.fix())
    }

    pub fn field(&self) -> Option<&Arc<Field>> {
        match &self.backend {
            Backend::Matrix { field, .. } => Some(field),
            _ => None,
        }
    }

    /// Matrix dimension for matrix kinds.
    pub fn matrix_dim(&self) -> Option<usize> {
        match self.backend {
            Backend::Matrix { n, .. } => Some(n),
            _ => None,
        }
    }

    /// The representative matrix of `x` (for `PSL_2`, the smaller of `±M`).
    pub fn matrix(&self, x: Elem) -> Option<FqMatrix> {
        match &self.backend {
            Backend::Matrix { field, n, codes, .. } => {
                Some(FqMatrix::from_code(*n, field.order(), codes[x as usize]))
            }
            _ => None,
        }
    }

    pub fn encode_matrix(&self, m: &FqMatrix) -> Option<Elem> {
        encode_matrix_in(&self.backend, m)
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn closure_mask(&self, gens: &[Elem]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[self.identity as usize] = true;
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        member
    }

    /// Order of `⟨gens⟩`, stopping early once it exceeds `|G|/2` (and so is
    /// all of `G`).
    pub fn subgroup_order(&self, gens: &[Elem]) -> usize {
        let mut member = vec![false; self.order];
        member[self.identity as usize] = true;
        let mut count = 1;
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y as usize] {
                    member[y as usize] = true;
                    count += 1;
                    if 2 * count > self.order {
                        return self.order;
                    }
                    queue.push(y);
                }
            }
        }
        count
    }

    pub fn generates(&self, gens: &[Elem]) -> bool {
        self.subgroup_order(gens) == self.order
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| ConjugacyClasses::compute(self))
    }

    /// Order of the centralizer of `x`, by enumeration.
    pub fn centralizer_order(&self, x: Elem) -> usize {
        self.elements()
            .filter(|&h| self.mul(h, x) == self.mul(x, h))
            .count()
    }
}

impl Group for FiniteGroup {
    type Elem = Elem;

    fn identity(&self) -> Elem {
        self.identity
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        FiniteGroup::mul(self, *a, *b)
    }

    fn inv(&self, a: &Elem) -> Elem {
        FiniteGroup::inv(self, *a)
    }
}

fn encode_matrix_in(backend: &Backend, m: &FqMatrix) -> Option<Elem> {
    let Backend::Matrix {
        field,
        n,
        codes,
        projective,
    } = backend
    else {
        return None;
    };
    if m.dim() != *n {
        return None;
    }
    let q = field.order();
    let mut code = m.code(q);
    if *projective {
        code = code.min(m.neg(field).code(q));
    }
    codes.binary_search(&code).ok().map(|i| i as Elem)
}

/// Codes of all invertible `n×n` matrices in increasing order, built row by
/// row and skipping rows in the span of the rows above.
fn enumerate_gl(n: usize, field: &Field) -> Vec<u64> {
    let q = field.order();
    let row_count = (q as u64).pow(n as u32);
    let rows: Vec<Vec<Fe>> = (0..row_count)
        .map(|c| {
            let mut r = vec![0; n];
            let mut c = c;
            for slot in r.iter_mut().rev() {
                *slot = (c % q as u64) as Fe;
                c /= q as u64;
            }
            r
        })
        .collect();

    let mut out = Vec::new();
    let mut basis: Vec<(usize, Vec<Fe>)> = Vec::new();
    fn recurse(
        depth: usize,
        prefix: u64,
        n: usize,
        row_count: u64,
        rows: &[Vec<Fe>],
        field: &Field,
        basis: &mut Vec<(usize, Vec<Fe>)>,
        out: &mut Vec<u64>,
    ) {
        if depth == n {
            out.push(prefix);
            return;
        }
        for (code, row) in rows.iter().enumerate() {
            let mut r = row.clone();
            for (pivot, b) in basis.iter() {
                let c = r[*pivot];
                if c != 0 {
                    for j in 0..n {
                        r[j] = field.sub(r[j], field.mul(c, b[j]));
                    }
                }
            }
            let Some(pivot) = r.iter().position(|&x| x != 0) else {
                continue;
            };
            let inv = field.inv(r[pivot]).unwrap();
            for x in r.iter_mut() {
                *x = field.mul(*x, inv);
            }
            basis.push((pivot, r));
            recurse(
                depth + 1,
                prefix * row_count + code as u64,
                n,
                row_count,
                rows,
                field,
                basis,
                out,
            );
            basis.pop();
        }
    }
    recurse(0, 0, n, row_count, &rows, field, &mut basis, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check_axioms(g: &FiniteGroup, samples: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let id = g.identity();
        for x in g.elements() {
            assert_eq!(g.mul(id, x), x);
            assert_eq!(g.mul(x, id), x);
            assert_eq!(g.mul(g.inv(x), x), id);
        }
        for _ in 0..samples {
            let a = g.random_element(&mut rng);
            let b = g.random_element(&mut rng);
            let c = g.random_element(&mut rng);
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{}", g.spec());
        }
    }

    #[test]
    fn orders_from_specs() {
        assert_eq!(FiniteGroup::construct("S:3").unwrap().order(), 6);
        assert_eq!(FiniteGroup::construct("PSL2:5").unwrap().order(), 60);
        assert_eq!(FiniteGroup::construct("A:5").unwrap().order(), 60);
        assert_eq!(FiniteGroup::construct("SL:2:3").unwrap().order(), 24);
        assert_eq!(FiniteGroup::construct("PSL2:8").unwrap().order(), 504);
        assert_eq!(FiniteGroup::construct("GL:3:2").unwrap().order(), 168);
    }

    #[test]
    fn gl22_matches_brute_force_count() {
        let f = Field::new(2).unwrap();
        let brute = (0..16u64)
            .filter(|&c| FqMatrix::from_code(2, 2, c).det(&f) != 0)
            .count();
        assert_eq!(brute, 6);
        assert_eq!(FiniteGroup::construct("GL:2:2").unwrap().order(), brute);
    }

    #[test]
    fn order_formulas() {
        assert_eq!(gl_order(2, 3), 48);
        assert_eq!(sl_order(2, 7), 336);
        assert_eq!(psl2_order(7), 168);
        assert_eq!(psl2_order(4), 60);
        assert_eq!(gl_order(4, 2), 20160);
    }

    #[test]
    fn axioms_hold_on_small_kinds() {
        for spec in ["S:4", "A:5", "GL:2:3", "SL:2:5", "PSL2:7", "PSL2:9", "GL:1:7", "S:1"] {
            let g = FiniteGroup::construct(spec).unwrap();
            check_axioms(&g, 100_000);
            assert!(g.generates(g.generators()) || g.order() == 1, "{spec} generators");
        }
    }

    #[test]
    fn untabled_groups_are_consistent() {
        let g = FiniteGroup::construct("S:7").unwrap();
        assert!(!g.has_table());
        check_axioms(&g, 2_000);
        assert!(g.generates(g.generators()));
        let h = FiniteGroup::construct("GL:2:7").unwrap();
        assert!(!h.has_table());
        check_axioms(&h, 2_000);
        assert!(h.generates(h.generators()));
    }

    #[test]
    fn guard_and_bad_specs() {
        assert!(matches!(
            FiniteGroup::construct("S:12"),
            Err(Error::Guard { .. })
        ));
        assert!(FiniteGroup::construct("GL:2:6").is_err());
        assert!(FiniteGroup::construct("PSL2:x").is_err());
        assert!(FiniteGroup::construct("Q:8").is_err());
    }

    #[test]
    fn psl2_representatives_are_canonical() {
        let g = FiniteGroup::construct("PSL2:5").unwrap();
        let f = g.field().unwrap().clone();
        for x in g.elements() {
            let m = g.matrix(x).unwrap();
            assert!(m.code(5) <= m.neg(&f).code(5));
            assert_eq!(g.encode_matrix(&m.neg(&f)), Some(x));
        }
    }

    #[test]
    fn sign_is_multiplicative() {
        let g = FiniteGroup::construct("S:5").unwrap();
        for a in g.elements().step_by(7) {
            for b in g.elements().step_by(11) {
                assert_eq!(g.sign(g.mul(a, b)).unwrap(), g.sign(a).unwrap() * g.sign(b).unwrap());
            }
        }
    }
}

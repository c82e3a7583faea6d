use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wordmap::field::{Field, FqMatrix};
use wordmap::fqlinalg::{
    big_kernel_bound, big_kernel_estimate, centralizer_order_bruteforce, centralizer_table,
    charpoly, commuting_dim, factor, is_irreducible, jordan_data, kernel_dim,
    small_centralizer_experiment, CentralizerMeasure, Poly, DEFAULT_ENUMERATION_GUARD,
};
use wordmap::{FiniteGroup, Word};

fn field(q: u32) -> Field {
    Field::new(q).unwrap()
}

fn poly(c: &[u32]) -> Poly {
    Poly::new(c.to_vec())
}

fn m(rows: &[&[u32]]) -> FqMatrix {
    FqMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn random_poly(rng: &mut ChaCha8Rng, q: u32, deg: usize) -> Poly {
    let mut c: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
    c.push(rng.gen_range(1..q));
    Poly::new(c)
}

#[test]
fn factor_examples() {
    let f2 = field(2);
    let fac = factor(&poly(&[1, 0, 1]), &f2).unwrap();
    assert_eq!(fac.factors, vec![(poly(&[1, 1]), 2)]);

    let f3 = field(3);
    let fac = factor(&poly(&[1, 0, 1]), &f3).unwrap();
    assert_eq!(fac.factors, vec![(poly(&[1, 0, 1]), 1)]);
    assert!(is_irreducible(&poly(&[1, 0, 1]), &f3));

    // x³ − x over F₅
    let f5 = field(5);
    let fac = factor(&poly(&[0, 4, 0, 1]), &f5).unwrap();
    let mut roots: Vec<u32> = fac
        .factors
        .iter()
        .map(|(p, e)| {
            assert_eq!((p.deg(), *e), (1, 1));
            f5.neg(p.coeffs()[0])
        })
        .collect();
    roots.sort();
    assert_eq!(roots, [0, 1, 4]);
    assert!(factor(&Poly::zero(), &f5).is_err());
}

#[test]
fn factor_handles_pth_powers() {
    // (x² + x + 1)^4 · (x + 1)^3 over F₂, and x^9 − 1 = (x − 1)^9 over F₃
    let f2 = field(2);
    let a = poly(&[1, 1, 1]).pow(4, &f2).mul(&poly(&[1, 1]).pow(3, &f2), &f2);
    let fac = factor(&a, &f2).unwrap();
    assert_eq!(fac.factors, vec![(poly(&[1, 1]), 3), (poly(&[1, 1, 1]), 4)]);
    let f3 = field(3);
    let mut c = vec![0; 10];
    c[0] = 2;
    c[9] = 1;
    let fac = factor(&Poly::new(c), &f3).unwrap();
    assert_eq!(fac.factors, vec![(poly(&[2, 1]), 9)]);
}

/// Number of monic irreducibles of degree n over F_q: (1/n) Σ_{d|n} μ(d) q^{n/d}.
fn gauss_count(q: u64, n: u64) -> u64 {
    fn mobius(mut d: u64) -> i64 {
        let mut sign = 1;
        let mut p = 2;
        while p * p <= d {
            if d.is_multiple_of(p) {
                d /= p;
                if d.is_multiple_of(p) {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if d > 1 {
            sign = -sign;
        }
        sign
    }
    let s: i64 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) * q.pow((n / d) as u32) as i64)
        .sum();
    (s / n as i64) as u64
}

#[test]
fn irreducible_counts_match_gauss() {
    for (q, max_deg) in [(2u32, 9usize), (3, 5), (4, 4)] {
        let f = field(q);
        for deg in 1..=max_deg {
            let total = (q as u64).pow(deg as u32);
            let mut irr = 0;
            let mut single = 0;
            for code in 0..total {
                let mut c: Vec<u32> = (0..deg)
                    .map(|i| ((code / (q as u64).pow(i as u32)) % q as u64) as u32)
                    .collect();
                c.push(1);
                let p = Poly::new(c);
                if is_irreducible(&p, &f) {
                    irr += 1;
                }
                let fac = factor(&p, &f).unwrap();
                if fac.factors.len() == 1 && fac.factors[0].1 == 1 {
                    single += 1;
                }
            }
            assert_eq!(irr, gauss_count(q as u64, deg as u64), "q={q} deg={deg}");
            assert_eq!(single, irr, "q={q} deg={deg}");
        }
    }
}

#[test]
fn factor_round_trips_on_random_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    for q in [2u32, 3, 4, 5, 7, 8, 9] {
        let f = field(q);
        for deg in 0..=12 {
            for _ in 0..10_000 {
                let p = random_poly(&mut rng, q, deg);
                let fac = factor(&p, &f).unwrap();
                assert_eq!(fac.expand(&f), p);
                for (irr, _) in &fac.factors {
                    assert!(irr.is_monic());
                    assert!(is_irreducible(irr, &f), "{irr} over F_{q}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn ring_axioms(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3, 4, 5, 9]),
                   da in 0usize..8, db in 0usize..8, dc in 0usize..8) {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_poly(&mut rng, q, da);
        let b = random_poly(&mut rng, q, db);
        let c = random_poly(&mut rng, q, dc);
        prop_assert_eq!(a.mul(&b, &f), b.mul(&a, &f));
        prop_assert_eq!(a.mul(&b.add(&c, &f), &f), a.mul(&b, &f).add(&a.mul(&c, &f), &f));
        prop_assert_eq!(a.mul(&b, &f).mul(&c, &f), a.mul(&b.mul(&c, &f), &f));
        let (quo, rem) = a.divrem(&b, &f).unwrap();
        prop_assert_eq!(quo.mul(&b, &f).add(&rem, &f), a.clone());
        prop_assert!(rem.is_zero() || rem.deg() < b.deg());
        let g = a.gcd(&b, &f);
        prop_assert!(a.rem(&g, &f).is_zero() && b.rem(&g, &f).is_zero());
        // evaluation is a ring homomorphism
        for x in f.elements() {
            prop_assert_eq!(a.mul(&b, &f).eval(x, &f), f.mul(a.eval(x, &f), b.eval(x, &f)));
        }
    }
}

fn gl_elements(spec: &str) -> (std::sync::Arc<FiniteGroup>, Vec<FqMatrix>) {
    let g = FiniteGroup::construct(spec).unwrap();
    let ms = g.elements().map(|x| g.matrix(x).unwrap()).collect();
    (g, ms)
}

#[test]
fn charpoly_is_annihilating() {
    for spec in ["GL:2:3", "GL:3:2", "GL:2:4"] {
        let (g, ms) = gl_elements(spec);
        let f = g.field().unwrap();
        for x in &ms {
            let p = charpoly(x, f);
            assert!(p.is_monic() && p.deg() == x.dim());
            assert_eq!(x.eval_poly(p.coeffs(), f), FqMatrix::zero(x.dim()));
            if x.dim() == 2 {
                let tr = f.add(x.get(0, 0), x.get(1, 1));
                assert_eq!(p.coeffs(), [x.det(f), f.neg(tr), 1]);
            }
        }
    }
}

#[test]
fn centralizer_formula_matches_linear_system() {
    for spec in ["GL:2:2", "GL:2:3", "GL:3:2"] {
        let (g, ms) = gl_elements(spec);
        let f = g.field().unwrap();
        let q = f.order() as u128;
        for (x, mat) in ms.iter().enumerate() {
            let jd = jordan_data(mat, f).unwrap();
            assert_eq!(jd.total(), mat.dim());
            for sizes in jd.blocks().values() {
                assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
            }
            let dim = jd.centralizer_dim();
            assert_eq!(dim, commuting_dim(mat, f), "{spec} element {x}");
            let order = centralizer_order_bruteforce(mat, &g, DEFAULT_ENUMERATION_GUARD).unwrap();
            assert_eq!(order as u128, jd.gl_centralizer_order(), "{spec} element {x}");
            assert!((order as u128) < q.pow(dim as u32));
        }
    }
}

#[test]
fn total_blocks_on_larger_groups() {
    for spec in ["GL:3:3", "GL:4:2"] {
        let (g, ms) = gl_elements(spec);
        let f = g.field().unwrap();
        for mat in ms.iter().step_by(7) {
            let jd = jordan_data(mat, f).unwrap();
            assert_eq!(jd.total(), mat.dim());
            assert_eq!(jd.centralizer_dim(), commuting_dim(mat, f));
        }
    }
}

#[test]
fn class_equation_from_closed_form() {
    // Σ over classes of |G|/|C(g)| = |G| means Σ_g 1/|C(g)| = k(G)
    // k(GL2(q)) = q^2 - 1 and k(GL3(q)) = q^3 - q
    for (spec, k) in [("GL:2:5", 5 * 5 - 1), ("GL:3:3", 27 - 3)] {
        let g = FiniteGroup::construct(spec).unwrap();
        let rows = centralizer_table(&g).unwrap();
        let order = g.order() as u128;
        let classes: u128 = rows.iter().map(|r| r.order).sum::<u128>() / order;
        assert!(rows.iter().all(|r| order.is_multiple_of(r.order)));
        assert_eq!(classes, k, "{spec}");
    }
}

#[test]
fn jordan_examples() {
    let f2 = field(2);
    let id = jordan_data(&FqMatrix::identity(3), &f2).unwrap();
    assert_eq!(id.blocks().get(&poly(&[1, 1])), Some(&vec![1, 1, 1]));
    assert_eq!(id.centralizer_dim(), 9);

    let j2 = m(&[&[1, 1], &[0, 1]]);
    let jd = jordan_data(&j2, &f2).unwrap();
    assert_eq!(jd.blocks().get(&poly(&[1, 1])), Some(&vec![2]));
    assert_eq!(jd.centralizer_dim(), 2);
    assert_eq!(kernel_dim(&j2, &poly(&[1, 1]), &f2), 1);
    let gl22 = FiniteGroup::construct("GL:2:2").unwrap();
    assert_eq!(centralizer_order_bruteforce(&j2, &gl22, 100).unwrap(), 2);
    assert_eq!(
        centralizer_order_bruteforce(&FqMatrix::identity(2), &gl22, 100).unwrap(),
        6
    );

    // companion matrix of x² + 1 over F₃
    let f3 = field(3);
    let comp = m(&[&[0, 2], &[1, 0]]);
    let jd = jordan_data(&comp, &f3).unwrap();
    assert_eq!(jd.blocks().len(), 1);
    assert_eq!(jd.blocks().get(&poly(&[1, 0, 1])), Some(&vec![1]));

    let diag = m(&[&[1, 0], &[0, 2]]);
    let jd = jordan_data(&diag, &f3).unwrap();
    assert_eq!(jd.centralizer_dim(), 2);
    let gl23 = FiniteGroup::construct("GL:2:3").unwrap();
    assert_eq!(centralizer_order_bruteforce(&diag, &gl23, 100).unwrap(), 4);
    assert!(centralizer_order_bruteforce(&diag, &gl23, 10).is_err());

    // minimal polynomial kills everything; a coprime one kills nothing
    assert_eq!(kernel_dim(&diag, &poly(&[2, 0, 1]), &f3), 2);
    assert_eq!(kernel_dim(&diag, &poly(&[1, 0, 1]), &f3), 0);

    assert!(jordan_data(&m(&[&[1, 1], &[1, 1]]), &f3).is_err());
}

#[test]
fn small_centralizer_exhaustive() {
    let x1 = Word::var(1);
    let r = small_centralizer_experiment(&x1, "GL:2:5", 0, 3.0, 0).unwrap();
    assert_eq!(r.exact.as_deref(), Some("1"));
    assert_eq!(r.measure, CentralizerMeasure::ClosedForm);

    // In GL₂(F₃) only the two scalars have centralizers above 3².
    let r = small_centralizer_experiment(&x1, "GL:2:3", 0, 1.0, 0).unwrap();
    let g = FiniteGroup::construct("GL:2:3").unwrap();
    let small = g.elements().filter(|&x| g.centralizer_order(x) <= 9).count();
    assert_eq!(small, 46);
    assert_eq!(r.exact.as_deref(), Some("23/24"));

    let r = small_centralizer_experiment(&x1, "GL:2:3", 0, 0.0, 0).unwrap();
    assert_eq!(r.exact.as_deref(), Some("0"));

    let sq: Word = "x1^2".parse().unwrap();
    let r = small_centralizer_experiment(&sq, "SL:2:3", 0, 1.0, 0).unwrap();
    assert_eq!(r.measure, CentralizerMeasure::Enumeration);
    let sl = FiniteGroup::construct("SL:2:3").unwrap();
    let hits = sl
        .elements()
        .filter(|&x| sl.centralizer_order(sl.pow(x, 2)) <= 9)
        .count();
    assert_eq!(r.estimate.successes, hits as u64);
}

#[test]
fn small_centralizer_monte_carlo() {
    let sq: Word = "x1^2".parse().unwrap();
    let a = small_centralizer_experiment(&sq, "GL:2:7", 20_000, 2.0, 1).unwrap();
    let b = small_centralizer_experiment(&sq, "GL:2:7", 20_000, 2.0, 1).unwrap();
    assert_eq!(a.estimate, b.estimate);
    assert!(a.estimate.lower <= a.estimate.estimate && a.estimate.estimate <= a.estimate.upper);
    // exact value by enumeration
    let e = small_centralizer_experiment(&sq, "GL:2:7", 0, 2.0, 1).unwrap();
    let p = e.estimate.estimate;
    assert!(a.estimate.lower - 1e-3 <= p && p <= a.estimate.upper + 1e-3);
    // c·r ≥ log_q |G|
    let big = small_centralizer_experiment(&sq, "GL:2:7", 5_000, 4.0, 2).unwrap();
    assert_eq!(big.estimate.estimate, 1.0);
    let proxy = small_centralizer_experiment(&sq, "SL:3:5", 2_000, 3.0, 3).unwrap();
    assert_eq!(proxy.measure, CentralizerMeasure::DimensionProxy);
    assert!(small_centralizer_experiment(&sq, "S:4", 10, 1.0, 0).is_err());
}

#[test]
fn big_kernel() {
    assert_eq!(big_kernel_bound(2, 1, 1, 3, 2), 0.25);
    for (q, f) in [(2, 1), (3, 2), (5, 1)] {
        let b = big_kernel_bound(q, f, 1, 4, 1);
        assert_eq!(b, (q as f64).powi(2 * f as i32));
        assert!(b >= 1.0);
    }
    // only the identity has a 4-dimensional eigenspace in GL₄(F₂)
    let r = big_kernel_estimate(&Word::var(1), "GL:4:2", 1, 2, 1, 1, 0, 0).unwrap();
    assert_eq!(r.threshold, 4);
    assert_eq!(r.exact.as_deref(), Some("1/20160"));
    assert_eq!(r.bound, 4.0);
    assert!(!r.exceeds_bound);
    let mc = big_kernel_estimate(&Word::var(1), "GL:4:2", 1, 2, 1, 1, 10_000, 5).unwrap();
    assert!(!mc.exceeds_bound);
}

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use wordmap::chartab::{
    character_ratio_check, check_multiplicativity, class_convolution_bruteforce,
    class_convolution_probability, coefficient_bound_report, four_trend, fourier_coefficients,
    reconstruct, sign_sum, sign_sum_exact, witten_zeta, CharacterTable, FourierCoefficients,
};
use wordmap::dist::{delta, exact_distribution, uniform};
use wordmap::group::Permutation;
use wordmap::words::{Syllable, Word};
use wordmap::FiniteGroup;

const SUITE: [&str; 6] = ["S:3", "S:4", "A:4", "A:5", "cayley:data/d4.cayley", "PSL2:5"];

fn group(spec: &str) -> Arc<FiniteGroup> {
    FiniteGroup::construct(spec).unwrap()
}

fn table(spec: &str) -> CharacterTable {
    CharacterTable::compute(&group(spec)).unwrap()
}

#[test]
fn degrees() {
    assert_eq!(table("S:3").degrees(), [1, 1, 2]);
    assert_eq!(table("S:4").degrees(), [1, 1, 2, 3, 3]);
    assert_eq!(table("A:5").degrees(), [1, 3, 3, 4, 5]);
    assert_eq!(table("cayley:data/d4.cayley").degrees(), [1, 1, 1, 1, 2]);
    assert_eq!(table("PSL2:7").degrees(), [1, 3, 3, 6, 7, 8]);
    assert_eq!(table("GL:2:3").degrees(), [1, 1, 2, 2, 2, 3, 3, 4]);
}

#[test]
fn cyclic_four_has_powers_of_i() {
    let t = table("cayley:data/c4.cayley");
    assert_eq!(t.degrees(), [1, 1, 1, 1]);
    let powers = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
    ];
    for c in 0..4 {
        let generator = t.at(c, 1);
        assert!(powers.iter().any(|p| (p - generator).norm() < 1e-9));
        for g in 0..4u32 {
            assert!((t.at(c, g) - generator.powu(g)).norm() < 1e-9);
        }
    }
}

#[test]
fn trivial_character_first_and_orthogonality() {
    for spec in SUITE.iter().chain(&["S:5", "PSL2:7", "GL:3:2", "SL:2:5"]) {
        let t = table(spec);
        assert!(t.row(0).iter().all(|z| (z - 1.0).norm() < 1e-9), "{spec}");
        assert!(t.row_orthogonality_error() < 1e-9);
        assert!(t.column_orthogonality_error() < 1e-9);
        let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sum, t.group().order() as u64);
        assert!(t.degrees().windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn class_guard() {
    let s5 = group("S:5");
    assert!(matches!(
        CharacterTable::compute_with_guard(&s5, 5),
        Err(wordmap::Error::Guard { .. })
    ));
}

#[test]
fn fourier_examples() {
    for spec in SUITE {
        let g = group(spec);
        let t = CharacterTable::compute(&g).unwrap();
        let a = fourier_coefficients(&uniform(&g), &t).unwrap();
        assert!((a.values[0] - 1.0).norm() < 1e-12);
        assert!(a.values[1..].iter().all(|z| z.norm() < 1e-12));
        let a = fourier_coefficients(&delta(&g, g.identity()), &t).unwrap();
        for c in 0..t.len() {
            assert!((a.values[c] - t.degree(c) as f64).norm() < 1e-9);
        }
    }
}

/// Frobenius: the commutator map hits 1 exactly `k(G)|G|` times, and more
/// generally `a_{[x,y],χ} = 1/χ(1)`.
#[test]
fn commutator_coefficients() {
    for spec in SUITE {
        let g = group(spec);
        let t = CharacterTable::compute(&g).unwrap();
        let comm = Word::parse("[x1,x2]").unwrap();
        let p = exact_distribution(&comm, &g).unwrap();
        let mut commuting = 0usize;
        for x in g.elements() {
            for y in g.elements() {
                commuting += usize::from(g.mul(x, y) == g.mul(y, x));
            }
        }
        assert_eq!(commuting, t.len() * g.order());
        let a = fourier_coefficients(&p, &t).unwrap();
        for c in 0..t.len() {
            assert!((a.values[c] - 1.0 / t.degree(c) as f64).norm() < 1e-8, "{spec}");
        }
    }
}

#[test]
fn reconstruction_examples() {
    let a5 = group("A:5");
    let t = CharacterTable::compute(&a5).unwrap();
    let mut e = vec![Complex64::new(0.0, 0.0); t.len()];
    e[0] = Complex64::new(1.0, 0.0);
    let u = reconstruct(&FourierCoefficients { values: e }, &t).unwrap();
    assert!(a5.elements().all(|g| (u.prob(g) - 1.0 / 60.0).abs() < 1e-12));

    let d = delta(&a5, a5.identity());
    let back = reconstruct(&fourier_coefficients(&d, &t).unwrap(), &t).unwrap();
    assert!(a5.elements().all(|g| (back.prob(g) - d.prob(g)).abs() < 1e-9));

    let p = exact_distribution(&Word::parse("x1^2").unwrap(), &a5).unwrap();
    let back = reconstruct(&fourier_coefficients(&p, &t).unwrap(), &t).unwrap();
    assert!(a5.elements().all(|g| (back.prob(g) - p.prob(g)).abs() < 1e-9));
}

#[test]
fn multiplicativity_examples() {
    let s3 = group("S:3");
    let t = CharacterTable::compute(&s3).unwrap();
    let dev = check_multiplicativity(&Word::var(1), &Word::var(1), &s3, &t).unwrap();
    assert!(dev < 1e-12);
    let s4 = group("S:4");
    let t = CharacterTable::compute(&s4).unwrap();
    let (sq, cube) = (Word::parse("x1^2").unwrap(), Word::parse("x1^3").unwrap());
    assert!(check_multiplicativity(&sq, &cube, &s4, &t).unwrap() < 1e-8);
    let a5 = group("A:5");
    let t = CharacterTable::compute(&a5).unwrap();
    let comm = Word::parse("[x1,x2]").unwrap();
    assert!(check_multiplicativity(&comm, &sq, &a5, &t).unwrap() < 1e-8);
}

#[test]
fn class_convolution() {
    let s3 = group("S:3");
    let t = CharacterTable::compute(&s3).unwrap();
    let classes = s3.classes();
    let id_class = classes.identity_class();
    assert!((class_convolution_probability(id_class, id_class, s3.identity(), &t) - 1.0).abs() < 1e-12);
    assert!(class_convolution_probability(id_class, id_class, 1, &t).abs() < 1e-12);
    let tau = classes.class_of(s3.encode_permutation(&Permutation::from_cycles(3, &[&[1, 2]]).unwrap()).unwrap());
    let c = s3.encode_permutation(&Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap()).unwrap();
    // (12)(13), (13)(23), (23)(12) give (123): 3 of the 9 pairs
    let brute = class_convolution_bruteforce(&s3, tau, tau, c);
    assert!((brute - 1.0 / 3.0).abs() < 1e-15);
    assert!((class_convolution_probability(tau, tau, c, &t) - brute).abs() < 1e-9);

    for spec in ["S:3", "S:4", "A:4", "A:5"] {
        let g = group(spec);
        let t = CharacterTable::compute(&g).unwrap();
        let k = g.classes().len();
        for c1 in 0..k {
            for c2 in 0..k {
                for target in g.elements() {
                    let a = class_convolution_probability(c1, c2, target, &t);
                    let b = class_convolution_bruteforce(&g, c1, c2, target);
                    assert!((a - b).abs() < 1e-9, "{spec} {c1} {c2} {target}");
                }
            }
        }
    }
}

#[test]
fn zeta_values() {
    let t = table("S:3");
    assert!((witten_zeta(&t, 2.0) - 2.25).abs() < 1e-15);
    assert_eq!(witten_zeta(&t, 0.0), 3.0);
    let t = table("A:5");
    let expected = 1.0 + 2.0 / 9.0 + 1.0 / 16.0 + 1.0 / 25.0;
    assert!((witten_zeta(&t, 2.0) - expected).abs() < 1e-14);
    assert!((witten_zeta(&t, 2.0) - 1.32472).abs() < 1e-5);
    assert!((witten_zeta(&t, -2.0) - 60.0).abs() < 1e-9);
}

#[test]
fn sign_sums() {
    let one = BigRational::from_integer(BigInt::from(1));
    let zero = BigRational::from_integer(BigInt::from(0));
    let s3 = group("S:3");
    let p = exact_distribution(&Word::parse("x1^2").unwrap(), &s3).unwrap();
    assert_eq!(sign_sum_exact(&p).unwrap(), one);
    let p = exact_distribution(&Word::var(1), &s3).unwrap();
    assert_eq!(sign_sum_exact(&p).unwrap(), zero);
    let s4 = group("S:4");
    let p = exact_distribution(&Word::parse("x1^2 x2^3").unwrap(), &s4).unwrap();
    assert_eq!(sign_sum_exact(&p).unwrap(), zero);
    assert!(sign_sum(&p).unwrap().abs() < 1e-15);
    let a4 = group("A:4");
    assert!(sign_sum(&uniform(&a4)).is_err());
}

#[test]
fn coefficient_report() {
    let rows = coefficient_bound_report(&Word::var(1), &[5, 7]).unwrap();
    assert!(rows.iter().all(|r| (r.max_abs - 1.0).abs() < 1e-9));
    let rows = coefficient_bound_report(&Word::parse("[x1,x2]").unwrap(), &[5, 7]).unwrap();
    assert!(rows.iter().all(|r| (r.max_abs - 1.0).abs() < 1e-9));
    let rows = coefficient_bound_report(&Word::parse("x1^2").unwrap(), &[5, 7, 9]).unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.max_abs.is_finite()));
}

#[test]
fn ratio_check_is_diagnostic() {
    for (spec, eps) in [("S:3", 0.5), ("S:6", 0.3), ("A:5", 0.2)] {
        let t = table(spec);
        let v = character_ratio_check(&t, eps).unwrap();
        assert!(v.iter().all(|x| x.character != 0));
    }
    assert!(character_ratio_check(&table("PSL2:5"), 0.5).is_err());
}

#[test]
fn four_squares_trend_is_finite() {
    let rows = four_trend(&[5, 7, 9, 11]).unwrap();
    for r in &rows {
        assert!(r.fourier_bound.is_finite() && r.linf.is_finite());
        assert!(r.linf <= r.fourier_bound + 1e-9);
    }
}

#[test]
fn json_export() {
    let j = table("S:3").to_json();
    assert_eq!(j["classes"].as_array().unwrap().len(), 3);
    assert_eq!(j["characters"][2]["degree"], 2);
}

fn arb_word(d: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=d, -3i64..=3), 1..4).prop_map(move |raw| {
        Word::new(d, raw.into_iter().map(|(var, exp)| Syllable { var, exp })).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn round_trip_and_trivial_coefficient(w in arb_word(2), which in 0usize..SUITE.len()) {
        let g = group(SUITE[which]);
        let t = CharacterTable::compute(&g).unwrap();
        let p = exact_distribution(&w, &g).unwrap();
        let a = fourier_coefficients(&p, &t).unwrap();
        prop_assert!((a.values[0] - 1.0).norm() < 1e-12);
        let back = reconstruct(&a, &t).unwrap();
        for x in g.elements() {
            prop_assert!((back.prob(x) - p.prob(x)).abs() < 1e-9);
        }
    }
}

use proptest::prelude::*;
use wordmap::group::{Permutation, SymmetricPerms};
use wordmap::words::{Syllable, Word};
use wordmap::FiniteGroup;

fn pairs(w: &Word) -> Vec<(usize, i64)> {
    w.syllables().iter().map(|s| (s.var, s.exp)).collect()
}

#[test]
fn parse_examples() {
    assert_eq!(pairs(&Word::parse("x1^2 x2^2").unwrap()), [(1, 2), (2, 2)]);
    assert_eq!(
        pairs(&Word::parse("[x1,x2]").unwrap()),
        [(1, -1), (2, -1), (1, 1), (2, 1)]
    );
    assert_eq!(pairs(&Word::parse("x1 x1^-1 x2").unwrap()), [(2, 1)]);
    assert_eq!(Word::parse("x1 x1^-1 x2").unwrap().arity(), 2);
}

#[test]
fn parse_sugar_and_arity() {
    let nested = Word::parse("[[x1,x2],x3]").unwrap();
    let u = Word::parse("[x1,x2]").unwrap();
    assert_eq!(nested, Word::commutator(&u, &Word::var(3)));
    assert_eq!(Word::parse("(x1 x2)^-2").unwrap().to_string(), "x2^-1 x1^-1 x2^-1 x1^-1");
    assert_eq!(Word::parse("x1x2").unwrap(), Word::parse("x1 x2").unwrap());
    let w = Word::parse("d=3 x1^2").unwrap();
    assert_eq!(w.arity(), 3);
    assert_eq!(w.to_string(), "d=3 x1^2");
    let e = Word::parse("1").unwrap();
    assert!(e.is_trivial());
    assert_eq!(e.to_string(), "1");
    assert_eq!(Word::parse("d=2 1").unwrap().arity(), 2);
}

#[test]
fn parse_errors() {
    for bad in ["", "x0", "x-1", "x1^0", "x1^", "[x1 x2]", "(x1", "d=1 x2", "y1", "x1 ]"] {
        assert!(Word::parse(bad).is_err(), "{bad:?} should be rejected");
    }
    match Word::parse("x1 x0") {
        Err(wordmap::Error::Parse { pos, .. }) => assert_eq!(pos, 4),
        other => panic!("{other:?}"),
    }
}

#[test]
fn evaluate_examples() {
    let s3 = FiniteGroup::construct("S:3").unwrap();
    let c = s3
        .encode_permutation(&Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap())
        .unwrap();
    let w = Word::parse("x1^2 x2^2").unwrap();
    // (123)^2 (123)^2 = (123)^4 = (123)
    assert_eq!(w.evaluate(&*s3, &[c, c]), c);
    let comm = Word::parse("[x1,x2]").unwrap();
    assert_eq!(comm.evaluate(&*s3, &[c, s3.pow(c, 2)]), s3.identity());
    for g in s3.elements() {
        assert_eq!(Word::var(1).evaluate(&*s3, &[g]), g);
    }
}

#[test]
fn abelianization_and_parity_examples() {
    let x1x2 = Word::parse("x1 x2").unwrap();
    assert_eq!(x1x2.abelianization().exponents, [1, 1]);
    assert!(x1x2.is_primitive());
    let sq = Word::parse("x1^2 x2^2").unwrap();
    assert_eq!(sq.abelianization().exponents, [2, 2]);
    assert!(!sq.is_primitive());
    assert_eq!(sq.parity(), 1);
    let comm = Word::parse("[x1,x2]").unwrap();
    assert!(comm.abelianization().is_zero());
    assert!(!comm.is_primitive());
    assert_eq!(comm.parity(), 1);
    assert_eq!(Word::var(1).parity(), 0);
}

#[test]
fn disjoint_product_examples() {
    let sq = Word::parse("x1^2").unwrap();
    let p = Word::disjoint_product(&[sq.clone(), sq.clone()]).unwrap();
    assert_eq!(p, Word::parse("x1^2 x2^2").unwrap());
    let p = Word::disjoint_product(&[Word::var(1), Word::var(1).inverse()]).unwrap();
    assert_eq!(p, Word::parse("x1 x2^-1").unwrap());
    let cube = Word::parse("x1^3").unwrap();
    assert_eq!(Word::disjoint_product(&[sq, cube]).unwrap().parity(), 0);
    assert!(Word::disjoint_product(&[]).is_err());
}

#[test]
fn surjectivity_witness_examples() {
    let s5 = FiniteGroup::construct("S:5").unwrap();
    let g = s5
        .encode_permutation(&Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap())
        .unwrap();
    let w = Word::parse("x1^2 x2^3").unwrap();
    let t = w.surjectivity_witness(&*s5, &g).unwrap();
    assert_eq!(w.evaluate(&*s5, &t), g);
    let (_, b) = w.abelianization().bezout();
    assert_eq!(2 * b[0] + 3 * b[1], 1);

    let psl = FiniteGroup::construct("PSL2:7").unwrap();
    let w = Word::parse("x1^3 x2^5").unwrap();
    for g in psl.elements().step_by(7) {
        let t = w.surjectivity_witness(&*psl, &g).unwrap();
        assert_eq!(w.evaluate(&*psl, &t), g);
    }
    assert!(Word::parse("x1^2 x2^2")
        .unwrap()
        .surjectivity_witness(&*psl, &0)
        .is_err());
}

#[test]
fn long_powers_are_cheap() {
    let perms = SymmetricPerms { n: 50 };
    let mut cycle: Vec<u32> = (1..50).collect();
    cycle.push(0);
    let c = Permutation::from_images(cycle).unwrap();
    let w = Word::parse("x1^1000000000").unwrap();
    // 10^9 = 0 mod 50
    assert_eq!(w.evaluate(&perms, &[c]), Permutation::identity(50));
}

fn arb_word(max_arity: usize) -> impl Strategy<Value = Word> {
    (1..=max_arity).prop_flat_map(|d| {
        prop::collection::vec((1..=d, -4i64..=4), 0..8).prop_map(move |raw| {
            Word::new(d, raw.into_iter().map(|(var, exp)| Syllable { var, exp })).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(w in arb_word(4)) {
        let back = Word::parse(&w.to_string()).unwrap();
        prop_assert_eq!(back.length(), w.length());
        prop_assert_eq!(back, w);
    }

    #[test]
    fn reduced_form_invariant(w in arb_word(4)) {
        for pair in w.syllables().windows(2) {
            prop_assert_ne!(pair[0].var, pair[1].var);
        }
        prop_assert!(w.syllables().iter().all(|s| s.exp != 0));
    }

    #[test]
    fn cancelling_insertions_do_not_change_values(
        w in arb_word(3),
        at in 0usize..20,
        var in 1usize..=3,
        exp in 1i64..4,
        args in prop::collection::vec(0u32..24, 3),
    ) {
        let s4 = FiniteGroup::construct("S:4").unwrap();
        let mut raw: Vec<Syllable> = w.syllables().to_vec();
        let at = at.min(raw.len());
        raw.insert(at, Syllable { var, exp: -exp });
        raw.insert(at, Syllable { var, exp });
        let padded = Word::new(3, raw).unwrap();
        prop_assert_eq!(padded.evaluate(&*s4, &args), w.evaluate(&*s4, &args));
    }

    #[test]
    fn abelianization_is_additive(u in arb_word(3), v in arb_word(3)) {
        let uv = u.concat(&v);
        let sum = &u.abelianization() + &v.abelianization();
        let mut got = uv.abelianization().exponents;
        got.resize(sum.exponents.len(), 0);
        prop_assert_eq!(got, sum.exponents);
    }

    #[test]
    fn parity_of_disjoint_product(ws in prop::collection::vec(arb_word(3), 1..5)) {
        let p = Word::disjoint_product(&ws).unwrap();
        let expected: u8 = ws.iter().map(|w| w.parity()).product();
        prop_assert_eq!(p.parity(), expected);
    }

    #[test]
    fn witness_evaluates_to_target(w in arb_word(3), g in 0u32..60) {
        prop_assume!(w.is_primitive());
        for spec in ["A:5", "S:4", "GL:2:3"] {
            let group = FiniteGroup::construct(spec).unwrap();
            let g = g % group.order() as u32;
            let t = w.surjectivity_witness(&*group, &g).unwrap();
            prop_assert_eq!(w.evaluate(&*group, &t), g);
        }
    }
}

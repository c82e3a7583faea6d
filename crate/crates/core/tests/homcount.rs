use num_traits::ToPrimitive;
use wordmap::chartab::CharacterTable;
use wordmap::dist::exact_distribution;
use wordmap::homcount::{
    action_counts, epimorphism_probability, free_subgroup_count, hom_count,
    hom_count_via_characters, hom_set, maximal_subgroup_count, subgroup_count, subgrowth, EpiMode,
};
use wordmap::{FiniteGroup, Word};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn commutator() -> Word {
    w("[x1,x2]")
}

/// Number of conjugacy classes by brute force: Σ_g |C(g)| / |G|.
fn class_number(g: &FiniteGroup) -> u64 {
    let s: usize = g.elements().map(|x| g.centralizer_order(x)).sum();
    (s / g.order()) as u64
}

#[test]
fn commuting_pairs_follow_frobenius() {
    assert_eq!(hom_count(&commutator(), &FiniteGroup::construct("S:3").unwrap()).unwrap(), 18);
    assert_eq!(hom_count(&commutator(), &FiniteGroup::construct("A:5").unwrap()).unwrap(), 300);
    for spec in ["S:4", "A:4", "cayley:data/d4.cayley", "GL:2:3", "PSL2:7"] {
        let g = FiniteGroup::construct(spec).unwrap();
        let c = hom_count(&commutator(), &g).unwrap();
        assert_eq!(c, class_number(&g) * g.order() as u64, "{spec}");
    }
}

#[test]
fn hom_count_matches_distribution_and_characters() {
    let words = ["x1", "x1^2", "x1^2 x2^2", "[x1,x2] x3^3", "x1^3 x2^-2 x1"];
    for spec in ["S:3", "S:4", "A:5", "cayley:data/d4.cayley"] {
        let g = FiniteGroup::construct(spec).unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        for ws in words {
            let word = w(ws);
            let count = hom_count(&word, &g).unwrap();
            let p = exact_distribution(&word, &g).unwrap();
            let scaled = p.prob_exact(g.identity()).unwrap()
                * num_bigint::BigInt::from(g.order()).pow(word.arity() as u32);
            assert!(scaled.is_integer());
            assert_eq!(scaled.to_integer().to_u64().unwrap(), count, "{ws} on {spec}");
            let via = hom_count_via_characters(&word, &t).unwrap();
            assert!((via - count as f64).abs() < 1e-6 * count as f64, "{ws} on {spec}");
        }
    }
    assert_eq!(hom_count(&w("x1"), &FiniteGroup::construct("A:5").unwrap()).unwrap(), 1);
}

#[test]
fn hom_set_lists_solutions() {
    let g = FiniteGroup::construct("S:3").unwrap();
    let h = hom_set(&commutator(), &g, Some(100)).unwrap();
    let sols = h.solutions.unwrap();
    assert_eq!(sols.len(), 18);
    assert!(sols.iter().all(|t| g.mul(t[0], t[1]) == g.mul(t[1], t[0])));
    assert!(hom_set(&commutator(), &g, Some(10)).is_err());
}

fn sigma(n: u128) -> u128 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum()
}

/// Sublattices of index n in ℤ²: Hermite normal forms [[a, b], [0, d]] with
/// ad = n and 0 ≤ b < d.
fn sublattices(n: u128) -> u128 {
    (1..=n).filter(|a| n.is_multiple_of(*a)).map(|a| n / a).sum()
}

#[test]
fn subgroups_of_z2() {
    for n in 1..=6u128 {
        assert_eq!(sublattices(n), sigma(n));
        assert_eq!(subgroup_count(&commutator(), n as usize).unwrap(), sigma(n), "n={n}");
    }
    assert_eq!(subgroup_count(&commutator(), 7).unwrap(), sigma(7));
    let m4 = maximal_subgroup_count(&commutator(), 4).unwrap();
    assert!(m4 < 7);
    // maximal subgroups of ℤ² have prime index p, and there are p + 1 of them
    let m: Vec<u128> = (1..=6)
        .map(|n| maximal_subgroup_count(&commutator(), n).unwrap())
        .collect();
    assert_eq!(m, [0, 3, 4, 0, 6, 0]);
}

#[test]
fn trivial_group_has_no_proper_subgroups() {
    let rel = w("x1");
    assert_eq!(subgroup_count(&rel, 1).unwrap(), 1);
    for n in 2..=6 {
        assert_eq!(subgroup_count(&rel, n).unwrap(), 0);
    }
}

/// Hall: a_n(F_d) = n (n!)^{d−1} − Σ_{k=1}^{n−1} ((n−k)!)^{d−1} a_k(F_d), written
/// out with a memo table.
fn hall(d: u32, max_n: usize) -> Vec<u128> {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut a = vec![0u128; max_n + 1];
    for n in 1..=max_n {
        let mut v = n as u128 * fact(n).pow(d - 1);
        for k in 1..n {
            v -= fact(n - k).pow(d - 1) * a[k];
        }
        a[n] = v;
    }
    a
}

#[test]
fn free_group_counts_follow_hall() {
    let free = Word::identity(2);
    let expected = hall(2, 6);
    assert_eq!(&expected[1..5], [1, 3, 13, 71]);
    for n in 1..=6 {
        assert_eq!(subgroup_count(&free, n).unwrap(), expected[n], "n={n}");
        assert_eq!(free_subgroup_count(2, n), expected[n]);
    }
    // a_n(ℤ) = 1
    for n in 1..=6 {
        assert_eq!(subgroup_count(&Word::identity(1), n).unwrap(), 1);
    }
}

#[test]
fn prime_cycles_are_primitive() {
    // Γ = ℤ: the only transitive actions are the n-cycles.
    let z = Word::identity(1);
    for n in [2usize, 3, 5, 7] {
        let c = action_counts(&z, n, 1 << 20).unwrap();
        assert_eq!(c.transitive, c.primitive, "n={n}");
        assert_eq!(c.transitive, (1..n as u128).product::<u128>());
    }
    let c = action_counts(&z, 4, 1 << 20).unwrap();
    assert_eq!((c.transitive, c.primitive), (6, 0));
}

#[test]
fn solved_variable_agrees_with_enumeration() {
    // x2 occurs once, so it is solved for; the inverted form swaps roles.
    let a = action_counts(&w("x1^2 x2 x1^-1"), 5, 1 << 30).unwrap();
    let b = action_counts(&w("x1^2 x2^2 x1^-1 x2^-1"), 5, 1 << 30).unwrap();
    let brute: u128 = {
        let g = FiniteGroup::construct("S:5").unwrap();
        hom_count(&w("x1^2 x2 x1^-1"), &g).unwrap() as u128
    };
    assert_eq!(a.homs, brute);
    assert_eq!(a.homs, 120);
    let g = FiniteGroup::construct("S:5").unwrap();
    assert_eq!(b.homs, hom_count(&w("x1^2 x2^2 x1^-1 x2^-1"), &g).unwrap() as u128);
}

#[test]
fn subgrowth_table() {
    let rows = subgrowth(&commutator(), 5).unwrap();
    let a: Vec<&str> = rows.iter().map(|r| r.a_n.as_str()).collect();
    assert_eq!(a, ["1", "3", "4", "7", "6"]);
    assert_eq!(rows[0].m_n, "0");
    assert_eq!(rows[2].free_ratio, Some(4.0));
}

#[test]
fn epimorphisms() {
    let a5 = FiniteGroup::construct("A:5").unwrap();
    let r = epimorphism_probability(&commutator(), &a5, EpiMode::Exact).unwrap();
    assert_eq!((r.homs, r.epimorphisms), (300, 0));

    // free group of rank 2: every pair is a homomorphism
    let free = Word::identity(2);
    let r = epimorphism_probability(&free, &a5, EpiMode::Exact).unwrap();
    let gen = a5
        .elements()
        .flat_map(|x| a5.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| a5.generates(&[x, y]))
        .count();
    assert_eq!(r.homs, 3600);
    assert_eq!(r.epimorphisms as usize, gen);
    assert_eq!(gen, 2280);

    let mc = epimorphism_probability(&free, &a5, EpiMode::MonteCarlo { samples: 20_000, seed: 4 })
        .unwrap();
    let iv = mc.interval.unwrap();
    assert!(iv.lower <= r.probability && r.probability <= iv.upper);
    let again = epimorphism_probability(&free, &a5, EpiMode::MonteCarlo { samples: 20_000, seed: 4 })
        .unwrap();
    assert_eq!(mc.epimorphisms, again.epimorphisms);

    // rejection needs at least 100 solutions
    let rare = w("x1 x2 x3 x4 x5");
    assert!(epimorphism_probability(&rare, &a5, EpiMode::MonteCarlo { samples: 1000, seed: 0 })
        .is_err());
}

#[test]
fn four_squares_in_a5() {
    let word = Word::disjoint_product(&vec![w("x1^2"); 4]).unwrap();
    assert_eq!(word.arity(), 4);
    let a5 = FiniteGroup::construct("A:5").unwrap();
    let r = epimorphism_probability(&word, &a5, EpiMode::Exact).unwrap();
    assert_eq!(r.homs, hom_count(&word, &a5).unwrap());
    assert!(r.probability > 0.9, "{}", r.probability);
    println!("x1^2 x2^2 x3^2 x4^2 on A5: {} ({})", r.probability, r.exact.unwrap());
}

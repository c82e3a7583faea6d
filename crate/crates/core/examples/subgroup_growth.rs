//! Homomorphism counts, subgroup growth and epimorphism probabilities for a
//! one-relator group.
//!
//!     cargo run --example subgroup_growth -- "[x1,x2]" 6

use wordmap::homcount::{epimorphism_probability, hom_count, subgrowth, EpiMode};
use wordmap::{FiniteGroup, Word};

fn main() -> wordmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let relator: Word = args.next().as_deref().unwrap_or("[x1,x2]").parse()?;
    let max_n: usize = args.next().map_or(6, |s| s.parse().expect("max n"));

    for spec in ["S:3", "S:4", "A:5", "PSL2:7"] {
        let g = FiniteGroup::construct(spec)?;
        println!("|Hom(Γ, {spec})| = {}", hom_count(&relator, &g)?);
    }

    println!(" n   a_n   m_n   a_n / a_n(F_(d-1))");
    for row in subgrowth(&relator, max_n)? {
        let ratio = row.free_ratio.map_or("-".into(), |r| format!("{r:.4}"));
        println!("{:>2} {:>5} {:>5}   {ratio}", row.n, row.a_n, row.m_n);
    }

    let a5 = FiniteGroup::construct("A:5")?;
    let squares = Word::disjoint_product(&vec!["x1^2".parse()?; 3])?;
    let r = epimorphism_probability(&squares, &a5, EpiMode::Exact)?;
    println!(
        "{squares} into A:5: {} of {} homomorphisms are onto ({:.4})",
        r.epimorphisms, r.homs, r.probability
    );
    Ok(())
}

//! Distribution of a word map on a finite group, exact and sampled, with its
//! distance from uniform.
//!
//!     cargo run --example word_distribution -- "x1^2 x2^2" A:5

use wordmap::dist::{exact_distribution, monte_carlo_distribution, uniform, Norm};
use wordmap::{FiniteGroup, Word};

fn main() -> wordmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let word: Word = args.next().as_deref().unwrap_or("x1^2 x2^2").parse()?;
    let group = FiniteGroup::construct(args.next().as_deref().unwrap_or("A:5"))?;

    let exact = exact_distribution(&word, &group)?;
    let u = uniform(&group);
    println!("{word} on {} (|G| = {})", group.spec(), group.order());
    println!("support size {}", exact.support().len());
    for norm in [Norm::L1, Norm::L2, Norm::Inf] {
        println!("{norm:?} distance to uniform: {:.6}", exact.lp_distance(&u, norm)?);
    }

    let classes = group.classes();
    println!("class   size   p(class representative)");
    for (i, p) in exact.class_values().iter().enumerate() {
        println!("{i:>5} {:>6}   {p:.6}", classes.class(i).size);
    }

    let sampled = monte_carlo_distribution(&word, &group, 200_000, 1)?;
    println!(
        "Monte Carlo L1 error with 2e5 samples: {:.4}",
        sampled.lp_distance(&exact, Norm::L1)?
    );
    Ok(())
}

//! Jordan data and centralizers in GL_n(F_q), and how often a word value
//! has a small centralizer.
//!
//!     cargo run --example centralizers -- GL:3:3

use std::collections::BTreeMap;

use wordmap::fqlinalg::{
    big_kernel_bound, big_kernel_estimate, jordan_data, small_centralizer_experiment,
};
use wordmap::{FiniteGroup, Word};

fn main() -> wordmap::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "GL:3:3".into());
    let group = FiniteGroup::construct(&spec)?;
    let f = group.field().expect("a matrix group").clone();

    // how many elements have each centralizer dimension
    let mut by_dim: BTreeMap<usize, (usize, u128)> = BTreeMap::new();
    for x in group.elements() {
        let jd = jordan_data(&group.matrix(x).unwrap(), &f)?;
        let e = by_dim.entry(jd.centralizer_dim()).or_default();
        e.0 += 1;
        e.1 = e.1.max(jd.gl_centralizer_order());
    }
    println!("{spec}: centralizer dimension, elements, largest |C|");
    for (dim, (count, order)) in &by_dim {
        println!("  {dim:>3} {count:>8} {order:>10}");
    }

    let sq: Word = "x1^2".parse()?;
    for c in [0.5, 1.0, 1.5] {
        let r = small_centralizer_experiment(&sq, &spec, 50_000, c, 1)?;
        println!(
            "Pr[|C(g²)| ≤ q^({c}·r)] ≈ {:.4} [{:.4}, {:.4}]",
            r.estimate.estimate, r.estimate.lower, r.estimate.upper
        );
    }

    println!("big-kernel bound q=2, f=1, l=1, D=3, k=2: {}", big_kernel_bound(2, 1, 1, 3, 2));
    let r = big_kernel_estimate(&Word::var(1), "GL:4:2", 1, 2, 1, 1, 0, 0)?;
    println!(
        "GL:4:2, D=1, k=2: Pr[dim ker Q(g) ≥ {}] = {} against bound {}",
        r.threshold,
        r.exact.unwrap_or_default(),
        r.bound
    );
    Ok(())
}

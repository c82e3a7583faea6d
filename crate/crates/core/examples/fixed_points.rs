//! Tail of the fixed-point count of w(σ₁, …, σ_d) in S_n against the
//! analytic bound.
//!
//!     cargo run --example fixed_points -- x1^2 200

use wordmap::dist::fix_tail;
use wordmap::Word;

fn main() -> wordmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let word: Word = args.next().as_deref().unwrap_or("x1").parse()?;
    let n: usize = args.next().map_or(100, |s| s.parse().expect("degree"));

    println!("{word} in S_{n}");
    println!(" k   Pr[fix ≥ k]           bound");
    for k in [1, 2, 4, 5, 8, 16] {
        if k > n {
            break;
        }
        let r = fix_tail(&word, n, k, 200_000, 11)?;
        let bound = r.bound.map_or("-".to_string(), |b| format!("{b:.3e}"));
        println!(
            "{k:>2}   {:.5} ± {:.5}   {bound}",
            r.estimate.estimate,
            0.5 * (r.estimate.upper - r.estimate.lower)
        );
    }
    Ok(())
}

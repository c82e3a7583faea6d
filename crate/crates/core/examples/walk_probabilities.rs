//! Exact P_n = Pr[X_n is primitive] for the simple random walk on Z², and
//! its drift towards the parity limits 4/π² and 8/π².
//!
//!     cargo run --example walk_probabilities -- 400

use wordmap::walkcert::{
    fraction_string, mod_limit_check, parity_limit_report, primitivity_probabilities, Mode,
};

fn main() -> wordmap::Result<()> {
    let max_n: usize = std::env::args().nth(1).map_or(400, |s| s.parse().expect("max n"));
    let values = primitivity_probabilities(max_n, Mode::Exact)?;
    for v in values.iter().take(6) {
        println!("P_{} = {}", v.n, fraction_string(v.exact.as_ref().unwrap()));
    }
    let ns: Vec<usize> = [10, 11, 100, 101, max_n - 1, max_n].into_iter().collect();
    println!(" n        P_n      limit    |diff|");
    for r in parity_limit_report(&values, &ns) {
        println!("{:>4}  {:.6}  {:.6}  {:.2e}", r.n, r.pn, r.reference, r.difference);
    }
    for m in [2, 3, 6] {
        let c = mod_limit_check(m, max_n)?;
        println!("Pr[gcd(X_n, {m}) > 1] at n = {max_n}: {:.6} (limit {:.6})", c.chain.mid(), c.limit);
    }
    Ok(())
}

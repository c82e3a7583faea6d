//! Lower bound for the probability that a random walk on Z² ends at a
//! primitive vector.
//!
//!     cargo run --example walk_certificate -- 1000 60

use std::time::Instant;

use wordmap::walkcert::{certificate, Mode};

fn main() -> wordmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let cutoff = args.next().map_or(Ok(200), |s| s.parse()).expect("cutoff");
    let prime_cutoff = args.next().map_or(Ok(60), |s| s.parse()).expect("prime cutoff");

    let start = Instant::now();
    let cert = certificate(cutoff, prime_cutoff, Mode::Exact)?;
    let min = cert.min_pn.as_ref().unwrap();
    println!("min P_n for n < {cutoff}: {:.6} at n = {}", min.lower, min.n);
    println!("a_n,6  < {:.6}", cert.mod6.bound);
    for b in cert.primes.iter().take(3).chain(cert.primes.last()) {
        println!("a_n,{:<3} < {:.6}", b.m, b.bound);
    }
    println!("prime tail      {:.6}", cert.tail.displayed.hi);
    println!("integral tail   {:.6}", cert.integral_tail);
    println!("return bound    {:.6}", cert.return_bound);
    println!("final bound     {:.6}", cert.final_lower_bound);
    println!("verdict: {}", if cert.verdict { "P_n > 1/3 for all n" } else { "inconclusive" });
    eprintln!("({:.1?})", start.elapsed());
    Ok(())
}

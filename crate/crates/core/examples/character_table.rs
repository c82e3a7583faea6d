//! Character table, Fourier coefficients of a word map and the Witten zeta
//! function.
//!
//!     cargo run --example character_table -- PSL2:7 "[x1,x2]"

use wordmap::chartab::{fourier_coefficients, reconstruct, witten_zeta, CharacterTable};
use wordmap::dist::{exact_distribution, Norm};
use wordmap::{FiniteGroup, Word};

fn main() -> wordmap::Result<()> {
    let mut args = std::env::args().skip(1);
    let group = FiniteGroup::construct(args.next().as_deref().unwrap_or("PSL2:7"))?;
    let word: Word = args.next().as_deref().unwrap_or("[x1,x2]").parse()?;

    let t = CharacterTable::compute(&group)?;
    println!("{}: {} classes, degrees {:?}", group.spec(), t.len(), t.degrees());
    for c in 0..t.len() {
        let row: Vec<String> = t
            .row(c)
            .iter()
            .map(|z| {
                if z.im.abs() < 1e-9 {
                    format!("{:>7.3}", if z.re.abs() < 5e-4 { 0.0 } else { z.re })
                } else {
                    format!("{:.2}{:+.2}i", z.re, z.im)
                }
            })
            .collect();
        println!("  χ{c}: {}", row.join(" "));
    }
    println!(
        "orthogonality errors: rows {:.1e}, columns {:.1e}",
        t.row_orthogonality_error(),
        t.column_orthogonality_error()
    );

    let p = exact_distribution(&word, &group)?;
    let a = fourier_coefficients(&p, &t)?;
    println!("a_χ for {word}:");
    for (c, v) in a.values.iter().enumerate() {
        println!("  χ{c} (deg {}): {:.6}", t.degree(c), v.re);
    }
    let back = reconstruct(&a, &t)?;
    println!("round trip L1 error {:.1e}", back.lp_distance(&p, Norm::L1)?);

    for s in [0.5, 1.0, 2.0] {
        println!("ζ({s}) = {:.6}", witten_zeta(&t, s));
    }
    Ok(())
}

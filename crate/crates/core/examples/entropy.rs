//! Linear entropy of one particle. For separate baths the entropy first dips
//! below its initial value when T < cosh(2s)/2.

use dcl::reduced::{purity_entropy, short_time_slope};
use dcl::{BathParams, Regime, Squeeze};

fn main() -> dcl::Result<()> {
    let s = Squeeze::new(2.3)?;
    let boundary = (2.0 * s.value()).cosh() / 2.0;
    println!("s = 2.3, dip boundary T = {boundary:.4}");
    for temp in [0.5 * boundary, 2.0 * boundary] {
        let bath = BathParams::new(0.1, temp)?;
        let regime = Regime::Distinct(bath);
        println!("T = {temp:.3}: dS/d(gamma t) at 0 = {:.5}", short_time_slope(regime, s));
        for t in [0.0, 0.01, 0.05, 0.1, 0.5, 1.0] {
            let e = purity_entropy(regime, s, t)?;
            println!("  t = {t:<5} purity = {:.8}  S = {:.8}", e.purity, e.linear_entropy);
        }
    }

    let bath = BathParams::new(0.1, 10.0)?;
    println!("\nshared bath, T = 10");
    for sv in [0.0, 0.5, 1.15] {
        let s = Squeeze::new(sv)?;
        let row: Vec<String> = [0.0, 1.0, 5.0, 20.0, 60.0]
            .iter()
            .map(|&t| Ok(format!("{:.5}", purity_entropy(Regime::Common(bath), s, t)?.linear_entropy)))
            .collect::<dcl::Result<_>>()?;
        println!("  s = {sv:<5} S(t = 0, 1, 5, 20, 60) = {}", row.join(", "));
    }
    Ok(())
}

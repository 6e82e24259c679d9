//! Logarithmic negativity against time for separate and shared baths.
//! Separate baths kill entanglement in finite time; a shared bath lets it
//! come back and grow.

use dcl::gaussian::log_negativity;
use dcl::{BathParams, Regime, Squeeze};

fn main() -> dcl::Result<()> {
    let s = Squeeze::new(20f64.ln() / 2.0)?;
    let bath = BathParams::new(0.2, 10.0)?;
    println!("{:>8} {:>12} {:>12} {:>12}", "t", "isolated", "distinct", "common");
    for t in [0.0, 0.1, 0.2, 0.3, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0] {
        println!(
            "{t:>8.2} {:>12.6} {:>12.6} {:>12.6}",
            log_negativity(Regime::Schrodinger, s, t)?,
            log_negativity(Regime::Distinct(bath), s, t)?,
            log_negativity(Regime::Common(bath), s, t)?,
        );
    }
    Ok(())
}

//! Sudden-death time of entanglement in separate baths against temperature.

use dcl::events::find_death_time;
use dcl::gaussian::log_negativity;
use dcl::{BathParams, Regime, Squeeze};

fn main() -> dcl::Result<()> {
    for sv in [20f64.ln() / 2.0, -(0.9f64.ln()) / 2.0] {
        let s = Squeeze::new(sv)?;
        println!("s = {sv:.5}");
        for temp in [10.0, 15.0, 20.0, 25.0] {
            let bath = BathParams::new(0.2, temp)?;
            let t_d = find_death_time(s, bath, 10.0)?.death_time.unwrap_or(f64::NAN);
            let before = log_negativity(Regime::Distinct(bath), s, t_d - 1e-3)?;
            println!("  T = {temp:>4}: t_d = {t_d:.8}  E_N(t_d - 1e-3) = {before:.3e}");
        }
    }
    Ok(())
}

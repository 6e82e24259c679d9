//! EPR uncertainty xi and MGVT product eta. Prints how long each regime keeps
//! eta below 1 and how eta depends on temperature.

use dcl::epr::{epr_measures, schrodinger_eta_crossing};
use dcl::{BathParams, Regime, Squeeze};

fn main() -> dcl::Result<()> {
    let threshold = 4f64.ln() / 4.0;
    println!("EPR-correlated at t = 0 iff s > {threshold:.9}");

    for sv in [0.1, 0.4, 1.0] {
        let s = Squeeze::new(sv)?;
        let free = schrodinger_eta_crossing(s).unwrap_or(0.0);
        println!("s = {sv}: isolated eta reaches 1 at t = {free:.6}");
        let bath = BathParams::new(0.2, 15.0)?;
        for regime in [Regime::Distinct(bath), Regime::Common(bath)] {
            let r = epr_measures(regime, s, 0.05)?;
            println!(
                "  {:<9} t = 0.05: xi = {:.5} eta = {:.5} mgvt = {} epr = {}",
                regime.kind(),
                r.xi,
                r.eta,
                r.mgvt_entangled,
                r.epr_correlated
            );
        }
    }

    println!("\neta at t = 1, s = 0.4, gamma = 0.2 against T");
    let s = Squeeze::new(0.4)?;
    for temp in [5.0, 10.0, 15.0, 20.0] {
        let b = BathParams::new(0.2, temp)?;
        println!(
            "  T = {temp:>4}: distinct {:>10.4} common {:>10.4}",
            epr_measures(Regime::Distinct(b), s, 1.0)?.eta,
            epr_measures(Regime::Common(b), s, 1.0)?.eta
        );
    }
    Ok(())
}

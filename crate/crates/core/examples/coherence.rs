//! l1-norm coherence and coherence length of one particle's reduced state,
//! plus the first time the shared-bath curve overtakes the separate-bath one.

use dcl::events::find_crossing;
use dcl::reduced::l1_coherence;
use dcl::{BathParams, Regime, Squeeze};

fn main() -> dcl::Result<()> {
    let bath = BathParams::new(0.1, 10.0)?;
    for s in [0.0, 10f64.ln() / 2.0] {
        let s = Squeeze::new(s)?;
        println!("s = {:.4}", s.value());
        println!("{:>6} {:>10} {:>10} {:>10} {:>10}", "t", "C distinct", "C common", "L distinct", "L common");
        for t in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 60.0] {
            let d = l1_coherence(Regime::Distinct(bath), s, t)?;
            let c = l1_coherence(Regime::Common(bath), s, t)?;
            println!(
                "{t:>6.1} {:>10.5} {:>10.5} {:>10.5} {:>10.5}",
                d.c_l1, c.c_l1, d.coherence_length, c.coherence_length
            );
        }
        let d = l1_coherence(Regime::Distinct(bath), s, 0.0)?.stationary.value();
        let c = l1_coherence(Regime::Common(bath), s, 0.0)?.stationary.value();
        println!("stationary: distinct {d:?}, common {c:?}");
        match find_crossing(s, bath, 60.0)?.crossing_time {
            Some(t) => println!("common overtakes distinct at t = {t:.6}\n"),
            None => println!("no crossing on [0, 60]\n"),
        }
    }
    Ok(())
}

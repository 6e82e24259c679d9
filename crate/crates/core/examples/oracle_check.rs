//! Compares the closed forms against the two numerical oracles: RK4 on the
//! moment equations and adaptive quadrature of the reduced density matrix.

use dcl::oracle::{integrate_moments, max_deviation, quad_l1_coherence, quad_purity, QuadratureSpec};
use dcl::reduced::{l1_coherence, purity_entropy, reduced_gaussian};
use dcl::{BathParams, Regime, Squeeze};

fn main() -> dcl::Result<()> {
    let s = Squeeze::new(1.15)?;
    let bath = BathParams::new(0.1, 10.0)?;
    let spec = QuadratureSpec::default();
    for regime in [Regime::Distinct(bath), Regime::Common(bath)] {
        let traj = integrate_moments(regime, s, 10.0, 10_000)?;
        println!("{}: RK4 max |error| on [0, 10] = {:.3e}", regime.kind(), max_deviation(regime, s, &traj)?);
        for t in [0.5, 2.0, 8.0] {
            let state = reduced_gaussian(regime, s, t)?;
            let c = l1_coherence(regime, s, t)?.c_l1;
            let p = purity_entropy(regime, s, t)?.purity;
            println!(
                "  t = {t}: C = {c:.10} (quad {:.10})  purity = {p:.10} (quad {:.10})",
                quad_l1_coherence(&state, &spec)?,
                quad_purity(&state, &spec)?
            );
        }
    }
    Ok(())
}

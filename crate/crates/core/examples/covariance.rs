//! Covariance matrix of the two particles in each regime, with the Gaussian
//! invariants that decide separability.
//!
//! cargo run --example covariance -- [s] [gamma] [T] [t]

use dcl::gaussian::{covariance, symplectic_analysis};
use dcl::{BathParams, Regime, Squeeze};

fn arg(i: usize, default: f64) -> f64 {
    std::env::args().nth(i).and_then(|a| a.parse().ok()).unwrap_or(default)
}

fn main() -> dcl::Result<()> {
    let s = Squeeze::new(arg(1, 1.15))?;
    let bath = BathParams::new(arg(2, 0.1), arg(3, 10.0))?;
    let t = arg(4, 2.5);

    for regime in [Regime::Schrodinger, Regime::Distinct(bath), Regime::Common(bath)] {
        let cov = covariance(regime, s, t)?;
        let report = symplectic_analysis(&cov)?;
        println!("{} at t = {t}", regime.kind());
        for row in cov.matrix() {
            println!("  [{:>12.6} {:>12.6} {:>12.6} {:>12.6}]", row[0], row[1], row[2], row[3]);
        }
        println!(
            "  det A = {:.6}  det C = {:.6}  det sigma = {:.6}",
            report.det_a, report.det_c, report.det_sigma
        );
        println!(
            "  nu~_- = {:.6}  E_N = {:.6}  separable = {}\n",
            report.nu_tilde_minus, report.log_negativity, report.separable
        );
    }
    Ok(())
}

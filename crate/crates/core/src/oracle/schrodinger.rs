//! Exact two-particle density matrix for isolated particles and its
//! numerical partial trace.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::quadrature::{integrate_1d, QuadratureSpec};
use crate::error::Result;
use crate::params::Squeeze;

/// `rho(r1, R1; r2, R2; t)` with `r_i = x_i - y_i`, `R_i = (x_i + y_i) / 2`.
pub fn schrodinger_density(s: Squeeze, r1: f64, big_r1: f64, r2: f64, big_r2: f64, t: f64) -> Complex64 {
    let s = s.value();
    let (e2, e4, e6, e8) = ((2.0 * s).exp(), (4.0 * s).exp(), (6.0 * s).exp(), (8.0 * s).exp());
    let t2 = t * t;
    let (rp, rm) = (r1 + r2, r1 - r2);
    let (cp, cm) = (big_r1 + big_r2, big_r1 - big_r2);

    let real = -e2 * (t2 * (rm * rm + 4.0 * cm * cm) + rp * rp + 4.0 * cp * cp)
        - e6 * (t2 * (rp * rp + 4.0 * cp * cp) + rm * rm + 4.0 * cm * cm);
    let imag = 8.0 * e4 * t2 * t * (r1 * big_r1 + r2 * big_r2) + 4.0 * e8 * t * rm * cm + 4.0 * t * rp * cp;
    let beta = 8.0 * (e4 + t2) * (e4 * t2 + 1.0);
    let prefactor = 1.0 / (PI * (1.0 + 2.0 * (4.0 * s).cosh() * t2 + t2 * t2).sqrt());
    Complex64::new(real / beta, imag / beta).exp() * prefactor
}

/// Single-particle position variance, used to size integration windows.
fn marginal_width(s: Squeeze, t: f64) -> f64 {
    ((1.0 + t * t) * (2.0 * s.value()).cosh() / 2.0).sqrt()
}

/// `rho_A(r, R) = integral dR2 rho(r, R; 0, R2)`.
pub fn partial_trace(s: Squeeze, r: f64, big_r: f64, t: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    let half = spec.half_width_sd * marginal_width(s, t) + big_r.abs();
    let re = integrate_1d(&|x| schrodinger_density(s, r, big_r, 0.0, x, t).re, -half, half, spec)?;
    let im = integrate_1d(&|x| schrodinger_density(s, r, big_r, 0.0, x, t).im, -half, half, spec)?;
    Ok(Complex64::new(re, im))
}

/// `integral dR1 integral dR2 rho(0, R1; 0, R2)`.
pub fn total_trace(s: Squeeze, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    let half = spec.half_width_sd * marginal_width(s, t);
    let inner = QuadratureSpec {
        rel_tol: 0.1 * spec.rel_tol,
        ..*spec
    };
    let outer = |y: f64| {
        integrate_1d(&|x| schrodinger_density(s, 0.0, y, 0.0, x, t).re, -half - y.abs(), half + y.abs(), &inner)
            .unwrap_or(f64::NAN)
    };
    integrate_1d(&outer, -half, half, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::covariance;
    use crate::params::Regime;
    use crate::reduced::ReducedGaussian;

    fn sq(s: f64) -> Squeeze {
        Squeeze::new(s).unwrap()
    }

    #[test]
    fn initial_diagonal_is_the_squeezed_wavefunction() {
        let s = 0.45_f64;
        for &(x1, x2) in &[(0.0, 0.0), (0.3, -0.8), (1.1, 0.7)] {
            let psi = (-(-2.0 * s).exp() * (x1 + x2) * (x1 + x2) / 4.0
                - (2.0 * s).exp() * (x1 - x2) * (x1 - x2) / 4.0)
                .exp()
                / PI.sqrt();
            let rho = schrodinger_density(sq(s), 0.0, x1, 0.0, x2, 0.0);
            assert!((rho.re - psi * psi).abs() < 1e-15);
            assert_eq!(rho.im, 0.0);
        }
    }

    #[test]
    fn hermitian() {
        let a = schrodinger_density(sq(0.7), 0.4, -0.2, -1.1, 0.6, 1.7);
        let b = schrodinger_density(sq(0.7), -0.4, -0.2, 1.1, 0.6, 1.7);
        assert!((a - b.conj()).norm() < 1e-15);
    }

    #[test]
    fn unsqueezed_state_factorizes() {
        let t = 2.3;
        let single = ReducedGaussian::from_moments((1.0 + t * t) / 2.0, t / 2.0, 0.5).unwrap();
        let rho = schrodinger_density(sq(0.0), 0.5, 0.3, -0.9, 1.2, t);
        let prod = single.evaluate(0.5, 0.3) * single.evaluate(-0.9, 1.2);
        assert!((rho - prod).norm() < 1e-14);
    }

    #[test]
    fn trace_is_one() {
        let spec = QuadratureSpec::default();
        for &(s, t) in &[(0.0, 0.0), (0.8, 1.5), (1.2, 4.0)] {
            assert!((total_trace(sq(s), t, &spec).unwrap() - 1.0).abs() < 1e-8, "s={s} t={t}");
        }
    }

    #[test]
    fn partial_trace_matches_reduced_state() {
        let spec = QuadratureSpec::default();
        for &(s, t) in &[(0.5, 0.0), (0.9, 2.0)] {
            let c = covariance(Regime::Schrodinger, sq(s), t).unwrap();
            let reduced = ReducedGaussian::from_moments(c.xx11, c.xp11, c.pp11).unwrap();
            for &(r, big_r) in &[(0.0, 0.0), (0.7, -0.4), (-1.3, 1.1)] {
                let got = partial_trace(sq(s), r, big_r, t, &spec).unwrap();
                let want = reduced.evaluate(r, big_r);
                assert!((got - want).norm() < 1e-9, "s={s} t={t} r={r} R={big_r}: {got} vs {want}");
            }
        }
    }
}

//! Closed forms against the numerical oracles at parameters outside the
//! acceptance grid.

use dcl::gaussian::covariance;
use dcl::oracle::{
    integrate, integrate_moments, max_deviation, partial_trace, quad_l1_coherence, quad_purity, quad_trace,
    Generator, MomentVector, QuadratureSpec,
};
use dcl::reduced::{l1_coherence, purity_entropy, reduced_gaussian};
use dcl::{BathParams, Regime, Squeeze};

fn cases() -> Vec<(Regime, Squeeze)> {
    let a = BathParams::new(0.35, 3.0).unwrap();
    let b = BathParams::new(0.05, 25.0).unwrap();
    vec![
        (Regime::Schrodinger, Squeeze::new(0.6).unwrap()),
        (Regime::Distinct(a), Squeeze::new(-0.4).unwrap()),
        (Regime::Common(a), Squeeze::new(-0.4).unwrap()),
        (Regime::Distinct(b), Squeeze::new(0.9).unwrap()),
        (Regime::Common(b), Squeeze::new(0.9).unwrap()),
    ]
}

#[test]
fn rk4_tracks_closed_form() {
    for (regime, s) in cases() {
        let traj = integrate_moments(regime, s, 6.0, 6000).unwrap();
        let dev = max_deviation(regime, s, &traj).unwrap();
        assert!(dev < 1e-8, "{regime:?}: {dev:e}");
    }
}

#[test]
fn rk4_error_falls_fourth_order() {
    let b = BathParams::new(0.35, 3.0).unwrap();
    let regime = Regime::Common(b);
    let s = Squeeze::new(0.5).unwrap();
    let gen = Generator::for_regime(regime);
    let start = MomentVector::from_covariance(&covariance(regime, s, 0.0).unwrap());
    let exact = MomentVector::from_covariance(&covariance(regime, s, 2.0).unwrap());
    let err = |n| integrate(&gen, start, 2.0, n).unwrap().last().1.max_abs_diff(&exact);
    let ratio = err(40) / err(80);
    assert!((12.0..20.0).contains(&ratio), "{ratio}");
}

#[test]
fn quadrature_tracks_closed_form() {
    let spec = QuadratureSpec::default();
    for (regime, s) in cases() {
        for t in [0.0, 0.3, 2.0, 7.5] {
            let state = reduced_gaussian(regime, s, t).unwrap();
            let c = l1_coherence(regime, s, t).unwrap().c_l1;
            let p = purity_entropy(regime, s, t).unwrap().purity;
            let qc = quad_l1_coherence(&state, &spec).unwrap();
            let qp = quad_purity(&state, &spec).unwrap();
            assert!((c - qc).abs() <= 1e-6 * qc, "{regime:?} t={t}");
            assert!((p - qp).abs() <= 1e-6 * qp, "{regime:?} t={t}");
            assert!((quad_trace(&state, &spec).unwrap() - 1.0).abs() <= 1e-6);
        }
    }
}

#[test]
fn wavefunction_partial_trace_matches_reduced_state() {
    let spec = QuadratureSpec::default();
    let s = Squeeze::new(0.6).unwrap();
    for t in [0.0, 0.8, 2.5] {
        let reduced = reduced_gaussian(Regime::Schrodinger, s, t).unwrap();
        for (r, big_r) in [(0.0, 0.0), (0.7, -0.3), (-1.2, 0.9)] {
            let a = partial_trace(s, r, big_r, t, &spec).unwrap();
            let b = reduced.evaluate(r, big_r);
            assert!((a - b).norm() <= 1e-7 * b.norm().max(1e-3), "t={t} r={r} R={big_r}");
        }
    }
}

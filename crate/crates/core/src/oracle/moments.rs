//! Second-moment dynamics from the drift-diffusion form of the phase-space
//! equation, integrated with fixed-step RK4.
//!
//! With `v = (x1, p1, x2, p2)` the moments obey the Lyapunov equation
//! `d sigma / dt = A sigma + sigma A^T + Q`. Each momentum is damped at `2 gamma`;
//! a shared bath adds the same damping across particles and correlated
//! diffusion in `<p1 p2>`.

use crate::error::{Error, Result};
use crate::gaussian::{covariance, CovarianceMatrix4};
use crate::params::{Regime, Squeeze};

type Mat4 = [[f64; 4]; 4];

/// Largest moment magnitude accepted before integration is declared divergent.
pub const DIVERGENCE_BOUND: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Generator {
    pub drift: Mat4,
    pub diffusion: Mat4,
}

impl Generator {
    pub fn for_regime(regime: Regime) -> Self {
        let (gamma, d, shared) = match regime {
            Regime::Schrodinger => (0.0, 0.0, 0.0),
            Regime::Distinct(b) => (b.gamma(), b.diffusion(), 0.0),
            Regime::Common(b) => (b.gamma(), b.diffusion(), 1.0),
        };
        let k = 2.0 * gamma;
        Self {
            drift: [
                [0.0, 1.0, 0.0, 0.0],
                [0.0, -k, 0.0, -shared * k],
                [0.0, 0.0, 0.0, 1.0],
                [0.0, -shared * k, 0.0, -k],
            ],
            diffusion: [
                [0.0, 0.0, 0.0, 0.0],
                [0.0, 2.0 * d, 0.0, shared * 2.0 * d],
                [0.0, 0.0, 0.0, 0.0],
                [0.0, shared * 2.0 * d, 0.0, 2.0 * d],
            ],
        }
    }

    /// Drops every term that couples the two particles.
    pub fn without_cross_terms(mut self) -> Self {
        for (i, j) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
            self.drift[i][j] = 0.0;
            self.drift[j][i] = 0.0;
            self.diffusion[i][j] = 0.0;
            self.diffusion[j][i] = 0.0;
        }
        self
    }

    /// Fastest decay rate, which bounds the stable RK4 step.
    fn stiffness(&self) -> f64 {
        let mut m = 0.0_f64;
        for row in &self.drift {
            let sum: f64 = row.iter().map(|v| v.abs()).sum();
            m = m.max(sum);
        }
        2.0 * m
    }

    pub fn rhs(&self, m: &MomentVector) -> MomentVector {
        let s = m.to_covariance().matrix();
        let a = &self.drift;
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = self.diffusion[i][j];
                for k in 0..4 {
                    acc += a[i][k] * s[k][j] + s[i][k] * a[j][k];
                }
                out[i][j] = acc;
            }
        }
        MomentVector::from_covariance(&CovarianceMatrix4::from_matrix(&out))
    }
}

/// The ten independent second moments in [`CovarianceMatrix4`] field order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentVector(pub [f64; 10]);

impl MomentVector {
    pub fn from_covariance(c: &CovarianceMatrix4) -> Self {
        Self([
            c.xx11, c.xp11, c.pp11, c.xx12, c.xp12, c.px12, c.pp12, c.xx22, c.xp22, c.pp22,
        ])
    }

    pub fn to_covariance(&self) -> CovarianceMatrix4 {
        let v = &self.0;
        CovarianceMatrix4 {
            xx11: v[0],
            xp11: v[1],
            pp11: v[2],
            xx12: v[3],
            xp12: v[4],
            px12: v[5],
            pp12: v[6],
            xx22: v[7],
            xp22: v[8],
            pp22: v[9],
        }
    }

    fn axpy(&self, h: f64, k: &MomentVector) -> MomentVector {
        let mut out = self.0;
        for (o, d) in out.iter_mut().zip(k.0.iter()) {
            *o += h * d;
        }
        MomentVector(out)
    }

    pub fn max_abs_diff(&self, other: &MomentVector) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub moments: Vec<MomentVector>,
}

impl Trajectory {
    pub fn last(&self) -> (f64, MomentVector) {
        let i = self.times.len() - 1;
        (self.times[i], self.moments[i])
    }
}

/// Integrates from the squeezed initial state to `t_end` in `steps` RK4 steps.
pub fn integrate_moments(regime: Regime, s: Squeeze, t_end: f64, steps: usize) -> Result<Trajectory> {
    let initial = MomentVector::from_covariance(&covariance(regime, s, 0.0)?);
    integrate(&Generator::for_regime(regime), initial, t_end, steps)
}

pub fn integrate(generator: &Generator, initial: MomentVector, t_end: f64, steps: usize) -> Result<Trajectory> {
    if steps == 0 {
        return Err(Error::StepSize("at least one step is required".into()));
    }
    if !(t_end.is_finite() && t_end > 0.0) {
        return Err(Error::StepSize(format!("end time must be finite and > 0, got {t_end}")));
    }
    let h = t_end / steps as f64;
    if generator.stiffness() * h > 1.0 {
        return Err(Error::StepSize(format!(
            "step {h} exceeds the stability limit {}",
            1.0 / generator.stiffness()
        )));
    }
    let mut times = Vec::with_capacity(steps + 1);
    let mut moments = Vec::with_capacity(steps + 1);
    times.push(0.0);
    moments.push(initial);
    let mut y = initial;
    for n in 1..=steps {
        let k1 = generator.rhs(&y);
        let k2 = generator.rhs(&y.axpy(0.5 * h, &k1));
        let k3 = generator.rhs(&y.axpy(0.5 * h, &k2));
        let k4 = generator.rhs(&y.axpy(h, &k3));
        for i in 0..10 {
            y.0[i] += h / 6.0 * (k1.0[i] + 2.0 * k2.0[i] + 2.0 * k3.0[i] + k4.0[i]);
        }
        let t = n as f64 * h;
        if y.0.iter().any(|v| !v.is_finite() || v.abs() > DIVERGENCE_BOUND) {
            return Err(Error::Divergence { t });
        }
        times.push(t);
        moments.push(y);
    }
    Ok(Trajectory { times, moments })
}

/// Largest entrywise deviation of a trajectory from the closed forms.
pub fn max_deviation(regime: Regime, s: Squeeze, trajectory: &Trajectory) -> Result<f64> {
    let mut worst = 0.0_f64;
    for (t, m) in trajectory.times.iter().zip(&trajectory.moments) {
        let exact = MomentVector::from_covariance(&covariance(regime, s, *t)?);
        worst = worst.max(m.max_abs_diff(&exact));
    }
    Ok(worst)
}

//! Parameter presets `fig1` to `fig8`.
//!
//! Time ranges are chosen so each figure shows its feature: coherence and
//! entropy curves run to `t = 60` (near-stationary for `gamma = 0.1`), the
//! MGVT product to `t = 5`, separate-bath negativity to `t = 1` (past every
//! sudden death) and shared-bath negativity to `t = 20` (past every dark
//! period). The sudden-death figure uses temperatures `5, 6, ..., 30`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::events::find_death_time;
use crate::params::{BathParams, RegimeKind, Squeeze};
use crate::sweep::{run_sweep, Quantity, SweepSpec, SweepTable, Tuple, DEFAULT_STEPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
}

impl Figure {
    pub const ALL: [Figure; 8] = [
        Figure::Fig1,
        Figure::Fig2,
        Figure::Fig3,
        Figure::Fig4,
        Figure::Fig5,
        Figure::Fig6,
        Figure::Fig7,
        Figure::Fig8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig2 => "fig2",
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig5 => "fig5",
            Figure::Fig6 => "fig6",
            Figure::Fig7 => "fig7",
            Figure::Fig8 => "fig8",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Figure::ALL
            .into_iter()
            .find(|f| f.as_str() == key)
            .ok_or_else(|| Error::InvalidParams {
                name: "figure",
                reason: format!("expected fig1..fig8, got `{s}`"),
            })
    }
}

/// `ln(20) / 2`
pub fn s_ln20() -> f64 {
    20f64.ln() / 2.0
}

/// `ln(10) / 2`
pub fn s_ln10() -> f64 {
    10f64.ln() / 2.0
}

/// `ln(5) / 2`
pub fn s_ln5() -> f64 {
    5f64.ln() / 2.0
}

/// Temperatures of the sudden-death figure.
pub fn death_time_temperatures() -> Vec<f64> {
    (5..=30).map(f64::from).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum Preset {
    Sweep(SweepSpec),
    /// Death time against temperature, one column per squeezing value.
    DeathTimes {
        squeezes: Vec<f64>,
        gamma: f64,
        temperatures: Vec<f64>,
        t_max: f64,
    },
}

fn tuple(regime: RegimeKind, s: f64, gamma: f64, temperature: f64) -> Tuple {
    Tuple {
        regime,
        s,
        gamma,
        temperature,
    }
}

/// Left panel at fixed squeezing over temperatures, right panel at fixed
/// temperature over squeezings.
fn two_panels(regime: RegimeKind, gamma: f64, left: (f64, &[f64]), right: (f64, &[f64])) -> Vec<Tuple> {
    let mut v: Vec<Tuple> = left.1.iter().map(|&t| tuple(regime, left.0, gamma, t)).collect();
    v.extend(right.1.iter().map(|&s| tuple(regime, s, gamma, right.0)));
    v
}

fn sweep(quantity: Quantity, tuples: Vec<Tuple>, t_max: f64) -> Preset {
    Preset::Sweep(SweepSpec {
        quantities: vec![quantity],
        tuples,
        t_max,
        steps: DEFAULT_STEPS,
    })
}

pub fn preset(figure: Figure) -> Preset {
    use RegimeKind::{Common, Distinct, Schrodinger};
    let product = |q, regimes: &[RegimeKind], s: &[f64], g: f64, temps: &[f64], t_max| {
        Preset::Sweep(SweepSpec::product(&[q], regimes, s, &[g], temps, t_max, DEFAULT_STEPS))
    };
    match figure {
        Figure::Fig1 => product(Quantity::Coherence, &[Common], &[0.0, s_ln10()], 0.1, &[5.0, 10.0, 15.0], 60.0),
        Figure::Fig2 => product(Quantity::Coherence, &[Distinct, Common], &[0.0, s_ln10()], 0.1, &[10.0], 60.0),
        Figure::Fig3 => sweep(
            Quantity::Entropy,
            two_panels(
                Common,
                0.1,
                (0.0, &[5.0, 10.0, 15.0]),
                (8.0, &[0.0, -(0.5f64.ln()) / 2.0, -(0.3f64.ln()) / 2.0]),
            ),
            60.0,
        ),
        Figure::Fig4 => product(
            Quantity::Entropy,
            &[Distinct, Common],
            &[0.0, -(0.01f64.ln()) / 2.0],
            0.1,
            &[10.0],
            60.0,
        ),
        Figure::Fig5 => product(Quantity::Eta, &[Schrodinger, Common], &[0.0, 0.1, 0.4, 1.0], 0.2, &[15.0], 5.0),
        Figure::Fig6 => sweep(
            Quantity::Negativity,
            two_panels(
                Distinct,
                0.2,
                (s_ln20(), &[10.0, 15.0, 20.0, 25.0]),
                (10.0, &[s_ln20(), s_ln10(), s_ln5()]),
            ),
            1.0,
        ),
        Figure::Fig7 => Preset::DeathTimes {
            squeezes: vec![s_ln20(), -(0.9f64.ln()) / 2.0],
            gamma: 0.2,
            temperatures: death_time_temperatures(),
            t_max: 10.0,
        },
        Figure::Fig8 => sweep(
            Quantity::Negativity,
            two_panels(
                Common,
                0.2,
                (s_ln20(), &[10.0, 15.0, 20.0, 25.0]),
                (10.0, &[s_ln20(), s_ln10(), s_ln5()]),
            ),
            20.0,
        ),
    }
}

/// Computes the figure's table.
pub fn generate(figure: Figure) -> Result<SweepTable> {
    match preset(figure) {
        Preset::Sweep(spec) => run_sweep(&spec),
        Preset::DeathTimes {
            squeezes,
            gamma,
            temperatures,
            t_max,
        } => {
            let columns = squeezes
                .par_iter()
                .map(|&s| {
                    let sq = Squeeze::new(s)?;
                    let times = temperatures
                        .iter()
                        .map(|&temp| {
                            let report = find_death_time(sq, BathParams::new(gamma, temp)?, t_max)?;
                            Ok(report.death_time.unwrap_or(f64::NAN))
                        })
                        .collect::<Result<Vec<f64>>>()?;
                    Ok((format!("death_time:distinct:s={s}:gamma={gamma}"), times))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SweepTable {
                axis: "T".into(),
                abscissa: temperatures,
                columns,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuples(figure: Figure) -> Vec<(RegimeKind, f64, f64, f64)> {
        match preset(figure) {
            Preset::Sweep(spec) => spec
                .tuples
                .iter()
                .map(|t| (t.regime, t.s, t.gamma, t.temperature))
                .collect(),
            Preset::DeathTimes { .. } => panic!("not a sweep"),
        }
    }

    #[test]
    fn presets_match_parameter_table() {
        use RegimeKind::*;
        let ln = f64::ln;
        let s1 = ln(10.0) / 2.0;
        assert_eq!(
            tuples(Figure::Fig1),
            vec![
                (Common, 0.0, 0.1, 5.0),
                (Common, 0.0, 0.1, 10.0),
                (Common, 0.0, 0.1, 15.0),
                (Common, s1, 0.1, 5.0),
                (Common, s1, 0.1, 10.0),
                (Common, s1, 0.1, 15.0),
            ]
        );
        assert_eq!(
            tuples(Figure::Fig2),
            vec![
                (Distinct, 0.0, 0.1, 10.0),
                (Distinct, s1, 0.1, 10.0),
                (Common, 0.0, 0.1, 10.0),
                (Common, s1, 0.1, 10.0),
            ]
        );
        assert_eq!(
            tuples(Figure::Fig3),
            vec![
                (Common, 0.0, 0.1, 5.0),
                (Common, 0.0, 0.1, 10.0),
                (Common, 0.0, 0.1, 15.0),
                (Common, 0.0, 0.1, 8.0),
                (Common, -ln(0.5) / 2.0, 0.1, 8.0),
                (Common, -ln(0.3) / 2.0, 0.1, 8.0),
            ]
        );
        let s23 = -ln(0.01) / 2.0;
        assert_eq!(
            tuples(Figure::Fig4),
            vec![
                (Distinct, 0.0, 0.1, 10.0),
                (Distinct, s23, 0.1, 10.0),
                (Common, 0.0, 0.1, 10.0),
                (Common, s23, 0.1, 10.0),
            ]
        );
        let fig5 = tuples(Figure::Fig5);
        assert_eq!(fig5.len(), 8);
        for s in [0.0, 0.1, 0.4, 1.0] {
            assert!(fig5.contains(&(Schrodinger, s, 0.0, 0.0)));
            assert!(fig5.contains(&(Common, s, 0.2, 15.0)));
        }
        for (fig, regime) in [(Figure::Fig6, Distinct), (Figure::Fig8, Common)] {
            let got = tuples(fig);
            let (a, b, c) = (ln(20.0) / 2.0, ln(10.0) / 2.0, ln(5.0) / 2.0);
            for want in [
                (regime, a, 0.2, 10.0),
                (regime, a, 0.2, 15.0),
                (regime, a, 0.2, 20.0),
                (regime, a, 0.2, 25.0),
                (regime, b, 0.2, 10.0),
                (regime, c, 0.2, 10.0),
            ] {
                assert!(got.contains(&want), "{fig}: {want:?}");
            }
        }
        match preset(Figure::Fig7) {
            Preset::DeathTimes { squeezes, gamma, .. } => {
                assert_eq!(squeezes, vec![ln(20.0) / 2.0, -ln(0.9) / 2.0]);
                assert_eq!(gamma, 0.2);
            }
            Preset::Sweep(_) => panic!("fig7 is a death-time table"),
        }
    }

    #[test]
    fn parses_names() {
        assert_eq!("FIG3".parse::<Figure>().unwrap(), Figure::Fig3);
        assert!("fig9".parse::<Figure>().is_err());
    }
}

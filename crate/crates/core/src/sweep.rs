//! Parameter sweeps evaluated on a uniform time grid and written as CSV.

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::epr::epr_measures;
use crate::error::{Error, Result};
use crate::gaussian::log_negativity;
use crate::params::{BathParams, Regime, RegimeKind, Squeeze};
use crate::reduced::{l1_coherence, purity_entropy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    Coherence,
    Entropy,
    Xi,
    Eta,
    Negativity,
}

impl Quantity {
    pub const ALL: [Quantity; 5] = [
        Quantity::Coherence,
        Quantity::Entropy,
        Quantity::Xi,
        Quantity::Eta,
        Quantity::Negativity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Coherence => "coherence",
            Quantity::Entropy => "entropy",
            Quantity::Xi => "xi",
            Quantity::Eta => "eta",
            Quantity::Negativity => "negativity",
        }
    }

    pub fn evaluate(self, regime: Regime, s: Squeeze, t: f64) -> Result<f64> {
        match self {
            Quantity::Coherence => Ok(l1_coherence(regime, s, t)?.c_l1),
            Quantity::Entropy => Ok(purity_entropy(regime, s, t)?.linear_entropy),
            Quantity::Xi => Ok(epr_measures(regime, s, t)?.xi),
            Quantity::Eta => Ok(epr_measures(regime, s, t)?.eta),
            Quantity::Negativity => log_negativity(regime, s, t),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Quantity::ALL
            .into_iter()
            .find(|q| q.as_str() == key)
            .ok_or_else(|| Error::InvalidParams {
                name: "quantity",
                reason: format!("unknown quantity `{s}`"),
            })
    }
}

/// One parameter tuple. Bath fields are ignored for isolated particles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tuple {
    pub regime: RegimeKind,
    pub s: f64,
    pub gamma: f64,
    pub temperature: f64,
}

impl Tuple {
    pub fn regime(&self) -> Result<Regime> {
        Ok(match self.regime {
            RegimeKind::Schrodinger => Regime::Schrodinger,
            kind => kind.with_bath(BathParams::new(self.gamma, self.temperature)?),
        })
    }

    pub fn squeeze(&self) -> Result<Squeeze> {
        Squeeze::new(self.s)
    }

    /// `regime:s=..[:gamma=..:T=..]`
    pub fn label(&self) -> String {
        match self.regime {
            RegimeKind::Schrodinger => format!("{}:s={}", self.regime, self.s),
            kind => format!("{kind}:s={}:gamma={}:T={}", self.s, self.gamma, self.temperature),
        }
    }

    fn sort_key(&self, other: &Tuple) -> std::cmp::Ordering {
        self.regime
            .cmp(&other.regime)
            .then(self.s.total_cmp(&other.s))
            .then(self.gamma.total_cmp(&other.gamma))
            .then(self.temperature.total_cmp(&other.temperature))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub quantities: Vec<Quantity>,
    pub tuples: Vec<Tuple>,
    pub t_max: f64,
    /// Number of grid points, both ends included.
    pub steps: usize,
}

/// Default number of grid points.
pub const DEFAULT_STEPS: usize = 2000;

impl SweepSpec {
    /// Cartesian product of the parameter lists. Isolated-particle tuples
    /// appear once per squeezing value.
    pub fn product(
        quantities: &[Quantity],
        regimes: &[RegimeKind],
        squeezes: &[f64],
        gammas: &[f64],
        temperatures: &[f64],
        t_max: f64,
        steps: usize,
    ) -> Self {
        let mut tuples = Vec::new();
        for &regime in regimes {
            for &s in squeezes {
                if regime == RegimeKind::Schrodinger {
                    tuples.push(Tuple {
                        regime,
                        s,
                        gamma: 0.0,
                        temperature: 0.0,
                    });
                    continue;
                }
                for &gamma in gammas {
                    for &temperature in temperatures {
                        tuples.push(Tuple {
                            regime,
                            s,
                            gamma,
                            temperature,
                        });
                    }
                }
            }
        }
        Self {
            quantities: quantities.to_vec(),
            tuples,
            t_max,
            steps,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.quantities.is_empty() {
            return Err(invalid("quantity", "at least one quantity is required".into()));
        }
        if self.tuples.is_empty() {
            return Err(invalid("tuples", "parameter lists must be non-empty".into()));
        }
        if self.steps < 2 {
            return Err(invalid("steps", format!("must be >= 2, got {}", self.steps)));
        }
        if !(self.t_max.is_finite() && self.t_max > 0.0) {
            return Err(invalid("t_max", format!("must be finite and > 0, got {}", self.t_max)));
        }
        for tuple in &self.tuples {
            tuple.squeeze()?;
            tuple.regime()?.check_time(self.t_max).map_err(|e| match e {
                Error::OverflowDomain { t_max, .. } => invalid(
                    "t_max",
                    format!(
                        "{} exceeds the stability bound {t_max} for {}",
                        self.t_max,
                        tuple.label()
                    ),
                ),
                other => other,
            })?;
        }
        Ok(())
    }

    pub fn times(&self) -> Vec<f64> {
        let n = self.steps - 1;
        (0..=n).map(|i| self.t_max * i as f64 / n as f64).collect()
    }
}

fn invalid(name: &'static str, reason: String) -> Error {
    Error::InvalidParams { name, reason }
}

/// Column-major table: one abscissa column followed by data columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub axis: String,
    pub abscissa: Vec<f64>,
    pub columns: Vec<(String, Vec<f64>)>,
}

impl SweepTable {
    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }

    pub fn header(&self) -> Vec<&str> {
        std::iter::once(self.axis.as_str())
            .chain(self.columns.iter().map(|(n, _)| n.as_str()))
            .collect()
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(self.header())?;
        for (i, x) in self.abscissa.iter().enumerate() {
            let mut row = Vec::with_capacity(self.columns.len() + 1);
            row.push(format_value(*x));
            row.extend(self.columns.iter().map(|(_, v)| format_value(v[i])));
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_to_path(&self, path: &Path) -> Result<()> {
        let file = BufWriter::new(File::create(path)?);
        self.write_csv(file)
    }
}

/// 17 significant digits.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let times = spec.times();
    let mut tuples = spec.tuples.clone();
    tuples.sort_by(|a, b| a.sort_key(b));
    tuples.dedup();
    let mut quantities = spec.quantities.clone();
    quantities.sort();
    quantities.dedup();

    let jobs: Vec<(Quantity, Tuple)> = quantities
        .iter()
        .flat_map(|&q| tuples.iter().map(move |&tu| (q, tu)))
        .collect();
    let columns = jobs
        .par_iter()
        .map(|&(q, tuple)| {
            let regime = tuple.regime()?;
            let s = tuple.squeeze()?;
            let values = times
                .iter()
                .map(|&t| q.evaluate(regime, s, t))
                .collect::<Result<Vec<f64>>>()?;
            Ok((format!("{q}:{}", tuple.label()), values))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        axis: "t".into(),
        abscissa: times,
        columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_grid_matches_library_calls() {
        let spec = SweepSpec::product(
            &[Quantity::Eta],
            &[RegimeKind::Common],
            &[0.4],
            &[0.2],
            &[15.0],
            1.5,
            2,
        );
        let table = run_sweep(&spec).unwrap();
        assert_eq!(table.abscissa, vec![0.0, 1.5]);
        let col = table.column("eta:common:s=0.4:gamma=0.2:T=15").unwrap();
        let b = BathParams::new(0.2, 15.0).unwrap();
        let want = epr_measures(Regime::Common(b), Squeeze::new(0.4).unwrap(), 1.5).unwrap().eta;
        assert_eq!(col[1], want);
        let mut buf = Vec::new();
        table.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(!text.contains('\r'));
        assert!(text.starts_with("t,eta:common:s=0.4:gamma=0.2:T=15\n"));
    }

    #[test]
    fn columns_are_sorted() {
        let spec = SweepSpec::product(
            &[Quantity::Xi],
            &[RegimeKind::Common, RegimeKind::Schrodinger],
            &[1.0, 0.0],
            &[0.1],
            &[10.0, 5.0],
            1.0,
            3,
        );
        let table = run_sweep(&spec).unwrap();
        let names: Vec<_> = table.columns.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(
            names,
            [
                "xi:schrodinger:s=0",
                "xi:schrodinger:s=1",
                "xi:common:s=0:gamma=0.1:T=5",
                "xi:common:s=0:gamma=0.1:T=10",
                "xi:common:s=1:gamma=0.1:T=5",
                "xi:common:s=1:gamma=0.1:T=10",
            ]
        );
    }

    #[test]
    fn validation() {
        let ok = SweepSpec::product(&[Quantity::Xi], &[RegimeKind::Distinct], &[0.0], &[0.2], &[1.0], 10.0, 2);
        assert!(ok.validate().is_ok());
        let mut bad = ok.clone();
        bad.steps = 1;
        assert!(bad.validate().is_err());
        let mut bad = ok.clone();
        bad.t_max = 6000.0;
        assert!(bad.validate().is_err());
        let mut bad = ok;
        bad.tuples.clear();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn value_format_has_seventeen_digits() {
        assert_eq!(format_value(0.1), "1.0000000000000001e-1");
    }
}

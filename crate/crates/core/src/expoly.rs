//! Exponential polynomials `sum_j c_j u^p_j exp(rate_j u)` in the damping
//! exponent `u = gamma t`.
//!
//! The closed forms are long combinations of growing exponentials whose
//! low-order Taylor terms cancel exactly. [`ExpPoly::eval`] evaluates them with
//! a common factor `exp(-shift u)` pulled out: near `u = 0` through a Taylor
//! series with compensated coefficient sums, elsewhere directly with every
//! exponent shifted so nothing overflows.

use std::ops::{Add, Mul};

/// One term `coef * u^power * exp(rate * u)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Term {
    pub coef: f64,
    pub power: u32,
    pub rate: f64,
}

#[inline]
pub(crate) const fn term(coef: f64, power: u32, rate: f64) -> Term {
    Term { coef, power, rate }
}

/// Neumaier compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub(crate) struct ExpPoly {
    terms: Vec<Term>,
}

/// Series terms beyond the highest polynomial power.
const SERIES_TERMS: u32 = 25;

impl ExpPoly {
    pub fn new(terms: &[Term]) -> Self {
        Self {
            terms: terms.to_vec(),
        }
    }

    /// Value of `exp(-shift u) * sum_j c_j u^p_j exp(rate_j u)` for `u >= 0`.
    pub fn eval(&self, u: f64, shift: f64) -> f64 {
        let max_rate = self.terms.iter().fold(0.0_f64, |m, t| m.max(t.rate.abs()));
        if max_rate * u <= 1.0 {
            self.eval_series(u) * (-shift * u).exp()
        } else {
            let mut acc = CompensatedSum::default();
            for t in &self.terms {
                acc.add(t.coef * u.powi(t.power as i32) * ((t.rate - shift) * u).exp());
            }
            acc.value()
        }
    }

    fn eval_series(&self, u: f64) -> f64 {
        let max_power = self.terms.iter().map(|t| t.power).max().unwrap_or(0);
        let mut total = CompensatedSum::default();
        let mut u_pow = 1.0;
        for n in 0..=(max_power + SERIES_TERMS) {
            let mut coeff = CompensatedSum::default();
            for t in &self.terms {
                if n >= t.power {
                    let k = n - t.power;
                    coeff.add(t.coef * rate_power_over_factorial(t.rate, k));
                }
            }
            total.add(coeff.value() * u_pow);
            u_pow *= u;
        }
        total.value()
    }
}

#[inline]
fn rate_power_over_factorial(rate: f64, k: u32) -> f64 {
    let mut v = 1.0;
    for i in 1..=k {
        v *= rate / i as f64;
    }
    v
}

impl Add for ExpPoly {
    type Output = ExpPoly;

    fn add(mut self, rhs: ExpPoly) -> ExpPoly {
        self.terms.extend(rhs.terms);
        self
    }
}

impl Mul for &ExpPoly {
    type Output = ExpPoly;

    fn mul(self, rhs: &ExpPoly) -> ExpPoly {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                terms.push(term(a.coef * b.coef, a.power + b.power, a.rate + b.rate));
            }
        }
        ExpPoly { terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn matches_direct_away_from_origin() {
        let p = ExpPoly::new(&[term(2.0, 0, 4.0), term(-3.0, 1, 2.0), term(1.5, 2, 0.0)]);
        for &u in &[0.3_f64, 1.0, 2.5] {
            let direct = 2.0 * (4.0 * u).exp() - 3.0 * u * (2.0 * u).exp() + 1.5 * u * u;
            assert!(close(p.eval(u, 0.0), direct, 1e-13), "u = {u}");
            assert!(close(p.eval(u, 4.0), direct * (-4.0 * u).exp(), 1e-13));
        }
    }

    #[test]
    fn resolves_cubic_cancellation() {
        // e^{4u} - 4 e^{2u} + 3 + 4u = 16/3 u^3 + O(u^4)
        let p = ExpPoly::new(&[
            term(1.0, 0, 4.0),
            term(-4.0, 0, 2.0),
            term(3.0, 0, 0.0),
            term(4.0, 1, 0.0),
        ]);
        let u = 1e-6_f64;
        let expected = 16.0 / 3.0 * u.powi(3) + 8.0 * u.powi(4);
        assert!(close(p.eval(u, 0.0), expected, 1e-9));
        assert_eq!(p.eval(0.0, 0.0), 0.0);
    }

    #[test]
    fn large_arguments_do_not_overflow() {
        let p = ExpPoly::new(&[term(1.0, 0, 8.0), term(-2.0, 0, 4.0), term(1.0, 0, 0.0)]);
        let v = p.eval(500.0, 8.0);
        assert!(v.is_finite());
        assert!(close(v, 1.0, 1e-15));
    }

    #[test]
    fn product_expands() {
        let a = ExpPoly::new(&[term(1.0, 0, 4.0), term(-1.0, 0, 0.0)]);
        let sq = &a * &a;
        for &u in &[1e-4_f64, 0.1, 0.7, 3.0] {
            let direct = ((4.0 * u).exp_m1()).powi(2);
            assert!(close(sq.eval(u, 0.0), direct, 1e-12), "u = {u}");
        }
    }

    #[test]
    fn compensated_sum_cancels_exactly() {
        let mut s = CompensatedSum::default();
        for x in [1e-12, 1.0, -2.0, 1.0] {
            s.add(x);
        }
        assert_eq!(s.value(), 1e-12);
    }
}

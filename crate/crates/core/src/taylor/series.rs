use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::jet::MultiIndex;

/// Independent variable of a bivariate series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    X,
}

/// Analytic functions that can be composed with a series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Analytic {
    Exp,
    Ln,
    /// Real power `a^r`. Non-integer `r` needs a positive constant term.
    Pow(f64),
    Sech,
    Tanh,
}

/// Bivariate Taylor polynomial in `(δt, δx)` truncated at total degree `order`.
///
/// Coefficients are stored densely in graded-lexicographic order, the same
/// layout [`MultiIndex::flat`] uses for jets.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<f64>,
}

impl TruncatedSeries {
    pub fn new(order: usize, coeffs: Vec<f64>) -> Result<Self> {
        let expected = MultiIndex::count_up_to(order);
        if coeffs.len() != expected {
            return Err(Error::usage(format!(
                "order-{order} series needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(TruncatedSeries { order, coeffs })
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![0.0; MultiIndex::count_up_to(order)],
        }
    }

    pub fn constant(order: usize, value: f64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// The series `at + δv` for the variable `v`.
    pub fn variable(order: usize, var: Var, at: f64) -> Self {
        let mut s = Self::constant(order, at);
        if order >= 1 {
            let slot = match var {
                Var::T => MultiIndex::new(1, 0),
                Var::X => MultiIndex::new(0, 1),
            };
            s.coeffs[slot.flat()] = 1.0;
        }
        s
    }

    /// Builds a series from a coefficient function `c(i, j)`.
    pub fn from_fn(order: usize, mut f: impl FnMut(MultiIndex) -> f64) -> Self {
        TruncatedSeries {
            order,
            coeffs: MultiIndex::up_to(order).map(&mut f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> f64 {
        self.coeffs[0]
    }

    /// Coefficient of `δt^i δx^j`; zero above the truncation order.
    pub fn coeff(&self, alpha: MultiIndex) -> f64 {
        if alpha.order() <= self.order {
            self.coeffs[alpha.flat()]
        } else {
            0.0
        }
    }

    /// The partial derivative `∂^α` at the expansion point, `i! j! c_ij`.
    pub fn partial(&self, alpha: MultiIndex) -> f64 {
        factorial(alpha.t) * factorial(alpha.x) * self.coeff(alpha)
    }

    pub fn truncated(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(Error::usage(format!(
                "cannot extend a series from order {} to {order}",
                self.order
            )));
        }
        Ok(TruncatedSeries {
            order,
            coeffs: self.coeffs[..MultiIndex::count_up_to(order)].to_vec(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "series order mismatch: {} vs {}",
                self.order, other.order
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let m = self.order;
        let mut out = vec![0.0; self.coeffs.len()];
        for d1 in 0..=m {
            for i1 in 0..=d1 {
                let a = self.coeffs[MultiIndex::new(i1, d1 - i1).flat()];
                if a == 0.0 {
                    continue;
                }
                for d2 in 0..=(m - d1) {
                    let d = d1 + d2;
                    let base = d * (d + 1) / 2 + i1;
                    let row = d2 * (d2 + 1) / 2;
                    for i2 in 0..=d2 {
                        out[base + i2] += a * other.coeffs[row + i2];
                    }
                }
            }
        }
        Ok(TruncatedSeries {
            order: m,
            coeffs: out,
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, k: f64) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn add_scalar(&self, k: f64) -> Self {
        let mut s = self.clone();
        s.coeffs[0] += k;
        s
    }

    /// Exact partial derivative; the result has order `order - 1`.
    pub fn derivative(&self, var: Var) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::usage(
                "an order-0 series carries no derivative information",
            ));
        }
        let m = self.order - 1;
        Ok(Self::from_fn(m, |a| match var {
            Var::T => (a.t + 1) as f64 * self.coeffs[a.bump_t().flat()],
            Var::X => (a.x + 1) as f64 * self.coeffs[a.bump_x().flat()],
        }))
    }

    /// Composes `f` with this series around its constant term.
    pub fn analytic(&self, f: Analytic) -> Result<Self> {
        let a0 = self.constant_term();
        let c = univariate_coefficients(f, a0, self.order)?;
        let mut h = self.clone();
        h.coeffs[0] = 0.0;
        // Horner in the nilpotent increment h = a - a0.
        let mut acc = Self::constant(self.order, c[self.order]);
        for k in (0..self.order).rev() {
            acc = acc.try_mul(&h)?.add_scalar(c[k]);
        }
        Ok(acc)
    }

    pub fn exp(&self) -> Self {
        self.analytic(Analytic::Exp).expect("exp is entire")
    }

    pub fn ln(&self) -> Result<Self> {
        self.analytic(Analytic::Ln)
    }

    pub fn powf(&self, r: f64) -> Result<Self> {
        self.analytic(Analytic::Pow(r))
    }

    pub fn recip(&self) -> Result<Self> {
        self.analytic(Analytic::Pow(-1.0))
    }
}

/// Taylor coefficients `f^{(k)}(a0) / k!` for `k = 0..=m`.
pub(crate) fn univariate_coefficients(f: Analytic, a0: f64, m: usize) -> Result<Vec<f64>> {
    if !a0.is_finite() {
        return Err(Error::domain(format!("non-finite expansion point {a0}")));
    }
    let out = match f {
        Analytic::Exp => exp_coefficients(a0, 1.0, m),
        Analytic::Ln => {
            if a0 <= 0.0 {
                return Err(Error::domain(format!(
                    "logarithm of non-positive constant term {a0}"
                )));
            }
            let mut c = vec![a0.ln()];
            let mut p = 1.0;
            for k in 1..=m {
                p /= a0;
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                c.push(sign * p / k as f64);
            }
            c
        }
        Analytic::Pow(r) => {
            let integral = r.fract() == 0.0;
            if !integral && a0 <= 0.0 {
                return Err(Error::domain(format!(
                    "non-integer power {r} of non-positive constant term {a0}"
                )));
            }
            if integral && r < 0.0 && a0 == 0.0 {
                return Err(Error::domain(format!("negative power {r} of zero")));
            }
            if a0 == 0.0 {
                // Non-negative integer power of a nilpotent series.
                let n = r as usize;
                (0..=m).map(|k| if k == n { 1.0 } else { 0.0 }).collect()
            } else {
                let lead = if integral {
                    a0.powi(r as i32)
                } else {
                    a0.powf(r)
                };
                let mut c = vec![lead];
                let mut b = lead;
                for k in 1..=m {
                    b *= (r - (k as f64 - 1.0)) / (k as f64 * a0);
                    c.push(b);
                }
                c
            }
        }
        Analytic::Sech => {
            // sech(a) = 2 e^{-|a|} / (1 + e^{-2|a|}), expanded on the decaying side.
            let s = if a0 >= 0.0 { 1.0 } else { -1.0 };
            let num: Vec<f64> = exp_coefficients(-s * a0, -s, m)
                .into_iter()
                .map(|c| 2.0 * c)
                .collect();
            let mut den = exp_coefficients(-2.0 * s * a0, -2.0 * s, m);
            den[0] += 1.0;
            uni_mul(&num, &uni_recip(&den))
        }
        Analytic::Tanh => {
            // tanh(a) = sgn(a) (2 / (1 + e^{-2|a|}) - 1).
            let s = if a0 >= 0.0 { 1.0 } else { -1.0 };
            let mut den = exp_coefficients(-2.0 * s * a0, -2.0 * s, m);
            den[0] += 1.0;
            let mut c: Vec<f64> = uni_recip(&den).into_iter().map(|c| 2.0 * s * c).collect();
            c[0] -= s;
            c
        }
    };
    Ok(out)
}

/// Coefficients of `exp(a0 + rate*h)` in powers of `h`.
fn exp_coefficients(a0: f64, rate: f64, m: usize) -> Vec<f64> {
    let mut c = Vec::with_capacity(m + 1);
    let mut term = a0.exp();
    c.push(term);
    for k in 1..=m {
        term *= rate / k as f64;
        c.push(term);
    }
    c
}

fn uni_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    (0..a.len())
        .map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum())
        .collect()
}

fn uni_recip(a: &[f64]) -> Vec<f64> {
    let mut r = vec![0.0; a.len()];
    r[0] = 1.0 / a[0];
    for k in 1..a.len() {
        let s: f64 = (1..=k).map(|i| a[i] * r[k - i]).sum();
        r[k] = -s / a[0];
    }
    r
}

fn same_order(a: &TruncatedSeries, b: &TruncatedSeries, op: &str) {
    assert_eq!(
        a.order, b.order,
        "series order mismatch in {op}: {} vs {}",
        a.order, b.order
    );
}

// The operator forms panic on order mismatch; use the `try_` methods to get an error instead.

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        same_order(self, rhs, "add");
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        same_order(self, rhs, "sub");
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        same_order(self, rhs, "mul");
        self.try_mul(rhs).expect("orders checked")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-14 * (1.0 + a.abs().max(b.abs()))
    }

    fn assert_series(s: &TruncatedSeries, expected: &[(usize, usize, f64)]) {
        for a in MultiIndex::up_to(s.order()) {
            let want = expected
                .iter()
                .find(|(i, j, _)| *i == a.t && *j == a.x)
                .map_or(0.0, |e| e.2);
            assert!(
                close(s.coeff(a), want),
                "coefficient {a}: {} vs {want}",
                s.coeff(a)
            );
        }
    }

    #[test]
    fn difference_of_squares() {
        let p = TruncatedSeries::variable(2, Var::X, 1.0);
        let m = TruncatedSeries::variable(2, Var::X, 1.0)
            .scale(-1.0)
            .add_scalar(2.0);
        assert_series(&p.try_mul(&m).unwrap(), &[(0, 0, 1.0), (0, 2, -1.0)]);
    }

    #[test]
    fn multiplicative_identity() {
        let a = TruncatedSeries::from_fn(4, |a| (a.flat() as f64).sin());
        let one = TruncatedSeries::constant(4, 1.0);
        assert_eq!(a.try_mul(&one).unwrap(), a);
    }

    #[test]
    fn truncation_kills_degree_two() {
        let s =
            &TruncatedSeries::variable(1, Var::T, 0.0) + &TruncatedSeries::variable(1, Var::X, 0.0);
        assert_series(&s.try_mul(&s).unwrap(), &[]);
    }

    #[test]
    fn order_mismatch_is_usage_error() {
        let a = TruncatedSeries::zero(2);
        let b = TruncatedSeries::zero(3);
        assert!(matches!(a.try_mul(&b), Err(Error::Usage(_))));
        assert!(matches!(a.try_add(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn exponential_series() {
        let s = TruncatedSeries::variable(3, Var::T, 0.0).exp();
        assert_series(
            &s,
            &[(0, 0, 1.0), (1, 0, 1.0), (2, 0, 0.5), (3, 0, 1.0 / 6.0)],
        );
    }

    #[test]
    fn logarithm_series() {
        let s = TruncatedSeries::variable(2, Var::X, 1.0).ln().unwrap();
        assert_series(&s, &[(0, 1, 1.0), (0, 2, -0.5)]);
    }

    #[test]
    fn power_of_constant() {
        for m in 0..5 {
            let s = TruncatedSeries::constant(m, 4.0).powf(0.5).unwrap();
            assert_series(&s, &[(0, 0, 2.0)]);
        }
    }

    #[test]
    fn domain_errors() {
        let s = TruncatedSeries::constant(2, -1.0);
        assert!(matches!(s.ln(), Err(Error::Domain(_))));
        assert!(matches!(s.powf(0.5), Err(Error::Domain(_))));
        assert!(s.powf(-3.0).is_ok());
        assert!(matches!(
            TruncatedSeries::zero(2).recip(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sech_and_tanh_satisfy_their_identities() {
        for &a0 in &[-3.0, -0.4, 0.0, 0.7, 5.0] {
            let a = &TruncatedSeries::variable(6, Var::T, a0)
                + &TruncatedSeries::variable(6, Var::X, 0.0).scale(0.3);
            let sech = a.analytic(Analytic::Sech).unwrap();
            let tanh = a.analytic(Analytic::Tanh).unwrap();
            let one = &(&sech * &sech) + &(&tanh * &tanh);
            assert_series(&one, &[(0, 0, 1.0)]);
            // d/dt tanh = sech^2
            let lhs = tanh.derivative(Var::T).unwrap();
            let rhs = (&sech * &sech).truncated(5).unwrap();
            for (l, r) in lhs.coeffs().iter().zip(rhs.coeffs()) {
                assert!(close(*l, *r));
            }
        }
    }

    #[test]
    fn derivative_lowers_order() {
        let t = TruncatedSeries::variable(3, Var::T, 2.0);
        let x = TruncatedSeries::variable(3, Var::X, -1.0);
        let p = &(&t * &t) * &x;
        let d = p.derivative(Var::T).unwrap();
        assert_eq!(d.order(), 2);
        // ∂_t (t² x) = 2 t x at (2, -1)
        assert!(close(d.constant_term(), -4.0));
        assert!(matches!(
            TruncatedSeries::zero(0).derivative(Var::X),
            Err(Error::Usage(_))
        ));
    }
}

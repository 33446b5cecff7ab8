use std::fmt;
use std::sync::Arc;

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::jet::{Jet, MultiIndex};

use super::{Analytic, TruncatedSeries, Var};

/// Maps the series of `t` and `x` to the series of `u(t, x)`.
pub type SeriesMap =
    dyn Fn(&TruncatedSeries, &TruncatedSeries) -> Result<TruncatedSeries> + Send + Sync;

/// Exact solutions of `u_t + u u_x + u_xxx = 0`.
#[derive(Clone)]
pub enum Solution {
    /// `u = 3c sech²(½√c (x - c t - phase))`.
    Soliton {
        speed: f64,
        phase: f64,
    },
    /// `u = x / t`, defined for `t != 0`.
    Rational,
    Constant {
        value: f64,
    },
    /// Any function expressible by composing series arithmetic.
    Custom {
        name: String,
        map: Arc<SeriesMap>,
    },
}

impl fmt::Debug for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Solution::Soliton { speed, phase } => f
                .debug_struct("Soliton")
                .field("speed", speed)
                .field("phase", phase)
                .finish(),
            Solution::Rational => f.write_str("Rational"),
            Solution::Constant { value } => {
                f.debug_struct("Constant").field("value", value).finish()
            }
            Solution::Custom { name, .. } => f.debug_struct("Custom").field("name", name).finish(),
        }
    }
}

impl Solution {
    pub fn soliton(speed: f64, phase: f64) -> Self {
        Solution::Soliton { speed, phase }
    }

    pub fn custom(
        name: impl Into<String>,
        map: impl Fn(&TruncatedSeries, &TruncatedSeries) -> Result<TruncatedSeries>
            + Send
            + Sync
            + 'static,
    ) -> Self {
        Solution::Custom {
            name: name.into(),
            map: Arc::new(map),
        }
    }

    /// Two-soliton interaction with wave numbers `k1 != k2`:
    /// `u = 12 ∂²_x ln F`, `F = 1 + e^{η₁} + e^{η₂} + A e^{η₁+η₂}`,
    /// `η_i = k_i x - k_i³ t + phase_i`, `A = ((k₁-k₂)/(k₁+k₂))²`.
    ///
    /// The second log-derivative is written out as `(F F_xx - F_x²)/F²` so the
    /// map stays a pure composition.
    pub fn two_soliton(k1: f64, k2: f64, phase1: f64, phase2: f64) -> Self {
        let a = ((k1 - k2) / (k1 + k2)).powi(2);
        Solution::custom(format!("two-soliton({k1},{k2})"), move |t, x| {
            let eta1 = (&x.scale(k1) - &t.scale(k1.powi(3))).add_scalar(phase1);
            let eta2 = (&x.scale(k2) - &t.scale(k2.powi(3))).add_scalar(phase2);
            let e1 = eta1.exp();
            let e2 = eta2.exp();
            let e12 = (&eta1 + &eta2).exp();
            let f = (&(&e1 + &e2) + &e12.scale(a)).add_scalar(1.0);
            let fx = &(&e1.scale(k1) + &e2.scale(k2)) + &e12.scale(a * (k1 + k2));
            let fxx =
                &(&e1.scale(k1 * k1) + &e2.scale(k2 * k2)) + &e12.scale(a * (k1 + k2).powi(2));
            let num = &(&f * &fxx) - &(&fx * &fx);
            Ok((&num * &f.powf(-2.0)?).scale(12.0))
        })
    }

    pub fn name(&self) -> String {
        match self {
            Solution::Soliton { speed, phase } => format!("soliton(c={speed},phase={phase})"),
            Solution::Rational => "rational".into(),
            Solution::Constant { value } => format!("constant({value})"),
            Solution::Custom { name, .. } => name.clone(),
        }
    }

    /// Taylor expansion of the solution at `(t0, x0)` to total degree `order`.
    pub fn series_at(&self, t0: f64, x0: f64, order: usize) -> Result<TruncatedSeries> {
        let t = TruncatedSeries::variable(order, Var::T, t0);
        let x = TruncatedSeries::variable(order, Var::X, x0);
        self.evaluate(&t, &x)
    }

    /// Composes the solution with arbitrary series for `t` and `x`.
    pub fn evaluate(&self, t: &TruncatedSeries, x: &TruncatedSeries) -> Result<TruncatedSeries> {
        match self {
            Solution::Soliton { speed, phase } => {
                if speed.is_nan() || *speed <= 0.0 {
                    return Err(Error::domain(format!(
                        "soliton speed must be positive, got {speed}"
                    )));
                }
                let k = 0.5 * speed.sqrt();
                let arg = (&x.scale(k) - &t.scale(k * speed)).add_scalar(-k * phase);
                let sech = arg.analytic(Analytic::Sech)?;
                Ok((&sech * &sech).scale(3.0 * speed))
            }
            Solution::Rational => {
                if t.constant_term() == 0.0 {
                    return Err(Error::domain("u = x/t is undefined at t = 0"));
                }
                Ok(x * &t.recip()?)
            }
            Solution::Constant { value } => Ok(TruncatedSeries::constant(t.order(), *value)),
            Solution::Custom { map, .. } => {
                let u = map(t, x)?;
                if u.order() != t.order() {
                    return Err(Error::Evaluation(format!(
                        "custom solution returned order {} for order-{} input",
                        u.order(),
                        t.order()
                    )));
                }
                Ok(u)
            }
        }
    }

    /// The order-`order` jet at `(t0, x0)`, expanded with two orders of headroom.
    pub fn jet_at(&self, t0: f64, x0: f64, order: usize) -> Result<Jet> {
        if let Solution::Rational = self {
            return rational_jet(t0, x0, order);
        }
        let s = self.series_at(t0, x0, order + 2)?;
        if s.coeffs().iter().any(|c| !c.is_finite()) {
            return Err(Error::Evaluation(format!(
                "non-finite expansion of {} at ({t0}, {x0})",
                self.name()
            )));
        }
        Jet::from_fn(t0, x0, order, |a| s.partial(a))
    }
}

/// `u = x/t` in closed form: `u_{i0} = (-1)^i i! u r^i`, `u_{i1} = (-1)^i i! r^{i+1}`, `r = 1/t`.
///
/// Writing `u_t = -(u r)` and `u_x = r` makes `u_t + u u_x` vanish bit-for-bit.
fn rational_jet(t0: f64, x0: f64, order: usize) -> Result<Jet> {
    if t0 == 0.0 {
        return Err(Error::domain("u = x/t is undefined at t = 0"));
    }
    let r = 1.0 / t0;
    let u = x0 * r;
    Jet::from_fn(t0, x0, order, |a| {
        let sign = if a.t % 2 == 0 { 1.0 } else { -1.0 };
        let scale = sign * factorial(a.t);
        match a.x {
            0 => scale * (0..a.t).fold(u, |acc, _| acc * r),
            1 => scale * (0..a.t).fold(r, |acc, _| acc * r),
            _ => 0.0,
        }
    })
}

/// Jet of `solution` at `(t0, x0)` of order `order`.
pub fn jet_of_solution(solution: &Solution, t0: f64, x0: f64, order: usize) -> Result<Jet> {
    solution.jet_at(t0, x0, order)
}

/// `u_t + u u_x + u_xxx` read from a jet of order at least 3.
pub fn kdv_residual(jet: &Jet) -> Result<f64> {
    if jet.order() < 3 {
        return Err(Error::usage(format!(
            "KdV residual needs an order-3 jet, got order {}",
            jet.order()
        )));
    }
    Ok(jet.evolution_pivot()? + jet.at(MultiIndex::new(0, 3)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_jet() {
        let j = Solution::Constant { value: 5.0 }
            .jet_at(0.3, -2.0, 2)
            .unwrap();
        assert_eq!(j.u(), 5.0);
        assert!(j.values()[1..].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn rational_jet_by_hand() {
        let j = Solution::Rational.jet_at(1.0, 2.0, 3).unwrap();
        let expect = [
            ((0, 0), 2.0),
            ((1, 0), -2.0),
            ((0, 1), 1.0),
            ((0, 2), 0.0),
            ((2, 0), 4.0),
            ((1, 1), -1.0),
            ((0, 3), 0.0),
            ((1, 2), 0.0),
        ];
        for ((i, k), v) in expect {
            assert_eq!(j.at(MultiIndex::new(i, k)), v, "u_({i},{k})");
        }
        assert_eq!(kdv_residual(&j).unwrap(), 0.0);
    }

    #[test]
    fn rational_series_matches_closed_form() {
        let s = Solution::Rational.series_at(1.5, -0.7, 6).unwrap();
        let j = Solution::Rational.jet_at(1.5, -0.7, 6).unwrap();
        for (a, v) in j.iter() {
            assert!((s.partial(a) - v).abs() <= 1e-12 * (1.0 + v.abs()), "u_{a}");
        }
    }

    #[test]
    fn rational_rejects_t_zero() {
        assert!(matches!(
            Solution::Rational.jet_at(0.0, 1.0, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn soliton_crest() {
        let j = Solution::soliton(1.0, 0.0).jet_at(0.0, 0.0, 3).unwrap();
        let close = |a: f64, b: f64| (a - b).abs() < 1e-13;
        assert!(close(j.u(), 3.0));
        assert!(close(j.at(MultiIndex::new(0, 1)), 0.0));
        assert!(close(j.at(MultiIndex::new(1, 0)), 0.0));
        assert!(close(j.at(MultiIndex::new(0, 2)), -1.5));
    }

    #[test]
    fn soliton_speed_must_be_positive() {
        assert!(matches!(
            Solution::soliton(-1.0, 0.0).jet_at(0.0, 0.0, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn residual_needs_order_three() {
        let j = Jet::zeros(0.0, 0.0, 2).unwrap();
        assert!(matches!(kdv_residual(&j), Err(Error::Usage(_))));
    }

    #[test]
    fn residual_read_off() {
        let mut j = Jet::zeros(0.0, 0.0, 3).unwrap();
        j.set(MultiIndex::new(1, 0), 1.0);
        assert_eq!(kdv_residual(&j).unwrap(), 1.0);
    }
}

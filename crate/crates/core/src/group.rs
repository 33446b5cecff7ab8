//! The four-parameter symmetry group of `u_t + u u_x + u_xxx = 0`.
//!
//! A [`GroupElement`] acts by translation, then Galilean boost, then scaling:
//!
//! ```text
//! T = e^{3s} (t + a)
//! X = e^{s}  (x + b + a v + v t)
//! U = e^{-2s}(u + v)
//! ```
//!
//! with `(a, b, v, s)` = (time shift, space shift, boost, log-scale).

use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, MAX_ORDER};
use crate::error::{Error, Result};
use crate::jet::{Jet, MultiIndex};
use crate::taylor::{TruncatedSeries, Var};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GroupElement {
    pub time_shift: f64,
    pub space_shift: f64,
    pub boost: f64,
    pub log_scale: f64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(time_shift: f64, space_shift: f64, boost: f64, log_scale: f64) -> Self {
        GroupElement {
            time_shift,
            space_shift,
            boost,
            log_scale,
        }
    }

    pub fn params(&self) -> [f64; 4] {
        [
            self.time_shift,
            self.space_shift,
            self.boost,
            self.log_scale,
        ]
    }

    /// Largest absolute difference over the four parameters.
    pub fn distance(&self, other: &GroupElement) -> f64 {
        self.params()
            .iter()
            .zip(other.params())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn act_point(&self, t: f64, x: f64, u: f64) -> (f64, f64, f64) {
        let lambda = self.log_scale.exp();
        let shifted_t = t + self.time_shift;
        (
            lambda.powi(3) * shifted_t,
            lambda * (x + self.space_shift + self.boost * shifted_t),
            (u + self.boost) / (lambda * lambda),
        )
    }

    /// `self ∘ first`: act with `first`, then with `self`.
    pub fn compose(&self, first: &GroupElement) -> GroupElement {
        let lambda1 = first.log_scale.exp();
        let time_shift = first.time_shift + self.time_shift / lambda1.powi(3);
        GroupElement {
            time_shift,
            space_shift: first.space_shift + self.space_shift / lambda1
                - first.boost * self.time_shift / lambda1.powi(3),
            boost: first.boost + lambda1 * lambda1 * self.boost,
            log_scale: first.log_scale + self.log_scale,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let lambda = self.log_scale.exp();
        let time_shift = -self.time_shift * lambda.powi(3);
        GroupElement {
            time_shift,
            space_shift: -lambda * (self.space_shift + self.boost * self.time_shift),
            boost: -self.boost / (lambda * lambda),
            log_scale: -self.log_scale,
        }
    }

    /// Prolonged action on a jet of any order.
    ///
    /// Derivatives transform through `D_T = e^{-3s}(D_t - v D_x)`, `D_X = e^{-s} D_x`:
    /// `U_α = e^{-(3α₁+α₂+2)s} Σ_k (-v)^k C(α₁,k) u_{α₁-k, α₂+k}` for `α != 0`.
    pub fn prolong(&self, jet: &Jet) -> Jet {
        let n = jet.order();
        debug_assert!(n <= MAX_ORDER);
        let (t, x, u) = self.act_point(jet.t, jet.x, jet.u());
        let minus_v = -self.boost;
        let mut out = Jet::zeros(t, x, n).expect("order already validated");
        out.set(MultiIndex::ZERO, u);
        for alpha in MultiIndex::up_to(n).skip(1) {
            let mut sum = 0.0;
            let mut power = 1.0;
            for k in 0..=alpha.t {
                sum += power
                    * binomial(alpha.t, k)
                    * jet.at(MultiIndex::new(alpha.t - k, alpha.x + k));
                power *= minus_v;
            }
            out.set(
                alpha,
                (-(scaling_weight(alpha) as f64) * self.log_scale).exp() * sum,
            );
        }
        out
    }
}

/// `3α₁ + α₂ + 2`, the scaling weight of `u_α`.
pub(crate) fn scaling_weight(alpha: MultiIndex) -> usize {
    3 * alpha.t + alpha.x + 2
}

pub fn act_point(g: &GroupElement, p: (f64, f64, f64)) -> (f64, f64, f64) {
    g.act_point(p.0, p.1, p.2)
}

pub fn compose(second: &GroupElement, first: &GroupElement) -> GroupElement {
    second.compose(first)
}

pub fn inverse(g: &GroupElement) -> GroupElement {
    g.inverse()
}

pub fn prolong_act(g: &GroupElement, jet: &Jet) -> Jet {
    g.prolong(jet)
}

/// Infinitesimal generator `c₁∂_t + c₂∂_x + c₃(t∂_x + ∂_u) + c₄(3t∂_t + x∂_x - 2u∂_u)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct VectorField {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

impl VectorField {
    pub const TIME_TRANSLATION: VectorField = VectorField::new(1.0, 0.0, 0.0, 0.0);
    pub const SPACE_TRANSLATION: VectorField = VectorField::new(0.0, 1.0, 0.0, 0.0);
    pub const GALILEAN_BOOST: VectorField = VectorField::new(0.0, 0.0, 1.0, 0.0);
    pub const SCALING: VectorField = VectorField::new(0.0, 0.0, 0.0, 1.0);

    pub const BASIS: [VectorField; 4] = [
        Self::TIME_TRANSLATION,
        Self::SPACE_TRANSLATION,
        Self::GALILEAN_BOOST,
        Self::SCALING,
    ];

    pub const fn new(c1: f64, c2: f64, c3: f64, c4: f64) -> Self {
        VectorField { c1, c2, c3, c4 }
    }

    pub fn tau(&self, t: f64) -> f64 {
        3.0 * self.c4 * t + self.c1
    }

    pub fn xi(&self, t: f64, x: f64) -> f64 {
        self.c4 * x + self.c3 * t + self.c2
    }

    pub fn eta(&self, u: f64) -> f64 {
        -2.0 * self.c4 * u + self.c3
    }

    /// Coefficient of `∂_{u_α}` in the prolonged field, evaluated on `jet`.
    ///
    /// For `α = 0` this is `η` itself; otherwise
    /// `η^α = -(3α₁+α₂+2) c₄ u_α - α₁ c₃ u_{α₁-1, α₂+1}`.
    pub fn eta_alpha(&self, alpha: MultiIndex, jet: &Jet) -> Result<f64> {
        if alpha == MultiIndex::ZERO {
            return Ok(self.eta(jet.u()));
        }
        let u_alpha = jet.try_get(alpha)?;
        let mut value = -(scaling_weight(alpha) as f64) * self.c4 * u_alpha;
        if alpha.t > 0 {
            let shifted = jet.try_get(MultiIndex::new(alpha.t - 1, alpha.x + 1))?;
            value -= alpha.t as f64 * self.c3 * shifted;
        }
        Ok(value)
    }

    /// Residuals of the eight determining equations
    /// `τ_x, τ_u, ξ_u, η_t, η_x, η - ξ_t + ⅔uτ_t, η_u + ⅔τ_t, ⅔τ_t - 2ξ_x`
    /// at `(t, x, u)`. Partial derivatives are read from first-order series
    /// expansions of the coefficient functions.
    pub fn determining_residuals(&self, t: f64, x: f64, u: f64) -> [f64; 8] {
        // Expand in (t, x) with u fixed, then in u (carried on the δt slot) with t, x fixed.
        let ts = TruncatedSeries::variable(1, Var::T, t);
        let xs = TruncatedSeries::variable(1, Var::X, x);
        let us = TruncatedSeries::constant(1, u);
        let (tau, xi, eta) = self.coefficient_series(&ts, &xs, &us);
        let d_t = MultiIndex::new(1, 0);
        let d_x = MultiIndex::new(0, 1);
        let (tau_t, tau_x) = (tau.coeff(d_t), tau.coeff(d_x));
        let (xi_t, xi_x) = (xi.coeff(d_t), xi.coeff(d_x));
        let (eta_t, eta_x) = (eta.coeff(d_t), eta.coeff(d_x));

        let ts = TruncatedSeries::constant(1, t);
        let xs = TruncatedSeries::constant(1, x);
        let us = TruncatedSeries::variable(1, Var::T, u);
        let (tau_u, xi_u, eta_u) = {
            let (a, b, c) = self.coefficient_series(&ts, &xs, &us);
            (a.coeff(d_t), b.coeff(d_t), c.coeff(d_t))
        };
        [
            tau_x,
            tau_u,
            xi_u,
            eta_t,
            eta_x,
            eta.constant_term() - (xi_t - 2.0 / 3.0 * u * tau_t),
            eta_u + 2.0 / 3.0 * tau_t,
            2.0 / 3.0 * tau_t - 2.0 * xi_x,
        ]
    }

    fn coefficient_series(
        &self,
        t: &TruncatedSeries,
        x: &TruncatedSeries,
        u: &TruncatedSeries,
    ) -> (TruncatedSeries, TruncatedSeries, TruncatedSeries) {
        let tau = t.scale(3.0 * self.c4).add_scalar(self.c1);
        let xi = (&x.scale(self.c4) + &t.scale(self.c3)).add_scalar(self.c2);
        let eta = u.scale(-2.0 * self.c4).add_scalar(self.c3);
        (tau, xi, eta)
    }
}

pub fn eta_alpha(v: &VectorField, alpha: MultiIndex, jet: &Jet) -> Result<f64> {
    v.eta_alpha(alpha, jet)
}

/// Default relative step for [`pr_v_apply`].
pub const PROLONGATION_STEP: f64 = 1e-6;

/// `pr v (F)` at `jet`: `τ ∂F/∂t + ξ ∂F/∂x + Σ_α η^α ∂F/∂u_α`, with every
/// partial taken by central differences of relative step `step`.
pub fn pr_v_apply<F>(v: &VectorField, f: F, jet: &Jet, step: f64) -> Result<f64>
where
    F: Fn(&Jet) -> Result<f64>,
{
    let central = |jet_plus: &Jet, jet_minus: &Jet, h: f64| -> Result<f64> {
        let (fp, fm) = (f(jet_plus)?, f(jet_minus)?);
        if !fp.is_finite() || !fm.is_finite() {
            return Err(Error::Evaluation(
                "function is not finite near the jet".into(),
            ));
        }
        Ok((fp - fm) / (2.0 * h))
    };
    let h_of = |c: f64| step * c.abs().max(1.0);

    let mut total = 0.0;

    let h = h_of(jet.t);
    let (mut p, mut m) = (jet.clone(), jet.clone());
    p.t += h;
    m.t -= h;
    total += v.tau(jet.t) * central(&p, &m, h)?;

    let h = h_of(jet.x);
    let (mut p, mut m) = (jet.clone(), jet.clone());
    p.x += h;
    m.x -= h;
    total += v.xi(jet.t, jet.x) * central(&p, &m, h)?;

    for (alpha, value) in jet.iter() {
        let coefficient = v.eta_alpha(alpha, jet)?;
        if coefficient == 0.0 {
            continue;
        }
        let h = h_of(value);
        let (mut p, mut m) = (jet.clone(), jet.clone());
        p.set(alpha, value + h);
        m.set(alpha, value - h);
        total += coefficient * central(&p, &m, h)?;
    }
    Ok(total)
}

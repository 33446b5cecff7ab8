//! Multi-indices and points of the jet space `J^N` over `(t, x)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::MAX_ORDER;
use crate::error::{Error, Result};

/// Derivative orders `(α₁, α₂)` in `t` and `x`, selecting `u_α = ∂^{α₁+α₂}u / ∂t^{α₁}∂x^{α₂}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex {
    pub t: usize,
    pub x: usize,
}

impl MultiIndex {
    pub const ZERO: MultiIndex = MultiIndex { t: 0, x: 0 };

    pub const fn new(t: usize, x: usize) -> Self {
        MultiIndex { t, x }
    }

    pub const fn order(self) -> usize {
        self.t + self.x
    }

    /// Position in graded-lexicographic storage: total order major, `t`-order minor.
    pub const fn flat(self) -> usize {
        let d = self.t + self.x;
        d * (d + 1) / 2 + self.t
    }

    /// Number of multi-indices with total order `<= n`.
    pub const fn count_up_to(n: usize) -> usize {
        (n + 1) * (n + 2) / 2
    }

    /// All multi-indices with total order `<= n`, in storage order.
    pub fn up_to(n: usize) -> impl Iterator<Item = MultiIndex> {
        (0..=n).flat_map(|d| (0..=d).map(move |t| MultiIndex::new(t, d - t)))
    }

    pub const fn bump_t(self) -> Self {
        MultiIndex::new(self.t + 1, self.x)
    }

    pub const fn bump_x(self) -> Self {
        MultiIndex::new(self.t, self.x + 1)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.x)
    }
}

/// A point of the order-`N` jet space: base point `(t, x)` and every `u_α` with `|α| <= N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Jet {
    order: usize,
    pub t: f64,
    pub x: f64,
    values: Vec<f64>,
}

impl Jet {
    /// Builds a jet from derivative values in graded-lexicographic order.
    pub fn new(t: f64, x: f64, order: usize, values: Vec<f64>) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::usage(format!(
                "jet order {order} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let expected = MultiIndex::count_up_to(order);
        if values.len() != expected {
            return Err(Error::usage(format!(
                "order-{order} jet needs {expected} derivative values, got {}",
                values.len()
            )));
        }
        Ok(Jet {
            order,
            t,
            x,
            values,
        })
    }

    pub fn zeros(t: f64, x: f64, order: usize) -> Result<Self> {
        Jet::new(t, x, order, vec![0.0; MultiIndex::count_up_to(order)])
    }

    /// Builds a jet by evaluating `f` on every multi-index.
    pub fn from_fn(t: f64, x: f64, order: usize, f: impl FnMut(MultiIndex) -> f64) -> Result<Self> {
        Jet::new(t, x, order, MultiIndex::up_to(order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn u(&self) -> f64 {
        self.values[0]
    }

    pub fn get(&self, alpha: MultiIndex) -> Option<f64> {
        (alpha.order() <= self.order).then(|| self.values[alpha.flat()])
    }

    /// Like [`Jet::get`] but reports a missing coordinate as a usage error.
    pub fn try_get(&self, alpha: MultiIndex) -> Result<f64> {
        self.get(alpha).ok_or_else(|| {
            Error::usage(format!(
                "u_{alpha} is not part of an order-{} jet",
                self.order
            ))
        })
    }

    /// Panics when `alpha` lies outside the jet.
    pub fn at(&self, alpha: MultiIndex) -> f64 {
        self.values[self.index_checked(alpha)]
    }

    pub fn set(&mut self, alpha: MultiIndex, value: f64) {
        let i = self.index_checked(alpha);
        self.values[i] = value;
    }

    fn index_checked(&self, alpha: MultiIndex) -> usize {
        assert!(
            alpha.order() <= self.order,
            "u_{alpha} is outside an order-{} jet",
            self.order
        );
        alpha.flat()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (MultiIndex, f64)> + '_ {
        MultiIndex::up_to(self.order).zip(self.values.iter().copied())
    }

    /// Keeps only the coordinates of order `<= order`.
    pub fn truncated(&self, order: usize) -> Result<Jet> {
        if order > self.order {
            return Err(Error::usage(format!(
                "cannot raise a jet from order {} to {order}",
                self.order
            )));
        }
        Jet::new(
            self.t,
            self.x,
            order,
            self.values[..MultiIndex::count_up_to(order)].to_vec(),
        )
    }

    /// `u_t + u*u_x`.
    pub fn evolution_pivot(&self) -> Result<f64> {
        let u_t = self.try_get(MultiIndex::new(1, 0))?;
        let u_x = self.try_get(MultiIndex::new(0, 1))?;
        Ok(u_t + self.u() * u_x)
    }
}

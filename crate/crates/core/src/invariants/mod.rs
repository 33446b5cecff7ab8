//! Normalized differential invariants `I_α = ι(u_α)` for both frames.
//!
//! Plugging a frame into the prolonged action gives, for every non-phantom `α`,
//!
//! ```text
//! I_α = |P|^{-(3α₁+α₂+2)/d} Σ_k C(α₁,k) u^k u_{α₁-k, α₂+k}
//! ```
//!
//! with `P = u_t + u u_x, d = 5` for the `U_T`-frame and `P = u_x, d = 3` for
//! the `U_X`-frame. The phantom entries are `I_00 = 0` and `±1` at the
//! normalized coordinate.

mod along;

use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::frame::{moving_frame, Branch, FrameKind};
use crate::group::scaling_weight;
use crate::jet::{Jet, MultiIndex};

pub use along::{
    invariant_derivative, reconstruct_generators, slope_frame_i11_identity, InvariantField,
    Reconstruction,
};

/// Rational exponent `num / den`, kept exact until the final power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Weight {
    pub num: i64,
    pub den: i64,
}

impl Weight {
    pub fn of(alpha: MultiIndex, kind: FrameKind) -> Weight {
        Weight {
            num: scaling_weight(alpha) as i64,
            den: kind.pivot_weight(),
        }
    }

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `|pivot|^{-w}` as `exp(-num·ln|pivot| / den)`.
    pub fn inverse_power(self, abs_pivot: f64) -> f64 {
        (-(self.num as f64) * abs_pivot.ln() / self.den as f64).exp()
    }
}

/// Direction of an operator of invariant differentiation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// `ι(D_t) = |P|^{-3/d} (D_t + u D_x)`
    T,
    /// `ι(D_x) = |P|^{-1/d} D_x`
    X,
}

impl Direction {
    pub(crate) fn weight(self, kind: FrameKind) -> Weight {
        Weight {
            num: match self {
                Direction::T => 3,
                Direction::X => 1,
            },
            den: kind.pivot_weight(),
        }
    }
}

/// `Σ_k C(α₁,k) u^k u_{α₁-k, α₂+k}`, the un-normalized part of `I_α`.
fn boosted_sum(jet: &Jet, alpha: MultiIndex) -> f64 {
    let u = jet.u();
    let mut power = 1.0;
    let mut sum = 0.0;
    for k in 0..=alpha.t {
        sum += binomial(alpha.t, k) * power * jet.at(MultiIndex::new(alpha.t - k, alpha.x + k));
        power *= u;
    }
    sum
}

pub fn normalized_invariant(jet: &Jet, alpha: MultiIndex, kind: FrameKind) -> Result<f64> {
    if alpha.order() > jet.order() {
        return Err(Error::usage(format!(
            "I_{alpha} needs an order-{} jet, got order {}",
            alpha.order(),
            jet.order()
        )));
    }
    let frame = moving_frame(jet, kind)?;
    Ok(invariant_with_pivot(jet, alpha, kind, frame.pivot))
}

fn invariant_with_pivot(jet: &Jet, alpha: MultiIndex, kind: FrameKind, pivot: f64) -> f64 {
    if alpha == MultiIndex::ZERO {
        0.0
    } else if alpha == kind.unit_index() {
        Branch::of(pivot).sign()
    } else {
        Weight::of(alpha, kind).inverse_power(pivot.abs()) * boosted_sum(jet, alpha)
    }
}

/// Every `I_α` with `|α| <= order` for one frame at one jet.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub kind: FrameKind,
    pub order: usize,
    pub branch: Branch,
    pub pivot: f64,
    values: Vec<f64>,
}

/// A normalized coordinate together with the constant it is pinned to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Phantom {
    pub name: &'static str,
    pub value: f64,
}

impl InvariantTable {
    pub fn get(&self, alpha: MultiIndex) -> Option<f64> {
        (alpha.order() <= self.order).then(|| self.values[alpha.flat()])
    }

    pub fn try_get(&self, alpha: MultiIndex) -> Result<f64> {
        self.get(alpha).ok_or_else(|| {
            Error::usage(format!(
                "I_{alpha} is not in an order-{} invariant table",
                self.order
            ))
        })
    }

    fn i(&self, t: usize, x: usize) -> Result<f64> {
        self.try_get(MultiIndex::new(t, x))
    }

    pub fn iter(&self) -> impl Iterator<Item = (MultiIndex, f64)> + '_ {
        MultiIndex::up_to(self.order).zip(self.values.iter().copied())
    }

    pub fn is_phantom(&self, alpha: MultiIndex) -> bool {
        self.kind.is_phantom(alpha)
    }

    /// `H¹ = ι(t)`, `H² = ι(x)`, `I_00 = ι(u)` and the normalized derivative.
    pub fn phantoms(&self) -> [Phantom; 4] {
        let unit = match self.kind {
            FrameKind::TNormalized => "I_10",
            FrameKind::XNormalized => "I_01",
        };
        [
            Phantom {
                name: "H1",
                value: 0.0,
            },
            Phantom {
                name: "H2",
                value: 0.0,
            },
            Phantom {
                name: "I_00",
                value: 0.0,
            },
            Phantom {
                name: unit,
                value: self.branch.sign(),
            },
        ]
    }

    /// `I_10 + I_03`, the invariantized KdV equation. For the `U_T`-frame
    /// `I_10` is the phantom `±1`.
    pub fn invariantized_kdv_residual(&self) -> Result<f64> {
        Ok(self.i(1, 0)? + self.i(0, 3)?)
    }
}

pub fn invariant_table(jet: &Jet, kind: FrameKind, order: usize) -> Result<InvariantTable> {
    if order > jet.order() {
        return Err(Error::usage(format!(
            "an order-{order} table needs an order-{order} jet, got order {}",
            jet.order()
        )));
    }
    let frame = moving_frame(jet, kind)?;
    let values = MultiIndex::up_to(order)
        .map(|alpha| invariant_with_pivot(jet, alpha, kind, frame.pivot))
        .collect();
    Ok(InvariantTable {
        kind,
        order,
        branch: frame.branch,
        pivot: frame.pivot,
        values,
    })
}

/// Right-hand side of the recurrence for `ι(D_dir) I_α`, expressed in table entries.
///
/// For the `U_X`-frame, with `b` the branch sign and `w = (3α₁+α₂+2)/3`:
///
/// ```text
/// D_t I_α = I_{α₁+1,α₂} - w b I_11 I_α + α₁ I_10 I_{α₁-1,α₂+1}
/// D_x I_α = I_{α₁,α₂+1} - w b I_02 I_α + α₁ b I_{α₁-1,α₂+1}
/// ```
///
/// valid for every non-phantom `α`. The `U_T`-frame only supports
/// `D_t I_01 = -⅗ I_01² + I_11 - ⅗ b I_01 I_20`.
pub fn recurrence_rhs(table: &InvariantTable, alpha: MultiIndex, dir: Direction) -> Result<f64> {
    let b = table.branch.sign();
    match table.kind {
        FrameKind::XNormalized => {
            if table.is_phantom(alpha) {
                return Err(Error::usage(format!(
                    "I_{alpha} is a phantom invariant of the x-normalized frame"
                )));
            }
            let w = Weight::of(alpha, table.kind).value();
            let i_alpha = table.try_get(alpha)?;
            let lowered = if alpha.t > 0 {
                alpha.t as f64 * table.i(alpha.t - 1, alpha.x + 1)?
            } else {
                0.0
            };
            match dir {
                Direction::T => Ok(table.try_get(alpha.bump_t())?
                    - w * b * table.i(1, 1)? * i_alpha
                    + table.i(1, 0)? * lowered),
                Direction::X => Ok(table.try_get(alpha.bump_x())?
                    - w * b * table.i(0, 2)? * i_alpha
                    + b * lowered),
            }
        }
        FrameKind::TNormalized => {
            if alpha != MultiIndex::new(0, 1) || dir != Direction::T {
                return Err(Error::UnsupportedFrame(table.kind));
            }
            let i01 = table.i(0, 1)?;
            Ok(-0.6 * i01 * i01 + table.i(1, 1)? - 0.6 * b * i01 * table.i(2, 0)?)
        }
    }
}

/// Structure coefficients of `[ι(D_first), ι(D_second)] = along_t ι(D_t) + along_x ι(D_x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Commutator {
    pub first: Direction,
    pub second: Direction,
    pub along_t: f64,
    pub along_x: f64,
}

impl Commutator {
    /// The same relation written for `[ι(D_t), ι(D_x)]`.
    pub fn t_then_x(&self) -> (f64, f64) {
        if self.first == Direction::T {
            (self.along_t, self.along_x)
        } else {
            (-self.along_t, -self.along_x)
        }
    }

    /// Evaluates the right-hand side on an invariant with the given derivatives.
    pub fn apply(&self, d_t: f64, d_x: f64) -> f64 {
        self.along_t * d_t + self.along_x * d_x
    }
}

/// `U_T`-frame: `[D_t, D_x] = ⅗ b (I_11 + I_01²) D_t - ⅕ (b I_20 + 6 I_01) D_x`.
/// `U_X`-frame: `[D_x, D_t] = b (-I_02 D_t + (1 + ⅓ I_11) D_x)`.
pub fn commutator_coefficients(table: &InvariantTable) -> Result<Commutator> {
    if table.order < 2 {
        return Err(Error::usage(format!(
            "commutator coefficients need an order-2 table, got order {}",
            table.order
        )));
    }
    let b = table.branch.sign();
    Ok(match table.kind {
        FrameKind::TNormalized => {
            let i01 = table.i(0, 1)?;
            Commutator {
                first: Direction::T,
                second: Direction::X,
                along_t: 0.6 * b * (table.i(1, 1)? + i01 * i01),
                along_x: -0.2 * (b * table.i(2, 0)? + 6.0 * i01),
            }
        }
        FrameKind::XNormalized => Commutator {
            first: Direction::X,
            second: Direction::T,
            along_t: -b * table.i(0, 2)?,
            along_x: b * (1.0 + table.i(1, 1)? / 3.0),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_jet() -> Jet {
        let mut j = Jet::zeros(0.0, 0.0, 3).unwrap();
        j.set(MultiIndex::new(1, 0), 1.0);
        j.set(MultiIndex::new(0, 1), 1.0);
        j.set(MultiIndex::new(0, 2), 2.0);
        j
    }

    #[test]
    fn unit_jet_values() {
        let j = sample_jet();
        let t =
            |a, b| normalized_invariant(&j, MultiIndex::new(a, b), FrameKind::TNormalized).unwrap();
        let x =
            |a, b| normalized_invariant(&j, MultiIndex::new(a, b), FrameKind::XNormalized).unwrap();
        assert_eq!(t(0, 1), 1.0);
        assert_eq!(t(0, 2), 2.0);
        assert_eq!(x(1, 0), 1.0);
        assert_eq!(x(0, 2), 2.0);
    }

    #[test]
    fn phantoms_are_pinned() {
        let mut j = sample_jet();
        j.set(MultiIndex::ZERO, 0.8);
        j.set(MultiIndex::new(0, 1), -2.5);
        for kind in FrameKind::ALL {
            let table = invariant_table(&j, kind, 3).unwrap();
            assert_eq!(table.get(MultiIndex::ZERO), Some(0.0));
            assert_eq!(table.get(kind.unit_index()), Some(table.branch.sign()));
            assert_eq!(table.phantoms()[3].value, table.branch.sign());
        }
    }

    #[test]
    fn out_of_order_is_usage_error() {
        let j = sample_jet();
        assert!(matches!(
            normalized_invariant(&j, MultiIndex::new(2, 2), FrameKind::XNormalized),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            invariant_table(&j, FrameKind::XNormalized, 4),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn weights_stay_rational() {
        let w = Weight::of(MultiIndex::new(2, 1), FrameKind::TNormalized);
        assert_eq!((w.num, w.den), (9, 5));
        assert_eq!(w.inverse_power(1.0), 1.0);
        assert!((Weight { num: 3, den: 3 }.inverse_power(4.0) - 0.25).abs() < 1e-16);
    }

    #[test]
    fn split_recurrence_instances() {
        let mut j = Jet::zeros(0.2, 0.1, 4).unwrap();
        for (k, a) in MultiIndex::up_to(4).enumerate() {
            j.set(a, 0.3 + 0.17 * k as f64);
        }
        let table = invariant_table(&j, FrameKind::XNormalized, 4).unwrap();
        let i = |a, b| table.get(MultiIndex::new(a, b)).unwrap();
        let rhs = recurrence_rhs(&table, MultiIndex::new(0, 2), Direction::X).unwrap();
        assert!((rhs - (i(0, 3) - 4.0 / 3.0 * i(0, 2) * i(0, 2))).abs() < 1e-14);
        let rhs = recurrence_rhs(&table, MultiIndex::new(1, 0), Direction::T).unwrap();
        assert!((rhs - (i(2, 0) - 5.0 / 3.0 * i(1, 1) * i(1, 0) + i(1, 0))).abs() < 1e-14);
    }

    #[test]
    fn recurrence_errors() {
        let mut j = sample_jet();
        j.set(MultiIndex::new(1, 1), 0.5);
        let x = invariant_table(&j, FrameKind::XNormalized, 3).unwrap();
        assert!(matches!(
            recurrence_rhs(&x, MultiIndex::ZERO, Direction::T),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            recurrence_rhs(&x, MultiIndex::new(0, 3), Direction::X),
            Err(Error::Usage(_))
        ));
        let t = invariant_table(&j, FrameKind::TNormalized, 3).unwrap();
        assert!(matches!(
            recurrence_rhs(&t, MultiIndex::new(0, 2), Direction::X),
            Err(Error::UnsupportedFrame(FrameKind::TNormalized))
        ));
        assert!(recurrence_rhs(&t, MultiIndex::new(0, 1), Direction::T).is_ok());
    }

    #[test]
    fn commutator_needs_order_two() {
        let j = sample_jet();
        let table = invariant_table(&j, FrameKind::TNormalized, 1).unwrap();
        assert!(matches!(
            commutator_coefficients(&table),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn commutator_forms() {
        let mut j = sample_jet();
        j.set(MultiIndex::new(1, 1), 0.5);
        j.set(MultiIndex::new(2, 0), -0.25);
        let t = invariant_table(&j, FrameKind::TNormalized, 2).unwrap();
        let c = commutator_coefficients(&t).unwrap();
        let i = |a, b| t.get(MultiIndex::new(a, b)).unwrap();
        assert_eq!((c.first, c.second), (Direction::T, Direction::X));
        assert!((c.along_t - 0.6 * (i(1, 1) + i(0, 1).powi(2))).abs() < 1e-15);
        assert!((c.along_x + 0.2 * (i(2, 0) + 6.0 * i(0, 1))).abs() < 1e-15);

        let x = invariant_table(&j, FrameKind::XNormalized, 2).unwrap();
        let c = commutator_coefficients(&x).unwrap();
        let i = |a, b| x.get(MultiIndex::new(a, b)).unwrap();
        assert_eq!((c.first, c.second), (Direction::X, Direction::T));
        assert_eq!(c.along_t, -i(0, 2));
        assert_eq!(c.along_x, 1.0 + i(1, 1) / 3.0);
        assert_eq!(c.t_then_x(), (i(0, 2), -(1.0 + i(1, 1) / 3.0)));
    }
}

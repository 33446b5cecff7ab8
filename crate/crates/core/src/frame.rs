//! Right moving frames on `J^1` for the two cross-sections
//! `T = X = U = 0, U_T = ±1` and `T = X = U = 0, U_X = ±1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Pivot, Result};
use crate::group::GroupElement;
use crate::jet::{Jet, MultiIndex};

/// Pivots below this magnitude are treated as exact zeros.
pub const SINGULAR_THRESHOLD: f64 = 1e-30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameKind {
    /// Cross-section `U_T = ±1`; pivot `u_t + u u_x`.
    TNormalized,
    /// Cross-section `U_X = ±1`; pivot `u_x`.
    XNormalized,
}

impl FrameKind {
    pub const ALL: [FrameKind; 2] = [FrameKind::TNormalized, FrameKind::XNormalized];

    pub fn pivot_kind(self) -> Pivot {
        match self {
            FrameKind::TNormalized => Pivot::Evolution,
            FrameKind::XNormalized => Pivot::Slope,
        }
    }

    pub fn pivot(self, jet: &Jet) -> Result<f64> {
        match self {
            FrameKind::TNormalized => jet.evolution_pivot(),
            FrameKind::XNormalized => jet.try_get(MultiIndex::new(0, 1)),
        }
    }

    /// Scaling weight of the pivot: `U_T + U U_X` scales by `e^{-5s}`, `U_X` by `e^{-3s}`.
    pub fn pivot_weight(self) -> i64 {
        match self {
            FrameKind::TNormalized => 5,
            FrameKind::XNormalized => 3,
        }
    }

    /// The derivative coordinate fixed to `±1` by the cross-section.
    pub fn unit_index(self) -> MultiIndex {
        match self {
            FrameKind::TNormalized => MultiIndex::new(1, 0),
            FrameKind::XNormalized => MultiIndex::new(0, 1),
        }
    }

    pub fn is_phantom(self, alpha: MultiIndex) -> bool {
        alpha == MultiIndex::ZERO || alpha == self.unit_index()
    }
}

impl fmt::Display for FrameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameKind::TNormalized => f.write_str("t-normalized"),
            FrameKind::XNormalized => f.write_str("x-normalized"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Positive,
    Negative,
}

impl Branch {
    pub fn of(value: f64) -> Branch {
        if value < 0.0 {
            Branch::Negative
        } else {
            Branch::Positive
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameResult {
    pub rho: GroupElement,
    pub branch: Branch,
    pub pivot: f64,
}

pub fn moving_frame(jet: &Jet, kind: FrameKind) -> Result<FrameResult> {
    let pivot = kind.pivot(jet)?;
    if pivot.is_nan() || pivot.abs() < SINGULAR_THRESHOLD {
        return Err(Error::SingularFrame {
            pivot: kind.pivot_kind(),
            value: pivot,
        });
    }
    let rho = GroupElement::new(
        -jet.t,
        -jet.x,
        -jet.u(),
        pivot.abs().ln() / kind.pivot_weight() as f64,
    );
    Ok(FrameResult {
        rho,
        branch: Branch::of(pivot),
        pivot,
    })
}

/// Largest parameter-wise gap between `ρ(g·z)` and `ρ(z)·g⁻¹`.
pub fn equivariance_defect(jet: &Jet, g: &GroupElement, kind: FrameKind) -> Result<f64> {
    let here = moving_frame(jet, kind)?;
    let there = moving_frame(&g.prolong(jet), kind)?;
    Ok(there.rho.distance(&here.rho.compose(&g.inverse())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taylor::Solution;

    fn unit_jet() -> Jet {
        let mut j = Jet::zeros(0.0, 0.0, 1).unwrap();
        j.set(MultiIndex::new(1, 0), 1.0);
        j.set(MultiIndex::new(0, 1), 1.0);
        j
    }

    #[test]
    fn unit_jet_has_identity_frame() {
        for kind in FrameKind::ALL {
            let f = moving_frame(&unit_jet(), kind).unwrap();
            assert_eq!(f.rho.params(), [0.0, 0.0, 0.0, 0.0]);
            assert_eq!(f.branch, Branch::Positive);
        }
    }

    #[test]
    fn rational_solution_singles_out_t_frame() {
        let j = Solution::Rational.jet_at(1.0, 2.0, 3).unwrap();
        match moving_frame(&j, FrameKind::TNormalized) {
            Err(Error::SingularFrame { pivot, value }) => {
                assert_eq!(pivot, Pivot::Evolution);
                assert_eq!(value, 0.0);
            }
            other => panic!("expected singular frame, got {other:?}"),
        }
        let f = moving_frame(&j, FrameKind::XNormalized).unwrap();
        assert_eq!(f.rho.params(), [-1.0, -2.0, -2.0, 0.0]);
    }

    #[test]
    fn negative_slope_branch() {
        let mut j = Jet::zeros(0.0, 0.0, 1).unwrap();
        j.set(MultiIndex::new(0, 1), -(3.0f64).exp());
        let f = moving_frame(&j, FrameKind::XNormalized).unwrap();
        assert!((f.rho.log_scale - 1.0).abs() < 1e-15);
        assert_eq!(f.branch, Branch::Negative);
    }

    #[test]
    fn identity_has_zero_defect() {
        let mut j = unit_jet();
        j.set(MultiIndex::ZERO, 0.4);
        j.t = 1.3;
        for kind in FrameKind::ALL {
            assert_eq!(
                equivariance_defect(&j, &GroupElement::IDENTITY, kind).unwrap(),
                0.0
            );
        }
    }

    #[test]
    fn scaling_defect_is_round_off() {
        let mut j = Jet::zeros(0.7, -0.2, 1).unwrap();
        j.set(MultiIndex::ZERO, 1.1);
        j.set(MultiIndex::new(1, 0), 0.3);
        j.set(MultiIndex::new(0, 1), -0.8);
        let g = GroupElement::new(0.0, 0.0, 0.0, 0.45);
        for kind in FrameKind::ALL {
            assert!(equivariance_defect(&j, &g, kind).unwrap() < 1e-12);
        }
    }

    #[test]
    fn order_zero_jet_is_usage_error() {
        let j = Jet::zeros(0.0, 0.0, 0).unwrap();
        assert!(matches!(
            moving_frame(&j, FrameKind::XNormalized),
            Err(Error::Usage(_))
        ));
    }
}

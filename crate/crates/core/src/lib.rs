//! Differential invariants of the symmetry group of the KdV equation
//! `u_t + u u_x + u_xxx = 0`.
//!
//! The crate covers the prolonged action of the four-parameter symmetry
//! group on jets of any order, the moving frames attached to the
//! cross-sections `U_T = ±1` and `U_X = ±1`, closed-form normalized invariants
//! with their recurrence and commutator relations, and a battery of numerical
//! checks ([`verify`]) that exercises each of these identities.

mod combinatorics;
pub mod error;
pub mod frame;
pub mod group;
pub mod invariants;
pub mod jet;
pub mod taylor;
pub mod verify;

pub use combinatorics::{binomial, factorial, MAX_ORDER};
pub use error::{Error, Pivot, Result};
pub use frame::{equivariance_defect, moving_frame, Branch, FrameKind, FrameResult};
pub use group::{
    act_point, compose, eta_alpha, inverse, pr_v_apply, prolong_act, GroupElement, VectorField,
};
pub use invariants::{
    commutator_coefficients, invariant_derivative, invariant_table, normalized_invariant,
    reconstruct_generators, recurrence_rhs, slope_frame_i11_identity, Commutator, Direction,
    InvariantField, InvariantTable, Reconstruction,
};
pub use jet::{Jet, MultiIndex};
pub use taylor::{jet_of_solution, kdv_residual, Analytic, Solution, TruncatedSeries, Var};

//! Invariant differentiation along an exact solution.
//!
//! The solution is expanded around `(t0, x0)`; invariants become series in
//! `(δt, δx)` and the operators `ι(D_t)`, `ι(D_x)` act on those series
//! exactly, so nested derivatives cost nothing beyond a higher expansion order.

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::frame::{Branch, FrameKind, SINGULAR_THRESHOLD};
use crate::jet::MultiIndex;
use crate::taylor::{Solution, TruncatedSeries, Var};

use super::{normalized_invariant, Direction, Weight};

/// Relative size below which a reconstruction denominator counts as zero.
pub const DEGENERATE_THRESHOLD: f64 = 1e-8;

/// Invariants of one frame as functions on a neighbourhood of a solution point.
#[derive(Debug, Clone)]
pub struct InvariantField {
    kind: FrameKind,
    branch: Branch,
    u: TruncatedSeries,
    ln_abs_pivot: TruncatedSeries,
}

fn mul_truncating(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let m = a.order().min(b.order());
    let a = a.truncated(m).expect("m is not larger");
    let b = b.truncated(m).expect("m is not larger");
    &a * &b
}

fn add_truncating(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let m = a.order().min(b.order());
    &a.truncated(m).expect("m is not larger") + &b.truncated(m).expect("m is not larger")
}

impl InvariantField {
    /// Expands `solution` to degree `order` at `(t0, x0)`.
    pub fn new(
        solution: &Solution,
        t0: f64,
        x0: f64,
        kind: FrameKind,
        order: usize,
    ) -> Result<Self> {
        if order < 2 {
            return Err(Error::usage(
                "invariant fields need an expansion of order >= 2",
            ));
        }
        let u = solution.series_at(t0, x0, order)?;
        let u_x = u.derivative(Var::X)?;
        let pivot = match kind {
            FrameKind::TNormalized => {
                let u_t = u.derivative(Var::T)?;
                add_truncating(&u_t, &mul_truncating(&u, &u_x))
            }
            FrameKind::XNormalized => u_x,
        };
        let p0 = pivot.constant_term();
        if p0.is_nan() || p0.abs() < SINGULAR_THRESHOLD {
            return Err(Error::SingularFrame {
                pivot: kind.pivot_kind(),
                value: p0,
            });
        }
        let branch = Branch::of(p0);
        let ln_abs_pivot = pivot.scale(branch.sign()).ln()?;
        Ok(InvariantField {
            kind,
            branch,
            u,
            ln_abs_pivot,
        })
    }

    pub fn kind(&self) -> FrameKind {
        self.kind
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// Series of `u_α` around the base point.
    pub fn derivative_of_u(&self, alpha: MultiIndex) -> Result<TruncatedSeries> {
        let mut s = self.u.clone();
        for _ in 0..alpha.t {
            s = s.derivative(Var::T)?;
        }
        for _ in 0..alpha.x {
            s = s.derivative(Var::X)?;
        }
        Ok(s)
    }

    /// `|P|^{-w}` as a series of the given order.
    fn inverse_power(&self, w: Weight, order: usize) -> Result<TruncatedSeries> {
        Ok(self
            .ln_abs_pivot
            .truncated(order)?
            .scale(-(w.num as f64) / w.den as f64)
            .exp())
    }

    /// Series of `I_α`; phantoms are constant series.
    pub fn invariant(&self, alpha: MultiIndex) -> Result<TruncatedSeries> {
        let order = (self.u.order() - 1).min(
            self.u.order().checked_sub(alpha.order()).ok_or_else(|| {
                Error::usage(format!(
                    "I_{alpha} exceeds the order-{} expansion",
                    self.u.order()
                ))
            })?,
        );
        if alpha == MultiIndex::ZERO {
            return Ok(TruncatedSeries::zero(order));
        }
        if alpha == self.kind.unit_index() {
            return Ok(TruncatedSeries::constant(order, self.branch.sign()));
        }
        let u = self.u.truncated(order)?;
        let mut sum = TruncatedSeries::zero(order);
        let mut power = TruncatedSeries::constant(order, 1.0);
        for k in 0..=alpha.t {
            let term = self
                .derivative_of_u(MultiIndex::new(alpha.t - k, alpha.x + k))?
                .truncated(order)?;
            sum = &sum + &(&power * &term).scale(binomial(alpha.t, k));
            power = &power * &u;
        }
        Ok(&self.inverse_power(Weight::of(alpha, self.kind), order)? * &sum)
    }

    /// `ι(D_dir) f`; the result is one order lower than `f`.
    pub fn differentiate(&self, dir: Direction, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let f_x = f.derivative(Var::X)?;
        let m = f_x.order();
        let total = match dir {
            Direction::T => &f.derivative(Var::T)? + &(&self.u.truncated(m)? * &f_x),
            Direction::X => f_x,
        };
        Ok(&self.inverse_power(dir.weight(self.kind), m)? * &total)
    }

    /// `[ι(D_t), ι(D_x)] f` by nested differentiation; two orders lower than `f`.
    pub fn commutator(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let tx = self.differentiate(Direction::T, &self.differentiate(Direction::X, f)?)?;
        let xt = self.differentiate(Direction::X, &self.differentiate(Direction::T, f)?)?;
        Ok(&tx - &xt)
    }
}

/// `ι(D_dir) I_α` at `(t0, x0)` along `solution`.
pub fn invariant_derivative(
    solution: &Solution,
    t0: f64,
    x0: f64,
    alpha: MultiIndex,
    dir: Direction,
    kind: FrameKind,
) -> Result<f64> {
    let field = InvariantField::new(solution, t0, x0, kind, alpha.order() + 2)?;
    let f = field.invariant(alpha)?;
    Ok(field.differentiate(dir, &f)?.constant_term())
}

/// A reconstructed invariant next to its closed-form value.
#[derive(Debug, Clone, PartialEq)]
pub struct Reconstruction {
    pub kind: FrameKind,
    /// `I_20` rebuilt from the generating invariant and its invariant derivatives.
    pub reconstructed: f64,
    /// `I_20` from the closed form.
    pub direct: f64,
    /// Intermediate invariants recovered on the way, as `(α, reconstructed, direct)`.
    pub intermediates: Vec<(MultiIndex, f64, f64)>,
}

impl Reconstruction {
    pub fn relative_defect(&self) -> f64 {
        std::iter::once((self.reconstructed, self.direct))
            .chain(self.intermediates.iter().map(|&(_, r, d)| (r, d)))
            .map(|(r, d)| (r - d).abs() / d.abs().max(r.abs()).max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max)
    }
}

fn guard(denominator: f64, terms: &[f64]) -> Result<()> {
    let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
    if denominator.abs() <= DEGENERATE_THRESHOLD * scale || denominator == 0.0 {
        Err(Error::Degenerate { denominator, scale })
    } else {
        Ok(())
    }
}

/// Rebuilds `I_20` from the single generating invariant of each frame.
///
/// `U_T`-frame, from `I_01` (with `b` the branch sign):
///
/// ```text
/// I_20 = ([D_t,D_x] I_01 - ⅗ b (D_t I_01 + ⁸⁄₅ I_01²) D_t I_01 + ⁶⁄₅ I_01 D_x I_01)
///        / (⁹⁄₂₅ I_01 D_t I_01 - ⅕ b D_x I_01)
/// ```
///
/// `U_X`-frame, from `I_10`: the commutator applied to `I_10` yields
///
/// ```text
/// I_02 = (b [D_x,D_t] I_10 - ⅓ (D_x I_10 + 2) D_x I_10) / (⁵⁄₉ b I_10 D_x I_10 - D_t I_10)
/// ```
///
/// then `I_11 = D_x I_10 + ⁵⁄₃ b I_10 I_02 - 1` and
/// `I_20 = D_t I_10 + ⁵⁄₃ b I_10 I_11 - b I_10` follow from the split recurrences.
pub fn reconstruct_generators(
    solution: &Solution,
    t0: f64,
    x0: f64,
    kind: FrameKind,
) -> Result<Reconstruction> {
    let field = InvariantField::new(solution, t0, x0, kind, 4)?;
    let b = field.branch().sign();
    let jet = solution.jet_at(t0, x0, 2)?;
    let direct = |t, x| normalized_invariant(&jet, MultiIndex::new(t, x), kind);

    let generator = match kind {
        FrameKind::TNormalized => MultiIndex::new(0, 1),
        FrameKind::XNormalized => MultiIndex::new(1, 0),
    };
    let f = field.invariant(generator)?;
    let g = f.constant_term();
    let d_t = field.differentiate(Direction::T, &f)?.constant_term();
    let d_x = field.differentiate(Direction::X, &f)?.constant_term();
    let tx = field.commutator(&f)?.constant_term();

    match kind {
        FrameKind::TNormalized => {
            let den = 9.0 / 25.0 * g * d_t - 0.2 * b * d_x;
            guard(den, &[9.0 / 25.0 * g * d_t, 0.2 * d_x])?;
            let num = tx - 0.6 * b * (d_t + 1.6 * g * g) * d_t + 1.2 * g * d_x;
            let i20 = num / den;
            let i11 = d_t + 0.6 * g * g + 0.6 * b * g * i20;
            Ok(Reconstruction {
                kind,
                reconstructed: i20,
                direct: direct(2, 0)?,
                intermediates: vec![(MultiIndex::new(1, 1), i11, direct(1, 1)?)],
            })
        }
        FrameKind::XNormalized => {
            let xt = -tx;
            let den = 5.0 / 9.0 * b * g * d_x - d_t;
            guard(den, &[5.0 / 9.0 * g * d_x, d_t])?;
            let i02 = (b * xt - (d_x + 2.0) * d_x / 3.0) / den;
            let i11 = d_x + 5.0 / 3.0 * b * g * i02 - 1.0;
            let i20 = d_t + 5.0 / 3.0 * b * g * i11 - b * g;
            Ok(Reconstruction {
                kind,
                reconstructed: i20,
                direct: direct(2, 0)?,
                intermediates: vec![
                    (MultiIndex::new(0, 2), i02, direct(0, 2)?),
                    (MultiIndex::new(1, 1), i11, direct(1, 1)?),
                ],
            })
        }
    }
}

/// `(ι(D_x) I_10 + ⁵⁄₃ b I_10 I_02 - 1, I_11)` for the `U_X`-frame; the two agree.
pub fn slope_frame_i11_identity(solution: &Solution, t0: f64, x0: f64) -> Result<(f64, f64)> {
    let kind = FrameKind::XNormalized;
    let jet = solution.jet_at(t0, x0, 2)?;
    let i = |t, x| normalized_invariant(&jet, MultiIndex::new(t, x), kind);
    let b = crate::frame::moving_frame(&jet, kind)?.branch.sign();
    let d_x = invariant_derivative(solution, t0, x0, MultiIndex::new(1, 0), Direction::X, kind)?;
    Ok((d_x + 5.0 / 3.0 * b * i(1, 0)? * i(0, 2)? - 1.0, i(1, 1)?))
}

//! Seeded property batteries that check each identity and report pass/fail.
//!
//! Every suite owns a ChaCha stream derived from `(seed, suite name)`, so a
//! report depends only on the configuration and suites can run in parallel.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::{equivariance_defect, moving_frame, Branch, FrameKind};
use crate::group::{pr_v_apply, GroupElement, VectorField, PROLONGATION_STEP};
use crate::invariants::{
    commutator_coefficients, invariant_derivative, invariant_table, normalized_invariant,
    reconstruct_generators, recurrence_rhs, slope_frame_i11_identity, Direction, InvariantField,
};
use crate::jet::{Jet, MultiIndex};
use crate::taylor::{kdv_residual, Solution};

/// Draw attempts per sample before a suite gives up on covering it.
pub const MAX_REDRAWS: usize = 200;

/// Smallest pivot magnitude accepted for unconstrained random jets.
const MIN_RANDOM_PIVOT: f64 = 0.25;
/// Smallest pivot magnitude accepted for on-solution jets.
const MIN_SOLUTION_PIVOT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    GroupAxioms,
    DeterminingEqs,
    Equivariance,
    Invariance,
    Definition,
    Phantom,
    KdvResidual,
    Recurrences,
    Commutators,
    Reconstruction,
    Infinitesimal,
    SingularSets,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::GroupAxioms,
        Suite::DeterminingEqs,
        Suite::Equivariance,
        Suite::Invariance,
        Suite::Definition,
        Suite::Phantom,
        Suite::KdvResidual,
        Suite::Recurrences,
        Suite::Commutators,
        Suite::Reconstruction,
        Suite::Infinitesimal,
        Suite::SingularSets,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GroupAxioms => "group-axioms",
            Suite::DeterminingEqs => "determining-eqs",
            Suite::Equivariance => "equivariance",
            Suite::Invariance => "invariance",
            Suite::Definition => "definition",
            Suite::Phantom => "phantom",
            Suite::KdvResidual => "kdv-residual",
            Suite::Recurrences => "recurrences",
            Suite::Commutators => "commutators",
            Suite::Reconstruction => "reconstruction",
            Suite::Infinitesimal => "infinitesimal",
            Suite::SingularSets => "singular-sets",
        }
    }

    pub fn default_samples(self) -> usize {
        match self {
            Suite::GroupAxioms | Suite::DeterminingEqs | Suite::Definition => 100,
            Suite::Equivariance | Suite::Invariance => 200,
            Suite::Phantom | Suite::KdvResidual | Suite::SingularSets => 50,
            Suite::Recurrences
            | Suite::Commutators
            | Suite::Reconstruction
            | Suite::Infinitesimal => 20,
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            Suite::GroupAxioms | Suite::DeterminingEqs => 1e-12,
            Suite::Definition => 1e-10,
            Suite::Equivariance | Suite::Phantom | Suite::KdvResidual => 1e-9,
            Suite::Invariance => 1e-8,
            Suite::Recurrences | Suite::Infinitesimal => 1e-6,
            Suite::Commutators | Suite::Reconstruction => 1e-5,
            Suite::SingularSets => 0.0,
        }
    }

    /// Smallest jet order the suite can run at.
    pub fn min_order(self) -> usize {
        match self {
            Suite::GroupAxioms | Suite::DeterminingEqs | Suite::Equivariance => 1,
            Suite::Commutators => 2,
            Suite::Phantom | Suite::KdvResidual | Suite::SingularSets => 3,
            Suite::Invariance
            | Suite::Definition
            | Suite::Recurrences
            | Suite::Reconstruction
            | Suite::Infinitesimal => 4,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown suite '{s}'")))
    }
}

/// Parses a comma-separated suite list; `all` selects every suite.
pub fn parse_suites(list: &str) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::usage("no suites selected"));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub suites: Vec<Suite>,
    pub seed: u64,
    /// Overrides every suite's default sample count.
    pub samples: Option<usize>,
    /// Jet order for the invariant suites.
    pub order: usize,
    pub tolerance_overrides: BTreeMap<Suite, f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suites: Suite::ALL.to_vec(),
            seed: 42,
            samples: None,
            order: 6,
            tolerance_overrides: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub samples: usize,
    pub max_defect: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub seed: u64,
    /// Sample draws rejected for landing too close to a singular set.
    pub redraws: usize,
    /// Largest defect per sub-check.
    pub breakdown: BTreeMap<String, f64>,
    /// Set when fewer samples than requested could be drawn.
    pub warning: Option<String>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:<16} samples={:<4} max_defect={:.3e} tolerance={:.1e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.samples,
            self.max_defect,
            self.tolerance
        )?;
        if let Some(w) = &self.warning {
            write!(f, " warning: {w}")?;
        }
        Ok(())
    }
}

pub fn run_suite(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    for &suite in &config.suites {
        if config.order < suite.min_order() {
            return Err(Error::usage(format!(
                "suite {suite} needs jet order >= {}, got {}",
                suite.min_order(),
                config.order
            )));
        }
    }
    if config.order > crate::MAX_ORDER {
        return Err(Error::usage(format!(
            "jet order {} exceeds the supported maximum {}",
            config.order,
            crate::MAX_ORDER
        )));
    }
    let mut reports: Vec<CheckReport> = config
        .suites
        .par_iter()
        .map(|&suite| run_one(suite, config))
        .collect::<Result<_>>()?;
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

/// Runs a single suite.
pub fn run_one(suite: Suite, config: &VerifyConfig) -> Result<CheckReport> {
    let samples = config.samples.unwrap_or_else(|| suite.default_samples());
    let tolerance = config
        .tolerance_overrides
        .get(&suite)
        .copied()
        .unwrap_or_else(|| suite.default_tolerance());
    let mut ctx = Ctx {
        rng: ChaCha8Rng::seed_from_u64(config.seed ^ fnv1a(suite.name())),
        order: config.order,
        redraws: 0,
        missed: 0,
        breakdown: BTreeMap::new(),
    };
    for _ in 0..samples {
        match suite {
            Suite::GroupAxioms => group_axioms(&mut ctx),
            Suite::DeterminingEqs => determining_eqs(&mut ctx),
            Suite::Equivariance => equivariance(&mut ctx)?,
            Suite::Invariance => invariance(&mut ctx)?,
            Suite::Definition => definition(&mut ctx)?,
            Suite::Phantom => phantom(&mut ctx)?,
            Suite::KdvResidual => kdv(&mut ctx)?,
            Suite::Recurrences => recurrences(&mut ctx)?,
            Suite::Commutators => commutators(&mut ctx)?,
            Suite::Reconstruction => reconstruction(&mut ctx)?,
            Suite::Infinitesimal => infinitesimal(&mut ctx)?,
            Suite::SingularSets => singular_sets(&mut ctx)?,
        }
    }
    let max_defect = ctx.breakdown.values().copied().fold(0.0, f64::max);
    let passed = max_defect <= tolerance && !max_defect.is_nan();
    let warning = (ctx.missed > 0).then(|| {
        format!(
            "domain coverage: {} draw(s) stayed singular after {MAX_REDRAWS} attempts",
            ctx.missed
        )
    });
    Ok(CheckReport {
        name: suite.name().to_string(),
        samples,
        max_defect,
        tolerance,
        passed,
        seed: config.seed,
        redraws: ctx.redraws,
        breakdown: ctx.breakdown,
        warning,
    })
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// `|a - b| / max(1, |a|, |b|)`: relative for large values, absolute near zero.
pub fn relative_defect(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() / a.abs().max(b.abs()).max(1.0);
    if d.is_nan() {
        f64::INFINITY
    } else {
        d
    }
}

struct Ctx {
    rng: ChaCha8Rng,
    order: usize,
    redraws: usize,
    missed: usize,
    breakdown: BTreeMap<String, f64>,
}

/// A base point on an exact solution.
struct SolutionPoint {
    solution: Solution,
    t0: f64,
    x0: f64,
}

impl Ctx {
    fn record(&mut self, key: impl Into<String>, defect: f64) {
        let d = if defect.is_nan() {
            f64::INFINITY
        } else {
            defect
        };
        let slot = self.breakdown.entry(key.into()).or_insert(0.0);
        *slot = slot.max(d);
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    fn signed(&mut self, lo: f64, hi: f64) -> f64 {
        let m = self.uniform(lo, hi);
        if self.rng.random_bool(0.5) {
            m
        } else {
            -m
        }
    }

    fn group_element(&mut self) -> GroupElement {
        GroupElement::new(
            self.uniform(-2.0, 2.0),
            self.uniform(-2.0, 2.0),
            self.uniform(-1.5, 1.5),
            self.uniform(-0.7, 0.7),
        )
    }

    /// Retries `draw` until it yields a sample; `None` after the retry budget.
    fn draw<T>(&mut self, mut draw: impl FnMut(&mut Self) -> Option<T>) -> Option<T> {
        for _ in 0..MAX_REDRAWS {
            if let Some(v) = draw(self) {
                return Some(v);
            }
            self.redraws += 1;
        }
        self.missed += 1;
        None
    }

    /// Unconstrained jet with coordinates in `[-2, 2]`, regular for every frame
    /// in `kinds`; `branch` forces the sign of the pivot of `kinds[0]`.
    fn random_jet(
        &mut self,
        order: usize,
        kinds: &[FrameKind],
        branch: Option<Branch>,
    ) -> Option<Jet> {
        self.draw(|ctx| {
            let t = ctx.uniform(-2.0, 2.0);
            let x = ctx.uniform(-2.0, 2.0);
            let mut jet = Jet::from_fn(t, x, order, |_| ctx.uniform(-2.0, 2.0)).ok()?;
            if let (Some(b), Some(&kind)) = (branch, kinds.first()) {
                let target = b.sign() * ctx.uniform(MIN_RANDOM_PIVOT, 2.0);
                match kind {
                    FrameKind::XNormalized => jet.set(MultiIndex::new(0, 1), target),
                    FrameKind::TNormalized => {
                        let drift = jet.u() * jet.at(MultiIndex::new(0, 1));
                        jet.set(MultiIndex::new(1, 0), target - drift);
                    }
                }
            }
            kinds
                .iter()
                .all(|k| k.pivot(&jet).is_ok_and(|p| p.abs() >= MIN_RANDOM_PIVOT))
                .then_some(jet)
        })
    }

    /// A point on a soliton or two-soliton solution, alternating by draw.
    fn solution_point(&mut self, kinds: &[FrameKind]) -> Option<SolutionPoint> {
        self.draw(|ctx| {
            let point = if ctx.rng.random_bool(0.5) {
                let speed = ctx.uniform(0.5, 2.0);
                let phase = ctx.uniform(-1.0, 1.0);
                let t0 = ctx.uniform(-1.0, 1.0);
                let offset = ctx.signed(0.3, 4.0) / speed.sqrt();
                SolutionPoint {
                    solution: Solution::soliton(speed, phase),
                    t0,
                    x0: phase + speed * t0 + offset,
                }
            } else {
                let k1 = ctx.uniform(0.7, 1.1);
                let k2 = ctx.uniform(1.4, 1.9);
                SolutionPoint {
                    solution: Solution::two_soliton(
                        k1,
                        k2,
                        ctx.uniform(-1.0, 1.0),
                        ctx.uniform(-1.0, 1.0),
                    ),
                    t0: ctx.uniform(-0.5, 0.5),
                    x0: ctx.uniform(-3.0, 3.0),
                }
            };
            let jet = point.solution.jet_at(point.t0, point.x0, 3).ok()?;
            kinds
                .iter()
                .all(|k| k.pivot(&jet).is_ok_and(|p| p.abs() >= MIN_SOLUTION_PIVOT))
                .then_some(point)
        })
    }
}

fn group_axioms(ctx: &mut Ctx) {
    let (g1, g2, g3) = (
        ctx.group_element(),
        ctx.group_element(),
        ctx.group_element(),
    );
    let param_defect = |a: &GroupElement, b: &GroupElement| {
        a.params()
            .iter()
            .zip(b.params())
            .map(|(x, y)| relative_defect(*x, y))
            .fold(0.0, f64::max)
    };
    let left = g3.compose(&g2).compose(&g1);
    let right = g3.compose(&g2.compose(&g1));
    ctx.record("associativity", param_defect(&left, &right));
    ctx.record(
        "inverse",
        param_defect(&g1.compose(&g1.inverse()), &GroupElement::IDENTITY).max(param_defect(
            &g1.inverse().compose(&g1),
            &GroupElement::IDENTITY,
        )),
    );
    let p = (
        ctx.uniform(-3.0, 3.0),
        ctx.uniform(-3.0, 3.0),
        ctx.uniform(-3.0, 3.0),
    );
    let composed = g2.compose(&g1).act_point(p.0, p.1, p.2);
    let q = g1.act_point(p.0, p.1, p.2);
    let stepwise = g2.act_point(q.0, q.1, q.2);
    ctx.record(
        "composition-law",
        relative_defect(composed.0, stepwise.0)
            .max(relative_defect(composed.1, stepwise.1))
            .max(relative_defect(composed.2, stepwise.2)),
    );
    let back = g1.inverse().act_point(q.0, q.1, q.2);
    ctx.record(
        "inverse-round-trip",
        relative_defect(back.0, p.0)
            .max(relative_defect(back.1, p.1))
            .max(relative_defect(back.2, p.2)),
    );
}

fn determining_eqs(ctx: &mut Ctx) {
    let v = VectorField::new(
        ctx.uniform(-2.0, 2.0),
        ctx.uniform(-2.0, 2.0),
        ctx.uniform(-2.0, 2.0),
        ctx.uniform(-2.0, 2.0),
    );
    let (t, x, u) = (
        ctx.uniform(-5.0, 5.0),
        ctx.uniform(-5.0, 5.0),
        ctx.uniform(-5.0, 5.0),
    );
    let worst = v
        .determining_residuals(t, x, u)
        .iter()
        .fold(0.0f64, |m, r| m.max(r.abs()));
    ctx.record("determining-equations", worst);
}

fn equivariance(ctx: &mut Ctx) -> Result<()> {
    for kind in FrameKind::ALL {
        for branch in [Branch::Positive, Branch::Negative] {
            let Some(jet) = ctx.random_jet(ctx.order, &[kind], Some(branch)) else {
                continue;
            };
            let g = ctx.group_element();
            ctx.record(
                format!("{kind}/{branch:?}"),
                equivariance_defect(&jet, &g, kind)?,
            );
        }
    }
    Ok(())
}

/// Uses unconstrained jets: invariance holds on all of `J^N`, and on-solution
/// jets of high order are too ill-conditioned for the boosted sums.
fn invariance(ctx: &mut Ctx) -> Result<()> {
    let order = ctx.order;
    let Some(jet) = ctx.random_jet(order, &FrameKind::ALL, None) else {
        return Ok(());
    };
    let g = ctx.group_element();
    let moved = g.prolong(&jet);
    for kind in FrameKind::ALL {
        let here = invariant_table(&jet, kind, order)?;
        let there = invariant_table(&moved, kind, order)?;
        let worst = here
            .iter()
            .zip(there.iter())
            .map(|((_, a), (_, b))| relative_defect(a, b))
            .fold(0.0, f64::max);
        ctx.record(format!("{kind}/{:?}", here.branch), worst);
    }
    Ok(())
}

fn definition(ctx: &mut Ctx) -> Result<()> {
    let order = ctx.order;
    let Some(jet) = ctx.random_jet(order, &FrameKind::ALL, None) else {
        return Ok(());
    };
    for kind in FrameKind::ALL {
        let frame = moving_frame(&jet, kind)?;
        let normalized = frame.rho.prolong(&jet);
        let table = invariant_table(&jet, kind, order)?;
        let mut worst = relative_defect(normalized.t, 0.0).max(relative_defect(normalized.x, 0.0));
        for (alpha, value) in table.iter() {
            worst = worst.max(relative_defect(value, normalized.at(alpha)));
        }
        ctx.record(kind.to_string(), worst);
    }
    Ok(())
}

fn phantom(ctx: &mut Ctx) -> Result<()> {
    let Some(p) = ctx.solution_point(&FrameKind::ALL) else {
        return Ok(());
    };
    let jet = p.solution.jet_at(p.t0, p.x0, ctx.order.max(3))?;
    for kind in FrameKind::ALL {
        let table = invariant_table(&jet, kind, 3)?;
        let key = match (kind, table.branch) {
            (FrameKind::TNormalized, Branch::Positive) => "t-normalized: 1 + I_03",
            (FrameKind::TNormalized, Branch::Negative) => "t-normalized: -1 + I_03",
            (FrameKind::XNormalized, _) => "x-normalized: I_10 + I_03",
        };
        ctx.record(key, table.invariantized_kdv_residual()?.abs());
        let pinned = table
            .phantoms()
            .iter()
            .zip([
                0.0,
                0.0,
                table.get(MultiIndex::ZERO).unwrap_or(f64::NAN),
                table.get(kind.unit_index()).unwrap_or(f64::NAN),
            ])
            .map(|(ph, v)| (ph.value - v).abs())
            .fold(0.0, f64::max);
        ctx.record(format!("{kind}: phantom entries"), pinned);
    }
    Ok(())
}

fn kdv(ctx: &mut Ctx) -> Result<()> {
    let order = ctx.order.max(3);
    if let Some(p) = ctx.solution_point(&[]) {
        let jet = p.solution.jet_at(p.t0, p.x0, order)?;
        let name = match p.solution {
            Solution::Soliton { .. } => "soliton",
            _ => "two-soliton",
        };
        ctx.record(name, kdv_residual(&jet)?.abs());
    }
    let t0 = ctx.signed(0.1, 5.0);
    let x0 = ctx.uniform(-5.0, 5.0);
    ctx.record(
        "rational",
        kdv_residual(&Solution::Rational.jet_at(t0, x0, order)?)?.abs(),
    );
    let value = ctx.uniform(-5.0, 5.0);
    ctx.record(
        "constant",
        kdv_residual(&Solution::Constant { value }.jet_at(t0, x0, order)?)?.abs(),
    );
    Ok(())
}

fn recurrences(ctx: &mut Ctx) -> Result<()> {
    let Some(p) = ctx.solution_point(&FrameKind::ALL) else {
        return Ok(());
    };
    let (s, t0, x0) = (&p.solution, p.t0, p.x0);
    let jet = s.jet_at(t0, x0, 4)?;
    let kind = FrameKind::XNormalized;
    let table = invariant_table(&jet, kind, 4)?;
    for alpha in MultiIndex::up_to(3).filter(|a| !kind.is_phantom(*a)) {
        for dir in [Direction::T, Direction::X] {
            let rhs = recurrence_rhs(&table, alpha, dir)?;
            let lhs = invariant_derivative(s, t0, x0, alpha, dir, kind)?;
            ctx.record(
                format!("x-normalized D_{dir:?} I_{alpha}"),
                relative_defect(lhs, rhs),
            );
        }
    }
    let t_table = invariant_table(&jet, FrameKind::TNormalized, 2)?;
    let alpha = MultiIndex::new(0, 1);
    let rhs = recurrence_rhs(&t_table, alpha, Direction::T)?;
    let lhs = invariant_derivative(s, t0, x0, alpha, Direction::T, FrameKind::TNormalized)?;
    ctx.record("t-normalized D_T I_(0,1)", relative_defect(lhs, rhs));
    let (combined, i11) = slope_frame_i11_identity(s, t0, x0)?;
    ctx.record("x-normalized I_11 identity", relative_defect(combined, i11));
    Ok(())
}

fn commutators(ctx: &mut Ctx) -> Result<()> {
    let Some(p) = ctx.solution_point(&FrameKind::ALL) else {
        return Ok(());
    };
    let jet = p.solution.jet_at(p.t0, p.x0, 2)?;
    for kind in FrameKind::ALL {
        let field = InvariantField::new(&p.solution, p.t0, p.x0, kind, 6)?;
        let (along_t, along_x) =
            commutator_coefficients(&invariant_table(&jet, kind, 2)?)?.t_then_x();
        for alpha in [
            MultiIndex::new(0, 1),
            MultiIndex::new(0, 2),
            MultiIndex::new(1, 0),
        ] {
            let f = field.invariant(alpha)?;
            let nested = field.commutator(&f)?.constant_term();
            let d_t = field.differentiate(Direction::T, &f)?.constant_term();
            let d_x = field.differentiate(Direction::X, &f)?.constant_term();
            ctx.record(
                format!("{kind} [D_T,D_X] I_{alpha}"),
                relative_defect(nested, along_t * d_t + along_x * d_x),
            );
        }
    }
    Ok(())
}

fn reconstruction(ctx: &mut Ctx) -> Result<()> {
    for kind in FrameKind::ALL {
        let attempt = ctx.draw(|ctx| {
            let p = ctx.solution_point(&FrameKind::ALL)?;
            match reconstruct_generators(&p.solution, p.t0, p.x0, kind) {
                Err(Error::Degenerate { .. }) => None,
                other => Some(other),
            }
        });
        if let Some(r) = attempt {
            let r = r?;
            ctx.record(
                format!("{kind} I_20"),
                relative_defect(r.reconstructed, r.direct),
            );
            for (alpha, rebuilt, direct) in &r.intermediates {
                ctx.record(
                    format!("{kind} I_{alpha}"),
                    relative_defect(*rebuilt, *direct),
                );
            }
        }
    }
    Ok(())
}

fn infinitesimal(ctx: &mut Ctx) -> Result<()> {
    let order = ctx.order.min(4);
    let Some(jet) = ctx.random_jet(order, &FrameKind::ALL, None) else {
        return Ok(());
    };
    for kind in FrameKind::ALL {
        for alpha in MultiIndex::up_to(order) {
            let value = normalized_invariant(&jet, alpha, kind)?;
            for (name, v) in ["time", "space", "boost", "scaling"]
                .iter()
                .zip(VectorField::BASIS)
            {
                let applied = pr_v_apply(
                    &v,
                    |j| normalized_invariant(j, alpha, kind),
                    &jet,
                    PROLONGATION_STEP,
                )?;
                ctx.record(
                    format!("{kind}/{name}"),
                    applied.abs() / (value.abs() + 1.0),
                );
            }
        }
    }
    Ok(())
}

fn singular_sets(ctx: &mut Ctx) -> Result<()> {
    let t0 = ctx.uniform(0.05, 5.0);
    let x0 = ctx.uniform(-5.0, 5.0);
    let jet = Solution::Rational.jet_at(t0, x0, 3)?;
    let t_singular = matches!(
        moving_frame(&jet, FrameKind::TNormalized),
        Err(Error::SingularFrame { .. })
    );
    let x_regular = moving_frame(&jet, FrameKind::XNormalized).is_ok();
    ctx.record(
        "rational: t-normalized singular",
        if t_singular { 0.0 } else { 1.0 },
    );
    ctx.record(
        "rational: x-normalized regular",
        if x_regular { 0.0 } else { 1.0 },
    );
    let constant = Solution::Constant {
        value: ctx.uniform(-5.0, 5.0),
    }
    .jet_at(t0, x0, 3)?;
    let both = FrameKind::ALL
        .iter()
        .all(|&k| matches!(moving_frame(&constant, k), Err(Error::SingularFrame { .. })));
    ctx.record("constant: both singular", if both { 0.0 } else { 1.0 });
    Ok(())
}

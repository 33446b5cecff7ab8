#![allow(dead_code)]

use jetframe::{Jet, MultiIndex};

/// `|a - b| / max(1, |a|, |b|)`.
pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}

/// Central-difference weights for the n-th derivative, O(h²).
fn stencil(n: usize, h: f64) -> Vec<(f64, f64)> {
    (0..=n)
        .map(|k| {
            let mut c = 1.0;
            for i in 0..k {
                c = c * (n - i) as f64 / (i + 1) as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            ((n as f64 / 2.0 - k as f64) * h, sign * c / h.powi(n as i32))
        })
        .collect()
}

fn mixed_partial(f: &dyn Fn(f64, f64) -> f64, t: f64, x: f64, alpha: MultiIndex, h: f64) -> f64 {
    let st = stencil(alpha.t, h);
    let sx = stencil(alpha.x, h);
    let mut acc = 0.0;
    for &(dt, wt) in &st {
        for &(dx, wx) in &sx {
            acc += wt * wx * f(t + dt, x + dx);
        }
    }
    acc
}

/// `∂^α f(t, x)` by tensor-product central differences with one Richardson step.
pub fn fd_partial(f: &dyn Fn(f64, f64) -> f64, t: f64, x: f64, alpha: MultiIndex, h: f64) -> f64 {
    if alpha == MultiIndex::ZERO {
        return f(t, x);
    }
    let coarse = mixed_partial(f, t, x, alpha, h);
    let fine = mixed_partial(f, t, x, alpha, h / 2.0);
    (4.0 * fine - coarse) / 3.0
}

/// `3c sech²(½√c (x - c t - phase))` evaluated directly.
pub fn soliton_value(speed: f64, phase: f64, t: f64, x: f64) -> f64 {
    let arg = 0.5 * speed.sqrt() * (x - speed * t - phase);
    3.0 * speed / arg.cosh().powi(2)
}

/// Deterministic jet with all coordinates in `[-2, 2]` from a simple LCG.
pub fn lcg_jet(seed: u64, order: usize) -> Jet {
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 11) as f64 / (1u64 << 53) as f64) * 4.0 - 2.0
    };
    let t = next();
    let x = next();
    Jet::from_fn(t, x, order, |_| next()).unwrap()
}

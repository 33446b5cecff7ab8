//! Exact integer binomials and factorials, converted to `f64` at the end.

use std::sync::OnceLock;

/// Largest jet order for which binomial weights are tabulated.
pub const MAX_ORDER: usize = 30;

fn pascal() -> &'static [[u64; MAX_ORDER + 1]; MAX_ORDER + 1] {
    static TABLE: OnceLock<[[u64; MAX_ORDER + 1]; MAX_ORDER + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0u64; MAX_ORDER + 1]; MAX_ORDER + 1];
        for n in 0..=MAX_ORDER {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    })
}

/// `C(n, k)` for `n <= MAX_ORDER`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> f64 {
    assert!(
        n <= MAX_ORDER,
        "binomial table is capped at n = {MAX_ORDER}"
    );
    if k > n {
        0.0
    } else {
        pascal()[n][k] as f64
    }
}

/// `n!` for `n <= 34`, accumulated in `u128`.
pub fn factorial(n: usize) -> f64 {
    assert!(n <= 34, "factorial overflows u128 beyond 34!");
    (1..=n as u128).product::<u128>() as f64
}

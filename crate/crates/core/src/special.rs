//! Stable scalar kernels and small geometric helpers.
//!
//! The solution formulas combine exponentials whose arguments nearly cancel
//! close to the degenerate root and as `r -> 0`; these kernels switch to a
//! 4-term Taylor series for `|x| < 1e-4` so the removable singularities never
//! amplify rounding error.

/// Threshold below which the kernels use their Taylor expansion.
pub const KERNEL_TAYLOR_CUTOFF: f64 = 1e-4;

/// `sinh(x)/x`, equal to 1 at `x = 0`.
pub fn sinh_ratio(x: f64) -> f64 {
    if x.abs() < KERNEL_TAYLOR_CUTOFF {
        let x2 = x * x;
        1.0 + x2 / 6.0 + x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0
    } else {
        x.sinh() / x
    }
}

/// `sin(x)/x`, equal to 1 at `x = 0`.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < KERNEL_TAYLOR_CUTOFF {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0
    } else {
        x.sin() / x
    }
}

/// `(1 - e^{-x})/x`, equal to 1 at `x = 0`.
pub fn em1_ratio(x: f64) -> f64 {
    if x.abs() < KERNEL_TAYLOR_CUTOFF {
        1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0
    } else {
        -(-x).exp_m1() / x
    }
}

/// `e^{-p} - e^{-q}` for `p, q >= 0` without cancellation: the larger
/// exponential is factored out and the difference goes through `exp_m1`.
pub fn exp_diff(p: f64, q: f64) -> f64 {
    let (lo, gap, sign) = if p <= q { (p, q - p, 1.0) } else { (q, p - q, -1.0) };
    sign * (-lo).exp() * -(-gap).exp_m1()
}

/// Fixed-order pairwise reduction. Deterministic for a given slice order and
/// better conditioned than left-to-right summation on long panel lists.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        n if n <= 8 => xs.iter().sum(),
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

/// Surface area `ω_n` of the unit sphere in `R^n` (`ω₁ = 2`, `ω₂ = 2π`, ...).
pub fn unit_sphere_area(n: u32) -> f64 {
    assert!(n >= 1, "dimension must be positive");
    // ω_n = 2 π^{n/2} / Γ(n/2) with Γ at integer or half-integer argument.
    let half = f64::from(n) / 2.0;
    let mut gamma = if n % 2 == 0 { 1.0 } else { std::f64::consts::PI.sqrt() };
    let mut arg = if n % 2 == 0 { 1.0 } else { 0.5 };
    while arg + 1e-9 < half {
        gamma *= arg;
        arg += 1.0;
    }
    2.0 * std::f64::consts::PI.powf(half) / gamma
}

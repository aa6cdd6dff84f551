//! Model parameters, the damping symbol, characteristic roots and the
//! frequency-zone thresholds.
//!
//! Each Fourier mode of magnitude `r` evolves by
//! `v'' + log(1 + r^{2θ}) v' + r² v = 0`, whose roots
//! `λ± = (-L ± sqrt(L² - 4r²))/2` with `L = log(1 + r^{2θ})` are real below a
//! threshold `δ` and complex above it. Three further numbers `η³ < η < δ`
//! and `β ≤ η³` mark where the comparison inequalities used by the norm
//! estimates hold; they partition the frequency axis for quadrature.

use crate::error::{Error, Result};
use crate::rootfind::{bisect_newton, bracket_positive_left};

/// Half-width of the degenerate band, relative to the natural discriminant
/// scale `L² + 4r²`. Inside the band the double-root limit form is used,
/// which avoids cancellation in `(e^{tλ+} - e^{tλ-})/(λ+ - λ-)`.
///
/// The band is relative rather than absolute because the discriminant itself
/// tends to 0 as `r -> 0` for every θ, while the roots stay well separated
/// there; an absolute band would swallow the whole low-frequency end.
pub const DEGENERATE_BAND: f64 = 1e-9;

/// Dimension and damping exponent, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    n: u32,
    theta: f64,
}

impl ModelParams {
    /// Requires `n >= 1` and `0 < θ < 1/2` (open interval).
    pub fn new(n: u32, theta: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain(format!("dimension n must be >= 1, got {n}")));
        }
        if !(theta > 0.0 && theta < 0.5) {
            return Err(Error::Domain(format!(
                "damping exponent theta must lie in the open interval (0, 1/2), got {theta}"
            )));
        }
        Ok(Self { n, theta })
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Damping symbol `L(r) = log(1 + r^{2θ})`; strictly increasing, 0 at 0.
    pub fn damping_symbol(&self, r: f64) -> f64 {
        debug_assert!(r >= 0.0);
        r.powf(2.0 * self.theta).ln_1p()
    }

    /// `f(r) = log(1 + r^{2θ}) - 2r`, the factor of the discriminant whose
    /// unique positive root is `δ`.
    pub fn delta_defect(&self, r: f64) -> f64 {
        self.damping_symbol(r) - 2.0 * r
    }

    fn delta_defect_derivative(&self, r: f64) -> f64 {
        let p = r.powf(2.0 * self.theta);
        2.0 * self.theta * p / (r * (1.0 + p)) - 2.0
    }

    /// Discriminant `L(r)² - 4r²`, evaluated through the factorization
    /// `(L - 2r)(L + 2r)` which is better conditioned near its root.
    pub fn discriminant(&self, r: f64) -> f64 {
        let l = self.damping_symbol(r);
        (l - 2.0 * r) * (l + 2.0 * r)
    }

    /// Characteristic roots of the mode ODE at frequency magnitude `r > 0`.
    pub fn char_roots(&self, r: f64) -> CharRoots {
        debug_assert!(r > 0.0);
        let l = self.damping_symbol(r);
        let disc = (l - 2.0 * r) * (l + 2.0 * r);
        let band = DEGENERATE_BAND * (l * l + 4.0 * r * r);
        if disc >= band {
            // λ- by the stable branch of the quadratic formula, λ+ via Vieta
            // (λ+ λ- = r²) to dodge the subtraction of nearly equal terms.
            let s = disc.sqrt();
            let lambda_minus = -0.5 * (l + s);
            let lambda_plus = (r * r) / lambda_minus;
            CharRoots::Real { lambda_plus, lambda_minus }
        } else if disc <= -band {
            CharRoots::Complex { a: 0.5 * l, b: 0.5 * (-disc).sqrt() }
        } else {
            CharRoots::Double { lambda: -0.5 * l }
        }
    }

    /// The factor `g` in `λ- = -(L(r)/2) g(r^{1/3})`:
    /// `g(s) = 1 + sqrt(1 - 4 s⁶ / log²(1 + s^{6θ}))`, with the limit value 2
    /// at `s = 0`. Values stay in `[1, 2]` on the accepted range.
    pub fn lambda_minus_factor(&self, s: f64, thresholds: &Thresholds) -> Result<f64> {
        if !(0.0..=thresholds.delta()).contains(&s) {
            return Err(Error::Domain(format!(
                "lambda_minus_factor argument {s} outside [0, delta = {}]",
                thresholds.delta()
            )));
        }
        if s == 0.0 {
            return Ok(2.0);
        }
        let cube = s * s * s;
        let l6 = self.damping_symbol(cube);
        // radicand = 1 - (2 s³ / L(s³))², via the factored discriminant
        let radicand = ((l6 - 2.0 * cube) * (l6 + 2.0 * cube)) / (l6 * l6);
        Ok(1.0 + radicand.max(0.0).sqrt())
    }

    /// Correction `R(r)` in the root-gap identity
    /// `1/(λ+ - λ-) = 1/L(r) + R(r)`, valid on the low zone `0 < r <= η³`
    /// where the radicand is bounded away from 0.
    pub fn root_gap_correction(&self, r: f64, thresholds: &Thresholds) -> Result<f64> {
        if !(r > 0.0 && r <= thresholds.eta_cubed()) {
            return Err(Error::Domain(format!(
                "root_gap_correction argument {r} outside (0, eta^3 = {}]",
                thresholds.eta_cubed()
            )));
        }
        let l = self.damping_symbol(r);
        let radicand = ((l - 2.0 * r) * (l + 2.0 * r)) / (l * l);
        let w = radicand.sqrt();
        Ok(4.0 * r * r / (l * l * l * w * (1.0 + w)))
    }
}

/// Frequency-zone classification of the characteristic roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Zone {
    Low,
    Degenerate,
    High,
}

/// Characteristic roots of `λ² + L(r) λ + r² = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CharRoots {
    /// Real distinct roots, both nonpositive (`r < δ`).
    Real { lambda_plus: f64, lambda_minus: f64 },
    /// Double root `λ = -L/2` inside the degenerate band around `δ`.
    Double { lambda: f64 },
    /// Complex pair `-a ± i b` (`r > δ`).
    Complex { a: f64, b: f64 },
}

impl CharRoots {
    pub fn zone(&self) -> Zone {
        match self {
            CharRoots::Real { .. } => Zone::Low,
            CharRoots::Double { .. } => Zone::Degenerate,
            CharRoots::Complex { .. } => Zone::High,
        }
    }
}

/// The thresholds `0 < β <= η³ < η < δ < 1` partitioning the frequency axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    delta: f64,
    eta: f64,
    eta_cubed: f64,
    beta: f64,
}

impl Thresholds {
    /// Compute all four thresholds for the given parameters.
    ///
    /// * `δ` — unique root of `log(1 + r^{2θ}) - 2r` on `(0, 1)`, found by
    ///   bracketed bisection plus one Newton polish;
    /// * `η = 25^{-1/(2-4θ)}` — the condition `r^{2-4θ} <= 1/25` is monotone
    ///   in `r`, so its supremum is this closed form;
    /// * `β` — where `(2/25³) L(r)² - 4r²` changes sign on `(0, η³]`.
    pub fn compute(params: &ModelParams) -> Result<Self> {
        let f = |r: f64| params.delta_defect(r);
        let df = |r: f64| params.delta_defect_derivative(r);
        let lo = bracket_positive_left(f, 0.5, 4000)?;
        let delta = bisect_newton(f, df, lo, 1.0)?;

        let eta = 25f64.powf(-1.0 / (2.0 - 4.0 * params.theta()));
        let eta_cubed = eta * eta * eta;

        // (2/25³) L² >= 4r²  <=>  sqrt(2/25³) L - 2r >= 0
        let c = (2.0 / 25f64.powi(3)).sqrt();
        let fb = |r: f64| c * params.damping_symbol(r) - 2.0 * r;
        let dfb = |r: f64| c * (params.delta_defect_derivative(r) + 2.0) - 2.0;
        let lo_b = bracket_positive_left(fb, eta_cubed * 0.5, 4000)?;
        let f_hi = fb(eta_cubed);
        let beta = if f_hi >= 0.0 { eta_cubed } else { bisect_newton(fb, dfb, lo_b, eta_cubed)? };

        let t = Self { delta, eta, eta_cubed, beta };
        if !(0.0 < t.beta && t.beta <= t.eta_cubed && t.eta_cubed < t.eta && t.eta < t.delta && t.delta < 1.0) {
            return Err(Error::Domain(format!("threshold chain violated: {t:?}")));
        }
        Ok(t)
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn eta_cubed(&self) -> f64 {
        self.eta_cubed
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, theta: f64) -> ModelParams {
        ModelParams::new(n, theta).unwrap()
    }

    #[test]
    fn construction_rejects_invalid_inputs() {
        assert!(ModelParams::new(0, 0.2).is_err());
        assert!(ModelParams::new(1, 0.0).is_err());
        assert!(ModelParams::new(1, 0.5).is_err());
        assert!(ModelParams::new(1, -0.1).is_err());
        assert!(ModelParams::new(1, f64::NAN).is_err());
        assert!(ModelParams::new(3, 0.49).is_ok());
    }

    #[test]
    fn damping_symbol_values() {
        let p = params(1, 0.25);
        assert_eq!(p.damping_symbol(0.0), 0.0);
        assert!((p.damping_symbol(1.0) - std::f64::consts::LN_2).abs() < 1e-16);
        // 1/2 x <= log(1+x) <= x on [0,1], with x = r^{2θ}
        let r: f64 = 0.5;
        let x = r.powf(0.5);
        let v = p.damping_symbol(r);
        assert!(((1.0 + x).ln() - v).abs() < 1e-15 * v);
        assert!(0.5 * x <= v && v <= 1.5 * x);
    }

    #[test]
    fn damping_symbol_strictly_increasing() {
        let p = params(2, 0.3);
        let mut prev = 0.0;
        for k in 1..=400 {
            let r = f64::from(k) * 0.05;
            let v = p.damping_symbol(r);
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn discriminant_signs() {
        let p = params(1, 0.25);
        assert_eq!(p.discriminant(0.0), 0.0);
        // log²2 - 4 < 0 at r = 1
        assert!(p.discriminant(1.0) < 0.0);
        let thr = Thresholds::compute(&p).unwrap();
        assert!(p.discriminant(0.5 * thr.delta()) > 0.0);
        assert!(p.discriminant(2.0 * thr.delta()) < 0.0);
    }

    #[test]
    fn delta_matches_plain_bisection_oracle() {
        // Independent oracle: raw bisection on f(r) = log(1+r^{2θ}) - 2r,
        // no Newton polish, 200 iterations.
        let p = params(1, 0.3);
        let f = |r: f64| p.delta_defect(r);
        let (mut a, mut b) = (1e-6, 1.0);
        assert!(f(a) > 0.0 && f(b) < 0.0);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if f(m) > 0.0 {
                a = m;
            } else {
                b = m;
            }
        }
        let delta_oracle = 0.5 * (a + b);
        let thr = Thresholds::compute(&p).unwrap();
        assert!((thr.delta() - delta_oracle).abs() < 1e-10);
        assert!(p.discriminant(thr.delta()).abs() < 1e-10);
    }

    #[test]
    fn delta_matches_secant_oracle_for_theta_03() {
        // Second independent root-finder: secant iteration from the bracket.
        let p = params(1, 0.3);
        let f = |r: f64| p.delta_defect(r);
        let (mut x0, mut x1) = (0.05, 1.0);
        for _ in 0..200 {
            let (f0, f1) = (f(x0), f(x1));
            if (f1 - f0).abs() < 1e-300 {
                break;
            }
            let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
            x0 = x1;
            x1 = x2.clamp(1e-12, 1.0);
            if (x1 - x0).abs() < 1e-15 {
                break;
            }
        }
        let thr = Thresholds::compute(&p).unwrap();
        assert!((thr.delta() - x1).abs() < 1e-10);
    }

    #[test]
    fn delta_root_residual_below_1e12_across_theta_grid() {
        for k in 1..=9 {
            let theta = 0.05 * f64::from(k);
            let p = params(1, theta);
            let thr = Thresholds::compute(&p).unwrap();
            assert!(
                p.delta_defect(thr.delta()).abs() < 1e-12,
                "theta={theta}: |f(delta)| = {:e}",
                p.delta_defect(thr.delta()).abs()
            );
        }
    }

    #[test]
    fn eta_closed_form_for_theta_quarter() {
        let p = params(1, 0.25);
        let thr = Thresholds::compute(&p).unwrap();
        // 25^{-1/(2-1)} = 0.04
        assert!((thr.eta() - 0.04).abs() < 1e-15);
    }

    #[test]
    fn eta_is_the_boundary_of_the_sup_condition() {
        for &theta in &[0.1, 0.25, 0.4] {
            let p = params(1, theta);
            let thr = Thresholds::compute(&p).unwrap();
            let cond = |r: f64| r.powf(2.0 - 4.0 * theta) - 1.0 / 25.0;
            assert!(cond(thr.eta() * (1.0 - 1e-6)) <= 0.0);
            assert!(cond(thr.eta() * (1.0 + 1e-6)) > 0.0);
            // η³ satisfies the same condition with 1/25³
            let cond3 = |r: f64| r.powf(2.0 - 4.0 * theta) - 25f64.powi(-3);
            assert!(cond3(thr.eta_cubed() * (1.0 - 1e-6)) <= 0.0);
            assert!(cond3(thr.eta_cubed() * (1.0 + 1e-6)) > 0.0);
        }
    }

    #[test]
    fn threshold_chain_across_theta_grid() {
        for k in 1..=9 {
            let theta = 0.05 * f64::from(k);
            let thr = Thresholds::compute(&params(1, theta)).unwrap();
            assert!(
                0.0 < thr.beta()
                    && thr.beta() <= thr.eta_cubed()
                    && thr.eta_cubed() < thr.eta()
                    && thr.eta() < thr.delta()
                    && thr.delta() < 1.0,
                "chain broken at theta={theta}: {thr:?}"
            );
        }
    }

    #[test]
    fn beta_sign_change_is_where_claimed() {
        let p = params(1, 0.2);
        let thr = Thresholds::compute(&p).unwrap();
        let c = 2.0 / 25f64.powi(3);
        let g = |r: f64| c * p.damping_symbol(r).powi(2) - 4.0 * r * r;
        assert!(g(thr.beta() * (1.0 - 1e-6)) > 0.0);
        assert!(g(thr.beta() * (1.0 + 1e-6)) < 0.0);
    }

    #[test]
    fn char_roots_small_r_bounds_theta_02() {
        // -(5/2) r^{2-2θ} <= λ+ <= -(1/2) r^{2-2θ} on the low zone
        let p = params(1, 0.2);
        let r: f64 = 1e-4;
        match p.char_roots(r) {
            CharRoots::Real { lambda_plus, .. } => {
                let scale = r.powf(2.0 - 2.0 * 0.2);
                assert!(lambda_plus >= -2.5 * scale && lambda_plus <= -0.5 * scale);
            }
            other => panic!("expected real roots at r=1e-4, got {other:?}"),
        }
    }

    #[test]
    fn char_roots_double_at_delta() {
        let p = params(1, 0.25);
        let thr = Thresholds::compute(&p).unwrap();
        match p.char_roots(thr.delta()) {
            CharRoots::Double { lambda } => {
                let expected = -0.5 * p.damping_symbol(thr.delta());
                assert!((lambda - expected).abs() < 1e-14);
            }
            other => panic!("expected double root at delta, got {other:?}"),
        }
    }

    #[test]
    fn char_roots_complex_example() {
        let p = params(1, 0.3);
        match p.char_roots(2.0) {
            CharRoots::Complex { a, b } => {
                let l = (1.0 + 2f64.powf(0.6)).ln();
                assert!((a - 0.5 * l).abs() < 1e-15);
                assert!((b - 0.5 * (16.0 - l * l).sqrt()).abs() < 1e-13);
                // a² + b² = r²
                assert!(((a * a + b * b) - 4.0).abs() < 1e-12 * 4.0);
            }
            other => panic!("expected complex roots at r=2, got {other:?}"),
        }
    }

    #[test]
    fn vieta_identities_on_sampled_low_zone() {
        use rand::{Rng, SeedableRng};
        let p = params(2, 0.2);
        let thr = Thresholds::compute(&p).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut checked = 0;
        while checked < 1000 {
            // log-uniform in (1e-8, delta)
            let u: f64 = rng.random();
            let r = thr.delta() * (1e-8f64).powf(u);
            if let CharRoots::Real { lambda_plus, lambda_minus } = p.char_roots(r) {
                let l = p.damping_symbol(r);
                let sum = lambda_plus + lambda_minus;
                let prod = lambda_plus * lambda_minus;
                assert!((sum + l).abs() <= 1e-12 * l, "sum violated at r={r}");
                assert!((prod - r * r).abs() <= 1e-12 * r * r, "product violated at r={r}");
                checked += 1;
            }
        }
    }

    #[test]
    fn zone_partition_matches_discriminant_sign() {
        use rand::{Rng, SeedableRng};
        let p = params(1, 0.3);
        let thr = Thresholds::compute(&p).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let u: f64 = rng.random();
            let r = 1e-8 * (1e10f64).powf(u); // log-uniform in (1e-8, 1e2)
            if (r - thr.delta()).abs() <= 1e-9 {
                continue;
            }
            let disc = p.discriminant(r);
            assert_eq!(disc > 0.0, r < thr.delta(), "partition broken at r={r}");
        }
    }

    #[test]
    fn root_magnitude_equivalences_on_eta_zone() {
        // -λ- in [3/4, 1]·L(r) and -λ+ in [1/3, 5]·log(1 + r^{2-2θ}) for r <= η
        for &theta in &[0.1, 0.25, 0.4] {
            let p = params(1, theta);
            let thr = Thresholds::compute(&p).unwrap();
            for k in 1..=60 {
                let r = thr.eta() * (f64::from(k) / 60.0);
                let l = p.damping_symbol(r);
                let l_high = r.powf(2.0 - 2.0 * theta).ln_1p();
                match p.char_roots(r) {
                    CharRoots::Real { lambda_plus, lambda_minus } => {
                        assert!(-lambda_minus >= 0.75 * l && -lambda_minus <= l);
                        assert!(-lambda_plus >= l_high / 3.0 && -lambda_plus <= 5.0 * l_high);
                    }
                    other => panic!("roots must be real on (0, eta], got {other:?} at r={r}"),
                }
            }
        }
    }

    #[test]
    fn lambda_minus_factor_range_and_endpoints() {
        let p = params(1, 0.2);
        let thr = Thresholds::compute(&p).unwrap();
        assert_eq!(p.lambda_minus_factor(0.0, &thr).unwrap(), 2.0);
        // dense grid: 1 <= g <= 2 and nonincreasing
        let mut prev = 2.0;
        for k in 0..=10_000 {
            let s = thr.delta() * (f64::from(k) / 10_000.0);
            let g = p.lambda_minus_factor(s, &thr).unwrap();
            assert!((1.0..=2.0).contains(&g), "g out of range at s={s}: {g}");
            assert!(g <= prev + 1e-12, "g must be nonincreasing, s={s}");
            prev = g;
        }
        // The radicand at s = δ equals disc(δ³)/L(δ³)², which is strictly
        // positive because δ³ < δ; so g(δ) sits strictly inside (1, 2).
        let g_delta = p.lambda_minus_factor(thr.delta(), &thr).unwrap();
        assert!(g_delta > 1.0 && g_delta < 2.0);
        let disc_cubed = p.discriminant(thr.delta().powi(3));
        let l6 = p.damping_symbol(thr.delta().powi(3));
        let expected = 1.0 + (disc_cubed / (l6 * l6)).sqrt();
        assert!((g_delta - expected).abs() < 1e-13);
        assert!(p.lambda_minus_factor(thr.delta() * 1.01, &thr).is_err());
        assert!(p.lambda_minus_factor(-0.1, &thr).is_err());
    }

    #[test]
    fn lambda_minus_factor_reproduces_lambda_minus() {
        // λ- = -(L/2) g(r^{1/3}) on the low zone
        for &theta in &[0.15, 1.0 / 3.0, 0.42] {
            let p = params(1, theta);
            let thr = Thresholds::compute(&p).unwrap();
            for k in 1..=40 {
                let r = thr.eta_cubed() * (f64::from(k) / 40.0);
                let g = p.lambda_minus_factor(r.cbrt(), &thr).unwrap();
                match p.char_roots(r) {
                    CharRoots::Real { lambda_minus, .. } => {
                        let via_g = -0.5 * p.damping_symbol(r) * g;
                        assert!(
                            (via_g - lambda_minus).abs() <= 1e-12 * lambda_minus.abs(),
                            "bridge identity failed at theta={theta}, r={r}"
                        );
                    }
                    other => panic!("expected real roots, got {other:?}"),
                }
            }
        }
    }

    #[test]
    fn root_gap_correction_satisfies_gap_identity() {
        for &theta in &[0.1, 0.25, 1.0 / 3.0, 0.42] {
            let p = params(1, theta);
            let thr = Thresholds::compute(&p).unwrap();
            for k in 1..=50 {
                let r = thr.eta_cubed() * (f64::from(k) / 50.0);
                let correction = p.root_gap_correction(r, &thr).unwrap();
                match p.char_roots(r) {
                    CharRoots::Real { lambda_plus, lambda_minus } => {
                        let gap_inv = 1.0 / (lambda_plus - lambda_minus);
                        let reconstructed = 1.0 / p.damping_symbol(r) + correction;
                        assert!(
                            (gap_inv - reconstructed).abs() <= 1e-10 * gap_inv.abs(),
                            "gap identity failed at theta={theta}, r={r}"
                        );
                    }
                    other => panic!("expected real roots, got {other:?}"),
                }
            }
        }
    }

    #[test]
    fn root_gap_correction_limits_at_zero() {
        // The gap identity forces R(r) -> 2 r^{2-6θ} (1 + o(1)) as r -> 0:
        // from 1/(λ+-λ-) - 1/L = (L - s)/(L s) with s = L sqrt(1 - 4r²/L²),
        // the leading term is 2r²/L³. Hence the limit is 0 for θ < 1/3 and
        // 2 for θ = 1/3; likewise sqrt(r) R(r) -> 2 at θ = 5/12.
        let thr = |theta: f64| Thresholds::compute(&params(1, theta)).unwrap();

        let p_small = params(1, 0.2);
        let r_small = p_small.root_gap_correction(1e-6, &thr(0.2)).unwrap();
        assert!(r_small.abs() < 1e-3, "R(1e-6) at theta=0.2 should vanish, got {r_small}");

        // η³(1/3) ≈ 5.1e-7 and η³(5/12) ≈ 2.6e-13 bound the admissible radii.
        let thr_third = thr(1.0 / 3.0);
        let p_third = params(1, 1.0 / 3.0);
        let r_third = p_third
            .root_gap_correction(0.5 * thr_third.eta_cubed(), &thr_third)
            .unwrap();
        assert!((r_third - 2.0).abs() < 0.01 * 2.0, "R(0+) at theta=1/3: {r_third}");

        let thr512 = thr(5.0 / 12.0);
        let p512 = params(1, 5.0 / 12.0);
        let r_eval = 0.5 * thr512.eta_cubed();
        let scaled = r_eval.sqrt() * p512.root_gap_correction(r_eval, &thr512).unwrap();
        assert!((scaled - 2.0).abs() < 0.02 * 2.0, "sqrt(r) R(r) at theta=5/12: {scaled}");
    }

    #[test]
    fn root_gap_correction_domain_guard() {
        let p = params(1, 0.25);
        let thr = Thresholds::compute(&p).unwrap();
        assert!(p.root_gap_correction(0.0, &thr).is_err());
        assert!(p.root_gap_correction(thr.eta_cubed() * 1.01, &thr).is_err());
    }
}

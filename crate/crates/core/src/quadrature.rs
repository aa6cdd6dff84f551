//! Adaptive radial quadrature on `(0, ∞)` and the reference integrals
//! `I_p`, `J_p` with their asymptotic laws.
//!
//! The panel rule is a 15-point Kronrod extension of 7-point Gauss with the
//! QUADPACK error rescaling. Intervals between consecutive split points are
//! bisected adaptively; toward `r = 0` the mesh is graded geometrically
//! (panels `[s·2^{-k-1}, s·2^{-k}]`) so integrable power singularities
//! `r^q`, `q > -1`, converge without special weights, and toward `r = ∞`
//! panels double until their contribution is negligible.
//!
//! Large negative exponents are always formed as `exp(-t·log1p(r^a))`;
//! powering `(1 + r^a)^{-t}` directly would underflow through rounding.
//!
//! Panel results are combined by a fixed-order pairwise reduction, so a given
//! spec reproduces its values bit-for-bit.

use crate::error::{Error, Result};
use crate::special::pairwise_sum;

/// Tolerances and zone-aware split points for one family of integrals.
#[derive(Debug, Clone)]
pub struct QuadratureSpec {
    /// Relative tolerance on each accepted panel (default `1e-9`).
    pub rel_tol: f64,
    /// Absolute floor below which contributions are considered negligible
    /// (default `1e-14`). Set to 0 for purely relative integration of
    /// quantities with very small magnitude.
    pub abs_tol: f64,
    /// Strictly increasing positive interior split points.
    pub split_points: Vec<f64>,
    /// Bisection depth limit per section.
    pub max_depth: u32,
    /// Cap on geometric grading levels toward 0.
    pub max_grading_levels: u32,
    /// Cap on tail doublings toward ∞.
    pub max_tail_doublings: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-14,
            split_points: vec![1.0],
            max_depth: 64,
            max_grading_levels: 1400,
            max_tail_doublings: 240,
        }
    }
}

impl QuadratureSpec {
    pub fn with_splits(mut self, splits: &[f64]) -> Self {
        let mut pts: Vec<f64> = splits.iter().copied().filter(|s| s.is_finite() && *s > 0.0).collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs());
        self.split_points = pts;
        self
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::Domain(format!("rel_tol must be positive, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::Domain(format!("abs_tol must be nonnegative, got {}", self.abs_tol)));
        }
        let mut prev = 0.0;
        for &s in &self.split_points {
            if !(s.is_finite() && s > prev) {
                return Err(Error::Domain(format!(
                    "split points must be finite, positive and strictly increasing: {:?}",
                    self.split_points
                )));
            }
            prev = s;
        }
        Ok(())
    }
}

/// Value, conservative error estimate, and integrand evaluation count.
#[derive(Debug, Clone, Copy)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

// 15-point Kronrod nodes (positive half), embedding 7-point Gauss at the
// odd indices; QUADPACK dqk15 constants.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * res_abs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

/// One Gauss–Kronrod 15 panel: (value, error estimate, resabs).
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    let mut res_kronrod = WGK[7] * f_center;
    let mut res_gauss = WG[3] * f_center;
    let mut res_abs = WGK[7] * f_center.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let v1 = f(center - dx);
        let v2 = f(center + dx);
        fv1[j] = v1;
        fv2[j] = v2;
        let sum = v1 + v2;
        res_kronrod += WGK[j] * sum;
        res_abs += WGK[j] * (v1.abs() + v2.abs());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * sum;
        }
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_kronrod * half;
    if !value.is_finite() {
        return Err(Error::NonFiniteIntegrand(center));
    }
    let err = rescale_error((res_kronrod - res_gauss) * half, res_abs * half.abs(), res_asc * half.abs());
    Ok((value, err, res_abs * half.abs()))
}

struct Worker<'a> {
    f: &'a dyn Fn(f64) -> f64,
    rel_tol: f64,
    max_depth: u32,
    evaluations: u64,
    /// Magnitude of the integral accumulated so far across sections. Panels
    /// whose error sits far below `rel_tol * scale` are accepted even when
    /// their own value is pure rounding noise (for example where `cos x - 1`
    /// quantizes to ulps); without this floor such panels subdivide forever.
    scale: f64,
}

impl Worker<'_> {
    /// Adaptive bisection of `[a, b]` with an absolute budget that halves on
    /// each split, so the leaves of the recursion tree spend at most `abs`
    /// in total.
    fn section(&mut self, a: f64, b: f64, abs: f64, depth: u32) -> Result<(f64, f64)> {
        self.evaluations += 15;
        let (value, err, res_abs) = qk15(&self.f, a, b)?;
        let budget = (0.5 * self.rel_tol * value.abs())
            .max(abs)
            .max(64.0 * f64::EPSILON * res_abs)
            .max(0.002 * self.rel_tol * self.scale);
        if err <= budget {
            return Ok((value, err));
        }
        if depth >= self.max_depth {
            return Err(Error::ToleranceNotMet { estimate: err, budget });
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            return Ok((value, err)); // interval below f64 resolution
        }
        let (v1, e1) = self.section(a, mid, 0.5 * abs, depth + 1)?;
        let (v2, e2) = self.section(mid, b, 0.5 * abs, depth + 1)?;
        Ok((v1 + v2, e1 + e2))
    }

    /// A section spanning several orders of magnitude is cut into geometric
    /// subpanels of ratio 4 first. Plain bisection places no node inside the
    /// leftmost sliver of a wide section, so a knee sitting many decades
    /// below the right endpoint would otherwise go entirely unseen.
    fn graded_section(&mut self, a: f64, b: f64, abs: f64) -> Result<(f64, f64)> {
        if !(a > 0.0) || b <= 4.0 * a {
            return self.section(a, b, abs, 0);
        }
        let panels = (b / a).log(4.0).ceil().max(1.0) as u32;
        let abs_each = abs / f64::from(panels);
        let mut lo = a;
        let mut value = 0.0;
        let mut err = 0.0;
        for _ in 0..panels {
            let hi = (4.0 * lo).min(b);
            let (v, e) = self.section(lo, hi, abs_each, 0)?;
            value += v;
            err += e;
            lo = hi;
        }
        Ok((value, err))
    }
}

/// Estimate of the mass still beyond the last geometric panel, from the decay
/// ratio of the last two contributions; the clamp keeps slowly decaying
/// series (`r^q` with `q` near `-1`) descending instead of stopping early.
fn remaining_mass(last: f64, prev: f64) -> f64 {
    let ratio = if prev.abs() > 0.0 { (last / prev).abs().min(0.97) } else { 0.5 };
    last.abs() * ratio / (1.0 - ratio)
}

/// Integral over `(0, upper]` with geometric grading toward 0 and the spec's
/// split points as section boundaries.
pub fn integrate_to<F: Fn(f64) -> f64>(f: F, upper: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    spec.validate()?;
    if !(upper > 0.0 && upper.is_finite()) {
        return Err(Error::Domain(format!("upper limit must be positive and finite, got {upper}")));
    }
    let mut worker =
        Worker { f: &f, rel_tol: spec.rel_tol, max_depth: spec.max_depth, evaluations: 0, scale: 0.0 };
    let mut pts: Vec<f64> = spec.split_points.iter().copied().filter(|&s| s < upper).collect();
    pts.push(upper);

    let section_abs = spec.abs_tol / 8.0;
    let mut values = Vec::new();
    let mut err_total = 0.0;

    // Sections between consecutive split points, innermost first.
    for w in pts.windows(2) {
        let (v, e) = worker.section(w[0], w[1], section_abs, 0)?;
        values.push(v);
        err_total += e;
        worker.scale = worker.scale.max(pairwise_sum(&values).abs());
    }

    // Geometric descent below the first point, stopping once the estimated
    // mass still below the current panel is negligible.
    let mut hi = pts[0];
    let mut prev_v = 0.0;
    let mut level = 0;
    let mut truncated = f64::INFINITY;
    while level < spec.max_grading_levels {
        let lo = 0.5 * hi;
        let (v, e) = worker.section(lo, hi, section_abs, 0)?;
        values.push(v);
        err_total += e;
        let running = pairwise_sum(&values).abs();
        worker.scale = worker.scale.max(running);
        let threshold = (spec.abs_tol / 8.0).max(5e-4 * spec.rel_tol * running);
        if level >= 4 && remaining_mass(v, prev_v) <= threshold {
            truncated = remaining_mass(v, prev_v);
            break;
        }
        if lo < 1e-306 {
            truncated = v.abs();
            break;
        }
        prev_v = v;
        hi = lo;
        level += 1;
    }
    if !truncated.is_finite() {
        let running = pairwise_sum(&values).abs();
        return Err(Error::ToleranceNotMet {
            estimate: remaining_mass(values.last().copied().unwrap_or(0.0), prev_v),
            budget: (spec.abs_tol / 8.0).max(5e-4 * spec.rel_tol * running),
        });
    }
    err_total += truncated;

    Ok(IntegralResult { value: pairwise_sum(&values), error_estimate: err_total, evaluations: worker.evaluations })
}

/// Integral over `[lower, ∞)` by doubling panels until they stop mattering
/// relative to `prior_scale + accumulated`.
pub fn integrate_from<F: Fn(f64) -> f64>(
    f: F,
    lower: f64,
    spec: &QuadratureSpec,
    prior_scale: f64,
) -> Result<IntegralResult> {
    spec.validate()?;
    if !(lower > 0.0 && lower.is_finite()) {
        return Err(Error::Domain(format!("lower limit must be positive and finite, got {lower}")));
    }
    let mut worker =
        Worker { f: &f, rel_tol: spec.rel_tol, max_depth: spec.max_depth, evaluations: 0, scale: prior_scale };
    let section_abs = spec.abs_tol / 8.0;
    let mut values = Vec::new();
    let mut err_total = 0.0;
    let mut a = lower;
    let mut prev_v = 0.0;
    let mut truncated = f64::INFINITY;
    for level in 0..spec.max_tail_doublings {
        let b = 2.0 * a;
        let (v, e) = worker.section(a, b, section_abs, 0)?;
        values.push(v);
        err_total += e;
        let running = pairwise_sum(&values).abs().max(prior_scale);
        worker.scale = worker.scale.max(running);
        let threshold = (spec.abs_tol / 8.0).max(5e-4 * spec.rel_tol * running);
        if level >= 1 && remaining_mass(v, prev_v) <= threshold {
            truncated = remaining_mass(v, prev_v);
            break;
        }
        prev_v = v;
        a = b;
    }
    if !truncated.is_finite() {
        return Err(Error::ToleranceNotMet {
            estimate: remaining_mass(values.last().copied().unwrap_or(0.0), prev_v),
            budget: (spec.abs_tol / 8.0).max(5e-4 * spec.rel_tol * prior_scale),
        });
    }
    err_total += truncated;

    Ok(IntegralResult { value: pairwise_sum(&values), error_estimate: err_total, evaluations: worker.evaluations })
}

/// Integral over a finite interval `[a, b]` (no grading, no tail).
pub fn integrate_between<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<IntegralResult> {
    spec.validate()?;
    if !(a.is_finite() && b.is_finite() && b >= a) {
        return Err(Error::Domain(format!("bad interval [{a}, {b}]")));
    }
    if a == b {
        return Ok(IntegralResult { value: 0.0, error_estimate: 0.0, evaluations: 0 });
    }
    let mut worker =
        Worker { f: &f, rel_tol: spec.rel_tol, max_depth: spec.max_depth, evaluations: 0, scale: 0.0 };
    let mut pts: Vec<f64> = spec.split_points.iter().copied().filter(|&s| s > a && s < b).collect();
    pts.insert(0, a);
    pts.push(b);
    let mut values = Vec::new();
    let mut err_total = 0.0;
    for w in pts.windows(2) {
        let (v, e) = worker.section(w[0], w[1], spec.abs_tol / 8.0, 0)?;
        values.push(v);
        err_total += e;
        worker.scale = worker.scale.max(pairwise_sum(&values).abs());
    }
    Ok(IntegralResult { value: pairwise_sum(&values), error_estimate: err_total, evaluations: worker.evaluations })
}

/// Full radial integral over `(0, ∞)`.
pub fn integrate_radial<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<IntegralResult> {
    spec.validate()?;
    let top = spec.split_points.last().copied().unwrap_or(1.0);
    let head = integrate_to(&f, top, spec)?;
    let tail = integrate_from(&f, top, spec, head.value.abs())?;
    Ok(IntegralResult {
        value: head.value + tail.value,
        error_estimate: head.error_estimate + tail.error_estimate,
        evaluations: head.evaluations + tail.evaluations,
    })
}

fn reference_spec(knee: Option<f64>) -> QuadratureSpec {
    let spec = QuadratureSpec::default().with_tolerances(1e-10, 0.0);
    match knee {
        Some(k) if k > 0.0 && k < 1.0 => spec.with_splits(&[k, 1.0]),
        _ => spec.with_splits(&[1.0]),
    }
}

/// `I_p(t) = ∫₀¹ (1 + r²)^{-t} r^p dr`; behaves like `t^{-(p+1)/2}` for large `t`.
pub fn i_p(t: f64, p: f64) -> Result<f64> {
    if !(p > -1.0) {
        return Err(Error::Domain(format!("i_p requires p > -1, got {p}")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("i_p requires t > 0, got {t}")));
    }
    let spec = reference_spec(Some(t.sqrt().recip()));
    let f = move |r: f64| r.powf(p) * (-t * (r * r).ln_1p()).exp();
    Ok(integrate_to(f, 1.0, &spec)?.value)
}

/// `J_p(t) = ∫₁^∞ (1 + r²)^{-t} r^p dr`; behaves like `2^{-t}/(t-1)` for large `t`.
pub fn j_p(t: f64, p: f64) -> Result<f64> {
    if !(t > 0.5 * (p + 1.0)) {
        return Err(Error::Divergent(format!(
            "j_p integrand has tail r^{{p-2t}} with p - 2t = {} >= -1",
            p - 2.0 * t
        )));
    }
    if !t.is_finite() {
        return Err(Error::Domain("j_p requires finite t".into()));
    }
    let spec = reference_spec(None);
    let f = move |r: f64| r.powf(p) * (-t * (r * r).ln_1p()).exp();
    Ok(integrate_from(f, 1.0, &spec, 0.0)?.value)
}

/// `∫₀^upper (1 + r^a)^{-t} r^q dr`. With `upper = 1` the substitution
/// `s = r^{a/2}` turns it into `(2/a)·I_{2(q+1)/a - 1}(t)`, which the tests
/// use as a cross-check.
pub fn weighted_power_integral(t: f64, a: f64, q: f64, upper: f64) -> Result<f64> {
    if !(q > -1.0) {
        return Err(Error::Domain(format!("weighted_power_integral requires q > -1, got {q}")));
    }
    if !(a > 0.0) {
        return Err(Error::Domain(format!("weighted_power_integral requires a > 0, got {a}")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("weighted_power_integral requires t > 0, got {t}")));
    }
    if !(upper > 0.0 && upper <= 1.0) {
        return Err(Error::Domain(format!("upper must lie in (0, 1], got {upper}")));
    }
    let knee = t.powf(-1.0 / a);
    let spec = if knee < upper {
        QuadratureSpec::default().with_tolerances(1e-10, 0.0).with_splits(&[knee, upper])
    } else {
        QuadratureSpec::default().with_tolerances(1e-10, 0.0).with_splits(&[upper])
    };
    let f = move |r: f64| r.powf(q) * (-t * r.powf(a).ln_1p()).exp();
    Ok(integrate_to(f, upper, &spec)?.value)
}

/// Middle-band integral `∫_{eta_low}^1 (1 + r²)^{-t} r^p dr` together with the
/// exponential bound `C (1 + eta_low²)^{-t}`, `C` calibrated at `t = 1`.
/// The ratio `(1+eta²)/(1+r²) <= 1` on the band, so the calibrated bound
/// holds for every `t >= 1`.
pub fn middle_band_bound_check(t: f64, eta_low: f64, p: f64) -> Result<(f64, f64)> {
    if !(eta_low > 0.0 && eta_low <= 1.0) {
        return Err(Error::Domain(format!("eta_low must lie in (0, 1], got {eta_low}")));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("t must be nonnegative, got {t}")));
    }
    let spec = QuadratureSpec::default().with_tolerances(1e-11, 0.0).with_splits(&[1.0]);
    let integrand = |tt: f64| move |r: f64| r.powf(p) * (-tt * (r * r).ln_1p()).exp();
    let log_band = (eta_low * eta_low).ln_1p();
    let value = integrate_between(integrand(t), eta_low, 1.0, &spec)?.value;
    let calibration = integrate_between(integrand(1.0), eta_low, 1.0, &spec)?.value * log_band.exp();
    let bound = calibration * (-t * log_band).exp();
    Ok((value, bound))
}

//! Adaptive quadrature and finite differences shared by the oracle paths.

use crate::Error;

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// Integral estimate (Richardson-corrected).
    pub value: f64,
    /// Sum of the per-panel error estimates; always ≥ 0.
    pub error_estimate: f64,
    /// Number of leaf panels accepted.
    pub panels: u32,
}

impl QuadratureResult {
    const ZERO: Self = Self { value: 0.0, error_estimate: 0.0, panels: 0 };
}

/// Bisection depth cap. A panel at this depth spans 2⁻⁶⁰ of the original
/// interval, far below any structure a smooth integrand can have; hitting
/// the cap with the tolerance unmet is reported as non-convergence.
const MAX_DEPTH: u32 = 60;

/// Adaptive Simpson integration of `f` over `[a, b]` (requires `a ≤ b`).
///
/// Each panel is accepted once the classic `|S₂ − S₁|/15` Richardson
/// estimate drops below its share of `tol`, and the correction term is
/// folded into the returned value, so the result is usually much more
/// accurate than `tol`. Callers are responsible for splitting at known
/// kinks of `f`; panels are assumed smooth.
pub fn integrate(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadratureResult, Error> {
    if !(a <= b) || !(tol > 0.0) {
        return Err(Error::Domain);
    }
    if a == b {
        return Ok(QuadratureResult::ZERO);
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    let mut panels = 0u32;
    let mut err = 0.0;
    let value = refine(
        &f,
        Panel { a, b, fa, fm, fb, estimate: whole },
        tol,
        MAX_DEPTH,
        &mut panels,
        &mut err,
    )?;
    Ok(QuadratureResult { value, error_estimate: err, panels })
}

/// Integrate across `points` (ascending), restarting the quadrature at
/// each interior point so every panel sees a smooth integrand. `tol` is
/// the per-segment tolerance.
pub fn integrate_split(
    f: impl Fn(f64) -> f64,
    points: &[f64],
    tol: f64,
) -> Result<QuadratureResult, Error> {
    if points.len() < 2 {
        return Err(Error::Domain);
    }
    let mut total = QuadratureResult::ZERO;
    for w in points.windows(2) {
        let part = integrate(&f, w[0], w[1], tol)?;
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.panels += part.panels;
    }
    Ok(total)
}

/// Symmetric difference quotient `(f(x+h) − f(x−h)) / 2h`.
pub fn central_diff(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    debug_assert!(h > 0.0);
    (f(x + h) - f(x - h)) / (2.0 * h)
}

fn simpson(fa: f64, fm: f64, fb: f64, width: f64) -> f64 {
    width / 6.0 * (fa + 4.0 * fm + fb)
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    estimate: f64,
}

fn refine(
    f: &impl Fn(f64) -> f64,
    panel: Panel,
    tol: f64,
    depth: u32,
    panels: &mut u32,
    err: &mut f64,
) -> Result<f64, Error> {
    let Panel { a, b, fa, fm, fb, estimate } = panel;
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - estimate;
    // NaN deltas (integrand not finite) fail this test and keep splitting
    // until the depth cap reports non-convergence.
    if delta.abs() <= 15.0 * tol {
        *panels += 2;
        *err += delta.abs() / 15.0;
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::NoConvergence);
    }
    let half = 0.5 * tol;
    let l = refine(
        f,
        Panel { a, b: m, fa, fm: flm, fb: fm, estimate: left },
        half,
        depth - 1,
        panels,
        err,
    )?;
    let r = refine(
        f,
        Panel { a: m, b, fa: fm, fm: frm, fb, estimate: right },
        half,
        depth - 1,
        panels,
        err,
    )?;
    Ok(l + r)
}

//! Adaptive Simpson quadrature with interval bisection.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    /// Sum of the local `|S₂ − S₁|/15` estimates over accepted panels.
    pub error_estimate: f64,
    pub evaluations: usize,
}

const MAX_DEPTH: u32 = 48;

/// `∫_a^b f` to absolute tolerance `tol`.
///
/// The interval is first cut into `initial_panels` pieces so that integrands whose
/// coarse Simpson estimates agree by accident (symmetric bumps, oscillations) are
/// still resolved. Each panel gets a share of the tolerance proportional to its width.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, initial_panels: usize) -> QuadResult {
    assert!(tol > 0.0, "tolerance must be positive");
    assert!(initial_panels >= 1);
    let mut out = QuadResult {
        value: 0.0,
        error_estimate: 0.0,
        evaluations: 0,
    };
    let h = (b - a) / initial_panels as f64;
    for i in 0..initial_panels {
        let lo = a + h * i as f64;
        let hi = if i + 1 == initial_panels { b } else { lo + h };
        let mid = 0.5 * (lo + hi);
        let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
        out.evaluations += 3;
        let whole = simpson(lo, hi, flo, fmid, fhi);
        let panel_tol = tol / initial_panels as f64;
        recurse(&f, lo, hi, flo, fmid, fhi, whole, panel_tol, MAX_DEPTH, &mut out);
    }
    out
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    out: &mut QuadResult,
) {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    out.evaluations += 2;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        out.value += left + right + delta / 15.0;
        out.error_estimate += delta.abs() / 15.0;
        return;
    }
    recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, out);
    recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, out);
}

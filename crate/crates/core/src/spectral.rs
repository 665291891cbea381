//! Transition density of Brownian motion on (0, 1) killed at rate `μ csc²(πx)`.
//!
//! With `ν = (1 + √(1 + 8μ/π²))/2` the generator `L_μ` has eigenfunctions
//! `f_k(x) = 2^{ν−1} Γ(ν) sin^ν(πx) C_k^{(ν)}(cos πx)`, eigenvalues `−π²(ν+k)²/2` and
//! `‖f_k‖² = Γ(2ν+k)/(2(ν+k)k!)`, so
//! `p_t(x, y) = Σ_k e^{−π²t(ν+k)²/2} f_k(x) f_k(y) · 2(ν+k)k!/Γ(2ν+k)`.
//!
//! Terms are evaluated as `w_k · φ_k(x) · φ_k(y)` with `φ_k = sin^ν(πx)·C_k(cos πx)/C_k(1)`
//! (so `|φ_k| ≤ 1`) and `w_k` collecting every remaining factor in log space. Because
//! `|φ_k| ≤ 1`, `w_k` itself bounds `|term_k|`; the ratio `w_{k+1}/w_k` is decreasing in
//! `k`, which makes the geometric tail estimate rigorous.

use std::f64::consts::{LN_2, PI};

use statrs::function::gamma::ln_gamma;

use crate::darboux::{chain_eigenvalue, gegenbauer_eigenfunction, SchrodingerOp};
use crate::orthopoly::{gegenbauer_normalized_sequence, ln_gegenbauer_at_one};
use crate::quadrature::adaptive_simpson;
use crate::scalar::{big, factorial, gamma_int, PiScalar};

/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 100_000;

/// Series truncation tolerance used inside quadrature-based diagnostics.
pub const DIAGNOSTIC_SERIES_TOL: f64 = 1e-14;

const INITIAL_PANELS: usize = 16;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("killing strength must be non-negative, got μ = {0}")]
    NegativeMu(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("tolerance {tol:e} not reached within {MAX_TERMS} terms (tail bound {tail_bound:e})")]
    TolUnreachable { tol: f64, tail_bound: f64 },
}

/// `ν = (1 + √(1 + 8μ/π²))/2`.
pub fn nu_from_mu(mu: f64) -> Result<f64, SpectralError> {
    if !mu.is_finite() || mu < 0.0 {
        return Err(SpectralError::NegativeMu(mu));
    }
    Ok(0.5 * (1.0 + (1.0 + 8.0 * mu / (PI * PI)).sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KilledBMModel {
    pub mu: f64,
    pub nu: f64,
}

impl KilledBMModel {
    /// `μ = 0` is Brownian motion absorbed at 0 and 1 (Dirichlet sine basis, ν = 1).
    pub fn new(mu: f64) -> Result<Self, SpectralError> {
        Ok(KilledBMModel { mu, nu: nu_from_mu(mu)? })
    }

    /// The model with order `ν ≥ 1`, i.e. `μ = π²ν(ν−1)/2`.
    pub fn from_nu(nu: f64) -> Result<Self, SpectralError> {
        if !nu.is_finite() || nu < 1.0 {
            return Err(SpectralError::Domain(format!("order ν must be ≥ 1, got {nu}")));
        }
        Ok(KilledBMModel {
            mu: PI * PI * nu * (nu - 1.0) / 2.0,
            nu,
        })
    }

    /// `ln(2^{ν−1} Γ(ν))`
    fn ln_amplitude(&self) -> f64 {
        (self.nu - 1.0) * LN_2 + ln_gamma(self.nu)
    }

    /// `φ_k(x)` for `k = 0..count`.
    fn basis(&self, count: usize, x: f64) -> Vec<f64> {
        let s = (PI * x).sin().powf(self.nu);
        let mut seq = gegenbauer_normalized_sequence(count, self.nu, (PI * x).cos());
        for v in seq.iter_mut() {
            *v *= s;
        }
        seq
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityQuery {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub tol: f64,
}

impl DensityQuery {
    pub fn new(t: f64, x: f64, y: f64, tol: f64) -> Result<Self, SpectralError> {
        check_time(t)?;
        check_point("x", x)?;
        check_point("y", y)?;
        if tol.is_nan() || tol <= 0.0 {
            return Err(SpectralError::Domain(format!("tolerance must be positive, got {tol}")));
        }
        Ok(DensityQuery { t, x, y, tol })
    }
}

fn check_point(name: &str, v: f64) -> Result<(), SpectralError> {
    if v > 0.0 && v < 1.0 {
        Ok(())
    } else {
        Err(SpectralError::Domain(format!("{name} must lie in (0, 1), got {v}")))
    }
}

fn check_time(t: f64) -> Result<(), SpectralError> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(SpectralError::Domain(format!("time must be positive, got {t}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityResult {
    /// The density, clamped at zero.
    pub value: f64,
    /// The truncated sum before clamping.
    pub raw_value: f64,
    pub clamped: bool,
    pub terms_used: usize,
    /// Rigorous bound on the omitted tail, at most the requested tolerance.
    pub tail_bound: f64,
}

/// Log-weights `ln w_k` for `k < terms` and the tail bound past them.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesPlan {
    pub weights: Vec<f64>,
    pub tail_bound: f64,
}

impl SeriesPlan {
    pub fn new(model: &KilledBMModel, t: f64, tol: f64) -> Result<Self, SpectralError> {
        check_time(t)?;
        let nu = model.nu;
        let ln_amp2 = 2.0 * model.ln_amplitude();
        let ln_weight = |k: usize| {
            let kf = k as f64;
            -PI * PI * t * (nu + kf).powi(2) / 2.0
                + ln_amp2
                + 2.0 * ln_gegenbauer_at_one(k, nu)
                + (2.0 * (nu + kf)).ln()
                + ln_gamma(kf + 1.0)
                - ln_gamma(2.0 * nu + kf)
        };
        // w_{k+1}/w_k, decreasing in k for ν ≥ ½.
        let ratio = |k: usize| {
            let kf = k as f64;
            (nu + kf + 1.0) / (nu + kf) * (2.0 * nu + kf) / (kf + 1.0)
                * (-PI * PI * t * (2.0 * nu + 2.0 * kf + 1.0) / 2.0).exp()
        };
        let mut weights = Vec::new();
        let mut last_bound = f64::INFINITY;
        for k in 0..=MAX_TERMS {
            let r = ratio(k);
            let w = ln_weight(k).exp();
            // The leading term is always kept so deep-interior values stay positive.
            if k >= 1 && r < 1.0 {
                let tail = w / (1.0 - r);
                last_bound = tail;
                if tail <= tol {
                    return Ok(SeriesPlan { weights, tail_bound: tail });
                }
            }
            if k == MAX_TERMS {
                break;
            }
            weights.push(w);
        }
        Err(SpectralError::TolUnreachable { tol, tail_bound: last_bound })
    }

    pub fn terms(&self) -> usize {
        self.weights.len()
    }
}

/// `p_t(x, ·)` with the x-side of every term precomputed.
pub struct SeriesKernel {
    model: KilledBMModel,
    coeffs: Vec<f64>,
    pub tail_bound: f64,
}

impl SeriesKernel {
    pub fn new(model: &KilledBMModel, t: f64, x: f64, tol: f64) -> Result<Self, SpectralError> {
        check_point("x", x)?;
        let plan = SeriesPlan::new(model, t, tol)?;
        let phi = model.basis(plan.terms(), x);
        let coeffs = plan.weights.iter().zip(&phi).map(|(w, p)| w * p).collect();
        Ok(SeriesKernel {
            model: *model,
            coeffs,
            tail_bound: plan.tail_bound,
        })
    }

    pub fn eval(&self, y: f64) -> f64 {
        if !(y > 0.0 && y < 1.0) {
            return 0.0;
        }
        let phi = self.model.basis(self.coeffs.len(), y);
        self.coeffs.iter().zip(&phi).map(|(c, p)| c * p).sum()
    }
}

/// `f_k^{(μ)}(x) = 2^{ν−1} Γ(ν) sin^ν(πx) C_k^{(ν)}(cos πx)`.
pub fn eigenfunction_value(model: &KilledBMModel, k: usize, x: f64) -> Result<f64, SpectralError> {
    check_point("x", x)?;
    let phi = model.basis(k + 1, x)[k];
    Ok(phi * (model.ln_amplitude() + ln_gegenbauer_at_one(k, model.nu)).exp())
}

/// Truncated spectral series with a certified tail bound `≤ q.tol`.
pub fn density(model: &KilledBMModel, q: &DensityQuery) -> Result<DensityResult, SpectralError> {
    let plan = SeriesPlan::new(model, q.t, q.tol)?;
    let n = plan.terms();
    let px = model.basis(n, q.x);
    let py = model.basis(n, q.y);
    // w·(φ(x)·φ(y)) keeps the sum bitwise symmetric in (x, y).
    let raw: f64 = (0..n).map(|k| plan.weights[k] * (px[k] * py[k])).sum();
    Ok(DensityResult {
        value: raw.max(0.0),
        raw_value: raw,
        clamped: raw < 0.0,
        terms_used: n,
        tail_bound: plan.tail_bound,
    })
}

/// Gaussian kernel with variance `t`.
fn heat(t: f64, z: f64) -> f64 {
    (-z * z / (2.0 * t)).exp() / (2.0 * PI * t).sqrt()
}

/// Method-of-images density of Brownian motion absorbed at 0 and 1:
/// `Σ_{m∈ℤ} [φ_t(y − x + 2m) − φ_t(y + x + 2m)]`.
pub fn mu0_oracle(t: f64, x: f64, y: f64) -> f64 {
    let image = |m: i64| heat(t, y - x + 2.0 * m as f64) - heat(t, y + x + 2.0 * m as f64);
    let mut total = image(0);
    let mut m = 1i64;
    loop {
        let a = image(m);
        let b = image(-m);
        total += a + b;
        // Past |2m| > 2 every Gaussian argument grows with m.
        if m >= 2 && a.abs() < 1e-18 && b.abs() < 1e-18 {
            break;
        }
        m += 1;
    }
    total
}

/// `∫₀¹ p_t(x, y) dy`, at most 1 for a killed process.
pub fn density_mass(model: &KilledBMModel, t: f64, x: f64, quad_tol: f64) -> Result<f64, SpectralError> {
    let kernel = SeriesKernel::new(model, t, x, DIAGNOSTIC_SERIES_TOL)?;
    Ok(adaptive_simpson(|y| kernel.eval(y), 0.0, 1.0, quad_tol, INITIAL_PANELS).value)
}

/// `|∫₀¹ p_s(x, z) p_t(z, y) dz − p_{s+t}(x, y)|`.
pub fn ck_check(
    model: &KilledBMModel,
    s: f64,
    t: f64,
    x: f64,
    y: f64,
    quad_tol: f64,
) -> Result<f64, SpectralError> {
    check_point("y", y)?;
    let left = SeriesKernel::new(model, s, x, DIAGNOSTIC_SERIES_TOL)?;
    // p_t(z, y) = p_t(y, z).
    let right = SeriesKernel::new(model, t, y, DIAGNOSTIC_SERIES_TOL)?;
    let composed = adaptive_simpson(|z| left.eval(z) * right.eval(z), 0.0, 1.0, quad_tol, INITIAL_PANELS).value;
    let direct = density(model, &DensityQuery::new(s + t, x, y, DIAGNOSTIC_SERIES_TOL)?)?;
    Ok((composed - direct.raw_value).abs())
}

/// Exact checks of the integer-order eigenfunction `f_k^{(μ_n)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerNuCheck {
    pub residual_zero: bool,
    pub norm_sq: PiScalar,
    pub norm_matches: bool,
}

impl IntegerNuCheck {
    pub fn passed(&self) -> bool {
        self.residual_zero && self.norm_matches
    }
}

/// For ν = n: (a) `sin²θ·(L_{μ_n} f − λ f) ≡ 0` with `λ = −π²(n+k)²/2`, and
/// (b) `∫₀¹ f² = Γ(2n+k)/(2(n+k)k!)`, both exactly.
pub fn exact_eigen_check_integer_nu(n: usize, k: usize) -> IntegerNuCheck {
    let f = gegenbauer_eigenfunction(n, k).to_fourier();
    let op = SchrodingerOp::after_crum_steps(n);
    let residual_zero = op.cleared_residual(&f, &chain_eigenvalue(n + k)).is_zero();
    let norm_sq = (&f * &f).integrate01();
    let expected = big(&gamma_int((2 * n + k) as u64))
        / big(&(factorial(k as u64) * num_bigint::BigInt::from(2 * (n + k))));
    let norm_matches = norm_sq == PiScalar::from_rational(expected);
    IntegerNuCheck {
        residual_zero,
        norm_matches,
        norm_sq,
    }
}

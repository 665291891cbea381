//! The Darboux-Crum chain built on `½∂²` over (0, 1) with seeds `sin(mπx)`.
//!
//! After `n − 1` steps with seeds `sin(πx), …, sin((n−1)πx)` the operator is
//! `L_{μ_n} = ½∂²_x − μ_n csc²(πx)` with `μ_n = n(n−1)π²/2`, and the transported
//! eigenfunctions are the Crum ratios
//! `g_k^{(n−1)} = Wr{sin πx, …, sin((n−1)πx), sin((n+k)πx)} / Wr{sin πx, …, sin((n−1)πx)}`.
//!
//! Every chain function lives in θ = πx and has the shape `π^p · sinⁿθ · Q(cos θ)`.
//! Eigen-equations are checked after multiplying through by `sin²θ`, which keeps every
//! term a trig polynomial.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::orthopoly::gegenbauer;
use crate::scalar::{big, factorial, gamma_int, int, rat, PiScalar};
use crate::trig::{first_nonzero, rational_sign, sin_power, FourierPoly, SinCosForm, TrigError};
use crate::wronskian::{self, WronskianError};

/// Largest `n` accepted by [`crum_ratio`]; the numerator is an n×n brute-force Wronskian.
pub const MAX_CHAIN_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error(transparent)]
    NotDivisible(#[from] TrigError),
    #[error("chain order {n} exceeds the limit of {MAX_CHAIN_ORDER}")]
    SizeExceeded { n: usize },
    #[error("function is not of the form sin^{expected}θ·Q(cosθ)")]
    WrongClass { expected: u32 },
    #[error("Crum ratio is not a constant multiple of the Gegenbauer eigenfunction (n={n}, k={k})")]
    NotProportional { n: usize, k: usize },
    #[error("seed Wronskian is not a constant multiple of sin^{power}θ")]
    UnexpectedDenominator { power: u32 },
}

impl From<WronskianError> for ChainError {
    fn from(e: WronskianError) -> Self {
        match e {
            WronskianError::SizeExceeded { size } => ChainError::SizeExceeded { n: size },
        }
    }
}

/// `L_μ = ½∂²_x − μ csc²(πx)` on (0, 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchrodingerOp {
    pub mu: PiScalar,
}

impl SchrodingerOp {
    /// The operator reached after `n − 1` Crum steps: `μ_n = n(n−1)π²/2`.
    pub fn after_crum_steps(n: usize) -> Self {
        SchrodingerOp {
            mu: mu_n(n),
        }
    }

    /// `sin²θ · (L_μ g − λ g)` for `g` given in θ = πx, where `g″_x = π² d²g/dθ²`.
    pub fn cleared_residual(&self, g: &FourierPoly, lambda: &PiScalar) -> FourierPoly {
        let sin2 = sin_power(2);
        let second = g.diff_n(2).scale(&PiScalar::monomial(rat(1, 2), 2));
        let kinetic = &sin2 * &second;
        let potential = g.scale(&self.mu);
        let spectral = (&sin2 * g).scale(lambda);
        &(&kinetic - &potential) - &spectral
    }
}

pub fn mu_n(n: usize) -> PiScalar {
    PiScalar::monomial(rat((n * (n - 1)) as i64, 2), 2)
}

/// `−π²m²/2`, the eigenvalue of `sin(mπx)` under `½∂²` and of every chain image of it.
pub fn chain_eigenvalue(m: usize) -> PiScalar {
    PiScalar::monomial(rat(-((m * m) as i64), 2), 2)
}

/// True iff `(1 + √(1 + 8μ_n/π²))/2 = n`, checked in integers: `8μ_n/π² = 4n(n−1)`,
/// so the discriminant `1 + 4n(n−1)` must be the perfect square `(2n−1)²`.
pub fn nu_of_mu_n_is_integer(n: u64) -> bool {
    let eight_mu_over_pi2 = mu_n(n as usize).coeff(2) * int(8);
    assert!(eight_mu_over_pi2.is_integer());
    let disc = BigInt::one() + eight_mu_over_pi2.to_integer();
    let root = disc.sqrt();
    &root * &root == disc && BigInt::one() + &root == BigInt::from(2 * n)
}

/// A chain eigenfunction `π^{pi_prefactor} · form(θ)` with θ = πx.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainFunction {
    pub form: SinCosForm,
    pub pi_prefactor: i32,
    pub eigenvalue: PiScalar,
}

impl ChainFunction {
    /// The full value as a trig polynomial in θ, π-prefactor included.
    pub fn to_fourier(&self) -> FourierPoly {
        self.form
            .to_fourier()
            .scale(&PiScalar::pi_pow(self.pi_prefactor))
    }

    /// The form with the π-prefactor folded into its coefficients.
    pub fn scaled_form(&self) -> SinCosForm {
        self.form.scale(&PiScalar::pi_pow(self.pi_prefactor))
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let pi = std::f64::consts::PI;
        pi.powi(self.pi_prefactor) * self.form.eval(pi * x, pi)
    }
}

/// `g_k^{(n−1)}`, the image of `sin((n+k)πx)` after `n − 1` Crum steps.
pub fn crum_ratio(n: usize, k: usize) -> Result<ChainFunction, ChainError> {
    assert!(n >= 1, "chain order starts at 1");
    if n > MAX_CHAIN_ORDER {
        return Err(ChainError::SizeExceeded { n });
    }
    // x-derivatives contribute π^{0+1+…} per Wronskian: π^{n(n−1)/2} over π^{(n−1)(n−2)/2}.
    let numerator = wronskian::w_bruteforce(n, k)?.to_sincos_form();
    let seeds: Vec<FourierPoly> = (1..n).map(|m| FourierPoly::sin(m as u32)).collect();
    let denominator = wronskian::wronskian_bruteforce(&seeds)?.to_sincos_form();

    let power = (n * (n - 1) / 2) as u32;
    let den_const = denominator
        .div_sin_power(power)
        .ok()
        .filter(|q| q.p1.is_zero() && q.p0.degree() == Some(0))
        .and_then(|q| q.p0.coeff(0).as_rational())
        .ok_or(ChainError::UnexpectedDenominator { power })?;

    let form = numerator
        .div_sin_power(power)?
        .scale(&PiScalar::from_rational(den_const.recip()));
    Ok(ChainFunction {
        form,
        pi_prefactor: (n - 1) as i32,
        eigenvalue: chain_eigenvalue(n + k),
    })
}

/// `sin²θ · (L_{μ_n} g − λ g)` for `g = crum_ratio(n, k)`; identically zero when `g` is an
/// eigenfunction of the transformed operator.
pub fn eigen_residual(n: usize, k: usize) -> Result<FourierPoly, ChainError> {
    let g = crum_ratio(n, k)?;
    Ok(SchrodingerOp::after_crum_steps(n).cleared_residual(&g.to_fourier(), &g.eigenvalue))
}

/// `D_h g = g′ − (h′/h) g` for the ground seed `h ∝ sinⁿθ`. On `g = sinⁿθ·Q(cos θ)` this is
/// `−π · sin^{n+1}θ · Q′(cos θ)`.
pub fn darboux_apply_groundseed(n: usize, g: &ChainFunction) -> Result<ChainFunction, ChainError> {
    let power = n as u32;
    let q = g
        .form
        .strip_sin_power(power)
        .ok_or(ChainError::WrongClass { expected: power })?;
    let dq = -&q.derivative();
    Ok(ChainFunction {
        form: SinCosForm::sin_power_times(power + 1, &dq),
        pi_prefactor: g.pi_prefactor + 1,
        eigenvalue: g.eigenvalue.clone(),
    })
}

/// `D_h g_k^{(n−1)} = g_{k−1}^{(n)}`: one more Crum step is the ground-seed Darboux map.
pub fn verify_intertwining(n: usize, k: usize) -> Result<bool, ChainError> {
    assert!(n >= 1 && k >= 1);
    let stepped = darboux_apply_groundseed(n, &crum_ratio(n, k)?)?;
    Ok(stepped == crum_ratio(n + 1, k - 1)?)
}

/// Exact `∫₀¹ g(x)² dx`.
pub fn norm_sq(g: &ChainFunction) -> PiScalar {
    let f = g.form.to_fourier();
    (&f * &f)
        .integrate01()
        .shift_pi(2 * g.pi_prefactor)
}

/// `½ π^{2n−2} Γ(2n+k) / ((n+k) k!)`.
pub fn norm_sq_closed_form(n: usize, k: usize) -> PiScalar {
    let num = big(&gamma_int((2 * n + k) as u64));
    let den = big(&(BigInt::from(2 * (n + k)) * factorial(k as u64)));
    PiScalar::monomial(num / den, (2 * n - 2) as i32)
}

/// `‖g_{k−1}^{(n)}‖² = π²((n+k)² − n²) ‖g_k^{(n−1)}‖²`.
pub fn verify_norm_recurrence(n: usize, k: usize) -> Result<bool, ChainError> {
    assert!(n >= 1 && k >= 1);
    let upper = norm_sq(&crum_ratio(n + 1, k - 1)?);
    let lower = norm_sq(&crum_ratio(n, k)?);
    let factor = PiScalar::monomial(int(((n + k) * (n + k) - n * n) as i64), 2);
    Ok(upper == &factor * &lower)
}

/// Both sides of `∫₀¹ g̃² = [g g̃]₀¹ + 2(λ − κ) ∫₀¹ g²` for `g = crum_ratio(n, k)`,
/// `g̃ = D_h g`, seed eigenvalue `λ = −π²n²/2` and `κ = −π²(n+k)²/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormIdentityCheck {
    pub lhs: PiScalar,
    pub boundary: PiScalar,
    pub rhs: PiScalar,
}

impl NormIdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn norm_identity_check(n: usize, k: usize) -> Result<NormIdentityCheck, ChainError> {
    let g = crum_ratio(n, k)?;
    let g_tilde = darboux_apply_groundseed(n, &g)?;
    let lambda = chain_eigenvalue(n);
    let lhs = norm_sq(&g_tilde);
    let product = &g.to_fourier() * &g_tilde.to_fourier();
    let boundary = &product.value_at_pi() - &product.value_at_zero();
    let gap = (&lambda - &g.eigenvalue).scale(&int(2));
    let rhs = &boundary + &(&gap * &norm_sq(&g));
    Ok(NormIdentityCheck { lhs, boundary, rhs })
}

pub fn verify_prop3(n: usize, k: usize) -> Result<bool, ChainError> {
    Ok(norm_identity_check(n, k)?.holds())
}

/// `2^{n−1} Γ(n) sinⁿθ C_k^{(n)}(cos θ)`: the eigenfunction `f_k^{(μ_n)}` in θ = πx.
pub fn gegenbauer_eigenfunction(n: usize, k: usize) -> SinCosForm {
    assert!(n >= 1);
    let scale = big(&((BigInt::one() << (n - 1)) * gamma_int(n as u64)));
    let c = gegenbauer(k, &int(n as i64)).scale_rational(&scale);
    SinCosForm::sin_power_times(n as u32, &c)
}

/// The constant `C` in `g_k^{(n−1)} = C · f_k^{(μ_n)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainConstant {
    pub value: PiScalar,
}

impl ChainConstant {
    /// `Some((sign, e))` when `C = ±π^e` exactly.
    pub fn sign_and_pi_power(&self) -> Option<(i32, i32)> {
        let (e, c) = self.value.as_monomial()?;
        let abs_one = c.is_one() || (-c).is_one();
        abs_one.then(|| (rational_sign(c), e))
    }
}

pub fn constant_c(n: usize, k: usize) -> Result<ChainConstant, ChainError> {
    let g = crum_ratio(n, k)?.scaled_form();
    let f = gegenbauer_eigenfunction(n, k);
    let (part, i, lead) = first_nonzero(&f).expect("Gegenbauer eigenfunction is nonzero");
    let lead = lead.as_rational().expect("eigenfunction has rational coefficients");
    let g_coeff = if part == 0 { g.p0.coeff(i) } else { g.p1.coeff(i) };
    let value = g_coeff.scale(&lead.recip());
    if f.scale(&value) != g {
        return Err(ChainError::NotProportional { n, k });
    }
    Ok(ChainConstant { value })
}

/// Per-(n, k) summary consumed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub n: usize,
    pub k: usize,
    pub residual_zero: bool,
    pub norm_sq: PiScalar,
    pub norm_matches_closed_form: bool,
    pub c_sign: i32,
    pub c_pi_power: i32,
    pub c_is_unit_pi_power: bool,
}

impl ChainReport {
    pub fn passed(&self) -> bool {
        self.residual_zero
            && self.norm_matches_closed_form
            && self.c_is_unit_pi_power
            && self.c_pi_power == self.n as i32 - 1
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "residual_zero": self.residual_zero,
            "norm_sq": self.norm_sq.to_json(),
            "C_sign": self.c_sign,
            "C_pi_power": self.c_pi_power,
        })
    }
}

pub fn chain_report(n: usize, k: usize) -> Result<ChainReport, ChainError> {
    let g = crum_ratio(n, k)?;
    let residual_zero = SchrodingerOp::after_crum_steps(n)
        .cleared_residual(&g.to_fourier(), &g.eigenvalue)
        .is_zero();
    let norm = norm_sq(&g);
    let c = constant_c(n, k)?;
    let (c_sign, c_pi_power, unit) = match c.sign_and_pi_power() {
        Some((s, e)) => (s, e, true),
        None => (
            0,
            c.value.as_monomial().map(|(e, _)| e).unwrap_or(i32::MIN),
            false,
        ),
    };
    Ok(ChainReport {
        n,
        k,
        residual_zero,
        norm_matches_closed_form: norm == norm_sq_closed_form(n, k),
        norm_sq: norm,
        c_sign,
        c_pi_power,
        c_is_unit_pi_power: unit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upoly::UPoly;

    fn sin2_form(c: i64) -> SinCosForm {
        SinCosForm::sin_power_times(2, &UPoly::from_ints(&[c]))
    }

    #[test]
    fn crum_ratio_examples() {
        let g = crum_ratio(1, 0).unwrap();
        assert_eq!(g.to_fourier(), FourierPoly::sin(1));
        assert_eq!(g.pi_prefactor, 0);

        let g = crum_ratio(2, 0).unwrap();
        assert_eq!(g.form, sin2_form(-2));
        assert_eq!(g.pi_prefactor, 1);
        assert_eq!(g.eigenvalue, PiScalar::monomial(int(-2), 2));

        // π·(−8 sin³θ cos θ)/sin θ
        let g = crum_ratio(2, 1).unwrap();
        assert_eq!(g.form, SinCosForm::sin_power_times(2, &UPoly::from_ints(&[0, -8])));
    }

    #[test]
    fn crum_ratio_guard() {
        assert_eq!(crum_ratio(10, 0), Err(ChainError::SizeExceeded { n: 10 }));
    }

    #[test]
    fn eigen_residual_examples() {
        for (n, k) in [(2, 0), (3, 0), (2, 4)] {
            assert!(eigen_residual(n, k).unwrap().is_zero(), "n={n} k={k}");
        }
    }

    #[test]
    fn residual_detects_wrong_eigenvalue() {
        let g = crum_ratio(3, 1).unwrap();
        let r = SchrodingerOp::after_crum_steps(3).cleared_residual(&g.to_fourier(), &chain_eigenvalue(5));
        assert!(!r.is_zero());
    }

    #[test]
    fn darboux_examples() {
        let ground = crum_ratio(1, 0).unwrap();
        assert!(darboux_apply_groundseed(1, &ground).unwrap().is_zero());

        let g = crum_ratio(1, 1).unwrap();
        let expected = crum_ratio(2, 0).unwrap();
        assert_eq!(darboux_apply_groundseed(1, &g).unwrap(), expected);

        let g = crum_ratio(2, 1).unwrap();
        assert_eq!(darboux_apply_groundseed(2, &g).unwrap(), crum_ratio(3, 0).unwrap());
    }

    #[test]
    fn intertwining_examples() {
        for (n, k) in [(1, 3), (2, 2), (3, 1)] {
            assert!(verify_intertwining(n, k).unwrap(), "n={n} k={k}");
        }
    }

    #[test]
    fn darboux_rejects_wrong_class() {
        let g = crum_ratio(2, 1).unwrap();
        assert_eq!(darboux_apply_groundseed(3, &g), Err(ChainError::WrongClass { expected: 3 }));
    }

    #[test]
    fn norm_examples() {
        for m in 1..5 {
            let g = ChainFunction {
                form: FourierPoly::sin(m).to_sincos_form(),
                pi_prefactor: 0,
                eigenvalue: chain_eigenvalue(m as usize),
            };
            assert_eq!(norm_sq(&g), PiScalar::from_rational(rat(1, 2)));
        }
        assert_eq!(norm_sq(&crum_ratio(2, 0).unwrap()), PiScalar::monomial(rat(3, 2), 2));
        // 64π² ∫ sin⁴ cos² = 64π²/16
        assert_eq!(norm_sq(&crum_ratio(2, 1).unwrap()), PiScalar::monomial(int(4), 2));
        assert_eq!(norm_sq_closed_form(2, 1), PiScalar::monomial(int(4), 2));
    }

    #[test]
    fn norm_recurrence_examples() {
        for (n, k) in [(2, 1), (2, 2), (3, 1)] {
            assert!(verify_norm_recurrence(n, k).unwrap());
        }
    }

    #[test]
    fn norm_identity_examples() {
        for (n, k) in [(2, 1), (2, 2), (3, 2)] {
            let check = norm_identity_check(n, k).unwrap();
            assert!(check.holds(), "n={n} k={k}: {check:?}");
            assert!(check.boundary.is_zero());
        }
    }

    #[test]
    fn constant_examples() {
        for k in 0..4 {
            assert_eq!(constant_c(1, k).unwrap().value, PiScalar::one());
        }
        assert_eq!(constant_c(2, 0).unwrap().value, PiScalar::monomial(int(-1), 1));
        let c3 = constant_c(3, 0).unwrap();
        assert_eq!(c3.sign_and_pi_power().map(|(_, e)| e), Some(2));
    }

    #[test]
    fn nu_is_integer_on_the_chain() {
        for n in 1..=12 {
            assert!(nu_of_mu_n_is_integer(n));
        }
    }
}

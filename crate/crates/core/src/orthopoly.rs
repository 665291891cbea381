//! Chebyshev-U and Gegenbauer polynomials, exact and floating.
//!
//! Gegenbauer polynomials are built from the standard three-term recurrence
//! `k·C_k = 2(k+ν−1)u·C_{k−1} − (k+2ν−2)·C_{k−2}`. The ODE check, the contiguous-order
//! identity and the orthogonality integrals are independent certifications of it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use statrs::function::gamma::ln_gamma;

use crate::scalar::{big, gamma_int, int, rat, PiScalar};
use crate::trig::SinCosForm;
use crate::upoly::UPoly;

/// Chebyshev polynomial of the second kind, `sin((n+1)θ) = sin θ · U_n(cos θ)`.
pub fn cheb_u(n: usize) -> UPoly {
    let two_u = UPoly::from_ints(&[0, 2]);
    let mut prev = UPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_u.clone();
    for _ in 2..=n {
        let next = &(&two_u * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Exact `C_k^{(ν)}(u)`. Panics unless `ν > 0`.
pub fn gegenbauer(k: usize, nu: &BigRational) -> UPoly {
    gegenbauer_table(k, nu).pop().expect("table has k+1 entries")
}

/// `[C_0^{(ν)}, …, C_k^{(ν)}]`.
pub fn gegenbauer_table(k: usize, nu: &BigRational) -> Vec<UPoly> {
    assert!(nu.is_positive(), "Gegenbauer order must be positive, got {nu}");
    let mut out = vec![UPoly::one()];
    if k == 0 {
        return out;
    }
    let two_nu = nu * int(2);
    out.push(UPoly::monomial(PiScalar::from_rational(two_nu.clone()), 1));
    for j in 2..=k {
        let jr = int(j as i64);
        let a = (&jr + nu - int(1)) * int(2) / &jr;
        let b = (&jr + &two_nu - int(2)) / &jr;
        let next = &out[j - 1].shift(1).scale_rational(&a) - &out[j - 2].scale_rational(&b);
        out.push(next);
    }
    out
}

/// Substitutes `C_k^{(ν)}` into `(1−u²)y″ − (2ν+1)u y′ + k(k+2ν)y` and checks the
/// residual polynomial vanishes identically.
pub fn verify_gegenbauer_ode(k: usize, nu: &BigRational) -> bool {
    gegenbauer_ode_residual(&gegenbauer(k, nu), k, nu).is_zero()
}

pub fn gegenbauer_ode_residual(y: &UPoly, k: usize, nu: &BigRational) -> UPoly {
    let d1 = y.derivative();
    let d2 = d1.derivative();
    let kr = int(k as i64);
    let lhs = &UPoly::one_minus_u2_pow(1) * &d2;
    let mid = d1.shift(1).scale_rational(&(nu * int(2) + int(1)));
    let last = y.scale_rational(&(&kr * (&kr + nu * int(2))));
    &(&lhs - &mid) + &last
}

/// Checks `C_{k+2}^{(n)} = C_k^{(n)} + (n+k+1)/(n−1) · C_{k+2}^{(n−1)}` exactly.
pub fn verify_cnk_recurrence(n: usize, k: usize) -> bool {
    assert!(n >= 2, "contiguous-order identity needs n ≥ 2");
    let nu = int(n as i64);
    let nu_lower = int(n as i64 - 1);
    let lhs = gegenbauer(k + 2, &nu);
    let factor = rat((n + k + 1) as i64, (n - 1) as i64);
    let rhs = &gegenbauer(k, &nu) + &gegenbauer(k + 2, &nu_lower).scale_rational(&factor);
    lhs == rhs
}

/// Exact `∫₋₁¹ C_k^{(ν)} C_l^{(ν)} (1−t²)^{ν−½} dt` for integer ν ≥ 1.
///
/// With `t = cos θ` the integral becomes `∫₀^π C_k(cos θ) C_l(cos θ) sin^{2ν}θ dθ`, a
/// trig polynomial integrated exactly.
pub fn gegenbauer_orthogonality_integral(k: usize, l: usize, nu: u32) -> PiScalar {
    assert!(nu >= 1, "exact orthogonality needs integer ν ≥ 1");
    let order = int(nu as i64);
    let table = gegenbauer_table(k.max(l), &order);
    let product = &table[k] * &table[l];
    SinCosForm::sin_power_times(2 * nu, &product)
        .to_fourier()
        .integrate_0_pi()
}

/// `π · 2^{1−2ν} Γ(k+2ν) / (k! (k+ν) Γ(ν)²)` for integer ν ≥ 1.
pub fn orthogonality_norm_closed_form(k: usize, nu: u32) -> PiScalar {
    let nu64 = nu as u64;
    let k64 = k as u64;
    let two_pow = BigInt::one() << (2 * nu64 - 1) as usize;
    let gamma_nu = gamma_int(nu64);
    let num = big(&gamma_int(k64 + 2 * nu64));
    let den = big(&(two_pow * gamma_int(k64 + 1) * BigInt::from(k64 + nu64) * &gamma_nu * &gamma_nu));
    PiScalar::monomial(num / den, 1)
}

/// `C_k^{(ν)}(1) = (2ν)_k / k!`.
pub fn gegenbauer_at_one(k: usize, nu: &BigRational) -> BigRational {
    let two_nu = nu * int(2);
    (0..k).fold(BigRational::one(), |acc, j| {
        acc * (&two_nu + int(j as i64)) / int(j as i64 + 1)
    })
}

/// Floating `C_k^{(ν)}(u)` by the forward recurrence.
pub fn gegenbauer_eval(k: usize, nu: f64, u: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 2.0 * nu * u;
    for j in 2..=k {
        let jf = j as f64;
        let next = (2.0 * (jf + nu - 1.0) * u * cur - (jf + 2.0 * nu - 2.0) * prev) / jf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized values `R_j = C_j^{(ν)}(u) / C_j^{(ν)}(1)` for `j = 0..count`.
///
/// `R_j = [2(j+ν−1)u·R_{j−1} − (j−1)·R_{j−2}] / (j+2ν−1)`, bounded by 1 in modulus
/// on `[−1, 1]`, so large degrees never overflow.
pub fn gegenbauer_normalized_sequence(count: usize, nu: f64, u: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(1.0);
    if count == 1 {
        return out;
    }
    out.push(u);
    for j in 2..count {
        let jf = j as f64;
        let next = (2.0 * (jf + nu - 1.0) * u * out[j - 1] - (jf - 1.0) * out[j - 2])
            / (jf + 2.0 * nu - 1.0);
        out.push(next);
    }
    out
}

/// `ln C_k^{(ν)}(1) = ln Γ(k+2ν) − ln Γ(2ν) − ln k!`.
pub fn ln_gegenbauer_at_one(k: usize, nu: f64) -> f64 {
    let kf = k as f64;
    ln_gamma(kf + 2.0 * nu) - ln_gamma(2.0 * nu) - ln_gamma(kf + 1.0)
}

/// Large-degree approximation of `C_k^{(ν)}(cos θ)`:
/// `sin^{−ν}θ · 2^ν (2ν)_k / (√(πk) (ν+½)_k) · cos((k+ν)θ − πν/2)`.
///
/// Diagnostic only; the error is O(k^{−3/2}) relative to the amplitude.
pub fn large_degree_asymptotic(k: usize, nu: f64, theta: f64) -> f64 {
    assert!(k >= 1, "asymptotic form needs k ≥ 1");
    let kf = k as f64;
    let ln_poch = |a: f64| ln_gamma(a + kf) - ln_gamma(a);
    let ln_amp = nu * std::f64::consts::LN_2 + ln_poch(2.0 * nu)
        - ln_poch(nu + 0.5)
        - 0.5 * (std::f64::consts::PI * kf).ln()
        - nu * theta.sin().ln();
    ln_amp.exp() * ((kf + nu) * theta - std::f64::consts::PI * nu / 2.0).cos()
}

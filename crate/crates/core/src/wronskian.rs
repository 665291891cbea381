//! Wronskians of the sine family `{sin x, …, sin((n−1)x), sin((n+k)x)}`.
//!
//! `W_n^{(k)}` is computed three independent ways: a brute-force divisionless
//! determinant, the two-step recurrence in `k` filled in Figure-1 order from its base
//! row and columns, and the Gegenbauer closed form
//! `(−2)^{n(n−1)/2} sin^{n(n+1)/2}(x) G(n+1) C_k^{(n)}(cos x)`.
//! All functions here use the bare variable (θ = x).

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use rand::Rng;

use crate::determinant;
use crate::orthopoly::gegenbauer;
use crate::scalar::{big, factorial, int, rat, PiScalar};
use crate::trig::{sin_power, FourierPoly, SinCosForm};
use crate::upoly::UPoly;

/// Largest family accepted by [`wronskian_bruteforce`].
pub const MAX_BRUTE_FORCE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WronskianError {
    #[error("Wronskian of {size} functions exceeds the brute-force limit of {MAX_BRUTE_FORCE}")]
    SizeExceeded { size: usize },
}

/// Which route produced a Wronskian value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Recurrence,
    ClosedForm,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::BruteForce => "brute_force",
            Method::Recurrence => "recurrence",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// The family `{sin x, …, sin((n−1)x), sin((n+k)x)}`; `W_1^{(k)} = sin((k+1)x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WronskianSpec {
    pub n: usize,
    pub k: usize,
}

impl WronskianSpec {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n >= 1, "family size must be at least 1");
        WronskianSpec { n, k }
    }

    pub fn family(&self) -> Vec<FourierPoly> {
        sine_family(self.n, self.k)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WronskianResult {
    pub value: FourierPoly,
    pub method: Method,
    pub spec: WronskianSpec,
}

pub fn sine_family(n: usize, k: usize) -> Vec<FourierPoly> {
    let mut fs: Vec<FourierPoly> = (1..n).map(|m| FourierPoly::sin(m as u32)).collect();
    fs.push(FourierPoly::sin((n + k) as u32));
    fs
}

/// Exact Wronskian: determinant of the matrix whose column j is `(f_j, f_j′, …, f_j^{(n−1)})`.
///
/// The empty family has Wronskian one.
pub fn wronskian_bruteforce(fs: &[FourierPoly]) -> Result<FourierPoly, WronskianError> {
    let n = fs.len();
    if n > MAX_BRUTE_FORCE {
        return Err(WronskianError::SizeExceeded { size: n });
    }
    // Derivative table per column, shared by every minor.
    let columns: Vec<Vec<FourierPoly>> = fs
        .iter()
        .map(|f| {
            let mut col = Vec::with_capacity(n);
            let mut cur = f.clone();
            for i in 0..n {
                if i > 0 {
                    cur = cur.diff();
                }
                col.push(cur.clone());
            }
            col
        })
        .collect();
    let rows: Vec<Vec<FourierPoly>> = (0..n)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect();
    Ok(determinant::det(&rows))
}

/// `W_n^{(k)}` by brute force.
pub fn w_bruteforce(n: usize, k: usize) -> Result<FourierPoly, WronskianError> {
    wronskian_bruteforce(&sine_family(n, k))
}

/// Barnes G at a positive integer: `G(1) = G(2) = 1`, `G(m) = ∏_{j=0}^{m−2} j!`.
pub fn barnes_g(m: u64) -> BigInt {
    assert!(m >= 1, "Barnes G is only tabulated at positive integers");
    (0..m.saturating_sub(1)).fold(BigInt::one(), |acc, j| acc * factorial(j))
}

/// `(−2)^{n(n−1)/2} · G(n+1)`.
pub fn leading_constant(n: usize) -> BigInt {
    let e = (n * (n - 1) / 2) as u32;
    Pow::pow(BigInt::from(-2), e) * barnes_g(n as u64 + 1)
}

fn sin_tri(n: usize) -> u32 {
    (n * (n + 1) / 2) as u32
}

/// Closed form `(−2)^{n(n−1)/2} sin^{n(n+1)/2}(x) G(n+1) C_k^{(n)}(cos x)`.
pub fn w_closed(n: usize, k: usize) -> FourierPoly {
    assert!(n >= 1);
    let c = gegenbauer(k, &int(n as i64)).scale_rational(&big(&leading_constant(n)));
    SinCosForm::sin_power_times(sin_tri(n), &c).to_fourier()
}

/// Base row `k = 0`: `(−2)^{n(n−1)/2} sin^{n(n+1)/2}(x) G(n+1)`.
pub fn consecutive_sines_closed(n: usize) -> FourierPoly {
    sin_power(sin_tri(n)).scale_rational(&big(&leading_constant(n)))
}

/// Base row `k = 1`: `(−2)^{n(n−1)/2} sin^{n(n+1)/2}(x) G(n+1) · 2n cos x`.
pub fn first_shift_closed(n: usize) -> FourierPoly {
    let c = big(&leading_constant(n)) * int(2 * n as i64);
    let q = UPoly::monomial(PiScalar::from_rational(c), 1);
    SinCosForm::sin_power_times(sin_tri(n), &q).to_fourier()
}

/// Coefficient `(−2)^{n−1} (n+k+1) (n−2)!` of the recurrence step producing `W_n^{(k+2)}`.
pub fn recurrence_factor(n: usize, k: usize) -> BigRational {
    assert!(n >= 2);
    let sign_pow = Pow::pow(BigInt::from(-2), (n - 1) as u32);
    big(&(sign_pow * BigInt::from(n + k + 1) * factorial((n - 2) as u64)))
}

/// `W_n^{(k+2)} − W_n^{(k)} − (−2)^{n−1}(n+k+1)(n−2)!·sinⁿx·W_{n−1}^{(k+2)}` given the three values.
pub fn shift_recurrence_defect(
    n: usize,
    k: usize,
    w_n_k2: &FourierPoly,
    w_n_k: &FourierPoly,
    w_nm1_k2: &FourierPoly,
) -> FourierPoly {
    let step = (&sin_power(n as u32) * w_nm1_k2).scale_rational(&recurrence_factor(n, k));
    &(w_n_k2 - w_n_k) - &step
}

/// The shift recurrence checked on brute-force values only.
pub fn shift_recurrence_holds(n: usize, k: usize) -> Result<bool, WronskianError> {
    let a = w_bruteforce(n, k + 2)?;
    let b = w_bruteforce(n, k)?;
    let c = w_bruteforce(n - 1, k + 2)?;
    Ok(shift_recurrence_defect(n, k, &a, &b, &c).is_zero())
}

/// `grid[n][k]` for `1 ≤ n ≤ n_max`, `0 ≤ k ≤ k_max`, filled by the recurrence.
///
/// Known values are the row `k = 0` (the consecutive-sine product), the row `k = 1` (closed form with a single `cos x`) and
/// the column `n = 1`. Every remaining cell is then forced, for `k = 2, 3, …` in turn
/// and, within each `k`, for increasing `n`.
pub fn recurrence_grid(n_max: usize, k_max: usize) -> Vec<Vec<FourierPoly>> {
    let mut grid = vec![vec![FourierPoly::zero(); k_max + 1]; n_max + 1];
    for k in 0..=k_max {
        grid[1][k] = FourierPoly::sin((k + 1) as u32);
    }
    for n in 2..=n_max {
        grid[n][0] = consecutive_sines_closed(n);
        if k_max >= 1 {
            grid[n][1] = first_shift_closed(n);
        }
    }
    let sin_pows: Vec<FourierPoly> = (0..=n_max).map(|n| sin_power(n as u32)).collect();
    for k in 2..=k_max {
        for n in 2..=n_max {
            let step = (&sin_pows[n] * &grid[n - 1][k]).scale_rational(&recurrence_factor(n, k - 2));
            grid[n][k] = &grid[n][k - 2] + &step;
        }
    }
    grid
}

pub fn w_recurrence(n: usize, k: usize) -> FourierPoly {
    assert!(n >= 1);
    recurrence_grid(n, k).swap_remove(n).swap_remove(k)
}

/// Outcome of the three-way comparison for one `(n, k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub spec: WronskianSpec,
    pub pass: bool,
    /// Milliseconds per method, in the order brute force, recurrence, closed form.
    pub method_times_ms: [f64; 3],
    /// Highest harmonic of the brute-force value.
    pub degree: u32,
    pub value: FourierPoly,
}

pub fn verify_theorem1(n: usize, k: usize) -> Result<VerificationRecord, WronskianError> {
    let spec = WronskianSpec::new(n, k);
    let t0 = Instant::now();
    let brute = w_bruteforce(n, k)?;
    let t1 = Instant::now();
    let rec = w_recurrence(n, k);
    let t2 = Instant::now();
    let closed = w_closed(n, k);
    let t3 = Instant::now();
    let ms = |a: Instant, b: Instant| (b - a).as_secs_f64() * 1e3;
    Ok(VerificationRecord {
        spec,
        pass: brute == rec && rec == closed,
        method_times_ms: [ms(t0, t1), ms(t1, t2), ms(t2, t3)],
        degree: brute.degree(),
        value: brute,
    })
}

/// Checks `Wr{f, f·g₁, …, f·g_{n−1}} = fⁿ · Wr{g₁′, …, g_{n−1}′}` where each `gᵢ` is a
/// polynomial in `cos θ` and primes are θ-derivatives.
pub fn check_prop1_factorization(f: &FourierPoly, gs: &[UPoly]) -> Result<bool, WronskianError> {
    let n = gs.len() + 1;
    let gs_trig: Vec<FourierPoly> = gs
        .iter()
        .map(|g| SinCosForm::new(g.clone(), UPoly::zero()).to_fourier())
        .collect();
    let mut lhs_family = vec![f.clone()];
    lhs_family.extend(gs_trig.iter().map(|g| f * g));
    let lhs = wronskian_bruteforce(&lhs_family)?;
    let derivs: Vec<FourierPoly> = gs_trig.iter().map(FourierPoly::diff).collect();
    let rhs = &f.pow(n as u32) * &wronskian_bruteforce(&derivs)?;
    Ok(lhs == rhs)
}

/// Coefficients drawn by the random instance generators.
pub const COEFF_POOL: [(i64, i64); 9] = [(-2, 1), (-1, 1), (-1, 2), (1, 3), (1, 2), (1, 1), (3, 2), (2, 1), (-3, 4)];

fn pool_coeff<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let (p, q) = COEFF_POOL[rng.gen_range(0..COEFF_POOL.len())];
    rat(p, q)
}

/// Random nonzero trig polynomial with harmonics `≤ degree`.
pub fn random_fourier<R: Rng + ?Sized>(rng: &mut R, degree: u32) -> FourierPoly {
    loop {
        let mut f = FourierPoly::zero();
        for m in 0..=degree {
            if rng.gen_bool(0.6) {
                f = &f + &FourierPoly::cos_term(m, pool_coeff(rng).into());
            }
            if m > 0 && rng.gen_bool(0.6) {
                f = &f + &FourierPoly::sin_term(m, pool_coeff(rng).into());
            }
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random polynomial in `u` of degree `≤ degree`.
pub fn random_upoly<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> UPoly {
    let coeffs: Vec<PiScalar> = (0..=degree)
        .map(|_| {
            if rng.gen_bool(0.7) {
                pool_coeff(rng).into()
            } else {
                PiScalar::zero()
            }
        })
        .collect();
    UPoly::new(coeffs)
}

/// One random instance for the factorization property: `f` of trig degree `≤ 3` and
/// `n − 1` polynomials of degree `≤ 2`, `1 ≤ n ≤ 4`.
pub fn random_factorization_instance<R: Rng + ?Sized>(rng: &mut R) -> (FourierPoly, Vec<UPoly>) {
    let n = rng.gen_range(1..=4usize);
    let f = random_fourier(rng, 3);
    let gs = (1..n).map(|_| random_upoly(rng, 2)).collect();
    (f, gs)
}

/// Numeric Wronskian value, for convenience in reports.
pub fn eval_wronskian(value: &FourierPoly, x: f64) -> f64 {
    value.eval(x, std::f64::consts::PI)
}

/// `(−2)^{n(n−1)/2} G(n+1)` as a rational, matching the leading factor of [`w_closed`].
pub fn leading_constant_rational(n: usize) -> BigRational {
    big(&leading_constant(n))
}

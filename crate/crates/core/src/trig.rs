//! Exact trigonometric polynomials `Σ aₘ sin(mθ) + bₘ cos(mθ)` over [`PiScalar`].
//!
//! Two angle conventions are used by callers. Identities about `W_n^{(k)}(x)` work in
//! the bare variable (θ = x). Objects on the unit interval use θ = πx, and there an
//! x-derivative is `π · d/dθ`; that factor is always carried as a π-power, never as a
//! float. Every function here operates on θ and is convention-agnostic except
//! [`FourierPoly::integrate01`], which assumes θ = πx.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{Map, Value};

use crate::scalar::{int, rat, PiScalar, Ring};
use crate::upoly::UPoly;
use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrigError {
    #[error("form is not divisible by sin^{power}(θ)")]
    NotDivisible { power: u32 },
}

/// Canonical trig polynomial: sparse harmonic maps with no zero coefficients.
/// `cos[0]` is the constant term; `sin` never has a 0 harmonic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FourierPoly {
    sin: BTreeMap<u32, PiScalar>,
    cos: BTreeMap<u32, PiScalar>,
}

fn accumulate(map: &mut BTreeMap<u32, PiScalar>, m: u32, c: PiScalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl FourierPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(PiScalar::one())
    }

    pub fn constant(c: PiScalar) -> Self {
        Self::cos_term(0, c)
    }

    /// `c · sin(mθ)`; `m = 0` gives zero.
    pub fn sin_term(m: u32, c: PiScalar) -> Self {
        let mut out = Self::zero();
        if m > 0 {
            accumulate(&mut out.sin, m, c);
        }
        out
    }

    /// `c · cos(mθ)`
    pub fn cos_term(m: u32, c: PiScalar) -> Self {
        let mut out = Self::zero();
        accumulate(&mut out.cos, m, c);
        out
    }

    pub fn sin(m: u32) -> Self {
        Self::sin_term(m, PiScalar::one())
    }

    pub fn cos(m: u32) -> Self {
        Self::cos_term(m, PiScalar::one())
    }

    pub fn sin_coeffs(&self) -> &BTreeMap<u32, PiScalar> {
        &self.sin
    }

    pub fn cos_coeffs(&self) -> &BTreeMap<u32, PiScalar> {
        &self.cos
    }

    pub fn is_zero(&self) -> bool {
        self.sin.is_empty() && self.cos.is_empty()
    }

    /// Highest harmonic present; 0 for constants and for zero.
    pub fn degree(&self) -> u32 {
        let s = self.sin.keys().next_back().copied().unwrap_or(0);
        let c = self.cos.keys().next_back().copied().unwrap_or(0);
        s.max(c)
    }

    /// Number of stored coefficients.
    pub fn term_count(&self) -> usize {
        self.sin.len() + self.cos.len()
    }

    pub fn scale(&self, c: &PiScalar) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (&m, a) in &self.sin {
            accumulate(&mut out.sin, m, a * c);
        }
        for (&m, a) in &self.cos {
            accumulate(&mut out.cos, m, a * c);
        }
        out
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.scale(&PiScalar::from_rational(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact d/dθ.
    pub fn diff(&self) -> Self {
        let mut out = Self::zero();
        for (&m, a) in &self.sin {
            accumulate(&mut out.cos, m, a.scale(&int(m as i64)));
        }
        for (&m, b) in &self.cos {
            if m > 0 {
                accumulate(&mut out.sin, m, b.scale(&int(-(m as i64))));
            }
        }
        out
    }

    pub fn diff_n(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |acc, _| acc.diff())
    }

    /// Exact `∫₀¹ f(πx) dx = (1/π) ∫₀^π f(θ) dθ`.
    pub fn integrate01(&self) -> PiScalar {
        // ∫₀^π sin(mθ) dθ = (1 − (−1)^m)/m, ∫₀^π cos(mθ) dθ = 0 for m ≥ 1.
        let mut total = PiScalar::zero();
        for (&m, a) in &self.sin {
            if m % 2 == 1 {
                total += &a.scale(&rat(2, m as i64)).shift_pi(-1);
            }
        }
        if let Some(c) = self.cos.get(&0) {
            total += c;
        }
        total
    }

    /// Exact `∫₀^π f(θ) dθ`.
    pub fn integrate_0_pi(&self) -> PiScalar {
        self.integrate01().shift_pi(1)
    }

    /// Exact value at θ = 0.
    pub fn value_at_zero(&self) -> PiScalar {
        let mut total = PiScalar::zero();
        for c in self.cos.values() {
            total += c;
        }
        total
    }

    /// Exact value at θ = π.
    pub fn value_at_pi(&self) -> PiScalar {
        let mut total = PiScalar::zero();
        for (&m, c) in &self.cos {
            if m % 2 == 0 {
                total += c;
            } else {
                total += &(-c);
            }
        }
        total
    }

    /// Floating evaluation at θ with π replaced by `pi_value` inside the coefficients.
    pub fn eval(&self, theta: f64, pi_value: f64) -> f64 {
        let s: f64 = self
            .sin
            .iter()
            .map(|(&m, a)| a.eval(pi_value) * (m as f64 * theta).sin())
            .sum();
        let c: f64 = self
            .cos
            .iter()
            .map(|(&m, b)| b.eval(pi_value) * (m as f64 * theta).cos())
            .sum();
        s + c
    }

    /// Writes `f = P0(cos θ) + sin θ · P1(cos θ)` using `sin(mθ) = sin θ · U_{m−1}(cos θ)`
    /// and `cos(mθ) = T_m(cos θ)`.
    pub fn to_sincos_form(&self) -> SinCosForm {
        let deg = self.degree() as usize;
        let (t, u) = chebyshev_tables(deg);
        let mut p0 = UPoly::zero();
        let mut p1 = UPoly::zero();
        for (&m, a) in &self.cos {
            p0 = &p0 + &t[m as usize].scale(a);
        }
        for (&m, a) in &self.sin {
            p1 = &p1 + &u[m as usize - 1].scale(a);
        }
        SinCosForm::new(p0, p1)
    }

    /// `{"sin": {m: [[e, "p/q"], ...]}, "cos": {...}}`
    pub fn to_json(&self) -> Value {
        fn side(map: &BTreeMap<u32, PiScalar>) -> Value {
            let mut obj = Map::new();
            for (m, c) in map {
                obj.insert(m.to_string(), c.to_json());
            }
            Value::Object(obj)
        }
        let mut obj = Map::new();
        obj.insert("sin".into(), side(&self.sin));
        obj.insert("cos".into(), side(&self.cos));
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Self, ParseError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::Json(format!("expected object, got {value}")))?;
        let mut out = FourierPoly::zero();
        for (key, map) in [("sin", &mut out.sin), ("cos", &mut out.cos)] {
            let Some(side) = obj.get(key) else { continue };
            let side = side
                .as_object()
                .ok_or_else(|| ParseError::Json(format!("\"{key}\" must be an object")))?;
            for (m, c) in side {
                let m: u32 = m
                    .parse()
                    .map_err(|_| ParseError::Json(format!("bad harmonic {m:?}")))?;
                if key == "sin" && m == 0 {
                    return Err(ParseError::Json("sin harmonic 0 is not allowed".into()));
                }
                accumulate(map, m, PiScalar::from_json(c)?);
            }
        }
        Ok(out)
    }

    /// Compact JSON; harmonic keys are strings, so they sort lexicographically.
    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }
}

/// Chebyshev T₀..T_deg and U₀..U_deg (at least one entry each).
fn chebyshev_tables(deg: usize) -> (Vec<UPoly>, Vec<UPoly>) {
    let two_u = UPoly::from_ints(&[0, 2]);
    let mut t = vec![UPoly::one(), UPoly::from_ints(&[0, 1])];
    let mut u = vec![UPoly::one(), two_u.clone()];
    for m in 2..=deg.max(1) {
        t.push(&(&two_u * &t[m - 1]) - &t[m - 2]);
        u.push(&(&two_u * &u[m - 1]) - &u[m - 2]);
    }
    (t, u)
}

impl Add for &FourierPoly {
    type Output = FourierPoly;
    fn add(self, rhs: &FourierPoly) -> FourierPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.sin {
            accumulate(&mut out.sin, m, c.clone());
        }
        for (&m, c) in &rhs.cos {
            accumulate(&mut out.cos, m, c.clone());
        }
        out
    }
}

impl Neg for &FourierPoly {
    type Output = FourierPoly;
    fn neg(self) -> FourierPoly {
        FourierPoly {
            sin: self.sin.iter().map(|(&m, c)| (m, -c)).collect(),
            cos: self.cos.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for &FourierPoly {
    type Output = FourierPoly;
    fn sub(self, rhs: &FourierPoly) -> FourierPoly {
        self + &(-rhs)
    }
}

impl Mul for &FourierPoly {
    type Output = FourierPoly;
    /// Product-to-sum:
    /// `sin a sin b = ½[cos(a−b) − cos(a+b)]`,
    /// `sin a cos b = ½[sin(a+b) + sin(a−b)]`,
    /// `cos a cos b = ½[cos(a−b) + cos(a+b)]`.
    fn mul(self, rhs: &FourierPoly) -> FourierPoly {
        if self.is_zero() || rhs.is_zero() {
            return FourierPoly::zero();
        }
        // Accumulate doubled products, halve once at the end.
        let mut acc = FourierPoly::zero();
        let add_sin = |acc: &mut FourierPoly, a: u32, b: u32, c: &PiScalar, sign_b: bool| {
            // c·sin(a ± b) with the sign of the difference folded in.
            let (m, neg) = if sign_b {
                (a + b, false)
            } else if a >= b {
                (a - b, false)
            } else {
                (b - a, true)
            };
            if m > 0 {
                accumulate(&mut acc.sin, m, if neg { -c } else { c.clone() });
            }
        };
        for (&a, ca) in &self.sin {
            for (&b, cb) in &rhs.sin {
                let p = ca * cb;
                accumulate(&mut acc.cos, a.abs_diff(b), p.clone());
                accumulate(&mut acc.cos, a + b, -p);
            }
            for (&b, cb) in &rhs.cos {
                let p = ca * cb;
                add_sin(&mut acc, a, b, &p, true);
                add_sin(&mut acc, a, b, &p, false);
            }
        }
        for (&a, ca) in &self.cos {
            for (&b, cb) in &rhs.sin {
                // cos a sin b = ½[sin(b+a) + sin(b−a)]
                let p = ca * cb;
                add_sin(&mut acc, b, a, &p, true);
                add_sin(&mut acc, b, a, &p, false);
            }
            for (&b, cb) in &rhs.cos {
                let p = ca * cb;
                accumulate(&mut acc.cos, a.abs_diff(b), p.clone());
                accumulate(&mut acc.cos, a + b, p);
            }
        }
        acc.scale_rational(&rat(1, 2))
    }
}

impl Add for FourierPoly {
    type Output = FourierPoly;
    fn add(self, rhs: FourierPoly) -> FourierPoly {
        &self + &rhs
    }
}

impl Sub for FourierPoly {
    type Output = FourierPoly;
    fn sub(self, rhs: FourierPoly) -> FourierPoly {
        &self - &rhs
    }
}

impl Mul for FourierPoly {
    type Output = FourierPoly;
    fn mul(self, rhs: FourierPoly) -> FourierPoly {
        &self * &rhs
    }
}

impl Neg for FourierPoly {
    type Output = FourierPoly;
    fn neg(self) -> FourierPoly {
        -&self
    }
}

impl Ring for FourierPoly {
    fn zero() -> Self {
        FourierPoly::zero()
    }
    fn one() -> Self {
        FourierPoly::one()
    }
    fn is_zero(&self) -> bool {
        FourierPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl fmt::Display for FourierPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, c: &PiScalar, name: &str, m: u32| {
            let sep = if first { "" } else { " + " };
            first = false;
            match (name, m) {
                ("cos", 0) => write!(f, "{sep}{c}"),
                _ if c.is_one() => write!(f, "{sep}{name}({m}θ)"),
                _ => write!(f, "{sep}{c}·{name}({m}θ)"),
            }
        };
        for (&m, c) in &self.cos {
            term(f, c, "cos", m)?;
        }
        for (&m, c) in &self.sin {
            term(f, c, "sin", m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FourierPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FourierPoly({self})")
    }
}

/// `p0(cos θ) + sin θ · p1(cos θ)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct SinCosForm {
    pub p0: UPoly,
    pub p1: UPoly,
}

impl SinCosForm {
    pub fn new(p0: UPoly, p1: UPoly) -> Self {
        SinCosForm { p0, p1 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.p0.is_zero() && self.p1.is_zero()
    }

    /// `sin^power θ · q(cos θ)`.
    pub fn sin_power_times(power: u32, q: &UPoly) -> Self {
        let even = UPoly::one_minus_u2_pow((power / 2) as usize);
        let body = &even * q;
        if power.is_multiple_of(2) {
            SinCosForm::new(body, UPoly::zero())
        } else {
            SinCosForm::new(UPoly::zero(), body)
        }
    }

    pub fn scale(&self, c: &PiScalar) -> Self {
        SinCosForm::new(self.p0.scale(c), self.p1.scale(c))
    }

    /// Product in the ring, using `sin²θ = 1 − u²`.
    pub fn mul(&self, other: &SinCosForm) -> SinCosForm {
        let sin2 = UPoly::one_minus_u2_pow(1);
        let p0 = &(&self.p0 * &other.p0) + &(&sin2 * &(&self.p1 * &other.p1));
        let p1 = &(&self.p0 * &other.p1) + &(&self.p1 * &other.p0);
        SinCosForm::new(p0, p1)
    }

    /// Expands back into harmonics; inverse of [`FourierPoly::to_sincos_form`].
    pub fn to_fourier(&self) -> FourierPoly {
        let cos1 = FourierPoly::cos(1);
        let horner = |p: &UPoly| {
            let mut acc = FourierPoly::zero();
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * &cos1) + &FourierPoly::constant(c.clone());
            }
            acc
        };
        let even = horner(&self.p0);
        let odd = &horner(&self.p1) * &FourierPoly::sin(1);
        &even + &odd
    }

    /// Divides by `sin^power θ`. One step maps `(P0, P1)` to `(P1, P0/(1 − u²))`, which
    /// requires `(1 − u²) | P0`.
    pub fn div_sin_power(&self, power: u32) -> Result<SinCosForm, TrigError> {
        let mut cur = self.clone();
        for _ in 0..power {
            let q = cur
                .p0
                .div_one_minus_u2()
                .ok_or(TrigError::NotDivisible { power })?;
            cur = SinCosForm::new(cur.p1, q);
        }
        Ok(cur)
    }

    /// If the form is `sin^power θ · q(cos θ)`, returns `q`.
    pub fn strip_sin_power(&self, power: u32) -> Option<UPoly> {
        let rest = self.div_sin_power(power).ok()?;
        rest.p1.is_zero().then_some(rest.p0)
    }

    pub fn eval(&self, theta: f64, pi_value: f64) -> f64 {
        let u = theta.cos();
        self.p0.eval_f64(u, pi_value) + theta.sin() * self.p1.eval_f64(u, pi_value)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("p0".into(), self.p0.to_json());
        obj.insert("p1".into(), self.p1.to_json());
        Value::Object(obj)
    }
}

impl fmt::Display for SinCosForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + sinθ·[{}]", self.p0, self.p1)
    }
}

/// The first nonzero coefficient of a form, scanning p0 then p1 from low to high powers.
pub(crate) fn first_nonzero(form: &SinCosForm) -> Option<(usize, usize, &PiScalar)> {
    for (part, p) in [&form.p0, &form.p1].into_iter().enumerate() {
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                return Some((part, i, c));
            }
        }
    }
    None
}

/// `sin^power θ` as a trig polynomial.
pub fn sin_power(power: u32) -> FourierPoly {
    SinCosForm::sin_power_times(power, &UPoly::one()).to_fourier()
}

/// Sign of a rational as -1, 0 or 1.
pub(crate) fn rational_sign(r: &BigRational) -> i32 {
    if Zero::is_zero(r) {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn q(n: i64, d: i64) -> PiScalar {
        PiScalar::from_rational(rat(n, d))
    }

    fn sin_c(m: u32, n: i64, d: i64) -> FourierPoly {
        FourierPoly::sin_term(m, q(n, d))
    }

    fn cos_c(m: u32, n: i64, d: i64) -> FourierPoly {
        FourierPoly::cos_term(m, q(n, d))
    }

    #[test]
    fn addition_examples() {
        let s = FourierPoly::sin(1);
        assert_eq!(&s + &FourierPoly::zero(), s);
        assert!((&s + &(-&s)).is_zero());
        // ¼(3 sinθ − sin3θ) + ¼ sin3θ = ¾ sinθ
        let sin_cubed = &sin_c(1, 3, 4) + &sin_c(3, -1, 4);
        assert_eq!(&sin_cubed + &sin_c(3, 1, 4), sin_c(1, 3, 4));
    }

    #[test]
    fn multiplication_examples() {
        let s1 = FourierPoly::sin(1);
        assert_eq!(&s1 * &FourierPoly::sin(2), &cos_c(1, 1, 2) + &cos_c(3, -1, 2));
        assert_eq!(&s1 * &FourierPoly::one(), s1);
        // sin³θ = ¾ sinθ − ¼ sin3θ
        assert_eq!(&(&s1 * &s1) * &s1, &sin_c(1, 3, 4) + &sin_c(3, -1, 4));
        // sinθ·cos2θ = ½ sin3θ − ½ sinθ
        assert_eq!(&s1 * &FourierPoly::cos(2), &sin_c(3, 1, 2) + &sin_c(1, -1, 2));
        assert_eq!(&FourierPoly::cos(2) * &s1, &sin_c(3, 1, 2) + &sin_c(1, -1, 2));
    }

    #[test]
    fn differentiation_examples() {
        assert_eq!(FourierPoly::sin(3).diff(), cos_c(3, 3, 1));
        assert!(FourierPoly::constant(q(5, 2)).diff().is_zero());
        for m in 1..6u32 {
            assert_eq!(FourierPoly::sin(m).diff_n(2), sin_c(m, -(m as i64 * m as i64), 1));
        }
    }

    #[test]
    fn integration_examples() {
        let s1 = FourierPoly::sin(1);
        assert_eq!((&s1 * &s1).integrate01(), q(1, 2));
        assert!((&s1 * &FourierPoly::sin(2)).integrate01().is_zero());
        // 4π² sin⁴ = 4π²(3/8 − ½cos2θ + ⅛cos4θ), integral (3/2)π²
        let f = sin_power(4).scale(&PiScalar::monomial(int(4), 2));
        assert_eq!(f.integrate01(), PiScalar::monomial(rat(3, 2), 2));
        // ∫₀¹ sin(πx) dx = 2/π
        assert_eq!(s1.integrate01(), PiScalar::monomial(int(2), -1));
    }

    #[test]
    fn evaluation_examples() {
        let pi = std::f64::consts::PI;
        assert_eq!(FourierPoly::sin(1).eval(0.0, pi), 0.0);
        assert_eq!(FourierPoly::cos(1).eval(0.0, pi), 1.0);
        let sin_cubed = &sin_c(1, 3, 4) + &sin_c(3, -1, 4);
        assert!((sin_cubed.eval(pi / 2.0, pi) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sincos_form_examples() {
        let sc = FourierPoly::cos(2).to_sincos_form();
        assert_eq!(sc, SinCosForm::new(UPoly::from_ints(&[-1, 0, 2]), UPoly::zero()));
        let sc = FourierPoly::sin(3).to_sincos_form();
        assert_eq!(sc, SinCosForm::new(UPoly::zero(), UPoly::from_ints(&[-1, 0, 4])));
        let sc = FourierPoly::sin(1).to_sincos_form();
        assert_eq!(sc, SinCosForm::new(UPoly::zero(), UPoly::one()));

        let f = SinCosForm::new(UPoly::from_ints(&[0, 1]), UPoly::zero()).to_fourier();
        assert_eq!(f, FourierPoly::cos(1));
        let f = SinCosForm::new(UPoly::zero(), UPoly::from_ints(&[0, 2])).to_fourier();
        assert_eq!(f, FourierPoly::sin(2));
        let f = SinCosForm::new(UPoly::from_ints(&[1, 0, -1]), UPoly::zero()).to_fourier();
        assert_eq!(f, &cos_c(0, 1, 2) + &cos_c(2, -1, 2));
    }

    #[test]
    fn sin_power_division_examples() {
        let sin3 = sin_power(3).to_sincos_form();
        assert_eq!(sin3.div_sin_power(2).unwrap(), FourierPoly::sin(1).to_sincos_form());
        let w20 = sin_power(3).scale(&PiScalar::from_int(-2)).to_sincos_form();
        let got = w20.div_sin_power(1).unwrap();
        assert_eq!(got, SinCosForm::new(UPoly::from_ints(&[-2, 0, 2]), UPoly::zero()));
        let cos1 = FourierPoly::cos(1).to_sincos_form();
        assert_eq!(cos1.div_sin_power(1), Err(TrigError::NotDivisible { power: 1 }));
        assert_eq!(cos1.div_sin_power(0).unwrap(), cos1);
    }

    #[test]
    fn equality_examples() {
        let sin2 = &FourierPoly::sin(1) * &FourierPoly::sin(1);
        assert_eq!(sin2, &cos_c(0, 1, 2) + &cos_c(2, -1, 2));
        assert_ne!(FourierPoly::sin(1), FourierPoly::cos(1));
    }

    #[test]
    fn endpoint_values() {
        let f = &cos_c(0, 2, 1) + &(&cos_c(3, 5, 1) + &sin_c(2, 7, 1));
        assert_eq!(f.value_at_zero(), PiScalar::from_int(7));
        assert_eq!(f.value_at_pi(), PiScalar::from_int(-3));
    }

    #[test]
    fn json_shape() {
        let f = &sin_c(1, 3, 4) + &FourierPoly::cos_term(2, PiScalar::monomial(rat(-1, 2), 1));
        let s = f.to_json_string();
        assert_eq!(s, r#"{"cos":{"2":[[1,"-1/2"]]},"sin":{"1":[[0,"3/4"]]}}"#);
        assert_eq!(FourierPoly::from_json(&f.to_json()).unwrap(), f);
        let bad: Value = serde_json::from_str(r#"{"sin":{"0":[[0,"1/1"]]}}"#).unwrap();
        assert!(FourierPoly::from_json(&bad).is_err());
    }
}

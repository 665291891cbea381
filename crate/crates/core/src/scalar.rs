//! Exact scalars: big rationals and the π-graded ring built on them.
//!
//! π is treated as a formal transcendental. A [`PiScalar`] is a finite sum
//! `Σ r_e · π^e` with rational `r_e` and integer (possibly negative) `e`;
//! distinct powers never merge, so every constant that carries π stays exact.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::ParseError;

/// Minimal commutative-ring interface used by the divisionless determinant.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn big(value: &BigInt) -> BigRational {
    BigRational::from_integer(value.clone())
}

/// Canonical `"p/q"` string; the denominator is always written, even when it is 1.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::Rational(s.to_string());
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Exact Γ(m) = (m−1)! for positive integer m.
pub fn gamma_int(m: u64) -> BigInt {
    assert!(m >= 1, "gamma_int needs a positive argument");
    factorial(m - 1)
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators or denominators: fall back to a scaled division.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Finite sum `Σ coeff · π^exp`, sorted by exponent with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PiScalar {
    terms: Vec<(i32, BigRational)>,
}

impl PiScalar {
    pub fn zero() -> Self {
        PiScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(One::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::monomial(r, 0)
    }

    pub fn from_int(value: i64) -> Self {
        Self::from_rational(int(value))
    }

    /// `coeff · π^exp`.
    pub fn monomial(coeff: BigRational, exp: i32) -> Self {
        if Zero::is_zero(&coeff) {
            Self::zero()
        } else {
            PiScalar {
                terms: vec![(exp, coeff)],
            }
        }
    }

    pub fn pi_pow(exp: i32) -> Self {
        Self::monomial(One::one(), exp)
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging and pruning.
    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut out = PiScalar::zero();
        for (e, c) in terms {
            out += &PiScalar::monomial(c, e);
        }
        out
    }

    pub fn terms(&self) -> &[(i32, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// The single term, if this scalar is `c · π^e`.
    pub fn as_monomial(&self) -> Option<(i32, &BigRational)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    /// The rational value if no π is involved.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(Zero::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.terms
            .iter()
            .find(|(e, _)| *e == exp)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Zero::zero)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if Zero::is_zero(factor) {
            return Self::zero();
        }
        PiScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    /// Multiplies by `π^shift`.
    pub fn shift_pi(&self, shift: i32) -> Self {
        PiScalar {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Exact division by a monomial `c · π^e`; `None` for zero or multi-term divisors.
    pub fn div_monomial(&self, divisor: &PiScalar) -> Option<Self> {
        let (e, c) = divisor.as_monomial()?;
        let inv = c.recip();
        Some(self.scale(&inv).shift_pi(-e))
    }

    /// Numeric value with π replaced by `pi_value`.
    pub fn eval(&self, pi_value: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| rational_to_f64(c) * pi_value.powi(*e))
            .sum()
    }

    pub fn to_f64(&self) -> f64 {
        self.eval(std::f64::consts::PI)
    }

    /// `[[e, "p/q"], ...]`
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| Value::Array(vec![Value::from(*e), Value::from(format_rational(c))]))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self, ParseError> {
        let bad = || ParseError::Json(format!("expected [[e, \"p/q\"], ...], got {value}"));
        let items = value.as_array().ok_or_else(bad)?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            let pair = item.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
            let e = pair[0].as_i64().ok_or_else(bad)?;
            let e = i32::try_from(e).map_err(|_| bad())?;
            let c = parse_rational(pair[1].as_str().ok_or_else(bad)?)?;
            terms.push((e, c));
        }
        Ok(PiScalar::from_terms(terms))
    }
}

impl AddAssign<&PiScalar> for PiScalar {
    fn add_assign(&mut self, rhs: &PiScalar) {
        if rhs.terms.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            self.terms = rhs.terms.clone();
            return;
        }
        // Fast path for the common single-power case.
        if self.terms.len() == 1 && rhs.terms.len() == 1 && self.terms[0].0 == rhs.terms[0].0 {
            let sum = &self.terms[0].1 + &rhs.terms[0].1;
            if Zero::is_zero(&sum) {
                self.terms.clear();
            } else {
                self.terms[0].1 = sum;
            }
            return;
        }
        let mut merged = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut a = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut b = rhs.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ea, _)), Some((eb, _))) => {
                    if ea < eb {
                        merged.push(a.next().unwrap());
                    } else if eb < ea {
                        merged.push(b.next().unwrap().clone());
                    } else {
                        let (e, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let sum = ca + cb;
                        if !Zero::is_zero(&sum) {
                            merged.push((e, sum));
                        }
                    }
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, Some(_)) => merged.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        self.terms = merged;
    }
}

impl Add for &PiScalar {
    type Output = PiScalar;
    fn add(self, rhs: &PiScalar) -> PiScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for PiScalar {
    type Output = PiScalar;
    fn add(mut self, rhs: PiScalar) -> PiScalar {
        self += &rhs;
        self
    }
}

impl Neg for &PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        PiScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        -&self
    }
}

impl Sub for &PiScalar {
    type Output = PiScalar;
    fn sub(self, rhs: &PiScalar) -> PiScalar {
        self + &(-rhs)
    }
}

impl Sub for PiScalar {
    type Output = PiScalar;
    fn sub(self, rhs: PiScalar) -> PiScalar {
        &self - &rhs
    }
}

impl Mul for &PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: &PiScalar) -> PiScalar {
        if self.terms.is_empty() || rhs.terms.is_empty() {
            return PiScalar::zero();
        }
        if let ([(ea, ca)], [(eb, cb)]) = (self.terms.as_slice(), rhs.terms.as_slice()) {
            return PiScalar {
                terms: vec![(ea + eb, ca * cb)],
            };
        }
        let mut out = PiScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out += &PiScalar::monomial(ca * cb, ea + eb);
            }
        }
        out
    }
}

impl Mul for PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: PiScalar) -> PiScalar {
        &self * &rhs
    }
}

impl Ring for PiScalar {
    fn zero() -> Self {
        PiScalar::zero()
    }
    fn one() -> Self {
        PiScalar::one()
    }
    fn is_zero(&self) -> bool {
        PiScalar::is_zero(self)
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

impl From<BigRational> for PiScalar {
    fn from(r: BigRational) -> Self {
        PiScalar::from_rational(r)
    }
}

impl From<i64> for PiScalar {
    fn from(v: i64) -> Self {
        PiScalar::from_int(v)
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let needs_parens = self.terms.len() > 1;
        if needs_parens {
            write!(f, "(")?;
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match *e {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}·π")?,
                _ => write!(f, "{a}·π^{e}")?,
            }
        }
        if needs_parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiScalar({self})")
    }
}

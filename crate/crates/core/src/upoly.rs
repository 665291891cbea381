//! Dense univariate polynomials in `u` with [`PiScalar`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;
use serde_json::Value;

use crate::scalar::{int, PiScalar, Ring};
use crate::ParseError;

/// `Σ coeffs[i] · u^i`; the leading coefficient is nonzero, the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<PiScalar>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<PiScalar>) -> Self {
        while coeffs.last().is_some_and(PiScalar::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(PiScalar::one())
    }

    pub fn constant(c: PiScalar) -> Self {
        Self::new(vec![c])
    }

    /// `c · u^power`
    pub fn monomial(c: PiScalar, power: usize) -> Self {
        let mut coeffs = vec![PiScalar::zero(); power];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn from_rationals(coeffs: &[BigRational]) -> Self {
        Self::new(coeffs.iter().cloned().map(PiScalar::from).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| PiScalar::from_int(c)).collect())
    }

    /// `(1 − u²)^power`, the image of `sin^{2·power} θ` under `u = cos θ`.
    pub fn one_minus_u2_pow(power: usize) -> Self {
        let base = UPoly::from_ints(&[1, 0, -1]);
        (0..power).fold(UPoly::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[PiScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> PiScalar {
        self.coeffs.get(i).cloned().unwrap_or_else(PiScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&PiScalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &PiScalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Multiplies by `u^power`.
    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![PiScalar::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&int(i as i64)))
                .collect(),
        )
    }

    pub fn eval_rational(&self, u: &BigRational) -> PiScalar {
        let mut acc = PiScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(u) + c;
        }
        acc
    }

    pub fn eval_f64(&self, u: f64, pi_value: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * u + c.eval(pi_value))
    }

    /// Exact quotient by `1 − u²`, or `None` if the division leaves a remainder.
    pub fn div_one_minus_u2(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < 3 {
            return None;
        }
        // Long division by the monic u² − 1, negated at the end.
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - 2;
        let mut quot = vec![PiScalar::zero(); qlen];
        for i in (0..qlen).rev() {
            let q = rem[i + 2].clone();
            if !q.is_zero() {
                rem[i] = &rem[i] + &q;
                rem[i + 2] = PiScalar::zero();
            }
            quot[i] = q;
        }
        if rem.iter().all(PiScalar::is_zero) {
            Some(-&UPoly::new(quot))
        } else {
            None
        }
    }

    /// `[[[e, "p/q"], ...], ...]`, one π-scalar per power of `u`.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(PiScalar::to_json).collect())
    }

    pub fn from_json(value: &Value) -> Result<Self, ParseError> {
        let items = value
            .as_array()
            .ok_or_else(|| ParseError::Json(format!("expected coefficient array, got {value}")))?;
        let coeffs = items
            .iter()
            .map(PiScalar::from_json)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UPoly::new(coeffs))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..len).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![PiScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        UPoly::new(out)
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, rhs: UPoly) -> UPoly {
        &self + &rhs
    }
}

impl Sub for UPoly {
    type Output = UPoly;
    fn sub(self, rhs: UPoly) -> UPoly {
        &self - &rhs
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: UPoly) -> UPoly {
        &self * &rhs
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

impl Ring for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
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

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let unit = c.is_one() && i > 0;
            if !unit {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}u", if unit { "" } else { "·" })?,
                _ => write!(f, "{}u^{i}", if unit { "" } else { "·" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

/// True if every coefficient is free of π (pure rational polynomial).
pub fn is_rational_poly(p: &UPoly) -> bool {
    p.coeffs().iter().all(|c| c.as_rational().is_some())
}

/// Sum of coefficients, i.e. the value at `u = 1`.
pub fn value_at_one(p: &UPoly) -> PiScalar {
    p.eval_rational(&<BigRational as One>::one())
}

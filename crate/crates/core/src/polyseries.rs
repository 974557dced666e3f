//! Exact univariate integer polynomials and rational generating functions
//! with denominators of the form `(1 - x)^k`.
//!
//! Everything here is arbitrary precision. Rationals only show up in
//! [`IntPolynomial::eval`] and [`interpolate`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("interpolation needs at least one point")]
    NoPoints,
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(BigInt),
    #[error("interpolating polynomial has the non-integer coefficient {coefficient} at x^{degree}")]
    NonIntegerCoefficient { degree: usize, coefficient: BigRational },
}

/// Integer polynomial in `x`, coefficients in ascending degree.
///
/// The coefficient vector never has trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * x^degree`
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(x + shift)^k`
    pub fn linear_power(shift: i64, k: usize) -> Self {
        Self::from_i64s(&[shift, 1]).pow(k)
    }

    /// `(1 - x)^k`
    pub fn one_minus_x_pow(k: usize) -> Self {
        Self::from_i64s(&[1, -1]).pow(k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_int(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * t + BigRational::from_integer(c.clone())
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `x^d * self(1/x)`. Requires `deg self <= d`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(
            self.degree().is_none_or(|deg| deg <= d),
            "cannot reverse a degree {:?} polynomial at degree {d}",
            self.degree()
        );
        let mut coeffs: Vec<BigInt> = (0..=d).map(|i| self.coeff(i)).collect();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn is_palindromic(&self, d: usize) -> bool {
        self.degree().is_none_or(|deg| deg <= d) && self.reversed(d) == *self
    }

    /// Exact quotient by `(1 - x)`, or `None` if `(1 - x)` does not divide.
    pub fn div_one_minus_x(&self) -> Option<Self> {
        let deg = self.degree()?;
        // p = (1 - x) q  <=>  q_i = p_0 + ... + p_i, with p(1) = 0
        let mut partial = BigInt::zero();
        let mut quotient = Vec::with_capacity(deg);
        for (i, c) in self.coeffs.iter().enumerate() {
            partial += c;
            if i < deg {
                quotient.push(partial.clone());
            }
        }
        partial.is_zero().then(|| Self::from_coeffs(quotient))
    }

    /// Human form, descending: `x^2 - 3x + 2`.
    pub fn to_human(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_magnitude = deg == 0 || !magnitude.is_one();
            if show_magnitude {
                write!(f, "{magnitude}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

pub(crate) fn serialize_bigint<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match c.to_i64() {
        Some(small) => s.serialize_i64(small),
        None => serde_json::Number::from_str(&c.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s),
    }
}

pub(crate) fn bigint_from_number<E: serde::de::Error>(n: &serde_json::Number) -> Result<BigInt, E> {
    BigInt::from_str(&n.to_string()).map_err(|_| E::custom(format!("expected an integer, got {n}")))
}

struct BigIntRef<'a>(&'a BigInt);

impl Serialize for BigIntRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(BigIntRef))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<serde_json::Number>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(bigint_from_number::<D::Error>)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

/// Unique polynomial of degree below `points.len()` through `points`,
/// provided its coefficients are integers.
pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<IntPolynomial, PolyError> {
    if points.is_empty() {
        return Err(PolyError::NoPoints);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(PolyError::DuplicateAbscissa(xi.clone()));
        }
    }
    // Newton divided differences, then expand the Newton basis.
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(x.clone()))
        .collect();
    let mut table: Vec<BigRational> = points
        .iter()
        .map(|(_, y)| BigRational::from_integer(y.clone()))
        .collect();
    let n = points.len();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut result = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for (k, coeff) in table.iter().enumerate() {
        for (r, b) in result.iter_mut().zip(&basis) {
            *r += coeff * b;
        }
        if k + 1 < n {
            // basis *= (x - xs[k])
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * &xs[k];
            }
            basis = next;
        }
    }
    let coeffs = result
        .into_iter()
        .enumerate()
        .map(|(degree, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(PolyError::NonIntegerCoefficient { degree, coefficient: c })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Convenience wrapper over [`interpolate`] for small integer samples.
pub fn interpolate_i64(points: &[(i64, i64)]) -> Result<IntPolynomial, PolyError> {
    let points: Vec<(BigInt, BigInt)> = points
        .iter()
        .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
        .collect();
    interpolate(&points)
}

/// A rational function `numerator / (1 - x)^denom_power`, kept normalized:
/// the numerator is not divisible by `(1 - x)` unless the power is already
/// zero, and the zero series has power zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: IntPolynomial,
    denom_power: usize,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, denom_power: usize) -> Self {
        let mut numerator = numerator;
        let mut denom_power = denom_power;
        if numerator.is_zero() {
            denom_power = 0;
        }
        while denom_power > 0 {
            match numerator.div_one_minus_x() {
                Some(q) => {
                    numerator = q;
                    denom_power -= 1;
                }
                None => break,
            }
        }
        Self { numerator, denom_power }
    }

    pub fn zero() -> Self {
        Self::new(IntPolynomial::zero(), 0)
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denom_power(&self) -> usize {
        self.denom_power
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The numerator this series has when written over `(1 - x)^k`, if
    /// `k` is at least the normalized power.
    pub fn numerator_over(&self, k: usize) -> Option<IntPolynomial> {
        let extra = k.checked_sub(self.denom_power)?;
        Some(&self.numerator * &IntPolynomial::one_minus_x_pow(extra))
    }

    /// First `count` Taylor coefficients at 0.
    pub fn coefficients(&self, count: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = (0..count).map(|i| self.numerator.coeff(i)).collect();
        // each factor 1/(1-x) is a running sum
        for _ in 0..self.denom_power {
            let mut acc = BigInt::zero();
            for c in out.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.denom_power.max(other.denom_power);
        let lhs = self.numerator_over(k).expect("k is the max power");
        let rhs = other.numerator_over(k).expect("k is the max power");
        Self::new(&lhs + &rhs, k)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = self.denom_power.max(other.denom_power);
        let lhs = self.numerator_over(k).expect("k is the max power");
        let rhs = other.numerator_over(k).expect("k is the max power");
        Self::new(&lhs - &rhs, k)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1 - x)^{}", self.numerator, self.denom_power)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    num: IntPolynomial,
    denom_power: usize,
}

impl Serialize for RationalSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesDoc { num: self.numerator.clone(), denom_power: self.denom_power }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let doc = SeriesDoc::deserialize(d)?;
        let series = RationalSeries::new(doc.num, doc.denom_power);
        if series.denom_power != doc.denom_power {
            return Err(D::Error::custom("rational series is not normalized"));
        }
        Ok(series)
    }
}

/// Equality as rational functions, by cross-multiplying with the
/// difference of the `(1 - x)` powers.
pub fn series_equal(a: &RationalSeries, b: &RationalSeries) -> bool {
    let (lo, hi) = if a.denom_power <= b.denom_power { (a, b) } else { (b, a) };
    let inflated = &lo.numerator * &IntPolynomial::one_minus_x_pow(hi.denom_power - lo.denom_power);
    inflated == hi.numerator
}

/// Numerator coefficients of `sum_{m>=0} q(m) x^m` written over
/// `(1 - x)^(deg q + 1)`, before normalization.
fn raw_numerator(q: &IntPolynomial) -> (IntPolynomial, usize) {
    let Some(deg) = q.degree() else {
        return (IntPolynomial::zero(), 0);
    };
    let power = deg + 1;
    let samples: Vec<BigInt> = (0..=power).map(|m| q.eval_int(&BigInt::from(m))).collect();
    let coeffs = (0..=power)
        .map(|j| {
            (0..=j).fold(BigInt::zero(), |acc, i| {
                let term = binomial(BigInt::from(power), BigInt::from(i)) * &samples[j - i];
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    (IntPolynomial::from_coeffs(coeffs), power)
}

/// Closed form of `sum_{m>=0} q(m) x^m`.
pub fn polynomial_to_numerator(q: &IntPolynomial) -> RationalSeries {
    let (numerator, power) = raw_numerator(q);
    RationalSeries::new(numerator, power)
}

/// Eulerian polynomial `A_n`: the numerator of `sum m^n x^m` over `(1-x)^(n+1)`.
pub fn eulerian_a(n: usize) -> IntPolynomial {
    assert!(n >= 1, "Eulerian polynomials are indexed from 1");
    raw_numerator(&IntPolynomial::monomial(1, n)).0
}

/// B-Eulerian polynomial `B_n`: the numerator of `sum (2m+1)^n x^m` over `(1-x)^(n+1)`.
pub fn eulerian_b(n: usize) -> IntPolynomial {
    assert!(n >= 1, "B-Eulerian polynomials are indexed from 1");
    let odd = IntPolynomial::from_i64s(&[1, 2]);
    raw_numerator(&odd.pow(n)).0
}

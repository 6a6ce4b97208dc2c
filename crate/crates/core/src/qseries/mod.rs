//! Exact truncated power series in `q` with arbitrary precision integer
//! coefficients.
//!
//! A [`FormalSeries`] of order `N` knows the coefficients of `q^0..=q^N`.
//! Binary operations never claim more than the smaller operand order. Finite
//! products such as q-Pochhammer symbols and Gaussian binomials are
//! [`QPolynomial`]s, which carry no truncation of their own.

mod generating;
mod identities;

pub use generating::{
    a1_closed, a1_series, a2_closed, a2_series, a_quotient, a_quotient_closed, b_quotient,
    displayed_a_tilde, displayed_b_tilde, f_series, g_series, gf_a, gf_a_closed, gf_b,
    lambert_sum, rational_form_check, RationalForm,
};
pub use identities::{
    check_eq1, check_eq2, check_eq3, check_euler_identity, identity_suite, IdentityMismatch,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Output orders at or above this are multiplied in parallel.
const PARALLEL_MUL_ORDER: usize = 256;

/// Sign inside a binomial factor: `Minus` is `(1 - q^e)`, `Plus` is `(1 + q^e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorSign {
    Minus,
    Plus,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSeries {
    coeffs: Vec<BigInt>,
}

impl FormalSeries {
    pub fn zero(order: usize) -> Self {
        FormalSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigInt::one(), order)
    }

    /// `coeff * q^exp`, which is zero when `exp > order`.
    pub fn monomial(exp: usize, coeff: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// Series whose order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series knows at least its constant term");
        FormalSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (c, &v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = BigInt::from(v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`.
    ///
    /// # Panics
    /// If `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        FormalSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + k > self.order() {
                break;
            }
            out.coeffs[n + k] = c.clone();
        }
        out
    }

    /// Adds `q^shift * other` in place; terms beyond the order are dropped.
    pub fn add_shifted(&mut self, other: &FormalSeries, shift: usize) {
        for (n, c) in other.coeffs.iter().enumerate() {
            let Some(slot) = self.coeffs.get_mut(n + shift) else {
                break;
            };
            *slot += c;
        }
    }

    /// Adds `q^shift * poly` in place; terms beyond the order are dropped.
    pub fn add_poly_shifted(&mut self, poly: &QPolynomial, shift: usize) {
        for (n, c) in poly.coeffs.iter().enumerate() {
            let Some(slot) = self.coeffs.get_mut(n + shift) else {
                break;
            };
            *slot += c;
        }
    }

    /// Substitutes `q -> q^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let mut out = Self::zero(self.order());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * k > self.order() {
                break;
            }
            out.coeffs[n * k] = c.clone();
        }
        out
    }

    /// In-place multiplication by `(1 +- q^e)`.
    pub fn mul_factor(&mut self, sign: FactorSign, e: usize) {
        if e == 0 {
            match sign {
                FactorSign::Minus => self.coeffs.iter_mut().for_each(|c| c.set_zero()),
                FactorSign::Plus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
            }
            return;
        }
        for n in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match sign {
                FactorSign::Minus => hi[0] -= &lo[n - e],
                FactorSign::Plus => hi[0] += &lo[n - e],
            }
        }
    }

    /// In-place division by `(1 +- q^e)`, `e >= 1`.
    pub fn div_factor(&mut self, sign: FactorSign, e: usize) {
        assert!(e >= 1, "(1 +- q^0) is not invertible as a series factor");
        for n in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match sign {
                FactorSign::Minus => hi[0] += &lo[n - e],
                FactorSign::Plus => hi[0] -= &lo[n - e],
            }
        }
    }

    /// Product against a polynomial, skipping its zero coefficients.
    pub fn mul_poly(&self, poly: &QPolynomial) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (k, c) in poly.coeffs.iter().enumerate() {
            if k > order {
                break;
            }
            if c.is_zero() {
                continue;
            }
            for n in k..=order {
                out.coeffs[n] += c * &self.coeffs[n - k];
            }
        }
        out
    }

    /// Multiplicative inverse; requires constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant(self.coeffs[0].to_string()));
        }
        Ok(invert_unit(&self.coeffs, self.order()))
    }

    /// Integer power; negative exponents need constant term 1.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Index and values of the first coefficient where the two series differ,
    /// compared up to the smaller order.
    pub fn first_difference(&self, other: &FormalSeries) -> Option<(usize, BigInt, BigInt)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(n, (a, b))| (n, a.clone(), b.clone()))
    }

    /// Coefficient table as decimal strings.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

fn invert_unit(p: &[BigInt], order: usize) -> FormalSeries {
    let support: Vec<(usize, &BigInt)> = p
        .iter()
        .enumerate()
        .skip(1)
        .take(order)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut s = vec![BigInt::zero(); order + 1];
    s[0] = BigInt::one();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for &(k, c) in &support {
            if k > n {
                break;
            }
            acc -= c * &s[n - k];
        }
        s[n] = acc;
    }
    FormalSeries { coeffs: s }
}

/// `s` with `p * s = 1` up to `order`, for a polynomial `p` with constant
/// term 1.
pub fn geometric_inverse(p: &QPolynomial, order: usize) -> Result<FormalSeries> {
    let c0 = p.coeff(0);
    if !c0.is_one() {
        return Err(Error::NonUnitConstant(c0.to_string()));
    }
    Ok(invert_unit(&p.coeffs, order))
}

impl fmt::Debug for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)?;
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (n, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let mag = c.abs();
        match (n, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "q")?,
            (1, false) => write!(f, "{mag}q")?,
            (_, true) => write!(f, "q^{n}")?,
            (_, false) => write!(f, "{mag}q^{n}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Serialize for FormalSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for FormalSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        if raw.is_empty() {
            return Err(D::Error::custom("empty coefficient table"));
        }
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(FormalSeries { coeffs })
    }
}

impl Add for &FormalSeries {
    type Output = FormalSeries;

    fn add(self, rhs: &FormalSeries) -> FormalSeries {
        FormalSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &FormalSeries {
    type Output = FormalSeries;

    fn sub(self, rhs: &FormalSeries) -> FormalSeries {
        FormalSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &FormalSeries {
    type Output = FormalSeries;

    fn neg(self) -> FormalSeries {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &FormalSeries {
    type Output = FormalSeries;

    fn mul(self, rhs: &FormalSeries) -> FormalSeries {
        let order = self.order().min(rhs.order());
        let nz = |s: &FormalSeries| -> Vec<(usize, BigInt)> {
            s.coeffs[..=order]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect()
        };
        let (a_nz, b) = {
            let (x, y) = (nz(self), nz(rhs));
            if x.len() <= y.len() {
                (x, &rhs.coeffs)
            } else {
                (y, &self.coeffs)
            }
        };
        let coeff = |n: usize| -> BigInt {
            let mut acc = BigInt::zero();
            for (i, a) in &a_nz {
                if *i > n {
                    break;
                }
                acc += a * &b[n - i];
            }
            acc
        };
        let coeffs = if order >= PARALLEL_MUL_ORDER {
            (0..=order).into_par_iter().map(coeff).collect()
        } else {
            (0..=order).map(coeff).collect()
        };
        FormalSeries { coeffs }
    }
}

/// An exact polynomial in `q`. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: usize, coeff: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Drops every term above `q^order`.
    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        Self::from_coeffs(coeffs)
    }

    pub fn to_series(&self, order: usize) -> FormalSeries {
        let mut s = FormalSeries::zero(order);
        s.add_poly_shifted(self, 0);
        s
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Substitutes `q -> q^k`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); d * k + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n * k] = c.clone();
        }
        QPolynomial { coeffs }
    }

    /// Multiplication by `(1 +- q^e)`.
    pub fn mul_factor(&self, sign: FactorSign, e: usize) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); d + e + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n] += c;
            match sign {
                FactorSign::Minus => coeffs[n + e] -= c,
                FactorSign::Plus => coeffs[n + e] += c,
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Exact quotient by `(1 - q^e)`; fails if the division leaves a remainder.
    pub fn div_one_minus(&self, e: usize) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidParameter("division by 1 - q^0".into()));
        }
        let Some(d) = self.degree() else {
            return Ok(Self::zero());
        };
        let mut q = self.coeffs.clone();
        for n in e..=d {
            let (lo, hi) = q.split_at_mut(n);
            hi[0] += &lo[n - e];
        }
        // p = quotient * (1 - q^e) exactly iff the top e coefficients vanish.
        if d + 1 < e || q[d + 1 - e..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidParameter(format!("polynomial is not divisible by 1 - q^{e}")));
        }
        q.truncate(d + 1 - e);
        Ok(Self::from_coeffs(q))
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|n| self.coeff(n) + rhs.coeff(n)).collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let (Some(da), Some(db)) = (self.degree(), rhs.degree()) else {
            return QPolynomial::zero();
        };
        let mut coeffs = vec![BigInt::zero(); da + db + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

/// Finite q-Pochhammer symbol `prod_{i < count} (1 +- q^(a_exp + i*base_exp))`,
/// truncated to `order`.
///
/// `FactorSign::Minus` gives `(q^a; q^b)_count`, `FactorSign::Plus` gives
/// `(-q^a; q^b)_count`.
pub fn pochhammer(sign: FactorSign, a_exp: usize, base_exp: usize, count: usize, order: usize) -> QPolynomial {
    let mut p = QPolynomial::one();
    for i in 0..count {
        p = p.mul_factor(sign, a_exp + i * base_exp).truncated(order);
        if p.is_zero() {
            break;
        }
    }
    p
}

/// `prod_{i >= 0} (1 +- q^(a_exp + i*base_exp))` truncated to `order`;
/// requires `a_exp, base_exp >= 1`.
pub fn infinite_product(sign: FactorSign, a_exp: usize, base_exp: usize, order: usize) -> FormalSeries {
    assert!(a_exp >= 1 && base_exp >= 1, "infinite product needs positive exponents");
    let mut s = FormalSeries::one(order);
    let mut e = a_exp;
    while e <= order {
        s.mul_factor(sign, e);
        e += base_exp;
    }
    s
}

/// `(q;q)_inf` for `Minus`, `(-q;q)_inf` for `Plus`, truncated to `order`.
pub fn pochhammer_infinite(sign: FactorSign, order: usize) -> FormalSeries {
    infinite_product(sign, 1, 1, order)
}

/// Gaussian binomial `[n choose k]` in the variable `q^base_exp`, truncated
/// to `order`. Zero when `k < 0` or `k > n`.
pub fn q_binomial(n: i64, k: i64, base_exp: usize, order: usize) -> QPolynomial {
    if k < 0 || k > n {
        return QPolynomial::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    let mut p = QPolynomial::one();
    for i in 1..=k {
        p = p
            .mul_factor(FactorSign::Minus, n - k + i)
            .div_one_minus(i)
            .expect("partial products of Gaussian binomials are polynomials");
    }
    p.substitute_power(base_exp).truncated(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(c: &[i64], order: usize) -> FormalSeries {
        FormalSeries::from_i64s(c, order)
    }

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&series(&[1, 1], 4) * &series(&[1, -1], 4), series(&[1, 0, -1], 4));
        assert!((&series(&[3, 1, 4], 5) * &FormalSeries::zero(5)).is_zero());
        assert_eq!(&series(&[1, 2], 3) + &series(&[0, 3], 3), series(&[1, 5], 3));
        assert_eq!(&series(&[1, 2], 3) - &series(&[1, 2], 3), FormalSeries::zero(3));
    }

    #[test]
    fn order_is_minimum_of_operands() {
        let a = series(&[1, 1, 1], 7);
        let b = series(&[1, 1], 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn geometric_inverses() {
        assert_eq!(geometric_inverse(&poly(&[1, -1]), 3).unwrap(), series(&[1, 1, 1, 1], 3));
        assert_eq!(geometric_inverse(&poly(&[1]), 5).unwrap(), FormalSeries::one(5));
        assert_eq!(geometric_inverse(&poly(&[1, 0, -1]), 5).unwrap(), series(&[1, 0, 1, 0, 1, 0], 5));
        assert!(matches!(geometric_inverse(&poly(&[2, 1]), 5), Err(Error::NonUnitConstant(_))));
        assert!(geometric_inverse(&QPolynomial::zero(), 5).is_err());
    }

    #[test]
    fn finite_pochhammer() {
        assert_eq!(pochhammer(FactorSign::Minus, 1, 2, 0, 10), QPolynomial::one());
        assert_eq!(pochhammer(FactorSign::Minus, 1, 1, 2, 10), poly(&[1, -1, -1, 1]));
        assert_eq!(pochhammer(FactorSign::Plus, 1, 1, 2, 10), poly(&[1, 1, 1, 1]));
        assert_eq!(pochhammer(FactorSign::Minus, 1, 1, 2, 1), poly(&[1, -1]));
    }

    #[test]
    fn infinite_pochhammer() {
        let dq = pochhammer_infinite(FactorSign::Plus, 4);
        assert_eq!(dq, series(&[1, 1, 1, 2, 2], 4));
        let eq = pochhammer_infinite(FactorSign::Minus, 5);
        assert_eq!(eq, series(&[1, -1, -1, 0, 0, 1], 5));
        let odd = infinite_product(FactorSign::Minus, 1, 2, 60);
        assert_eq!(&pochhammer_infinite(FactorSign::Plus, 60) * &odd, FormalSeries::one(60));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(2, 1, 1, 10), poly(&[1, 1]));
        assert_eq!(q_binomial(7, 0, 1, 10), QPolynomial::one());
        assert_eq!(q_binomial(3, 1, 2, 10), poly(&[1, 0, 1, 0, 1]));
        assert!(q_binomial(2, 3, 1, 10).is_zero());
        assert!(q_binomial(2, -1, 1, 10).is_zero());
        assert_eq!(q_binomial(4, 2, 1, 10), poly(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn exact_division_detects_remainder() {
        assert_eq!(poly(&[1, 0, -1]).div_one_minus(1).unwrap(), poly(&[1, 1]));
        assert!(poly(&[1, 1]).div_one_minus(1).is_err());
    }

    #[test]
    fn factor_mul_and_div_round_trip() {
        let mut s = series(&[1, 4, -2, 7, 0, 3], 5);
        let orig = s.clone();
        s.mul_factor(FactorSign::Plus, 2);
        s.div_factor(FactorSign::Plus, 2);
        assert_eq!(s, orig);
    }

    #[test]
    fn powers() {
        let s = series(&[1, -1], 6);
        assert_eq!(s.pow(-1).unwrap(), series(&[1, 1, 1, 1, 1, 1, 1], 6));
        assert_eq!(s.pow(2).unwrap(), series(&[1, -2, 1], 6));
        assert_eq!(s.pow(0).unwrap(), FormalSeries::one(6));
    }

    #[test]
    fn json_round_trip() {
        let s = pochhammer_infinite(FactorSign::Plus, 30);
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.starts_with("[\"1\",\"1\",\"1\",\"2\""));
        let back: FormalSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display() {
        assert_eq!(series(&[1, -1, 0, 2], 3).to_string(), "1 - q + 2q^3 + O(q^4)");
        assert_eq!(poly(&[0, 1, 1]).to_string(), "q + q^2");
    }
}

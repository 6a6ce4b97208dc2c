//! Binary fixed-point reals with `FRAC_BITS` fractional bits, enough to
//! order `r + s log 2` values and print 30 or more correct digits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use super::Rational;

pub const FRAC_BITS: u32 = 320;
const GUARD_BITS: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fixed {
    raw: BigInt,
}

impl Fixed {
    pub fn zero() -> Self {
        Fixed { raw: BigInt::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Fixed {
            raw: BigInt::from(n) << FRAC_BITS,
        }
    }

    /// Rounds toward negative infinity.
    pub fn from_rational(q: &Rational) -> Self {
        let num = q.numer() << FRAC_BITS;
        Fixed {
            raw: num_integer::Integer::div_floor(&num, q.denom()),
        }
    }

    pub fn ln2() -> Self {
        static LN2: OnceLock<Fixed> = OnceLock::new();
        LN2.get_or_init(|| {
            // sum_{k>=1} 1 / (k 2^k)
            let bits = FRAC_BITS + GUARD_BITS;
            let one = BigInt::from(1) << bits;
            let mut acc = BigInt::zero();
            for k in 1..=bits {
                acc += (&one >> k) / BigInt::from(k);
            }
            Fixed { raw: acc >> GUARD_BITS }
        })
        .clone()
    }

    pub fn ln3() -> Self {
        static LN3: OnceLock<Fixed> = OnceLock::new();
        LN3.get_or_init(|| {
            // log(3/2) = 2 atanh(1/5)
            let bits = FRAC_BITS + GUARD_BITS;
            let mut power = (BigInt::from(2) << bits) / BigInt::from(5);
            let mut acc = BigInt::zero();
            let mut k = 1u32;
            while !power.is_zero() {
                acc += &power / BigInt::from(k);
                power /= BigInt::from(25);
                k += 2;
            }
            &Fixed { raw: acc >> GUARD_BITS } + &Fixed::ln2()
        })
        .clone()
    }

    pub fn abs(&self) -> Self {
        Fixed { raw: self.raw.abs() }
    }

    pub fn is_negative(&self) -> bool {
        self.raw.sign() == Sign::Minus
    }

    pub fn to_f64(&self) -> f64 {
        // Keep 60 fractional bits so the integer part fits comfortably.
        let shifted = &self.raw >> (FRAC_BITS - 60);
        shifted.to_f64().unwrap_or(f64::NAN) / 2f64.powi(60)
    }

    /// Compares with a tolerance of `2^-(FRAC_BITS - GUARD_BITS)`; `None`
    /// means the two values are too close to order reliably.
    pub fn cmp_with_slack(&self, other: &Self) -> Option<Ordering> {
        let diff = &self.raw - &other.raw;
        if diff.abs() <= BigInt::from(1) << GUARD_BITS {
            None
        } else {
            Some(diff.sign().cmp(&Sign::NoSign))
        }
    }

    /// Decimal expansion truncated toward zero after `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = (self.raw.abs() * BigInt::from(10).pow(digits as u32)) >> FRAC_BITS;
        let text = scaled.to_string();
        let text = format!("{text:0>width$}", width = digits + 1);
        let (int, frac) = text.split_at(text.len() - digits);
        let sign = if self.is_negative() { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(f.precision().unwrap_or(30)))
    }
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, rhs: &Fixed) -> Fixed {
        Fixed { raw: &self.raw + &rhs.raw }
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, rhs: &Fixed) -> Fixed {
        Fixed { raw: &self.raw - &rhs.raw }
    }
}

impl Mul for &Fixed {
    type Output = Fixed;
    fn mul(self, rhs: &Fixed) -> Fixed {
        Fixed {
            raw: (&self.raw * &rhs.raw) >> FRAC_BITS,
        }
    }
}

/// Panics on division by zero.
impl Div for &Fixed {
    type Output = Fixed;
    fn div(self, rhs: &Fixed) -> Fixed {
        Fixed {
            raw: (&self.raw << FRAC_BITS) / &rhs.raw,
        }
    }
}

impl Neg for &Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed { raw: -&self.raw }
    }
}

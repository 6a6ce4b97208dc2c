//! Generating functions for the hook counts `a_h(n)` (odd parts) and
//! `b_h(n)` (distinct parts).
//!
//! Both are `(-q;q)_inf` times a quotient series. For odd parts the quotient
//! is
//!
//! ```text
//! sum_{j < ceil(h/2)}  [h-j-1, j]_{q^2} A1(h, j; q)
//!   + sum_{j < floor(h/2)} [h-j-2, j]_{q^2} A2(h, j; q),
//! A1(h, j; q) = q^h            F_{j,1,2h-4j}(q),
//! A2(h, j; q) = q^(3h-4j-3)    F_{j,3,2h-4j-2}(q),
//! F_{j,k,l}(q) = sum_{m >= 0} (q^(2m+k); q^2)_j q^(l m),
//! ```
//!
//! and for distinct parts it is
//!
//! ```text
//! sum_{j < ceil(h/2)} q^(h + j(j-1)/2) [h-j-1, j]_q G_{j+1,h-j}(q),
//! G_{j,k}(q) = sum_{m >= 0} q^(j m) / (-q^(m+1); q)_k.
//! ```
//!
//! Every m-sum is cut off once the smallest exponent of its summand passes
//! the target order. That exponent is `l*m` for `F` (with `l >= 2` in all
//! uses above) and `j*m` for `G` (with `j >= 1`), both strictly increasing in
//! `m`, so nothing below the order is lost.

use num_bigint::BigInt;
use num_traits::One;

use super::{pochhammer, pochhammer_infinite, q_binomial, FactorSign, FormalSeries, QPolynomial};
use crate::error::{Error, Result};

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `F_{j,k,l}(q) = sum_m (q^(2m+k); q^2)_j q^(l m)` to `order`; `l >= 1`.
pub fn f_series(j: usize, k: usize, l: usize, order: usize) -> Result<FormalSeries> {
    if l == 0 {
        return Err(Error::InvalidParameter("F_{j,k,l} needs l >= 1 to converge".into()));
    }
    let mut acc = FormalSeries::zero(order);
    let mut m = 0;
    while l * m <= order {
        let shift = l * m;
        let factor = pochhammer(FactorSign::Minus, 2 * m + k, 2, j, order - shift);
        acc.add_poly_shifted(&factor, shift);
        m += 1;
    }
    Ok(acc)
}

/// `G_{j,k}(q) = sum_m q^(j m) / (-q^(m+1); q)_k` to `order`; `j >= 1`.
pub fn g_series(j: usize, k: usize, order: usize) -> Result<FormalSeries> {
    if j == 0 {
        return Err(Error::InvalidParameter("G_{j,k} needs j >= 1 to converge".into()));
    }
    let mut acc = FormalSeries::zero(order);
    let mut m = 0;
    while j * m <= order {
        let shift = j * m;
        let mut term = FormalSeries::one(order - shift);
        for i in 0..k {
            term.div_factor(FactorSign::Plus, m + 1 + i);
        }
        acc.add_shifted(&term, shift);
        m += 1;
    }
    Ok(acc)
}

fn shifted(order: usize, shift: usize, body: impl FnOnce(usize) -> Result<FormalSeries>) -> Result<FormalSeries> {
    let mut out = FormalSeries::zero(order);
    if shift <= order {
        out.add_shifted(&body(order - shift)?, shift);
    }
    Ok(out)
}

/// `A1(h, j; q) = q^h F_{j,1,2h-4j}(q)`, for `0 <= j < ceil(h/2)`.
pub fn a1_series(h: usize, j: usize, order: usize) -> Result<FormalSeries> {
    check_a1_range(h, j)?;
    shifted(order, h, |o| f_series(j, 1, 2 * h - 4 * j, o))
}

/// `A2(h, j; q) = q^(3h-4j-3) F_{j,3,2h-4j-2}(q)`, for `0 <= j < floor(h/2)`.
pub fn a2_series(h: usize, j: usize, order: usize) -> Result<FormalSeries> {
    check_a2_range(h, j)?;
    shifted(order, 3 * h - 4 * j - 3, |o| f_series(j, 3, 2 * h - 4 * j - 2, o))
}

fn check_a1_range(h: usize, j: usize) -> Result<()> {
    if h == 0 || j >= h.div_ceil(2) {
        return Err(Error::InvalidParameter(format!("A1 needs h >= 1 and j < ceil(h/2), got h={h}, j={j}")));
    }
    Ok(())
}

fn check_a2_range(h: usize, j: usize) -> Result<()> {
    if j >= h / 2 {
        return Err(Error::InvalidParameter(format!("A2 needs j < floor(h/2), got h={h}, j={j}")));
    }
    Ok(())
}

/// `A1` with the m-sum summed geometrically:
/// `q^h sum_{k<=j} [j,k]_{q^2} (-1)^k q^(k^2) / (1 - q^(2h+2k-4j))`.
pub fn a1_closed(h: usize, j: usize, order: usize) -> Result<FormalSeries> {
    check_a1_range(h, j)?;
    shifted(order, h, |o| {
        let mut acc = FormalSeries::zero(o);
        for k in 0..=j {
            let num = q_binomial(j as i64, k as i64, 2, o).shift(k * k).scale(&sign(k));
            let mut term = num.to_series(o);
            term.div_factor(FactorSign::Minus, 2 * h + 2 * k - 4 * j);
            acc = &acc + &term;
        }
        Ok(acc)
    })
}

/// `A2` with the m-sum summed geometrically:
/// `q^(3h-4j-3) sum_{k<=j} [j,k]_{q^2} (-1)^k q^(k^2+2k) / (1 - q^(2h-4j+2k-2))`.
pub fn a2_closed(h: usize, j: usize, order: usize) -> Result<FormalSeries> {
    check_a2_range(h, j)?;
    shifted(order, 3 * h - 4 * j - 3, |o| {
        let mut acc = FormalSeries::zero(o);
        for k in 0..=j {
            let num = q_binomial(j as i64, k as i64, 2, o).shift(k * k + 2 * k).scale(&sign(k));
            let mut term = num.to_series(o);
            term.div_factor(FactorSign::Minus, 2 * h - 4 * j + 2 * k - 2);
            acc = &acc + &term;
        }
        Ok(acc)
    })
}

fn check_h(h: usize) -> Result<()> {
    if h == 0 {
        return Err(Error::InvalidParameter("hook length h must be >= 1".into()));
    }
    Ok(())
}

fn a_quotient_with(
    h: usize,
    order: usize,
    a1: fn(usize, usize, usize) -> Result<FormalSeries>,
    a2: fn(usize, usize, usize) -> Result<FormalSeries>,
) -> Result<FormalSeries> {
    check_h(h)?;
    let h_i = h as i64;
    let mut acc = FormalSeries::zero(order);
    for j in 0..h.div_ceil(2) {
        let binom = q_binomial(h_i - j as i64 - 1, j as i64, 2, order);
        acc = &acc + &a1(h, j, order)?.mul_poly(&binom);
    }
    for j in 0..h / 2 {
        let binom = q_binomial(h_i - j as i64 - 2, j as i64, 2, order);
        acc = &acc + &a2(h, j, order)?.mul_poly(&binom);
    }
    Ok(acc)
}

/// `a~_h(q) / (-q;q)_inf` from the m-sum representation.
pub fn a_quotient(h: usize, order: usize) -> Result<FormalSeries> {
    a_quotient_with(h, order, a1_series, a2_series)
}

/// `a~_h(q) / (-q;q)_inf` from the geometric closed forms of `A1`, `A2`.
pub fn a_quotient_closed(h: usize, order: usize) -> Result<FormalSeries> {
    a_quotient_with(h, order, a1_closed, a2_closed)
}

/// `b~_h(q) / (-q;q)_inf`.
pub fn b_quotient(h: usize, order: usize) -> Result<FormalSeries> {
    check_h(h)?;
    let mut acc = FormalSeries::zero(order);
    for j in 0..h.div_ceil(2) {
        let shift = h + j * j.saturating_sub(1) / 2;
        let binom = q_binomial((h - j - 1) as i64, j as i64, 1, order);
        let inner = shifted(order, shift, |o| g_series(j + 1, h - j, o))?;
        acc = &acc + &inner.mul_poly(&binom);
    }
    Ok(acc)
}

/// Generating function of `a_h(n)`, the number of `h`-hooks among
/// partitions of `n` into odd parts, to `order`.
pub fn gf_a(h: usize, order: usize) -> Result<FormalSeries> {
    Ok(&pochhammer_infinite(FactorSign::Plus, order) * &a_quotient(h, order)?)
}

/// Generating function of `a_h(n)` built from the closed forms.
pub fn gf_a_closed(h: usize, order: usize) -> Result<FormalSeries> {
    Ok(&pochhammer_infinite(FactorSign::Plus, order) * &a_quotient_closed(h, order)?)
}

/// Generating function of `b_h(n)`, the number of `h`-hooks among
/// partitions of `n` into distinct parts, to `order`.
pub fn gf_b(h: usize, order: usize) -> Result<FormalSeries> {
    Ok(&pochhammer_infinite(FactorSign::Plus, order) * &b_quotient(h, order)?)
}

/// `sum_{k>=1} q^k / (1 + q^k)` to `order`. The coefficient of `q^n` is the
/// number of odd divisors of `n` minus the number of even ones.
pub fn lambert_sum(order: usize) -> FormalSeries {
    let mut s = FormalSeries::zero(order);
    let mut coeffs = vec![0i64; order + 1];
    for k in 1..=order {
        let mut m = 0;
        while k * (m + 1) <= order {
            coeffs[k * (m + 1)] += if m % 2 == 0 { 1 } else { -1 };
            m += 1;
        }
    }
    for (c, v) in s.coeffs.iter_mut().zip(coeffs) {
        *c = BigInt::from(v);
    }
    s
}

/// A rational function `numerator / prod (1 +- q^e)` with integer
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalForm {
    pub numerator: QPolynomial,
    pub denominator: Vec<(FactorSign, usize)>,
}

impl RationalForm {
    pub fn new(numerator: &[(usize, i64)], denominator: &[(FactorSign, usize)]) -> Self {
        let len = numerator.iter().map(|&(e, _)| e + 1).max().unwrap_or(0);
        let mut coeffs = vec![0i64; len];
        for &(e, c) in numerator {
            coeffs[e] += c;
        }
        RationalForm {
            numerator: QPolynomial::from_i64s(&coeffs),
            denominator: denominator.to_vec(),
        }
    }

    pub fn zero() -> Self {
        RationalForm {
            numerator: QPolynomial::zero(),
            denominator: Vec::new(),
        }
    }

    pub fn expand(&self, order: usize) -> FormalSeries {
        let mut s = self.numerator.to_series(order);
        for &(sign, e) in &self.denominator {
            s.div_factor(sign, e);
        }
        s
    }
}

/// The tabulated rational parts `A~_h` for `h <= 3`.
pub fn displayed_a_tilde(h: usize) -> Option<RationalForm> {
    use FactorSign::{Minus, Plus};
    Some(match h {
        1 => RationalForm::new(&[(1, 1)], &[(Minus, 2)]),
        2 => RationalForm::new(&[(5, 1), (3, 1), (2, 1)], &[(Minus, 4)]),
        3 => RationalForm::new(
            &[(10, 1), (9, 1), (7, 2), (5, 3), (4, -1), (3, 2)],
            &[(Minus, 6), (Plus, 2)],
        ),
        _ => return None,
    })
}

/// The tabulated rational parts `B~_h` for `h <= 3`; for odd `h` the
/// Lambert sum is added separately.
pub fn displayed_b_tilde(h: usize) -> Option<RationalForm> {
    use FactorSign::{Minus, Plus};
    Some(match h {
        1 => RationalForm::zero(),
        2 => RationalForm::new(&[(2, 1)], &[(Minus, 2)]),
        3 => RationalForm::new(&[(5, 1), (2, -1), (1, -1)], &[(Minus, 4), (Plus, 1)]),
        _ => return None,
    })
}

/// Compares `gf_a`, `gf_b` for `h in 1..=3` against `(-q;q)_inf` times the
/// tabulated rational parts (plus the Lambert sum for odd `h` on the
/// distinct side).
pub fn rational_form_check(h: usize, order: usize) -> Result<bool> {
    let (Some(a_tilde), Some(b_tilde)) = (displayed_a_tilde(h), displayed_b_tilde(h)) else {
        return Err(Error::InvalidParameter(format!("closed forms are tabulated only for h <= 3, got {h}")));
    };
    let dq = pochhammer_infinite(FactorSign::Plus, order);
    let a_ok = gf_a(h, order)? == &dq * &a_tilde.expand(order);
    let mut b_part = b_tilde.expand(order);
    if h % 2 == 1 {
        b_part = &b_part + &lambert_sum(order);
    }
    let b_ok = gf_b(h, order)? == &dq * &b_part;
    Ok(a_ok && b_ok)
}

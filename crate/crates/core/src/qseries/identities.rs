//! Exact checks of the q-series identities used to sum the generating
//! functions in closed form:
//!
//! ```text
//! (eq1)  (q^(2m+1); q^2)_n = sum_k [n,k]_{q^2} (-1)^k q^(2mk + k^2)
//! (eq2)  1 / (-q^(m+1); q)_n = sum_k [n+k-1,k]_q (-1)^k q^((m+1)k)
//! (eq3)  sum_k (-q)^k / (1 - q^k) = - sum_k q^k / (1 + q^k)
//! ```
//!
//! plus Euler's `(-q;q)_inf (q;q^2)_inf = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{
    geometric_inverse, infinite_product, lambert_sum, pochhammer, pochhammer_infinite, q_binomial, FactorSign,
    FormalSeries,
};

/// Largest `n`, `m` exercised by [`identity_suite`].
const SUITE_PARAM_MAX: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityMismatch {
    pub identity: &'static str,
    pub params: String,
    pub exponent: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl fmt::Display for IdentityMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at {} on q^{}: lhs {} vs rhs {}",
            self.identity, self.params, self.exponent, self.lhs, self.rhs
        )
    }
}

impl std::error::Error for IdentityMismatch {}

fn compare(identity: &'static str, params: String, lhs: &FormalSeries, rhs: &FormalSeries) -> Result<(), IdentityMismatch> {
    match lhs.first_difference(rhs) {
        None => Ok(()),
        Some((exponent, lhs, rhs)) => Err(IdentityMismatch {
            identity,
            params,
            exponent,
            lhs,
            rhs,
        }),
    }
}

fn alternating(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn check_eq1(n: usize, m: usize, order: usize) -> Result<(), IdentityMismatch> {
    let lhs = pochhammer(FactorSign::Minus, 2 * m + 1, 2, n, order).to_series(order);
    let mut rhs = FormalSeries::zero(order);
    for k in 0..=n {
        let term = q_binomial(n as i64, k as i64, 2, order).scale(&alternating(k));
        rhs.add_poly_shifted(&term, 2 * m * k + k * k);
    }
    compare("eq1", format!("n={n}, m={m}"), &lhs, &rhs)
}

/// Requires `n >= 1`; at `n = 0` the right side degenerates.
pub fn check_eq2(n: usize, m: usize, order: usize) -> Result<(), IdentityMismatch> {
    let denom = pochhammer(FactorSign::Plus, m + 1, 1, n, order);
    let lhs = geometric_inverse(&denom, order).expect("(-q^(m+1);q)_n has constant term 1");
    let mut rhs = FormalSeries::zero(order);
    let mut k = 0;
    while (m + 1) * k <= order {
        let term = q_binomial((n + k) as i64 - 1, k as i64, 1, order).scale(&alternating(k));
        rhs.add_poly_shifted(&term, (m + 1) * k);
        k += 1;
    }
    compare("eq2", format!("n={n}, m={m}"), &lhs, &rhs)
}

pub fn check_eq3(order: usize) -> Result<(), IdentityMismatch> {
    let mut lhs = FormalSeries::zero(order);
    for k in 1..=order {
        let mut term = FormalSeries::monomial(k, alternating(k), order);
        term.div_factor(FactorSign::Minus, k);
        lhs = &lhs + &term;
    }
    let rhs = -&lambert_sum(order);
    compare("eq3", String::new(), &lhs, &rhs)
}

pub fn check_euler_identity(order: usize) -> Result<(), IdentityMismatch> {
    let lhs = &pochhammer_infinite(FactorSign::Plus, order) * &infinite_product(FactorSign::Minus, 1, 2, order);
    compare("euler", String::new(), &lhs, &FormalSeries::one(order))
}

/// Runs eq1 for `0 <= n, m <= 6`, eq2 for `1 <= n <= 6, 0 <= m <= 6`, and
/// eq3, all to `order`. Stops at the first mismatch.
pub fn identity_suite(order: usize) -> Result<(), IdentityMismatch> {
    for n in 0..=SUITE_PARAM_MAX {
        for m in 0..=SUITE_PARAM_MAX {
            check_eq1(n, m, order)?;
        }
    }
    for n in 1..=SUITE_PARAM_MAX {
        for m in 0..=SUITE_PARAM_MAX {
            check_eq2(n, m, order)?;
        }
    }
    check_eq3(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        check_eq1(0, 3, 40).unwrap();
        check_eq2(1, 0, 40).unwrap();
        check_eq1(2, 1, 40).unwrap();
        check_eq3(40).unwrap();
        check_euler_identity(80).unwrap();
    }

    #[test]
    fn mismatch_is_reported() {
        let a = FormalSeries::from_i64s(&[1, 2, 3], 2);
        let b = FormalSeries::from_i64s(&[1, 2, 4], 2);
        let err = compare("demo", "x".into(), &a, &b).unwrap_err();
        assert_eq!(err.exponent, 2);
        assert_eq!(err.to_string(), "demo fails at x on q^2: lhs 3 vs rhs 4");
    }
}

//! Main-term asymptotics for hook counts, partition counts and part counts,
//! compared against exact values from the series engine.
//!
//! Every main term has the shape `C n^a (log n)^b exp(pi sqrt(n/3))`, so all
//! predictions are carried as natural logarithms and ratios are formed by
//! subtracting logs. Nothing overflows for `n` up to `10^6` and beyond.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactconst::{alpha, beta, gamma, i_a, i_b, Fixed};
use crate::partitions::{census, PartitionClass};
use crate::qseries::{gf_a, gf_b, infinite_product, lambert_sum, pochhammer_infinite, FactorSign, FormalSeries};

/// Largest `n` accepted by the exact-count helpers in this module.
pub const DEFAULT_MAX_ORDER: usize = 3000;

/// `log(x)` for a positive big integer, accurate to double precision.
pub fn ln_bigint(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "logarithm of a non-positive integer");
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * LN_2
}

fn exponent(n: f64) -> f64 {
    PI * (n / 3.0).sqrt()
}

fn leading_constant(h: usize, class: PartitionClass) -> Result<f64> {
    match class {
        PartitionClass::OddParts => Ok(Fixed::from_rational(&alpha(h)?).to_f64()),
        PartitionClass::DistinctParts => Ok(beta(h)?.to_f64()),
        other => Err(Error::UnsupportedClass(other.tag())),
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!("n must be at least {min}, got {n}")));
    }
    Ok(())
}

/// `log` of `c_h 3^{1/4} / (2 pi n^{1/4}) exp(pi sqrt(n/3))`, with
/// `c_h = alpha_h` for odd parts and `beta_h` for distinct parts.
pub fn ln_main_term(h: usize, n: usize, class: PartitionClass) -> Result<f64> {
    check_n(n, 1)?;
    let c = leading_constant(h, class)?;
    let n = n as f64;
    Ok(c.ln() + 0.25 * 3f64.ln() - (2.0 * PI).ln() - 0.25 * n.ln() + exponent(n))
}

/// The main term itself; overflows to infinity past `n` of about `2 * 10^5`.
pub fn main_term(h: usize, n: usize, class: PartitionClass) -> Result<f64> {
    ln_main_term(h, n, class).map(f64::exp)
}

/// `log` of `3^{3/4} / (12 n^{3/4}) exp(pi sqrt(n/3))`, the common main term
/// of the odd-part and distinct-part partition counts.
pub fn ln_partition_count_asym(n: usize) -> Result<f64> {
    check_n(n, 1)?;
    let n = n as f64;
    Ok(0.75 * 3f64.ln() - 12f64.ln() - 0.75 * n.ln() + exponent(n))
}

pub fn partition_count_asym(n: usize) -> Result<f64> {
    ln_partition_count_asym(n).map(f64::exp)
}

/// `log` of the main term of the total number of parts:
/// `3^{1/4} log(n) / (8 pi n^{1/4}) exp(pi sqrt(n/3))` for odd parts and
/// `3^{1/4} log(2) / (2 pi n^{1/4}) exp(pi sqrt(n/3))` for distinct parts.
pub fn ln_parts_count_asym(n: usize, class: PartitionClass) -> Result<f64> {
    check_n(n, 2)?;
    let nf = n as f64;
    let common = 0.25 * 3f64.ln() - PI.ln() - 0.25 * nf.ln() + exponent(nf);
    match class {
        PartitionClass::OddParts => Ok(common + nf.ln().ln() - 8f64.ln()),
        PartitionClass::DistinctParts => Ok(common + LN_2.ln() - 2f64.ln()),
        other => Err(Error::UnsupportedClass(other.tag())),
    }
}

pub fn parts_count_asym(n: usize, class: PartitionClass) -> Result<f64> {
    ln_parts_count_asym(n, class).map(f64::exp)
}

/// Expected number of `h`-hooks in a uniformly random member of size `n`:
/// `(6 c_h / pi) sqrt(n/3)`.
pub fn avg_hooks(h: usize, n: usize, class: PartitionClass) -> Result<f64> {
    check_n(n, 2)?;
    Ok(6.0 * leading_constant(h, class)? / PI * (n as f64 / 3.0).sqrt())
}

/// Probability that a random row of a random member of size `n` contains
/// an `h`-hook: `4 alpha_h / log n` for odd parts, `beta_h / log 2` for
/// distinct parts.
pub fn row_probability(h: usize, n: usize, class: PartitionClass) -> Result<f64> {
    check_n(n, 2)?;
    let c = leading_constant(h, class)?;
    match class {
        PartitionClass::OddParts => Ok(4.0 * c / (n as f64).ln()),
        _ => Ok(c / LN_2),
    }
}

/// The finite-`n` value of [`row_probability`] by enumeration: rows with an
/// `h`-hook over all rows.
pub fn row_probability_exact(h: usize, n: usize, class: PartitionClass) -> Result<f64> {
    check_n(n, 1)?;
    if !matches!(class, PartitionClass::OddParts | PartitionClass::DistinctParts) {
        return Err(Error::UnsupportedClass(class.tag()));
    }
    let c = census(class, n);
    Ok(c.hooks.get(h).copied().unwrap_or(0) as f64 / c.parts as f64)
}

fn check_order(order: usize) -> Result<()> {
    if order > DEFAULT_MAX_ORDER {
        return Err(Error::InvalidParameter(format!("order {order} exceeds the limit {DEFAULT_MAX_ORDER}")));
    }
    Ok(())
}

/// Partition counts of the class to `order`: `(-q;q)_inf` for distinct
/// parts and `1/(q;q^2)_inf` for odd parts.
pub fn partition_counts(class: PartitionClass, order: usize) -> Result<FormalSeries> {
    check_order(order)?;
    match class {
        PartitionClass::DistinctParts => Ok(pochhammer_infinite(FactorSign::Plus, order)),
        PartitionClass::OddParts => infinite_product(FactorSign::Minus, 1, 2, order).inverse(),
        other => Err(Error::UnsupportedClass(other.tag())),
    }
}

/// Total number of parts over the class, to `order`:
/// `(-q;q)_inf sum_k q^k/(1+q^k)` for distinct parts and
/// `(q;q^2)_inf^{-1} sum_{k odd} q^k/(1-q^k)` for odd parts.
pub fn parts_counts(class: PartitionClass, order: usize) -> Result<FormalSeries> {
    let counts = partition_counts(class, order)?;
    let marker = match class {
        PartitionClass::DistinctParts => lambert_sum(order),
        _ => {
            let mut acc = FormalSeries::zero(order);
            for k in (1..=order).step_by(2) {
                let mut term = FormalSeries::monomial(k, BigInt::from(1), order);
                term.div_factor(FactorSign::Minus, k);
                acc = &acc + &term;
            }
            acc
        }
    };
    Ok(&counts * &marker)
}

/// Hook counts `a_h(n)` or `b_h(n)` for `0 <= n <= order`.
pub fn hook_counts(h: usize, class: PartitionClass, order: usize) -> Result<FormalSeries> {
    check_order(order)?;
    match class {
        PartitionClass::OddParts => gf_a(h, order),
        PartitionClass::DistinctParts => gf_b(h, order),
        other => Err(Error::UnsupportedClass(other.tag())),
    }
}

/// Which m-sum to test against its `z -> 0` limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmSum {
    /// `F_{j,k,l}(e^{-z})`, limit `I_A(j, l) / z`.
    F { j: usize, k: usize, l: usize },
    /// `G_{j,k}(e^{-z})`, limit `I_B(j, k) / z`.
    G { j: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmCheck {
    /// `z` times the directly summed series.
    pub lhs: f64,
    /// The exact limit.
    pub rhs: f64,
    pub gap: f64,
}

const SUM_TOLERANCE: f64 = 1e-18;

fn check_z(z: f64) -> Result<()> {
    if !(z > 0.0 && z <= 0.2) {
        return Err(Error::InvalidParameter(format!("z must lie in (0, 0.2], got {z}")));
    }
    Ok(())
}

/// Sums the m-series at `q = e^{-z}` until the terms fall below the
/// working tolerance, multiplies by `z`, and compares with the limit.
pub fn em_leading_check(sum: EmSum, z: f64) -> Result<EmCheck> {
    check_z(z)?;
    let q = (-z).exp();
    let (total, rhs) = match sum {
        EmSum::F { j, k, l } => {
            if l == 0 {
                return Err(Error::InvalidParameter("F_{j,k,l} diverges for l = 0".into()));
            }
            let rhs = Fixed::from_rational(&i_a(j, l)?).to_f64();
            let term = |m: usize| {
                let mut t = q.powi((l * m) as i32);
                for i in 0..j {
                    t *= 1.0 - q.powi((2 * m + k + 2 * i) as i32);
                }
                t
            };
            (sum_until_small(term), rhs)
        }
        EmSum::G { j, k } => {
            if j == 0 {
                return Err(Error::InvalidParameter("G_{j,k} diverges for j = 0".into()));
            }
            let rhs = i_b(j, k)?.to_f64();
            let term = |m: usize| {
                let mut t = q.powi((j * m) as i32);
                for i in 1..=k {
                    t /= 1.0 + q.powi((m + i) as i32);
                }
                t
            };
            (sum_until_small(term), rhs)
        }
    };
    let lhs = z * total;
    Ok(EmCheck {
        lhs,
        rhs,
        gap: (lhs - rhs).abs(),
    })
}

/// Sums nonnegative, eventually geometric terms. Stops once a term is
/// below `SUM_TOLERANCE` times the running total.
fn sum_until_small(term: impl Fn(usize) -> f64) -> f64 {
    let mut acc = 0.0;
    let mut m = 0;
    loop {
        let t = term(m);
        acc += t;
        if m > 0 && t <= SUM_TOLERANCE * acc {
            return acc;
        }
        m += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EtaCheck {
    /// `log prod_{k<=K} (1 + e^{-kz})`.
    pub log_lhs: f64,
    /// `log(2^{-1/2} exp(pi^2/(12 z)))`.
    pub log_rhs: f64,
    /// `|log_lhs - log_rhs| / |log_rhs|`.
    pub relative_gap: f64,
    /// `|lhs - rhs| / rhs` on the linear scale; about `z/24`.
    pub linear_relative_gap: f64,
}

/// Compares `(-q;q)_inf` at `q = e^{-z}` with its leading behavior
/// `2^{-1/2} exp(pi^2/(12z))`.
pub fn eta_product_check(z: f64) -> Result<EtaCheck> {
    check_z(z)?;
    // The tail sum_{k>K} log(1 + e^{-kz}) is below e^{-(K+1)z}/(1 - e^{-z}).
    let mut k_max = 1usize;
    while (-(k_max as f64 + 1.0) * z).exp() / (1.0 - (-z).exp()) > 1e-15 {
        k_max += 1;
    }
    let log_lhs: f64 = (1..=k_max).map(|k| (-(k as f64) * z).exp().ln_1p()).sum();
    let log_rhs = PI * PI / (12.0 * z) - 0.5 * LN_2;
    let diff = log_lhs - log_rhs;
    Ok(EtaCheck {
        log_lhs,
        log_rhs,
        relative_gap: diff.abs() / log_rhs.abs(),
        linear_relative_gap: diff.exp_m1().abs(),
    })
}

/// One line of an [`AsymptoticReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub formula: String,
    pub h: Option<usize>,
    pub n_or_z: f64,
    /// Natural log of the prediction.
    pub log_predicted: f64,
    /// Exact observed value as a decimal string, when available.
    pub observed: Option<String>,
    /// `observed / predicted`, formed in log space.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub rows: Vec<AsymptoticRow>,
    /// `h` values whose ratios do not approach 1 monotonically as `n` grows.
    pub non_monotone: Vec<usize>,
}

/// `exp(ln)` as `m.mmmmmmmmme+E` without leaving log space.
pub fn format_log_value(ln: f64) -> String {
    if !ln.is_finite() {
        return ln.to_string();
    }
    let log10 = ln / std::f64::consts::LN_10;
    let mut e = log10.floor();
    let mut mantissa = 10f64.powf(log10 - e);
    if mantissa >= 9.999_999_999_5 {
        mantissa /= 10.0;
        e += 1.0;
    }
    format!("{mantissa:.9}e{e}")
}

impl AsymptoticReport {
    pub const CSV_HEADER: &'static str = "formula,h,n_or_z,predicted,observed,ratio";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let h = row.h.map(|h| h.to_string()).unwrap_or_default();
            let observed = row.observed.clone().unwrap_or_default();
            let ratio = row.ratio.map(|r| format!("{r:.9}")).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                row.formula,
                h,
                row.n_or_z,
                format_log_value(row.log_predicted),
                observed,
                ratio
            ));
        }
        out
    }
}

fn ratio_row(formula: &str, h: Option<usize>, n: usize, log_predicted: f64, observed: &BigInt) -> AsymptoticRow {
    let ratio = (!observed.is_zero()).then(|| (ln_bigint(observed) - log_predicted).exp());
    AsymptoticRow {
        formula: formula.to_string(),
        h,
        n_or_z: n as f64,
        log_predicted,
        observed: Some(observed.to_string()),
        ratio,
    }
}

fn check_n_list(n_list: &[usize]) -> Result<usize> {
    let max = n_list.iter().copied().max().unwrap_or(0);
    check_order(max)?;
    if let Some(&bad) = n_list.iter().find(|&&n| n == 0) {
        return Err(Error::InvalidParameter(format!("n must be at least 1, got {bad}")));
    }
    Ok(max)
}

fn monotone_toward_one(ratios: &[f64]) -> bool {
    ratios.windows(2).all(|w| (w[1] - 1.0).abs() <= (w[0] - 1.0).abs())
}

/// Exact `a_h(n)` or `b_h(n)` against [`main_term`] for each `h` in
/// `h_list` and `n` in `n_list`. Rows come out grouped by `h`, with `n` in
/// the given order.
pub fn convergence_report(h_list: &[usize], n_list: &[usize], class: PartitionClass) -> Result<AsymptoticReport> {
    let formula = match class {
        PartitionClass::OddParts => "a_main_term",
        PartitionClass::DistinctParts => "b_main_term",
        other => return Err(Error::UnsupportedClass(other.tag())),
    };
    if n_list.is_empty() || h_list.is_empty() {
        return Ok(AsymptoticReport {
            rows: Vec::new(),
            non_monotone: Vec::new(),
        });
    }
    let order = check_n_list(n_list)?;
    let blocks: Vec<Vec<AsymptoticRow>> = h_list
        .par_iter()
        .map(|&h| {
            let series = hook_counts(h, class, order)?;
            n_list
                .iter()
                .map(|&n| Ok(ratio_row(formula, Some(h), n, ln_main_term(h, n, class)?, series.coeff(n))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut sorted_n = n_list.to_vec();
    sorted_n.sort_unstable();
    let mut non_monotone = Vec::new();
    for (&h, block) in h_list.iter().zip(&blocks) {
        let ratios: Vec<f64> = sorted_n
            .iter()
            .filter_map(|n| block.iter().find(|r| r.n_or_z == *n as f64).and_then(|r| r.ratio))
            .collect();
        if !monotone_toward_one(&ratios) {
            non_monotone.push(h);
        }
    }
    Ok(AsymptoticReport {
        rows: blocks.into_iter().flatten().collect(),
        non_monotone,
    })
}

/// `a_h(n) / b_h(n)` against `gamma_h`. The `observed` column holds the
/// ratio to 12 places and `ratio` is `(a_h/b_h) / gamma_h`.
pub fn hook_ratio_report(h_list: &[usize], n_list: &[usize]) -> Result<AsymptoticReport> {
    if n_list.is_empty() || h_list.is_empty() {
        return Ok(AsymptoticReport {
            rows: Vec::new(),
            non_monotone: Vec::new(),
        });
    }
    let order = check_n_list(n_list)?;
    let mut rows = Vec::new();
    let mut non_monotone = Vec::new();
    for &h in h_list {
        let a = gf_a(h, order)?;
        let b = gf_b(h, order)?;
        let g = gamma(h)?.approx.to_f64();
        let mut ratios = Vec::new();
        for &n in n_list {
            let (an, bn) = (a.coeff(n), b.coeff(n));
            let observed = (!an.is_zero() && !bn.is_zero()).then(|| (ln_bigint(an) - ln_bigint(bn)).exp());
            if let Some(o) = observed {
                ratios.push((n, o / g));
            }
            rows.push(AsymptoticRow {
                formula: "a_over_b".into(),
                h: Some(h),
                n_or_z: n as f64,
                log_predicted: g.ln(),
                observed: observed.map(|o| format!("{o:.12}")),
                ratio: observed.map(|o| o / g),
            });
        }
        ratios.sort_by_key(|&(n, _)| n);
        let only: Vec<f64> = ratios.into_iter().map(|(_, r)| r).collect();
        if !monotone_toward_one(&only) {
            non_monotone.push(h);
        }
    }
    Ok(AsymptoticReport { rows, non_monotone })
}

/// Exact partition counts and total part counts against their main terms.
pub fn class_count_report(n_list: &[usize], class: PartitionClass) -> Result<AsymptoticReport> {
    let prefix = match class {
        PartitionClass::OddParts => "odd",
        PartitionClass::DistinctParts => "distinct",
        other => return Err(Error::UnsupportedClass(other.tag())),
    };
    if n_list.is_empty() {
        return Ok(AsymptoticReport {
            rows: Vec::new(),
            non_monotone: Vec::new(),
        });
    }
    let order = check_n_list(n_list)?;
    let counts = partition_counts(class, order)?;
    let parts = parts_counts(class, order)?;
    let mut rows = Vec::new();
    for &n in n_list {
        rows.push(ratio_row(&format!("{prefix}_partitions"), None, n, ln_partition_count_asym(n)?, counts.coeff(n)));
    }
    for &n in n_list.iter().filter(|&&n| n >= 2) {
        rows.push(ratio_row(&format!("{prefix}_parts"), None, n, ln_parts_count_asym(n, class)?, parts.coeff(n)));
    }
    Ok(AsymptoticReport {
        rows,
        non_monotone: Vec::new(),
    })
}

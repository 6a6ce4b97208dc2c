//! Exact values of the leading constants `alpha_h` (odd parts), `beta_h`
//! (distinct parts) and their ratio `gamma_h`.
//!
//! `alpha_h` is always rational. `beta_h` lies in `Q + Q log 2` and is
//! rational exactly when `h` is even. Each constant is available from its
//! integral definition and from a simplified closed form, and the two are
//! compared exactly.

mod fixed;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use fixed::{Fixed, FRAC_BITS};

pub type Rational = BigRational;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn pow2(e: usize) -> Rational {
    int(BigInt::one() << e)
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Formats as `p/q`, including integers (`3/1`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Exact binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn binom_q(n: usize, k: usize) -> Rational {
    int(binomial(n, k))
}

/// An exact number `r + s log 2` with rational `r`, `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Log2Number {
    pub r: Rational,
    pub s: Rational,
}

impl Log2Number {
    pub fn new(r: Rational, s: Rational) -> Self {
        Log2Number { r, s }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn rational(r: Rational) -> Self {
        Log2Number { r, s: Rational::zero() }
    }

    pub fn log2() -> Self {
        Log2Number {
            r: Rational::zero(),
            s: Rational::one(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Log2Number {
            r: &self.r * c,
            s: &self.s * c,
        }
    }

    /// The product, if it stays in the span of `{1, log 2}`.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        if !self.s.is_zero() && !other.s.is_zero() {
            return None;
        }
        Some(Log2Number {
            r: &self.r * &other.r,
            s: &self.r * &other.s + &self.s * &other.r,
        })
    }

    /// The quotient, defined for nonzero rational divisors only.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.is_rational() || other.r.is_zero() {
            return None;
        }
        Some(self.scale(&other.r.recip()))
    }

    pub fn value(&self) -> Fixed {
        let r = Fixed::from_rational(&self.r);
        let s = Fixed::from_rational(&self.s);
        &r + &(&s * &Fixed::ln2())
    }

    pub fn to_f64(&self) -> f64 {
        self.value().to_f64()
    }
}

impl fmt::Display for Log2Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r.is_zero(), self.s.is_zero()) {
            (_, true) => write!(f, "{}", self.r),
            (true, false) => write!(f, "{} log 2", self.s),
            (false, false) if self.r.is_negative() => write!(f, "{} log 2 - {}", self.s, -&self.r),
            (false, false) => write!(f, "{} log 2 + {}", self.s, self.r),
        }
    }
}

impl Add for &Log2Number {
    type Output = Log2Number;
    fn add(self, rhs: &Log2Number) -> Log2Number {
        Log2Number {
            r: &self.r + &rhs.r,
            s: &self.s + &rhs.s,
        }
    }
}

impl Sub for &Log2Number {
    type Output = Log2Number;
    fn sub(self, rhs: &Log2Number) -> Log2Number {
        Log2Number {
            r: &self.r - &rhs.r,
            s: &self.s - &rhs.s,
        }
    }
}

impl Neg for &Log2Number {
    type Output = Log2Number;
    fn neg(self) -> Log2Number {
        Log2Number { r: -&self.r, s: -&self.s }
    }
}

#[derive(Serialize, Deserialize)]
struct Log2Wire {
    r: String,
    s: String,
}

impl Serialize for Log2Number {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Log2Wire {
            r: format_rational(&self.r),
            s: format_rational(&self.s),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Log2Number {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = Log2Wire::deserialize(deserializer)?;
        let r = parse_rational(&wire.r).map_err(serde::de::Error::custom)?;
        let s = parse_rational(&wire.s).map_err(serde::de::Error::custom)?;
        Ok(Log2Number { r, s })
    }
}

/// `H_n = sum_{k<=n} 1/k`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| acc + rat(1, k as i64))
}

/// `[H_0, H_1, ..., H_n]`.
pub fn harmonic_table(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::zero());
    for k in 1..=n {
        let next = &out[k - 1] + rat(1, k as i64);
        out.push(next);
    }
    out
}

/// `I_A(j, l) = int_0^inf (1 - e^{-2x})^j e^{-lx} dx` for even `l >= 2`,
/// equal to `(1/2) sum_k C(j,k) (-1)^k / (l/2 + k)`.
pub fn i_a(j: usize, l: usize) -> Result<Rational> {
    if l == 0 || l % 2 == 1 {
        return Err(Error::InvalidParameter(format!("I_A needs a positive even l, got {l}")));
    }
    let half = l / 2;
    let sum = (0..=j).fold(Rational::zero(), |acc, k| acc + sign(k) * binom_q(j, k) / int((half + k) as u64));
    Ok(sum / int(2u32))
}

/// `int_1^2 v^e dv` for integer `e`.
fn power_integral(e: i64) -> Log2Number {
    if e == -1 {
        return Log2Number::log2();
    }
    let p = e + 1;
    let two_p = if p >= 0 {
        pow2(p as usize)
    } else {
        pow2((-p) as usize).recip()
    };
    Log2Number::rational((two_p - Rational::one()) / int(p))
}

/// `I_B(j, k) = int_1^2 (v-1)^{j-1} v^{-k} dv` for `j >= 1`, which equals
/// `int_0^inf e^{-jx} / (1 + e^{-x})^k dx`.
pub fn i_b(j: usize, k: usize) -> Result<Log2Number> {
    if j == 0 {
        return Err(Error::InvalidParameter("I_B needs j >= 1".into()));
    }
    let mut acc = Log2Number::zero();
    for i in 0..j {
        let coeff = binom_q(j - 1, i) * sign(j - 1 - i);
        acc = &acc + &power_integral(i as i64 - k as i64).scale(&coeff);
    }
    Ok(acc)
}

fn check_h(h: usize) -> Result<()> {
    if h == 0 {
        return Err(Error::InvalidParameter("hook length h must be >= 1".into()));
    }
    Ok(())
}

/// `alpha_h` from the integral sums:
/// `sum_{j<ceil(h/2)} C(h-j-1,j) I_A(j,2h-4j) + sum_{j<floor(h/2)} C(h-j-2,j) I_A(j,2h-4j-2)`.
pub fn alpha_via_integrals(h: usize) -> Result<Rational> {
    check_h(h)?;
    let mut acc = Rational::zero();
    for j in 0..h.div_ceil(2) {
        acc += binom_q(h - j - 1, j) * i_a(j, 2 * h - 4 * j)?;
    }
    for j in 0..h / 2 {
        acc += binom_q(h - j - 2, j) * i_a(j, 2 * h - 4 * j - 2)?;
    }
    Ok(acc)
}

/// `beta_h = sum_{j<ceil(h/2)} C(h-j-1,j) I_B(j+1, h-j)`.
pub fn beta_via_integrals(h: usize) -> Result<Log2Number> {
    check_h(h)?;
    let mut acc = Log2Number::zero();
    for j in 0..h.div_ceil(2) {
        acc = &acc + &i_b(j + 1, h - j)?.scale(&binom_q(h - j - 1, j));
    }
    Ok(acc)
}

/// `sum_{j<=floor((h-1)/2)} sum_{k<=j} C(h-j-1,j) C(j,k) (-1)^k / (h-2j+k)`;
/// zero for `h = 0`.
pub fn alpha_tilde_sum(h: usize) -> Rational {
    let mut acc = Rational::zero();
    if h == 0 {
        return acc;
    }
    for j in 0..=(h - 1) / 2 {
        let outer = binom_q(h - j - 1, j);
        for k in 0..=j {
            acc += &outer * binom_q(j, k) * sign(k) / int((h - 2 * j + k) as u64);
        }
    }
    acc
}

/// `H_h - H_{floor(h/2)}`, the closed form of [`alpha_tilde_sum`].
pub fn alpha_tilde(h: usize) -> Rational {
    harmonic(h) - harmonic(h / 2)
}

fn ceil_half_minus(h: usize, shift: usize) -> usize {
    // ceil((h - shift) / 2), clamped at 0 for h < shift
    h.saturating_sub(shift).div_ceil(2)
}

fn alpha_from_table(h: usize, table: &[Rational]) -> Rational {
    (&table[h] - &table[ceil_half_minus(h, 1)] + &table[h - 1] - &table[ceil_half_minus(h, 2)]) / int(2u32)
}

/// `alpha_h = (H_h - H_{ceil((h-1)/2)} + H_{h-1} - H_{ceil((h-2)/2)}) / 2`.
pub fn alpha(h: usize) -> Result<Rational> {
    check_h(h)?;
    Ok(alpha_from_table(h, &harmonic_table(h)))
}

/// `[alpha_1, ..., alpha_{h_max}]`, sharing one harmonic table.
pub fn alphas(h_max: usize) -> Vec<Rational> {
    let table = harmonic_table(h_max);
    (1..=h_max).map(|h| alpha_from_table(h, &table)).collect()
}

/// `F_{n,m}(x) = sum_k C(n,k) (-1)^k x^{m+k} / (m+k)` for `m >= 1`.
pub fn f_poly(n: usize, m: usize, x: &Rational) -> Result<Rational> {
    if m == 0 {
        return Err(Error::InvalidParameter("F_{n,m} needs m >= 1".into()));
    }
    let mut power = num_traits::pow(x.clone(), m);
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc += binom_q(n, k) * sign(k) * &power / int((m + k) as u64);
        power *= x;
    }
    Ok(acc)
}

/// `F_{n,m}(x) = x^m sum_{j<=n+m-1} (1-x)^{n-j} C(n+m-1-j, m-1) / (m C(n+m, m))`.
/// Terms with `j > n` have a zero binomial and are skipped.
pub fn f_poly_closed(n: usize, m: usize, x: &Rational) -> Result<Rational> {
    if m == 0 {
        return Err(Error::InvalidParameter("F_{n,m} needs m >= 1".into()));
    }
    let one_minus = Rational::one() - x;
    let acc = (0..=n).fold(Rational::zero(), |acc, j| {
        acc + binom_q(n + m - 1 - j, m - 1) * num_traits::pow(one_minus.clone(), n - j)
    });
    Ok(num_traits::pow(x.clone(), m) * acc / (int(m as u64) * binom_q(n + m, m)))
}

/// `R_n(x) = sum_{1<=k<=n} C(n,k) (-1)^k x^k / k`.
pub fn r_poly(n: usize, x: &Rational) -> Rational {
    let (a, b) = (x.numer(), x.denom());
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut row = BigInt::one();
    let terms = (1..=n).map(|k| {
        num *= a;
        den *= b;
        row = &row * BigInt::from(n - k + 1) / BigInt::from(k);
        let c = &row * &num;
        (if k % 2 == 0 { c } else { -c }, &den * BigInt::from(k))
    });
    sum_fractions(terms)
}

/// Sums `p_i / q_i` over one common denominator, reducing once at the end.
/// Much cheaper than repeated rational addition when the `q_i` share most
/// of their factors.
pub fn sum_fractions(terms: impl IntoIterator<Item = (BigInt, BigInt)>) -> Rational {
    let terms: Vec<(BigInt, BigInt)> = terms.into_iter().collect();
    let lcm = terms
        .iter()
        .fold(BigInt::one(), |acc, (_, d)| num_integer::Integer::lcm(&acc, d));
    let num: BigInt = terms.iter().map(|(p, q)| p * (&lcm / q)).sum();
    Rational::new(num, lcm)
}

fn unit_fraction(d: BigInt) -> (BigInt, BigInt) {
    (BigInt::one(), d)
}

/// `R_n(x)` from `int_0^x ((1-t)^n - 1) / t dt` by composite Simpson
/// quadrature with `panels` (rounded up to even) subintervals.
pub fn r_poly_integral(n: usize, x: f64, panels: usize) -> f64 {
    let f = |t: f64| {
        if t == 0.0 {
            -(n as f64)
        } else {
            ((1.0 - t).powi(n as i32) - 1.0) / t
        }
    };
    simpson(f, 0.0, x, panels)
}

pub(crate) fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let panels = panels.max(2).next_multiple_of(2);
    let step = (b - a) / panels as f64;
    let mut acc = f(a) + f(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + step * i as f64);
    }
    acc * step / 3.0
}

/// `int_{1/2}^1 (1-x)^n / x dx = log 2 + R_n(1) - R_n(1/2)`.
pub fn odd_tail_integral(n: usize) -> Log2Number {
    let rational = r_poly(n, &Rational::one()) - r_poly(n, &rat(1, 2));
    Log2Number::new(rational, Rational::one())
}

/// `beta_h` from the explicit sums: for even `h`,
/// `sum_{c<=(h-2)/2} 1 / ((2c+1) 2^{2c+1})`; for odd `h = 2n+1`,
/// `sum_{c<n} 1/((c+1) 2^{c+1}) - sum_{c<n} 1/((2c+2) 2^{2c+2})` plus
/// [`odd_tail_integral`]`(n)`.
pub fn beta(h: usize) -> Result<Log2Number> {
    check_h(h)?;
    let weighted = |c: usize, e: usize| BigInt::from(c) << e;
    if h % 2 == 0 {
        let sum = sum_fractions((0..h / 2).map(|c| unit_fraction(weighted(2 * c + 1, 2 * c + 1))));
        return Ok(Log2Number::rational(sum));
    }
    let n = (h - 1) / 2;
    let r = sum_fractions((0..n).flat_map(|c| {
        let (one, two) = (unit_fraction(weighted(c + 1, c + 1)), unit_fraction(weighted(2 * c + 2, 2 * c + 2)));
        [one, (-two.0, two.1)]
    }));
    Ok(&Log2Number::rational(r) + &odd_tail_integral(n))
}

/// `[beta_1, ..., beta_{h_max}]`, computed in parallel.
pub fn betas(h_max: usize) -> Vec<Log2Number> {
    (1..=h_max)
        .into_par_iter()
        .map(|h| beta(h).expect("h >= 1"))
        .collect()
}

/// `beta_h` from the double sums obtained by expanding each `I_B` with the
/// binomial theorem, with the single `log 2` term split off for odd `h`.
pub fn beta_via_double_sums(h: usize) -> Result<Log2Number> {
    check_h(h)?;
    // (1 - 2^{-e}) / e for e >= 1
    let piece = |e: usize| (Rational::one() - pow2(e).recip()) / int(e as u64);
    let mut r = Rational::zero();
    let mut s = Rational::zero();
    if h % 2 == 0 {
        for j in 0..h / 2 {
            let outer = binom_q(h - j - 1, j);
            for k in 0..=j {
                r += &outer * binom_q(j, k) * sign(k) * piece(h - 2 * j + k - 1);
            }
        }
    } else {
        s = Rational::one();
        for j in 0..=(h - 1) / 2 {
            let outer = binom_q(h - j - 1, j);
            for k in 1..=j {
                r += &outer * binom_q(j, k) * sign(k) * piece(h - 2 * j + k - 1);
            }
        }
        for j in 0..(h - 1) / 2 {
            r += binom_q(h - j - 1, j) * piece(h - 2 * j - 1);
        }
    }
    Ok(Log2Number::new(r, s))
}

/// `gamma_h = alpha_h / beta_h`, exact when `beta_h` is rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma {
    pub approx: Fixed,
    pub exact: Option<Rational>,
}

pub fn gamma(h: usize) -> Result<Gamma> {
    gamma_from(&alpha(h)?, &beta(h)?)
}

fn gamma_from(alpha: &Rational, beta: &Log2Number) -> Result<Gamma> {
    let b = beta.value();
    if b.cmp_with_slack(&Fixed::zero()).is_none() {
        return Err(Error::InvalidParameter("beta_h is numerically zero".into()));
    }
    let approx = &Fixed::from_rational(alpha) / &b;
    let exact = beta.is_rational().then(|| alpha / &beta.r);
    Ok(Gamma { approx, exact })
}

/// `S(n) = sum_{k<=floor(n/2)} C(n-k,k) 2^k / (n-2k+1)`.
pub fn s_sum(n: usize) -> Rational {
    (0..=n / 2).fold(Rational::zero(), |acc, k| acc + binom_q(n - k, k) * pow2(k) / int((n - 2 * k + 1) as u64))
}

/// `(2^{n+1} - 1)/(n+1)` for even `n`, `(2^{m+1} - 1)^2/(n+1)` for `n = 2m+1`.
pub fn s_sum_closed(n: usize) -> Rational {
    let denom = int((n + 1) as u64);
    if n % 2 == 0 {
        (pow2(n + 1) - Rational::one()) / denom
    } else {
        let t = pow2(n / 2 + 1) - Rational::one();
        &t * &t / denom
    }
}

/// `T(n) = sum_{k<=floor(n/2)} k C(n-k,k) 2^k / (n-2k+1)`, which satisfies
/// `S(n) = (2^{n+1} - (-1)^{n+1}) / (3(n+1)) + 2 T(n) / (n+1)`.
pub fn t_sum(n: usize) -> Rational {
    (0..=n / 2).fold(Rational::zero(), |acc, k| {
        acc + int(k as u64) * binom_q(n - k, k) * pow2(k) / int((n - 2 * k + 1) as u64)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitRow {
    pub h: usize,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub alpha_gap: f64,
    pub beta_gap: f64,
    pub gamma_gap: f64,
}

/// Structural checks on `alpha_h`, `beta_h` for `h <= h_max`, with the
/// distance of each constant from its limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitReport {
    pub h_max: usize,
    /// `alpha_{h+1} > alpha_h` for all `h < h_max`. This fails from `h = 2`
    /// on: `alpha_{h+1} - alpha_h = (1/(h+1) - 1/h)/2 < 0` for even `h`.
    pub alpha_increasing: bool,
    /// `alpha_1 < alpha_3 < alpha_5 < ...` up to `h_max`.
    pub alpha_odd_increasing: bool,
    /// `alpha_2 > alpha_4 > alpha_6 > ...` up to `h_max`.
    pub alpha_even_decreasing: bool,
    /// `beta_{2n+1} - beta_{2n-1} = -1/(n 2^{2n+1})` whenever `2n+1 <= h_max`.
    pub beta_recurrence: bool,
    /// `alpha_h > beta_h` numerically for `2 <= h <= h_max`.
    pub alpha_exceeds_beta: bool,
    pub violations: Vec<String>,
    pub rows: Vec<LimitRow>,
}

/// `log 2`, `log(3)/2`, `log 4 / log 3` as high-precision values.
pub fn limits() -> (Fixed, Fixed, Fixed) {
    let ln2 = Fixed::ln2();
    let ln3 = Fixed::ln3();
    let half_ln3 = &ln3 / &Fixed::from_int(2);
    let ratio = &(&ln2 + &ln2) / &ln3;
    (ln2, half_ln3, ratio)
}

pub fn limit_diagnostics(h_max: usize) -> Result<LimitReport> {
    if h_max < 4 {
        return Err(Error::InvalidParameter(format!("limit diagnostics need h_max >= 4, got {h_max}")));
    }
    let alphas = alphas(h_max);
    let betas = betas(h_max);
    let at = |h: usize| (&alphas[h - 1], &betas[h - 1]);
    let mut violations = Vec::new();

    let mut alpha_increasing = true;
    for h in 1..h_max {
        if alphas[h] <= alphas[h - 1] {
            alpha_increasing = false;
            violations.push(format!("alpha_{} = {} is not above alpha_{} = {}", h + 1, alphas[h], h, alphas[h - 1]));
        }
    }

    let alpha_odd_increasing = (3..=h_max).step_by(2).all(|h| alphas[h - 1] > alphas[h - 3]);
    let alpha_even_decreasing = (4..=h_max).step_by(2).all(|h| alphas[h - 1] < alphas[h - 3]);

    let mut beta_recurrence = true;
    let mut n = 1;
    while 2 * n + 1 <= h_max {
        let diff = &betas[2 * n] - &betas[2 * n - 2];
        let want = Log2Number::rational(-(int(n as u64) * pow2(2 * n + 1)).recip());
        if diff != want {
            beta_recurrence = false;
            violations.push(format!("beta_{} - beta_{} = {} instead of {}", 2 * n + 1, 2 * n - 1, diff, want));
        }
        n += 1;
    }

    let (lim_a, lim_b, lim_g) = limits();
    let rows: Vec<(LimitRow, Option<String>)> = (1..=h_max)
        .into_par_iter()
        .map(|h| {
            let (a, b) = at(h);
            let av = Fixed::from_rational(a);
            let bv = b.value();
            let gv = &av / &bv;
            let problem = (h >= 2 && av.cmp_with_slack(&bv) != Some(std::cmp::Ordering::Greater))
                .then(|| format!("alpha_{h} = {} does not exceed beta_{h} = {}", av, bv));
            let row = LimitRow {
                h,
                alpha: av.to_f64(),
                beta: bv.to_f64(),
                gamma: gv.to_f64(),
                alpha_gap: (&av - &lim_a).abs().to_f64(),
                beta_gap: (&bv - &lim_b).abs().to_f64(),
                gamma_gap: (&gv - &lim_g).abs().to_f64(),
            };
            (row, problem)
        })
        .collect();
    let mut alpha_exceeds_beta = true;
    let mut out_rows = Vec::with_capacity(rows.len());
    for (row, problem) in rows {
        if let Some(p) = problem {
            alpha_exceeds_beta = false;
            violations.push(p);
        }
        out_rows.push(row);
    }

    Ok(LimitReport {
        h_max,
        alpha_increasing,
        alpha_odd_increasing,
        alpha_even_decreasing,
        beta_recurrence,
        alpha_exceeds_beta,
        violations,
        rows: out_rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
}

/// The constants for one `h`, each closed form confirmed against its
/// integral definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantsRecord {
    pub h: usize,
    pub alpha: Rational,
    pub beta: Log2Number,
    pub gamma: Fixed,
    pub gamma_exact: Option<Rational>,
    pub provenance: Provenance,
}

/// Digits after the decimal point in serialized `gamma` values.
pub const GAMMA_DIGITS: usize = 40;

impl Serialize for ConstantsRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            h: usize,
            alpha: String,
            beta: &'a Log2Number,
            gamma: String,
            #[serde(skip_serializing_if = "Option::is_none")]
            gamma_exact: Option<String>,
            provenance: &'a Provenance,
        }
        Wire {
            h: self.h,
            alpha: format_rational(&self.alpha),
            beta: &self.beta,
            gamma: self.gamma.to_decimal(GAMMA_DIGITS),
            gamma_exact: self.gamma_exact.as_ref().map(format_rational),
            provenance: &self.provenance,
        }
        .serialize(serializer)
    }
}

pub fn constants_record(h: usize) -> Result<ConstantsRecord> {
    let alpha = alpha(h)?;
    let alpha_int = alpha_via_integrals(h)?;
    if alpha != alpha_int {
        return Err(Error::Inconsistent(format!("alpha_{h}: {alpha} vs integral sum {alpha_int}")));
    }
    let beta = beta(h)?;
    let beta_int = beta_via_integrals(h)?;
    if beta != beta_int {
        return Err(Error::Inconsistent(format!("beta_{h}: {beta} vs integral sum {beta_int}")));
    }
    let g = gamma_from(&alpha, &beta)?;
    let gamma_source = if g.exact.is_some() {
        "exact quotient alpha/beta"
    } else {
        "quotient alpha/beta in 320-bit fixed point"
    };
    Ok(ConstantsRecord {
        h,
        alpha,
        beta,
        gamma: g.approx,
        gamma_exact: g.exact,
        provenance: Provenance {
            alpha: "harmonic-number closed form, equal to the I_A integral sum".into(),
            beta: "explicit even/odd sum, equal to the I_B integral sum".into(),
            gamma: gamma_source.into(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(0), rat(0, 1));
        assert_eq!(harmonic(1), rat(1, 1));
        assert_eq!(harmonic(3), rat(11, 6));
        assert_eq!(harmonic_table(3)[3], rat(11, 6));
    }

    #[test]
    fn i_a_examples() {
        assert_eq!(i_a(0, 2).unwrap(), rat(1, 2));
        assert_eq!(i_a(1, 2).unwrap(), rat(1, 4));
        assert!(i_a(1, 3).is_err());
        assert!(i_a(1, 0).is_err());
    }

    #[test]
    fn i_b_examples() {
        assert_eq!(i_b(1, 1).unwrap(), Log2Number::log2());
        assert_eq!(i_b(1, 2).unwrap(), Log2Number::rational(rat(1, 2)));
        assert_eq!(i_b(1, 0).unwrap(), Log2Number::rational(rat(1, 1)));
        assert!(i_b(0, 1).is_err());
    }

    #[test]
    fn pinned_constants() {
        assert_eq!(alpha_via_integrals(2).unwrap(), rat(3, 4));
        assert_eq!(alpha(1).unwrap(), rat(1, 2));
        assert_eq!(alpha(2).unwrap(), rat(3, 4));
        assert_eq!(alpha(3).unwrap(), rat(2, 3));
        let b3 = Log2Number::new(rat(-1, 8), rat(1, 1));
        assert_eq!(beta_via_integrals(3).unwrap(), b3);
        assert_eq!(beta(3).unwrap(), b3);
        assert_eq!(beta_via_integrals(1).unwrap(), Log2Number::log2());
        assert_eq!(beta(2).unwrap(), Log2Number::rational(rat(1, 2)));
        assert_eq!(beta(4).unwrap(), Log2Number::rational(rat(13, 24)));
        assert_eq!(beta_via_integrals(4).unwrap(), Log2Number::rational(rat(13, 24)));
    }

    #[test]
    fn alpha_tilde_examples() {
        assert_eq!(alpha_tilde(0), rat(0, 1));
        assert_eq!(alpha_tilde(1), rat(1, 1));
        assert_eq!(alpha_tilde(2), rat(1, 2));
        assert_eq!(alpha_tilde(4), rat(7, 12));
        assert_eq!(alpha_tilde_sum(4), rat(7, 12));
        for h in 1..=12 {
            let mean = (alpha_tilde(h) + alpha_tilde(h - 1)) / int(2u32);
            assert_eq!(alpha(h).unwrap(), mean, "h = {h}");
        }
    }

    #[test]
    fn gamma_examples() {
        let g1 = gamma(1).unwrap();
        assert!(g1.exact.is_none());
        assert!((g1.approx.to_f64() - 1.0 / (2.0 * std::f64::consts::LN_2)).abs() < 1e-15);
        assert_eq!(gamma(2).unwrap().exact, Some(rat(3, 2)));
        let g3 = gamma(3).unwrap().approx.to_f64();
        assert!((g3 - 2.0 / (3.0 * (std::f64::consts::LN_2 - 0.125))).abs() < 1e-14);
    }

    #[test]
    fn polynomial_examples() {
        let one = Rational::one();
        assert_eq!(f_poly(1, 1, &one).unwrap(), rat(1, 2));
        assert_eq!(f_poly(3, 2, &one).unwrap(), (int(2u32) * binom_q(5, 2)).recip());
        assert_eq!(r_poly(5, &Rational::zero()), Rational::zero());
        assert_eq!(r_poly(4, &one), -harmonic(4));
        assert!(f_poly(2, 0, &one).is_err());
        let x = rat(1, 3);
        for n in 0..6 {
            for m in 1..5 {
                assert_eq!(f_poly(n, m, &x).unwrap(), f_poly_closed(n, m, &x).unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn s_sum_examples() {
        assert_eq!(s_sum(0), rat(1, 1));
        assert_eq!(s_sum(2), rat(7, 3));
        assert_eq!(s_sum(3), rat(9, 4));
        assert_eq!(s_sum_closed(3), rat(9, 4));
    }

    #[test]
    fn log2_number_algebra() {
        let a = Log2Number::new(rat(1, 2), rat(1, 1));
        let b = Log2Number::rational(rat(2, 1));
        assert_eq!(a.checked_mul(&b), Some(Log2Number::new(rat(1, 1), rat(2, 1))));
        assert_eq!(a.checked_mul(&a), None);
        assert_eq!(a.checked_div(&b), Some(Log2Number::new(rat(1, 4), rat(1, 2))));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!((&a - &a), Log2Number::zero());
        assert_eq!(Log2Number::new(rat(-1, 8), rat(1, 1)).to_string(), "1 log 2 - 1/8");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"r":"1/2","s":"1/1"}"#);
        assert_eq!(serde_json::from_str::<Log2Number>(&json).unwrap(), a);
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-5").unwrap(), rat(-5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(3, 1)), "3/1");
    }

    #[test]
    fn limit_diagnostics_small() {
        let report = limit_diagnostics(12).unwrap();
        assert!(report.beta_recurrence && report.alpha_exceeds_beta);
        assert!(report.alpha_odd_increasing && report.alpha_even_decreasing);
        assert!(!report.alpha_increasing);
        assert_eq!(report.violations[0], "alpha_3 = 2/3 is not above alpha_2 = 3/4");
        assert_eq!(report.violations.len(), 5);
        assert_eq!(report.rows.len(), 12);
        assert_eq!(&beta(5).unwrap() - &beta(3).unwrap(), Log2Number::rational(rat(-1, 64)));
        assert!(limit_diagnostics(3).is_err());
    }

    #[test]
    fn record_json() {
        let json = serde_json::to_value(constants_record(2).unwrap()).unwrap();
        assert_eq!(json["alpha"], "3/4");
        assert_eq!(json["beta"]["r"], "1/2");
        assert_eq!(json["beta"]["s"], "0/1");
        assert_eq!(json["gamma_exact"], "3/2");
        assert!(json["gamma"].as_str().unwrap().starts_with("1.5000"));
        let odd = serde_json::to_value(constants_record(3).unwrap()).unwrap();
        assert!(odd.get("gamma_exact").is_none());
    }
}

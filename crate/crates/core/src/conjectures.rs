//! Evidence scans for hook counts over self-conjugate partitions
//! (`a*_h(n)`) and partitions into distinct odd parts (`b*_h(n)`).
//!
//! Two statements are scanned: `2m` divides `a*_{2m}(n)` for all `n` and
//! `m >= 1`, and `a*_h(n) / b*_h(n)` tends to a constant above 1. Neither
//! is proven; a clean scan is evidence only.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{census, Census, PartitionClass};

/// `(a*_h(n), b*_h(n))` by enumeration.
pub fn star_counts(h: usize, n: usize) -> Result<(u64, u64)> {
    if h == 0 {
        return Err(Error::InvalidParameter("hook length h must be >= 1".into()));
    }
    let a = census(PartitionClass::SelfConjugate, n);
    let b = census(PartitionClass::DistinctOddParts, n);
    Ok((hook_entry(&a, h), hook_entry(&b, h)))
}

fn hook_entry(c: &Census, h: usize) -> u64 {
    c.hooks.get(h).copied().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub params: serde_json::Value,
    pub observed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanResult {
    pub conjecture: String,
    pub range: serde_json::Value,
    pub counterexamples: Vec<Counterexample>,
    pub summary: serde_json::Value,
}

impl ScanResult {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks `a*_{2m}(n) = 0 mod 2m` for `1 <= m <= m_max`, `0 <= n <= n_max`.
pub fn divisibility_scan(m_max: usize, n_max: usize) -> Result<ScanResult> {
    if m_max == 0 || n_max == 0 {
        return Err(Error::InvalidParameter("divisibility scan needs m_max, n_max >= 1".into()));
    }
    let censuses: Vec<Census> = (0..=n_max)
        .into_par_iter()
        .map(|n| census(PartitionClass::SelfConjugate, n))
        .collect();
    let mut counterexamples = Vec::new();
    let mut checked = 0usize;
    let mut nonzero = 0usize;
    for c in &censuses {
        for m in 1..=m_max {
            let value = hook_entry(c, 2 * m);
            checked += 1;
            if value != 0 {
                nonzero += 1;
            }
            if value % (2 * m) as u64 != 0 {
                counterexamples.push(Counterexample {
                    params: serde_json::json!({ "m": m, "n": c.n }),
                    observed: value,
                });
            }
        }
    }
    Ok(ScanResult {
        conjecture: "a*_{2m}(n) is divisible by 2m".into(),
        range: serde_json::json!({ "m": [1, m_max], "n": [0, n_max] }),
        counterexamples,
        summary: serde_json::json!({ "checked": checked, "nonzero": nonzero }),
    })
}

/// Ratios `a*_h(n) / b*_h(n)` over `n_list`. Entries with `b*_h(n) = 0`
/// are listed under `skipped` and left out of the statistics.
pub fn gamma_star_evidence(h: usize, n_list: &[usize]) -> Result<ScanResult> {
    if h < 2 {
        return Err(Error::InvalidParameter(format!("gamma* evidence needs h >= 2, got {h}")));
    }
    let pairs: Vec<(usize, u64, u64)> = n_list
        .par_iter()
        .map(|&n| {
            let (a, b) = star_counts(h, n)?;
            Ok((n, a, b))
        })
        .collect::<Result<_>>()?;
    let mut ratios = Vec::new();
    let mut skipped = Vec::new();
    let mut table = Vec::new();
    for &(n, a, b) in &pairs {
        if b == 0 {
            skipped.push(n);
            table.push(serde_json::json!({ "n": n, "a_star": a, "b_star": b, "ratio": null }));
        } else {
            let r = a as f64 / b as f64;
            ratios.push(r);
            table.push(serde_json::json!({ "n": n, "a_star": a, "b_star": b, "ratio": r }));
        }
    }
    let min = ratios.iter().copied().reduce(f64::min);
    let max = ratios.iter().copied().reduce(f64::max);
    let last = ratios.last().copied();
    Ok(ScanResult {
        conjecture: format!("a*_{h}(n) / b*_{h}(n) tends to a constant above 1"),
        range: serde_json::json!({ "h": h, "n": n_list }),
        counterexamples: Vec::new(),
        summary: serde_json::json!({
            "min": min,
            "max": max,
            "last": last,
            "skipped": skipped,
            "ratios": table,
        }),
    })
}

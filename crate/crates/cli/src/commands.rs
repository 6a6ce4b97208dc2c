use std::fmt::Write as _;

use hook_census::asymptotics::{self, DEFAULT_MAX_ORDER};
use hook_census::conjectures::{divisibility_scan, gamma_star_evidence};
use hook_census::exactconst::{
    alpha, alpha_tilde, alpha_tilde_sum, alpha_via_integrals, beta, beta_via_integrals, beta_via_double_sums,
    constants_record, format_rational, GAMMA_DIGITS,
};
use hook_census::partitions::{balanced_sides, nekrasov_okounkov_check, HookCountTable, PartitionClass};
use hook_census::qseries::{check_euler_identity, gf_a, gf_a_closed, gf_b, identity_suite, rational_form_check};

use crate::cache::{Cache, CacheEntry, GridKey};
use crate::{CliError, Format, Source, Suite};

/// Largest `n` the enumeration oracle is asked for.
pub const ORACLE_MAX_N: usize = 80;
/// Largest `n` cross-checked between the two sources on every table run.
pub const CROSS_CHECK_N: usize = 40;
pub const MAX_H: usize = 1000;
pub const NEKRASOV_MAX_N: usize = 40;

/// An inclusive range `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    /// Parses `a..b` (inclusive) or a single `a`.
    pub fn parse(text: &str) -> Result<Span, CliError> {
        let bad = || CliError::Invalid(format!("cannot parse range `{text}`; expected a..b"));
        let (lo, hi) = match text.split_once("..") {
            Some((lo, hi)) => (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?),
            None => {
                let v = text.trim().parse().map_err(|_| bad())?;
                (v, v)
            }
        };
        if hi < lo {
            return Err(CliError::Invalid(format!("range `{text}` is empty")));
        }
        Ok(Span { lo, hi })
    }

    fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

/// Parses a comma-separated list whose items are numbers or `a..b` ranges.
pub fn parse_list(text: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        out.extend(Span::parse(item)?.iter());
    }
    if out.is_empty() {
        return Err(CliError::Invalid(format!("list `{text}` is empty")));
    }
    Ok(out)
}

fn series_class(class: PartitionClass) -> bool {
    matches!(class, PartitionClass::OddParts | PartitionClass::DistinctParts)
}

fn series_grid(class: PartitionClass, h: Span, n: Span) -> Result<Vec<Vec<String>>, CliError> {
    h.iter()
        .map(|hv| {
            let s = match class {
                PartitionClass::OddParts => gf_a(hv, n.hi),
                _ => gf_b(hv, n.hi),
            }
            .map_err(|e| CliError::Invalid(e.to_string()))?;
            Ok(n.iter().map(|nv| s.coeff(nv).to_string()).collect())
        })
        .collect()
}

fn oracle_grid(class: PartitionClass, h: Span, n: Span) -> Vec<Vec<String>> {
    let table = HookCountTable::build(class, n.hi);
    h.iter()
        .map(|hv| n.iter().map(|nv| table.entry(hv, nv).to_string()).collect())
        .collect()
}

/// First cell where two grids over the same spans differ.
pub fn first_disagreement(h: Span, n: Span, a: &[Vec<String>], b: &[Vec<String>]) -> Option<String> {
    for (i, hv) in h.iter().enumerate() {
        for (j, nv) in n.iter().enumerate() {
            let (x, y) = (&a[i][j], &b[i][j]);
            if x != y {
                return Some(format!("h = {hv}, n = {nv}: oracle {x}, series {y}"));
            }
        }
    }
    None
}

pub struct TableOutcome {
    pub text: String,
    pub cache_note: String,
}

pub fn table(
    class: PartitionClass,
    h: Span,
    n: Span,
    source: Source,
    format: Format,
    cache: Option<&Cache>,
) -> Result<TableOutcome, CliError> {
    if h.lo == 0 || h.hi > MAX_H {
        return Err(CliError::Invalid(format!("h must lie in 1..{MAX_H}")));
    }
    match source {
        Source::Oracle if n.hi > ORACLE_MAX_N => {
            return Err(CliError::Invalid(format!("oracle source is limited to n <= {ORACLE_MAX_N}")));
        }
        Source::Series if !series_class(class) => {
            return Err(CliError::Invalid(format!("no series source for class `{}`", class.tag())));
        }
        Source::Series if n.hi > DEFAULT_MAX_ORDER => {
            return Err(CliError::Invalid(format!("series source is limited to n <= {DEFAULT_MAX_ORDER}")));
        }
        _ => {}
    }

    if series_class(class) && n.lo <= CROSS_CHECK_N {
        let overlap = Span {
            lo: n.lo,
            hi: n.hi.min(CROSS_CHECK_N),
        };
        let from_oracle = oracle_grid(class, h, overlap);
        let from_series = series_grid(class, h, overlap)?;
        if let Some(cell) = first_disagreement(h, overlap, &from_oracle, &from_series) {
            return Err(CliError::Integrity(format!("{} counts disagree at {cell}", class.tag())));
        }
    }

    let key = GridKey {
        kind: "hook-counts".into(),
        class: class.tag().into(),
        source: source.tag().into(),
        h: (h.lo, h.hi),
        n: (n.lo, n.hi),
    };
    let (entry, cache_note) = match cache.and_then(|c| c.load(&key).map(|e| (e, c.path_for(&key)))) {
        Some((entry, path)) => (entry, format!("cache hit {}", path.display())),
        None => {
            let counts = match source {
                Source::Oracle => oracle_grid(class, h, n),
                Source::Series => series_grid(class, h, n)?,
            };
            let entry = CacheEntry::new(key, counts);
            let note = match cache.map(|c| c.store(&entry)) {
                Some(Ok(path)) => format!("cache miss, stored {}", path.display()),
                Some(Err(e)) => format!("cache miss, store failed: {e}"),
                None => "cache disabled".into(),
            };
            (entry, note)
        }
    };

    let text = match format {
        Format::Json => entry.to_json(),
        Format::Csv => {
            let mut out = String::from("class,h,n,count\n");
            for (i, hv) in h.iter().enumerate() {
                for (j, nv) in n.iter().enumerate() {
                    let _ = writeln!(out, "{},{hv},{nv},{}", class.tag(), entry.counts[i][j]);
                }
            }
            out
        }
    };
    Ok(TableOutcome { text, cache_note })
}

/// Result of a verification suite: the report text and whether it passed.
pub struct VerifyOutcome {
    pub text: String,
    pub passed: bool,
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

pub fn verify(suite: Suite, h_max: usize, n_max: usize) -> Result<VerifyOutcome, CliError> {
    if h_max == 0 {
        return Err(CliError::Invalid("--h-max must be at least 1".into()));
    }
    let mut t = Tally::new();
    match suite {
        Suite::Gf => {
            if n_max > ORACLE_MAX_N || h_max > MAX_H {
                return Err(CliError::Invalid(format!("gf suite needs n_max <= {ORACLE_MAX_N}")));
            }
            let odd = HookCountTable::build(PartitionClass::OddParts, n_max);
            let distinct = HookCountTable::build(PartitionClass::DistinctParts, n_max);
            for h in 1..=h_max {
                let a = gf_a(h, n_max).map_err(invalid)?;
                let b = gf_b(h, n_max).map_err(invalid)?;
                let closed = gf_a_closed(h, n_max).map_err(invalid)?;
                for n in 0..=n_max {
                    let (ea, eb) = (odd.entry(h, n), distinct.entry(h, n));
                    t.check(a.coeff(n) == &ea.into(), || format!("a_{h}({n}): series {} vs oracle {ea}", a.coeff(n)));
                    t.check(b.coeff(n) == &eb.into(), || format!("b_{h}({n}): series {} vs oracle {eb}", b.coeff(n)));
                }
                t.check(closed == a, || format!("closed form of a_{h} differs from the m-sum form"));
            }
            for h in 1..=h_max.min(3) {
                let ok = rational_form_check(h, n_max).map_err(invalid)?;
                t.check(ok, || format!("displayed rational forms for h = {h} disagree"));
            }
        }
        Suite::Identities => {
            let r = identity_suite(n_max);
            t.check(r.is_ok(), || r.unwrap_err().to_string());
            let order = n_max.max(200);
            let r = check_euler_identity(order);
            t.check(r.is_ok(), || r.unwrap_err().to_string());
        }
        Suite::Constants => {
            for h in 1..=h_max {
                let (a, ai) = (alpha(h).map_err(invalid)?, alpha_via_integrals(h).map_err(invalid)?);
                t.check(a == ai, || format!("alpha_{h}: closed {a} vs integral {ai}"));
                let (b, bi) = (beta(h).map_err(invalid)?, beta_via_integrals(h).map_err(invalid)?);
                t.check(b == bi, || format!("beta_{h}: closed {b} vs integral {bi}"));
                let bl = beta_via_double_sums(h).map_err(invalid)?;
                t.check(b == bl, || format!("beta_{h}: closed {b} vs double sum {bl}"));
                t.check(b.is_rational() == (h % 2 == 0), || format!("beta_{h} = {b} has the wrong rationality"));
                let (s, c) = (alpha_tilde_sum(h), alpha_tilde(h));
                t.check(s == c, || format!("alpha~_{h}: double sum {s} vs harmonic {c}"));
            }
        }
        Suite::Balanced => {
            if n_max > ORACLE_MAX_N {
                return Err(CliError::Invalid(format!("balanced suite needs n_max <= {ORACLE_MAX_N}")));
            }
            for class in [
                PartitionClass::OddParts,
                PartitionClass::DistinctParts,
                PartitionClass::SelfConjugate,
                PartitionClass::DistinctOddParts,
            ] {
                for n in 0..=n_max {
                    let (lhs, rhs) = balanced_sides(class, n);
                    t.check(lhs == rhs, || format!("{} n = {n}: sum of counts {lhs} vs n * size {rhs}", class.tag()));
                }
            }
        }
        Suite::Andrews => {
            if n_max > DEFAULT_MAX_ORDER {
                return Err(CliError::Invalid(format!("andrews suite needs n_max <= {DEFAULT_MAX_ORDER}")));
            }
            let a = gf_a(1, n_max).map_err(invalid)?;
            let b = gf_b(1, n_max).map_err(invalid)?;
            for n in 0..=n_max {
                t.check(b.coeff(n) >= a.coeff(n), || format!("n = {n}: b_1 = {} < a_1 = {}", b.coeff(n), a.coeff(n)));
            }
        }
        Suite::Nekrasov => {
            if n_max > NEKRASOV_MAX_N {
                return Err(CliError::Invalid(format!("nekrasov suite needs n_max <= {NEKRASOV_MAX_N}")));
            }
            for z in [0, 1, 2, 4, 9] {
                t.check(nekrasov_okounkov_check(n_max, z), || format!("hook length formula fails for z = {z}"));
            }
        }
    }
    let mut text = String::new();
    for f in &t.failures {
        let _ = writeln!(text, "FAIL {f}");
    }
    let _ = writeln!(text, "{}: {} checks, {} failures", suite.tag(), t.checks, t.failures.len());
    Ok(VerifyOutcome {
        text,
        passed: t.failures.is_empty(),
    })
}

fn invalid(e: hook_census::Error) -> CliError {
    CliError::Invalid(e.to_string())
}

pub fn constants(h_max: usize, format: Format) -> Result<String, CliError> {
    if h_max == 0 {
        return Err(CliError::Invalid("--h-max must be at least 1".into()));
    }
    let records = (1..=h_max)
        .map(|h| {
            constants_record(h).map_err(|e| match e {
                hook_census::Error::Inconsistent(msg) => CliError::Integrity(msg),
                other => invalid(other),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&records).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::from("h,alpha,beta_r,beta_s,gamma\n");
            for r in &records {
                let gamma = match &r.gamma_exact {
                    Some(q) => format_rational(q),
                    None => r.gamma.to_decimal(GAMMA_DIGITS),
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.h,
                    format_rational(&r.alpha),
                    format_rational(&r.beta.r),
                    format_rational(&r.beta.s),
                    gamma
                );
            }
            out
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Report {
    /// Hook counts against their main term.
    Main,
    /// a_h(n) / b_h(n) against gamma_h.
    Ratio,
    /// Partition and part counts against their main terms.
    Counts,
}

pub fn asymptotics(
    h_list: &[usize],
    n_list: &[usize],
    class: PartitionClass,
    report: Report,
    format: Format,
) -> Result<String, CliError> {
    if h_list.contains(&0) {
        return Err(CliError::Invalid("h must be at least 1".into()));
    }
    let result = match report {
        Report::Main => asymptotics::convergence_report(h_list, n_list, class),
        Report::Ratio => asymptotics::hook_ratio_report(h_list, n_list),
        Report::Counts => asymptotics::class_count_report(n_list, class),
    }
    .map_err(invalid)?;
    Ok(match format {
        Format::Csv => result.to_csv(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&result).expect("serializable");
            s.push('\n');
            s
        }
    })
}

pub fn conjectures(m_max: usize, n_max: usize, gamma_h: usize) -> Result<String, CliError> {
    if n_max > ORACLE_MAX_N {
        return Err(CliError::Invalid(format!("conjecture scans are limited to n <= {ORACLE_MAX_N}")));
    }
    let scan = divisibility_scan(m_max, n_max).map_err(invalid)?;
    let n_list: Vec<usize> = (1..=n_max).collect();
    let evidence = gamma_star_evidence(gamma_h, &n_list).map_err(invalid)?;
    let mut s = serde_json::to_string_pretty(&[scan, evidence]).expect("serializable");
    s.push('\n');
    Ok(s)
}

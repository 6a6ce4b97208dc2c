//! Restricted partition classes and the brute-force hook oracle.
//!
//! Every statistic here is computed by walking Ferrers diagrams directly, so
//! the module doubles as the independent reference for the generating
//! functions in [`crate::qseries`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{self, FactorSign};

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: conjugate_parts(&self.parts),
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        conjugate_parts(&self.parts) == self.parts
    }

    /// Arm, leg, coarm and coleg of the cell in row `row`, column `col`
    /// (both 1-indexed).
    pub fn cell_stats(&self, row: usize, col: usize) -> Result<CellStats> {
        if row == 0 || row > self.parts.len() || col == 0 || col > self.parts[row - 1] {
            return Err(Error::CellOutsideDiagram { row, col });
        }
        let leg = self.parts[row..].iter().take_while(|&&p| p >= col).count();
        Ok(CellStats {
            arm: self.parts[row - 1] - col,
            leg,
            coarm: col - 1,
            coleg: row - 1,
        })
    }

    /// Hook lengths of all cells in row-major order. The result has
    /// exactly `size()` entries.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let conj = conjugate_parts(&self.parts);
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row_len) in self.parts.iter().enumerate() {
            for (j, &col_len) in conj.iter().enumerate().take(row_len) {
                hooks.push(row_len - j + col_len - i - 1);
            }
        }
        hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellStats {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

impl CellStats {
    pub fn hook(&self) -> usize {
        self.arm + self.leg + 1
    }
}

fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let mut conj = Vec::new();
    conjugate_into(parts, &mut conj);
    conj
}

fn conjugate_into(parts: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let width = parts.first().copied().unwrap_or(0);
    out.resize(width, 0);
    for &p in parts {
        for c in out.iter_mut().take(p) {
            *c += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionClass {
    Unrestricted,
    OddParts,
    DistinctParts,
    SelfConjugate,
    DistinctOddParts,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 5] = [
        PartitionClass::Unrestricted,
        PartitionClass::OddParts,
        PartitionClass::DistinctParts,
        PartitionClass::SelfConjugate,
        PartitionClass::DistinctOddParts,
    ];

    /// Short tag used on the command line and in serialized output.
    pub fn tag(self) -> &'static str {
        match self {
            PartitionClass::Unrestricted => "all",
            PartitionClass::OddParts => "odd",
            PartitionClass::DistinctParts => "distinct",
            PartitionClass::SelfConjugate => "self-conjugate",
            PartitionClass::DistinctOddParts => "distinct-odd",
        }
    }

    pub fn contains(self, lambda: &Partition) -> bool {
        let parts = lambda.parts();
        let odd = parts.iter().all(|p| p % 2 == 1);
        let distinct = parts.windows(2).all(|w| w[0] > w[1]);
        match self {
            PartitionClass::Unrestricted => true,
            PartitionClass::OddParts => odd,
            PartitionClass::DistinctParts => distinct,
            PartitionClass::SelfConjugate => lambda.is_self_conjugate(),
            PartitionClass::DistinctOddParts => odd && distinct,
        }
    }

    fn rule(self) -> PartRule {
        match self {
            PartitionClass::Unrestricted | PartitionClass::SelfConjugate => PartRule {
                odd_only: false,
                distinct: false,
            },
            PartitionClass::OddParts => PartRule {
                odd_only: true,
                distinct: false,
            },
            PartitionClass::DistinctParts => PartRule {
                odd_only: false,
                distinct: true,
            },
            PartitionClass::DistinctOddParts => PartRule {
                odd_only: true,
                distinct: true,
            },
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PartitionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" | "unrestricted" => Ok(PartitionClass::Unrestricted),
            "odd" => Ok(PartitionClass::OddParts),
            "distinct" => Ok(PartitionClass::DistinctParts),
            "self-conjugate" | "sc" => Ok(PartitionClass::SelfConjugate),
            "distinct-odd" | "do" => Ok(PartitionClass::DistinctOddParts),
            other => Err(Error::InvalidParameter(format!("unknown partition class `{other}`"))),
        }
    }
}

/// Constraints on the parts themselves; self-conjugacy is a filter on top.
#[derive(Debug, Clone, Copy)]
struct PartRule {
    odd_only: bool,
    distinct: bool,
}

impl PartRule {
    fn allowed(self, p: usize) -> bool {
        p >= 1 && (!self.odd_only || p % 2 == 1)
    }

    fn largest_at_most(self, bound: usize) -> Option<usize> {
        let c = if self.odd_only && bound % 2 == 0 {
            bound.checked_sub(1)?
        } else {
            bound
        };
        (c >= 1).then_some(c)
    }

    /// Upper bound for the part that follows `p`.
    fn cap_after(self, p: usize) -> usize {
        if self.distinct {
            p - 1
        } else {
            p
        }
    }

    /// Necessary condition for `rem` to be a sum of allowed parts `<= bound`.
    fn may_fill(self, rem: usize, bound: usize) -> bool {
        if rem == 0 {
            return true;
        }
        let Some(b) = self.largest_at_most(bound) else {
            return false;
        };
        if !self.distinct {
            return true;
        }
        let max_sum = if self.odd_only {
            let t = b.div_ceil(2);
            t * t
        } else {
            b * (b + 1) / 2
        };
        rem <= max_sum
    }
}

/// Streaming enumeration of a partition class in decreasing lexicographic
/// order. Only the current partition is held in memory.
pub struct Partitions {
    rule: PartRule,
    self_conjugate: bool,
    parts: Vec<usize>,
    remaining: usize,
    locked: usize,
    started: bool,
    done: bool,
    conj: Vec<usize>,
}

impl Partitions {
    fn new(class: PartitionClass, n: usize, largest: Option<usize>) -> Self {
        let rule = class.rule();
        let mut it = Partitions {
            rule,
            self_conjugate: class == PartitionClass::SelfConjugate,
            parts: Vec::new(),
            remaining: n,
            locked: 0,
            started: false,
            done: false,
            conj: Vec::new(),
        };
        if let Some(top) = largest {
            if top == 0 || top > n || !rule.allowed(top) || !rule.may_fill(n - top, rule.cap_after(top)) {
                it.done = true;
            } else {
                it.parts.push(top);
                it.remaining = n - top;
                it.locked = 1;
            }
        }
        it
    }

    /// Greedy completion of the current prefix with the largest admissible
    /// parts. Returns false on a dead end.
    fn fill(&mut self) -> bool {
        while self.remaining > 0 {
            let cap = match self.parts.last() {
                Some(&p) => self.rule.cap_after(p),
                None => self.remaining,
            };
            let mut cand = self.rule.largest_at_most(cap.min(self.remaining));
            while let Some(c) = cand {
                if self.rule.may_fill(self.remaining - c, self.rule.cap_after(c)) {
                    break;
                }
                cand = self.rule.largest_at_most(c - 1);
            }
            match cand {
                Some(c) => {
                    self.parts.push(c);
                    self.remaining -= c;
                }
                None => return false,
            }
        }
        true
    }

    /// Depth-first step to the next complete partition.
    fn backtrack(&mut self) -> bool {
        loop {
            if self.parts.len() <= self.locked {
                return false;
            }
            let p = self.parts.pop().expect("nonempty");
            self.remaining += p;
            let mut cand = self.rule.largest_at_most(p - 1);
            while let Some(c) = cand {
                if c <= self.remaining && self.rule.may_fill(self.remaining - c, self.rule.cap_after(c)) {
                    break;
                }
                cand = self.rule.largest_at_most(c - 1);
            }
            if let Some(c) = cand {
                self.parts.push(c);
                self.remaining -= c;
                if self.fill() {
                    return true;
                }
            }
        }
    }

    fn step(&mut self) -> bool {
        if self.done {
            return false;
        }
        let ok = if self.started {
            self.backtrack()
        } else {
            self.started = true;
            self.fill() || self.backtrack()
        };
        if !ok {
            self.done = true;
        }
        ok
    }

    /// Advances to the next member and returns its parts without cloning.
    pub fn advance(&mut self) -> Option<&[usize]> {
        loop {
            if !self.step() {
                return None;
            }
            if !self.self_conjugate {
                break;
            }
            conjugate_into(&self.parts, &mut self.conj);
            if self.conj == self.parts {
                break;
            }
        }
        Some(&self.parts)
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance().map(|p| Partition { parts: p.to_vec() })
    }
}

/// All members of `class` of size `n`, in decreasing lexicographic order.
pub fn enumerate(class: PartitionClass, n: usize) -> Partitions {
    Partitions::new(class, n, None)
}

/// Members of `class` of size `n` whose largest part is exactly `largest`.
pub fn enumerate_with_largest(class: PartitionClass, n: usize, largest: usize) -> Partitions {
    Partitions::new(class, n, Some(largest))
}

/// Aggregate statistics of one class at one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    /// Number of class members of size `n`.
    pub members: u64,
    /// Total number of parts over all members.
    pub parts: u64,
    /// `hooks[h]` is the number of cells with hook length `h`; index 0 is
    /// unused. Hook lengths strictly decrease along a row, so this is also
    /// the number of rows containing an `h`-hook.
    pub hooks: Vec<u64>,
}

impl Census {
    fn empty(n: usize) -> Self {
        Census {
            n,
            members: 0,
            parts: 0,
            hooks: vec![0; n + 1],
        }
    }

    fn absorb(&mut self, parts: &[usize], conj: &mut Vec<usize>) {
        self.members += 1;
        self.parts += parts.len() as u64;
        conjugate_into(parts, conj);
        for (i, &row_len) in parts.iter().enumerate() {
            for (j, &col_len) in conj.iter().enumerate().take(row_len) {
                self.hooks[row_len - j + col_len - i - 1] += 1;
            }
        }
    }

    fn merge(mut self, other: Census) -> Census {
        self.members += other.members;
        self.parts += other.parts;
        for (a, b) in self.hooks.iter_mut().zip(other.hooks) {
            *a += b;
        }
        self
    }
}

fn census_chunk(class: PartitionClass, n: usize, largest: Option<usize>) -> Census {
    let mut census = Census::empty(n);
    let mut conj = Vec::new();
    let mut it = Partitions::new(class, n, largest);
    while let Some(parts) = it.advance() {
        census.absorb(parts, &mut conj);
    }
    census
}

/// Brute-force census of `class` at size `n`. Work is split by largest
/// part; each chunk tallies privately and the results are summed.
pub fn census(class: PartitionClass, n: usize) -> Census {
    if n == 0 {
        return census_chunk(class, 0, None);
    }
    (1..=n)
        .into_par_iter()
        .map(|top| census_chunk(class, n, Some(top)))
        .reduce(|| Census::empty(n), Census::merge)
}

/// Number of cells of hook length `h` over the members of `class` of size `n`.
pub fn count_hooks(class: PartitionClass, h: usize, n: usize) -> u64 {
    if h == 0 || h > n {
        return 0;
    }
    census(class, n).hooks[h]
}

/// Checks that the hook counts at size `n` sum to `n` times the class size.
pub fn balanced_identity_check(class: PartitionClass, n: usize) -> bool {
    let (lhs, rhs) = balanced_sides(class, n);
    lhs == rhs
}

/// Both sides of the balanced identity: (sum over h of the hook counts,
/// n times the number of members).
pub fn balanced_sides(class: PartitionClass, n: usize) -> (u64, u64) {
    let c = census(class, n);
    (c.hooks.iter().sum(), n as u64 * c.members)
}

/// Exact hook counts of one class for sizes `0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookCountTable {
    class: PartitionClass,
    rows: Vec<Census>,
}

impl HookCountTable {
    pub fn build(class: PartitionClass, n_max: usize) -> Self {
        let rows = (0..=n_max).map(|n| census(class, n)).collect();
        HookCountTable { class, rows }
    }

    pub fn class(&self) -> PartitionClass {
        self.class
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Hook count of `h` at size `n`; zero whenever `h > n`.
    pub fn entry(&self, h: usize, n: usize) -> u64 {
        self.rows
            .get(n)
            .and_then(|c| c.hooks.get(h))
            .copied()
            .filter(|_| h >= 1)
            .unwrap_or(0)
    }

    pub fn class_size(&self, n: usize) -> u64 {
        self.rows.get(n).map_or(0, |c| c.members)
    }

    pub fn census(&self, n: usize) -> Option<&Census> {
        self.rows.get(n)
    }
}

/// Exact check of the Nekrasov–Okounkov hook length formula for integer `z`:
/// for every `n <= n_max`, the sum over partitions of `n` of
/// `prod (1 - z/h^2)` equals the coefficient of `x^n` in
/// `prod_k (1 - x^k)^(z - 1)`.
///
/// With `f = n! / prod h` (the number of standard tableaux) each summand is
/// `prod (h^2 - z) f^2 / (n!)^2`, so the comparison runs over integers.
pub fn nekrasov_okounkov_check(n_max: usize, z: i64) -> bool {
    let rhs = qseries::pochhammer_infinite(FactorSign::Minus, n_max)
        .pow(z - 1)
        .expect("(q;q)_inf has unit constant term");
    let mut factorial = BigInt::one();
    (0..=n_max).all(|n| {
        if n > 0 {
            factorial *= n;
        }
        let term = |lambda: &Partition| {
            let hooks = lambda.hook_multiset();
            let product: BigInt = hooks.iter().map(|&h| BigInt::from(h)).product();
            let shifted: BigInt = hooks.iter().map(|&h| BigInt::from(h * h) - z).product();
            let f = &factorial / product;
            shifted * &f * &f
        };
        let lhs: BigInt = if n == 0 {
            BigInt::one()
        } else {
            (1..=n)
                .into_par_iter()
                .map(|largest| {
                    enumerate_with_largest(PartitionClass::Unrestricted, n, largest)
                        .map(|l| term(&l))
                        .sum::<BigInt>()
                })
                .sum()
        };
        lhs == rhs.coeff(n) * &factorial * &factorial
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn all_of(class: PartitionClass, n: usize) -> Vec<Vec<usize>> {
        enumerate(class, n).map(|l| l.parts().to_vec()).collect()
    }

    #[test]
    fn rejects_malformed_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(all_of(PartitionClass::OddParts, 4), vec![vec![3, 1], vec![1, 1, 1, 1]]);
        assert_eq!(all_of(PartitionClass::DistinctParts, 4), vec![vec![4], vec![3, 1]]);
        assert_eq!(all_of(PartitionClass::OddParts, 0), vec![Vec::<usize>::new()]);
        assert_eq!(all_of(PartitionClass::SelfConjugate, 4), vec![vec![2, 2]]);
        assert!(all_of(PartitionClass::DistinctOddParts, 2).is_empty());
        assert_eq!(all_of(PartitionClass::DistinctOddParts, 8), vec![vec![7, 1], vec![5, 3]]);
    }

    #[test]
    fn enumeration_matches_filtered_unrestricted() {
        for n in 0..=16 {
            let everything = all_of(PartitionClass::Unrestricted, n);
            // decreasing lexicographic, no repeats
            assert!(everything.windows(2).all(|w| w[0] > w[1]));
            for class in PartitionClass::ALL {
                let filtered: Vec<_> = everything
                    .iter()
                    .filter(|parts| class.contains(&p(parts)))
                    .cloned()
                    .collect();
                assert_eq!(all_of(class, n), filtered, "{class} n={n}");
            }
        }
    }

    #[test]
    fn partition_numbers() {
        let counts: Vec<usize> = (0..=10).map(|n| enumerate(PartitionClass::Unrestricted, n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn figure_hooks() {
        let lambda = p(&[4, 3, 2]);
        assert_eq!(lambda.hook_multiset(), vec![6, 5, 3, 1, 4, 3, 1, 2, 1]);
        let top = lambda.cell_stats(1, 1).unwrap();
        assert_eq!((top.arm, top.leg, top.hook()), (3, 2, 6));
        let bottom = lambda.cell_stats(3, 2).unwrap();
        assert_eq!((bottom.arm, bottom.leg, bottom.hook()), (0, 0, 1));
        assert_eq!(
            p(&[1]).cell_stats(1, 1).unwrap(),
            CellStats { arm: 0, leg: 0, coarm: 0, coleg: 0 }
        );
    }

    #[test]
    fn cell_outside_diagram() {
        let lambda = p(&[4, 3, 2]);
        assert_eq!(lambda.cell_stats(3, 3), Err(Error::CellOutsideDiagram { row: 3, col: 3 }));
        assert!(lambda.cell_stats(0, 1).is_err());
        assert!(lambda.cell_stats(4, 1).is_err());
        assert!(Partition::empty().cell_stats(1, 1).is_err());
    }

    #[test]
    fn single_row_hooks() {
        assert_eq!(p(&[5]).hook_multiset(), vec![5, 4, 3, 2, 1]);
        assert!(Partition::empty().hook_multiset().is_empty());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 3, 2]).conjugate(), p(&[3, 3, 2, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn hook_counts_small() {
        assert_eq!(count_hooks(PartitionClass::OddParts, 1, 4), 3);
        assert_eq!(count_hooks(PartitionClass::DistinctParts, 1, 4), 3);
        assert_eq!(count_hooks(PartitionClass::OddParts, 7, 4), 0);
        assert_eq!(count_hooks(PartitionClass::SelfConjugate, 2, 4), 2);
    }

    #[test]
    fn balanced_identity_small() {
        assert_eq!(balanced_sides(PartitionClass::OddParts, 6), (24, 24));
        assert_eq!(balanced_sides(PartitionClass::DistinctParts, 6), (24, 24));
        for class in PartitionClass::ALL {
            assert_eq!(balanced_sides(class, 0), (0, 0));
        }
    }

    #[test]
    fn census_rows_and_parts() {
        // distinct partitions of 6: (6), (5,1), (4,2), (3,2,1)
        let c = census(PartitionClass::DistinctParts, 6);
        assert_eq!(c.members, 4);
        assert_eq!(c.parts, 1 + 2 + 2 + 3);
    }

    #[test]
    fn table_entries() {
        let t = HookCountTable::build(PartitionClass::OddParts, 8);
        assert_eq!(t.entry(1, 4), 3);
        assert_eq!(t.entry(9, 4), 0);
        assert_eq!(t.entry(0, 4), 0);
        assert_eq!(t.class_size(6), 4);
        assert_eq!(t.n_max(), 8);
    }

    #[test]
    fn nekrasov_okounkov_trivial_cases() {
        assert!(nekrasov_okounkov_check(12, 1));
        assert!(nekrasov_okounkov_check(12, 0));
    }
}

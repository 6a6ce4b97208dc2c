//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N PASS|FAIL: ...` line before asserting.

use std::cmp::Ordering;
use std::time::Instant;

use hook_census::asymptotics::{em_leading_check, eta_product_check, hook_counts, ln_bigint, ln_main_term, EmSum};
use hook_census::conjectures::divisibility_scan;
use hook_census::exactconst::{
    alpha, alpha_via_integrals, alphas, beta, beta_via_integrals, betas, gamma, limits, Fixed, Log2Number,
    Rational,
};
use hook_census::partitions::{
    balanced_identity_check, census, nekrasov_okounkov_check, HookCountTable, PartitionClass,
};
use hook_census::qseries::{
    check_eq1, check_eq2, check_eq3, check_euler_identity, gf_a, gf_a_closed, gf_b, rational_form_check,
};
use num_bigint::BigInt;

fn report(criterion: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {criterion} {verdict}: {detail}");
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn criterion_01_generating_functions_match_enumeration() {
    let start = Instant::now();
    let odd = HookCountTable::build(PartitionClass::OddParts, 40);
    let distinct = HookCountTable::build(PartitionClass::DistinctParts, 40);
    let mut mismatches = Vec::new();
    for h in 1..=8 {
        let a = gf_a(h, 40).unwrap();
        let b = gf_b(h, 40).unwrap();
        for n in 0..=40 {
            if a.coeff(n) != &BigInt::from(odd.entry(h, n)) {
                mismatches.push(format!("a_{h}({n})"));
            }
            if b.coeff(n) != &BigInt::from(distinct.entry(h, n)) {
                mismatches.push(format!("b_{h}({n})"));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    report(
        1,
        mismatches.is_empty() && secs < 60.0,
        &format!("h 1..=8, n 0..=40, mismatches {:?}, {secs:.2}s", mismatches),
    );
}

#[test]
fn criterion_02_closed_forms() {
    let mut problems = Vec::new();
    for h in 1..=8 {
        if let Some((e, l, r)) = gf_a_closed(h, 40).unwrap().first_difference(&gf_a(h, 40).unwrap()) {
            problems.push(format!("closed a_{h} differs at q^{e}: {l} vs {r}"));
        }
    }
    for h in 1..=3 {
        if !rational_form_check(h, 60).unwrap() {
            problems.push(format!("displayed rational forms for h = {h} disagree"));
        }
    }
    report(2, problems.is_empty(), &format!("closed forms h <= 8 to order 40, displayed forms h <= 3 to order 60 {problems:?}"));
}

#[test]
fn criterion_03_identities() {
    let mut problems = Vec::new();
    for n in 0..=6 {
        for m in 0..=6 {
            if let Err(e) = check_eq1(n, m, 40) {
                problems.push(e.to_string());
            }
            if n >= 1 {
                if let Err(e) = check_eq2(n, m, 40) {
                    problems.push(e.to_string());
                }
            }
        }
    }
    if let Err(e) = check_eq3(40) {
        problems.push(e.to_string());
    }
    if let Err(e) = check_euler_identity(200) {
        problems.push(e.to_string());
    }
    for z in [0, 1, 4, 9, 2] {
        if !nekrasov_okounkov_check(20, z) {
            problems.push(format!("Nekrasov-Okounkov fails at z = {z}"));
        }
    }
    report(3, problems.is_empty(), &format!("eq1/eq2/eq3 to order 40, Euler to 200, NO for n <= 20 {problems:?}"));
}

#[test]
fn criterion_04_balanced_identity() {
    let bad: Vec<String> = [PartitionClass::OddParts, PartitionClass::DistinctParts]
        .iter()
        .flat_map(|&class| {
            (0..=40)
                .filter(move |&n| !balanced_identity_check(class, n))
                .map(move |n| format!("{}:{n}", class.tag()))
        })
        .collect();
    report(4, bad.is_empty(), &format!("sum_h count = n * |class(n)| for n <= 40, failures {bad:?}"));
}

#[test]
fn criterion_05_constants_dual_formulas() {
    let mut problems = Vec::new();
    for h in 1..=40 {
        if alpha(h).unwrap() != alpha_via_integrals(h).unwrap() {
            problems.push(format!("alpha_{h}"));
        }
        if beta(h).unwrap() != beta_via_integrals(h).unwrap() {
            problems.push(format!("beta_{h}"));
        }
    }
    let pins = [
        alpha(2).unwrap() == rat(3, 4),
        alpha(3).unwrap() == rat(2, 3),
        beta(2).unwrap() == Log2Number::rational(rat(1, 2)),
        beta(3).unwrap() == Log2Number::new(rat(-1, 8), rat(1, 1)),
    ];
    if pins.contains(&false) {
        problems.push(format!("pinned values {pins:?}"));
    }
    let ln2 = std::f64::consts::LN_2;
    let expected = [1.0 / (2.0 * ln2), 1.5, 2.0 / (3.0 * (ln2 - 0.125))];
    for (h, want) in (1..=3).zip(expected) {
        let got = gamma(h).unwrap().approx.to_f64();
        if (got - want).abs() >= 1e-12 {
            problems.push(format!("gamma_{h} = {got} vs {want}"));
        }
    }
    report(5, problems.is_empty(), &format!("h <= 40 exact agreement, pins, gamma_1..3 to 1e-12 {problems:?}"));
}

#[test]
fn criterion_06_inequality_and_structure() {
    let alphas = alphas(1000);
    let betas = betas(1000);
    let mut problems = Vec::new();

    let not_above: Vec<usize> = (2..=1000)
        .filter(|&h| Fixed::from_rational(&alphas[h - 1]).cmp_with_slack(&betas[h - 1].value()) != Some(Ordering::Greater))
        .collect();
    if !not_above.is_empty() {
        problems.push(format!("alpha_h <= beta_h at {not_above:?}"));
    }

    let wrong_parity: Vec<usize> = (1..=40).filter(|&h| betas[h - 1].is_rational() != (h % 2 == 0)).collect();
    if !wrong_parity.is_empty() {
        problems.push(format!("rationality of beta_h wrong at {wrong_parity:?}"));
    }

    let descents: Vec<usize> = (1..1000).filter(|&h| alphas[h] <= alphas[h - 1]).collect();
    if !descents.is_empty() {
        problems.push(format!(
            "alpha_(h+1) <= alpha_h at {} values of h, first {:?}",
            descents.len(),
            &descents[..descents.len().min(5)]
        ));
    }

    let recurrence_bad: Vec<usize> = (1..=100)
        .filter(|&n| {
            let diff = &betas[2 * n] - &betas[2 * n - 2];
            let want = -(Rational::from_integer(BigInt::from(n as u64) << (2 * n + 1))).recip();
            diff != Log2Number::rational(want)
        })
        .collect();
    if !recurrence_bad.is_empty() {
        problems.push(format!("beta recurrence fails at {recurrence_bad:?}"));
    }

    report(6, problems.is_empty(), &format!("alpha > beta, rationality, monotone alpha, beta recurrence {problems:?}"));
}

#[test]
fn criterion_07_limits() {
    let (lim_a, lim_b, lim_g) = limits();
    let a = Fixed::from_rational(&alpha(400).unwrap());
    let b = beta(400).unwrap().value();
    let g = gamma(400).unwrap().approx;
    let gaps = [(&a - &lim_a).abs().to_f64(), (&b - &lim_b).abs().to_f64(), (&g - &lim_g).abs().to_f64()];
    let ok = gaps[0] < 2e-3 && gaps[1] < 1e-6 && gaps[2] < 5e-3;
    report(7, ok, &format!("gaps at h = 400: alpha {:.3e}, beta {:.3e}, gamma {:.3e}", gaps[0], gaps[1], gaps[2]));
}

#[test]
fn criterion_08_main_term_convergence() {
    let n = 3000;
    let start = Instant::now();
    let mut ratios = Vec::new();
    let mut ok = true;
    let mut counts = Vec::new();
    for class in [PartitionClass::OddParts, PartitionClass::DistinctParts] {
        for h in 1..=3 {
            let series = hook_counts(h, class, n).unwrap();
            let observed = series.coeff(n).clone();
            let ratio = (ln_bigint(&observed) - ln_main_term(h, n, class).unwrap()).exp();
            ok &= (0.85..=1.15).contains(&ratio);
            ratios.push(format!("{}:{h}={ratio:.4}", class.tag()));
            counts.push(observed);
        }
    }
    // counts[1] = a_2(3000), counts[4] = b_2(3000)
    let a_over_b = (ln_bigint(&counts[1]) - ln_bigint(&counts[4])).exp();
    ok &= (a_over_b - 1.5).abs() < 0.1;
    let secs = start.elapsed().as_secs_f64();
    ok &= secs < 600.0;
    report(8, ok, &format!("n = {n}, ratios {ratios:?}, a_2/b_2 = {a_over_b:.4}, {secs:.1}s"));
}

#[test]
fn criterion_09_euler_maclaurin_leading_order() {
    let zs = [0.1, 0.05, 0.025, 0.0125];
    let mut cases: Vec<(String, EmSum)> = Vec::new();
    for (j, l) in [(0, 2), (1, 2), (1, 4), (2, 4)] {
        cases.push((format!("F(j={j},l={l})"), EmSum::F { j, k: 1, l }));
    }
    for (j, k) in [(1, 1), (1, 2), (2, 2)] {
        cases.push((format!("G(j={j},k={k})"), EmSum::G { j, k }));
    }
    let mut failures = Vec::new();
    for (name, sum) in &cases {
        let gaps: Vec<f64> = zs.iter().map(|&z| em_leading_check(*sum, z).unwrap().gap).collect();
        let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
        let bounded: Vec<bool> = gaps.iter().zip(zs).map(|(g, z)| *g < 0.5 * z).collect();
        let gap_over_z: Vec<String> = gaps.iter().zip(zs).map(|(g, z)| format!("{:.4}", g / z)).collect();
        println!("  {name}: gap/z {gap_over_z:?}, decreasing {decreasing}");
        if !decreasing || bounded.contains(&false) {
            failures.push(name.clone());
        }
    }
    let eta = eta_product_check(0.05).unwrap();
    println!(
        "  eta at z = 0.05: log-space relative gap {:.3e}, linear relative gap {:.3e}",
        eta.relative_gap, eta.linear_relative_gap
    );
    if eta.relative_gap >= 1e-3 {
        failures.push("eta".into());
    }
    report(9, failures.is_empty(), &format!("gap < 0.5 z and decreasing; failing cases {failures:?}"));
}

#[test]
fn criterion_10_conjecture_pins() {
    let mut problems = Vec::new();
    for n in 0..=40 {
        let sc = census(PartitionClass::SelfConjugate, n);
        let dop = census(PartitionClass::DistinctOddParts, n);
        if sc.members != dop.members {
            problems.push(format!("class sizes differ at n = {n}"));
        }
        let sc_total: u64 = sc.hooks.iter().sum();
        let dop_total: u64 = dop.hooks.iter().sum();
        if sc_total != n as u64 * sc.members || dop_total != n as u64 * dop.members {
            problems.push(format!("starred balanced identity fails at n = {n}"));
        }
    }
    let scan = divisibility_scan(5, 40).unwrap();
    if !scan.holds() {
        problems.push(format!("divisibility counterexamples {:?}", scan.counterexamples));
    }
    report(10, problems.is_empty(), &format!("n <= 40, m <= 5 {problems:?}"));
}

#[test]
fn criterion_11_andrews_inequality() {
    let a = gf_a(1, 60).unwrap();
    let b = gf_b(1, 60).unwrap();
    let bad: Vec<usize> = (0..=60).filter(|&n| b.coeff(n) < a.coeff(n)).collect();
    report(11, bad.is_empty(), &format!("b_1(n) >= a_1(n) for n <= 60, failures {bad:?}"));
}

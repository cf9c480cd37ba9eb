//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs as `cargo test -p divcert-cli --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use divcert_core::arith::{
    binom_valuation, carries_in_base, lucas_binom_mod_p, primes_up_to,
};
use divcert_core::divisibility::{
    conj2_witness, f_ab, fab_divides_at, lemma_p2_verify, revalidate_conj2, theorem2_bound,
    verify_decomposition, verify_thm0, verify_thm3, FabVerdict,
};
use divcert_core::qdivisibility::{
    conj_330n88n_check, lemma_andrews_check, verify_thm4, verify_thm_anbn, verify_thm_kn,
    FamilyId, QFamilyVerdict,
};
use divcert_core::qpoly::{
    expand, expr_factorization, is_polynomial, qbinom_factorization, qbinom_poly, IntPoly,
    QuotientExpr,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    check(t <= limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

const F_VALUES: [(u64, u64, u64); 4] = [(7, 36, 279), (10, 192, 362), (11, 100, 1187), (22, 200, 6462)];

fn f_value_regression() -> Outcome {
    let start = Instant::now();
    for (a, b, expected) in F_VALUES {
        let r = f_ab(a, b, None).map_err(err)?;
        check(r.verdict == FabVerdict::Found { n: expected }, || format!("f({a},{b}) = {:?}", r.verdict))?;
        // failure at n, divisibility everywhere below it
        check(!fab_divides_at(a, b, expected).map_err(err)?.divides, || format!("({a},{b}) n={expected}"))?;
        for n in 1..expected {
            check(fab_divides_at(a, b, n).map_err(err)?.divides, || format!("f({a},{b}) fails early at {n}"))?;
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_divcert"))
        .args(["fab", "7", "36"])
        .output()
        .map_err(err)?;
    let text = String::from_utf8_lossy(&out.stdout);
    check(out.status.code() == Some(0) && text.contains(r#""kind":"found","n":279"#), || {
        format!("`divcert fab 7 36` printed {text}")
    })?;
    within(Duration::from_secs(300), start, "f values")?;
    Ok(format!("279, 362, 1187, 6462 with minimality re-checked ({:.2?})", start.elapsed()))
}

fn bound_regression() -> Outcome {
    let expected = [(7, "2736"), (5, "1475362494440362"), (11, "15960"), (11, "7980")];
    let mut shown = Vec::new();
    for ((a, b, f), (p, bound)) in F_VALUES.into_iter().zip(expected) {
        let t = theorem2_bound(a, b).map_err(err)?.ok_or(format!("no bound for ({a},{b})"))?;
        check(t.p == p && t.bound.to_string() == bound, || {
            format!("({a},{b}) gave ({}, {})", t.p, t.bound)
        })?;
        let pow = BigUint::from(t.p).pow(t.s as u32);
        check(&t.bound * BigUint::from(a + b) + BigUint::one() == pow, || format!("({a},{b}) inexact"))?;
        check(BigUint::from(f) <= t.bound, || format!("f({a},{b}) = {f} above bound"))?;
        shown.push(format!("({p}, {bound})"));
    }
    Ok(shown.join(", "))
}

fn thm0_grid() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for a in 1..=20 {
        for b in 1..=20 {
            for n in 1..=50 {
                check(verify_thm0(a, b, n).map_err(err)?, || format!("({a},{b},{n})"))?;
                checks += 1;
            }
        }
    }
    within(Duration::from_secs(60), start, "grid")?;
    Ok(format!("{checks} points ({:.2?})", start.elapsed()))
}

fn thm3_grid() -> Outcome {
    let start = Instant::now();
    let mut composite = 0;
    for n in 1..=200 {
        let v = verify_thm3(n).map_err(err)?;
        check(v.all_hold, || format!("n={n}: {:?}", v.checks.iter().find(|c| !c.divides)))?;
        composite += v.checks.iter().filter(|c| c.modulus == (10 * n - 1) * (15 * n - 1)).count();
    }
    check(composite == 200, || format!("composite modulus checked {composite} times"))?;
    within(Duration::from_secs(120), start, "grid")?;
    Ok(format!("n = 1..200, composite modulus included ({:.2?})", start.elapsed()))
}

fn conj2_desk() -> Outcome {
    let mut max_p = 0;
    for a in 1..=30 {
        for b in 1..=30 {
            let w = conj2_witness(a, b, 100_000).map_err(err)?;
            revalidate_conj2(&w).map_err(err)?;
            max_p = max_p.max(w.p);
        }
    }
    Ok(format!("900 witnesses re-validated, largest p = {max_p}"))
}

fn prime_windows() -> Outcome {
    let start = Instant::now();
    let r = lemma_p2_verify(530, 3761).map_err(err)?;
    check(r.failures.is_empty(), || format!("failures {:?}", r.failures))?;
    check(r.entries.iter().all(|&(x, p)| x < p && 19 * p < 20 * x && p % 3 == 2), || "bad entry".into())?;
    within(Duration::from_secs(1), start, "window scan")?;
    Ok(format!("{} windows, zero failures ({:.2?})", r.entries.len(), start.elapsed()))
}

fn q_side(expanded: &mut Vec<QFamilyVerdict>) -> Outcome {
    let start = Instant::now();
    for n in 1..=4 {
        let vs = verify_thm4(n, true, 1_000_000).map_err(err)?;
        for v in &vs[..6] {
            check(v.polynomial && v.nonneg == Some(true), || format!("n={n} {:?}", v.family))?;
            if n == 1 && v.family == FamilyId::Binom330n88n {
                check(v.degree == 21232, || format!("330n degree {}", v.degree))?;
            }
        }
        check(vs[6].polynomial, || format!("n={n} seventh family not polynomial"))?;
        expanded.extend(vs);
    }
    let thm4_time = start.elapsed();
    within(Duration::from_secs(600), start, "six families")?;
    for n in 1..=40 {
        for k in 0..=n {
            let v = verify_thm_kn(n, k, 1_000_000).map_err(err)?;
            check(v.holds() && v.nonneg == Some(true), || format!("kn ({n},{k})"))?;
            expanded.push(v);
        }
    }
    for a in 1..=60 {
        for b in 1..=60 {
            let v = lemma_andrews_check(a, b, 1_000_000).map_err(err)?;
            check(v.holds() && v.nonneg == Some(true), || format!("andrews ({a},{b})"))?;
            expanded.push(v);
        }
    }
    for a in 1..=8 {
        for b in 1..=8 {
            for n in 1..=8 {
                let v = verify_thm_anbn(a, b, n, 1_000_000).map_err(err)?;
                check(v.forms_agree == Some(true) && v.holds() && v.nonneg == Some(true), || {
                    format!("anbn ({a},{b},{n})")
                })?;
                expanded.push(v);
            }
        }
    }
    Ok(format!(
        "six families n <= 4 ({thm4_time:.2?}), 860 kn, 3600 andrews, 512 anbn ({:.2?})",
        start.elapsed()
    ))
}

fn conj74() -> Outcome {
    for (n, last) in [(1, 103), (2, 453)] {
        let r = conj_330n88n_check(n, 1_000_000).map_err(err)?;
        let minus = BigInt::from(-1);
        check(r.negative_positions == vec![(1, minus.clone()), (last, minus)], || {
            format!("n={n}: {:?}", r.negative_positions)
        })?;
        check(r.degree == 125 * n * n - 25 * n + 4, || format!("degree {}", r.degree))?;
    }
    Ok("[(1,-1),(103,-1)] and [(1,-1),(453,-1)]".into())
}

/// Row `m` of exact binomials.
fn pascal_row(m: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut c = BigUint::one();
    for k in 0..=m {
        row.push(c.clone());
        c = c * (m - k) / (k + 1);
    }
    row
}

fn long_division(nums: &[u64], dens: &[u64], m: u64, k: u64) -> Option<IntPoly> {
    let mut top = qbinom_poly(m, k).ok()?;
    for &x in nums {
        top = &top * &IntPoly::one_minus_q_pow(x as usize);
    }
    let bottom = dens
        .iter()
        .fold(IntPoly::one(), |acc, &x| &acc * &IntPoly::one_minus_q_pow(x as usize));
    top.div_exact(&bottom)
}

fn oracle_suites() -> Outcome {
    let start = Instant::now();
    let lucas_primes = [2u64, 3, 5, 7, 11, 13];
    let mut lucas = 0u64;
    for m in 0..=2000u64 {
        let big_m = BigUint::from(m);
        for (k, c) in pascal_row(m).into_iter().enumerate() {
            let big_k = BigUint::from(k);
            for &p in &lucas_primes {
                let direct = (&c % p).try_into().unwrap_or(u64::MAX);
                let via = lucas_binom_mod_p(&big_m, &big_k, p).map_err(err)?;
                check(direct == via, || format!("Lucas ({m},{k}) mod {p}: {via} vs {direct}"))?;
                lucas += 1;
            }
        }
    }
    let lucas_time = start.elapsed();

    let primes = primes_up_to(500).map_err(err)?;
    let mut valuations = 0u64;
    for m in 0..=500u64 {
        for (k, c) in pascal_row(m).into_iter().enumerate() {
            let k = k as u64;
            let mut rebuilt = BigUint::one();
            for &p in primes.iter().take_while(|&&p| p <= m) {
                let cert = binom_valuation(m, k, p).map_err(err)?;
                check(cert.valuation == carries_in_base(k, m - k, p) as i64, || {
                    format!("Kummer ({m},{k}) p={p}")
                })?;
                if p <= 50 {
                    let mut x = c.clone();
                    let mut by_division = 0i64;
                    while (&x % p).is_zero() {
                        x /= p;
                        by_division += 1;
                    }
                    check(by_division == cert.valuation, || format!("v_{p} binom({m},{k})"))?;
                    valuations += 1;
                }
                rebuilt *= BigUint::from(p).pow(cert.valuation as u32);
            }
            check(rebuilt == c, || format!("binom({m},{k}) not rebuilt from valuations"))?;
        }
    }

    let mut pascal = 0;
    for m in 0..=30 {
        for k in 0..=m {
            let f = qbinom_factorization(m, k).map_err(err)?;
            check(expand(&f).map_err(err)? == qbinom_poly(m, k).map_err(err)?, || format!("[{m},{k}]_q"))?;
            pascal += 1;
        }
    }

    let mut divisions = 0;
    let mut polynomial = 0;
    let mut run = |nums: Vec<u64>, dens: Vec<u64>, m: u64, k: u64| -> Result<(), String> {
        let e = QuotientExpr::new(nums.clone(), dens.clone(), m, k).map_err(err)?;
        let f = expr_factorization(&e).map_err(err)?;
        let quotient = long_division(&nums, &dens, m, k);
        check(is_polynomial(&f) == quotient.is_some(), || format!("{nums:?}/{dens:?} [{m},{k}]"))?;
        if let Some(q) = quotient {
            check(expand(&f).map_err(err)? == q, || format!("expansion {nums:?}/{dens:?} [{m},{k}]"))?;
            polynomial += 1;
        }
        divisions += 1;
        Ok(())
    };
    for m in 1..=24 {
        for k in 0..=m {
            for num in 1..=6 {
                for den in 1..=m + 1 {
                    run(vec![num], vec![den], m, k)?;
                }
            }
        }
    }
    for m in 1..=12 {
        for k in 0..=m {
            for d1 in 1..=8 {
                for d2 in d1..=8 {
                    run(vec![1, 2], vec![d1, d2], m, k)?;
                }
            }
        }
    }
    Ok(format!(
        "{lucas} Lucas ({lucas_time:.2?}), {valuations} valuations, {pascal} q-Pascal, \
         {divisions} long divisions ({polynomial} polynomial)"
    ))
}

fn identities(expanded: &[QFamilyVerdict]) -> Outcome {
    let mut decompositions = 0;
    for a in 1..=20 {
        for b in 1..=20 {
            for n in 1..=20 {
                if a * n < 2 {
                    continue;
                }
                check(verify_decomposition(a, b, n).map_err(err)?, || format!("({a},{b},{n})"))?;
                decompositions += 1;
            }
        }
    }
    check(!expanded.is_empty(), || "no expanded families recorded".into())?;
    for v in expanded {
        check(v.q_one_consistent == Some(true), || {
            format!("{:?} n={:?} k={:?} a={:?} b={:?}", v.family, v.n, v.k, v.a, v.b)
        })?;
    }
    Ok(format!("{decompositions} decompositions, {} q = 1 specializations", expanded.len()))
}

fn main() {
    let mut expanded = Vec::new();
    let mut failed = 0;
    let mut report = |id: u32, name: &str, outcome: Outcome| {
        match outcome {
            Ok(detail) => println!("PASS  [{id:>2}] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  [{id:>2}] {name}: {why}");
            }
        }
    };
    report(1, "f-value regression", f_value_regression());
    report(2, "bound regression", bound_regression());
    report(3, "gcd-weighted divisibility grid", thm0_grid());
    report(4, "congruence families", thm3_grid());
    report(5, "3n-1 witnesses", conj2_desk());
    report(6, "prime windows", prime_windows());
    report(7, "q-side families", q_side(&mut expanded));
    report(8, "[30n,5n] negative coefficients", conj74());
    report(9, "oracle equivalence", oracle_suites());
    report(10, "identities", identities(&expanded));
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}

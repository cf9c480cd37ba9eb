//! Builds the grid and per-point evaluator for each subcommand.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use divcert_core::divisibility::{
    chebyshev_theta_3_2_with_budget, conj2_witness, conj_oddp_search, f_ab, lemma_p2_verify,
    oddp2_survives, residue_histogram, revalidate_conj2, theorem2_bound, verify_decomposition,
    verify_thm0, verify_thm3, FabResult, FabVerdict,
};
use divcert_core::qdivisibility::{
    conj_330n88n_check, evaluate, lemma_andrews_check, thm4_expressions, verify_thm_anbn,
    verify_thm_kn, FamilyId, QFamilyVerdict,
};
use divcert_core::qpoly::{expand, expr_factorization, is_polynomial, QuotientExpr};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::FabCache;
use crate::error::CliError;
use crate::report::{Outcome, Status};
use crate::runner::{run, RunOptions};
use crate::{Cli, Command, ConjCmd, FabArgs, Global, QbinomArgs, VerifyCmd};

type Params = BTreeMap<String, Value>;

macro_rules! params {
    ($($k:literal => $v:expr),* $(,)?) => {{
        let mut m = Params::new();
        $(m.insert($k.to_string(), json!($v));)*
        m
    }};
}

#[derive(Serialize)]
struct Ab {
    a: u64,
    b: u64,
}

#[derive(Serialize)]
struct Abn {
    a: u64,
    b: u64,
    n: u64,
}

#[derive(Serialize)]
struct N {
    n: u64,
}

#[derive(Serialize)]
struct Nk {
    n: u64,
    k: u64,
}

#[derive(Serialize)]
struct NFamily {
    n: u64,
    family: FamilyId,
}

/// Turns an engine error into a recorded outcome, or aborts the run when
/// the error means the input itself was invalid.
fn settle(r: divcert_core::Result<Outcome>) -> Result<Outcome, CliError> {
    r.or_else(|e| Outcome::from_error(&e).ok_or(CliError::Core(e)))
}

fn pairs(a_max: u64, b_max: u64) -> Vec<Ab> {
    (1..=a_max).flat_map(|a| (1..=b_max).map(move |b| Ab { a, b })).collect()
}

fn triples(a_max: u64, b_max: u64, n_max: u64) -> Vec<Abn> {
    (1..=a_max)
        .flat_map(|a| (1..=b_max).flat_map(move |b| (1..=n_max).map(move |n| Abn { a, b, n })))
        .collect()
}

fn q_status(v: &QFamilyVerdict, expanded: bool) -> Status {
    if !v.holds() {
        Status::Fail
    } else if expanded && v.partial() {
        Status::Partial
    } else {
        Status::Ok
    }
}

fn q_outcome(v: QFamilyVerdict, expanded: bool) -> Outcome {
    Outcome::new(q_status(&v, expanded), v)
}

pub fn dispatch(cli: Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    let opts = RunOptions {
        table: g.table,
        timing: g.timing,
        par: g.par,
        checkpoint: g.checkpoint.clone(),
        max_points: g.max_points,
    };
    match cli.command {
        Command::Fab(args) => fab(args, &opts),
        Command::Verify { target } => verify(target, g, &opts),
        Command::Conj { target } => conj(target, g, &opts),
        Command::Primes { lo, hi } => {
            if lo < 2 || lo > hi {
                return Err(CliError::Usage("need 2 <= --lo <= --hi".into()));
            }
            let budget = g.budget_prime;
            let params = params! { "lo" => lo, "hi" => hi, "budget_prime" => budget };
            let point = [json!({ "lo": lo, "hi": hi })];
            run("primes", &params, &point, |_| {
                if hi.saturating_mul(20) / 19 + 1 > budget {
                    return settle(Err(divcert_core::Error::Budget {
                        what: "prime window sieve",
                        requested: hi.saturating_mul(20) / 19 + 1,
                        limit: budget,
                    }));
                }
                settle(lemma_p2_verify(lo, hi).map(|r| Outcome::ok_if(r.failures.is_empty(), r)))
            }, &opts)
        }
        Command::Qbinom(args) => qbinom(args, g, &opts),
        Command::Theta { x } => {
            let budget = g.budget_prime;
            let params = params! { "x" => x, "budget_prime" => budget };
            run("theta", &params, &[N { n: x }], |p| {
                settle(chebyshev_theta_3_2_with_budget(p.n, budget).map(|t| {
                    Outcome::ok_if(t.window_holds != Some(false), t)
                }))
            }, &opts)
        }
    }
}

fn fab_outcome(r: FabResult) -> divcert_core::Result<Outcome> {
    let bound = theorem2_bound(r.a, r.b)?;
    let status = match r.verdict {
        FabVerdict::Found { .. } | FabVerdict::ProvenZero => Status::Ok,
        FabVerdict::Inconclusive { .. } => Status::Inconclusive,
    };
    let mut value = serde_json::to_value(&r).expect("results serialize");
    value["theorem2_bound"] = serde_json::to_value(bound).expect("bounds serialize");
    Ok(Outcome { status, result: value })
}

fn fab(args: FabArgs, opts: &RunOptions) -> Result<u8, CliError> {
    let (points, mut params) = match (args.a, args.b, args.a_max, args.b_max) {
        (Some(a), Some(b), None, None) => (vec![Ab { a, b }], params! { "a" => a, "b" => b }),
        (None, None, Some(a_max), Some(b_max)) => {
            (pairs(a_max, b_max), params! { "a_max" => a_max, "b_max" => b_max })
        }
        _ => return Err(CliError::Usage("give either A B or --a-max and --b-max".into())),
    };
    if points.iter().any(|p| p.a == 0 || p.b == 0) {
        return Err(CliError::Usage("a and b must be positive".into()));
    }
    params.insert("n_cap".into(), json!(args.n_cap));
    let cache = args.cache.as_deref().map(FabCache::open).transpose()?;
    let hits = AtomicUsize::new(0);
    let n_cap = args.n_cap;
    let code = run("fab", &params, &points, |p| {
        if let Some(r) = cache.as_ref().and_then(|c| c.get(p.a, p.b)) {
            hits.fetch_add(1, Ordering::Relaxed);
            return settle(fab_outcome(r));
        }
        match f_ab(p.a, p.b, Some(n_cap)) {
            Ok(r) => {
                if let Some(c) = &cache {
                    c.insert(&r)?;
                }
                settle(fab_outcome(r))
            }
            Err(e) => settle(Err(e)),
        }
    }, opts)?;
    if let Some(c) = &cache {
        eprintln!("cache: {} hits, {} entries", hits.into_inner(), c.len());
    }
    Ok(code)
}

fn verify(target: VerifyCmd, g: &Global, opts: &RunOptions) -> Result<u8, CliError> {
    let budget = g.budget_degree;
    match target {
        VerifyCmd::Thm0 { a_max, b_max, n_max } => {
            let params = params! { "a_max" => a_max, "b_max" => b_max, "n_max" => n_max };
            run("verify thm0", &params, &triples(a_max, b_max, n_max), |p| {
                settle(verify_thm0(p.a, p.b, p.n).map(|h| Outcome::ok_if(h, json!({ "holds": h }))))
            }, opts)
        }
        VerifyCmd::Thm3 { n_min, n_max } => {
            let params = params! { "n_min" => n_min, "n_max" => n_max };
            let points: Vec<N> = (n_min.max(1)..=n_max).map(|n| N { n }).collect();
            run("verify thm3", &params, &points, |p| {
                settle(verify_thm3(p.n).map(|v| Outcome::ok_if(v.all_hold, v)))
            }, opts)
        }
        VerifyCmd::Thm4 { n_min, n_max, expand } => {
            let params = params! {
                "n_min" => n_min, "n_max" => n_max, "expand" => expand, "budget_degree" => budget,
            };
            let mut points = Vec::new();
            for n in n_min.max(1)..=n_max {
                for (family, _, _) in thm4_expressions(n)? {
                    points.push(NFamily { n, family });
                }
            }
            run("verify thm4", &params, &points, |p| {
                settle((|| {
                    let (id, e, nonneg) = thm4_expressions(p.n)?
                        .into_iter()
                        .find(|(id, _, _)| *id == p.family)
                        .expect("family listed for every n");
                    let mut v = evaluate(id, &e, nonneg, expand, budget)?;
                    v.n = Some(p.n);
                    Ok(q_outcome(v, expand))
                })())
            }, opts)
        }
        VerifyCmd::ThmKn { n_max } => {
            let params = params! { "n_max" => n_max, "budget_degree" => budget };
            let points: Vec<Nk> =
                (1..=n_max).flat_map(|n| (0..=n).map(move |k| Nk { n, k })).collect();
            run("verify thm_kn", &params, &points, |p| {
                settle(verify_thm_kn(p.n, p.k, budget).map(|v| q_outcome(v, true)))
            }, opts)
        }
        VerifyCmd::Andrews { a_max, b_max } => {
            let params = params! { "a_max" => a_max, "b_max" => b_max, "budget_degree" => budget };
            run("verify andrews", &params, &pairs(a_max, b_max), |p| {
                settle(lemma_andrews_check(p.a, p.b, budget).map(|v| q_outcome(v, true)))
            }, opts)
        }
        VerifyCmd::Anbn { a_max, b_max, n_max } => {
            let params = params! {
                "a_max" => a_max, "b_max" => b_max, "n_max" => n_max, "budget_degree" => budget,
            };
            run("verify anbn", &params, &triples(a_max, b_max, n_max), |p| {
                settle(verify_thm_anbn(p.a, p.b, p.n, budget).map(|v| q_outcome(v, true)))
            }, opts)
        }
        VerifyCmd::Decomposition { a_max, b_max, n_max } => {
            let params = params! { "a_max" => a_max, "b_max" => b_max, "n_max" => n_max };
            let points: Vec<Abn> =
                triples(a_max, b_max, n_max).into_iter().filter(|p| p.a * p.n >= 2).collect();
            run("verify decomposition", &params, &points, |p| {
                settle(verify_decomposition(p.a, p.b, p.n).map(|h| Outcome::ok_if(h, json!({ "holds": h }))))
            }, opts)
        }
    }
}

fn conj(target: ConjCmd, g: &Global, opts: &RunOptions) -> Result<u8, CliError> {
    match target {
        ConjCmd::Conj2Witness { a_max, b_max, p_cap } => {
            let p_cap = p_cap.min(g.budget_prime);
            let params = params! { "a_max" => a_max, "b_max" => b_max, "p_cap" => p_cap };
            run("conj conj2witness", &params, &pairs(a_max, b_max), |p| {
                settle((|| {
                    let w = conj2_witness(p.a, p.b, p_cap)?;
                    revalidate_conj2(&w)?;
                    let mut v = serde_json::to_value(&w).expect("witnesses serialize");
                    v["revalidated"] = json!(true);
                    Ok(Outcome { status: Status::Ok, result: v })
                })())
            }, opts)
        }
        ConjCmd::Oddp { p, a, b, n_max } => {
            let params = params! { "p" => p, "a" => a, "b" => b, "n_max" => n_max };
            let point = [json!({ "p": p, "a": a, "b": b })];
            conj_oddp_search(p, a, b, 0)?;
            run("conj oddp", &params, &point, |_| {
                settle(conj_oddp_search(p, a, b, n_max).map(|f| {
                    let status = if f.is_some() { Status::Ok } else { Status::Inconclusive };
                    Outcome::new(status, json!({ "first_failure": f }))
                }))
            }, opts)
        }
        ConjCmd::Oddp2 { m, a_max, b_max, n_max } => {
            if m == 0 {
                return Err(CliError::Usage("m must be positive".into()));
            }
            let params = params! { "m" => m, "a_max" => a_max, "b_max" => b_max, "n_max" => n_max };
            let points: Vec<Ab> = pairs(a_max, b_max).into_iter().filter(|p| p.a * m > p.b).collect();
            run("conj oddp2", &params, &points, |p| {
                settle(oddp2_survives(m, p.a, p.b, n_max).map(|s| Outcome::new(Status::Ok, json!({ "survives": s }))))
            }, opts)
        }
        ConjCmd::C330n88n { n, n_max } => {
            let budget = g.budget_degree;
            let last = n_max.unwrap_or(n);
            let params = params! { "n" => n, "n_max" => last, "budget_degree" => budget };
            let points: Vec<N> = (n..=last).map(|n| N { n }).collect();
            if n == 0 {
                return Err(CliError::Usage("n must be positive".into()));
            }
            run("conj c330n88n", &params, &points, |p| {
                settle(conj_330n88n_check(p.n, budget).map(|r| Outcome::ok_if(r.conjecture_holds, r)))
            }, opts)
        }
        ConjCmd::Residues { a, alpha, b, beta, p, n_max } => {
            let params = params! {
                "a" => a, "alpha" => alpha, "b" => b, "beta" => beta, "p" => p, "n_max" => n_max,
            };
            let point = [json!({ "a": a, "alpha": alpha, "b": b, "beta": beta, "p": p })];
            residue_histogram(a, alpha, b, beta, p, 0)?;
            run("conj residues", &params, &point, |_| {
                settle(residue_histogram(a, alpha, b, beta, p, n_max).map(|h| Outcome::new(Status::Ok, h)))
            }, opts)
        }
    }
}

fn qbinom(args: QbinomArgs, g: &Global, opts: &RunOptions) -> Result<u8, CliError> {
    let budget = g.budget_degree;
    let expr = QuotientExpr::new(args.num.clone(), args.den.clone(), args.m, args.k)?;
    let params = params! {
        "m" => args.m, "k" => args.k, "num" => args.num, "den" => args.den,
        "exponents" => args.exponents, "budget_degree" => budget,
    };
    let point = [json!({ "m": args.m, "k": args.k, "num": args.num, "den": args.den })];
    let exponents_only = args.exponents;
    run("qbinom", &params, &point, |_| {
        settle((|| {
            let f = expr_factorization(&expr)?;
            let polynomial = is_polynomial(&f);
            let exponents: BTreeMap<String, i64> =
                f.exponents.iter().map(|(d, e)| (d.to_string(), *e)).collect();
            let mut v = json!({
                "polynomial": polynomial,
                "degree": f.degree(),
                "sign": f.sign,
                "exponents": exponents,
            });
            if exponents_only || !polynomial {
                return Ok(Outcome::new(Status::Ok, v));
            }
            if f.degree() as u64 > budget {
                v["error"] = json!(format!("degree {} exceeds budget {budget}", f.degree()));
                return Ok(Outcome::new(Status::Partial, v));
            }
            let p = expand(&f)?;
            v["coefficients"] = json!(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
            Ok(Outcome::new(Status::Ok, v))
        })())
    }, opts)
}

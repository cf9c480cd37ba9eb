//! Integer-side verifiers and searches: the function f(a, b) with its
//! totient/order bound, the congruence families for binomials modulo
//! linear forms in n, the 3n - 1 non-divisibility witness search, the
//! prime-window lemma, and theta(x; 3, 2).
//!
//! Every divisibility decision goes through [`divides_binomial`], i.e.
//! factorization of the modulus plus valuations.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    binom_exact, binom_valuation, divides_binomial, factorize, is_prime,
    lucas_binom_mod_p, multiplicative_order, primes_up_to, primes_up_to_with_budget, totient,
    BinomialDivisibility, SIEVE_BUDGET,
};
use crate::{Error, Result};

/// Scan limit for f(a, b) when the caller gives none.
pub const DEFAULT_N_CAP: u64 = 10_000_000;

fn mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

fn require_positive(pairs: &[(&str, u64)]) -> Result<()> {
    for &(name, v) in pairs {
        if v == 0 {
            return Err(Error::invalid(format!("{name} must be positive")));
        }
    }
    Ok(())
}

/// `binom(an + bn, an) = 0 (mod (bn + 1) / gcd(a, bn + 1))`.
pub fn verify_thm0(a: u64, b: u64, n: u64) -> Result<bool> {
    require_positive(&[("a", a), ("b", b), ("n", n)])?;
    let an = mul(a, n, "an")?;
    let bn1 = add(mul(b, n, "bn")?, 1, "bn + 1")?;
    let modulus = bn1 / num_integer::gcd(a, bn1);
    Ok(divides_binomial(add(an, bn1 - 1, "an + bn")?, an, modulus)?.divides)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Bound {
    /// Smallest prime dividing `a` but not `b`.
    pub p: u64,
    /// Multiplicative order of `p` modulo `a + b`.
    pub s: u64,
    /// `(p^s - 1) / (a + b)`.
    #[serde(with = "crate::serde_big::biguint")]
    pub bound: BigUint,
}

/// Upper bound on f(a, b) from the order of `p` modulo `a + b`, where `p` is
/// the smallest prime factor of `a` not dividing `b`. `None` when every prime
/// factor of `a` divides `b`.
pub fn theorem2_bound(a: u64, b: u64) -> Result<Option<Theorem2Bound>> {
    require_positive(&[("a", a), ("b", b)])?;
    let Some(p) = factorize(a)?.primes().find(|&p| b % p != 0) else {
        return Ok(None);
    };
    let sum = add(a, b, "a + b")?;
    let s = multiplicative_order(p, sum)?;
    let s32 = u32::try_from(s).map_err(|_| Error::Overflow("p^s"))?;
    let (bound, rem) = (BigUint::from(p).pow(s32) - 1u32).div_rem(&BigUint::from(sum));
    assert!(rem.is_zero(), "a + b must divide p^s - 1");
    Ok(Some(Theorem2Bound { p, s, bound }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FabVerdict {
    Found { n: u64 },
    ProvenZero,
    Inconclusive { n_max: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FabResult {
    pub a: u64,
    pub b: u64,
    pub verdict: FabVerdict,
    /// The theorem bound, when one exists.
    #[serde(with = "crate::serde_big::opt_biguint")]
    pub bound_used: Option<BigUint>,
    /// Failing prime valuations at the found `n`.
    pub certificate: Option<BinomialDivisibility>,
}

/// `(bn + 1) | binom((a+b)n, an)`.
pub fn fab_divides_at(a: u64, b: u64, n: u64) -> Result<BinomialDivisibility> {
    let an = mul(a, n, "an")?;
    let m = mul(add(a, b, "a + b")?, n, "(a + b)n")?;
    divides_binomial(m, an, add(mul(b, n, "bn")?, 1, "bn + 1")?)
}

/// Smallest `n` with `(bn + 1)` not dividing `binom((a+b)n, an)`.
///
/// Zero is only claimed when `rad(a) | b`; otherwise the scan runs up to the
/// smaller of the theorem bound and `n_cap` (default [`DEFAULT_N_CAP`]).
pub fn f_ab(a: u64, b: u64, n_cap: Option<u64>) -> Result<FabResult> {
    let Some(bound) = theorem2_bound(a, b)? else {
        return Ok(FabResult {
            a,
            b,
            verdict: FabVerdict::ProvenZero,
            bound_used: None,
            certificate: None,
        });
    };
    let bound_u64 = bound.bound.to_u64().unwrap_or(u64::MAX);
    let limit = bound_u64.min(n_cap.unwrap_or(DEFAULT_N_CAP));
    for n in 1..=limit {
        let cert = fab_divides_at(a, b, n)?;
        if !cert.divides {
            return Ok(FabResult {
                a,
                b,
                verdict: FabVerdict::Found { n },
                bound_used: Some(bound.bound),
                certificate: Some(cert),
            });
        }
    }
    if limit == bound_u64 {
        return Err(Error::ClaimViolated(format!(
            "f({a},{b}) exceeds its bound {}",
            bound.bound
        )));
    }
    Ok(FabResult {
        a,
        b,
        verdict: FabVerdict::Inconclusive { n_max: limit },
        bound_used: Some(bound.bound),
        certificate: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPoint {
    pub r: u64,
    #[serde(with = "crate::serde_big::biguint")]
    pub n: BigUint,
    pub residue: u64,
}

/// Evaluates `binom(an, bn + beta) mod p` at `n = (p^{r phi(a)} - 1) / a`
/// for `r = 1..=r_max`, skipping points where `an > bn + beta > 0` fails.
/// Every residue must be `+-1`, namely `(-1)^{digit sum of bn + beta}`.
pub fn thm1_witness_family(
    a: u64,
    b: u64,
    beta: i64,
    p: u64,
    r_max: u64,
) -> Result<Vec<WitnessPoint>> {
    if b == 0 || a <= b {
        return Err(Error::invalid("need a > b >= 1"));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a % p == 0 {
        return Err(Error::NotCoprime(p, a));
    }
    let phi = totient(a)?;
    let mut out = Vec::new();
    for r in 1..=r_max {
        let exp = u32::try_from(r * phi).map_err(|_| Error::Overflow("p^(r phi(a))"))?;
        let (n, rem) = (BigUint::from(p).pow(exp) - 1u32).div_rem(&BigUint::from(a));
        assert!(rem.is_zero(), "Euler's theorem");
        let top = &n * a;
        let bottom = BigInt::from(&n * b) + beta;
        let Some(bottom) = bottom.to_biguint().filter(|x| !x.is_zero() && *x < top) else {
            continue;
        };
        let residue = lucas_binom_mod_p(&top, &bottom, p)?;
        let digits_even = crate::arith::base_p_digits(&bottom, p).iter().sum::<u64>() % 2 == 0;
        let expected = if digits_even { 1 } else { p - 1 };
        if residue != expected {
            return Err(Error::ClaimViolated(format!(
                "binom({top}, {bottom}) = {residue} mod {p}, expected {expected}"
            )));
        }
        out.push(WitnessPoint { r, n, residue });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueHistogram {
    pub p: u64,
    /// `counts[r]` = number of scanned `n` with residue `r`.
    pub counts: Vec<u64>,
    /// Smallest `n` attaining each residue.
    pub first_n: Vec<Option<u64>>,
}

/// Residues of `binom(an + alpha, bn + beta) mod p` over `1 <= n <= n_max`,
/// skipping `n` where the indices leave `0 <= bottom <= top`.
pub fn residue_histogram(
    a: u64,
    alpha: i64,
    b: u64,
    beta: i64,
    p: u64,
    n_max: u64,
) -> Result<ResidueHistogram> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut counts = vec![0; p as usize];
    let mut first_n = vec![None; p as usize];
    for n in 1..=n_max {
        let top = i128::from(a) * i128::from(n) + i128::from(alpha);
        let bottom = i128::from(b) * i128::from(n) + i128::from(beta);
        if bottom < 0 || bottom > top {
            continue;
        }
        let r = lucas_binom_mod_p(&BigUint::from(top as u128), &BigUint::from(bottom as u128), p)?;
        counts[r as usize] += 1;
        first_n[r as usize].get_or_insert(n);
    }
    Ok(ResidueHistogram { p, counts, first_n })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceCheck {
    pub label: String,
    pub m: u64,
    pub k: u64,
    pub modulus: u64,
    pub divides: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm3Verdict {
    pub n: u64,
    pub checks: Vec<CongruenceCheck>,
    pub all_hold: bool,
}

/// The binomial congruence families modulo `2n-1`, `6n-1`,
/// `(10n-1)(15n-1)`, `30n-1` and `66n-1` at one `n`.
pub fn verify_thm3(n: u64) -> Result<Thm3Verdict> {
    require_positive(&[("n", n)])?;
    let lin = |c: u64| -> Result<u64> { Ok(mul(c, n, "cn")? - 1) };
    let scaled = |c: u64| mul(c, n, "cn");
    let mut checks = Vec::new();
    let mut push = |label: &str, mc: u64, kc: u64, modulus: u64| -> Result<()> {
        let (m, k) = (scaled(mc)?, scaled(kc)?);
        checks.push(CongruenceCheck {
            label: label.to_string(),
            m,
            k,
            modulus,
            divides: divides_binomial(m, k, modulus)?.divides,
        });
        Ok(())
    };
    push("binom(6n,3n) mod 2n-1", 6, 3, lin(2)?)?;
    push("binom(2n,n) mod 2n-1", 2, 1, lin(2)?)?;
    push("binom(12n,3n) mod 6n-1", 12, 3, lin(6)?)?;
    push("binom(12n,4n) mod 6n-1", 12, 4, lin(6)?)?;
    push("binom(60n,6n) mod 30n-1", 60, 6, lin(30)?)?;
    push("binom(120n,40n) mod 30n-1", 120, 40, lin(30)?)?;
    push("binom(120n,45n) mod 30n-1", 120, 45, lin(30)?)?;
    push("binom(330n,88n) mod 66n-1", 330, 88, lin(66)?)?;

    // composite modulus, one coprime factor at a time
    let (f10, f15) = (lin(10)?, lin(15)?);
    assert_eq!(num_integer::gcd(f10, f15), 1, "gcd(10n-1, 15n-1) = 1");
    let (m, k) = (scaled(30)?, scaled(5)?);
    let divides = divides_binomial(m, k, f10)?.divides && divides_binomial(m, k, f15)?.divides;
    checks.push(CongruenceCheck {
        label: "binom(30n,5n) mod (10n-1)(15n-1)".to_string(),
        m,
        k,
        modulus: mul(f10, f15, "(10n-1)(15n-1)")?,
        divides,
    });

    let all_hold = checks.iter().all(|c| c.divides);
    Ok(Thm3Verdict { n, checks, all_hold })
}

/// Certificate that `(3n - 1)` does not divide `binom((a+b)n, an)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conj2Witness {
    pub a: u64,
    pub b: u64,
    pub p: u64,
    pub n: u64,
    /// `v_p(binom((a+b)n, an))`.
    pub binom_valuation: i64,
    /// `v_p(3n - 1)`.
    pub modulus_valuation: i64,
    /// `binom_valuation - modulus_valuation`, always negative.
    pub valuation: i64,
    /// True when `3n - 1 = p` itself, the prime scan's witness shape.
    pub prime_modulus: bool,
}

fn floor_sum_binom(m: u64, k: u64, p: u64) -> i64 {
    let mut v = 0i64;
    let mut pl = p as u128;
    while pl <= m as u128 {
        let pl64 = pl as u64;
        v += (m / pl64) as i64 - (k / pl64) as i64 - ((m - k) / pl64) as i64;
        pl *= p as u128;
    }
    v
}

/// Searches for a prime `p` and `n` with `v_p(binom((a+b)n, an) / (3n - 1)) < 0`.
///
/// First scans primes `p = 2 (mod 3)` up to `p_cap` with `3n - 1 = p`. Some
/// pairs, e.g. `(2, 2)`, never fail at such an `n`, so the search then falls
/// back to ascending `n <= (p_cap + 1) / 3`, testing every prime power in
/// `3n - 1`. Each witness is re-validated through Kummer's carries.
pub fn conj2_witness(a: u64, b: u64, p_cap: u64) -> Result<Conj2Witness> {
    require_positive(&[("a", a), ("b", b)])?;
    let sum = add(a, b, "a + b")?;
    let make = |p: u64, n: u64, bv: i64, mv: i64| Conj2Witness {
        a,
        b,
        p,
        n,
        binom_valuation: bv,
        modulus_valuation: mv,
        valuation: bv - mv,
        prime_modulus: 3 * n - 1 == p,
    };
    for p in primes_up_to(p_cap)?.into_iter().filter(|p| p % 3 == 2) {
        let n = (p + 1) / 3;
        let bv = floor_sum_binom(mul(sum, n, "(a+b)n")?, mul(a, n, "an")?, p);
        if bv - 1 < 0 {
            let w = make(p, n, bv, 1);
            revalidate_conj2(&w)?;
            return Ok(w);
        }
    }
    for n in 1..=(p_cap + 1) / 3 {
        let m = mul(sum, n, "(a+b)n")?;
        let k = mul(a, n, "an")?;
        for (p, e) in factorize(3 * n - 1)?.factors {
            if p > p_cap {
                continue;
            }
            let bv = floor_sum_binom(m, k, p);
            if bv < i64::from(e) {
                let w = make(p, n, bv, i64::from(e));
                revalidate_conj2(&w)?;
                return Ok(w);
            }
        }
    }
    Err(Error::Exhausted(format!(
        "no 3n-1 witness for ({a},{b}) with primes up to {p_cap}"
    )))
}

/// Recomputes a witness independently: Kummer carry count for the binomial,
/// repeated division for `v_p(3n - 1)`.
pub fn revalidate_conj2(w: &Conj2Witness) -> Result<()> {
    let m = (w.a + w.b) * w.n;
    let cert = binom_valuation(m, w.a * w.n, w.p)?;
    let mut modulus = 3 * w.n - 1;
    let mut mv = 0i64;
    while modulus % w.p == 0 {
        modulus /= w.p;
        mv += 1;
    }
    let ok = cert.carry_count as i64 == w.binom_valuation
        && mv == w.modulus_valuation
        && w.valuation == w.binom_valuation - w.modulus_valuation
        && w.valuation < 0;
    if ok {
        Ok(())
    } else {
        Err(Error::ClaimViolated(format!("witness failed re-validation: {w:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeWindowReport {
    pub x_lo: u64,
    pub x_hi: u64,
    /// `(x, least prime p = 2 mod 3 with x < p < 20x/19)`.
    pub entries: Vec<(u64, u64)>,
    pub failures: Vec<u64>,
}

/// For each integer `x` in `[x_lo, x_hi]`, the least prime `p = 2 (mod 3)`
/// with `x < p` and `19p < 20x`.
pub fn lemma_p2_verify(x_lo: u64, x_hi: u64) -> Result<PrimeWindowReport> {
    if x_lo < 2 || x_lo > x_hi {
        return Err(Error::invalid("need 2 <= x_lo <= x_hi"));
    }
    let top = mul(x_hi, 20, "20x")? / 19 + 1;
    let primes: Vec<u64> = primes_up_to(top)?.into_iter().filter(|p| p % 3 == 2).collect();
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for x in x_lo..=x_hi {
        let i = primes.partition_point(|&p| p <= x);
        match primes.get(i) {
            Some(&p) if 19 * p < 20 * x => entries.push((x, p)),
            _ => failures.push(x),
        }
    }
    Ok(PrimeWindowReport {
        x_lo,
        x_hi,
        entries,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThetaValue {
    pub x: u64,
    pub value: f64,
    /// Rigorous bound on `|value - theta(x; 3, 2)|`.
    pub error_bound: f64,
    /// `0.49x < theta < 0.51x` with the error interval included; reported for
    /// `x >= 3761` only.
    pub window_holds: Option<bool>,
}

/// `theta(x; 3, 2) = sum of ln p over primes p <= x, p = 2 (mod 3)`.
pub fn chebyshev_theta_3_2(x: u64) -> Result<ThetaValue> {
    chebyshev_theta_3_2_with_budget(x, SIEVE_BUDGET)
}

pub fn chebyshev_theta_3_2_with_budget(x: u64, budget: u64) -> Result<ThetaValue> {
    if x < 2 {
        return Err(Error::invalid("theta needs x >= 2"));
    }
    let u = f64::EPSILON / 2.0;
    // Neumaier compensated sum
    let (mut sum, mut comp, mut abs_total, mut count) = (0.0f64, 0.0f64, 0.0f64, 0u64);
    for p in primes_up_to_with_budget(x, budget)?.into_iter().filter(|p| p % 3 == 2) {
        let term = (p as f64).ln();
        let t = sum + term;
        comp += if sum.abs() >= term.abs() {
            (sum - t) + term
        } else {
            (term - t) + sum
        };
        sum = t;
        abs_total += term;
        count += 1;
    }
    let value = sum + comp;
    // each ln is within 1 ulp, the compensated sum within 2u|S| + O(n u^2) sum|x_i|
    let n = count as f64;
    let error_bound = 2.0 * u * abs_total + 2.0 * u * value.abs() + 2.0 * n * n * u * u * abs_total;
    let window_holds = (x >= 3761).then(|| {
        let xf = x as f64;
        value - error_bound > 0.49 * xf && value + error_bound < 0.51 * xf
    });
    Ok(ThetaValue {
        x,
        value,
        error_bound,
        window_holds,
    })
}

/// Checks `binom(an+bn, an) / (bn+1) = binom(an+bn, an-1) - (a+b)/a * binom(an+bn-1, an-2)`
/// exactly, cross-multiplied by `a(bn+1)`.
pub fn verify_decomposition(a: u64, b: u64, n: u64) -> Result<bool> {
    require_positive(&[("a", a), ("b", b), ("n", n)])?;
    let an = mul(a, n, "an")?;
    if an < 2 {
        return Err(Error::invalid("need an >= 2"));
    }
    let bn1 = add(mul(b, n, "bn")?, 1, "bn + 1")?;
    let m = add(an, bn1 - 1, "an + bn")?;
    let lhs = BigInt::from(binom_exact(m, an)?) * a;
    let c2 = BigInt::from(binom_exact(m, an - 1)?);
    let c3 = BigInt::from(binom_exact(m - 1, an - 2)?);
    let rhs = (c2 * a - c3 * (a + b)) * bn1;
    Ok(lhs == rhs)
}

/// Smallest `n <= n_max` with `(pn - 1)` not dividing `binom(an, bn)`.
pub fn conj_oddp_search(p: u64, a: u64, b: u64, n_max: u64) -> Result<Option<u64>> {
    if p == 2 || !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not an odd prime")));
    }
    if b == 0 || a <= b {
        return Err(Error::invalid("need a > b >= 1"));
    }
    for n in 1..=n_max {
        let modulus = mul(p, n, "pn")? - 1;
        if !divides_binomial(mul(a, n, "an")?, mul(b, n, "bn")?, modulus)?.divides {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// `(an - 1) | binom(amn, bn)` for every `n <= n_max`. A zero modulus
/// (`a = n = 1`) never divides the positive binomial.
pub fn oddp2_survives(m: u64, a: u64, b: u64, n_max: u64) -> Result<bool> {
    require_positive(&[("m", m), ("a", a), ("b", b)])?;
    let am = mul(a, m, "am")?;
    if am <= b {
        return Err(Error::invalid("need am > b"));
    }
    for n in 1..=n_max {
        let modulus = mul(a, n, "an")? - 1;
        if modulus == 0 {
            return Ok(false);
        }
        if !divides_binomial(mul(am, n, "amn")?, mul(b, n, "bn")?, modulus)?.divides {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `(a, b)` with `a <= a_max`, `b <= b_max`, `am > b` surviving
/// [`oddp2_survives`], in lexicographic order.
pub fn conj_oddp2_search(m: u64, a_max: u64, b_max: u64, n_max: u64) -> Result<Vec<(u64, u64)>> {
    require_positive(&[("m", m)])?;
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in 1..=b_max.min(a * m - 1) {
            if oddp2_survives(m, a, b, n_max)? {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm0_examples() {
        assert!(verify_thm0(1, 1, 3).unwrap());
        assert!(verify_thm0(2, 1, 1).unwrap());
        assert!(verify_thm0(0, 1, 1).is_err());
    }

    #[test]
    fn bound_examples() {
        let b = theorem2_bound(7, 36).unwrap().unwrap();
        assert_eq!((b.p, b.s, b.bound.clone()), (7, 6, BigUint::from(2736u32)));
        let b = theorem2_bound(10, 192).unwrap().unwrap();
        assert_eq!((b.p, b.s), (5, 25));
        assert_eq!(b.bound, BigUint::from(1_475_362_494_440_362u64));
        assert_eq!(theorem2_bound(1, 5).unwrap(), None);
        assert_eq!(theorem2_bound(12, 6).unwrap(), None);
    }

    #[test]
    fn f_small_values() {
        let r = f_ab(7, 36, None).unwrap();
        assert_eq!(r.verdict, FabVerdict::Found { n: 279 });
        let cert = r.certificate.unwrap();
        assert_eq!(cert.modulus, 36 * 279 + 1);
        assert!(cert.failing_prime().is_some());
        assert_eq!(f_ab(1, 1, None).unwrap().verdict, FabVerdict::ProvenZero);
        assert_eq!(
            f_ab(7, 36, Some(100)).unwrap().verdict,
            FabVerdict::Inconclusive { n_max: 100 }
        );
    }

    #[test]
    fn witness_family_examples() {
        // phi(2) = 1: n = (3^r - 1)/2
        let pts = thm1_witness_family(2, 1, 0, 3, 2).unwrap();
        let ns: Vec<_> = pts.iter().map(|w| (w.n.to_u64().unwrap(), w.residue)).collect();
        assert_eq!(ns, vec![(1, 2), (4, 1)]); // binom(2,1)=2, binom(8,4)=70
        let pts = thm1_witness_family(3, 1, 0, 2, 2).unwrap();
        let ns: Vec<_> = pts.iter().map(|w| (w.n.to_u64().unwrap(), w.residue)).collect();
        assert_eq!(ns, vec![(1, 1), (5, 1)]); // binom(3,1)=3, binom(15,5)=3003
        // beta = 1: r = 1 gives bn + 1 = an, skipped; r = 2 is binom(8,5) = 56 = -1 mod 3
        let pts = thm1_witness_family(2, 1, 1, 3, 2).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!((pts[0].r, pts[0].residue), (2, 2));
        assert_eq!(thm1_witness_family(6, 1, 0, 3, 1), Err(Error::NotCoprime(3, 6)));
        assert!(thm1_witness_family(2, 2, 0, 3, 1).is_err());
    }

    #[test]
    fn thm3_small() {
        let v = verify_thm3(1).unwrap();
        assert!(v.all_hold);
        assert_eq!(v.checks.len(), 9);
        let last = v.checks.last().unwrap();
        assert_eq!((last.m, last.k, last.modulus), (30, 5, 126));
    }

    #[test]
    fn conj2_examples() {
        let w = conj2_witness(1, 1, 1000).unwrap();
        assert_eq!((w.p, w.n, w.valuation), (5, 2, -1));
        assert!(w.prime_modulus);
        // (2,2) is never caught with 3n - 1 prime; 3*3 - 1 = 8 and v_2(binom(12,6)) = 2
        let w = conj2_witness(2, 2, 1000).unwrap();
        assert_eq!((w.p, w.n, w.binom_valuation, w.modulus_valuation), (2, 3, 2, 3));
        assert!(!w.prime_modulus);
        assert!(matches!(conj2_witness(2, 2, 5), Err(Error::Exhausted(_))));
    }

    #[test]
    fn prime_windows() {
        let r = lemma_p2_verify(530, 530).unwrap();
        assert_eq!(r.entries, vec![(530, 557)]);
        let r = lemma_p2_verify(3761, 3761).unwrap();
        assert_eq!(r.entries, vec![(3761, 3767)]);
        let r = lemma_p2_verify(2, 10).unwrap();
        assert_eq!(r.failures, (2..=10).collect::<Vec<_>>());
        assert!(lemma_p2_verify(10, 9).is_err());
    }

    #[test]
    fn theta_values() {
        let t = chebyshev_theta_3_2(10).unwrap();
        assert!((t.value - 10f64.ln()).abs() < 1e-12);
        assert_eq!(t.window_holds, None);
        let t = chebyshev_theta_3_2(2).unwrap();
        assert!((t.value - 2f64.ln()).abs() < 1e-15);
        let t = chebyshev_theta_3_2(3761).unwrap();
        assert_eq!(t.window_holds, Some(true));
        assert!(chebyshev_theta_3_2(1).is_err());
    }

    #[test]
    fn decomposition_examples() {
        assert!(verify_decomposition(1, 1, 2).unwrap());
        assert!(verify_decomposition(2, 1, 1).unwrap());
        assert!(verify_decomposition(1, 1, 1).is_err());
    }

    #[test]
    fn oddp_examples() {
        assert_eq!(conj_oddp_search(3, 2, 1, 50).unwrap(), Some(2));
        assert_eq!(conj_oddp_search(5, 6, 3, 50).unwrap(), Some(2));
        assert_eq!(conj_oddp_search(7, 3, 1, 0).unwrap(), None);
        assert!(conj_oddp_search(2, 3, 1, 5).is_err());
    }

    #[test]
    fn oddp2_known_families() {
        assert!(oddp2_survives(3, 2, 3, 60).unwrap());
        assert!(oddp2_survives(2, 6, 3, 60).unwrap());
        assert!(oddp2_survives(5, 66, 88, 30).unwrap());
        assert!(!oddp2_survives(4, 30, 6, 50).unwrap());
        assert!(!oddp2_survives(3, 1, 1, 5).unwrap());
    }

    #[test]
    fn residues() {
        let h = residue_histogram(2, 0, 1, 0, 3, 50).unwrap();
        assert_eq!(h.counts.iter().sum::<u64>(), 50);
        assert_eq!(h.first_n[2], Some(1));
    }
}

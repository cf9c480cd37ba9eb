//! Polynomiality and positivity of q-binomial quotients: the seven
//! (1 - q)-families, the gcd-strengthened `[2n, n-k]_q` quotient and
//! `B_{n,k}(q)`, the Andrews-type quotient and its `(an, bn+1)`
//! specialization, `C_{a,b,n}(q)`, and the `[30n, 5n]_q` coefficient pattern.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::binom_exact;
use crate::qpoly::{
    expand, expr_factorization, is_nonneg, is_polynomial, is_reciprocal, qbinom_poly, IntPoly,
    QuotientExpr, DEGREE_BUDGET,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyId {
    /// `(1-q)/(1-q^{6n-1}) [12n, 3n]_q`
    Binom12n3n,
    /// `(1-q)/(1-q^{6n-1}) [12n, 4n]_q`
    Binom12n4n,
    /// `(1-q)/(1-q^{30n-1}) [60n, 6n]_q`
    Binom60n6n,
    /// `(1-q)/(1-q^{30n-1}) [120n, 40n]_q`
    Binom120n40n,
    /// `(1-q)/(1-q^{30n-1}) [120n, 45n]_q`
    Binom120n45n,
    /// `(1-q)/(1-q^{66n-1}) [330n, 88n]_q`
    Binom330n88n,
    /// `(1-q)^2/((1-q^{10n-1})(1-q^{15n-1})) [30n, 5n]_q`
    Binom30n5n,
    /// `(1-q^{gcd(k,n)})/(1-q^n) [2n, n-k]_q`
    GcdKn,
    /// `(1-q^{gcd(a,b)})/(1-q^{a+b}) [a+b, a]_q`
    Andrews,
    /// `(1-q^{gcd(an,bn+1)})/(1-q^{bn+1}) [an+bn, an]_q`
    Anbn,
    /// `(1-q^a)/(1-q^{bn+1}) [an+bn, an]_q`
    Cabn,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFamilyVerdict {
    pub family: FamilyId,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<u64>,
    pub polynomial: bool,
    /// `None` when coefficients were not expanded.
    pub nonneg: Option<bool>,
    /// Whether non-negativity is part of the claim for this family.
    pub expected_nonneg: bool,
    #[serde(with = "crate::serde_big::positions")]
    pub negative_positions: Vec<(u64, BigInt)>,
    pub degree: i64,
    pub reciprocal: Option<bool>,
    /// Expansion evaluated at `q = 1`.
    #[serde(with = "crate::serde_big::opt_bigint")]
    pub value_at_one: Option<BigInt>,
    /// `value_at_one` equals the integer quotient `prod m_i / prod n_j * binom(M, K)`.
    pub q_one_consistent: Option<bool>,
    /// Only for [`FamilyId::Anbn`]: both displayed forms give the same exponent vector.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forms_agree: Option<bool>,
}

impl QFamilyVerdict {
    /// Polynomial, and non-negative whenever that is claimed and was
    /// evaluated, with every evaluated consistency check passing.
    pub fn holds(&self) -> bool {
        self.polynomial
            && !(self.expected_nonneg && self.nonneg == Some(false))
            && self.q_one_consistent != Some(false)
            && self.reciprocal != Some(false)
            && self.forms_agree != Some(false)
    }

    /// Non-negativity was claimed but left unevaluated.
    pub fn partial(&self) -> bool {
        self.expected_nonneg && self.nonneg.is_none()
    }

    fn with_params(mut self, n: Option<u64>, k: Option<u64>, a: Option<u64>, b: Option<u64>) -> Self {
        (self.n, self.k, self.a, self.b) = (n, k, a, b);
        self
    }
}

/// Exact value at `q = 1`: `prod m_i / prod n_j * binom(M, K)`, or `None`
/// if that rational is not an integer.
pub fn specialize_at_one(e: &QuotientExpr) -> Result<Option<BigInt>> {
    let mut num = BigInt::from(binom_exact(e.binom_m(), e.binom_k())?);
    for &m in e.numerator_ms() {
        num *= m;
    }
    let den: BigInt = e.denominator_ns().iter().map(|&n| BigInt::from(n)).product();
    let (q, r) = num.div_rem(&den);
    Ok(r.is_zero().then_some(q))
}

/// Decides polynomiality from the exponent vector and, when `expand` is set
/// and the degree fits `degree_budget`, the coefficient-level properties.
pub fn evaluate(
    family: FamilyId,
    expr: &QuotientExpr,
    expected_nonneg: bool,
    expand_coefficients: bool,
    degree_budget: u64,
) -> Result<QFamilyVerdict> {
    let f = expr_factorization(expr)?;
    let polynomial = is_polynomial(&f);
    let degree = f.degree();
    let mut v = QFamilyVerdict {
        family,
        n: None,
        k: None,
        a: None,
        b: None,
        polynomial,
        nonneg: None,
        expected_nonneg,
        negative_positions: Vec::new(),
        degree,
        reciprocal: None,
        value_at_one: None,
        q_one_consistent: None,
        forms_agree: None,
    };
    if polynomial && expand_coefficients && degree as u64 <= degree_budget {
        let p = expand(&f)?;
        let report = is_nonneg(&p);
        v.nonneg = Some(report.nonneg);
        v.negative_positions = report.negatives;
        v.reciprocal = Some(is_reciprocal(&p));
        let at_one = p.eval_at_one();
        v.q_one_consistent = Some(specialize_at_one(expr)?.as_ref() == Some(&at_one));
        v.value_at_one = Some(at_one);
    }
    Ok(v)
}

/// The seven expressions at `n`, with whether non-negativity is claimed.
pub fn thm4_expressions(n: u64) -> Result<Vec<(FamilyId, QuotientExpr, bool)>> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let c = |x: u64| x.checked_mul(n).ok_or(Error::Overflow("cn"));
    Ok(vec![
        (FamilyId::Binom12n3n, QuotientExpr::single(1, c(6)? - 1, c(12)?, c(3)?)?, true),
        (FamilyId::Binom12n4n, QuotientExpr::single(1, c(6)? - 1, c(12)?, c(4)?)?, true),
        (FamilyId::Binom60n6n, QuotientExpr::single(1, c(30)? - 1, c(60)?, c(6)?)?, true),
        (FamilyId::Binom120n40n, QuotientExpr::single(1, c(30)? - 1, c(120)?, c(40)?)?, true),
        (FamilyId::Binom120n45n, QuotientExpr::single(1, c(30)? - 1, c(120)?, c(45)?)?, true),
        (FamilyId::Binom330n88n, QuotientExpr::single(1, c(66)? - 1, c(330)?, c(88)?)?, true),
        (FamilyId::Binom30n5n, conj74_expression(n)?, false),
    ])
}

fn conj74_expression(n: u64) -> Result<QuotientExpr> {
    QuotientExpr::new(vec![1, 1], vec![10 * n - 1, 15 * n - 1], 30 * n, 5 * n)
}

/// Seven verdicts at `n`. The seventh is claimed polynomial only.
pub fn verify_thm4(n: u64, expand_coefficients: bool, degree_budget: u64) -> Result<Vec<QFamilyVerdict>> {
    thm4_expressions(n)?
        .into_iter()
        .map(|(id, e, nonneg)| {
            Ok(evaluate(id, &e, nonneg, expand_coefficients, degree_budget)?
                .with_params(Some(n), None, None, None))
        })
        .collect()
}

/// `(1 - q^{gcd(k,n)})/(1 - q^n) [2n, n-k]_q` with `gcd(0, n) = n`.
pub fn verify_thm_kn(n: u64, k: u64, degree_budget: u64) -> Result<QFamilyVerdict> {
    if n == 0 || k > n {
        return Err(Error::invalid("need 0 <= k <= n, n >= 1"));
    }
    let g = num_integer::gcd(k, n);
    let e = QuotientExpr::single(g, n, 2 * n, n - k)?;
    Ok(evaluate(FamilyId::GcdKn, &e, true, true, degree_budget)?.with_params(Some(n), Some(k), None, None))
}

/// `B_{n,k}(q)` for `1 <= k <= n`, computed as the quotient and as
/// `[2n-1, n-k]_q - q^k [2n-1, n-k-1]_q`; the two must agree and be
/// non-negative.
pub fn b_nk_poly(n: u64, k: u64) -> Result<IntPoly> {
    if k == 0 || k > n {
        return Err(Error::invalid("B_{n,k} needs 1 <= k <= n"));
    }
    let quotient = expand(&expr_factorization(&QuotientExpr::single(k, n, 2 * n, n - k)?)?)?;
    let first = qbinom_poly(2 * n - 1, n - k)?;
    let difference = if k == n {
        first
    } else {
        let second = qbinom_poly(2 * n - 1, n - k - 1)?;
        let mut shifted = vec![BigInt::zero(); k as usize];
        shifted.extend(second.into_coeffs());
        &first - &IntPoly::new(shifted)
    };
    if quotient != difference {
        return Err(Error::ClaimViolated(format!("B_{{{n},{k}}} routes disagree")));
    }
    if !is_nonneg(&quotient).nonneg {
        return Err(Error::ClaimViolated(format!("B_{{{n},{k}}} has a negative coefficient")));
    }
    Ok(quotient)
}

/// `(1 - q^{gcd(a,b)})/(1 - q^{a+b}) [a+b, a]_q`. The exponent vector is
/// also checked against the closed form
/// `chi(d | gcd(a,b)) + floor((a+b-1)/d) - floor(a/d) - floor(b/d)`.
pub fn lemma_andrews_check(a: u64, b: u64, degree_budget: u64) -> Result<QFamilyVerdict> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("a and b must be positive"));
    }
    let g = num_integer::gcd(a, b);
    let e = QuotientExpr::single(g, a + b, a + b, a)?;
    let f = expr_factorization(&e)?;
    for d in 2..=a + b {
        let closed = i64::from(g % d == 0) + ((a + b - 1) / d) as i64 - (a / d) as i64 - (b / d) as i64;
        if f.exponent(d) != closed {
            return Err(Error::ClaimViolated(format!(
                "exponent of Phi_{d} for ({a},{b}): {} vs closed form {closed}",
                f.exponent(d)
            )));
        }
    }
    Ok(evaluate(FamilyId::Andrews, &e, true, true, degree_budget)?.with_params(None, None, Some(a), Some(b)))
}

/// Both forms of the `(an, bn+1)` quotient; delegates the verdict to
/// [`lemma_andrews_check`] at `(an, bn + 1)`.
pub fn verify_thm_anbn(a: u64, b: u64, n: u64, degree_budget: u64) -> Result<QFamilyVerdict> {
    if a == 0 || b == 0 || n == 0 {
        return Err(Error::invalid("a, b, n must be positive"));
    }
    let (an, bn1) = (a * n, b * n + 1);
    let g = num_integer::gcd(an, bn1);
    let first = expr_factorization(&QuotientExpr::single(g, bn1, an + bn1 - 1, an)?)?;
    let second = expr_factorization(&QuotientExpr::single(g, an + bn1, an + bn1, an)?)?;
    let mut v = lemma_andrews_check(an, bn1, degree_budget)?;
    v.family = FamilyId::Anbn;
    v.forms_agree = Some(first == second);
    Ok(v.with_params(Some(n), None, Some(a), Some(b)))
}

/// `C_{a,b,n}(q) = (1 - q^a)/(1 - q^{bn+1}) [an+bn, an]_q`, non-negative.
pub fn c_abn_poly(a: u64, b: u64, n: u64) -> Result<IntPoly> {
    if a == 0 || b == 0 || n == 0 {
        return Err(Error::invalid("a, b, n must be positive"));
    }
    let (an, bn1) = (a * n, b * n + 1);
    let g = num_integer::gcd(an, bn1);
    if g != num_integer::gcd(a, bn1) || a % g != 0 {
        return Err(Error::ClaimViolated(format!(
            "gcd(an, bn+1) = {g} should equal gcd(a, bn+1) and divide a"
        )));
    }
    let e = QuotientExpr::single(a, bn1, an + bn1 - 1, an)?;
    let f = expr_factorization(&e)?;
    if f.degree() as u64 > DEGREE_BUDGET {
        return Err(Error::Budget {
            what: "C_{a,b,n} degree",
            requested: f.degree() as u64,
            limit: DEGREE_BUDGET,
        });
    }
    let p = expand(&f)?;
    if !is_nonneg(&p).nonneg {
        return Err(Error::ClaimViolated(format!("C_{{{a},{b},{n}}} has a negative coefficient")));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conj74Report {
    pub n: u64,
    pub degree: u64,
    #[serde(with = "crate::serde_big::positions")]
    pub negative_positions: Vec<(u64, BigInt)>,
    /// Negatives are exactly `-1` at `q^1` and `q^{degree-1}`.
    pub conjecture_holds: bool,
}

/// Negative coefficients of `(1-q)^2/((1-q^{10n-1})(1-q^{15n-1})) [30n, 5n]_q`.
pub fn conj_330n88n_check(n: u64, degree_budget: u64) -> Result<Conj74Report> {
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let f = expr_factorization(&conj74_expression(n)?)?;
    let degree = f.degree() as u64;
    assert_eq!(degree, 125 * n * n - 25 * n + 4);
    if degree > degree_budget {
        return Err(Error::Budget {
            what: "[30n,5n] quotient degree",
            requested: degree,
            limit: degree_budget,
        });
    }
    let negatives = is_nonneg(&expand(&f)?).negatives;
    let minus_one = BigInt::from(-1);
    let conjecture_holds =
        negatives == vec![(1, minus_one.clone()), (125 * n * n - 25 * n + 3, minus_one)];
    Ok(Conj74Report {
        n,
        degree,
        negative_positions: negatives,
        conjecture_holds,
    })
}

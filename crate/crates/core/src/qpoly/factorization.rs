use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::cyclotomic::divisors;
use super::poly::{series_div_one_minus, series_mul_one_minus};
use super::IntPoly;
use crate::arith::{factorize, totient};
use crate::{Error, Result};

/// `sign * prod_d Phi_d(q)^{e_d}` with only nonzero exponents stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloFactorization {
    pub exponents: BTreeMap<u64, i64>,
    pub sign: i8,
}

impl Default for CycloFactorization {
    fn default() -> Self {
        CycloFactorization {
            exponents: BTreeMap::new(),
            sign: 1,
        }
    }
}

impl CycloFactorization {
    pub fn exponent(&self, d: u64) -> i64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    pub fn add_exponent(&mut self, d: u64, delta: i64) {
        if delta == 0 {
            return;
        }
        let e = self.exponents.entry(d).or_insert(0);
        *e += delta;
        if *e == 0 {
            self.exponents.remove(&d);
        }
    }

    /// Entries with negative exponent, i.e. the cyclotomic factors left over
    /// in the denominator.
    pub fn negative_exponents(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.exponents
            .iter()
            .filter(|(_, &e)| e < 0)
            .map(|(&d, &e)| (d, e))
    }

    /// `sum e_d * deg Phi_d`; the degree of the expression when it is a
    /// polynomial.
    pub fn degree(&self) -> i64 {
        self.exponents
            .iter()
            .map(|(&d, &e)| e * totient(d).expect("d >= 1") as i64)
            .sum()
    }
}

/// `prod (1 - q^{m_i}) / prod (1 - q^{n_j}) * [M, K]_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientExpr {
    numerator_ms: Vec<u64>,
    denominator_ns: Vec<u64>,
    binom_m: u64,
    binom_k: u64,
}

impl QuotientExpr {
    /// Balanced expressions only: an equal number of `(1 - q^x)` factors
    /// above and below, so the signs and the `Phi_1` factors cancel.
    pub fn new(
        numerator_ms: Vec<u64>,
        denominator_ns: Vec<u64>,
        binom_m: u64,
        binom_k: u64,
    ) -> Result<Self> {
        if numerator_ms.len() != denominator_ns.len() {
            return Err(Error::Unbalanced {
                numerator: numerator_ms.len(),
                denominator: denominator_ns.len(),
            });
        }
        if numerator_ms.iter().chain(&denominator_ns).any(|&x| x == 0) {
            return Err(Error::invalid("factor exponents must be positive"));
        }
        if binom_k > binom_m {
            return Err(Error::KExceedsM {
                m: binom_m,
                k: binom_k,
            });
        }
        Ok(QuotientExpr {
            numerator_ms,
            denominator_ns,
            binom_m,
            binom_k,
        })
    }

    /// The bare q-binomial `[m, k]_q`.
    pub fn qbinom(m: u64, k: u64) -> Result<Self> {
        Self::new(Vec::new(), Vec::new(), m, k)
    }

    /// `(1 - q^num) / (1 - q^den) * [m, k]_q`.
    pub fn single(num: u64, den: u64, m: u64, k: u64) -> Result<Self> {
        Self::new(vec![num], vec![den], m, k)
    }

    pub fn numerator_ms(&self) -> &[u64] {
        &self.numerator_ms
    }

    pub fn denominator_ns(&self) -> &[u64] {
        &self.denominator_ns
    }

    pub fn binom_m(&self) -> u64 {
        self.binom_m
    }

    pub fn binom_k(&self) -> u64 {
        self.binom_k
    }
}

/// Exponent vector of `[m, k]_q`: `e_d = floor(m/d) - floor(k/d) - floor((m-k)/d)`.
pub fn qbinom_factorization(m: u64, k: u64) -> Result<CycloFactorization> {
    if k > m {
        return Err(Error::KExceedsM { m, k });
    }
    let mut f = CycloFactorization::default();
    for d in 2..=m {
        f.add_exponent(d, (m / d - k / d - (m - k) / d) as i64);
    }
    Ok(f)
}

/// Exponent vector of a balanced quotient expression. `d = 1` contributions
/// cancel, and the sign is `+1`.
pub fn expr_factorization(e: &QuotientExpr) -> Result<CycloFactorization> {
    let mut f = qbinom_factorization(e.binom_m, e.binom_k)?;
    for &m in &e.numerator_ms {
        for d in divisors(m).into_iter().skip(1) {
            f.add_exponent(d, 1);
        }
    }
    for &n in &e.denominator_ns {
        for d in divisors(n).into_iter().skip(1) {
            f.add_exponent(d, -1);
        }
    }
    Ok(f)
}

/// All `e_d >= 0`. Since every `Phi_d` is irreducible this is exactly
/// polynomiality.
pub fn is_polynomial(f: &CycloFactorization) -> bool {
    f.exponents.values().all(|&e| e >= 0)
}

/// Multiplies out `sign * prod Phi_d^{e_d}`.
///
/// Each `Phi_d` (d >= 2) equals `prod_{t | d} (1 - q^t)^{mu(d/t)}`, so the
/// exponent vector is first pulled back to a multiset of `(1 - q^t)^{+-1}`
/// factors, which are then applied as power series truncated just past the
/// known final degree. Each factor costs one pass over the coefficients.
pub fn expand(f: &CycloFactorization) -> Result<IntPoly> {
    if !is_polynomial(f) {
        return Err(Error::NotPolynomial);
    }
    let degree = usize::try_from(f.degree()).map_err(|_| Error::Overflow("degree"))?;
    let mut sign = i64::from(f.sign);
    let mut powers: BTreeMap<u64, i64> = BTreeMap::new();
    for (&d, &e) in &f.exponents {
        if d == 1 {
            // Phi_1 = q - 1 = -(1 - q)
            *powers.entry(1).or_default() += e;
            if e % 2 != 0 {
                sign = -sign;
            }
            continue;
        }
        let primes: Vec<u64> = factorize(d)?.primes().collect();
        for mask in 0u32..(1 << primes.len()) {
            let s: u64 = (0..primes.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| primes[i])
                .product();
            let mu = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            *powers.entry(d / s).or_default() += mu * e;
        }
    }
    let mut ups = Vec::new();
    let mut downs = Vec::new();
    for (&t, &e) in &powers {
        let list = if e > 0 { &mut ups } else { &mut downs };
        list.extend(std::iter::repeat_n(t as usize, e.unsigned_abs() as usize));
    }
    let mut c = vec![BigInt::zero(); degree + 1];
    c[0] = BigInt::one();
    // alternate factors up and down to keep intermediate coefficients small
    let (mut ui, mut di) = (ups.iter().rev().peekable(), downs.iter().rev().peekable());
    loop {
        match (ui.next(), di.next()) {
            (None, None) => break,
            (u, d) => {
                if let Some(&t) = u {
                    if t <= degree {
                        series_mul_one_minus(&mut c, t);
                    }
                }
                if let Some(&t) = d {
                    if t <= degree {
                        series_div_one_minus(&mut c, t);
                    }
                }
            }
        }
    }
    if sign < 0 {
        for x in c.iter_mut() {
            *x = -std::mem::take(x);
        }
    }
    assert_eq!(
        c[degree],
        BigInt::from(f.sign),
        "leading coefficient of a product of monic cyclotomics"
    );
    Ok(IntPoly::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::cyclotomic;

    fn exps(f: &CycloFactorization) -> Vec<(u64, i64)> {
        f.exponents.iter().map(|(&d, &e)| (d, e)).collect()
    }

    fn schoolbook(f: &CycloFactorization) -> IntPoly {
        let mut acc = IntPoly::from_i64s(&[f.sign as i64]);
        for (&d, &e) in &f.exponents {
            for _ in 0..e {
                acc = &acc * &cyclotomic(d);
            }
        }
        acc
    }

    #[test]
    fn qbinom_exponents() {
        assert_eq!(exps(&qbinom_factorization(4, 2).unwrap()), vec![(3, 1), (4, 1)]);
        assert!(qbinom_factorization(9, 0).unwrap().exponents.is_empty());
        assert_eq!(
            exps(&qbinom_factorization(6, 3).unwrap()),
            vec![(2, 1), (4, 1), (5, 1), (6, 1)]
        );
        assert!(qbinom_factorization(2, 3).is_err());
    }

    #[test]
    fn qbinom_6_3_exponents_match_division() {
        // multiplicity of Phi_d in [6,3]_q by repeated exact division
        let p = expand(&qbinom_factorization(6, 3).unwrap()).unwrap();
        for d in 2..=6u64 {
            let mut rest = p.clone();
            let mut mult = 0;
            while let Some(q) = rest.div_exact(&cyclotomic(d)) {
                rest = q;
                mult += 1;
            }
            assert_eq!(mult, qbinom_factorization(6, 3).unwrap().exponent(d), "d = {d}");
        }
    }

    #[test]
    fn expansion_examples() {
        let f = qbinom_factorization(4, 2).unwrap();
        assert_eq!(expand(&f).unwrap(), IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(expand(&CycloFactorization::default()).unwrap(), IntPoly::one());
        let e = QuotientExpr::single(1, 5, 12, 3).unwrap();
        let p = expand(&expr_factorization(&e).unwrap()).unwrap();
        assert_eq!(p.degree(), Some(23));
    }

    #[test]
    fn expression_examples() {
        let e = QuotientExpr::single(1, 3, 4, 2).unwrap();
        let f = expr_factorization(&e).unwrap();
        assert!(is_polynomial(&f));
        assert_eq!(expand(&f).unwrap(), IntPoly::from_i64s(&[1, 0, 1]));

        let e = QuotientExpr::single(2, 4, 4, 2).unwrap();
        let f = expr_factorization(&e).unwrap();
        assert_eq!((f.exponent(2), f.exponent(3), f.exponent(4)), (0, 1, 0));
        assert_eq!(expand(&f).unwrap(), IntPoly::from_i64s(&[1, 1, 1]));

        let e = QuotientExpr::single(1, 5, 12, 3).unwrap();
        assert!(is_polynomial(&expr_factorization(&e).unwrap()));

        // (1 - q^4) brings Phi_2 into the denominator
        let f = expr_factorization(&QuotientExpr::single(1, 4, 4, 2).unwrap()).unwrap();
        assert_eq!(f.exponent(2), -1);
        assert!(!is_polynomial(&f));

        let f = expr_factorization(&QuotientExpr::single(1, 5, 4, 2).unwrap()).unwrap();
        assert_eq!(f.exponent(5), -1);
        assert!(!is_polynomial(&f));
        assert_eq!(expand(&f), Err(Error::NotPolynomial));
    }

    #[test]
    fn unbalanced_rejected() {
        assert_eq!(
            QuotientExpr::new(vec![1, 1], vec![3], 4, 2),
            Err(Error::Unbalanced {
                numerator: 2,
                denominator: 1
            })
        );
        assert!(QuotientExpr::new(vec![0], vec![3], 4, 2).is_err());
    }

    #[test]
    fn phi_one_and_sign() {
        let mut f = CycloFactorization::default();
        f.add_exponent(1, 1);
        assert_eq!(expand(&f).unwrap(), IntPoly::from_i64s(&[-1, 1]));
        f.add_exponent(6, 2);
        assert_eq!(expand(&f).unwrap(), schoolbook(&f));
        f.sign = -1;
        assert_eq!(expand(&f).unwrap(), schoolbook(&f));
    }

    #[test]
    fn series_expansion_matches_schoolbook_product() {
        for (m, k) in [(10, 4), (13, 6), (20, 7)] {
            let f = qbinom_factorization(m, k).unwrap();
            assert_eq!(expand(&f).unwrap(), schoolbook(&f));
        }
        let mut f = CycloFactorization::default();
        for (d, e) in [(30, 2), (105, 1), (12, 3), (7, 1)] {
            f.add_exponent(d, e);
        }
        assert_eq!(expand(&f).unwrap(), schoolbook(&f));
    }
}

//! Exact polynomial algebra in `q`: cyclotomic polynomials, cyclotomic
//! exponent vectors of q-binomial quotients, expansion, and the coefficient
//! predicates (reciprocal, unimodal, non-negative).
//!
//! The exponent vector is the canonical form. Deciding polynomiality needs
//! only floor arithmetic; coefficients are produced on demand.

mod cyclotomic;
mod factorization;
mod poly;
mod predicates;

use num_bigint::BigInt;

pub use cyclotomic::cyclotomic;
pub use factorization::{
    expand, expr_factorization, is_polynomial, qbinom_factorization, CycloFactorization,
    QuotientExpr,
};
pub use poly::IntPoly;
pub use predicates::{is_nonneg, is_reciprocal, is_unimodal, lemma_rsw_check, NonnegReport};

use crate::{Error, Result};

/// Default largest degree that gets expanded to coefficients.
pub const DEGREE_BUDGET: u64 = 100_000;

/// Gaussian polynomial `[m, k]_q` from the q-Pascal recurrence
/// `[m, k] = [m-1, k-1] + q^k [m-1, k]`, independent of the exponent-vector
/// route.
pub fn qbinom_poly(m: u64, k: u64) -> Result<IntPoly> {
    qbinom_poly_with_budget(m, k, DEGREE_BUDGET)
}

pub fn qbinom_poly_with_budget(m: u64, k: u64, budget: u64) -> Result<IntPoly> {
    if k > m {
        return Err(Error::KExceedsM { m, k });
    }
    let degree = k * (m - k);
    if degree > budget {
        return Err(Error::Budget {
            what: "q-binomial degree",
            requested: degree,
            limit: budget,
        });
    }
    let k = k as usize;
    // row[j] = [i, j]_q as coefficient vectors, for the current i
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for i in 1..=m as usize {
        if i <= k {
            row.push(vec![BigInt::from(1)]);
        }
        for j in (1..row.len().min(i)).rev() {
            // [i, j] = [i-1, j-1] + q^j [i-1, j]
            let prev = std::mem::take(&mut row[j]);
            let mut next = row[j - 1].clone();
            let len = next.len().max(prev.len() + j);
            next.resize(len, BigInt::default());
            for (t, c) in prev.into_iter().enumerate() {
                next[t + j] += c;
            }
            row[j] = next;
        }
    }
    Ok(IntPoly::new(row.swap_remove(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binom_exact;

    #[test]
    fn pascal_examples() {
        assert_eq!(qbinom_poly(4, 2).unwrap(), IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom_poly(9, 0).unwrap(), IntPoly::one());
        assert_eq!(qbinom_poly(9, 9).unwrap(), IntPoly::one());
        assert_eq!(qbinom_poly(3, 1).unwrap(), IntPoly::from_i64s(&[1, 1, 1]));
        assert!(qbinom_poly(3, 4).is_err());
        assert!(matches!(
            qbinom_poly_with_budget(20, 10, 99),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn q_equals_one_gives_binomial() {
        for m in 0..=40 {
            for k in 0..=m {
                let v = qbinom_poly(m, k).unwrap().eval_at_one();
                assert_eq!(v, BigInt::from(binom_exact(m, k).unwrap()));
            }
        }
    }

    #[test]
    fn classical_shape_of_gaussian_polynomials() {
        for m in 0..=30 {
            for k in 0..=m {
                let p = qbinom_poly(m, k).unwrap();
                assert!(is_reciprocal(&p), "[{m},{k}]");
                assert!(is_unimodal(&p), "[{m},{k}]");
                assert!(is_nonneg(&p).nonneg);
            }
        }
    }
}

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::{Error, Result};

/// `p_i = p_{d-i}` for all `i`. The zero polynomial counts as reciprocal.
pub fn is_reciprocal(p: &IntPoly) -> bool {
    let c = p.coeffs();
    c.iter().eq(c.iter().rev())
}

/// Non-negative coefficients that weakly rise to a peak and then weakly fall.
pub fn is_unimodal(p: &IntPoly) -> bool {
    let c = p.coeffs();
    if c.iter().any(Signed::is_negative) {
        return false;
    }
    let mut descending = false;
    for w in c.windows(2) {
        if w[1] < w[0] {
            descending = true;
        } else if w[1] > w[0] && descending {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonnegReport {
    pub nonneg: bool,
    #[serde(with = "crate::serde_big::positions")]
    pub negatives: Vec<(u64, BigInt)>,
}

/// Non-negativity verdict with every negative coefficient listed.
pub fn is_nonneg(p: &IntPoly) -> NonnegReport {
    let negatives: Vec<(u64, BigInt)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_negative())
        .map(|(i, c)| (i as u64, c.clone()))
        .collect();
    NonnegReport {
        nonneg: negatives.is_empty(),
        negatives,
    }
}

/// Forms `A = (1 - q^m) / (1 - q^n) * P` by exact division and reports
/// whether `A` has non-negative coefficients. For reciprocal unimodal `P`
/// with `m <= n` this must always hold.
pub fn lemma_rsw_check(p: &IntPoly, m: u64, n: u64) -> Result<bool> {
    if m == 0 || m > n {
        return Err(Error::invalid(format!("need 1 <= m <= n, got m={m}, n={n}")));
    }
    if p.is_zero() {
        return Ok(true);
    }
    let mut num = p.clone();
    num.mul_one_minus_q_pow(m as usize);
    let a = num
        .div_one_minus_q_pow(n as usize)
        .ok_or(Error::NotPolynomial)?;
    Ok(a.coeffs().iter().all(|c| !c.is_negative() || c.is_zero()))
}

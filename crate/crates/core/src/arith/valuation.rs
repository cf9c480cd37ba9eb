use serde::{Deserialize, Serialize};

use super::is_prime;
use crate::{Error, Result};

/// `v_p(binom(m, k))` together with the Kummer carry count that must agree
/// with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationCertificate {
    pub p: u64,
    pub m: u64,
    pub k: u64,
    pub valuation: i64,
    pub carry_count: u64,
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn floor_sum(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum(mut n: u64, p: u64) -> u64 {
    let mut s = 0;
    while n > 0 {
        s += n % p;
        n /= p;
    }
    s
}

/// `v_p(n!)`. Computed both as `sum floor(n / p^l)` and as
/// `(n - s_p(n)) / (p - 1)`; the two must agree.
pub fn legendre_valuation_factorial(n: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    let by_floors = floor_sum(n, p);
    let by_digits = (n - digit_sum(n, p)) / (p - 1);
    assert_eq!(by_floors, by_digits, "Legendre formulas disagree at n={n}, p={p}");
    Ok(by_floors)
}

/// Number of carries when adding `x` and `y` in base `p`.
pub fn carries_in_base(mut x: u64, mut y: u64, p: u64) -> u64 {
    let mut carry = 0;
    let mut count = 0;
    while x > 0 || y > 0 || carry > 0 {
        let s = x % p + y % p + carry;
        carry = u64::from(s >= p);
        count += carry;
        x /= p;
        y /= p;
    }
    count
}

/// `v_p(binom(m, k))` via Legendre, cross-checked against Kummer's carries.
pub fn binom_valuation(m: u64, k: u64, p: u64) -> Result<ValuationCertificate> {
    if k > m {
        return Err(Error::KExceedsM { m, k });
    }
    let valuation = legendre_valuation_factorial(m, p)? as i64
        - legendre_valuation_factorial(k, p)? as i64
        - legendre_valuation_factorial(m - k, p)? as i64;
    let carry_count = carries_in_base(k, m - k, p);
    assert!(valuation >= 0);
    assert_eq!(
        valuation as u64, carry_count,
        "Kummer mismatch at m={m}, k={k}, p={p}"
    );
    Ok(ValuationCertificate {
        p,
        m,
        k,
        valuation,
        carry_count,
    })
}

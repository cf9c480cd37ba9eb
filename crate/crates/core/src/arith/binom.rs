use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{binom_valuation, factorize, ValuationCertificate};
use crate::{Error, Result};

/// Largest `m` accepted by [`binom_exact`].
pub const BINOM_EXACT_BUDGET: u64 = 100_000;

/// Exact `binom(m, k)`, multiplicative formula with running exact division.
pub fn binom_exact(m: u64, k: u64) -> Result<BigUint> {
    binom_exact_with_budget(m, k, BINOM_EXACT_BUDGET)
}

pub fn binom_exact_with_budget(m: u64, k: u64, budget: u64) -> Result<BigUint> {
    if k > m {
        return Err(Error::KExceedsM { m, k });
    }
    if m > budget {
        return Err(Error::Budget {
            what: "exact binomial top index",
            requested: m,
            limit: budget,
        });
    }
    let k = k.min(m - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = binom(m - k + i - 1, i - 1), so the division is exact
        acc *= m - k + i;
        acc /= i;
    }
    Ok(acc)
}

/// One prime of the modulus: required exponent versus the binomial's valuation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCheck {
    pub required: u32,
    pub certificate: ValuationCertificate,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialDivisibility {
    pub m: u64,
    pub k: u64,
    pub modulus: u64,
    pub divides: bool,
    pub checks: Vec<PrimeCheck>,
}

impl BinomialDivisibility {
    /// The first prime whose valuation falls short, if any.
    pub fn failing_prime(&self) -> Option<&PrimeCheck> {
        self.checks.iter().find(|c| !c.satisfied)
    }
}

/// Decides `modulus | binom(m, k)` prime by prime, never forming the binomial.
pub fn divides_binomial(m: u64, k: u64, modulus: u64) -> Result<BinomialDivisibility> {
    if k > m {
        return Err(Error::KExceedsM { m, k });
    }
    if modulus == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    let checks = factorize(modulus)?
        .factors
        .into_iter()
        .map(|(p, e)| {
            let certificate = binom_valuation(m, k, p)?;
            Ok(PrimeCheck {
                required: e,
                satisfied: certificate.valuation >= i64::from(e),
                certificate,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BinomialDivisibility {
        m,
        k,
        modulus,
        divides: checks.iter().all(|c| c.satisfied),
        checks,
    })
}

//! Integer primitives: sieve, factorization, totient, multiplicative order,
//! p-adic valuations of factorials and binomials, and Lucas' theorem.
//!
//! Index-like quantities are `u64` and every product that could overflow is
//! checked; values that outgrow a machine word are `BigUint`.

mod binom;
mod lucas;
mod primes;
mod valuation;

pub use binom::{
    binom_exact, binom_exact_with_budget, divides_binomial, BinomialDivisibility, PrimeCheck,
    BINOM_EXACT_BUDGET,
};
pub use lucas::{base_p_digits, lucas_binom_mod_p};
pub use primes::{
    factorize, factorize_with_ceiling, is_prime, primes_up_to, primes_up_to_with_budget,
    Factorization, FACTOR_CEILING, SIEVE_BUDGET,
};
pub use valuation::{
    binom_valuation, carries_in_base, digit_sum, legendre_valuation_factorial, ValuationCertificate,
};

use crate::{Error, Result};

/// Greatest common divisor; `gcd(a, 0) = a`. Both arguments zero is rejected.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::invalid("gcd(0, 0) is undefined"));
    }
    Ok(num_integer::gcd(a, b))
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Euler's totient, from the factorization of `n`.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("totient(0) is undefined"));
    }
    let f = factorize(n)?;
    Ok(f.factors
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// Product of the distinct primes dividing `n` (`rad(1) = 1`).
pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.factors.iter().map(|&(p, _)| p).product())
}

/// Smallest `s >= 1` with `p^s = 1 (mod m)`.
///
/// Starts from `phi(m)` and strips prime factors while the power stays 1, so
/// the result divides `phi(m)` by construction; this is re-checked.
pub fn multiplicative_order(p: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::invalid(format!("modulus must be >= 2, got {m}")));
    }
    if num_integer::gcd(p, m) != 1 {
        return Err(Error::NotCoprime(p, m));
    }
    let phi = totient(m)?;
    let mut s = phi;
    for &(q, _) in &factorize(phi)?.factors {
        while s % q == 0 && pow_mod(p, s / q, m) == 1 {
            s /= q;
        }
    }
    assert_eq!(pow_mod(p, s, m), 1);
    assert_eq!(phi % s, 0, "order must divide the totient");
    Ok(s)
}

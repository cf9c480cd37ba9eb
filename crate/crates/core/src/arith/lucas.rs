use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::{is_prime, mul_mod, pow_mod};
use crate::{Error, Result};

/// Base-`p` digits of `n`, least significant first; `0` gives `[0]`.
pub fn base_p_digits(n: &BigUint, p: u64) -> Vec<u64> {
    assert!(p >= 2, "base must be at least 2");
    if n.is_zero() {
        return vec![0];
    }
    let base = BigUint::from(p);
    let mut rest = n.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let r = &rest % &base;
        digits.push(r.to_u64().expect("digit below base"));
        rest /= &base;
    }
    digits
}

// binom(a, b) mod p for 0 <= a, b < p
fn small_binom_mod(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1;
    let mut den = 1;
    for j in 0..b {
        num = mul_mod(num, a - j, p);
        den = mul_mod(den, j + 1, p);
    }
    mul_mod(num, pow_mod(den, p - 2, p), p)
}

/// `binom(m, k) mod p` as the product of digitwise binomials.
pub fn lucas_binom_mod_p(m: &BigUint, k: &BigUint, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k > m {
        return Ok(0);
    }
    let md = base_p_digits(m, p);
    let kd = base_p_digits(k, p);
    let mut acc = 1 % p;
    for (i, &a) in md.iter().enumerate() {
        let b = kd.get(i).copied().unwrap_or(0);
        acc = mul_mod(acc, small_binom_mod(a, b, p), p);
        if acc == 0 {
            break;
        }
    }
    Ok(acc)
}

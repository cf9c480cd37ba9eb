use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use super::{mul_mod, pow_mod};
use crate::{Error, Result};

/// Default upper limit for a single sieve.
pub const SIEVE_BUDGET: u64 = 100_000_000;

/// Default largest integer [`factorize`] accepts.
pub const FACTOR_CEILING: u64 = 100_000_000;

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
    pub value: u64,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

// Shared and append-only: a larger table replaces a smaller one wholesale
// under the write lock, so readers never see a partial fill.
static TABLE: RwLock<Option<Arc<PrimeTable>>> = RwLock::new(None);

fn sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    // index i stands for 2i + 1
    let len = (limit as usize - 1) / 2 + 1;
    let mut composite = vec![false; len];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < len {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(len / 8 + 1);
    primes.push(2);
    primes.extend(
        composite
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| !c)
            .map(|(i, _)| 2 * i as u64 + 1),
    );
    primes
}

fn table_covering(limit: u64) -> Arc<PrimeTable> {
    if let Some(t) = TABLE.read().unwrap().as_ref() {
        if t.limit >= limit {
            return Arc::clone(t);
        }
    }
    let mut guard = TABLE.write().unwrap();
    if let Some(t) = guard.as_ref() {
        if t.limit >= limit {
            return Arc::clone(t);
        }
    }
    let grown = guard.as_ref().map_or(0, |t| t.limit.saturating_mul(2));
    let target = limit.max(grown).max(1 << 16);
    let table = Arc::new(PrimeTable {
        limit: target,
        primes: sieve(target),
    });
    *guard = Some(Arc::clone(&table));
    table
}

/// All primes `<= limit`, ascending, subject to [`SIEVE_BUDGET`].
pub fn primes_up_to(limit: u64) -> Result<Vec<u64>> {
    primes_up_to_with_budget(limit, SIEVE_BUDGET)
}

pub fn primes_up_to_with_budget(limit: u64, budget: u64) -> Result<Vec<u64>> {
    if limit > budget {
        return Err(Error::Budget {
            what: "sieve limit",
            requested: limit,
            limit: budget,
        });
    }
    if limit > SIEVE_BUDGET {
        // beyond the shared cache's range: sieve privately
        return Ok(sieve(limit));
    }
    let table = table_covering(limit);
    let end = table.primes.partition_point(|&p| p <= limit);
    Ok(table.primes[..end].to_vec())
}

/// Deterministic primality for every `u64`.
///
/// Small inputs go through trial division; the rest use Miller-Rabin with the
/// first twelve prime bases, which has no false positives below 3.3e24.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Complete factorization by trial division over sieved primes up to the
/// square root, rejecting `n` above [`FACTOR_CEILING`].
pub fn factorize(n: u64) -> Result<Factorization> {
    factorize_with_ceiling(n, FACTOR_CEILING)
}

pub fn factorize_with_ceiling(n: u64, ceiling: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::invalid("cannot factor 0"));
    }
    if n > ceiling {
        return Err(Error::Budget {
            what: "factorization input",
            requested: n,
            limit: ceiling,
        });
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let root = (n as f64).sqrt() as u64 + 1;
    let table = table_covering(root);
    for &p in &table.primes {
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    debug_assert!(factors.iter().all(|&(p, _)| is_prime(p)));
    Ok(Factorization { factors, value: n })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn small_sieves() {
        assert_eq!(primes_up_to(10).unwrap(), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(2).unwrap(), vec![2]);
        assert!(primes_up_to(1).unwrap().is_empty());
    }

    #[test]
    fn prime_count_to_3761_matches_trial_division() {
        let sieved = primes_up_to(3761).unwrap();
        let brute: Vec<u64> = (2..=3761).filter(|&n| trial_division_is_prime(n)).collect();
        assert_eq!(sieved, brute);
        // 3761 itself is prime, so it is the last entry
        assert_eq!(sieved.len(), 523);
        assert_eq!(*sieved.last().unwrap(), 3761);
    }

    #[test]
    fn sieve_budget_rejected() {
        assert!(matches!(
            primes_up_to_with_budget(1000, 999),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn primality_cases() {
        assert!(is_prime(199));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(is_prime(3761));
        assert!(!is_prime(3763)); // 53 * 71
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn factorization_cases() {
        assert_eq!(factorize(126).unwrap().factors, vec![(2, 1), (3, 2), (7, 1)]);
        assert!(factorize(1).unwrap().factors.is_empty());
        assert_eq!(factorize(10045).unwrap().factors, vec![(5, 1), (7, 2), (41, 1)]);
        assert_eq!(factorize(99_999_989).unwrap().factors, vec![(99_999_989, 1)]);
        assert!(factorize(0).is_err());
        assert!(matches!(
            factorize(FACTOR_CEILING + 1),
            Err(Error::Budget { .. })
        ));
        assert_eq!(
            factorize_with_ceiling(1 << 40, u64::MAX).unwrap().factors,
            vec![(2, 40)]
        );
    }

    #[test]
    fn factorization_invariants() {
        for n in 1..3000u64 {
            let f = factorize(n).unwrap();
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors.iter().all(|&(p, e)| e >= 1 && is_prime(p)));
            let prod: u64 = f.factors.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn concurrent_sieve_reads_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || primes_up_to(50_000 + 70_000 * i).unwrap()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        let full = sieve(50_000 + 70_000 * 7);
        for r in results {
            assert_eq!(&full[..r.len()], &r[..]);
        }
    }
}

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::IntPoly;
use crate::arith::factorize;

static CACHE: RwLock<Option<HashMap<u64, Arc<IntPoly>>>> = RwLock::new(None);

/// All divisors of `n`, ascending.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let f = factorize(n).expect("divisor enumeration within factorization ceiling");
    let mut divs = vec![1u64];
    for (p, e) in f.factors {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// The `d`-th cyclotomic polynomial, by exact division of `q^d - 1` by the
/// cyclotomic polynomials of the proper divisors. Memoized process-wide.
pub fn cyclotomic(d: u64) -> Arc<IntPoly> {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(hit) = CACHE.read().unwrap().as_ref().and_then(|m| m.get(&d)) {
        return Arc::clone(hit);
    }
    let mut product = IntPoly::one();
    for e in divisors(d) {
        if e < d {
            product = &product * &cyclotomic(e);
        }
    }
    let phi = IntPoly::q_pow_minus_one(d as usize)
        .div_exact(&product)
        .expect("q^d - 1 is divisible by the proper-divisor cyclotomics");
    let phi = Arc::new(phi);
    let mut guard = CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry(d).or_insert(phi))
}

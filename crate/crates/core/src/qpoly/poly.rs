use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `q` with exact integer coefficients; index `i` holds
/// the coefficient of `q^i`. Never stores a trailing zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `1 - q^m`.
    pub fn one_minus_q_pow(m: usize) -> Self {
        let mut c = vec![BigInt::zero(); m + 1];
        c[0] += 1;
        c[m] -= 1;
        Self::new(c)
    }

    /// `q^d - 1`.
    pub fn q_pow_minus_one(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] -= 1;
        c[d] += 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Multiplies by `1 - q^m` in place.
    pub fn mul_one_minus_q_pow(&mut self, m: usize) {
        if self.is_zero() || m == 0 {
            self.coeffs.clear();
            return;
        }
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + m, BigInt::zero());
        series_mul_one_minus(&mut self.coeffs, m);
        let c = std::mem::take(&mut self.coeffs);
        *self = Self::new(c);
    }

    /// Exact quotient by `1 - q^n`, or `None` if it leaves a remainder.
    pub fn div_one_minus_q_pow(&self, n: usize) -> Option<IntPoly> {
        assert!(n >= 1);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let deg = self.coeffs.len() - 1;
        if deg < n {
            return None;
        }
        let mut c = self.coeffs.clone();
        series_div_one_minus(&mut c, n);
        // the power series quotient is a polynomial iff it vanishes past deg - n
        if c[deg - n + 1..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        c.truncate(deg - n + 1);
        Some(Self::new(c))
    }

    /// Exact long division over the integers. `None` when `divisor` does not
    /// divide `self` in `Z[q]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }
}

/// In-place multiplication of a truncated power series by `1 - q^t`.
pub(crate) fn series_mul_one_minus(c: &mut [BigInt], t: usize) {
    for i in (t..c.len()).rev() {
        let (lo, hi) = c.split_at_mut(i);
        let src = &lo[i - t];
        if !src.is_zero() {
            hi[0] -= src;
        }
    }
}

/// In-place division of a truncated power series by `1 - q^t`.
pub(crate) fn series_div_one_minus(c: &mut [BigInt], t: usize) {
    for i in t..c.len() {
        let (lo, hi) = c.split_at_mut(i);
        let src = &lo[i - t];
        if !src.is_zero() {
            hi[0] += src;
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    /// Schoolbook product.
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_degree() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_i64s(&[0, 0]), IntPoly::zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = IntPoly::from_i64s(&[1, 1]);
        let b = IntPoly::from_i64s(&[1, -1]);
        assert_eq!(&a * &b, IntPoly::from_i64s(&[1, 0, -1]));
        assert_eq!(&a + &b, IntPoly::from_i64s(&[2]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(4));
    }

    #[test]
    fn exact_division() {
        let p = IntPoly::from_i64s(&[1, 1, 2, 1, 1]);
        let d = IntPoly::from_i64s(&[1, 0, 1]);
        assert_eq!(p.div_exact(&d), Some(IntPoly::from_i64s(&[1, 1, 1])));
        assert_eq!(p.div_exact(&IntPoly::from_i64s(&[1, 1])), None);
        assert_eq!(
            IntPoly::from_i64s(&[2, 4]).div_exact(&IntPoly::from_i64s(&[2])),
            Some(IntPoly::from_i64s(&[1, 2]))
        );
        assert_eq!(IntPoly::from_i64s(&[1, 4]).div_exact(&IntPoly::from_i64s(&[2])), None);
    }

    #[test]
    fn one_minus_q_ops() {
        let mut p = IntPoly::from_i64s(&[1, 1, 1]);
        p.mul_one_minus_q_pow(3);
        assert_eq!(p, IntPoly::from_i64s(&[1, 1, 1, -1, -1, -1]));
        let back = p.div_one_minus_q_pow(3).unwrap();
        assert_eq!(back, IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(IntPoly::from_i64s(&[1, 0, 0, -1]).div_one_minus_q_pow(2), None);
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64s(&[1, 1, 2, 0, -1]).to_string(), "1 + q + 2q^2 - q^4");
        assert_eq!(IntPoly::from_i64s(&[0, -3]).to_string(), "-3q");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}

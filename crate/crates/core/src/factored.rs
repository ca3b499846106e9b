//! Exact positive integers stored as prime factorizations.
//!
//! Multiplicative indices of the lattice families have exponents that grow
//! quadratically in the dimension (`3^{72n^2}` and the like), so values are
//! kept as `prime -> exponent` maps and never expanded unless asked.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("zero has no prime factorization")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// A positive integer as a canonical `prime -> exponent` map.
///
/// Zero exponents are never stored, so the empty map is `1` and derived
/// equality is integer equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredInteger {
    factors: BTreeMap<u64, BigUint>,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FactoredInteger {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors `value` by trial division.
    pub fn from_u64(mut value: u64) -> Result<Self, FactorError> {
        if value == 0 {
            return Err(FactorError::Zero);
        }
        let mut factors = BTreeMap::new();
        let mut p = 2u64;
        while p.saturating_mul(p) <= value {
            let mut e = 0u32;
            while value.is_multiple_of(p) {
                value /= p;
                e += 1;
            }
            if e > 0 {
                factors.insert(p, BigUint::from(e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if value > 1 {
            *factors.entry(value).or_insert_with(BigUint::zero) += 1u32;
        }
        Ok(Self { factors })
    }

    /// `prime^exponent`. The base must be prime.
    pub fn prime_power(prime: u64, exponent: impl Into<BigUint>) -> Result<Self, FactorError> {
        if !is_prime(prime) {
            return Err(FactorError::NotPrime(prime));
        }
        let exponent = exponent.into();
        let mut factors = BTreeMap::new();
        if !exponent.is_zero() {
            factors.insert(prime, exponent);
        }
        Ok(Self { factors })
    }

    /// Builds a value from `(prime, exponent)` pairs; repeated primes add up.
    pub fn from_factors<I, E>(pairs: I) -> Result<Self, FactorError>
    where
        I: IntoIterator<Item = (u64, E)>,
        E: Into<BigUint>,
    {
        pairs.into_iter().try_fold(
            Self::one(),
            |acc, (p, e)| Ok(acc * Self::prime_power(p, e)?),
        )
    }

    pub fn exponent(&self, prime: u64) -> BigUint {
        self.factors.get(&prime).cloned().unwrap_or_default()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, &BigUint)> {
        self.factors.iter().map(|(&p, e)| (p, e))
    }

    /// Exponent-wise sum.
    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, e) in &other.factors {
            *factors.entry(p).or_insert_with(BigUint::zero) += e;
        }
        Self { factors }
    }

    /// `self^k`; `k = 0` gives one.
    pub fn pow(&self, k: impl Into<BigUint>) -> Self {
        let k = k.into();
        if k.is_zero() {
            return Self::one();
        }
        Self {
            factors: self.factors.iter().map(|(&p, e)| (p, e * &k)).collect(),
        }
    }

    /// `Σ exponent · log10(prime)`.
    pub fn log10(&self) -> f64 {
        self.factors
            .iter()
            .map(|(&p, e)| big_to_f64(e) * (p as f64).log10())
            .sum()
    }

    /// Expands to an ordinary integer.
    pub fn to_biguint(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, (&p, e)| {
            let e = e.to_u32().expect("exponent too large to expand");
            acc * BigUint::from(p).pow(e)
        })
    }

    /// Decimal expansion if it has at most `max_digits` digits.
    pub fn to_decimal_within(&self, max_digits: usize) -> Option<String> {
        // log10 bounds the digit count; skip the expansion when clearly too big.
        if self.log10() > max_digits as f64 + 1.0 {
            return None;
        }
        let s = self.to_biguint().to_string();
        (s.len() <= max_digits).then_some(s)
    }

    /// Per-prime `self - other` exponents; empty iff the values are equal.
    pub fn exponent_diff(&self, other: &Self) -> BTreeMap<u64, BigInt> {
        let mut out = BTreeMap::new();
        for p in self.factors.keys().chain(other.factors.keys()) {
            let d = BigInt::from(self.exponent(*p)) - BigInt::from(other.exponent(*p));
            if !d.is_zero() {
                out.insert(*p, d);
            }
        }
        out
    }
}

pub(crate) fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

impl Mul for FactoredInteger {
    type Output = FactoredInteger;

    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a FactoredInteger> for &'a FactoredInteger {
    type Output = FactoredInteger;

    fn mul(self, rhs: &'a FactoredInteger) -> FactoredInteger {
        self.mul_ref(rhs)
    }
}

impl TryFrom<u64> for FactoredInteger {
    type Error = FactorError;

    fn try_from(value: u64) -> Result<Self, Self::Error> {
        Self::from_u64(value)
    }
}

/// Renders as `2^6 * 3^6`; one is rendered as `1`.
impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

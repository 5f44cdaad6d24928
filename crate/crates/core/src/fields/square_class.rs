use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::rat::Rat;
use crate::error::{Error, Result};

/// Default largest trial divisor. Cofactors without a divisor up to the
/// ceiling are passed to Pollard rho and SQUFOF.
pub const DEFAULT_TRIAL_CEILING: u64 = 10_000;
const MAX_TRIAL_CEILING: u64 = 1 << 32;

static TRIAL_CEILING: AtomicU64 = AtomicU64::new(DEFAULT_TRIAL_CEILING);

/// Sets the process-wide trial-division ceiling (clamped to `[2, 2^32]`).
pub fn set_trial_ceiling(ceiling: u64) {
    TRIAL_CEILING.store(ceiling.clamp(2, MAX_TRIAL_CEILING), Ordering::Relaxed);
}

pub fn trial_ceiling() -> u64 {
    TRIAL_CEILING.load(Ordering::Relaxed)
}

/// Prime factorization of `|n|` as `(prime, exponent)` pairs in increasing
/// order. `n` must be nonzero.
pub fn factor(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    factor_with_ceiling(n, trial_ceiling())
}

/// [`factor`] with an explicit trial-division ceiling.
pub fn factor_with_ceiling(n: &BigInt, ceiling: u64) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroArgument("n"));
    }
    let ceiling = ceiling.clamp(2, MAX_TRIAL_CEILING);
    let mut m = n.magnitude().clone();
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while !m.is_one() {
        if let Some(small) = m.to_u64() {
            let mut rest = factor_u64(small, p, ceiling, &mut out);
            out.append(&mut rest);
            break;
        }
        // m ≥ 2⁶⁴ > p² here, so m may still have a factor ≥ p.
        if p > ceiling {
            let (found, unfactored) = num_prime::nt_funcs::factors(m.clone(), Some(rho_config()));
            if unfactored.is_some_and(|r| !r.is_empty()) {
                return Err(Error::FactorizationLimit { value: n.to_string(), ceiling });
            }
            out.extend(found.into_iter().map(|(q, e)| (BigInt::from(q), e as u32)));
            break;
        }
        let bp = BigUint::from(p);
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((BigInt::from(p), e));
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    out.sort();
    Ok(out)
}

/// Rho trials before a cofactor is reported unfactored.
const RHO_TRIALS: usize = 64;

fn rho_config() -> num_prime::FactorizationConfig {
    let mut config = num_prime::FactorizationConfig::default();
    config.rho_trials = RHO_TRIALS;
    config
}

/// Trial division of m by odd p upward from `p`; past the ceiling the
/// cofactor goes to `factorize64`.
fn factor_u64(mut m: u64, mut p: u64, ceiling: u64, out: &mut Vec<(BigInt, u32)>) -> Vec<(BigInt, u32)> {
    while m > 1 {
        if (p as u128) * (p as u128) > m as u128 {
            out.push((BigInt::from(m), 1));
            return Vec::new();
        }
        if p > ceiling {
            return num_prime::nt_funcs::factorize64(m)
                .into_iter()
                .map(|(q, e)| (BigInt::from(q), e as u32))
                .collect();
        }
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((BigInt::from(p), e));
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    Vec::new()
}

/// Primality by trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    matches!(factor(&BigInt::from(p)).as_deref(), Ok([(q, 1)]) if *q == BigInt::from(p))
}

/// Squarefree part of a nonzero integer, sign included.
pub fn squarefree_int(n: &BigInt) -> Result<BigInt> {
    let mut r = BigInt::one();
    for (p, e) in factor(n)? {
        if e % 2 == 1 {
            r *= p;
        }
    }
    Ok(if n.is_negative() { -r } else { r })
}

/// An element of ℚ×/(ℚ×)², represented by its unique squarefree integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(BigInt);

// JSON integer when it fits in i64, decimal string otherwise.
impl Serialize for SquareClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl SquareClass {
    /// The class of a nonzero rational.
    pub fn of(q: &Rat) -> Result<Self> {
        squarefree_part(q)
    }

    /// Wraps an integer that is already squarefree; errors otherwise.
    pub fn from_squarefree(n: BigInt) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroArgument("square class representative"));
        }
        if squarefree_int(&n)? != n {
            return Err(Error::Precondition(format!("{n} is not squarefree")));
        }
        Ok(SquareClass(n))
    }

    pub fn rep(&self) -> &BigInt {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_one()
    }

    /// Product in the group of square classes.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let g = self.0.gcd(&other.0);
        SquareClass(&self.0 * &other.0 / (&g * &g))
    }

    pub fn to_rat(&self) -> Rat {
        Rat::from_integer(self.0.clone())
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The square class of a nonzero rational `q`: the squarefree part of
/// numerator × denominator.
pub fn squarefree_part(q: &Rat) -> Result<SquareClass> {
    if q.is_zero() {
        return Err(Error::ZeroArgument("q"));
    }
    Ok(SquareClass(squarefree_int(&(q.numer() * q.denom()))?))
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` with an optional leading minus sign (ASCII `-` or
/// U+2212).
pub fn parse_rat(text: &str) -> Result<Rat> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-').or_else(|| t.strip_prefix('\u{2212}')) {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let bad = || Error::Parse(format!("malformed rational literal {text:?}"));
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (digits(n)?, digits(d)?),
        None => (digits(body)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    let q = Rat::new(num, den);
    Ok(if neg { -q } else { q })
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(q: &Rat) -> String {
    q.to_string()
}

/// Exact square root of a nonnegative rational, if it is a rational square.
pub fn rat_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(Rat::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// True iff `q` is the square of a nonzero rational.
pub fn is_nonzero_square(q: &Rat) -> bool {
    !q.is_zero() && rat_sqrt(q).is_some()
}

/// Naive height: max(|numerator|, denominator).
pub fn height(q: &Rat) -> BigInt {
    let n = q.numer().abs();
    if n > *q.denom() {
        n
    } else {
        q.denom().clone()
    }
}

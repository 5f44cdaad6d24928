//! Local Hilbert symbols (a, b)_v over ℚ.
//!
//! For a place v the symbol is +1 iff a·x² + b·y² = z² has a nontrivial
//! solution in ℚ_v. Inputs are reduced to integers in the same square class
//! and split as p^e·u with u a p-adic unit; only parities of exponents matter.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::rat::Rat;
use super::square_class::{factor, is_prime, squarefree_part};
use crate::error::{Error, Result};

/// A place of ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Infinite,
    Prime(u64),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => f.write_str("inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Hilbert symbol (a, b)_v ∈ {+1, −1}.
pub fn hilbert_symbol(a: &Rat, b: &Rat, place: Place) -> Result<i8> {
    if a.is_zero() {
        return Err(Error::ZeroArgument("a"));
    }
    if b.is_zero() {
        return Err(Error::ZeroArgument("b"));
    }
    // a·den² has the same square class as a.
    let a = a.numer() * a.denom();
    let b = b.numer() * b.denom();
    match place {
        Place::Infinite => Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Prime(p) => {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let (ea, ua) = split_valuation(&a, p);
            let (eb, ub) = split_valuation(&b, p);
            Ok(if p == 2 {
                symbol_at_two(ea, &ua, eb, &ub)
            } else {
                symbol_at_odd(p, ea, &ua, eb, &ub)
            })
        }
    }
}

/// Writes n = p^e · u with p ∤ u; returns (e mod 2, u).
fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let bp = BigInt::from(p);
    let mut u = n.clone();
    let mut e = 0u32;
    loop {
        let (q, r) = u.div_rem(&bp);
        if !r.is_zero() {
            break;
        }
        u = q;
        e += 1;
    }
    (e % 2, u)
}

fn residue(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits u64")
}

/// Legendre symbol (u/p) for an odd prime p not dividing u.
fn legendre(u: &BigInt, p: u64) -> i8 {
    let r = residue(u, p);
    let e = pow_mod(r, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

fn symbol_at_odd(p: u64, ea: u32, ua: &BigInt, eb: u32, ub: &BigInt) -> i8 {
    let mut s: i8 = 1;
    if ea == 1 && eb == 1 && (p % 4 == 3) {
        s = -s;
    }
    if eb == 1 {
        s *= legendre(ua, p);
    }
    if ea == 1 {
        s *= legendre(ub, p);
    }
    s
}

fn symbol_at_two(ea: u32, ua: &BigInt, eb: u32, ub: &BigInt) -> i8 {
    // ε(u) = (u − 1)/2 mod 2, ω(u) = (u² − 1)/8 mod 2
    let eps = |u: &BigInt| u32::from(residue(u, 4) == 3);
    let omega = |u: &BigInt| u32::from(matches!(residue(u, 8), 3 | 5));
    let exponent = eps(ua) * eps(ub) + ea * omega(ub) + eb * omega(ua);
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Places where (a, b)_v can differ from +1: ∞, 2, and the primes dividing
/// the squarefree parts of a and b.
pub fn relevant_places(a: &Rat, b: &Rat) -> Result<Vec<Place>> {
    let mut primes = BTreeSet::from([2u64]);
    for q in [a, b] {
        let class = squarefree_part(q)?;
        if class.rep().abs() > BigInt::from(1) {
            for (p, _) in factor(class.rep())? {
                let p = p.to_u64().ok_or_else(|| Error::FactorizationLimit { value: p.to_string(), ceiling: u64::MAX })?;
                primes.insert(p);
            }
        }
    }
    let mut places = vec![Place::Infinite];
    places.extend(primes.into_iter().map(Place::Prime));
    Ok(places)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::rat::{int, rat};
    use proptest::prelude::*;

    /// Brute-force oracle for squarefree a, b: (a, b)_p = 1 iff
    /// a x² + b y² = z² has a primitive solution modulo p² (odd p) or 2⁵.
    fn brute_symbol(a: i64, b: i64, p: u64) -> i8 {
        let m: i64 = if p == 2 { 32 } else { (p * p) as i64 };
        let pi = p as i64;
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if x % pi == 0 && y % pi == 0 && z % pi == 0 {
                        continue;
                    }
                    if (a * x * x + b * y * y - z * z).rem_euclid(m) == 0 {
                        return 1;
                    }
                }
            }
        }
        -1
    }

    #[test]
    fn documented_examples() {
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), Place::Infinite), Ok(-1));
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), Place::Prime(2)), Ok(-1));
        assert_eq!(hilbert_symbol(&int(2), &int(7), Place::Prime(7)), Ok(1));
    }

    #[test]
    fn agrees_with_congruence_oracle() {
        let vals = [-6i64, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 14, 15];
        for &a in &vals {
            for &b in &vals {
                for p in [2u64, 3, 5, 7] {
                    assert_eq!(
                        hilbert_symbol(&int(a), &int(b), Place::Prime(p)).unwrap(),
                        brute_symbol(a, b, p),
                        "({a},{b})_{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_zero_and_composite() {
        assert_eq!(
            hilbert_symbol(&int(0), &int(3), Place::Prime(3)),
            Err(Error::ZeroArgument("a"))
        );
        assert_eq!(
            hilbert_symbol(&int(2), &int(3), Place::Prime(9)),
            Err(Error::NotPrime(9))
        );
    }

    #[test]
    fn rational_arguments_use_square_class() {
        assert_eq!(
            hilbert_symbol(&rat(-1, 4), &rat(-9, 25), Place::Infinite),
            Ok(-1)
        );
        assert_eq!(
            hilbert_symbol(&rat(3, 2), &int(7), Place::Prime(7)),
            hilbert_symbol(&int(6), &int(7), Place::Prime(7))
        );
    }

    fn nonzero() -> impl Strategy<Value = Rat> {
        (-200i64..=200, 1i64..=50)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn symmetric_and_square_invariant(a in nonzero(), b in nonzero(), t in nonzero()) {
            for place in relevant_places(&a, &b).unwrap() {
                let ab = hilbert_symbol(&a, &b, place).unwrap();
                prop_assert_eq!(ab, hilbert_symbol(&b, &a, place).unwrap());
                prop_assert_eq!(ab, hilbert_symbol(&(&a * &t * &t), &b, place).unwrap());
            }
        }

        #[test]
        fn product_formula(a in nonzero(), b in nonzero()) {
            let prod: i8 = relevant_places(&a, &b)
                .unwrap()
                .into_iter()
                .map(|v| hilbert_symbol(&a, &b, v).unwrap())
                .product();
            prop_assert_eq!(prod, 1);
        }

        #[test]
        fn bimultiplicative(a in nonzero(), b in nonzero(), c in nonzero()) {
            let ac = &a * &c;
            let mut places = relevant_places(&ac, &b).unwrap();
            places.extend(relevant_places(&c, &b).unwrap());
            for v in places {
                prop_assert_eq!(
                    hilbert_symbol(&ac, &b, v).unwrap(),
                    hilbert_symbol(&a, &b, v).unwrap() * hilbert_symbol(&c, &b, v).unwrap()
                );
            }
        }
    }
}

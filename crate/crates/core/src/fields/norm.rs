//! Norm-group membership for K = ℚ(√d).
//!
//! K/ℚ is cyclic, so s ∈ N(K×) iff s is a local norm everywhere, i.e. iff
//! the Hilbert symbol (d, s)_v is +1 at every place. Only ∞, 2 and the primes
//! dividing d·s can fail.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::hilbert::{hilbert_symbol, relevant_places, Place};
use super::quad::{QuadElem, QuadField};
use super::rat::{height, rat_sqrt, Rat};
use crate::error::{Error, Result};

/// Per-place evaluation of (d, s)_v over the places that can obstruct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormReport {
    pub is_norm: bool,
    pub symbols: Vec<(Place, i8)>,
}

impl NormReport {
    /// First place where s fails to be a local norm.
    pub fn obstruction(&self) -> Option<Place> {
        self.symbols.iter().find(|(_, e)| *e == -1).map(|(v, _)| *v)
    }
}

pub fn norm_report(field: QuadField, s: &Rat) -> Result<NormReport> {
    if s.is_zero() {
        return Err(Error::ZeroArgument("s"));
    }
    let d = field.d_rat();
    let symbols = relevant_places(&d, s)?
        .into_iter()
        .map(|v| Ok((v, hilbert_symbol(&d, s, v)?)))
        .collect::<Result<Vec<_>>>()?;
    let is_norm = symbols.iter().all(|(_, e)| *e == 1);
    Ok(NormReport { is_norm, symbols })
}

/// True iff s = N(x) for some x ∈ K×.
pub fn is_norm(field: QuadField, s: &Rat) -> Result<bool> {
    Ok(norm_report(field, s)?.is_norm)
}

/// Rationals p/q in lowest terms with |p| ≤ bound and 1 ≤ q ≤ bound, ordered
/// by denominator, then by |p| (positive first).
pub fn bounded_rationals(bound: u64) -> impl Iterator<Item = Rat> {
    let bound = bound as i64;
    (1..=bound).flat_map(move |q| {
        std::iter::once(0i64)
            .chain((1..=bound).flat_map(|p| [p, -p]))
            .filter(move |&p| (p == 0 && q == 1) || (p != 0 && p.gcd(&q) == 1))
            .map(move |p| Rat::new(BigInt::from(p), BigInt::from(q)))
    })
}

/// Exhaustive search for x = a + bα with N(x) = s where a and b have
/// numerator and denominator bounded by `bound`. `Some(x)` is a certificate;
/// `None` means only that the search range is exhausted.
pub fn is_norm_oracle(field: QuadField, s: &Rat, bound: u64) -> Option<QuadElem> {
    if s.is_zero() || bound == 0 {
        return None;
    }
    let d = field.d_rat();
    let limit = BigInt::from(bound);
    for b in bounded_rationals(bound) {
        let target = s + &d * &b * &b;
        if let Some(a) = rat_sqrt(&target) {
            if height(&a) <= limit {
                let x = field.elem(a, b);
                debug_assert_eq!(x.norm(), *s);
                return Some(x);
            }
        }
    }
    None
}

/// Like [`is_norm_oracle`], but consults the local test first and skips the
/// search when s is provably not a norm.
pub fn find_norm_witness(field: QuadField, s: &Rat, bound: u64) -> Result<Option<QuadElem>> {
    if !is_norm(field, s)? {
        return Ok(None);
    }
    if s.is_one() {
        return Ok(Some(field.one()));
    }
    Ok(is_norm_oracle(field, s, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::rat::{int, rat};
    use proptest::prelude::*;

    fn k(d: i64) -> QuadField {
        QuadField::new(d).unwrap()
    }

    #[test]
    fn documented_examples() {
        assert!(is_norm(k(-1), &int(5)).unwrap());
        assert!(!is_norm(k(-1), &int(3)).unwrap());
        assert_eq!(
            norm_report(k(-1), &int(3)).unwrap().obstruction(),
            Some(Place::Prime(2))
        );
        assert_eq!(is_norm(k(-1), &int(0)), Err(Error::ZeroArgument("s")));
    }

    #[test]
    fn oracle_examples() {
        let w = is_norm_oracle(k(-1), &int(5), 3).unwrap();
        assert_eq!(w.norm(), int(5));
        assert!(is_norm_oracle(k(-1), &int(3), 50).is_none());
        let w = is_norm_oracle(k(5), &int(-1), 5).unwrap();
        assert_eq!(w.norm(), int(-1));
    }

    #[test]
    fn bounded_rationals_are_distinct_and_reduced() {
        let v: Vec<Rat> = bounded_rationals(6).collect();
        let mut sorted = v.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), v.len());
        assert!(v.contains(&rat(-5, 6)));
        assert!(!v.contains(&rat(7, 1)));
    }

    #[test]
    fn oracle_never_contradicts_decision() {
        for d in [-1i64, -2, -3, 2, 3, 5, -7] {
            for n in -25i64..=25 {
                if n == 0 {
                    continue;
                }
                let s = int(n);
                if let Some(x) = is_norm_oracle(k(d), &s, 8) {
                    assert_eq!(x.norm(), s);
                    assert!(is_norm(k(d), &s).unwrap(), "d={d} s={n}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn norms_of_elements_are_norms(
            d in prop::sample::select(vec![-7i64, -3, -2, -1, 2, 3, 5, 10]),
            a in -40i64..40, b in -40i64..40, q in 1i64..9,
        ) {
            prop_assume!(a != 0 || b != 0);
            let x = k(d).elem(rat(a, q), rat(b, 1));
            prop_assert!(is_norm(k(d), &x.norm()).unwrap());
        }

        #[test]
        fn norm_group_closed(
            d in prop::sample::select(vec![-3i64, -1, 2, 5]),
            s1 in -30i64..30, s2 in -30i64..30,
        ) {
            prop_assume!(s1 != 0 && s2 != 0);
            let f = k(d);
            if is_norm(f, &int(s1)).unwrap() && is_norm(f, &int(s2)).unwrap() {
                prop_assert!(is_norm(f, &int(s1 * s2)).unwrap());
            }
        }
    }
}

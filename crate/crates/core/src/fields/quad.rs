use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{format_rat, int, Rat};
use super::square_class::{squarefree_int, squarefree_part};
use crate::error::{Error, Result};

/// The quadratic field K = ℚ(α), α² = d, for a squarefree d ∉ {0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct QuadField {
    d: i64,
}

impl QuadField {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::InvalidField(d));
        }
        let sf = squarefree_int(&BigInt::from(d))?;
        if sf != BigInt::from(d) {
            return Err(Error::InvalidField(d));
        }
        Ok(QuadField { d })
    }

    /// The field ℚ(√q) for a nonzero non-square rational `q`, normalized to
    /// the squarefree representative of the square class of `q`.
    pub fn from_radicand(q: &Rat) -> Result<Self> {
        let class = squarefree_part(q)?;
        let d = class
            .rep()
            .to_i64()
            .ok_or_else(|| Error::Precondition(format!("radicand class {class} exceeds i64")))?;
        QuadField::new(d)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn d_rat(&self) -> Rat {
        int(self.d)
    }

    pub fn elem(&self, a: Rat, b: Rat) -> QuadElem {
        QuadElem { field: *self, a, b }
    }

    pub fn from_rat(&self, a: Rat) -> QuadElem {
        self.elem(a, Rat::zero())
    }

    pub fn zero(&self) -> QuadElem {
        self.from_rat(Rat::zero())
    }

    pub fn one(&self) -> QuadElem {
        self.from_rat(Rat::one())
    }

    /// The generator α with α² = d.
    pub fn alpha(&self) -> QuadElem {
        self.elem(Rat::zero(), Rat::one())
    }
}

impl TryFrom<i64> for QuadField {
    type Error = Error;
    fn try_from(d: i64) -> Result<Self> {
        QuadField::new(d)
    }
}

impl From<QuadField> for i64 {
    fn from(f: QuadField) -> i64 {
        f.d
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// An element a + bα of a quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    field: QuadField,
    a: Rat,
    b: Rat,
}

impl QuadElem {
    pub fn field(&self) -> QuadField {
        self.field
    }

    /// Rational part.
    pub fn a(&self) -> &Rat {
        &self.a
    }

    /// Coefficient of α.
    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.a.clone())
    }

    /// The Galois conjugate a − bα.
    pub fn conj(&self) -> QuadElem {
        self.field.elem(self.a.clone(), -&self.b)
    }

    /// N(x) = x·σ(x) = a² − d·b².
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - self.field.d_rat() * &self.b * &self.b
    }

    /// Tr(x) = x + σ(x) = 2a.
    pub fn trace(&self) -> Rat {
        &self.a + &self.a
    }

    fn same_field(&self, other: &QuadElem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.d, other.field.d))
        }
    }

    pub fn checked_add(&self, other: &QuadElem) -> Result<QuadElem> {
        self.same_field(other)?;
        Ok(self.field.elem(&self.a + &other.a, &self.b + &other.b))
    }

    pub fn checked_sub(&self, other: &QuadElem) -> Result<QuadElem> {
        self.same_field(other)?;
        Ok(self.field.elem(&self.a - &other.a, &self.b - &other.b))
    }

    pub fn checked_mul(&self, other: &QuadElem) -> Result<QuadElem> {
        self.same_field(other)?;
        let f = self.field;
        Ok(match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => f.elem(&self.a * &other.a, Rat::zero()),
            (true, false) => f.elem(&self.a * &other.a, &self.a * &other.b),
            (false, true) => f.elem(&self.a * &other.a, &self.b * &other.a),
            (false, false) => {
                let a = &self.a * &other.a + &self.b * &other.b * BigInt::from(f.d);
                let b = &self.a * &other.b + &self.b * &other.a;
                f.elem(a, b)
            }
        })
    }

    pub fn inv(&self) -> Result<QuadElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(self.field.elem(&self.a / &n, -&self.b / &n))
    }

    pub fn checked_div(&self, other: &QuadElem) -> Result<QuadElem> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, q: &Rat) -> QuadElem {
        self.field.elem(&self.a * q, &self.b * q)
    }

    pub fn pow(&self, mut e: u32) -> QuadElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", format_rat(&self.a)),
            (true, false) => write!(f, "{}*a", format_rat(&self.b)),
            (false, false) if self.b.is_negative() => {
                write!(f, "{} - {}*a", format_rat(&self.a), format_rat(&-&self.b))
            }
            (false, false) => write!(f, "{} + {}*a", format_rat(&self.a), format_rat(&self.b)),
        }
    }
}

// Operator forms panic on mixed fields; the `checked_*` methods report it.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a QuadElem> for &'a QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &'a QuadElem) -> QuadElem {
                self.$checked(rhs).expect("quadratic field mismatch")
            }
        }
        impl<'a> $tr<&'a QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &'a QuadElem) -> QuadElem {
                (&self).$checked(rhs).expect("quadratic field mismatch")
            }
        }
        impl $tr<QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                (&self).$checked(&rhs).expect("quadratic field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        self.field.elem(-self.a, -self.b)
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        self.field.elem(-&self.a, -&self.b)
    }
}

//! One-generator cocycles for Gal(K/ℚ) = {1, σ}, K = ℚ(α).
//!
//! A cocycle is a single h over K with h·φσ(h) = 1, where φσ is the
//! σ-twisted involution of the group. Two cocycles are equivalent when
//! h₁ = g⁻¹·h₂·φσ(g) for some g over K.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{int, is_norm, squarefree_part, QuadElem, QuadField, Rat, SquareClass};
use crate::linalg::{HermitianMat, Mat, Scalar};

/// The σ-twisted involution of a group over ℚ split by K.
#[derive(Clone, Debug, PartialEq)]
pub enum SigmaStructure {
    /// U(Λ) or, with `special`, SU(Λ); φσ(g) = Λ·*g⁻¹·Λ for diagonal Λ = Λ⁻¹.
    Unitary { field: QuadField, lambda: Mat<Rat>, special: bool },
    /// The torus T_α = ker(N); φσ(x) = (x^σ)⁻¹.
    Torus { field: QuadField },
}

impl SigmaStructure {
    pub fn unitary(field: QuadField, lambda: Mat<Rat>, special: bool) -> Result<Self> {
        let ok = lambda.is_diagonal() && lambda.diagonal().iter().all(|x| x.clone() * x == int(1));
        if !ok {
            return Err(Error::Precondition("Λ must be diagonal with entries ±1".into()));
        }
        Ok(SigmaStructure::Unitary { field, lambda, special })
    }

    pub fn field(&self) -> QuadField {
        match self {
            SigmaStructure::Unitary { field, .. } | SigmaStructure::Torus { field } => *field,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SigmaStructure::Unitary { lambda, .. } => lambda.rows(),
            SigmaStructure::Torus { .. } => 1,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            SigmaStructure::Unitary { special: true, .. } => "special_unitary",
            SigmaStructure::Unitary { special: false, .. } => "unitary",
            SigmaStructure::Torus { .. } => "torus",
        }
    }

    fn lambda_k(&self) -> Option<Mat<QuadElem>> {
        match self {
            SigmaStructure::Unitary { field, lambda, .. } => Some(lambda.lift(*field)),
            SigmaStructure::Torus { .. } => None,
        }
    }

    fn check_shape(&self, g: &Mat<QuadElem>) -> Result<()> {
        let n = self.dim();
        if g.dims() != (n, n) {
            return Err(Error::DimensionMismatch { op: "cocycle", left: (n, n), right: g.dims() });
        }
        if g.ctx() != self.field() {
            return Err(Error::FieldMismatch(self.field().d(), g.ctx().d()));
        }
        Ok(())
    }

    /// φσ(g).
    pub fn twist(&self, g: &Mat<QuadElem>) -> Result<Mat<QuadElem>> {
        self.check_shape(g)?;
        match self.lambda_k() {
            Some(lam) => Ok(&(&lam * &g.star().inverse()?) * &lam),
            None => Ok(g.conj().inverse()?),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle {
    pub structure: SigmaStructure,
    pub h: Mat<QuadElem>,
}

impl Cocycle {
    /// Validates the cocycle condition.
    pub fn new(structure: SigmaStructure, h: Mat<QuadElem>) -> Result<Self> {
        if !verify_cocycle(&structure, &h)? {
            return Err(Error::CocycleViolated);
        }
        Ok(Cocycle { structure, h })
    }

    /// The torus cocycle given by a scalar.
    pub fn torus(field: QuadField, s: QuadElem) -> Result<Self> {
        Cocycle::new(SigmaStructure::Torus { field }, Mat::diag(field, &[s]))
    }
}

/// h·φσ(h) = 1, plus det h = 1 for special unitary structures.
pub fn verify_cocycle(s: &SigmaStructure, h: &Mat<QuadElem>) -> Result<bool> {
    let phi = s.twist(h)?;
    let mut ok = (h * &phi).is_identity();
    if let SigmaStructure::Unitary { special: true, .. } = s {
        ok &= h.det()? == s.field().one();
    }
    Ok(ok)
}

/// The Hermitian form h⁻¹Λ of a unitary cocycle.
pub fn cocycle_to_hermitian(c: &Cocycle) -> Result<HermitianMat<QuadElem>> {
    let lam = c.structure.lambda_k().ok_or_else(|| Error::Precondition("torus cocycles have no Hermitian form".into()))?;
    if !verify_cocycle(&c.structure, &c.h)? {
        return Err(Error::CocycleViolated);
    }
    let m = &c.h.inverse()? * &lam;
    HermitianMat::new(m).map_err(|_| Error::Invariant("h⁻¹Λ is not Hermitian for a cocycle h".into()))
}

/// The cocycle h = Λ·H⁻¹ with Hermitian form H. For SU structures det H
/// must equal det Λ.
pub fn hermitian_to_cocycle(hm: &HermitianMat<QuadElem>, structure: &SigmaStructure) -> Result<Cocycle> {
    let lam = structure.lambda_k().ok_or_else(|| Error::Precondition("torus cocycles have no Hermitian form".into()))?;
    structure.check_shape(hm.as_mat())?;
    let det = hm.as_mat().det()?;
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    if let SigmaStructure::Unitary { special: true, .. } = structure {
        let want = lam.det()?;
        if det != want {
            return Err(Error::WrongDeterminant { expected: want.to_string(), found: det.to_string() });
        }
    }
    let h = &lam * &hm.as_mat().inverse()?;
    Cocycle::new(structure.clone(), h).map_err(|_| Error::Invariant("ΛH⁻¹ failed the cocycle condition".into()))
}

/// Checks h₁ = g⁻¹·h₂·φσ(g). On Hermitian forms this is H₁ = *P·H₂·P with
/// P = ΛgΛ.
pub fn twist_equivalent_witness(s: &SigmaStructure, h1: &Mat<QuadElem>, h2: &Mat<QuadElem>, g: &Mat<QuadElem>) -> bool {
    let Ok(ginv) = g.inverse() else { return false };
    let Ok(phi) = s.twist(g) else { return false };
    s.check_shape(h1).is_ok() && s.check_shape(h2).is_ok() && *h1 == &(&ginv * h2) * &phi
}

/// The det map from a unitary cocycle to a torus cocycle.
pub fn det_cocycle(c: &Cocycle) -> Result<Cocycle> {
    if let SigmaStructure::Torus { .. } = c.structure {
        return Ok(c.clone());
    }
    Cocycle::torus(c.structure.field(), c.h.det()?)
}

/// A class in ℚ×/N(K×).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormClass {
    pub d: i64,
    /// Canonical representative; see [`canonical_class_rep`].
    pub rep: SquareClass,
    pub trivial: bool,
}

/// The first squarefree m in the order 1, −1, 2, −2, 3, … with s·m ∈ N(K×).
/// Since N(K×) contains all squares, m is in the class of s.
pub fn canonical_class_rep(field: QuadField, s: &Rat) -> Result<BigInt> {
    if s.vanishes() {
        return Err(Error::ZeroArgument("s"));
    }
    let bound = squarefree_part(s)?.rep().magnitude().clone();
    let mut n = BigInt::from(1);
    while *n.magnitude() <= bound {
        for m in [n.clone(), -n.clone()] {
            if squarefree_part(&Rat::from_integer(m.clone()))?.rep() == &m && is_norm(field, &(s * Rat::from_integer(m.clone())))? {
                return Ok(m);
            }
        }
        n += 1;
    }
    Err(Error::Invariant("class search passed the squarefree part of s".into()))
}

/// The class of a torus cocycle s ∈ ℚ× in ℚ×/N(K×).
pub fn torus_norm_class(c: &Cocycle) -> Result<NormClass> {
    let SigmaStructure::Torus { field } = c.structure else {
        return Err(Error::Precondition("not a torus cocycle".into()));
    };
    let s = c.h.get(0, 0).to_rat().ok_or(Error::CocycleViolated)?;
    let rep = SquareClass::from_squarefree(canonical_class_rep(field, &s)?)?;
    Ok(NormClass { d: field.d(), trivial: rep.is_trivial(), rep })
}

/// Torus cocycles s₁, s₂ are equivalent iff s₁/s₂ ∈ N(K×).
pub fn torus_equivalent(field: QuadField, s1: &Rat, s2: &Rat) -> Result<bool> {
    if s1.vanishes() || s2.vanishes() {
        return Err(Error::ZeroArgument("s"));
    }
    is_norm(field, &(s1 / s2))
}

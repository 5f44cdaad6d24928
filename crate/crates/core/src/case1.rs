//! The space (G₁, W) with W = k⁷ and relative invariant
//! Δ(x) = x₁² − 4(x₂x₅ + x₃x₆ + x₄x₇).
//!
//! Rational orbits of semistable points (Δ ≠ 0) are classified by the square
//! class of Δ. Matrices are written 0-based; coordinates x₁…x₇ are x[0..7].

use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{int, rat, squarefree_part, QuadElem, QuadField, Rat, SquareClass};
use crate::g2rep::GroupElem1;
use crate::linalg::{cayley, Mat, Scalar};

/// A column vector of length 7.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec7<T>(Vec<T>);

impl<T: Scalar> Vec7<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.len() != 7 {
            return Err(Error::DimensionMismatch { op: "vec7", left: (7, 1), right: (coords.len(), 1) });
        }
        Ok(Vec7(coords))
    }

    pub fn basis(ctx: T::Ctx, i: usize) -> Self {
        let mut v = vec![T::zero_in(ctx); 7];
        v[i] = T::one_in(ctx);
        Vec7(v)
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }
}

impl Vec7<Rat> {
    pub fn from_ratios(v: [(i64, i64); 7]) -> Self {
        Vec7(v.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    pub fn from_ints(v: [i64; 7]) -> Self {
        Vec7(v.iter().map(|&n| int(n)).collect())
    }

    pub fn lift(&self, field: QuadField) -> Vec7<QuadElem> {
        Vec7(self.0.iter().map(|q| field.from_rat(q.clone())).collect())
    }
}

impl<T> Deref for Vec7<T> {
    type Target = [T];
    fn deref(&self) -> &[T] {
        &self.0
    }
}

/// Δ(x) = x₁² − 4(x₂x₅ + x₃x₆ + x₄x₇).
pub fn delta<T: Scalar>(x: &[T]) -> Result<T> {
    if x.len() != 7 {
        return Err(Error::DimensionMismatch { op: "delta", left: (7, 1), right: (x.len(), 1) });
    }
    let ctx = x[0].ctx();
    let cross = x[1].clone() * &x[4] + &(x[2].clone() * &x[5]) + &(x[3].clone() * &x[6]);
    Ok(x[0].clone() * &x[0] - &(T::rat_in(ctx, int(4)) * &cross))
}

pub fn is_semistable<T: Scalar>(x: &[T]) -> Result<bool> {
    Ok(!delta(x)?.vanishes())
}

/// Λ = diag(1, 1, −1).
pub fn lambda3<T: Scalar>(ctx: T::Ctx) -> Mat<T> {
    let one = T::one_in(ctx);
    Mat::diag(ctx, &[one.clone(), one.clone(), -one])
}

/// The block matrix
/// ```text
/// ( a   b₁  b₂ )
/// ( c₁  A₁  A₂ )
/// ( c₂  A₃  A₄ )
/// ```
/// with a 1×1, bᵢ 1×3, cᵢ 3×1 and Aᵢ 3×3.
#[allow(clippy::too_many_arguments)]
pub fn g_blocks<T: Scalar>(
    a: &T,
    b1: &Mat<T>,
    b2: &Mat<T>,
    c1: &Mat<T>,
    c2: &Mat<T>,
    a1: &Mat<T>,
    a2: &Mat<T>,
    a3: &Mat<T>,
    a4: &Mat<T>,
) -> Result<Mat<T>> {
    let shapes = [(b1, (1, 3)), (b2, (1, 3)), (c1, (3, 1)), (c2, (3, 1)), (a1, (3, 3)), (a2, (3, 3)), (a3, (3, 3)), (a4, (3, 3))];
    for (m, want) in shapes {
        if m.dims() != want {
            return Err(Error::DimensionMismatch { op: "g_blocks", left: want, right: m.dims() });
        }
    }
    let mut g = Mat::zeros(7, 7, a.ctx());
    g.set(0, 0, a.clone());
    g.paste(0, 1, b1);
    g.paste(0, 4, b2);
    g.paste(1, 0, c1);
    g.paste(4, 0, c2);
    g.paste(1, 1, a1);
    g.paste(1, 4, a2);
    g.paste(4, 1, a3);
    g.paste(4, 4, a4);
    Ok(g)
}

/// d(A) = diag(1, A, ᵗA⁻¹) for A ∈ SL(3).
pub fn d_of<T: Scalar>(a: &Mat<T>) -> Result<Mat<T>> {
    if a.dims() != (3, 3) {
        return Err(Error::DimensionMismatch { op: "d(A)", left: (3, 3), right: a.dims() });
    }
    let det = a.det()?;
    if det != T::one_in(a.ctx()) {
        return Err(Error::WrongDeterminant { expected: "1".into(), found: det.to_string() });
    }
    let one = Mat::identity(1, a.ctx());
    Ok(Mat::block_diag(a.ctx(), &[&one, a, &a.inverse()?.transpose()]))
}

/// τ: e₁ ↦ e₁ and the swap of U₁ = ⟨e₂,e₃,e₄⟩ with U₂ = ⟨e₅,e₆,e₇⟩ twisted by Λ.
pub fn tau<T: Scalar>() -> Mat<T>
where
    T::Ctx: Default,
{
    tau_in(T::Ctx::default())
}

pub fn tau_in<T: Scalar>(ctx: T::Ctx) -> Mat<T> {
    let mut t = Mat::zeros(7, 7, ctx);
    t.set(0, 0, T::one_in(ctx));
    let lam = lambda3(ctx);
    t.paste(1, 4, &lam);
    t.paste(4, 1, &lam);
    t
}

/// The matrix h₀ ∈ G₁ ∩ SL(7).
pub fn h0() -> Mat<Rat> {
    const H: [[i64; 7]; 7] = [
        [0, -2, 0, 0, 2, 0, 0],
        [1, 1, 0, 0, 1, 0, 0],
        [0, 0, 1, -1, 0, -1, -1],
        [0, 0, 1, 1, 0, 1, -1],
        [-1, 1, 0, 0, 1, 0, 0],
        [0, 0, -1, -1, 0, 1, -1],
        [0, 0, 1, -1, 0, 1, 1],
    ];
    Mat::from_fn(7, 7, (), |i, j| rat(H[i][j], 2))
}

/// g_α over K = ℚ(α), entries (p + qα + r·α²)/2.
pub fn g_alpha(field: QuadField) -> Mat<QuadElem> {
    const P: [[(i64, i64, i64); 7]; 7] = [
        [(0, 0, 0), (0, -2, 0), (0, 0, 0), (0, 0, 0), (0, 2, 0), (0, 0, 0), (0, 0, 0)],
        [(0, 0, 1), (0, 0, 1), (0, 0, 0), (0, 0, 0), (0, 0, 1), (0, 0, 0), (0, 0, 0)],
        [(0, 0, 0), (0, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 0), (0, -1, 0), (0, -1, 0)],
        [(0, 0, 0), (0, 0, 0), (1, 0, 0), (1, 0, 0), (0, 0, 0), (1, 0, 0), (-1, 0, 0)],
        [(-1, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 0, 0), (0, 0, 0)],
        [(0, 0, 0), (0, 0, 0), (0, -1, 0), (0, -1, 0), (0, 0, 0), (0, 1, 0), (0, -1, 0)],
        [(0, 0, 0), (0, 0, 0), (0, 0, 1), (0, 0, -1), (0, 0, 0), (0, 0, 1), (0, 0, 1)],
    ];
    let d = field.d();
    Mat::from_fn(7, 7, field, |i, j| {
        let (p, q, r) = P[i][j];
        field.elem(rat(p + r * d, 2), rat(q, 2))
    })
}

/// u₁(a, b, c) = exp of the nilpotent element in the e₁ ↔ U₁ ⊕ U₂ directions.
pub fn u1<T: Scalar>(a: &T, b: &T, c: &T) -> Mat<T> {
    let ctx = a.ctx();
    let z = T::zero_in(ctx);
    let o = T::one_in(ctx);
    let two = T::rat_in(ctx, int(2));
    let m = |x: &T, y: &T| x.clone() * y;
    let rows = vec![
        vec![o.clone(), z.clone(), z.clone(), z.clone(), m(&two, a), m(&two, b), m(&two, c)],
        vec![a.clone(), o.clone(), z.clone(), z.clone(), m(a, a), m(a, b), m(a, c)],
        vec![b.clone(), z.clone(), o.clone(), z.clone(), m(a, b), m(b, b), m(b, c)],
        vec![c.clone(), z.clone(), z.clone(), o.clone(), m(a, c), m(b, c), m(c, c)],
        vec![z.clone(), z.clone(), -c.clone(), b.clone(), o.clone(), z.clone(), z.clone()],
        vec![z.clone(), c.clone(), z.clone(), -a.clone(), z.clone(), o.clone(), z.clone()],
        vec![z.clone(), -b.clone(), a.clone(), z.clone(), z.clone(), z.clone(), o],
    ];
    Mat::from_rows(ctx, rows).expect("7x7 literal")
}

/// u₂(d, e, f), the companion unipotent with U₁ and U₂ exchanged.
pub fn u2<T: Scalar>(d: &T, e: &T, f: &T) -> Mat<T> {
    let ctx = d.ctx();
    let z = T::zero_in(ctx);
    let o = T::one_in(ctx);
    let two = T::rat_in(ctx, int(2));
    let m = |x: &T, y: &T| x.clone() * y;
    let rows = vec![
        vec![o.clone(), m(&two, d), m(&two, e), m(&two, f), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), f.clone(), -e.clone()],
        vec![z.clone(), z.clone(), o.clone(), z.clone(), -f.clone(), z.clone(), d.clone()],
        vec![z.clone(), z.clone(), z.clone(), o.clone(), e.clone(), -d.clone(), z.clone()],
        vec![d.clone(), m(d, d), m(d, e), m(d, f), o.clone(), z.clone(), z.clone()],
        vec![e.clone(), m(d, e), m(e, e), m(e, f), z.clone(), o.clone(), z.clone()],
        vec![f.clone(), m(d, f), m(e, f), m(f, f), z.clone(), z.clone(), o],
    ];
    Mat::from_rows(ctx, rows).expect("7x7 literal")
}

/// The base point w = e₁ (Δ = 1).
pub fn w() -> Vec7<Rat> {
    Vec7::basis((), 0)
}

/// w_α = g_α·w = ᵗ(0, d/2, 0, 0, −1/2, 0, 0), where d = α².
pub fn w_alpha(d: &Rat) -> Vec7<Rat> {
    let mut v = vec![int(0); 7];
    v[1] = d / int(2);
    v[4] = rat(-1, 2);
    Vec7(v)
}

/// One generator applied during [`reduce_to_normal_form`].
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionStep {
    /// −τ, used to move a nonzero block into U₁.
    NegTau,
    U1 { a: String, b: String, c: String },
    U2 { d: String, e: String, f: String },
    /// d(A) with A ∈ SL(3), rows of A as rational strings.
    D { a: Vec<Vec<String>> },
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub g: GroupElem1<Rat>,
    pub y: Vec7<Rat>,
    pub steps: Vec<ReductionStep>,
}

struct Reducer {
    g: GroupElem1<Rat>,
    x: Vec<Rat>,
    steps: Vec<ReductionStep>,
}

impl Reducer {
    fn apply(&mut self, m: Mat<Rat>, step: ReductionStep) -> Result<()> {
        let ge = GroupElem1::new(m).map_err(|e| Error::Invariant(format!("reduction generator: {e}")))?;
        if ge.chi() != int(1) || ge.det() != int(1) {
            return Err(Error::Invariant(format!("generator {step:?} has χ = {} or det ≠ 1", ge.chi())));
        }
        self.x = ge.act(&self.x)?;
        self.g = ge.compose(&self.g);
        self.steps.push(step);
        Ok(())
    }

    fn apply_d(&mut self, a: Mat<Rat>) -> Result<()> {
        let rows = a.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        self.apply(d_of(&a)?, ReductionStep::D { a: rows })
    }
}

/// Moves a nonzero v ∈ ℚ³ to e₁ by some A ∈ SL(3).
fn sl3_to_e1(v: &[Rat]) -> Result<Mat<Rat>> {
    let p = v.iter().position(|x| !x.vanishes()).ok_or(Error::Degenerate)?;
    let others: Vec<usize> = (0..3).filter(|&i| i != p).collect();
    let mut m = Mat::zeros(3, 3, ());
    for (i, x) in v.iter().enumerate() {
        m.set(i, 0, x.clone());
    }
    m.set(others[0], 1, int(1));
    m.set(others[1], 2, int(1));
    let det = m.det()?;
    let fix = det.recip();
    m.set(others[0], 1, fix);
    m.inverse()
}

/// Finds g ∈ G₁ ∩ SL(7) over ℚ with g·x = ᵗ(0, 1, 0, 0, −Δ(x)/4, 0, 0).
pub fn reduce_to_normal_form(x: &[Rat]) -> Result<Reduction> {
    let dx = delta(x)?;
    if dx.vanishes() {
        return Err(Error::NotSemistable("Δ(x) = 0".into()));
    }
    let zero = int(0);
    let mut r = Reducer { g: GroupElem1::identity(()), x: x.to_vec(), steps: Vec::new() };
    if r.x[1..].iter().all(|c| *c == zero) {
        let one = int(1);
        let step = ReductionStep::U1 { a: "1".into(), b: "0".into(), c: "0".into() };
        r.apply(u1(&one, &zero, &zero), step)?;
    }
    if r.x[1..4].iter().all(|c| *c == zero) {
        r.apply(-&tau::<Rat>(), ReductionStep::NegTau)?;
    }
    let a = sl3_to_e1(&r.x[1..4])?;
    r.apply_d(a)?;
    let half = -(&r.x[0] / int(2));
    let step = ReductionStep::U2 { d: half.to_string(), e: "0".into(), f: "0".into() };
    r.apply(u2(&half, &zero, &zero), step)?;
    let (x3, x4) = (r.x[2].clone(), r.x[3].clone());
    if x3 != zero || x4 != zero {
        r.apply_d(Mat::from_rows((), vec![
            vec![int(1), int(0), int(0)],
            vec![-x3, int(1), int(0)],
            vec![-x4, int(0), int(1)],
        ])?)?;
    }
    let x5 = r.x[4].clone();
    if x5 == zero {
        return Err(Error::Invariant("x₅ vanished after normalizing x₂ = 1".into()));
    }
    let (a, b) = (&r.x[5] / &x5, &r.x[6] / &x5);
    if a != zero || b != zero {
        r.apply_d(Mat::from_rows((), vec![
            vec![int(1), a, b],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(1)],
        ])?)?;
    }
    let mut target = vec![int(0); 7];
    target[1] = int(1);
    target[4] = -(dx / int(4));
    if r.x != target {
        return Err(Error::Invariant("reduction did not reach the normal form".into()));
    }
    if r.g.det() != int(1) || r.g.act(x)? != target {
        return Err(Error::Invariant("reduction product inconsistent".into()));
    }
    Ok(Reduction { g: r.g, y: Vec7(r.x), steps: r.steps })
}

/// Square class of Δ(x); it names the field ℚ(√Δ(x)) of the orbit.
pub fn classify(x: &[Rat]) -> Result<SquareClass> {
    let dx = delta(x)?;
    if dx.vanishes() {
        return Err(Error::NotSemistable("Δ(x) = 0".into()));
    }
    squarefree_part(&dx)
}

/// Whether two semistable rational points lie in one G₁(ℚ)-orbit.
pub fn same_orbit(x: &[Rat], y: &[Rat]) -> Result<bool> {
    let by_class = classify(x)? == classify(y)?;
    let rx = reduce_to_normal_form(x)?;
    let ry = reduce_to_normal_form(y)?;
    let nx = squarefree_part(&(int(-4) * &rx.y[4]))?;
    let ny = squarefree_part(&(int(-4) * &ry.y[4]))?;
    if by_class != (nx == ny) {
        return Err(Error::Invariant("classification and reduction disagree".into()));
    }
    Ok(by_class)
}

/// A ∈ SU(2,1) for Λ: det A = 1 and *A·Λ·A = Λ.
pub fn su21_check(a: &Mat<QuadElem>) -> bool {
    if a.dims() != (3, 3) {
        return false;
    }
    let lam = lambda3(a.ctx());
    a.det().is_ok_and(|d| d == a.ctx().one()) && &(&a.star() * &lam) * a == lam
}

/// Element of SU(2,1) from a skew-Hermitian K (*K = −K): Cayley transform of
/// S = Λ·K, corrected by diag(1, 1, det⁻¹).
pub fn su21_sample_cayley(k: &Mat<QuadElem>) -> Result<Mat<QuadElem>> {
    if k.dims() != (3, 3) {
        return Err(Error::DimensionMismatch { op: "cayley", left: (3, 3), right: k.dims() });
    }
    if k.star() != -k {
        return Err(Error::Precondition("K must be skew-Hermitian".into()));
    }
    let f = k.ctx();
    let s = &lambda3(f) * k;
    let a0 = cayley(&s)?;
    let t = a0.det()?.inv()?;
    let a = &a0 * &Mat::diag(f, &[f.one(), f.one(), t]);
    if !su21_check(&a) {
        return Err(Error::Invariant("Cayley sample left SU(2,1)".into()));
    }
    Ok(a)
}

/// Precomputed g_α, g_α⁻¹ and w_α for repeated stabilizer embeddings.
pub struct Stabilizer1 {
    ga: Mat<QuadElem>,
    ga_inv: Mat<QuadElem>,
    wa: Vec7<Rat>,
}

impl Stabilizer1 {
    pub fn new(field: QuadField) -> Result<Self> {
        let ga = g_alpha(field);
        let ga_inv = ga.inverse()?;
        Ok(Stabilizer1 { ga, ga_inv, wa: w_alpha(&field.d_rat()) })
    }

    /// g_α·d(A)·g_α⁻¹, an element of the stabilizer of w_α defined over ℚ.
    pub fn embed(&self, a: &Mat<QuadElem>) -> Result<GroupElem1<Rat>> {
        if a.ctx() != self.ga.ctx() {
            return Err(Error::FieldMismatch(a.ctx().d(), self.ga.ctx().d()));
        }
        if !su21_check(a) {
            return Err(Error::Precondition("A is not in SU(2,1)".into()));
        }
        let g = &(&self.ga * &d_of(a)?) * &self.ga_inv;
        let g = g.to_rational().ok_or_else(|| Error::Invariant("stabilizer element is not rational".into()))?;
        if g.mul_vec(&self.wa)? != *self.wa {
            return Err(Error::Invariant("stabilizer element moves w_α".into()));
        }
        GroupElem1::new(g).map_err(|e| Error::Invariant(format!("stabilizer element not in G: {e}")))
    }
}

/// g_α·d(A)·g_α⁻¹, an element of the stabilizer of w_α defined over ℚ.
pub fn stabilizer_embed(a: &Mat<QuadElem>) -> Result<GroupElem1<Rat>> {
    Stabilizer1::new(a.ctx())?.embed(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2rep::g1_membership;
    use proptest::prelude::*;

    fn k(d: i64) -> QuadField {
        QuadField::new(d).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&w()).unwrap(), int(1));
        for d in [-1, 2, 10] {
            assert_eq!(delta(&w_alpha(&int(d))).unwrap(), int(d));
        }
        let s = rat(-5, 3);
        let x = Vec7(vec![int(0), int(1), int(0), int(0), s.clone(), int(0), int(0)]);
        assert_eq!(delta(&x).unwrap(), int(-4) * s);
        assert!(delta(&[int(1)]).is_err());
    }

    #[test]
    fn g_alpha_display_matches_factored_form() {
        for d in [-1, 2, -3, 5, 10] {
            let f = k(d);
            let a = f.alpha();
            let ai = a.inv().unwrap();
            let scal = Mat::diag(f, &[f.one(), a.clone(), f.one(), ai.clone(), ai, f.one(), a.clone()]);
            let factored = &(&Mat::identity(7, f).scale(&a) * &scal) * &h0().lift(f);
            assert_eq!(factored, g_alpha(f));
        }
    }

    #[test]
    fn g_alpha_sigma_is_g_alpha_tau() {
        for d in [-1, 2, -7] {
            let f = k(d);
            let g = g_alpha(f);
            assert_eq!(g.conj(), &g * &tau_in(f));
            let image = g.mul_vec(&Vec7::<QuadElem>::basis(f, 0)).unwrap();
            assert_eq!(image, *w_alpha(&int(d)).lift(f));
        }
    }

    #[test]
    fn tau_preserves_delta_and_is_involution() {
        let t = tau::<Rat>();
        assert!((&t * &t).is_identity());
        assert_eq!(t.det().unwrap(), int(-1));
        let x = Vec7::from_ints([3, 1, -2, 5, 7, 0, 4]);
        assert_eq!(delta(&t.mul_vec(&x).unwrap()).unwrap(), delta(&x).unwrap());
    }

    #[test]
    fn block_builder_matches_d() {
        let a = Mat::from_ints(&[&[2, 1, 0], &[1, 1, 0], &[3, 4, 1]]);
        let z13 = Mat::zeros(1, 3, ());
        let z31 = Mat::zeros(3, 1, ());
        let z33 = Mat::zeros(3, 3, ());
        let g = g_blocks(&int(1), &z13, &z13, &z31, &z31, &a, &z33, &z33, &a.inverse().unwrap().transpose()).unwrap();
        assert_eq!(g, d_of(&a).unwrap());
        assert!(matches!(d_of(&Mat::<Rat>::diag((), &[int(2), int(1), int(1)])), Err(Error::WrongDeterminant { .. })));
    }

    #[test]
    fn reduction_examples() {
        let r = reduce_to_normal_form(&w()).unwrap();
        assert_eq!(r.y, Vec7::from_ratios([(0, 1), (1, 1), (0, 1), (0, 1), (-1, 4), (0, 1), (0, 1)]));
        assert_eq!(r.steps[0], ReductionStep::U1 { a: "1".into(), b: "0".into(), c: "0".into() });
        let r = reduce_to_normal_form(&w_alpha(&int(-7))).unwrap();
        assert_eq!(r.y[4], rat(7, 4));
        let x = Vec7::from_ints([0, 0, 0, 0, 3, 0, 2]);
        assert!(matches!(reduce_to_normal_form(&x), Err(Error::NotSemistable(_))));
        let x = Vec7::from_ints([1, 0, 0, 0, 3, 5, -2]);
        let r = reduce_to_normal_form(&x).unwrap();
        assert_eq!(r.steps[0], ReductionStep::NegTau);
        assert_eq!(r.g.det(), int(1));
    }

    #[test]
    fn classification_examples() {
        assert!(classify(&w()).unwrap().is_trivial());
        assert_eq!(classify(&w_alpha(&int(-1))).unwrap(), SquareClass::of(&int(-1)).unwrap());
        assert_eq!(classify(&Vec7::from_ints([0, 1, 0, 0, 2, 0, 0])).unwrap(), SquareClass::of(&int(-2)).unwrap());
        let y = Vec7::from_ratios([(0, 1), (1, 1), (0, 1), (0, 1), (-1, 4), (0, 1), (0, 1)]);
        assert!(same_orbit(&w(), &y).unwrap());
        assert!(same_orbit(&w_alpha(&int(-1)), &w_alpha(&int(-4))).unwrap());
        assert!(!same_orbit(&w_alpha(&int(-1)), &w_alpha(&int(2))).unwrap());
    }

    #[test]
    fn su21_examples() {
        let f = k(-1);
        assert!(su21_check(&Mat::identity(3, f)));
        let x = f.elem(rat(3, 5), rat(4, 5));
        assert_eq!(x.norm(), int(1));
        let xi = x.inv().unwrap();
        let a = Mat::diag(f, &[x.clone(), &xi * &x.conj().inv().unwrap(), x.conj()]);
        assert!(su21_check(&a));
        assert!(!su21_check(&Mat::diag(f, &[f.from_rat(int(2)), f.one(), f.from_rat(rat(1, 2))])));
        assert!(su21_sample_cayley(&Mat::zeros(3, 3, f)).unwrap().is_identity());
        assert!(matches!(su21_sample_cayley(&Mat::identity(3, f)), Err(Error::Precondition(_))));
    }

    #[test]
    fn stabilizer_examples() {
        let f = k(-1);
        let g = stabilizer_embed(&Mat::identity(3, f)).unwrap();
        assert!(g.matrix().is_identity());
        let a = Mat::diag(f, &[f.from_rat(int(2)), f.one(), f.from_rat(rat(1, 2))]);
        assert!(matches!(stabilizer_embed(&a), Err(Error::Precondition(_))));
        // Negative control: an SL(3) element outside SU(2,1) gives an irrational conjugate.
        let ga = g_alpha(f);
        let conj = &(&ga * &d_of(&a).unwrap()) * &ga.inverse().unwrap();
        assert!(conj.to_rational().is_none());
    }

    fn skew(f: QuadField) -> impl Strategy<Value = Mat<QuadElem>> {
        prop::collection::vec((-4i64..=4, -4i64..=4), 6).prop_map(move |v| {
            let e = |i: usize| f.elem(int(v[i].0), int(v[i].1));
            let mut m = Mat::zeros(3, 3, f);
            for (n, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
                m.set(i, j, e(n));
                m.set(j, i, -e(n).conj());
            }
            for i in 0..3 {
                m.set(i, i, f.elem(int(0), int(v[3 + i].1)));
            }
            m
        })
    }

    fn field() -> impl Strategy<Value = QuadField> {
        prop::sample::select(vec![-1i64, 2, -3, 5, -7]).prop_map(k)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn cayley_stabilizers_fix_w_alpha(kk in field().prop_flat_map(skew)) {
            let a = match su21_sample_cayley(&kk) {
                Ok(a) => a,
                Err(Error::Singular) => return Ok(()),
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            };
            let g = stabilizer_embed(&a).unwrap();
            prop_assert_eq!(g1_membership(g.matrix()), Some(g.c().clone()));
        }

        #[test]
        fn reduction_reaches_normal_form(v in prop::collection::vec((-100i64..=100, 1i64..=100), 7)) {
            let x: Vec<Rat> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
            prop_assume!(!delta(&x).unwrap().vanishes());
            let r = reduce_to_normal_form(&x).unwrap();
            prop_assert_eq!(r.y[4].clone(), -(delta(&x).unwrap() / int(4)));
            prop_assert_eq!(classify(&x).unwrap(), classify(&r.y).unwrap());
            prop_assert!(r.g.verify().is_ok());
        }

        #[test]
        fn sparse_inputs_reduce(mask in 1u8..128, vals in prop::collection::vec(-5i64..=5, 7)) {
            let x: Vec<Rat> = (0..7).map(|i| if mask >> i & 1 == 1 { int(vals[i]) } else { int(0) }).collect();
            prop_assume!(!delta(&x).unwrap().vanishes());
            let r = reduce_to_normal_form(&x).unwrap();
            prop_assert_eq!(r.g.act(&x).unwrap(), r.y.to_vec());
        }
    }
}

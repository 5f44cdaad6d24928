//! The space (G₁ × GL(2), W ⊗ k²). A point is a pair x = (x₁, x₂) of
//! vectors in k⁷, read as the 7×2 matrix X = [x₁ x₂]; g = (g₁, g₂) acts by
//! X ↦ g₁·X·ᵗg₂. The relative invariant is the binary form
//! F_x(v) = Δ(v₁x₁ + v₂x₂), with F_{gx}(v) = χ(g₁)·F_x(v·g₂).

use serde::Serialize;

use crate::case1::{d_of, delta, g_alpha, lambda3, tau_in, Vec7};
use crate::cohomology::canonical_class_rep;
use crate::error::{Error, Result};
use crate::fields::{bounded_rationals, int, is_norm, rat_sqrt, squarefree_part, QuadElem, QuadField, Rat, SquareClass};
use crate::g2rep::GroupElem1;
use crate::linalg::{cayley, hermitian_diagonalize, HermitianMat, Mat, Scalar};

/// A point x = (x₁, x₂) of W ⊗ k².
#[derive(Clone, Debug, PartialEq)]
pub struct PairVec<T: Scalar> {
    pub x1: Vec7<T>,
    pub x2: Vec7<T>,
}

impl<T: Scalar> PairVec<T> {
    pub fn new(x1: Vec7<T>, x2: Vec7<T>) -> Self {
        PairVec { x1, x2 }
    }

    /// The 7×2 matrix [x₁ x₂].
    pub fn to_mat(&self) -> Mat<T> {
        Mat::from_fn(7, 2, self.x1[0].ctx(), |i, j| if j == 0 { self.x1[i].clone() } else { self.x2[i].clone() })
    }

    pub fn from_mat(m: &Mat<T>) -> Result<Self> {
        if m.dims() != (7, 2) {
            return Err(Error::DimensionMismatch { op: "pair", left: (7, 2), right: m.dims() });
        }
        Ok(PairVec { x1: Vec7::new(m.column(0))?, x2: Vec7::new(m.column(1))? })
    }

    /// v₁x₁ + v₂x₂.
    pub fn at(&self, v1: &T, v2: &T) -> Vec<T> {
        self.x1.iter().zip(self.x2.iter()).map(|(a, b)| v1.clone() * a + &(v2.clone() * b)).collect()
    }
}

impl PairVec<Rat> {
    pub fn lift(&self, field: QuadField) -> PairVec<QuadElem> {
        PairVec { x1: self.x1.lift(field), x2: self.x2.lift(field) }
    }
}

/// X ↦ g₁·X·ᵗg₂.
pub fn act2<T: Scalar>(g1: &Mat<T>, g2: &Mat<T>, x: &PairVec<T>) -> Result<PairVec<T>> {
    if g2.dims() != (2, 2) {
        return Err(Error::DimensionMismatch { op: "act2", left: (2, 2), right: g2.dims() });
    }
    PairVec::from_mat(&g1.checked_mul(&x.to_mat())?.checked_mul(&g2.transpose())?)
}

/// An element (g₁, g₂) of G₁ × GL(2).
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElem2<T: Scalar> {
    pub g1: GroupElem1<T>,
    pub g2: Mat<T>,
}

impl<T: Scalar> GroupElem2<T> {
    pub fn new(g1: Mat<T>, g2: Mat<T>) -> Result<Self> {
        if g2.dims() != (2, 2) {
            return Err(Error::DimensionMismatch { op: "g2", left: (2, 2), right: g2.dims() });
        }
        if g2.det()?.vanishes() {
            return Err(Error::Singular);
        }
        Ok(GroupElem2 { g1: GroupElem1::new(g1)?, g2 })
    }

    pub fn act(&self, x: &PairVec<T>) -> Result<PairVec<T>> {
        act2(self.g1.matrix(), &self.g2, x)
    }

    pub fn compose(&self, rhs: &GroupElem2<T>) -> GroupElem2<T> {
        GroupElem2 { g1: self.g1.compose(&rhs.g1), g2: &self.g2 * &rhs.g2 }
    }

    pub fn is_identity(&self) -> bool {
        self.g1.matrix().is_identity() && self.g2.is_identity()
    }
}

/// A·v₁² + B·v₁v₂ + C·v₂².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinForm<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> BinForm<T> {
    pub fn eval(&self, v1: &T, v2: &T) -> T {
        self.a.clone() * &(v1.clone() * v1) + &(self.b.clone() * &(v1.clone() * v2)) + &(self.c.clone() * &(v2.clone() * v2))
    }

    /// B² − 4AC.
    pub fn disc(&self) -> T {
        let four = T::rat_in(self.a.ctx(), int(4));
        self.b.clone() * &self.b - &(four * &(self.a.clone() * &self.c))
    }

    /// The form v ↦ F(v·g).
    pub fn compose(&self, g: &Mat<T>) -> BinForm<T> {
        let (p, r) = (g.get(0, 0), g.get(0, 1));
        let (q, t) = (g.get(1, 0), g.get(1, 1));
        let two = T::rat_in(self.a.ctx(), int(2));
        let quad = |x: &T, y: &T| self.a.clone() * &(x.clone() * x) + &(self.b.clone() * &(x.clone() * y)) + &(self.c.clone() * &(y.clone() * y));
        let cross = two.clone() * &self.a * &(p.clone() * q)
            + &(self.b.clone() * &(p.clone() * t + &(q.clone() * r)))
            + &(two * &self.c * &(r.clone() * t));
        BinForm { a: quad(p, r), b: cross, c: quad(q, t) }
    }

    pub fn scale(&self, k: &T) -> BinForm<T> {
        BinForm { a: k.clone() * &self.a, b: k.clone() * &self.b, c: k.clone() * &self.c }
    }
}

/// F_x(v) = Δ(v₁x₁ + v₂x₂) by polarization.
pub fn binary_form<T: Scalar>(x: &PairVec<T>) -> Result<BinForm<T>> {
    let a = delta(&x.x1)?;
    let c = delta(&x.x2)?;
    let sum: Vec<T> = x.x1.iter().zip(x.x2.iter()).map(|(p, q)| p.clone() + q).collect();
    let b = delta(&sum)? - &a - &c;
    Ok(BinForm { a, b, c })
}

/// Square class of disc F_x; it names the splitting field of F_x.
pub fn splitting_class(x: &PairVec<Rat>) -> Result<SquareClass> {
    let disc = binary_form(x)?.disc();
    if disc.vanishes() {
        return Err(Error::NotSemistable("disc(F_x) = 0".into()));
    }
    squarefree_part(&disc)
}

pub fn lambda2() -> Mat<Rat> {
    Mat::diag((), &[int(1), int(-1)])
}

fn nonzero(s: &Rat) -> Result<()> {
    if s.vanishes() {
        Err(Error::ZeroArgument("s"))
    } else {
        Ok(())
    }
}

/// H(s) = diag(−s, 1).
pub fn hermitian_h(s: &Rat) -> Mat<Rat> {
    Mat::diag((), &[-s.clone(), int(1)])
}

/// h(s) = diag(−s⁻¹, −1), the cocycle with Hermitian form H(s).
pub fn h_of(s: &Rat) -> Mat<Rat> {
    Mat::diag((), &[-s.recip(), int(-1)])
}

/// H̄(s) = diag(s⁻¹, −s, 1).
pub fn hermitian_bar(s: &Rat) -> Mat<Rat> {
    Mat::diag((), &[s.recip(), -s.clone(), int(1)])
}

/// h̄(s) = diag(s, −s⁻¹, −1).
pub fn h_bar_of(s: &Rat) -> Mat<Rat> {
    Mat::diag((), &[s.clone(), -s.recip(), int(-1)])
}

/// d₁(A) = diag(1, (det A)⁻¹, A, det A, ᵗA⁻¹) for A ∈ GL(2).
pub fn d1<T: Scalar>(a: &Mat<T>) -> Result<Mat<T>> {
    if a.dims() != (2, 2) {
        return Err(Error::DimensionMismatch { op: "d1", left: (2, 2), right: a.dims() });
    }
    let det = a.det()?;
    let ctx = a.ctx();
    let inner = Mat::block_diag(ctx, &[&Mat::diag(ctx, &[det.try_inv()?]), a]);
    d_of(&inner)
}

/// d₂(A) = diag(det A, (det A)⁻¹).
pub fn d2<T: Scalar>(a: &Mat<T>) -> Result<Mat<T>> {
    let det = a.det()?;
    Ok(Mat::diag(a.ctx(), &[det.clone(), det.try_inv()?]))
}

/// τ₂, the swap of v₁ and v₂.
pub fn tau2<T: Scalar>(ctx: T::Ctx) -> Mat<T> {
    let (z, o) = (T::zero_in(ctx), T::one_in(ctx));
    Mat::from_rows(ctx, vec![vec![z.clone(), o.clone()], vec![o, z]]).expect("2x2")
}

/// g_{α,2} = [[1, 1], [α, −α]].
pub fn g_alpha2(field: QuadField) -> Mat<QuadElem> {
    let a = field.alpha();
    Mat::from_rows(field, vec![vec![field.one(), field.one()], vec![a.clone(), -a]]).expect("2x2")
}

/// w = v₁e₂ + v₂e₅, with F_w = −4v₁v₂.
pub fn w2() -> PairVec<Rat> {
    PairVec { x1: Vec7::basis((), 1), x2: Vec7::basis((), 4) }
}

/// w(s) = v₁·ᵗ(0,0,(1+s)/2,(1−s)/2,0,0,0) + v₂·ᵗ(0,0,0,0,0,(1+s)/2,−(1−s)/2).
pub fn w_of_s(s: &Rat) -> Result<PairVec<Rat>> {
    nonzero(s)?;
    let p = (int(1) + s) / int(2);
    let m = (int(1) - s) / int(2);
    let mut x1 = vec![int(0); 7];
    let mut x2 = vec![int(0); 7];
    x1[2] = p.clone();
    x1[3] = m.clone();
    x2[5] = p;
    x2[6] = -m;
    Ok(PairVec { x1: Vec7::new(x1)?, x2: Vec7::new(x2)? })
}

/// A(s), defined as the product of five elementary factors.
pub fn a_of_s(s: &Rat) -> Result<Mat<Rat>> {
    nonzero(s)?;
    let swap = Mat::from_ints(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    let rot = Mat::from_ratios(&[&[(1, 2), (-1, 2), (0, 1)], &[(1, 2), (1, 2), (0, 1)], &[(0, 1), (0, 1), (1, 1)]]);
    let m = Mat::from_ints(&[&[1, 1, 0], &[-1, 1, 0], &[0, 0, 1]]);
    let d_inv = Mat::diag((), &[-s.recip(), int(1), int(1)]);
    let d_s = Mat::diag((), &[-s.clone(), int(1), int(1)]);
    Ok(&(&(&(&swap * &rot) * &d_inv) * &m) * &d_s)
}

/// B₁(s) = diag(1, Λ)·*A(s)⁻¹·diag(1, Λ).
pub fn b1_of_s(s: &Rat) -> Result<Mat<Rat>> {
    let lam = lambda3(());
    Ok(&(&lam * &a_of_s(s)?.transpose().inverse()?) * &lam)
}

/// B(s) = (diag(1, B₁(s), *B₁(s)⁻¹), diag(s, 1)).
pub fn b_of_s(s: &Rat) -> Result<(Mat<Rat>, Mat<Rat>)> {
    let b1 = b1_of_s(s)?;
    let first = Mat::block_diag((), &[&Mat::identity(1, ()), &b1, &b1.transpose().inverse()?]);
    Ok((first, Mat::diag((), &[s.clone(), int(1)])))
}

/// w_α(s) = g_α·w(s); every coordinate is rational.
pub fn representative(field: QuadField, s: &Rat) -> Result<PairVec<Rat>> {
    let ws = w_of_s(s)?.lift(field);
    let x = act2(&g_alpha(field), &g_alpha2(field), &ws)?;
    let m = x.to_mat().to_rational().ok_or_else(|| Error::Invariant("w_α(s) has irrational coordinates".into()))?;
    PairVec::from_mat(&m)
}

/// Orbits w_α(s₁), w_α(s₂) agree iff s₁/s₂ or s₁s₂ is a norm from K.
pub fn same_orbit_constructed(field: QuadField, s1: &Rat, s2: &Rat) -> Result<bool> {
    nonzero(s1)?;
    nonzero(s2)?;
    Ok(is_norm(field, &(s1 / s2))? || is_norm(field, &(s1 * s2))?)
}

/// The canonical class representative of s in ℚ×/N(K×) (s and s⁻¹ share a class).
pub fn canonical_s(field: QuadField, s: &Rat) -> Result<Rat> {
    Ok(Rat::from_integer(canonical_class_rep(field, s)?))
}

/// B(s)⁻¹·τ·B(s)^σ·τ, B(s)⁻¹·τ·B(s)·τ and d(h(s)) all agree, checked over K.
pub fn verify_tau_twist_identity(field: QuadField, s: &Rat) -> Result<bool> {
    let (b1, b2) = b_of_s(s)?;
    tau_twist_identity_holds(field, s, &b1, &b2)
}

/// The same identity for an arbitrary candidate B; used for negative controls.
pub fn tau_twist_identity_holds(field: QuadField, s: &Rat, b1: &Mat<Rat>, b2: &Mat<Rat>) -> Result<bool> {
    let (b1, b2) = (b1.lift(field), b2.lift(field));
    let (t1, t2) = (tau_in::<QuadElem>(field), tau2::<QuadElem>(field));
    let h = h_of(s).lift(field);
    let (dh1, dh2) = (d1(&h)?, d2(&h)?);
    let side = |b: &Mat<QuadElem>, bs: &Mat<QuadElem>, t: &Mat<QuadElem>| -> Result<Mat<QuadElem>> {
        Ok(&(&(&b.inverse()? * t) * bs) * t)
    };
    let sigma1 = side(&b1, &b1.conj(), &t1)?;
    let plain1 = side(&b1, &b1, &t1)?;
    let sigma2 = side(&b2, &b2.conj(), &t2)?;
    let plain2 = side(&b2, &b2, &t2)?;
    Ok(sigma1 == plain1 && plain1 == dh1 && sigma2 == plain2 && plain2 == dh2)
}

/// The two components of B(s)⁻¹·τ·B(s) as computed:
/// ([[1,0,0],[0,0,H̄(s)⁻¹],[0,H̄(s),0]], [[0, s⁻¹],[s, 0]]).
pub fn tau_conjugate_by_b(s: &Rat) -> Result<(Mat<Rat>, Mat<Rat>)> {
    nonzero(s)?;
    let hb = hermitian_bar(s);
    let mut first = Mat::zeros(7, 7, ());
    first.set(0, 0, int(1));
    first.paste(1, 4, &hb.inverse()?);
    first.paste(4, 1, &hb);
    let second = Mat::from_rows((), vec![vec![int(0), s.recip()], vec![s.clone(), int(0)]])?;
    Ok((first, second))
}

/// The sign-flipped second component [[0, −s⁻¹],[−s, 0]], a negative control.
pub fn tau_conjugate_negated_second(s: &Rat) -> Result<Mat<Rat>> {
    nonzero(s)?;
    Mat::from_rows((), vec![vec![int(0), -s.recip()], vec![-s.clone(), int(0)]])
}

/// B(s)⁻¹·τ·B(s) = [`tau_conjugate_by_b`] in both components.
pub fn verify_tau_conjugate(s: &Rat) -> Result<bool> {
    let (b1, b2) = b_of_s(s)?;
    let (r1, r2) = tau_conjugate_by_b(s)?;
    let lhs1 = &(&b1.inverse()? * &tau_in::<Rat>(())) * &b1;
    let lhs2 = &(&b2.inverse()? * &tau2::<Rat>(())) * &b2;
    Ok(lhs1 == r1 && lhs2 == r2)
}

/// A nonzero x over K with −N(x₁)/(ab) + a·N(x₂) + b·N(x₃) = 0.
pub type Witness = [QuadElem; 3];

pub fn witness_residual(a: &Rat, b: &Rat, x: &Witness) -> Rat {
    -(x[0].norm() / (a * b)) + a * x[1].norm() + b * x[2].norm()
}

/// Semi-decision search for a witness. `None` does not disprove existence,
/// except in the definite case.
///
/// Scaling (x₂, x₃) by u ∈ K× multiplies the target N(x₁) = ab·(a·N(x₂) +
/// b·N(x₃)) by N(u), so x₂ may be taken to be a rational integer u ≥ 0 and
/// x₃ = p + qα integral up to sign. Triples (u, p, q) are enumerated by
/// max-norm shells up to `bound`; targets must pass the local norm test.
pub fn find_isotropic_witness(field: QuadField, a: &Rat, b: &Rat, bound: u64) -> Option<Witness> {
    if a.vanishes() || b.vanishes() || bound == 0 {
        return None;
    }
    // d < 0 and a, b < 0: every term is ≤ 0, so the form is definite.
    let zero = int(0);
    if field.d() < 0 && *a < zero && *b < zero {
        return None;
    }
    let ab = a * b;
    for radius in 1..=bound as i64 {
        for [u, p, q] in shell(radius) {
            let x2 = field.from_rat(int(u));
            let x3 = field.elem(int(p), int(q));
            let t = &ab * (a * x2.norm() + b * x3.norm());
            let x1 = if t.vanishes() {
                Some(field.zero())
            } else if field.d() < 0 && t < zero {
                None
            } else if is_norm(field, &t).unwrap_or(false) {
                norm_preimage(field, &t, bound)
            } else {
                None
            };
            if let Some(x1) = x1 {
                let w = [x1, x2, x3];
                debug_assert!(witness_residual(a, b, &w).vanishes());
                return Some(w);
            }
        }
    }
    None
}

/// Triples (u, p, q) with u ≥ 0, (p, q) ≥ (0, 0) lexicographically up to
/// sign, and max(u, |p|, |q|) = r.
fn shell(r: i64) -> impl Iterator<Item = [i64; 3]> {
    (0..=r).flat_map(move |u| {
        (0..=r).flat_map(move |p| {
            let qs = if p == 0 { 0..=r } else { -r..=r };
            qs.map(move |q| [u, p, q])
        })
    })
    .filter(move |c| c.iter().any(|x| x.abs() == r))
}

/// x with N(x) = t and the α-coordinate of height ≤ bound.
fn norm_preimage(field: QuadField, t: &Rat, bound: u64) -> Option<QuadElem> {
    let d = field.d_rat();
    bounded_rationals(bound).find_map(|y| rat_sqrt(&(t + &d * &y * &y)).map(|x| field.elem(x, y)))
}

/// Normal form of a 2×2 Hermitian H: returns (T, s) with T·H·*T = diag(−s, 1).
///
/// With a witness, diagonalizes H to diag(a, b) and runs the construction
/// for its branch (x₁ ≠ 0 or x₁ = 0). Without one, succeeds only when the
/// diagonalization already has the shape diag(−s, 1) or diag(1, −s).
pub fn normalize_hermitian2(h: &HermitianMat<QuadElem>, witness: Option<&Witness>) -> Result<(Mat<QuadElem>, Rat)> {
    let f = h.as_mat().ctx();
    if h.as_mat().dims() != (2, 2) {
        return Err(Error::DimensionMismatch { op: "normalize_hermitian2", left: (2, 2), right: h.as_mat().dims() });
    }
    if h.as_mat().det()?.is_zero() {
        return Err(Error::Degenerate);
    }
    let (p, dmat) = hermitian_diagonalize(h)?;
    let a = dmat.get(0, 0).to_rat().ok_or_else(|| Error::Invariant("irrational diagonal".into()))?;
    let b = dmat.get(1, 1).to_rat().ok_or_else(|| Error::Invariant("irrational diagonal".into()))?;
    let (t, s) = match witness {
        None => {
            if h.as_mat().is_diagonal() && h.as_mat().get(1, 1).to_rat() == Some(int(1)) {
                (Mat::identity(2, f), -h.as_mat().get(0, 0).to_rat().expect("Hermitian diagonal"))
            } else if b == int(1) {
                (p, -a)
            } else if a == int(1) {
                (&tau2::<QuadElem>(f) * &p, -b)
            } else {
                return Err(Error::MissingWitness);
            }
        }
        Some(x) => {
            if x.iter().any(|e| e.field() != f) {
                return Err(Error::InvalidWitness("witness lies in another field".into()));
            }
            if x.iter().all(QuadElem::is_zero) || !witness_residual(&a, &b, x).vanishes() {
                return Err(Error::InvalidWitness(format!("residual {} ≠ 0 for diag({a}, {b})", witness_residual(&a, &b, x))));
            }
            if !x[0].is_zero() {
                let x1i = x[0].inv()?;
                let z1 = &x[2].scale(&b) * &x1i;
                let z2 = &x[1].scale(&a) * &x1i;
                let m = Mat::from_rows(f, vec![vec![z2.conj().scale(&b), -z1.conj().scale(&a)], vec![z1, z2]])?;
                (&m * &p, -(&a * &b))
            } else {
                if x[2].is_zero() || x[1].is_zero() {
                    return Err(Error::InvalidWitness("x₁ = 0 needs x₂, x₃ ≠ 0".into()));
                }
                let z = x[1].checked_div(&x[2])?;
                let scale = Mat::diag(f, &[z, f.one()]);
                let m = Mat::from_ints(&[&[1, 1], &[-1, 1]]);
                let mid = Mat::diag((), &[b.recip(), int(1)]);
                let adj = &(&m.inverse()? * &mid) * &m;
                (&(&adj.lift(f) * &scale) * &p, int(1))
            }
        }
    };
    let target = hermitian_h(&s).lift(f);
    if *h.congruence(&t)?.as_mat() != target {
        return Err(Error::Invariant("normalization missed diag(−s, 1)".into()));
    }
    Ok((t, s))
}

/// A ∈ U(H(s)): A invertible and *A·H(s)·A = H(s).
pub fn u_h_check(a: &Mat<QuadElem>, s: &Rat) -> bool {
    if a.dims() != (2, 2) || s.vanishes() || a.det().map_or(true, |d| d.is_zero()) {
        return false;
    }
    let h = hermitian_h(s).lift(a.ctx());
    &(&a.star() * &h) * a == h
}

/// Element of U(H(s)) from a skew-Hermitian K: Cayley transform of H(s)⁻¹·K.
pub fn unitary_sample_cayley(k: &Mat<QuadElem>, s: &Rat) -> Result<Mat<QuadElem>> {
    nonzero(s)?;
    if k.dims() != (2, 2) {
        return Err(Error::DimensionMismatch { op: "cayley", left: (2, 2), right: k.dims() });
    }
    if k.star() != -k {
        return Err(Error::Precondition("K must be skew-Hermitian".into()));
    }
    let f = k.ctx();
    let sm = &hermitian_h(s).inverse()?.lift(f) * k;
    let a = cayley(&sm)?;
    if !u_h_check(&a, s) {
        return Err(Error::Invariant("Cayley sample left U(H(s))".into()));
    }
    Ok(a)
}

/// Precomputed conjugators g_α·B(s) and the point w_α(s) for repeated
/// stabilizer embeddings.
pub struct Stabilizer2 {
    s: Rat,
    m1: Mat<QuadElem>,
    m1_inv: Mat<QuadElem>,
    m2: Mat<QuadElem>,
    m2_inv: Mat<QuadElem>,
    ws: PairVec<Rat>,
}

impl Stabilizer2 {
    pub fn new(field: QuadField, s: &Rat) -> Result<Self> {
        let (b1, b2) = b_of_s(s)?;
        let m1 = &g_alpha(field) * &b1.lift(field);
        let m2 = &g_alpha2(field) * &b2.lift(field);
        Ok(Stabilizer2 {
            s: s.clone(),
            m1_inv: m1.inverse()?,
            m2_inv: m2.inverse()?,
            m1,
            m2,
            ws: representative(field, s)?,
        })
    }

    /// (g_α·B(s))·d(A)·(g_α·B(s))⁻¹, a rational element of the stabilizer of w_α(s).
    pub fn embed(&self, a: &Mat<QuadElem>) -> Result<GroupElem2<Rat>> {
        if a.ctx() != self.m1.ctx() {
            return Err(Error::FieldMismatch(a.ctx().d(), self.m1.ctx().d()));
        }
        if !u_h_check(a, &self.s) {
            return Err(Error::Precondition("A is not in U(H(s))".into()));
        }
        let g1 = &(&self.m1 * &d1(a)?) * &self.m1_inv;
        let g2 = &(&self.m2 * &d2(a)?) * &self.m2_inv;
        let irrational = || Error::Invariant("stabilizer element is not rational".into());
        let g1 = g1.to_rational().ok_or_else(irrational)?;
        let g2 = g2.to_rational().ok_or_else(irrational)?;
        if act2(&g1, &g2, &self.ws)? != self.ws {
            return Err(Error::Invariant("stabilizer element moves w_α(s)".into()));
        }
        GroupElem2::new(g1, g2).map_err(|e| Error::Invariant(format!("stabilizer element not in G: {e}")))
    }
}

/// (g_α·B(s))·d(A)·(g_α·B(s))⁻¹, a rational element of the stabilizer of w_α(s).
pub fn stabilizer_embed2(a: &Mat<QuadElem>, s: &Rat) -> Result<GroupElem2<Rat>> {
    nonzero(s)?;
    Stabilizer2::new(a.ctx(), s)?.embed(a)
}

/// Summary of a rational point of the case-2 space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormReport {
    #[serde(serialize_with = "crate::io::ser_rat_vec")]
    pub form: Vec<Rat>,
    #[serde(serialize_with = "crate::io::ser_rat")]
    pub disc: Rat,
    pub class: SquareClass,
}

pub fn form_report(x: &PairVec<Rat>) -> Result<FormReport> {
    let f = binary_form(x)?;
    let class = splitting_class(x)?;
    Ok(FormReport { disc: f.disc(), form: vec![f.a, f.b, f.c], class })
}

/// Scalar (t⁻¹I₇, tI₂) of the kernel of the action.
pub fn kernel_elem(t: &Rat) -> Result<GroupElem2<Rat>> {
    nonzero(t)?;
    GroupElem2::new(Mat::identity(7, ()).scale(&t.recip()), Mat::identity(2, ()).scale(t))
}

//! The representation ∧³ of GL(7) on 35-dimensional trivectors, the trivector
//! w̄ = e₂₃₄ + e₅₆₇ + e₁₂₅ + e₁₃₆ + e₁₄₇, and the group G₁ of g with
//! g·w̄ = c(g)·w̄.
//!
//! Basis triples (i < j < k) are 0-based and in lexicographic order; the
//! coordinate of e_i ∧ e_j ∧ e_k sits at `triple_index(i, j, k)`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::case1::delta;
use crate::error::{Error, Result};
use crate::fields::Rat;
use crate::linalg::{Mat, Scalar};

pub const DIM: usize = 35;

/// The 35 triples i < j < k in 0..7, lexicographic.
pub fn triples() -> &'static [[usize; 3]; DIM] {
    static T: OnceLock<[[usize; 3]; DIM]> = OnceLock::new();
    T.get_or_init(|| {
        let mut out = [[0; 3]; DIM];
        let mut n = 0;
        for i in 0..7 {
            for j in i + 1..7 {
                for k in j + 1..7 {
                    out[n] = [i, j, k];
                    n += 1;
                }
            }
        }
        out
    })
}

/// Position of e_i ∧ e_j ∧ e_k for i < j < k < 7.
pub fn triple_index(i: usize, j: usize, k: usize) -> usize {
    assert!(i < j && j < k && k < 7, "triple must be strictly increasing below 7");
    triples().iter().position(|t| *t == [i, j, k]).expect("triple present")
}

/// Support of w̄ (0-based).
pub const WBAR_TRIPLES: [[usize; 3]; 5] = [[1, 2, 3], [4, 5, 6], [0, 1, 4], [0, 2, 5], [0, 3, 6]];

#[derive(Clone, Debug, PartialEq)]
pub struct TriVector<T: Scalar> {
    coords: Vec<T>,
}

impl<T: Scalar> TriVector<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.len() != DIM {
            return Err(Error::DimensionMismatch { op: "trivector", left: (DIM, 1), right: (coords.len(), 1) });
        }
        Ok(TriVector { coords })
    }

    pub fn zero(ctx: T::Ctx) -> Self {
        TriVector { coords: vec![T::zero_in(ctx); DIM] }
    }

    /// e_i ∧ e_j ∧ e_k for arbitrary distinct indices, with the sign of the
    /// sorting permutation; zero on a repeated index.
    pub fn basis(ctx: T::Ctx, i: usize, j: usize, k: usize) -> Self {
        let mut v = TriVector::zero(ctx);
        if i == j || j == k || i == k {
            return v;
        }
        let mut t = [i, j, k];
        let mut odd = false;
        for a in 0..3 {
            for b in 0..2 - a {
                if t[b] > t[b + 1] {
                    t.swap(b, b + 1);
                    odd = !odd;
                }
            }
        }
        let one = T::one_in(ctx);
        v.coords[triple_index(t[0], t[1], t[2])] = if odd { -one } else { one };
        v
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn scale(&self, c: &T) -> Self {
        TriVector { coords: self.coords.iter().map(|x| c.clone() * x).collect() }
    }

    /// The c with self = c·other, if one exists; `other` must be nonzero.
    pub fn ratio_to(&self, other: &TriVector<T>) -> Option<T> {
        let i = other.coords.iter().position(|x| !x.vanishes())?;
        let c = self.coords[i].clone() * &other.coords[i].try_inv().ok()?;
        (self.coords.iter().zip(&other.coords).all(|(a, b)| *a == c.clone() * b)).then_some(c)
    }
}

/// w̄ with coefficients in the scalar type `T`.
pub fn wbar<T: Scalar>(ctx: T::Ctx) -> TriVector<T> {
    let mut v = TriVector::zero(ctx);
    for [i, j, k] in WBAR_TRIPLES {
        v.coords[triple_index(i, j, k)] = T::one_in(ctx);
    }
    v
}

/// The 2×2 minors of columns (c₁, c₂) of g, indexed by row pairs r₁ < r₂.
fn column_minors2<T: Scalar>(g: &Mat<T>, c1: usize, c2: usize) -> [[Option<T>; 7]; 7] {
    let mut m: [[Option<T>; 7]; 7] = Default::default();
    for r1 in 0..7 {
        for r2 in r1 + 1..7 {
            let (a, b, c, d) = (g.get(r1, c1), g.get(r2, c2), g.get(r1, c2), g.get(r2, c1));
            let left = (!a.vanishes() && !b.vanishes()).then(|| a.clone() * b);
            let right = (!c.vanishes() && !d.vanishes()).then(|| c.clone() * d);
            m[r1][r2] = match (left, right) {
                (None, None) => None,
                (Some(l), None) => Some(l),
                (None, Some(r)) => Some(-r),
                (Some(l), Some(r)) => Some(l - &r).filter(|x| !x.vanishes()),
            };
        }
    }
    m
}

/// All 35 minors of g on column triple c, by Laplace expansion along the
/// first column of the triple. Zero minors are `None`.
fn column_minors3<T: Scalar>(g: &Mat<T>, c: &[usize; 3]) -> Vec<Option<T>> {
    let m2 = column_minors2(g, c[1], c[2]);
    triples()
        .iter()
        .map(|&[i, j, k]| {
            let terms = [(i, &m2[j][k], false), (j, &m2[i][k], true), (k, &m2[i][j], false)];
            terms.into_iter().fold(None, |acc: Option<T>, (r, minor, negate)| {
                let (Some(minor), false) = (minor, g.get(r, c[0]).vanishes()) else { return acc };
                let t = g.get(r, c[0]).clone() * minor;
                let t = if negate { -t } else { t };
                Some(match acc {
                    None => t,
                    Some(a) => a + &t,
                })
            })
        })
        .collect()
}

fn check_seven<T: Scalar>(g: &Mat<T>) -> Result<()> {
    if g.dims() != (7, 7) {
        return Err(Error::DimensionMismatch { op: "wedge", left: (7, 7), right: g.dims() });
    }
    Ok(())
}

/// The 35×35 matrix of ∧³g: entry (I, J) is the minor of g on rows I, columns J.
pub fn exterior_cube<T: Scalar>(g: &Mat<T>) -> Result<Mat<T>> {
    check_seven(g)?;
    let ctx = g.ctx();
    let mut out = Mat::zeros(DIM, DIM, ctx);
    for (b, c) in triples().iter().enumerate() {
        for (a, minor) in column_minors3(g, c).into_iter().enumerate() {
            if let Some(x) = minor {
                out.set(a, b, x);
            }
        }
    }
    Ok(out)
}

/// Coordinates of ∧³g applied to ω.
pub fn wedge_action<T: Scalar>(g: &Mat<T>, omega: &TriVector<T>) -> Result<TriVector<T>> {
    check_seven(g)?;
    let ctx = g.ctx();
    let one = T::one_in(ctx);
    let mut coords = vec![T::zero_in(ctx); DIM];
    for (j, c) in triples().iter().enumerate() {
        let w = &omega.coords[j];
        if w.vanishes() {
            continue;
        }
        for (i, minor) in column_minors3(g, c).into_iter().enumerate() {
            if let Some(x) = minor {
                let term = if *w == one { x } else { x * w };
                coords[i] = coords[i].clone() + &term;
            }
        }
    }
    Ok(TriVector { coords })
}

/// c with g·w̄ = c·w̄, or `None` if g is not in G₁ (or is singular).
///
/// The test runs on the integral matrix D·g, D the common denominator, and
/// rescales: ∧³(D·g) = D³·∧³g.
pub fn g1_membership<T: Scalar>(g: &Mat<T>) -> Option<T> {
    let ctx = g.ctx();
    let den = g.as_slice().iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denominator()));
    let w = wbar::<T>(ctx);
    if den.is_one() {
        let image = wedge_action(g, &w).ok()?;
        return image.ratio_to(&w).filter(|c| !c.vanishes());
    }
    let scale = T::rat_in(ctx, Rat::from_integer(den.clone()));
    let image = wedge_action(&g.scale(&scale), &w).ok()?;
    let c = image.ratio_to(&w).filter(|c| !c.vanishes())?;
    let cube = Rat::from_integer(den.pow(3u32));
    Some(c * &T::rat_in(ctx, cube.recip()))
}

/// The characters of an element of G₁: c (on w̄), χ (on Δ) and χ′ = c/χ.
#[derive(Clone, Debug, PartialEq)]
pub struct Characters<T: Scalar> {
    pub c: T,
    pub chi: T,
    pub chi_prime: T,
}

/// Computes (c, χ, χ′) from χ = Δ(g·probe)/Δ(probe) and enforces c = χ′³,
/// χ = χ′².
pub fn characters<T: Scalar>(g: &Mat<T>, probe: &[T]) -> Result<Characters<T>> {
    let c = g1_membership(g).ok_or(Error::NotInGroup)?;
    let d0 = delta(probe)?;
    if d0.vanishes() {
        return Err(Error::NotSemistable("probe has zero discriminant".into()));
    }
    let gx = g.mul_vec(probe)?;
    let chi = delta(&gx)? * &d0.try_inv()?;
    let chi_prime = c.clone() * &chi.try_inv()?;
    if chi_prime.clone() * &chi_prime != chi || chi.clone() * &chi_prime != c {
        return Err(Error::Invariant(format!("characters inconsistent: c={c}, chi={chi}")));
    }
    Ok(Characters { c, chi, chi_prime })
}

/// An element of G₁ with its characters cached; ∧³g is computed on demand.
#[derive(Clone, Debug)]
pub struct GroupElem1<T: Scalar> {
    m: Mat<T>,
    c: T,
    chi_prime: T,
    cube: OnceLock<Mat<T>>,
}

impl<T: Scalar> PartialEq for GroupElem1<T> {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl<T: Scalar> GroupElem1<T> {
    /// Verifies membership and computes characters using the probe e₁
    /// (Δ(e₁) = 1).
    pub fn new(m: Mat<T>) -> Result<Self> {
        let mut e1 = vec![T::zero_in(m.ctx()); 7];
        e1[0] = T::one_in(m.ctx());
        let ch = characters(&m, &e1)?;
        Ok(GroupElem1 { m, c: ch.c, chi_prime: ch.chi_prime, cube: OnceLock::new() })
    }

    pub fn identity(ctx: T::Ctx) -> Self {
        let one = T::one_in(ctx);
        GroupElem1 { m: Mat::identity(7, ctx), c: one.clone(), chi_prime: one, cube: OnceLock::new() }
    }

    pub fn matrix(&self) -> &Mat<T> {
        &self.m
    }

    pub fn into_matrix(self) -> Mat<T> {
        self.m
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn chi_prime(&self) -> &T {
        &self.chi_prime
    }

    pub fn chi(&self) -> T {
        self.chi_prime.clone() * &self.chi_prime
    }

    pub fn det(&self) -> T {
        self.m.det().expect("7x7 is square")
    }

    pub fn cube(&self) -> &Mat<T> {
        self.cube.get_or_init(|| exterior_cube(&self.m).expect("7x7"))
    }

    pub fn act(&self, x: &[T]) -> Result<Vec<T>> {
        self.m.mul_vec(x)
    }

    pub fn act_tri(&self, omega: &TriVector<T>) -> TriVector<T> {
        let coords = self.cube().mul_vec(&omega.coords).expect("35-dim");
        TriVector { coords }
    }

    /// Product self·rhs; characters multiply.
    pub fn compose(&self, rhs: &GroupElem1<T>) -> GroupElem1<T> {
        GroupElem1 {
            m: &self.m * &rhs.m,
            c: self.c.clone() * &rhs.c,
            chi_prime: self.chi_prime.clone() * &rhs.chi_prime,
            cube: OnceLock::new(),
        }
    }

    pub fn inverse(&self) -> Result<GroupElem1<T>> {
        Ok(GroupElem1 {
            m: self.m.inverse()?,
            c: self.c.try_inv()?,
            chi_prime: self.chi_prime.try_inv()?,
            cube: OnceLock::new(),
        })
    }

    /// Re-derives membership and characters from the matrix alone.
    pub fn verify(&self) -> Result<()> {
        let fresh = GroupElem1::new(self.m.clone())?;
        if fresh.c != self.c || fresh.chi_prime != self.chi_prime {
            return Err(Error::Invariant("cached characters disagree with matrix".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case1::{d_of, h0, tau, u1, u2};
    use crate::fields::{int, rat, QuadField, Rat};
    use proptest::prelude::*;

    #[test]
    fn basis_order_and_signs() {
        assert_eq!(triples()[0], [0, 1, 2]);
        assert_eq!(triples()[34], [4, 5, 6]);
        assert_eq!(triple_index(0, 1, 4), 2);
        let v = TriVector::<Rat>::basis((), 2, 0, 1);
        assert_eq!(v.coords()[0], int(1));
        let v = TriVector::<Rat>::basis((), 1, 0, 2);
        assert_eq!(v.coords()[0], int(-1));
        assert!(TriVector::<Rat>::basis((), 1, 1, 2).coords().iter().all(|x| *x == int(0)));
    }

    #[test]
    fn identity_and_scalar_action() {
        let w = wbar::<Rat>(());
        assert_eq!(wedge_action(&Mat::identity(7, ()), &w).unwrap(), w);
        let t = rat(-3, 2);
        let g = Mat::identity(7, ()).scale(&t);
        let omega = TriVector::new((0..35).map(|i| int(i as i64 - 17)).collect()).unwrap();
        assert_eq!(wedge_action(&g, &omega).unwrap(), omega.scale(&(&t * &t * &t)));
        let ch = characters(&g, &wbar_probe()).unwrap();
        assert_eq!(ch, Characters { c: &t * &t * &t, chi: &t * &t, chi_prime: t });
    }

    fn wbar_probe() -> Vec<Rat> {
        let mut e = vec![int(0); 7];
        e[0] = int(1);
        e
    }

    #[test]
    fn frozen_characters_of_constants() {
        // Values computed once by running the action; they are not stated in closed form elsewhere.
        assert_eq!(g1_membership(&tau()), Some(int(-1)));
        assert_eq!(g1_membership(&h0()), Some(int(1)));
        assert_eq!(h0().det().unwrap(), int(1));
        let t = GroupElem1::new(tau()).unwrap();
        assert_eq!((t.c(), t.chi_prime(), t.chi()), (&int(-1), &int(-1), int(1)));
    }

    #[test]
    fn unipotents_and_sl3_have_trivial_character() {
        assert_eq!(g1_membership(&u1(&int(1), &int(2), &int(3))), Some(int(1)));
        assert_eq!(g1_membership(&u2(&int(-1), &int(0), &int(5))), Some(int(1)));
        let a = Mat::from_ints(&[&[2, 1, 0], &[1, 1, 0], &[3, 4, 1]]);
        let g = GroupElem1::new(d_of(&a).unwrap()).unwrap();
        assert_eq!((g.c(), g.chi_prime()), (&int(1), &int(1)));
    }

    #[test]
    fn non_members_are_rejected() {
        let g = Mat::<Rat>::diag((), &[int(1), int(2), int(1), int(1), int(1), int(1), int(1)]);
        assert_eq!(g1_membership(&g), None);
        assert!(matches!(GroupElem1::new(g), Err(Error::NotInGroup)));
        assert_eq!(g1_membership(&Mat::<Rat>::zeros(7, 7, ())), None);
        let bad = vec![int(0); 7];
        assert!(matches!(characters(&tau(), &bad), Err(Error::NotSemistable(_))));
    }

    #[test]
    fn quadratic_generator_scales_wbar_by_alpha_cubed() {
        for d in [-1, 2, -7] {
            let f = QuadField::new(d).unwrap();
            let g = crate::case1::g_alpha(f);
            let a = f.alpha();
            assert_eq!(g1_membership(&g), Some(a.pow(3)));
        }
    }

    fn int_mat() -> impl Strategy<Value = Mat<Rat>> {
        prop::collection::vec(-3i64..=3, 49)
            .prop_map(|v| Mat::from_vec(7, 7, (), v.into_iter().map(int).collect()).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn action_is_a_homomorphism(g in int_mat(), h in int_mat(), w in prop::collection::vec(-4i64..=4, 35)) {
            let omega = TriVector::new(w.into_iter().map(int).collect()).unwrap();
            let lhs = wedge_action(&(&g * &h), &omega).unwrap();
            let rhs = wedge_action(&g, &wedge_action(&h, &omega).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn cube_determinant_is_fifteenth_power(g in int_mat()) {
            let dg = g.det().unwrap();
            let mut p = int(1);
            for _ in 0..15 {
                p = &p * &dg;
            }
            prop_assert_eq!(exterior_cube(&g).unwrap().det().unwrap(), p);
        }

        #[test]
        fn characters_are_multiplicative(
            a in (-3i64..=3, -3i64..=3, -3i64..=3),
            b in (-3i64..=3, -3i64..=3, -3i64..=3),
            t in prop::sample::select(vec![rat(1, 2), int(-3), int(2)]),
            flip in any::<bool>(),
        ) {
            let mut g = GroupElem1::new(u1(&int(a.0), &int(a.1), &int(a.2))).unwrap();
            if flip {
                g = g.compose(&GroupElem1::new(tau()).unwrap());
            }
            let h = GroupElem1::new(&u2(&int(b.0), &int(b.1), &int(b.2)) * &Mat::identity(7, ()).scale(&t)).unwrap();
            let gh = g.compose(&h);
            prop_assert!(gh.verify().is_ok());
            prop_assert_eq!(gh.c(), &(g.c().clone() * h.c()));
            prop_assert_eq!(gh.chi_prime(), &(g.chi_prime().clone() * h.chi_prime()));
            prop_assert_eq!(gh.act_tri(&wbar(())), wbar(()).scale(gh.c()));
        }
    }
}

//! Dense exact matrices over ℚ or a quadratic field ℚ(α).
//!
//! `*A` denotes the conjugate transpose ᵗA^σ. Over ℚ the conjugation is the
//! identity and Hermitian means symmetric.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fields::{QuadElem, QuadField, Rat};

/// Scalars a matrix can hold. `Ctx` carries whatever is needed to build
/// constants (nothing for ℚ, the field for ℚ(α)).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    type Ctx: Copy + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: Self::Ctx) -> Self;
    fn one_in(ctx: Self::Ctx) -> Self;
    fn rat_in(ctx: Self::Ctx, q: Rat) -> Self;
    fn vanishes(&self) -> bool;
    fn try_inv(&self) -> Result<Self>;
    /// Galois conjugate σ(x).
    fn conjugate(&self) -> Self;
    fn rational_value(&self) -> Option<Rat>;
    /// A generator of the field over ℚ, if it is not ℚ itself.
    fn generator(ctx: Self::Ctx) -> Option<Self>;
    /// Least positive integer n with n·x integral in the ℤ-span of 1 and
    /// the generator.
    fn denominator(&self) -> BigInt;
}

impl Scalar for Rat {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero_in(_: ()) -> Self {
        Rat::zero()
    }
    fn one_in(_: ()) -> Self {
        Rat::one()
    }
    fn rat_in(_: (), q: Rat) -> Self {
        q
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn conjugate(&self) -> Self {
        self.clone()
    }
    fn rational_value(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn denominator(&self) -> BigInt {
        self.denom().clone()
    }
    fn generator(_: ()) -> Option<Self> {
        None
    }
}

impl Scalar for QuadElem {
    type Ctx = QuadField;

    fn ctx(&self) -> QuadField {
        self.field()
    }
    fn zero_in(f: QuadField) -> Self {
        f.zero()
    }
    fn one_in(f: QuadField) -> Self {
        f.one()
    }
    fn rat_in(f: QuadField, q: Rat) -> Self {
        f.from_rat(q)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn rational_value(&self) -> Option<Rat> {
        self.to_rat()
    }
    fn denominator(&self) -> BigInt {
        self.a().denom().lcm(self.b().denom())
    }
    fn generator(f: QuadField) -> Option<Self> {
        Some(f.alpha())
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T: Scalar> {
    rows: usize,
    cols: usize,
    ctx: T::Ctx,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn from_vec(rows: usize, cols: usize, ctx: T::Ctx, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "from_vec",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Mat { rows, cols, ctx, data })
    }

    pub fn from_rows(ctx: T::Ctx, rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                op: "from_rows",
                left: (r, c),
                right: (1, bad.len()),
            });
        }
        Mat::from_vec(r, c, ctx, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, ctx: T::Ctx, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Mat { rows, cols, ctx, data }
    }

    pub fn zeros(rows: usize, cols: usize, ctx: T::Ctx) -> Self {
        Mat::from_fn(rows, cols, ctx, |_, _| T::zero_in(ctx))
    }

    pub fn identity(n: usize, ctx: T::Ctx) -> Self {
        Mat::from_fn(n, n, ctx, |i, j| if i == j { T::one_in(ctx) } else { T::zero_in(ctx) })
    }

    pub fn diag(ctx: T::Ctx, entries: &[T]) -> Self {
        let n = entries.len();
        Mat::from_fn(n, n, ctx, |i, j| if i == j { entries[i].clone() } else { T::zero_in(ctx) })
    }

    /// Block-diagonal matrix with the given square or rectangular blocks.
    pub fn block_diag(ctx: T::Ctx, blocks: &[&Mat<T>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(rows, cols, ctx);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Overwrites the block starting at (r0, c0) with `b`.
    pub fn paste(&mut self, r0: usize, c0: usize, b: &Mat<T>) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn ctx(&self) -> T::Ctx {
        self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Mat::from_fn(rows.len(), cols.len(), self.ctx, |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn map<U: Scalar>(&self, ctx: U::Ctx, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, ctx, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, self.ctx, |i, j| self.get(j, i).clone())
    }

    /// Entry-wise Galois conjugate A^σ.
    pub fn conj(&self) -> Self {
        self.map(self.ctx, T::conjugate)
    }

    /// Conjugate transpose *A = ᵗA^σ.
    pub fn star(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, self.ctx, |i, j| self.get(j, i).conjugate())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(self.ctx, |x| c.clone() * x)
    }

    pub fn checked_mul(&self, rhs: &Mat<T>) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { op: "mul", left: self.dims(), right: rhs.dims() });
        }
        let ctx = self.ctx;
        Ok(Mat::from_fn(self.rows, rhs.cols, ctx, |i, j| {
            let mut acc = T::zero_in(ctx);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if a.vanishes() || b.vanishes() {
                    continue;
                }
                acc = acc + &(a.clone() * b);
            }
            acc
        }))
    }

    fn zip_with(&self, rhs: &Mat<T>, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.dims() != rhs.dims() {
            return Err(Error::DimensionMismatch { op, left: self.dims(), right: rhs.dims() });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, ctx: self.ctx, data })
    }

    pub fn checked_add(&self, rhs: &Mat<T>) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a.clone() + b)
    }

    pub fn checked_sub(&self, rhs: &Mat<T>) -> Result<Self> {
        self.zip_with(rhs, "sub", |a, b| a.clone() - b)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { op: "mul_vec", left: self.dims(), right: (v.len(), 1) });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.vanishes())
                    .fold(T::zero_in(self.ctx), |acc, (a, x)| acc + &(a.clone() * x))
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::vanishes)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == T::one_in(self.ctx)
                    } else {
                        x.vanishes()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).vanishes()))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// True iff the matrix is square and equal to its conjugate transpose.
    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == self.get(j, i).conjugate()))
    }

    /// Every entry is fixed by σ.
    pub fn is_rational(&self) -> bool {
        self.data.iter().all(|x| x.rational_value().is_some())
    }

    pub fn to_rational(&self) -> Option<Mat<Rat>> {
        let data = self.data.iter().map(T::rational_value).collect::<Option<Vec<_>>>()?;
        Some(Mat { rows: self.rows, cols: self.cols, ctx: (), data })
    }

    /// Determinant by fraction-full Gaussian elimination.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = T::one_in(self.ctx);
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].vanishes()) else {
                return Ok(T::zero_in(self.ctx));
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k].clone();
            let pinv = pivot.try_inv()?;
            det = det * &pivot;
            for r in k + 1..n {
                if a[r * n + k].vanishes() {
                    continue;
                }
                let f = a[r * n + k].clone() * &pinv;
                for j in k..n {
                    let t = f.clone() * &a[k * n + j];
                    a[r * n + j] = a[r * n + j].clone() - &t;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n, self.ctx);
        for k in 0..n {
            let p = (k..n).find(|&r| !a.get(r, k).vanishes()).ok_or(Error::Singular)?;
            if p != k {
                a.swap_rows(p, k);
                inv.swap_rows(p, k);
            }
            let pinv = a.get(k, k).try_inv()?;
            a.scale_row(k, &pinv);
            inv.scale_row(k, &pinv);
            for r in 0..n {
                if r == k || a.get(r, k).vanishes() {
                    continue;
                }
                let f = a.get(r, k).clone();
                a.add_row_multiple(r, k, &-f.clone());
                inv.add_row_multiple(r, k, &-f);
            }
        }
        Ok(inv)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn scale_row(&mut self, r: usize, c: &T) {
        for j in 0..self.cols {
            let v = c.clone() * self.get(r, j);
            self.set(r, j, v);
        }
    }

    /// row[dst] += c · row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &T) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.vanishes() {
                continue;
            }
            let v = self.get(dst, j).clone() + &(c.clone() * s);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += c · col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &T) {
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s.vanishes() {
                continue;
            }
            let v = self.get(i, dst).clone() + &(s.clone() * c);
            self.set(i, dst, v);
        }
    }
}

impl Mat<Rat> {
    /// Embeds a rational matrix into M(n, ℚ(α)).
    pub fn lift(&self, field: QuadField) -> Mat<QuadElem> {
        self.map(field, |q| field.from_rat(q.clone()))
    }

    /// Rational matrix from small integer/fraction pairs, for constants.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Self {
        let data: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&(n, d)| crate::fields::rat(n, d)).collect())
            .collect();
        Mat::from_rows((), data).expect("rectangular literal")
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let data: Vec<Vec<Rat>> =
            rows.iter().map(|r| r.iter().map(|&n| crate::fields::int(n)).collect()).collect();
        Mat::from_rows((), data).expect("rectangular literal")
    }
}

impl<'a, T: Scalar> Mul<&'a Mat<T>> for &'a Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: &'a Mat<T>) -> Mat<T> {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl<'a, T: Scalar> Add<&'a Mat<T>> for &'a Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: &'a Mat<T>) -> Mat<T> {
        self.checked_add(rhs).expect("matrix dimensions must agree")
    }
}

impl<'a, T: Scalar> Sub<&'a Mat<T>> for &'a Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: &'a Mat<T>) -> Mat<T> {
        self.checked_sub(rhs).expect("matrix dimensions must agree")
    }
}

impl<T: Scalar> Neg for &Mat<T> {
    type Output = Mat<T>;
    fn neg(self) -> Mat<T> {
        self.map(self.ctx, |x| -x.clone())
    }
}

impl<T: Scalar> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A matrix equal to its own conjugate transpose.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMat<T: Scalar>(Mat<T>);

impl<T: Scalar> HermitianMat<T> {
    pub fn new(m: Mat<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare(m.rows, m.cols));
        }
        if !m.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        Ok(HermitianMat(m))
    }

    pub fn as_mat(&self) -> &Mat<T> {
        &self.0
    }

    pub fn into_mat(self) -> Mat<T> {
        self.0
    }

    /// P·H·*P, again Hermitian.
    pub fn congruence(&self, p: &Mat<T>) -> Result<Self> {
        let m = p.checked_mul(&self.0)?.checked_mul(&p.star())?;
        debug_assert!(m.is_hermitian());
        Ok(HermitianMat(m))
    }
}

/// Finds an invertible P with P·H·*P = D diagonal (entries in ℚ×).
///
/// Pivot rule: use the first nonzero diagonal entry of the remaining block;
/// if the whole diagonal is zero, replace e_k by e_k + e_j, or by e_k + α·e_j
/// when the off-diagonal entry is purely imaginary.
pub fn hermitian_diagonalize<T: Scalar>(h: &HermitianMat<T>) -> Result<(Mat<T>, Mat<T>)> {
    let ctx = h.0.ctx;
    let n = h.0.rows;
    let mut m = h.0.clone();
    let mut p = Mat::identity(n, ctx);
    for k in 0..n {
        if m.get(k, k).vanishes() {
            if let Some(j) = (k + 1..n).find(|&j| !m.get(j, j).vanishes()) {
                m.swap_rows(k, j);
                m.swap_cols(k, j);
                p.swap_rows(k, j);
            } else {
                let j = (k + 1..n).find(|&j| !m.get(k, j).vanishes()).ok_or(Error::Degenerate)?;
                // v = e_k + c·e_j has H-norm c·H_jk + σ(c)·H_kj when both diagonals vanish.
                let one = T::one_in(ctx);
                let hkj = m.get(k, j).clone();
                let c = if !(hkj.clone() + &hkj.conjugate()).vanishes() {
                    one
                } else {
                    T::generator(ctx).ok_or_else(|| Error::Invariant("zero pivot over Q".into()))?
                };
                m.add_row_multiple(k, j, &c);
                m.add_col_multiple(k, j, &c.conjugate());
                p.add_row_multiple(k, j, &c);
                if m.get(k, k).vanishes() {
                    return Err(Error::Invariant("pivot repair produced zero".into()));
                }
            }
        }
        let pivot_inv = m.get(k, k).try_inv()?;
        for i in k + 1..n {
            if m.get(i, k).vanishes() {
                continue;
            }
            let f = -(m.get(i, k).clone() * &pivot_inv);
            m.add_row_multiple(i, k, &f);
            m.add_col_multiple(i, k, &f.conjugate());
            p.add_row_multiple(i, k, &f);
        }
    }
    if !m.is_diagonal() {
        return Err(Error::Invariant("diagonalization left off-diagonal entries".into()));
    }
    Ok((p, m))
}

/// Cayley transform (I + S)(I − S)⁻¹.
pub fn cayley<T: Scalar>(s: &Mat<T>) -> Result<Mat<T>> {
    if !s.is_square() {
        return Err(Error::NotSquare(s.rows, s.cols));
    }
    let id = Mat::identity(s.rows, s.ctx);
    let den = id.checked_sub(s)?.inverse()?;
    id.checked_add(s)?.checked_mul(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{int, rat};
    use proptest::prelude::*;

    fn k(d: i64) -> QuadField {
        QuadField::new(d).unwrap()
    }

    fn qm(f: QuadField, rows: &[&[(i64, i64)]]) -> Mat<QuadElem> {
        Mat::from_rows(f, rows.iter().map(|r| r.iter().map(|&(a, b)| f.elem(int(a), int(b))).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_inverse_and_det() {
        let i7 = Mat::<Rat>::identity(7, ());
        assert_eq!(i7.inverse().unwrap(), i7);
        assert_eq!(i7.det().unwrap(), int(1));
        let a = Mat::from_ints(&[&[2, 1, 0], &[1, 1, 0], &[3, 4, 1]]);
        assert_eq!(a.det().unwrap(), int(1));
        assert!((&a * &a.inverse().unwrap()).is_identity());
    }

    #[test]
    fn singular_and_mismatched() {
        let s = Mat::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        assert_eq!(s.det().unwrap(), int(0));
        let r = Mat::from_ints(&[&[1, 2, 3]]);
        assert!(matches!(s.checked_add(&r), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(r.checked_mul(&s), Err(Error::DimensionMismatch { .. })));
        assert_eq!(r.det(), Err(Error::NotSquare(1, 3)));
    }

    #[test]
    fn star_of_skew_alpha_matrix_is_itself() {
        let f = k(-1);
        let m = qm(f, &[&[(0, 0), (0, 1)], &[(0, -1), (0, 0)]]);
        assert_eq!(m.star(), m);
        assert!(m.is_hermitian());
    }

    #[test]
    fn hermitian_examples() {
        let f = k(-1);
        let lam = Mat::<Rat>::diag((), &[int(1), int(1), int(-1)]);
        assert!(lam.is_hermitian());
        let m = Mat::diag(f, &[f.alpha(), f.one()]);
        assert!(!m.is_hermitian());
        for s in [int(3), rat(-2, 5)] {
            // h(s)⁻¹·Λ₂ = diag(−s, 1)
            let h = Mat::<Rat>::diag((), &[-s.recip(), int(-1)]);
            let lam2 = Mat::<Rat>::diag((), &[int(1), int(-1)]);
            assert!((&h.inverse().unwrap() * &lam2).is_hermitian());
        }
    }

    #[test]
    fn diagonalize_already_diagonal() {
        let h = HermitianMat::new(Mat::<Rat>::diag((), &[int(3), rat(-1, 2)])).unwrap();
        let (p, d) = hermitian_diagonalize(&h).unwrap();
        assert!(p.is_identity());
        assert_eq!(&d, h.as_mat());
    }

    #[test]
    fn diagonalize_zero_diagonal_needs_alpha() {
        let f = k(-1);
        let h = HermitianMat::new(qm(f, &[&[(0, 0), (0, 1)], &[(0, -1), (0, 0)]])).unwrap();
        let (p, d) = hermitian_diagonalize(&h).unwrap();
        assert!(d.is_diagonal());
        assert_eq!(&(&p * h.as_mat()) * &p.star(), d);
        assert!(d.diagonal().iter().all(|x| x.is_rational() && !x.is_zero()));
    }

    #[test]
    fn diagonalize_rejects_degenerate() {
        let h = HermitianMat::new(Mat::from_ints(&[&[1, 1], &[1, 1]])).unwrap();
        assert_eq!(hermitian_diagonalize(&h), Err(Error::Degenerate));
    }

    #[test]
    fn cayley_of_zero_is_identity() {
        let z = Mat::<Rat>::zeros(3, 3, ());
        assert!(cayley(&z).unwrap().is_identity());
        let s = Mat::<Rat>::identity(2, ());
        assert_eq!(cayley(&s), Err(Error::Singular));
    }

    fn quad_mat(f: QuadField, n: usize) -> impl Strategy<Value = Mat<QuadElem>> {
        prop::collection::vec((-6i64..=6, -6i64..=6, 1i64..=3), n * n).prop_map(move |v| {
            Mat::from_vec(n, n, f, v.into_iter().map(|(a, b, q)| f.elem(rat(a, q), int(b))).collect()).unwrap()
        })
    }

    fn field() -> impl Strategy<Value = QuadField> {
        prop::sample::select(vec![-7i64, -3, -1, 2, 5, 10]).prop_map(k)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn star_reverses_products((a, b) in field().prop_flat_map(|f| (quad_mat(f, 3), quad_mat(f, 3)))) {
            prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
            prop_assert_eq!(a.star().star(), a.clone());
            prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * &b.det().unwrap());
            if let Ok(inv) = a.inverse() {
                prop_assert!((&a * &inv).is_identity());
            }
        }

        #[test]
        fn diagonalization_congruence((m, p) in field().prop_flat_map(|f| (quad_mat(f, 3), quad_mat(f, 3)))) {
            let h = &m + &m.star();
            prop_assume!(!h.det().unwrap().is_zero());
            let h = HermitianMat::new(h).unwrap();
            let (q, d) = hermitian_diagonalize(&h).unwrap();
            prop_assert_eq!(&(&q * h.as_mat()) * &q.star(), d.clone());
            prop_assert!(d.diagonal().iter().all(|x| x.is_rational()));
            // det D / det H = N(det Q)
            let ratio = d.det().unwrap().checked_div(&h.as_mat().det().unwrap()).unwrap();
            prop_assert_eq!(ratio.to_rat(), Some(q.det().unwrap().norm()));
            if !p.det().unwrap().is_zero() {
                prop_assert!(h.congruence(&p).unwrap().as_mat().is_hermitian());
            }
        }
    }
}

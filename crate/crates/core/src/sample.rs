//! Seeded random inputs: rationals of bounded height, matrices in SL(3) and
//! GL(2), skew-Hermitian matrices and words in the generators of G₁.
//!
//! The generator is ChaCha8 so a seed reproduces the same stream on every
//! platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::case1::{d_of, delta, h0, tau, u1, u2, Vec7};
use crate::case2::{GroupElem2, PairVec};
use crate::fields::{int, QuadElem, QuadField, Rat};
use crate::g2rep::GroupElem1;
use crate::linalg::{Mat, Scalar};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A sampler whose stream depends on `(seed, stream)`; used to give
    /// concurrent checks independent inputs.
    pub fn for_stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.rng.gen_range(0..xs.len())]
    }

    /// p/q with |p| ≤ height and 1 ≤ q ≤ height.
    pub fn rat(&mut self, height: i64) -> Rat {
        let p = self.rng.gen_range(-height..=height);
        let q = self.rng.gen_range(1..=height.max(1));
        Rat::new(p.into(), q.into())
    }

    pub fn nonzero_rat(&mut self, height: i64) -> Rat {
        loop {
            let r = self.rat(height);
            if !r.vanishes() {
                return r;
            }
        }
    }

    pub fn quad(&mut self, field: QuadField, height: i64) -> QuadElem {
        field.elem(self.rat(height), self.rat(height))
    }

    pub fn vec7(&mut self, height: i64) -> Vec7<Rat> {
        Vec7::new((0..7).map(|_| self.rat(height)).collect()).expect("7 entries")
    }

    /// A rational point with Δ ≠ 0.
    pub fn semistable(&mut self, height: i64) -> Vec7<Rat> {
        loop {
            let x = self.vec7(height);
            if !delta(&x).expect("7 entries").vanishes() {
                return x;
            }
        }
    }

    /// Product of a few elementary matrices, so det = 1 by construction.
    pub fn sl3(&mut self, height: i64) -> Mat<Rat> {
        let mut m = Mat::identity(3, ());
        for _ in 0..4 {
            let i = self.rng.gen_range(0..3);
            let j = (i + self.rng.gen_range(1..3)) % 3;
            let t = self.rat(height);
            m.add_row_multiple(i, j, &t);
        }
        let t = self.nonzero_rat(height);
        let (i, j) = (self.rng.gen_range(0..3), self.rng.gen_range(0..3));
        if i != j {
            m.scale_row(i, &t);
            m.scale_row(j, &t.recip());
        }
        m
    }

    pub fn gl2(&mut self, height: i64) -> Mat<Rat> {
        loop {
            let m = Mat::from_fn(2, 2, (), |_, _| self.rat(height));
            if !m.det().expect("square").vanishes() {
                return m;
            }
        }
    }

    /// K with *K = −K over the given field.
    pub fn skew_hermitian(&mut self, field: QuadField, n: usize, height: i64) -> Mat<QuadElem> {
        let mut k = Mat::zeros(n, n, field);
        for i in 0..n {
            k.set(i, i, field.elem(int(0), self.rat(height)));
            for j in i + 1..n {
                let x = self.quad(field, height);
                k.set(j, i, -x.conj());
                k.set(i, j, x);
            }
        }
        k
    }

    /// One generator of G₁ over ℚ: h₀, τ, u₁, u₂, d(A) or a scalar.
    pub fn generator(&mut self, height: i64) -> GroupElem1<Rat> {
        let m = match self.rng.gen_range(0..6) {
            0 => h0(),
            1 => tau::<Rat>(),
            2 => u1(&self.rat(height), &self.rat(height), &self.rat(height)),
            3 => u2(&self.rat(height), &self.rat(height), &self.rat(height)),
            4 => d_of(&self.sl3(height)).expect("det 1"),
            _ => Mat::identity(7, ()).scale(&self.nonzero_rat(height)),
        };
        GroupElem1::new(m).expect("generators lie in G₁")
    }

    /// A product of `len` generators; characters are accumulated through
    /// composition rather than recomputed.
    pub fn word(&mut self, len: usize, height: i64) -> GroupElem1<Rat> {
        (0..len).fold(GroupElem1::identity(()), |acc, _| acc.compose(&self.generator(height)))
    }

    pub fn pair(&mut self, height: i64) -> PairVec<Rat> {
        PairVec::new(self.vec7(height), self.vec7(height))
    }

    /// (g₁, g₂) with g₁ a word of length `len`; characters of g₁ are
    /// recomputed from its matrix.
    pub fn group2(&mut self, len: usize, height: i64) -> GroupElem2<Rat> {
        let g1 = self.word(len, height).into_matrix();
        let g2 = self.gl2(height);
        GroupElem2::new(g1, g2).expect("G₁ × GL(2)")
    }
}

//! Fixed benchmark inputs, drawn from a seeded sampler so runs compare.

use g2pv::case1::Vec7;
use g2pv::case2::{find_isotropic_witness, Witness};
use g2pv::sample::Sampler;
use g2pv::{GroupElem1, HermitianMat, Mat, QuadElem, QuadField, Rat};

pub const SEED: u64 = 20;

/// A generator word and a semistable point of coordinate height ≤ `height`.
pub fn word_and_point(len: usize, height: i64) -> (GroupElem1<Rat>, Vec7<Rat>) {
    let mut s = Sampler::new(SEED);
    (s.word(len, 4), s.semistable(height))
}

pub fn semistable_points(n: usize, height: i64) -> Vec<Vec7<Rat>> {
    let mut s = Sampler::new(SEED);
    (0..n).map(|_| s.semistable(height)).collect()
}

/// diag(a, b) over ℚ(√d) with a witness; the first sampled pair that has one.
pub fn normalizable_form(d: i64, bound: u64) -> (HermitianMat<QuadElem>, Witness) {
    let f = QuadField::new(d).expect("d is not a square");
    let mut s = Sampler::new(SEED);
    loop {
        let (a, b) = (s.nonzero_rat(9), s.nonzero_rat(9));
        if let Some(w) = find_isotropic_witness(f, &a, &b, bound) {
            let h = Mat::diag(f, &[f.from_rat(a), f.from_rat(b)]);
            return (HermitianMat::new(h).expect("diagonal rational form"), w);
        }
    }
}

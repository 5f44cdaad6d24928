//! Named self-checks over fixed grids and seeded random samples.
//!
//! Every check is a pure function of a [`Config`]; checks run concurrently
//! and the report is assembled in declaration order.

use rayon::prelude::*;
use serde::Serialize;

use crate::case1::{self, delta, g_alpha, h0, reduce_to_normal_form, su21_sample_cayley, tau, u1, u2, w, w_alpha};
use crate::case2::{
    self,    a_of_s, act2, b_of_s, binary_form, d1, d2, find_isotropic_witness, g_alpha2, h_of, hermitian_bar,
    hermitian_h, lambda2, normalize_hermitian2, representative, splitting_class, tau2,
    unitary_sample_cayley, verify_tau_conjugate, verify_tau_twist_identity, w2, w_of_s, BinForm,
};
use crate::cohomology::{cocycle_to_hermitian, hermitian_to_cocycle, verify_cocycle, Cocycle, SigmaStructure};
use crate::error::{Error, Result};
use crate::fields::{
    hilbert_symbol, int, is_norm, is_norm_oracle, norm_report, rat, relevant_places, squarefree_part, QuadElem,
    QuadField, Rat,
};
use crate::g2rep::{g1_membership, GroupElem1};
use crate::linalg::{HermitianMat, Mat};
use crate::sample::Sampler;

/// Radicands d of the fields ℚ(√d) used by the grid checks.
pub const D_GRID: [i64; 10] = [-1, 2, -2, 3, -3, 5, -5, 7, -7, 10];

/// Values of s used by the grid checks.
pub fn s_grid() -> Vec<Rat> {
    vec![int(1), int(-1), int(2), int(-2), int(3), int(-3), rat(1, 2), rat(-5, 3), rat(7, 4)]
}

/// Sample counts and seed for the randomized checks.
#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub seed: u64,
    pub words: usize,
    pub word_len: usize,
    pub pair_samples: usize,
    pub reductions: usize,
    pub reduction_height: i64,
    pub orbit_pairs: usize,
    pub stabilizer_samples: usize,
    pub unitary_samples: usize,
    pub hilbert_pairs: usize,
    pub normalizations: usize,
    pub witness_bound: u64,
}

impl Config {
    pub fn full(seed: u64) -> Self {
        Config {
            seed,
            words: 1000,
            word_len: 4,
            pair_samples: 500,
            reductions: 1000,
            reduction_height: 100,
            orbit_pairs: 50,
            stabilizer_samples: 200,
            unitary_samples: 200,
            hilbert_pairs: 500,
            normalizations: 50,
            witness_bound: 20,
        }
    }

    /// Small sample counts for smoke tests.
    pub fn quick(seed: u64) -> Self {
        Config {
            words: 40,
            pair_samples: 20,
            reductions: 40,
            orbit_pairs: 20,
            stabilizer_samples: 5,
            unitary_samples: 3,
            hilbert_pairs: 40,
            normalizations: 10,
            ..Config::full(seed)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub group: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

type CheckFn = fn(&Config) -> Result<String>;

struct Check {
    name: &'static str,
    group: &'static str,
    run: CheckFn,
}

/// Groups accepted by [`run_suite`] besides "all".
pub const GROUPS: [&str; 8] =
    ["identities", "membership", "invariance", "reduction", "classification", "stabilizers", "norms", "cohomology"];

const CHECKS: &[Check] = &[
    Check { name: "galois_twist_of_g_alpha", group: "identities", run: galois_twist_of_g_alpha },
    Check { name: "galois_twist_of_g_alpha2", group: "identities", run: galois_twist_of_g_alpha2 },
    Check { name: "w_alpha_coordinates", group: "identities", run: w_alpha_coordinates },
    Check { name: "delta_of_w_alpha", group: "identities", run: delta_of_w_alpha },
    Check { name: "form_of_w", group: "identities", run: form_of_w },
    Check { name: "form_of_w_s", group: "identities", run: form_of_w_s },
    Check { name: "a_of_s_is_unitary", group: "identities", run: a_of_s_is_unitary },
    Check { name: "b_of_s_maps_w_to_w_s", group: "identities", run: b_of_s_maps_w_to_w_s },
    Check { name: "tau_twist_identity", group: "identities", run: tau_twist_identity },
    Check { name: "tau_conjugate_by_b", group: "identities", run: tau_conjugate_by_b },
    Check { name: "tau_conjugates_d_h", group: "identities", run: tau_conjugates_d_h },
    Check { name: "generators_in_g1", group: "membership", run: generators_in_g1 },
    Check { name: "relative_invariance_case1", group: "invariance", run: relative_invariance_case1 },
    Check { name: "relative_invariance_case2", group: "invariance", run: relative_invariance_case2 },
    Check { name: "reduction_to_normal_form", group: "reduction", run: reduction_to_normal_form },
    Check { name: "same_orbit_iff_same_class", group: "classification", run: same_orbit_iff_same_class },
    Check { name: "w_alpha_pairwise_distinct", group: "classification", run: w_alpha_pairwise_distinct },
    Check { name: "case2_representative_class", group: "classification", run: case2_representative_class },
    Check { name: "stabilizers_case1", group: "stabilizers", run: stabilizers_case1 },
    Check { name: "stabilizers_case2", group: "stabilizers", run: stabilizers_case2 },
    Check { name: "norm_decision_vs_search", group: "norms", run: norm_decision_vs_search },
    Check { name: "hilbert_product_formula", group: "norms", run: hilbert_product_formula },
    Check { name: "cocycle_dictionary", group: "cohomology", run: cocycle_dictionary },
    Check { name: "hermitian_normalization", group: "cohomology", run: hermitian_normalization },
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

/// Runs "all", a group from [`GROUPS`] or a single check by name.
pub fn run_suite(suite: &str, config: &Config) -> Result<Report> {
    let selected: Vec<&Check> =
        CHECKS.iter().filter(|c| suite == "all" || c.group == suite || c.name == suite).collect();
    if selected.is_empty() {
        return Err(Error::Parse(format!("unknown suite {suite:?}")));
    }
    let checks: Vec<CheckResult> = selected
        .par_iter()
        .map(|c| {
            let (passed, detail) = match (c.run)(config) {
                Ok(detail) => (true, detail),
                Err(e) => (false, e.to_string()),
            };
            CheckResult { name: c.name, group: c.group, passed, detail }
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    Ok(Report { suite: suite.to_string(), seed: config.seed, passed, checks })
}

fn fail(msg: String) -> Error {
    Error::Invariant(msg)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

fn fields() -> Result<Vec<QuadField>> {
    D_GRID.iter().map(|&d| QuadField::new(d)).collect()
}

/// Independent seeded stream per check.
fn sampler(config: &Config, name: &str) -> Sampler {
    let tag = name.bytes().fold(0u64, |h, b| h.wrapping_mul(131).wrapping_add(b as u64));
    Sampler::for_stream(config.seed, tag)
}

fn galois_twist_of_g_alpha(_: &Config) -> Result<String> {
    for f in fields()? {
        let g = g_alpha(f);
        ensure(g.conj() == &g * &case1::tau_in(f), || format!("σ(g_α) ≠ g_α·τ for d = {}", f.d()))?;
    }
    Ok(format!("{} fields", D_GRID.len()))
}

fn galois_twist_of_g_alpha2(_: &Config) -> Result<String> {
    for f in fields()? {
        let g = g_alpha2(f);
        ensure(g.conj() == &g * &tau2(f), || format!("σ(g_α,2) ≠ g_α,2·τ₂ for d = {}", f.d()))?;
    }
    Ok(format!("{} fields", D_GRID.len()))
}

fn w_alpha_coordinates(_: &Config) -> Result<String> {
    for f in fields()? {
        let d = f.d_rat();
        let image = g_alpha(f).mul_vec(&w().lift(f))?;
        let expected = [int(0), &d / int(2), int(0), int(0), rat(-1, 2), int(0), int(0)];
        ensure(image == expected.clone().map(|x| f.from_rat(x)), || format!("g_α·w wrong for d = {d}"))?;
        ensure(*w_alpha(&d) == expected, || format!("w_α table wrong for d = {d}"))?;
    }
    Ok(format!("{} fields", D_GRID.len()))
}

fn delta_of_w_alpha(_: &Config) -> Result<String> {
    for f in fields()? {
        let d = f.d_rat();
        let value = delta(&w_alpha(&d))?;
        ensure(value == d, || format!("Δ(w_α) = {value} for d = {d}"))?;
    }
    Ok(format!("{} fields", D_GRID.len()))
}

fn form_of_w(_: &Config) -> Result<String> {
    let f = binary_form(&w2())?;
    ensure(f == BinForm { a: int(0), b: int(-4), c: int(0) }, || format!("F_w = {f:?}"))?;
    Ok("F_w = −4·v₁v₂".into())
}

fn form_of_w_s(_: &Config) -> Result<String> {
    for s in s_grid() {
        let f = binary_form(&w_of_s(&s)?)?;
        ensure(f == BinForm { a: int(0), b: int(-4) * &s, c: int(0) }, || format!("F_w(s) = {f:?} for s = {s}"))?;
    }
    Ok("F_w(s) = −4s·v₁v₂".into())
}

fn a_of_s_is_unitary(_: &Config) -> Result<String> {
    let target = Mat::block_diag((), &[&Mat::identity(1, ()), &lambda2()]);
    for s in s_grid() {
        let a = a_of_s(&s)?;
        let lhs = &(&a * &hermitian_bar(&s)) * &a.star();
        ensure(lhs == target, || format!("A(s)·H̄(s)·*A(s) ≠ diag(1, Λ) for s = {s}"))?;
    }
    Ok(format!("{} values of s", s_grid().len()))
}

fn b_of_s_maps_w_to_w_s(_: &Config) -> Result<String> {
    for s in s_grid() {
        let (b1, b2) = b_of_s(&s)?;
        ensure(act2(&b1, &b2, &w2())? == w_of_s(&s)?, || format!("B(s)·w ≠ w(s) for s = {s}"))?;
    }
    Ok(format!("{} values of s", s_grid().len()))
}

fn tau_twist_identity(_: &Config) -> Result<String> {
    for f in fields()? {
        for s in s_grid() {
            ensure(verify_tau_twist_identity(f, &s)?, || format!("fails for d = {}, s = {s}", f.d()))?;
        }
    }
    Ok(format!("{} pairs (d, s)", D_GRID.len() * s_grid().len()))
}

fn tau_conjugate_by_b(_: &Config) -> Result<String> {
    for s in s_grid() {
        ensure(verify_tau_conjugate(&s)?, || format!("B(s)⁻¹·τ·B(s) wrong for s = {s}"))?;
    }
    Ok(format!("{} values of s", s_grid().len()))
}

fn tau_conjugates_d_h(_: &Config) -> Result<String> {
    let (t1, t2) = (tau::<Rat>(), tau2::<Rat>(()));
    for s in s_grid() {
        let (h, hi) = (h_of(&s), h_of(&s.recip()));
        let ok = &(&t1 * &d1(&h)?) * &t1 == d1(&hi)? && &(&t2 * &d2(&h)?) * &t2 == d2(&hi)?;
        ensure(ok, || format!("τ·d(h(s))·τ ≠ d(h(1/s)) for s = {s}"))?;
    }
    Ok(format!("{} values of s", s_grid().len()))
}

fn generators_in_g1(config: &Config) -> Result<String> {
    let mut rng = sampler(config, "generators_in_g1");
    let one = int(1);
    let h = GroupElem1::new(h0())?;
    ensure(h.det() == one, || "det h₀ ≠ 1".into())?;
    GroupElem1::new(tau::<Rat>())?;
    for f in fields()? {
        ensure(g1_membership(&g_alpha(f)).is_some(), || format!("g_α ∉ G₁ for d = {}", f.d()))?;
    }
    for _ in 0..config.words.min(200) {
        let (a, b, c) = (rng.rat(20), rng.rat(20), rng.rat(20));
        GroupElem1::new(u1(&a, &b, &c))?;
        GroupElem1::new(u2(&a, &b, &c))?;
        let d = GroupElem1::new(case1::d_of(&rng.sl3(20))?)?;
        ensure(d.det() == one, || "det d(A) ≠ 1".into())?;
    }
    for _ in 0..config.reductions.min(200) {
        let x = rng.semistable(20);
        let r = reduce_to_normal_form(&x)?;
        r.g.verify()?;
        ensure(r.g.det() == one, || format!("reduction product has det {}", r.g.det()))?;
    }
    Ok("h₀, τ, g_α, u₁, u₂, d(A) and reduction products".into())
}

fn relative_invariance_case1(config: &Config) -> Result<String> {
    let mut rng = sampler(config, "relative_invariance_case1");
    for _ in 0..config.words {
        let g = rng.word(config.word_len, 5);
        let x = rng.semistable(10);
        let cp = g.chi_prime().clone();
        let lhs = delta(&g.act(&x)?)?;
        ensure(lhs == &cp * &cp * delta(&x)?, || format!("Δ(gx) ≠ χ′²Δ(x) with χ′ = {cp}"))?;
        let c = g1_membership(g.matrix()).ok_or_else(|| fail("word left G₁".into()))?;
        ensure(c == &cp * &cp * &cp, || format!("c = {c} but χ′³ = {}", &cp * &cp * &cp))?;
    }
    Ok(format!("{} words of length {}", config.words, config.word_len))
}

fn relative_invariance_case2(config: &Config) -> Result<String> {
    let mut rng = sampler(config, "relative_invariance_case2");
    for _ in 0..config.pair_samples {
        let g = rng.group2(config.word_len, 4);
        let x = rng.pair(6);
        let lhs = binary_form(&g.act(&x)?)?;
        let rhs = binary_form(&x)?.compose(&g.g2).scale(&g.g1.chi());
        ensure(lhs == rhs, || "F_{gx}(v) ≠ χ′(g₁)²·F_x(v·g₂)".into())?;
    }
    Ok(format!("{} samples", config.pair_samples))
}

fn reduction_to_normal_form(config: &Config) -> Result<String> {
    let mut rng = sampler(config, "reduction_to_normal_form");
    for _ in 0..config.reductions {
        let x = rng.semistable(config.reduction_height);
        let r = reduce_to_normal_form(&x)?;
        let dx = delta(&x)?;
        let mut y = vec![int(0); 7];
        y[1] = int(1);
        y[4] = -&dx / int(4);
        ensure(*r.y == y, || format!("normal form {:?} for Δ = {dx}", r.y))?;
        ensure(r.g.act(&x)? == y, || "g·x ≠ y".into())?;
        ensure(r.g.det() == int(1) && *r.g.chi_prime() == int(1), || "reduction element not in SL(7) with χ = 1".into())?;
        r.g.verify()?;
        ensure(case1::classify(&x)? == case1::classify(&y)?, || "class changed under reduction".into())?;
    }
    Ok(format!("{} points of height ≤ {}", config.reductions, config.reduction_height))
}

fn same_orbit_iff_same_class(config: &Config) -> Result<String> {
    let mut rng = sampler(config, "same_orbit_iff_same_class");
    let mut agreeing = 0;
    for i in 0..config.orbit_pairs {
        let x = rng.semistable(8);
        let y = if i % 2 == 0 { rng.word(3, 4).act(&x)? } else { rng.semistable(8).into_inner() };
        let by_class = squarefree_part(&delta(&x)?)? == squarefree_part(&delta(&y)?)?;
        let same = case1::same_orbit(&x, &y)?;
        ensure(same == by_class, || format!("same_orbit = {same} but classes agree = {by_class}"))?;
        agreeing += usize::from(same);
    }
    Ok(format!("{} pairs, {agreeing} in the same orbit", config.orbit_pairs))
}

fn w_alpha_pairwise_distinct(_: &Config) -> Result<String> {
    let reps: Vec<_> = D_GRID.iter().map(|&d| w_alpha(&int(d))).collect();
    for (i, x) in reps.iter().enumerate() {
        for (j, y) in reps.iter().enumerate() {
            let same = case1::same_orbit(x, y)?;
            ensure(same == (i == j), || format!("w_α for d = {} and d = {}: same_orbit = {same}", D_GRID[i], D_GRID[j]))?;
        }
    }
    Ok("10 square classes".into())
}

fn case2_representative_class(_: &Config) -> Result<String> {
    for f in fields()? {
        for s in s_grid() {
            let x = representative(f, &s)?;
            let class = splitting_class(&x)?;
            ensure(class == squarefree_part(&f.d_rat())?, || format!("class {class:?} for d = {}, s = {s}", f.d()))?;
        }
    }
    Ok(format!("{} pairs (d, s)", D_GRID.len() * s_grid().len()))
}

fn stabilizers_case1(config: &Config) -> Result<String> {
    let total: usize = fields()?
        .into_par_iter()
        .map(|f| -> Result<usize> {
            let mut rng = sampler(config, &format!("stabilizers_case1/{}", f.d()));
            let wa = w_alpha(&f.d_rat());
            let embedder = case1::Stabilizer1::new(f)?;
            for _ in 0..config.stabilizer_samples {
                let k = rng.skew_hermitian(f, 3, 2);
                let a = match su21_sample_cayley(&k) {
                    Ok(a) => a,
                    Err(Error::Singular) => continue,
                    Err(e) => return Err(e),
                };
                let g = embedder.embed(&a)?;
                ensure(g.act(&wa)? == *wa, || format!("stabilizer moves w_α for d = {}", f.d()))?;
            }
            Ok(config.stabilizer_samples)
        })
        .sum::<Result<usize>>()?;
    Ok(format!("{total} samples over {} fields", D_GRID.len()))
}

fn stabilizers_case2(config: &Config) -> Result<String> {
    let pairs: Vec<(QuadField, Rat)> =
        fields()?.into_iter().flat_map(|f| s_grid().into_iter().map(move |s| (f, s))).collect();
    let total: usize = pairs
        .into_par_iter()
        .map(|(f, s)| -> Result<usize> {
            let mut rng = sampler(config, &format!("stabilizers_case2/{}/{s}", f.d()));
            let ws = representative(f, &s)?;
            let embedder = case2::Stabilizer2::new(f, &s)?;
            for _ in 0..config.unitary_samples {
                let k = rng.skew_hermitian(f, 2, 2);
                let a = match unitary_sample_cayley(&k, &s) {
                    Ok(a) => a,
                    Err(Error::Singular) => continue,
                    Err(e) => return Err(e),
                };
                let g = embedder.embed(&a)?;
                ensure(g.act(&ws)? == ws, || format!("stabilizer moves w_α(s) for d = {}, s = {s}", f.d()))?;
            }
            Ok(config.unitary_samples)
        })
        .sum::<Result<usize>>()?;
    Ok(format!("{total} samples over {} pairs (d, s)", D_GRID.len() * s_grid().len()))
}

fn norm_decision_vs_search(_: &Config) -> Result<String> {
    let (mut norms, mut obstructed) = (0, 0);
    for d in [-1, -2, -3, 5] {
        let f = QuadField::new(d)?;
        for n in (1..=30).flat_map(|n| [n, -n]) {
            let s = int(n);
            let decided = is_norm(f, &s)?;
            let found = is_norm_oracle(f, &s, 30);
            if let Some(x) = &found {
                ensure(x.norm() == s, || format!("oracle certificate wrong for d = {d}, s = {n}"))?;
                ensure(decided, || format!("oracle found a norm but is_norm = false for d = {d}, s = {n}"))?;
                norms += 1;
            }
            if !decided {
                ensure(found.is_none(), || format!("d = {d}, s = {n}"))?;
                let place = norm_report(f, &s)?.obstruction();
                ensure(place.is_some(), || format!("no local obstruction reported for d = {d}, s = {n}"))?;
                obstructed += 1;
            }
        }
    }
    Ok(format!("{norms} certified norms, {obstructed} local obstructions"))
}

fn hilbert_product_formula(config: &Config) -> Result<String> {
    let mut rng = sampler(config, "hilbert_product_formula");
    for _ in 0..config.hilbert_pairs {
        let (a, b) = (rng.nonzero_rat(60), rng.nonzero_rat(60));
        let mut product = 1i8;
        for v in relevant_places(&a, &b)? {
            product *= hilbert_symbol(&a, &b, v)?;
        }
        ensure(product == 1, || format!("∏ (a, b)_v = −1 for a = {a}, b = {b}"))?;
    }
    Ok(format!("{} pairs", config.hilbert_pairs))
}

fn cocycle_dictionary(_: &Config) -> Result<String> {
    for f in fields()? {
        let structure = SigmaStructure::unitary(f, lambda2(), false)?;
        for s in s_grid() {
            let h = h_of(&s).lift(f);
            ensure(verify_cocycle(&structure, &h)?, || format!("h(s) not a cocycle for d = {}, s = {s}", f.d()))?;
            let c = Cocycle::new(structure.clone(), h)?;
            let herm = cocycle_to_hermitian(&c)?;
            ensure(*herm.as_mat() == hermitian_h(&s).lift(f), || format!("H(h(s)) ≠ H(s) for s = {s}"))?;
            ensure(hermitian_to_cocycle(&herm, &structure)? == c, || format!("round trip failed for s = {s}"))?;
        }
    }
    Ok(format!("{} pairs (d, s)", D_GRID.len() * s_grid().len()))
}

fn hermitian_normalization(config: &Config) -> Result<String> {
    let mut rng = sampler(config, "hermitian_normalization");
    let (mut done, mut tries) = (0, 0);
    while done < config.normalizations {
        tries += 1;
        ensure(tries <= 20 * config.normalizations, || format!("only {done} witnesses found"))?;
        let f = QuadField::new(*rng.pick(&D_GRID))?;
        let (a, b) = (rng.nonzero_rat(9), rng.nonzero_rat(9));
        let Some(wit) = find_isotropic_witness(f, &a, &b, config.witness_bound) else { continue };
        let h = HermitianMat::new(Mat::diag(f, &[f.from_rat(a.clone()), f.from_rat(b.clone())]))?;
        let (t, s) = normalize_hermitian2(&h, Some(&wit))?;
        let target: Mat<QuadElem> = hermitian_h(&s).lift(f);
        ensure(*h.congruence(&t)?.as_mat() == target, || format!("A·H·*A ≠ diag(−s, 1) for H = diag({a}, {b})"))?;
        done += 1;
    }
    Ok(format!("{done} forms, {tries} draws"))
}

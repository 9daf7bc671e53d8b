//! Batch property suite: lemma grids, monotone helper facts, and bound and
//! spectral invariants over every graph up to a fixed order.
//!
//! Properties report failures as data. The variance bound is injectable so a
//! deliberately broken formula can be shown to trip the dominance check.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    self, avg_degree_threshold, bound_amgm, bound_conjugate, bound_log, cond_golden, lemma22_margin,
    lemma34_derivative_roots, lemma34_f, lemma35_margin, lemma36_margin, quantity_c, BoundReport, CoverageLabel,
    Verdict, LAMBDA_CAP,
};
use crate::enumerate::generate_all;
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, Graph};

/// Signature of [`bounds::bound_variance`].
pub type VarianceFn = fn(usize, usize, f64, f64, f64) -> Result<f64>;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Points per one-dimensional grid; must be positive.
    pub grid_points: usize,
    /// Graphs of every order `1..=max_order` are checked exhaustively.
    pub max_order: usize,
    pub seed: u64,
    pub variance_bound: VarianceFn,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { grid_points: 100_000, max_order: 8, seed: 0x5eed, variance_bound: bounds::bound_variance }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Check {
    name: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Check {
        Check { name, checked: 0, failure: None }
    }

    fn assert(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    fn finish(self) -> PropertyResult {
        PropertyResult { name: self.name, checked: self.checked, failure: self.failure }
    }
}

/// `points` evenly spaced values in `[lo, hi]`, endpoints included.
fn grid(lo: f64, hi: f64, points: usize) -> impl Iterator<Item = f64> {
    let step = if points > 1 { (hi - lo) / (points - 1) as f64 } else { 0.0 };
    (0..points).map(move |i| if i + 1 == points { hi } else { lo + step * i as f64 })
}

fn nondecreasing_on(name: &'static str, f: impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize) -> PropertyResult {
    let mut c = Check::new(name);
    let mut prev: Option<(f64, f64)> = None;
    for x in grid(lo, hi, points) {
        let y = f(x);
        if let Some((px, py)) = prev {
            c.assert(y >= py - 1e-12 * py.abs().max(1.0), || format!("f({x}) = {y} < f({px}) = {py}"));
        }
        prev = Some((x, y));
    }
    c.finish()
}

/// Runs every property. Fails only on an invalid configuration.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    if cfg.grid_points == 0 {
        return Err(Error::InvalidArgument("grid_points must be positive".into()));
    }
    let mut out = lemma_grids(cfg);
    out.extend(helper_facts(cfg));
    out.extend(exhaustive(cfg)?);
    out.push(composition(cfg)?);
    Ok(out)
}

pub fn lemma_grids(cfg: &VerifyConfig) -> Vec<PropertyResult> {
    let pts = cfg.grid_points;
    let mut out = Vec::new();

    let mut c = Check::new("lemma22_grid");
    for x in grid(0.001, LAMBDA_CAP, pts) {
        let m = lemma22_margin(x).expect("inside domain");
        c.assert(m >= -1e-12, || format!("margin {m} at x = {x}"));
    }
    out.push(c.finish());

    let mut c = Check::new("lemma34_monotone");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let per_draw = (pts / 100).max(2);
    for _ in 0..100 {
        let (b, cc, d) = (rng.gen_range(-100.0..100.0), rng.gen_range(0.0..10.0), rng.gen_range(-10.0..10.0));
        let mut prev: Option<f64> = None;
        for x in grid(f64::max(cc, 1.0), cc + 100.0, per_draw) {
            let y = lemma34_f(x, b, cc, d).expect("x positive");
            if let Some(py) = prev {
                c.assert(y <= py + 1e-12 * py.abs().max(1.0), || format!("b={b} c={cc} d={d}: increases at x={x}"));
            }
            prev = Some(y);
        }
    }
    out.push(c.finish());

    let mut c = Check::new("lemma34_roots");
    for cc in grid(0.5, 10.0, pts.min(10_000)) {
        if let Some((lo, hi)) = lemma34_derivative_roots(cc) {
            c.assert(lo <= cc + 1e-12 && hi <= cc + 1e-12, || format!("roots ({lo}, {hi}) exceed c = {cc}"));
        } else {
            c.assert(true, String::new);
        }
    }
    out.push(c.finish());

    for (name, f) in [("lemma35_grid", lemma35_margin as fn(f64) -> Result<f64>), ("lemma36_grid", lemma36_margin)] {
        let mut c = Check::new(name);
        for x in grid(13.0, 1e4, pts) {
            let m = f(x).expect("inside domain");
            c.assert(m >= -1e-12, || format!("margin {m} at x = {x}"));
        }
        out.push(c.finish());
    }
    out
}

pub fn helper_facts(cfg: &VerifyConfig) -> Vec<PropertyResult> {
    let pts = cfg.grid_points;
    let mut out = vec![
        nondecreasing_on("x_minus_ln_x_increasing", |x| x - x.ln(), 1.0, 1e3, pts),
        nondecreasing_on("sqrt_minus_ln_sqrt_increasing", |x| x.sqrt() - x.sqrt().ln(), 1.0, 1e3, pts),
        nondecreasing_on("x_minus_2ln_x_minus_1_increasing", |x| x - 2.0 * x.ln() - 1.0, 2.0, 1e3, pts),
    ];
    let mut c = Check::new("constants");
    let k = LAMBDA_CAP - LAMBDA_CAP.ln();
    c.assert((k - 5.1485).abs() <= 1e-4, || format!("7.11 - ln 7.11 = {k}"));
    for (x, want, tol) in [(1.0, 0.0, 1e-12), (4.5, 0.52, 0.01), (7.11, 0.0004, 0.0005)] {
        let m = lemma22_margin(x).expect("inside domain");
        c.assert((m - want).abs() <= tol, || format!("lemma22 margin at {x} = {m}"));
    }
    for (n, want) in [(11, 3.20), (12, 4.03)] {
        let t = avg_degree_threshold(n);
        c.assert((t - want).abs() <= 0.01, || format!("threshold at n = {n} is {t}"));
    }
    out.push(c.finish());
    out
}

/// Bound validity, dominance and the spectral invariants on every graph of
/// order `1..=cfg.max_order`.
pub fn exhaustive(cfg: &VerifyConfig) -> Result<Vec<PropertyResult>> {
    let mut validity = Check::new("bound_validity");
    let mut dominance = Check::new("dominance_chain");
    let mut identity = Check::new("variance_identity");
    let mut golden = Check::new("golden_condition_sound");
    let mut coverage = Check::new("coverage_sound");
    let mut regular = Check::new("regular_divides_det");
    let mut bipartite = Check::new("bipartite_symmetric_spectrum");
    let mut hoffman = Check::new("hoffman_chromatic3");
    let mut yuan = Check::new("yuan_bound");
    let mut avg = Check::new("lambda1_at_least_avg_degree");

    for n in 1..=cfg.max_order {
        for g in generate_all(n)? {
            let r = BoundReport::from_graph(&g)?;
            let s = &r.spectrum;
            let (m, d) = (r.profile.size, r.profile.avg_degree_f64());
            let id = || r.graph6.clone();

            avg.assert(s.mu1 >= d - 1e-10, || format!("{}: lambda1 {} < {d}", id(), s.mu1));
            if r.profile.min_degree >= 1 {
                let rhs = (2 * m + 1) as f64 - n as f64;
                yuan.assert(s.mu1 * s.mu1 <= rhs + 1e-8, || format!("{}: lambda1^2 = {}", id(), s.mu1 * s.mu1));
            }
            if g.is_bipartite() {
                let (ev, k) = (&s.eigenvalues, s.eigenvalues.len());
                let sym = (0..k).all(|i| (ev[i] + ev[k - 1 - i]).abs() <= 1e-9);
                bipartite.assert(sym, || format!("{}: spectrum not symmetric", id()));
            }
            if chromatic_number(&g)? == 3 {
                let ok = s.lambda_min() <= -s.mu1 / 2.0 + 1e-8;
                hoffman.assert(ok, || format!("{}: lambda_n {} > -lambda1/2", id(), s.lambda_min()));
            }
            if let Some(k) = g.regular_degree().filter(|&k| k >= 1) {
                let divides = (r.det.value() % BigInt::from(k)).is_zero();
                regular.assert(divides, || format!("{}: {k} does not divide {}", id(), r.det));
            }
            if !r.nonsingular() {
                continue;
            }

            let absdet = r.det.abs_f64();
            let e = s.energy;
            let log = bound_log(n, s.mu1, absdet)?;
            let amgm = bound_amgm(n, s.mu1, absdet)?;
            let var = (cfg.variance_bound)(n, m, s.mu1, s.mu2, absdet)?;
            let mut bs = vec![("log", log), ("amgm", amgm), ("variance", var)];
            if let Ok(conj) = bound_conjugate(n, m, s.mu1, s.mu2, absdet) {
                bs.push(("conjugate", conj));
            }
            for (name, b) in bs {
                validity.assert(b <= e + 1e-8, || format!("{}: {name} bound {b} > energy {e}", id()));
            }
            dominance.assert(var >= amgm - 1e-9 && amgm >= log - 1e-9, || {
                format!("{}: variance {var}, amgm {amgm}, log {log}", id())
            });
            if n >= 2 {
                let c = quantity_c(n, m, s.mu1, s.mu2, absdet)?;
                let want = s.mu1 + (n - 1) as f64 * c;
                identity.assert((var - want).abs() <= 1e-12 * want.abs().max(1.0), || {
                    format!("{}: variance {var} vs mu1 + (n-1)C = {want}", id())
                });
            }
            if cond_golden(n, m, s.mu1, s.mu2, d) {
                golden.assert(e >= r.conjecture2_target - 1e-8, || format!("{}: golden but energy {e}", id()));
            }
            if let Some(labels) = &r.coverage {
                if labels != &[CoverageLabel::Uncovered] {
                    coverage.assert(r.conjecture2 == Verdict::Pass, || format!("{}: covered by {labels:?} but fails", id()));
                }
            }
        }
    }
    Ok([validity, dominance, identity, golden, coverage, regular, bipartite, hoffman, yuan, avg]
        .into_iter()
        .map(Check::finish)
        .collect())
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.2..0.8);
    let mut g = Graph::empty(n).expect("small order");
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random non-singular graph of order `2..=7` that satisfies the second
/// conjecture.
pub fn random_passing_graph(rng: &mut ChaCha8Rng) -> Result<(Graph, BoundReport)> {
    loop {
        let n = rng.gen_range(2..=7);
        let g = random_graph(rng, n);
        let r = BoundReport::from_graph(&g)?;
        if r.conjecture2 == Verdict::Pass {
            return Ok((g, r));
        }
    }
}

/// Disjoint unions of 200 random passing pairs pass, and energy adds.
pub fn composition(cfg: &VerifyConfig) -> Result<PropertyResult> {
    let mut c = Check::new("composition");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xc0);
    for _ in 0..200 {
        let (g1, r1) = random_passing_graph(&mut rng)?;
        let (g2, r2) = random_passing_graph(&mut rng)?;
        let u = BoundReport::from_graph(&g1.disjoint_union(&g2)?)?;
        let additive = (u.energy() - r1.energy() - r2.energy()).abs() <= 1e-9;
        c.assert(additive && u.conjecture2 == Verdict::Pass, || format!("{} + {}: {:?}", r1.graph6, r2.graph6, u.conjecture2));
    }
    Ok(c.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { grid_points: 2_000, max_order: 6, ..VerifyConfig::default() }
    }

    #[test]
    fn all_pass() {
        let results = run_all(&small()).unwrap();
        for r in &results {
            assert!(r.passed(), "{}: {:?}", r.name, r.failure);
            assert!(r.checked > 0 || r.name == "hoffman_chromatic3", "{} checked nothing", r.name);
        }
    }

    #[test]
    fn sign_bug_breaks_dominance() {
        fn broken(n: usize, m: usize, mu1: f64, mu2: f64, absdet: f64) -> Result<f64> {
            let c = quantity_c(n, m, mu1, mu2, absdet)?;
            Ok(mu1 - (n - 1) as f64 * c)
        }
        let cfg = VerifyConfig { variance_bound: broken, ..small() };
        let results = exhaustive(&cfg).unwrap();
        let dom = results.iter().find(|r| r.name == "dominance_chain").unwrap();
        assert!(!dom.passed());
    }

    #[test]
    fn empty_grid_rejected() {
        let cfg = VerifyConfig { grid_points: 0, ..small() };
        assert!(matches!(run_all(&cfg), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn grid_endpoints() {
        let g: Vec<f64> = grid(1.0, 2.0, 3).collect();
        assert_eq!(g, vec![1.0, 1.5, 2.0]);
        assert_eq!(grid(1.0, 2.0, 1).collect::<Vec<_>>(), vec![2.0]);
    }
}

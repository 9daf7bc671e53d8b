//! The auxiliary inequalities checked on grids, and the property suite over
//! small graphs.
//!
//!     cargo run --release --example lemma_grids -- 100000

use graph_energy::bounds::{avg_degree_threshold, lemma22_margin, lemma35_margin, lemma36_margin, LAMBDA_CAP};
use graph_energy::verify::{helper_facts, lemma_grids, VerifyConfig};

fn main() {
    let points = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10_000);
    for x in [0.5, 1.0, 2.0, 4.5, 6.0, LAMBDA_CAP] {
        println!("lemma22 margin at {x:<5} {:+.6}", lemma22_margin(x).unwrap());
    }
    for x in [13.0, 20.0, 100.0, 1e4] {
        println!("x = {x:<7} lemma35 {:+.6}  lemma36 {:+.6}", lemma35_margin(x).unwrap(), lemma36_margin(x).unwrap());
    }
    for n in [11, 12, 15, 19] {
        println!("n = {n}: average degree threshold {:.4}", avg_degree_threshold(n));
    }
    let cfg = VerifyConfig { grid_points: points, ..VerifyConfig::default() };
    for r in lemma_grids(&cfg).into_iter().chain(helper_facts(&cfg)) {
        println!("{} {} ({} checks)", if r.passed() { "PASS" } else { "FAIL" }, r.name, r.checked);
    }
}

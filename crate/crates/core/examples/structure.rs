//! Chromatic numbers and planarity over all graphs of small order.
//!
//!     cargo run --release --example structure -- 7

use std::collections::BTreeMap;

use graph_energy::enumerate::generate_all;
use graph_energy::graph::{chromatic_number, is_planar};

fn main() -> graph_energy::Result<()> {
    let max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    for n in 1..=max {
        let mut by_chi = BTreeMap::new();
        let mut planar = 0;
        for g in generate_all(n)? {
            *by_chi.entry(chromatic_number(&g)?).or_insert(0) += 1;
            planar += is_planar(&g) as usize;
        }
        println!("n={n}  planar {planar:<6} by chromatic number {by_chi:?}");
    }
    Ok(())
}

//! Counts isomorphism classes of graphs on up to `N` vertices (default 8),
//! with the number of connected and non-singular classes at each order.
//!
//!     cargo run --release --example enumerate -- 9

use std::time::Instant;

use graph_energy::enumerate::generate_all;
use graph_energy::spectra::is_nonsingular;

fn main() -> graph_energy::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    println!("{:>3} {:>9} {:>10} {:>12} {:>9}", "n", "graphs", "connected", "nonsingular", "seconds");
    for n in 1..=max {
        let start = Instant::now();
        let (mut total, mut connected, mut nonsingular) = (0, 0, 0);
        for g in generate_all(n)? {
            total += 1;
            connected += g.is_connected() as usize;
            nonsingular += is_nonsingular(&g) as usize;
        }
        let secs = start.elapsed().as_secs_f64();
        println!("{n:>3} {total:>9} {connected:>10} {nonsingular:>12} {secs:>9.3}");
    }
    Ok(())
}

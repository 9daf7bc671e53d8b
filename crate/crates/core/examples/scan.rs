//! Exhaustive scan of one order, or of a graph6 corpus on stdin.
//!
//!     cargo run --release --example scan -- 8 4
//!     cargo run --release --example scan -- - < graphs.g6

use std::io;

use graph_energy::enumerate::{scan_corpus, scan_order, ScanOptions};

fn main() -> graph_energy::Result<()> {
    let mut args = std::env::args().skip(1);
    let input = args.next().unwrap_or_else(|| "7".into());
    let workers = args.next().and_then(|w| w.parse().ok()).unwrap_or(2);
    let opts = ScanOptions { workers, strict: false };
    let s = if input == "-" { scan_corpus(io::stdin().lock(), &opts)? } else { scan_order(input.parse().unwrap_or(7), &opts)? };

    println!("graphs {}  non-singular {}", s.total_graphs, s.nonsingular_count);
    for v in &s.conjecture2_violations {
        println!("  below n-1+avg: {} n={} energy {:.6} target {:.6}", v.graph6, v.n, v.energy, v.target);
    }
    for (label, count) in &s.coverage_histogram {
        println!("  {label:<16} {count}");
    }
    println!("unexpected violations: {}", s.unexpected_violations().len());
    Ok(())
}

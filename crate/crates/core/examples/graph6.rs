//! Decodes graph6 strings, lists their edges and re-encodes them.
//!
//!     cargo run --example graph6 -- 'DQc' '>>graph6<<C~'

use graph_energy::graph::{from_graph6, to_graph6};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() { vec!["DQc".to_string(), "Ch".into(), "C!".into(), "D".into()] } else { args };
    for text in inputs {
        match from_graph6(&text) {
            Ok(g) => {
                let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                println!("{text:<16} n={} edges [{}] -> {}", g.order(), edges.join(" "), to_graph6(&g).unwrap());
            }
            Err(e) => println!("{text:<16} rejected: {e}"),
        }
    }
}

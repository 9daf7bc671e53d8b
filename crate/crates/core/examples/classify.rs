//! Which sufficient conditions certify the energy inequality for a few
//! named graphs.
//!
//!     cargo run --example classify

use graph_energy::bounds::BoundReport;
use graph_energy::graph::{complete, complete_bipartite, cycle, from_graph6, path, Graph};

fn main() -> graph_energy::Result<()> {
    let petersen = Graph::from_edges(
        10,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )?;
    let cases: Vec<(&str, Graph)> = vec![
        ("C6", cycle(6)?),
        ("P6", path(6)?),
        ("K12", complete(12)?),
        ("K3,3", complete_bipartite(3, 3)?),
        ("Petersen", petersen),
        ("C8", cycle(8)?),
        ("EQjO", from_graph6("EQjO")?),
    ];
    for (name, g) in cases {
        let r = BoundReport::from_graph(&g)?;
        match &r.coverage {
            Some(labels) => {
                let names: Vec<&str> = labels.iter().map(|l| l.name()).collect();
                println!("{name:>9}  {}", names.join(", "));
            }
            None => println!("{name:>9}  not applicable (det = {})", r.det),
        }
    }
    Ok(())
}

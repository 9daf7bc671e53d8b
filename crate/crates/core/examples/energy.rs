//! Energies of standard families, and of any graph6 strings passed as
//! arguments.
//!
//!     cargo run --example energy -- 'C~' 'Ch'

use graph_energy::graph::{complete, complete_bipartite, cycle, from_graph6, path, Graph};
use graph_energy::spectra::eigenvalues;

fn show(name: &str, g: &Graph) -> graph_energy::Result<()> {
    let s = eigenvalues(g)?;
    let ev: Vec<String> = s.eigenvalues.iter().map(|x| format!("{x:.4}")).collect();
    println!("{name:>8}  n={:<2} m={:<3} energy={:<12.8} [{}]", g.order(), g.size(), s.energy, ev.join(", "));
    Ok(())
}

fn main() -> graph_energy::Result<()> {
    for n in [4, 6, 8] {
        show(&format!("P{n}"), &path(n)?)?;
        show(&format!("C{n}"), &cycle(n)?)?;
        show(&format!("K{n}"), &complete(n)?)?;
    }
    show("K3,3", &complete_bipartite(3, 3)?)?;
    for arg in std::env::args().skip(1) {
        show(&arg, &from_graph6(&arg)?)?;
    }
    Ok(())
}

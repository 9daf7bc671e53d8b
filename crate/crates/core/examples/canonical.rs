//! Canonical forms and automorphism orbits.
//!
//!     cargo run --example canonical

use graph_energy::enumerate::{canonical_form, canonical_labeling};
use graph_energy::graph::{cycle, paw, path, Graph};

fn main() -> graph_energy::Result<()> {
    let p4 = path(4)?;
    let shuffled = p4.relabel(&[2, 0, 3, 1]);
    println!("P4 and a relabelling share a form: {}", canonical_form(&p4)? == canonical_form(&shuffled)?);
    println!("P4 canonical bits: {}", canonical_form(&p4)?.bit_string());

    let cases: Vec<(&str, Graph)> = vec![("paw", paw()), ("C6", cycle(6)?), ("P5", path(5)?)];
    for (name, g) in cases {
        let c = canonical_labeling(&g);
        println!(
            "{name:>4}  canonical {}  labelling {:?}  orbits {:?}  generators {}",
            canonical_form(&g)?.to_graph6(),
            c.labeling(),
            c.orbits(),
            c.generators().len()
        );
    }
    Ok(())
}

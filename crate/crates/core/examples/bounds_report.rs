//! Every lower bound, target and verdict for a few graphs.
//!
//!     cargo run --example bounds_report -- 'EhEG'

use graph_energy::bounds::BoundReport;
use graph_energy::graph::{from_graph6, paw, path, Graph};

fn show(g: &Graph) -> graph_energy::Result<()> {
    let r = BoundReport::from_graph(g)?;
    let f = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"));
    println!("{} (n={}, m={}, det={})", r.graph6, r.profile.order, r.profile.size, r.det);
    println!("  energy            {:.6}", r.energy());
    println!("  log bound         {}", f(r.bound_log));
    println!("  AM-GM bound       {}", f(r.bound_amgm));
    println!("  variance bound    {}  (C = {})", f(r.bound_variance), f(r.quantity_c));
    println!("  conjugate bound   {}", f(r.bound_conjugate));
    println!("  max+min degree    {:.6}  {}", r.conjecture1_target, r.conjecture1.as_str());
    println!("  n - 1 + avg deg   {:.6}  {}", r.conjecture2_target, r.conjecture2.as_str());
    println!("  coverage          {:?}", r.coverage);
    Ok(())
}

fn main() -> graph_energy::Result<()> {
    show(&path(4)?)?;
    show(&paw())?;
    show(&from_graph6("C~")?)?;
    for arg in std::env::args().skip(1) {
        show(&from_graph6(&arg)?)?;
    }
    Ok(())
}

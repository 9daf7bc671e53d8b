//! Exact determinants and characteristic polynomials, compared with the
//! floating-point eigenvalue product.
//!
//!     cargo run --example exact_determinant

use graph_energy::graph::{complete, cycle, path, Graph};
use graph_energy::spectra::{char_poly, eigenvalues, exact_determinant};

fn polynomial(coefficients: &[num_bigint::BigInt]) -> String {
    let mut terms = Vec::new();
    for (k, c) in coefficients.iter().enumerate().rev() {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let power = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        let coefficient = match c.to_string().as_str() {
            "1" if k > 0 => String::new(),
            "-1" if k > 0 => "-".into(),
            text => text.to_string(),
        };
        terms.push(format!("{coefficient}{power}"));
    }
    terms.join(" + ").replace("+ -", "- ")
}

fn main() -> graph_energy::Result<()> {
    let cases: Vec<(String, Graph)> = vec![
        ("K3".into(), complete(3)?),
        ("P4".into(), path(4)?),
        ("C8".into(), cycle(8)?),
        ("C9".into(), cycle(9)?),
        ("K40".into(), complete(40)?),
    ];
    for (name, g) in cases {
        let det = exact_determinant(&g);
        let product = eigenvalues(&g)?.product();
        println!("{name:>4}  det={det:<12} eigenvalue product={product:.6e}");
        if g.order() <= 9 {
            println!("      det(xI - A) = {}", polynomial(&char_poly(&g)?.coefficients));
        }
    }
    Ok(())
}

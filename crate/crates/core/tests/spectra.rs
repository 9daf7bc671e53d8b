mod common;

use std::f64::consts::PI;

use graph_energy::graph::{cycle, path, Graph};
use graph_energy::spectra::{char_poly, eigenvalues, exact_determinant};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

#[test]
fn path_and_cycle_closed_forms() {
    for n in 1..=30 {
        let want = sorted_desc((1..=n).map(|k| 2.0 * (k as f64 * PI / (n + 1) as f64).cos()).collect());
        let got = eigenvalues(&path(n).unwrap()).unwrap().eigenvalues;
        assert!(got.iter().zip(&want).all(|(a, b)| (a - b).abs() <= 1e-9), "P{n}");
    }
    for n in 3..=30 {
        let want = sorted_desc((0..n).map(|k| 2.0 * (2.0 * PI * k as f64 / n as f64).cos()).collect());
        let got = eigenvalues(&cycle(n).unwrap()).unwrap().eigenvalues;
        assert!(got.iter().zip(&want).all(|(a, b)| (a - b).abs() <= 1e-9), "C{n}");
    }
}

#[test]
fn determinant_against_rational_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=16 {
        for _ in 0..20 {
            let g = common::random_graph(&mut rng, n, 0.5);
            assert_eq!(*exact_determinant(&g).value(), common::rational_det(&g), "{g:?}");
        }
    }
}

#[test]
fn eigenvalue_product_matches_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 1..=10 {
        for _ in 0..50 {
            let g = common::random_graph(&mut rng, n, 0.5);
            let det = common::rational_det(&g).to_string().parse::<f64>().unwrap();
            let prod = eigenvalues(&g).unwrap().product();
            assert!((prod - det).abs() <= 1e-6 * det.abs().max(1.0), "{g:?}: {prod} vs {det}");
        }
    }
}

#[test]
fn char_poly_constant_term_is_signed_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 1..=12 {
        let g = common::random_graph(&mut rng, n, 0.4);
        let p = char_poly(&g).unwrap();
        let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        assert_eq!(p.coefficients[0].clone() * sign, common::rational_det(&g));
        assert_eq!(p.coefficients[n], BigInt::from(1));
    }
}

fn graph_with_perm() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (2usize..=20).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, perm)| (from_bits(n, &bits), perm))
    })
}

fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

proptest! {
    #[test]
    fn trace_identities((g, _) in graph_with_perm()) {
        let s = eigenvalues(&g).unwrap();
        let sum: f64 = s.eigenvalues.iter().sum();
        let squares: f64 = s.eigenvalues.iter().map(|x| x * x).sum();
        prop_assert!(sum.abs() <= 1e-9);
        prop_assert!((squares - 2.0 * g.size() as f64).abs() <= 1e-8);
        prop_assert!(s.mu1 >= s.mu2 - 1e-12);
    }

    #[test]
    fn relabelling_preserves_spectrum((g, perm) in graph_with_perm()) {
        let h = g.relabel(&perm);
        let (a, b) = (eigenvalues(&g).unwrap(), eigenvalues(&h).unwrap());
        prop_assert!(a.eigenvalues.iter().zip(&b.eigenvalues).all(|(x, y)| (x - y).abs() <= 1e-9));
        prop_assert_eq!(exact_determinant(&g), exact_determinant(&h));
    }
}

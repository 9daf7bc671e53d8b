use graph_energy::graph::{from_graph6, to_graph6, Graph};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=62).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
        })
    })
}

proptest! {
    #[test]
    fn decode_inverts_encode(g in graph()) {
        let s = to_graph6(&g).unwrap();
        prop_assert_eq!(s.len(), 1 + (g.order() * (g.order() - 1) / 2).div_ceil(6));
        prop_assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn arbitrary_text_never_panics(s in "\\PC{0,40}") {
        let _ = from_graph6(&s);
    }

    #[test]
    fn prefixed_form_accepted(g in graph()) {
        let s = format!(">>graph6<<{}\n", to_graph6(&g).unwrap());
        prop_assert_eq!(from_graph6(&s).unwrap(), g);
    }
}

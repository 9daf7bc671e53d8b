//! Exact chromatic number by branch and bound.

use super::{bits, full_mask, Graph};
use crate::error::{Error, Result};

pub const CHROMATIC_MAX_ORDER: usize = 16;

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > CHROMATIC_MAX_ORDER {
        return Err(Error::UnsupportedOrder { op: "chromatic_number", n, max: CHROMATIC_MAX_ORDER });
    }
    if g.size() == 0 {
        return Ok(1);
    }
    let lower = max_clique(g);
    let upper = dsatur_colors(g);
    for k in lower..upper {
        if colorable(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn max_clique(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(g, size + 1, cand & g.neighbors(v), best);
        }
    }
    let mut best = 0;
    expand(g, 0, full_mask(g.order()), &mut best);
    best
}

/// Greedy colouring picking the most saturated vertex first.
fn dsatur_colors(g: &Graph) -> usize {
    let n = g.order();
    let mut color = vec![usize::MAX; n];
    let mut used = vec![0u64; n]; // colours seen in each vertex's neighbourhood
    let mut ncolors = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| (used[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("uncoloured vertex remains");
        let c = (!used[v]).trailing_zeros() as usize;
        color[v] = c;
        ncolors = ncolors.max(c + 1);
        for u in bits(g.neighbors(v)) {
            used[u] |= 1 << c;
        }
    }
    ncolors
}

fn colorable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // class[c] = vertices currently holding colour c
    let mut class = vec![0u64; k];

    fn go(g: &Graph, order: &[usize], idx: usize, k: usize, used: usize, class: &mut [u64]) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if class[c] & g.neighbors(v) == 0 {
                class[c] |= 1 << v;
                if go(g, order, idx + 1, k, used.max(c + 1), class) {
                    return true;
                }
                class[c] &= !(1 << v);
            }
        }
        false
    }
    go(g, &order, 0, k, 0, &mut class)
}

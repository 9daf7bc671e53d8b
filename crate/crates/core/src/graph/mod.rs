//! Simple undirected graphs stored as 64-bit adjacency rows.
//!
//! Vertices are `0..n` and `n` is at most [`MAX_ORDER`]. Row `v` has bit `u`
//! set exactly when `{u, v}` is an edge; rows are symmetric and the diagonal
//! is empty.

mod coloring;
mod graph6;
mod planarity;

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

pub use coloring::{chromatic_number, CHROMATIC_MAX_ORDER};
pub use graph6::{from_graph6, to_graph6};
pub use planarity::is_planar;

/// Largest order representable with a single-byte graph6 header.
pub const MAX_ORDER: usize = 62;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// Edge count and degree statistics of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    /// `2m / n`, kept exact.
    pub avg_degree: Ratio<usize>,
}

impl DegreeProfile {
    pub fn avg_degree_f64(&self) -> f64 {
        *self.avg_degree.numer() as f64 / *self.avg_degree.denom() as f64
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("graph order must be at least 1".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder { op: "graph", n, max: MAX_ORDER });
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Builds a graph from adjacency rows, checking symmetry and the diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidArgument(format!("row {v} has bits beyond order {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {v}")));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidArgument(format!("asymmetric edge ({v},{u})")));
                }
            }
        }
        g.rows = rows;
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidArgument(format!("bad edge ({u},{v}) for order {n}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Rows are trusted; used by the enumerator's hot path.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_ORDER);
        Graph { n: rows.len(), rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| bits(self.rows[v] & !full_mask(v + 1)).map(move |u| (v, u)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = (0..self.n).map(|v| self.degree(v));
        let (mut lo, mut hi, mut sum) = (usize::MAX, 0, 0);
        for d in degrees {
            lo = lo.min(d);
            hi = hi.max(d);
            sum += d;
        }
        DegreeProfile {
            order: self.n,
            size: sum / 2,
            max_degree: hi,
            min_degree: lo,
            avg_degree: Ratio::new(sum, self.n),
        }
    }

    /// Returns `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full_mask(self.n)
    }

    /// Two-colouring by breadth-first layering.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for u in bits(self.rows[v]) {
                    if side[u] == u8::MAX {
                        side[u] = side[v] ^ 1;
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Block-diagonal union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder { op: "disjoint_union", n, max: MAX_ORDER });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let rows = perm
            .iter()
            .map(|&old| bits(self.rows[old]).fold(0u64, |acc, u| acc | 1 << inv[u]))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Graph with one extra vertex `n` adjacent to the vertices in `mask`.
    pub(crate) fn augment(&self, mask: u64) -> Graph {
        let n = self.n;
        let mut rows = Vec::with_capacity(n + 1);
        rows.extend(self.rows.iter().enumerate().map(|(v, r)| r | (mask >> v & 1) << n));
        rows.push(mask);
        Graph { n: n + 1, rows }
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| if self.has_edge(i, j) { 1.0 } else { 0.0 }).collect())
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match to_graph6(self) {
            Ok(s) => write!(f, "Graph({s})"),
            Err(_) => write!(f, "Graph(n={})", self.n),
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        g.rows[v] = full_mask(n) & !(1 << v);
    }
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("both sides of K_{a,b} must be non-empty".into()));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// Triangle with one pendant vertex.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).expect("static edge list")
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `k + 1` vertices is produced from a parent on `k` vertices by
//! joining a new vertex to a neighbourhood mask. Masks are tried once per
//! orbit of the parent's automorphism group, and a child is kept only when
//! the new vertex lies in the orbit of the child's canonical deletion vertex:
//! among the vertices minimising `(degree, neighbour degree sum)`, the one
//! with the largest canonical position. Every isomorphism class then appears
//! exactly once, and nothing but the current path is held in memory.

use super::canon::{canonical_labeling, find, union};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Largest order the generator accepts.
pub const GENERATE_MAX_ORDER: usize = 10;

/// A generated graph in canonical labelling together with its automorphism
/// group generators (in that labelling).
#[derive(Clone, Debug)]
pub struct Node {
    pub graph: Graph,
    pub generators: Vec<Vec<usize>>,
}

impl Node {
    pub fn root() -> Node {
        Node { graph: Graph::empty(1).expect("order 1"), generators: Vec::new() }
    }

    /// One representative neighbourhood mask per automorphism orbit.
    fn mask_representatives(&self) -> Vec<u64> {
        let k = self.graph.order();
        let count = 1usize << k;
        if self.generators.is_empty() {
            return (0..count as u64).collect();
        }
        let mut uf: Vec<usize> = (0..count).collect();
        for gen in &self.generators {
            for mask in 0..count {
                let image = bits(mask as u64).fold(0usize, |acc, b| acc | 1 << gen[b]);
                union(&mut uf, mask, image);
            }
        }
        (0..count).filter(|&m| find(&mut uf, m) == m).map(|m| m as u64).collect()
    }

    /// The child obtained from `mask`, if it is the canonical augmentation.
    fn augment(&self, mask: u64) -> Option<Node> {
        let child = self.graph.augment(mask);
        let n = child.order();
        let new = n - 1;
        let inv: Vec<(usize, usize)> = (0..n)
            .map(|v| {
                let nb = child.neighbors(v);
                (child.degree(v), bits(nb).map(|u| child.degree(u)).sum())
            })
            .collect();
        let min = *inv.iter().min().expect("non-empty");
        if inv[new] != min {
            return None;
        }
        let canon = canonical_labeling(&child);
        let pos = canon.positions();
        let deletion = (0..n).filter(|&v| inv[v] == min).max_by_key(|&v| pos[v]).expect("new vertex qualifies");
        if !canon.same_orbit(new, deletion) {
            return None;
        }
        let generators = canon
            .generators()
            .iter()
            .map(|gen| canon.labeling().iter().map(|&old| pos[gen[old]]).collect())
            .collect();
        Some(Node { graph: canon.graph(), generators })
    }
}

struct Frame {
    node: Node,
    masks: Vec<u64>,
    next: usize,
}

/// Depth-first stream of all graphs of a given order below a starting node.
pub struct GraphGenerator {
    target: usize,
    stack: Vec<Frame>,
    pending: Option<Graph>,
}

impl GraphGenerator {
    /// Every isomorphism class of graphs on `n` vertices, each exactly once.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > GENERATE_MAX_ORDER {
            return Err(Error::UnsupportedOrder { op: "generate_all", n, max: GENERATE_MAX_ORDER });
        }
        Ok(Self::from_node(Node::root(), n))
    }

    /// Descendants of `node` with `target` vertices.
    pub fn from_node(node: Node, target: usize) -> Self {
        let k = node.graph.order();
        if k == target {
            return GraphGenerator { target, stack: Vec::new(), pending: Some(node.graph) };
        }
        if k > target {
            return GraphGenerator { target, stack: Vec::new(), pending: None };
        }
        let masks = node.mask_representatives();
        GraphGenerator { target, stack: vec![Frame { node, masks, next: 0 }], pending: None }
    }
}

impl Iterator for GraphGenerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.pending.take() {
            return Some(g);
        }
        while let Some(top) = self.stack.last_mut() {
            if top.next == top.masks.len() {
                self.stack.pop();
                continue;
            }
            let mask = top.masks[top.next];
            top.next += 1;
            let Some(child) = top.node.augment(mask) else {
                continue;
            };
            if child.graph.order() == self.target {
                return Some(child.graph);
            }
            let masks = child.mask_representatives();
            self.stack.push(Frame { node: child, masks, next: 0 });
        }
        None
    }
}

pub fn generate_all(n: usize) -> Result<GraphGenerator> {
    GraphGenerator::new(n)
}

/// All canonical nodes with exactly `level` vertices, in generation order.
pub fn nodes_at_level(level: usize) -> Result<Vec<Node>> {
    if level == 0 || level > GENERATE_MAX_ORDER {
        return Err(Error::UnsupportedOrder { op: "nodes_at_level", n: level, max: GENERATE_MAX_ORDER });
    }
    let mut layer = vec![Node::root()];
    for _ in 1..level {
        layer = layer
            .iter()
            .flat_map(|node| node.mask_representatives().into_iter().filter_map(move |m| node.augment(m)))
            .collect();
    }
    Ok(layer)
}

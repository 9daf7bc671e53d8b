//! Canonical labelling by equitable partition refinement and an
//! individualisation search tree, pruned with the automorphisms it discovers.
//!
//! The canonical form is the lexicographically largest row sequence among
//! the labellings at the leaves of the search tree. Leaves with equal forms
//! yield automorphisms; these prune sibling subtrees and, once the search is
//! finished, generate the full automorphism group.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{bits, to_graph6, Graph, MAX_ORDER};

const W: usize = 64;

type Perm = [u8; W];

/// Result of canonically labelling one graph.
#[derive(Clone, Debug)]
pub struct Canonical {
    n: usize,
    /// `labeling[i]` is the vertex placed at canonical position `i`.
    labeling: Vec<usize>,
    form: Vec<u64>,
    generators: Vec<Vec<usize>>,
    orbit: Vec<usize>,
}

impl Canonical {
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    /// Canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n];
        for (i, &v) in self.labeling.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// The graph relabelled into canonical order.
    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.form.clone())
    }

    /// Automorphism group generators, as vertex maps of the input graph.
    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn same_orbit(&self, a: usize, b: usize) -> bool {
        self.orbit[a] == self.orbit[b]
    }

    /// Smallest vertex in the automorphism orbit of each vertex.
    pub fn orbits(&self) -> &[usize] {
        &self.orbit
    }
}

/// Permutation-invariant representative of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Upper-triangle bits in graph6 column order.
    pub fn bit_string(&self) -> String {
        let n = self.rows.len();
        let mut s = String::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                s.push(if self.rows[i] >> j & 1 == 1 { '1' } else { '0' });
            }
        }
        s
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(&self.graph()).expect("order checked on construction")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    if g.order() > MAX_ORDER {
        return Err(Error::UnsupportedOrder { op: "canonical_form", n: g.order(), max: MAX_ORDER });
    }
    Ok(CanonicalForm { rows: canonical_labeling(g).form })
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.order();
    let rows = g.rows();
    let mut lab = [0u8; W];
    for (i, slot) in lab.iter_mut().enumerate().take(n) {
        *slot = i as u8;
    }
    let mut ends = 1u64 << (n - 1);
    refine(rows, n, &mut lab, &mut ends);

    let mut s = Search { rows, n, first: None, best: None, auts: Vec::new() };
    let mut fixed = Vec::with_capacity(n);
    s.descend(lab, ends, &mut fixed);

    let (best_lab, best_form) = s.best.expect("search reaches a leaf");
    let mut uf: Vec<usize> = (0..n).collect();
    for a in &s.auts {
        for v in 0..n {
            union(&mut uf, v, a[v] as usize);
        }
    }
    let orbit = (0..n).map(|v| find(&mut uf, v)).collect();
    Canonical {
        n,
        labeling: best_lab[..n].iter().map(|&v| v as usize).collect(),
        form: best_form[..n].to_vec(),
        generators: s.auts.iter().map(|a| a[..n].iter().map(|&v| v as usize).collect()).collect(),
        orbit,
    }
}

/// Union-find whose roots are the smallest element of each class.
pub(crate) fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

pub(crate) fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra < rb {
        uf[rb] = ra;
    } else if rb < ra {
        uf[ra] = rb;
    }
}

#[inline]
fn cell_end(ends: u64, start: usize) -> usize {
    start + (ends >> start).trailing_zeros() as usize
}

/// Refines the ordered partition `(lab, ends)` to the coarsest equitable one.
/// Bit `p` of `ends` marks position `p` as the last of its cell.
fn refine(rows: &[u64], n: usize, lab: &mut Perm, ends: &mut u64) {
    let mut counts = [0u32; W];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < n {
            let e = cell_end(*ends, s);
            let splitter = lab[s..=e].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut c = 0;
            while c < n {
                let ce = cell_end(*ends, c);
                if ce > c {
                    for p in c..=ce {
                        counts[p] = (rows[lab[p] as usize] & splitter).count_ones();
                    }
                    if counts[c..=ce].iter().any(|&k| k != counts[c]) {
                        // insertion sort by count, stable
                        for p in c + 1..=ce {
                            let (k, v) = (counts[p], lab[p]);
                            let mut q = p;
                            while q > c && counts[q - 1] > k {
                                counts[q] = counts[q - 1];
                                lab[q] = lab[q - 1];
                                q -= 1;
                            }
                            counts[q] = k;
                            lab[q] = v;
                        }
                        for p in c..ce {
                            if counts[p] != counts[p + 1] {
                                *ends |= 1 << p;
                            }
                        }
                        changed = true;
                    }
                }
                c = ce + 1;
            }
            s = e + 1;
        }
        if !changed {
            break;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<(Perm, [u64; W])>,
    best: Option<(Perm, [u64; W])>,
    auts: Vec<Perm>,
}

impl Search<'_> {
    fn descend(&mut self, lab: Perm, ends: u64, fixed: &mut Vec<u8>) {
        let n = self.n;
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if ends & all == all {
            self.leaf(&lab);
            return;
        }
        // first non-singleton cell
        let mut c = 0;
        let mut ce = cell_end(ends, 0);
        while ce == c {
            c = ce + 1;
            ce = cell_end(ends, c);
        }
        let cell: Vec<u8> = lab[c..=ce].to_vec();
        let mut explored = 0u64;
        for &v in &cell {
            if explored != 0 && self.equivalent_to_explored(v, explored, fixed) {
                continue;
            }
            explored |= 1 << v;
            let mut child = lab;
            let p = c + child[c..=ce].iter().position(|&x| x == v).expect("vertex in cell");
            child.swap(c, p);
            let mut child_ends = ends | 1 << c;
            refine(self.rows, n, &mut child, &mut child_ends);
            fixed.push(v);
            self.descend(child, child_ends, fixed);
            fixed.pop();
        }
    }

    /// Whether `v` is mapped onto an explored vertex by the group generated by
    /// known automorphisms fixing `fixed` pointwise.
    fn equivalent_to_explored(&self, v: u8, explored: u64, fixed: &[u8]) -> bool {
        let n = self.n;
        let mut uf: [usize; W] = std::array::from_fn(|i| i);
        let mut any = false;
        for a in &self.auts {
            if fixed.iter().all(|&f| a[f as usize] == f) {
                any = true;
                for x in 0..n {
                    union(&mut uf, x, a[x] as usize);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut uf, v as usize);
        bits(explored).any(|u| find(&mut uf, u) == rv)
    }

    fn leaf(&mut self, lab: &Perm) {
        let n = self.n;
        let mut pos = [0u8; W];
        for i in 0..n {
            pos[lab[i] as usize] = i as u8;
        }
        let mut form = [0u64; W];
        for i in 0..n {
            form[i] = bits(self.rows[lab[i] as usize]).fold(0u64, |acc, u| acc | 1 << pos[u]);
        }

        let Some((first_lab, first_form)) = self.first else {
            self.first = Some((*lab, form));
            self.best = Some((*lab, form));
            return;
        };
        if form[..n] == first_form[..n] {
            let a = automorphism(&first_lab, lab, n);
            self.record(a);
        }
        let (best_lab, best_form) = self.best.expect("set with first");
        match form[..n].cmp(&best_form[..n]) {
            Ordering::Greater => self.best = Some((*lab, form)),
            Ordering::Equal => {
                let a = automorphism(&best_lab, lab, n);
                self.record(a);
            }
            Ordering::Less => {}
        }
    }

    fn record(&mut self, a: Perm) {
        let n = self.n;
        if (0..n).all(|i| a[i] as usize == i) || self.auts.iter().any(|b| b[..n] == a[..n]) {
            return;
        }
        self.auts.push(a);
    }
}

/// The map sending `from[i]` to `to[i]` for every position.
fn automorphism(from: &Perm, to: &Perm, n: usize) -> Perm {
    let mut a = [0u8; W];
    for i in 0..n {
        a[from[i] as usize] = to[i];
    }
    a
}

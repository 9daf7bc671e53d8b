//! Planarity by incremental face embedding (Demoucron, Malgrange, Pertuiset),
//! run separately on every biconnected block.

use super::{bits, Graph};

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.size() > 3 * n - 6 {
        return false;
    }
    blocks(g).into_iter().all(|mask| {
        if mask.count_ones() <= 4 {
            return true;
        }
        let rows: Vec<u64> = (0..n)
            .map(|v| if mask >> v & 1 == 1 { g.neighbors(v) & mask } else { 0 })
            .collect();
        embed_biconnected(&rows, mask)
    })
}

/// Vertex sets of the biconnected components (Hopcroft–Tarjan).
fn blocks(g: &Graph) -> Vec<u64> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<usize>,
        out: Vec<u64>,
    }
    const UNSEEN: usize = usize::MAX;

    fn dfs(s: &mut State, v: usize, parent: usize) {
        s.disc[v] = s.time;
        s.low[v] = s.time;
        s.time += 1;
        s.stack.push(v);
        for u in bits(s.g.neighbors(v)) {
            if s.disc[u] == UNSEEN {
                dfs(s, u, v);
                s.low[v] = s.low[v].min(s.low[u]);
                if s.low[u] >= s.disc[v] {
                    let mut block = 1u64 << v;
                    while let Some(w) = s.stack.pop() {
                        block |= 1 << w;
                        if w == u {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if u != parent {
                s.low[v] = s.low[v].min(s.disc[u]);
            }
        }
    }

    let n = g.order();
    let mut s = State { g, disc: vec![UNSEEN; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == UNSEEN {
            dfs(&mut s, v, UNSEEN);
            s.stack.clear();
        }
    }
    s.out
}

enum Fragment {
    Chord(usize, usize),
    Component { vertices: u64, attach: u64 },
}

impl Fragment {
    fn attachments(&self) -> u64 {
        match *self {
            Fragment::Chord(u, v) => 1 << u | 1 << v,
            Fragment::Component { attach, .. } => attach,
        }
    }
}

/// `rows` describes a 2-connected graph on the vertex set `mask`.
fn embed_biconnected(rows: &[u64], mask: u64) -> bool {
    let Some(cycle) = find_cycle(rows, mask) else {
        return true;
    };
    let n = rows.len();
    let mut embedded_vertices = 0u64;
    let mut embedded = vec![0u64; n];
    for (i, &v) in cycle.iter().enumerate() {
        let u = cycle[(i + 1) % cycle.len()];
        embedded_vertices |= 1 << v;
        embedded[v] |= 1 << u;
        embedded[u] |= 1 << v;
    }
    let mut faces = vec![cycle.clone(), cycle];

    loop {
        let fragments = fragments(rows, mask, embedded_vertices, &embedded);
        if fragments.is_empty() {
            return true;
        }
        let face_masks: Vec<u64> = faces.iter().map(|f| f.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> =
                face_masks.iter().enumerate().filter(|(_, &fm)| att & !fm == 0).map(|(i, _)| i).collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment");
        let path = fragment_path(rows, &fragments[fi]);

        for w in path.windows(2) {
            embedded[w[0]] |= 1 << w[1];
            embedded[w[1]] |= 1 << w[0];
        }
        for &v in &path {
            embedded_vertices |= 1 << v;
        }
        let (a, b) = (path[0], *path.last().expect("non-empty path"));
        let interior = &path[1..path.len() - 1];
        let face = &faces[face_idx];
        let len = face.len();
        let ia = face.iter().position(|&v| v == a).expect("attachment on face");
        let ib = face.iter().position(|&v| v == b).expect("attachment on face");
        let walk = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut i = from;
            while i != to {
                i = (i + 1) % len;
                out.push(face[i]);
            }
            out
        };
        let mut first = walk(ia, ib);
        first.extend(interior.iter().rev());
        let mut second = walk(ib, ia);
        second.extend(interior.iter());
        faces[face_idx] = first;
        faces.push(second);
    }
}

fn find_cycle(rows: &[u64], mask: u64) -> Option<Vec<usize>> {
    fn dfs(rows: &[u64], v: usize, parent: usize, stack: &mut Vec<usize>, state: &mut [u8]) -> Option<Vec<usize>> {
        state[v] = 1;
        stack.push(v);
        for u in bits(rows[v]) {
            if u == parent {
                continue;
            }
            if state[u] == 1 {
                let start = stack.iter().position(|&w| w == u).expect("ancestor on stack");
                return Some(stack[start..].to_vec());
            }
            if state[u] == 0 {
                if let Some(c) = dfs(rows, u, v, stack, state) {
                    return Some(c);
                }
            }
        }
        stack.pop();
        state[v] = 2;
        None
    }
    let start = mask.trailing_zeros() as usize;
    let mut state = vec![0u8; rows.len()];
    dfs(rows, start, usize::MAX, &mut Vec::new(), &mut state)
}

fn fragments(rows: &[u64], mask: u64, in_h: u64, embedded: &[u64]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for v in bits(in_h) {
        for u in bits(rows[v] & in_h & !embedded[v]) {
            if v < u {
                out.push(Fragment::Chord(v, u));
            }
        }
    }
    let mut rest = mask & !in_h;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= rows[v];
            }
            frontier = next & rest & !comp;
            comp |= frontier;
        }
        let attach = bits(comp).fold(0, |a, v| a | rows[v]) & in_h;
        out.push(Fragment::Component { vertices: comp, attach });
        rest &= !comp;
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(rows: &[u64], frag: &Fragment) -> Vec<usize> {
    match *frag {
        Fragment::Chord(u, v) => vec![u, v],
        Fragment::Component { vertices, attach } => {
            let a = attach.trailing_zeros() as usize;
            let others = attach & !(1 << a);
            let mut prev = vec![usize::MAX; rows.len()];
            let mut queue = std::collections::VecDeque::new();
            let mut seen = 0u64;
            for x in bits(rows[a] & vertices) {
                prev[x] = a;
                seen |= 1 << x;
                queue.push_back(x);
            }
            while let Some(x) = queue.pop_front() {
                if rows[x] & others != 0 {
                    let b = (rows[x] & others).trailing_zeros() as usize;
                    let mut path = vec![b, x];
                    let mut cur = x;
                    while prev[cur] != a {
                        cur = prev[cur];
                        path.push(cur);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                for y in bits(rows[x] & vertices & !seen) {
                    seen |= 1 << y;
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
            unreachable!("fragment of a 2-connected graph has two attachments")
        }
    }
}

//! Canonical labeling by individualisation and equitable refinement, with
//! automorphism pruning of the search tree.
//!
//! Cells of an ordered partition are vertex bit masks. Refinement splits every
//! cell by neighbour counts into a splitter cell and orders the fragments by
//! increasing count, so the result depends only on the isomorphism class of
//! the (graph, partition) pair. The canonical leaf is the one whose relabelled
//! adjacency rows are lexicographically largest.

use std::cmp::Ordering;

use crate::graph::{BitIter, Graph, MAX_VERTICES};
use crate::graph6;

/// Result of canonically labelling a graph.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `lab[i]` is the original vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    /// `g` relabelled by `lab`: vertex `lab[i]` becomes `i`.
    pub canonical: Graph,
    /// Automorphisms found during the search, as vertex maps. They generate
    /// the full automorphism group.
    pub generators: Vec<Vec<usize>>,
    /// `orbits[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Labeling {
    /// Canonical position of every vertex (the inverse of `lab`).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn canonical_graph6(&self) -> String {
        graph6::encode(&self.canonical)
    }
}

/// A graph together with its canonical graph6 string. Two graphs are
/// isomorphic iff their `canon` strings are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGraph {
    pub graph: Graph,
    pub canon: String,
}

impl CanonicalGraph {
    pub fn new(graph: Graph) -> Self {
        let canon = canonical_form(&graph);
        CanonicalGraph { graph, canon }
    }
}

/// Isomorphism-invariant graph6 string of `g`.
pub fn canonical_form(g: &Graph) -> String {
    canonical_labeling(g).canonical_graph6()
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    let mut cells = vec![crate::graph::low_mask(n)];
    let mut queue = vec![crate::graph::low_mask(n)];
    refine(g, &mut cells, &mut queue);

    let mut search = Search {
        g,
        n,
        path: Vec::with_capacity(n),
        first: None,
        best: None,
        generators: Vec::new(),
        uf: vec![0; n],
    };
    search.visit(cells);

    let best = search.best.take().expect("search visits at least one leaf");
    let mut orbits: Vec<usize> = (0..n).collect();
    for gen in &search.generators {
        join_orbits(&mut orbits, gen);
    }
    for v in 0..n {
        orbits[v] = find(&mut orbits, v);
    }
    Labeling {
        lab: best.lab,
        canonical: Graph::from_rows(n, &best.cert),
        generators: search.generators,
        orbits,
    }
}

/// Refines `cells` to the coarsest equitable partition finer than it, given
/// the splitters in `queue` (consumed).
fn refine(g: &Graph, cells: &mut Vec<u64>, queue: &mut Vec<u64>) {
    let rows = g.rows();
    let mut head = 0;
    let mut frag = [0u64; MAX_VERTICES + 1];
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        let mut i = 0;
        while i < cells.len() {
            let c = cells[i];
            if c & (c - 1) == 0 {
                i += 1;
                continue;
            }
            let mut present = 0u64;
            for v in BitIter(c) {
                let k = (rows[v] & w).count_ones() as usize;
                if present >> k & 1 == 0 {
                    present |= 1 << k;
                    frag[k] = 0;
                }
                frag[k] |= 1 << v;
            }
            if present & (present - 1) == 0 {
                i += 1;
                continue;
            }
            let pieces: Vec<u64> = BitIter(present).map(|k| frag[k]).collect();
            let len = pieces.len();
            queue.extend_from_slice(&pieces);
            cells.splice(i..=i, pieces);
            i += len;
        }
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

fn join_orbits(parent: &mut [usize], perm: &[usize]) {
    for (v, &w) in perm.iter().enumerate() {
        let (a, b) = (find(parent, v), find(parent, w));
        if a != b {
            // keep the smaller vertex as the root
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
}

struct Leaf {
    lab: Vec<usize>,
    cert: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Vertices individualised on the way to the current node.
    path: Vec<usize>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    uf: Vec<usize>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Explores the subtree below the node whose partition is `cells`.
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn visit(&mut self, cells: Vec<u64>) -> Option<usize> {
        let level = self.path.len();
        let Some(target) = target_cell(&cells) else {
            return self.leaf(&cells);
        };
        let cell = cells[target];
        let mut explored = 0u64;
        let mut orbit_gens = usize::MAX;
        for w in BitIter(cell) {
            if explored != 0 {
                if orbit_gens != self.generators.len() {
                    self.stabiliser_orbits();
                    orbit_gens = self.generators.len();
                }
                let rw = find(&mut self.uf, w);
                if BitIter(explored).any(|x| find(&mut self.uf, x) == rw) {
                    continue;
                }
            }
            explored |= 1 << w;

            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << w);
            child.push(cell & !(1 << w));
            child.extend_from_slice(&cells[target + 1..]);
            let mut queue = vec![1u64 << w];
            refine(self.g, &mut child, &mut queue);

            self.path.push(w);
            let jump = self.visit(child);
            self.path.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    /// Orbits, in `self.uf`, of the group generated by the automorphisms that
    /// fix the current path pointwise.
    fn stabiliser_orbits(&mut self) {
        for (v, p) in self.uf.iter_mut().enumerate() {
            *p = v;
        }
        for gen in &self.generators {
            if self.path.iter().all(|&v| gen[v] == v) {
                join_orbits(&mut self.uf, gen);
            }
        }
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let n = self.n;
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows = self.g.rows();
        let cert: Vec<u64> = lab
            .iter()
            .map(|&v| BitIter(rows[v]).fold(0u64, |acc, u| acc | (1 << pos[u])))
            .collect();

        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab,
                cert,
                path: self.path.clone(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gen = automorphism(&first.lab, &lab, n);
            let back = common_prefix(&self.path, &first.path);
            self.generators.push(gen);
            return Some(back);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match cert.cmp(&best.cert) {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    lab,
                    cert,
                    path: self.path.clone(),
                });
                None
            }
            Ordering::Equal => {
                let gen = automorphism(&best.lab, &lab, n);
                let back = common_prefix(&self.path, &best.path);
                self.generators.push(gen);
                Some(back)
            }
            Ordering::Less => None,
        }
    }
}

/// The permutation sending `from[i]` to `to[i]` for every position `i`.
fn automorphism(from: &[usize], to: &[usize], n: usize) -> Vec<usize> {
    let mut gen = vec![0; n];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}

/// First smallest non-singleton cell, or `None` for a discrete partition.
fn target_cell(cells: &[u64]) -> Option<usize> {
    let mut best: Option<(usize, u32)> = None;
    for (i, &c) in cells.iter().enumerate() {
        let size = c.count_ones();
        if size > 1 && best.is_none_or(|(_, s)| size < s) {
            best = Some((i, size));
        }
    }
    best.map(|(i, _)| i)
}

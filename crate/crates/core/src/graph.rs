//! Dense bit-row representation of simple undirected graphs on at most 62 vertices.

use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

/// Largest supported vertex count. Keeps graph6 headers to a single byte.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("vertex set must be non-empty")]
    EmptyVertexSet,
    #[error("vertex set {0:#x} is not contained in 0..{1}")]
    VertexSetOutOfRange(u64, usize),
    #[error("disjoint union would have {0} vertices (max {MAX_VERTICES})")]
    UnionTooLarge(usize),
}

/// Simple undirected graph stored as symmetric adjacency bit rows.
///
/// Row `i` holds the neighbour set of vertex `i`; only the first `n` rows are
/// meaningful and unused rows stay zero.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: [u64; MAX_VERTICES],
}

/// Subset of the vertices of a graph, as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn iter(&self) -> BitIter {
        BitIter(self.0)
    }
}

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Debug, Clone)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if !(1..=MAX_VERTICES).contains(&n) {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph {
            n,
            rows: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows must be symmetric with a
    /// zero diagonal; this is checked in debug builds only.
    pub(crate) fn from_rows(n: usize, src: &[u64]) -> Graph {
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        let mut rows = [0u64; MAX_VERTICES];
        rows[..n].copy_from_slice(&src[..n]);
        let g = Graph { n, rows };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for i in 0..n {
            g.rows[i] = all & !(1u64 << i);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in BitIter(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    /// Appends a new vertex adjacent to `nbrs` (a subset of the current vertices).
    pub(crate) fn with_new_vertex(&self, nbrs: u64) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(nbrs & !low_mask(self.n), 0);
        let mut g = self.clone();
        let v = self.n;
        g.n += 1;
        g.rows[v] = nbrs;
        for u in BitIter(nbrs) {
            g.rows[u] |= 1u64 << v;
        }
        g
    }

    /// Symmetry and zero diagonal.
    pub fn is_well_formed(&self) -> bool {
        let all = low_mask(self.n);
        (0..self.n).all(|i| {
            let r = self.rows[i];
            r >> i & 1 == 0
                && r & !all == 0
                && BitIter(r).all(|j| self.rows[j] >> i & 1 == 1)
        }) && self.rows[self.n..].iter().all(|&r| r == 0)
    }

    /// Vertices reachable from `start` inside the vertex mask `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let all = low_mask(self.n);
        self.reach(0, all) == all
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(start, left);
            out.push(VertexSet(comp));
            left &= !comp;
        }
        out
    }

    /// Connected components as induced subgraphs.
    pub fn components(&self) -> Vec<Graph> {
        self.component_sets()
            .into_iter()
            .map(|s| self.induced_unchecked(s.0))
            .collect()
    }

    /// Induced subgraph on `s`, relabelled `0..|s|` in ascending original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if s.0 & !low_mask(self.n) != 0 {
            return Err(GraphError::VertexSetOutOfRange(s.0, self.n));
        }
        Ok(self.induced_unchecked(s.0))
    }

    pub(crate) fn induced_unchecked(&self, s: u64) -> Graph {
        let verts: Vec<usize> = BitIter(s).collect();
        let mut rows = [0u64; MAX_VERTICES];
        for (i, &u) in verts.iter().enumerate() {
            let r = self.rows[u] & s;
            rows[i] = verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| r >> w & 1 == 1)
                .fold(0u64, |acc, (j, _)| acc | (1u64 << j));
        }
        Graph {
            n: verts.len(),
            rows,
        }
    }

    /// `G − v`.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced_unchecked(low_mask(self.n) & !(1u64 << v))
    }

    /// Disjoint union; `b` is relabelled by `+|a|`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
        let n = a.n + b.n;
        if n > MAX_VERTICES {
            return Err(GraphError::UnionTooLarge(n));
        }
        let mut g = a.clone();
        g.n = n;
        for i in 0..b.n {
            g.rows[a.n + i] = b.rows[i] << a.n;
        }
        Ok(g)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut rows = [0u64; MAX_VERTICES];
        for u in 0..self.n {
            rows[perm[u]] = BitIter(self.rows[u]).fold(0u64, |acc, w| acc | (1u64 << perm[w]));
        }
        Graph { n: self.n, rows }
    }

    /// Number of triangles, by brute force over vertex triples.
    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.has_edge(a, b) {
                    continue;
                }
                for c in b + 1..self.n {
                    if self.has_edge(a, c) && self.has_edge(b, c) {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    /// True iff removing `v` leaves the rest connected (or `n == 1`).
    pub fn is_non_cut_vertex(&self, v: usize) -> bool {
        if self.n <= 2 {
            return true;
        }
        let rest = low_mask(self.n) & !(1u64 << v);
        let start = rest.trailing_zeros() as usize;
        self.reach(start, rest) == rest
    }

    /// Mask of vertices whose removal keeps a connected graph connected.
    pub fn non_cut_vertices(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.is_non_cut_vertex(v))
            .fold(0u64, |acc, v| acc | (1u64 << v))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows[..self.n] == other.rows[..other.n]
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows[..self.n].hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_triangle_and_path() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.size(), 3);
        assert_eq!(k3, Graph::complete(3).unwrap());
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.size(), 2);
        assert_eq!(p3, Graph::path(3).unwrap());
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange(0, 3, 3))
        ));
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::VertexCount(0)));
        assert_eq!(Graph::from_edges(63, &[]), Err(GraphError::VertexCount(63)));
        assert!(Graph::from_edges(62, &[(0, 61)]).unwrap().is_well_formed());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::empty(1).unwrap().is_connected());
        let k2 = Graph::complete(2).unwrap();
        assert!(!Graph::disjoint_union(&k2, &k2).unwrap().is_connected());
        assert!(Graph::path(10).unwrap().is_connected());
    }

    #[test]
    fn components_partition_vertices() {
        let g = Graph::disjoint_union(&Graph::complete(3).unwrap(), &Graph::complete(2).unwrap())
            .unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], Graph::complete(3).unwrap());
        assert_eq!(comps[1], Graph::complete(2).unwrap());

        assert_eq!(Graph::path(5).unwrap().components().len(), 1);
        let e3 = Graph::empty(3).unwrap().components();
        assert_eq!(e3.len(), 3);
        assert!(e3.iter().all(|c| c.order() == 1));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4).unwrap();
        let s = VertexSet::from_vertices([0, 1, 2]);
        assert_eq!(k4.induced_subgraph(s).unwrap(), Graph::complete(3).unwrap());

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.induced_subgraph(s).unwrap(), Graph::path(3).unwrap());
        assert_eq!(
            k4.induced_subgraph(VertexSet(0)),
            Err(GraphError::EmptyVertexSet)
        );
        assert!(k4.induced_subgraph(VertexSet(1 << 4)).is_err());
    }

    #[test]
    fn disjoint_unions() {
        let k1 = Graph::empty(1).unwrap();
        let u = Graph::disjoint_union(&k1, &k1).unwrap();
        assert_eq!((u.order(), u.size()), (2, 0));

        let k3 = Graph::complete(3).unwrap();
        let u = Graph::disjoint_union(&k3, &k3).unwrap();
        assert_eq!((u.order(), u.size(), u.components().len()), (6, 6, 2));

        let u = Graph::disjoint_union(&Graph::path(3).unwrap(), &Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!((u.order(), u.size()), (5, 3));
        assert!(u.is_well_formed());

        let big = Graph::empty(40).unwrap();
        assert_eq!(
            Graph::disjoint_union(&big, &big),
            Err(GraphError::UnionTooLarge(80))
        );
    }

    #[test]
    fn cut_vertices_of_a_path() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.non_cut_vertices(), 0b1001);
        assert_eq!(Graph::complete(4).unwrap().non_cut_vertices(), 0b1111);
    }

    #[test]
    fn triangles() {
        assert_eq!(Graph::complete(4).unwrap().triangle_count(), 4);
        assert_eq!(Graph::path(4).unwrap().triangle_count(), 0);
    }
}

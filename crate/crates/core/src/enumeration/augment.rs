//! Isomorph-free generation of connected graphs by canonical augmentation.
//!
//! A child is built from a connected parent on `k` vertices by adding vertex
//! `k` adjacent to a non-empty set `S`; one `S` is tried per orbit of the
//! parent's automorphism group on subsets. The child is kept iff the new
//! vertex lies in the automorphism orbit of the child's *canonical deletion
//! vertex*: among the non-cut vertices with the largest invariant
//! `(degree, sum of neighbour degrees)`, the one placed last by the canonical
//! labeling. Every connected graph on `n ≥ 2` vertices has a non-cut vertex,
//! so every isomorphism class is reached exactly once.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{BitIter, Graph, MAX_VERTICES};
use crate::graph6;

use super::canon::canonical_labeling;

/// Orders above this are allowed but logged, since class counts explode.
pub const SOFT_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {0} outside 1..={MAX_VERTICES}")]
    Order(usize),
    #[error("shard depth {depth} must satisfy 1 <= depth < n = {n}")]
    Depth { n: usize, depth: usize },
    #[error("brute-force oracle is limited to n <= 7 (got {0})")]
    OracleTooLarge(usize),
    #[error("shard prefix {0:?} is not a valid graph6 string")]
    Prefix(String),
}

/// A subtree of the generation tree: the descendants on `n` vertices of one
/// node on `depth` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumShard {
    pub n: usize,
    pub depth: usize,
    /// Position of the shard in [`shard_enumeration`] order.
    pub index: usize,
    /// graph6 of the subtree root, in the labeling the generator produced.
    pub prefix: String,
}

impl EnumShard {
    /// Stable identifier used by checkpoints.
    pub fn id(&self) -> String {
        format!("{}:{}", self.index, self.prefix)
    }
}

fn check_order(n: usize) -> Result<(), EnumError> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(EnumError::Order(n));
    }
    if n > SOFT_MAX_ORDER {
        log::warn!("enumerating connected graphs on {n} vertices; expect a very long run");
    }
    Ok(())
}

/// Calls `consumer` once per isomorphism class of connected graphs on `n`
/// vertices and returns the number of classes.
pub fn enumerate_connected<F: FnMut(&Graph)>(n: usize, mut consumer: F) -> Result<u64, EnumError> {
    check_order(n)?;
    let root = Graph::empty(1).expect("K_1 is valid");
    Ok(extend(&root, &[], n, &mut consumer))
}

/// Splits the generation of order-`n` graphs into one shard per generation
/// node on `depth` vertices.
pub fn shard_enumeration(n: usize, depth: usize) -> Result<Vec<EnumShard>, EnumError> {
    check_order(n)?;
    if depth == 0 || depth >= n {
        return Err(EnumError::Depth { n, depth });
    }
    let root = Graph::empty(1).expect("K_1 is valid");
    let mut shards = Vec::new();
    extend(&root, &[], depth, &mut |g: &Graph| {
        shards.push(EnumShard {
            n,
            depth,
            index: shards.len(),
            prefix: graph6::encode(g),
        })
    });
    Ok(shards)
}

/// Runs the generation restricted to one shard's subtree.
pub fn enumerate_shard<F: FnMut(&Graph)>(shard: &EnumShard, mut consumer: F) -> Result<u64, EnumError> {
    check_order(shard.n)?;
    let root = graph6::decode(&shard.prefix).map_err(|_| EnumError::Prefix(shard.prefix.clone()))?;
    if root.order() != shard.depth || shard.depth >= shard.n || !root.is_connected() {
        return Err(EnumError::Prefix(shard.prefix.clone()));
    }
    let gens = canonical_labeling(&root).generators;
    Ok(extend(&root, &gens, shard.n, &mut consumer))
}

/// Emits all accepted descendants of `parent` on `n` vertices (or `parent`
/// itself when it already has `n` vertices).
fn extend<F: FnMut(&Graph)>(parent: &Graph, gens: &[Vec<usize>], n: usize, consumer: &mut F) -> u64 {
    let k = parent.order();
    if k == n {
        consumer(parent);
        return 1;
    }
    let mut count = 0;
    for s in subset_orbit_representatives(k, gens) {
        let child = parent.with_new_vertex(s);
        match accept(&child, k + 1 < n) {
            Verdict::Reject => {}
            Verdict::Accept(child_gens) => {
                count += extend(&child, &child_gens, n, consumer);
            }
        }
    }
    count
}

enum Verdict {
    Reject,
    /// Accepted; carries automorphism generators when they were requested.
    Accept(Vec<Vec<usize>>),
}

#[inline]
fn invariants(g: &Graph) -> [u32; MAX_VERTICES] {
    let rows = g.rows();
    let mut deg = [0u32; MAX_VERTICES];
    for (d, r) in deg.iter_mut().zip(rows) {
        *d = r.count_ones();
    }
    let mut inv = [0u32; MAX_VERTICES];
    for v in 0..g.order() {
        let s: u32 = BitIter(rows[v]).map(|u| deg[u]).sum();
        inv[v] = (deg[v] << 12) | s;
    }
    inv
}

/// Canonical-augmentation test for the last vertex of `child`.
fn accept(child: &Graph, need_group: bool) -> Verdict {
    let n = child.order();
    let v = n - 1;
    let inv = invariants(child);
    let mine = inv[v];
    // removing v leaves the connected parent, so v is never a cut vertex
    let mut tied = 1u64 << v;
    for (x, &ix) in inv.iter().enumerate().take(v) {
        if ix < mine {
            continue;
        }
        if !child.is_non_cut_vertex(x) {
            continue;
        }
        if ix > mine {
            return Verdict::Reject;
        }
        tied |= 1 << x;
    }
    if tied == 1 << v {
        let gens = if need_group {
            canonical_labeling(child).generators
        } else {
            Vec::new()
        };
        return Verdict::Accept(gens);
    }
    let lab = canonical_labeling(child);
    let pos = lab.positions();
    let chosen = BitIter(tied)
        .max_by_key(|&x| pos[x])
        .expect("tied set contains v");
    if lab.orbits[chosen] == lab.orbits[v] {
        Verdict::Accept(lab.generators)
    } else {
        Verdict::Reject
    }
}

/// One non-empty subset of `0..k` per orbit of the group generated by `gens`,
/// each the numerically smallest mask in its orbit.
fn subset_orbit_representatives(k: usize, gens: &[Vec<usize>]) -> Vec<u64> {
    let total = 1u64 << k;
    if gens.is_empty() {
        return (1..total).collect();
    }
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    for s in 1..total {
        if seen[s as usize] {
            continue;
        }
        reps.push(s);
        seen[s as usize] = true;
        stack.push(s);
        while let Some(t) = stack.pop() {
            for gen in gens {
                let img = BitIter(t).fold(0u64, |acc, x| acc | (1 << gen[x]));
                if !seen[img as usize] {
                    seen[img as usize] = true;
                    stack.push(img);
                }
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::canonical_form;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let expect = [1u64, 1, 2, 6, 21, 112, 853];
        for (i, &c) in expect.iter().enumerate() {
            assert_eq!(enumerate_connected(i + 1, |_| {}).unwrap(), c, "n={}", i + 1);
        }
    }

    #[test]
    fn emitted_graphs_are_connected_and_distinct() {
        for n in 1..=7 {
            let mut seen = HashSet::new();
            enumerate_connected(n, |g| {
                assert_eq!(g.order(), n);
                assert!(g.is_connected());
                assert!(seen.insert(canonical_form(g)));
            })
            .unwrap();
        }
    }

    #[test]
    fn subset_orbits_of_a_triangle() {
        let gens = vec![vec![1, 2, 0], vec![1, 0, 2]];
        assert_eq!(subset_orbit_representatives(3, &gens), vec![1, 3, 7]);
        assert_eq!(subset_orbit_representatives(2, &[]), vec![1, 2, 3]);
    }

    #[test]
    fn shard_errors() {
        assert!(matches!(shard_enumeration(5, 0), Err(EnumError::Depth { .. })));
        assert!(matches!(shard_enumeration(5, 5), Err(EnumError::Depth { .. })));
        assert!(enumerate_connected(0, |_| {}).is_err());
        let bad = EnumShard {
            n: 5,
            depth: 4,
            index: 0,
            prefix: "C?".into(),
        };
        assert!(enumerate_shard(&bad, |_| {}).is_err());
    }
}

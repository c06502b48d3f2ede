use std::collections::BTreeMap;

use crate::graph::Graph;

use super::{canonical_form, CanonicalGraph, EnumError};

/// Largest order the brute-force oracle accepts (2^21 labeled graphs).
pub const ORACLE_MAX_ORDER: usize = 7;

/// All isomorphism classes of connected graphs on `n` vertices, found by
/// scanning every labeled graph and deduplicating by canonical form. Sorted by
/// canonical string.
pub fn brute_force_connected(n: usize) -> Result<Vec<CanonicalGraph>, EnumError> {
    if n > ORACLE_MAX_ORDER {
        return Err(EnumError::OracleTooLarge(n));
    }
    if n == 0 {
        return Err(EnumError::Order(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = BTreeMap::new();
    let mut edges = Vec::with_capacity(pairs.len());
    for mask in 0u64..(1 << pairs.len()) {
        edges.clear();
        edges.extend(
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        );
        let g = Graph::from_edges(n, &edges).expect("pairs are in range");
        if !g.is_connected() {
            continue;
        }
        classes.entry(canonical_form(&g)).or_insert(g);
    }
    Ok(classes
        .into_iter()
        .map(|(canon, graph)| CanonicalGraph { graph, canon })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_orders() {
        assert_eq!(brute_force_connected(1).unwrap().len(), 1);
        assert_eq!(brute_force_connected(2).unwrap().len(), 1);
        let three = brute_force_connected(3).unwrap();
        assert_eq!(three.len(), 2);
        let sizes: Vec<usize> = three.iter().map(|c| c.graph.size()).collect();
        assert!(sizes.contains(&2) && sizes.contains(&3));
    }

    #[test]
    fn rejects_large_orders() {
        assert!(matches!(brute_force_connected(8), Err(EnumError::OracleTooLarge(8))));
    }
}

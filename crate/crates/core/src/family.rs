//! Parameterised graph families with fixed, documented labelings.
//!
//! Vertex 0 is always the distinguished vertex of the construction:
//!
//! | family                  | vertex 0                          |
//! |-------------------------|-----------------------------------|
//! | `CompleteMinusEdge(n)`  | endpoint of the missing edge (0,1)|
//! | `CompletePlusPendant(n)`| the pendant vertex, attached to 1 |
//! | `Star(n)`               | the centre of `K_{1,n}`           |
//! | `SubdividedStar(n,t)`   | the centre                        |
//! | `CliqueK2Gadget(n)`     | the clique vertex `y` seeing `u,v`|

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gadgets;
use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteMinusEdge,
    CompletePlusPendant,
    CliqueK2Gadget,
    SubdividedStar,
    Gadget,
}

/// A family member: the kind plus its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    /// `P_n`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{1,n}`: a centre and `n` leaves.
    Star(usize),
    /// `K_n` minus one edge, `n >= 3`.
    CompleteMinusEdge(usize),
    /// `K_{n-1}` with a pendant vertex, `n >= 3` (n vertices in total).
    CompletePlusPendant(usize),
    /// `K_{n-2}` plus an edge `uv` with both ends joined to one clique vertex, `n >= 5`.
    CliqueK2Gadget(usize),
    /// `K_{1,n}` with `t` of its edges subdivided once, `1 <= t <= n-1`.
    SubdividedStar { n: usize, t: usize },
    /// Table-1 gadget `H_i`, `1 <= i <= 17`.
    Gadget(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("invalid parameters for {0}")]
    Parameters(FamilySpec),
    #[error("{0} is not supported by this operation")]
    Unsupported(FamilySpec),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Complete(n) => write!(f, "K_{n}"),
            FamilySpec::Star(n) => write!(f, "K_1,{n}"),
            FamilySpec::CompleteMinusEdge(n) => write!(f, "K_{n}-e"),
            FamilySpec::CompletePlusPendant(n) => write!(f, "K_{}+pendant", n.saturating_sub(1)),
            FamilySpec::CliqueK2Gadget(n) => write!(f, "K_{}+K_2", n.saturating_sub(2)),
            FamilySpec::SubdividedStar { n, t } => write!(f, "S(K_1,{n};t={t})"),
            FamilySpec::Gadget(i) => write!(f, "H_{i}"),
        }
    }
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path(_) => FamilyKind::Path,
            FamilySpec::Cycle(_) => FamilyKind::Cycle,
            FamilySpec::Complete(_) => FamilyKind::Complete,
            FamilySpec::Star(_) => FamilyKind::Star,
            FamilySpec::CompleteMinusEdge(_) => FamilyKind::CompleteMinusEdge,
            FamilySpec::CompletePlusPendant(_) => FamilyKind::CompletePlusPendant,
            FamilySpec::CliqueK2Gadget(_) => FamilyKind::CliqueK2Gadget,
            FamilySpec::SubdividedStar { .. } => FamilyKind::SubdividedStar,
            FamilySpec::Gadget(_) => FamilyKind::Gadget,
        }
    }

    /// Number of vertices of the family member (no validation).
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::CompleteMinusEdge(n)
            | FamilySpec::CompletePlusPendant(n)
            | FamilySpec::CliqueK2Gadget(n) => n,
            FamilySpec::Star(n) => n + 1,
            FamilySpec::SubdividedStar { n, t } => n + t + 1,
            FamilySpec::Gadget(i) => gadgets::gadget_order(i).unwrap_or(0),
        }
    }

    /// A subdivided star with no subdivided edge is the plain star.
    pub fn normalized(self) -> FamilySpec {
        match self {
            FamilySpec::SubdividedStar { n, t: 0 } => FamilySpec::Star(n),
            other => other,
        }
    }

    /// Checks the family parameters only; closed forms have no order cap.
    pub fn validate_parameters(&self) -> Result<(), FamilyError> {
        let ok = match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Star(n) => n >= 1,
            FamilySpec::Cycle(n) | FamilySpec::CompleteMinusEdge(n) => n >= 3,
            FamilySpec::CompletePlusPendant(n) => n >= 3,
            FamilySpec::CliqueK2Gadget(n) => n >= 5,
            FamilySpec::SubdividedStar { n, t } => t >= 1 && t < n,
            FamilySpec::Gadget(i) => (1..=17).contains(&i),
        };
        if !ok {
            return Err(FamilyError::Parameters(*self));
        }
        Ok(())
    }

    /// Checks the parameters and that the graph fits the bitset representation.
    pub fn validate(&self) -> Result<(), FamilyError> {
        self.validate_parameters()?;
        if self.order() > MAX_VERTICES {
            return Err(GraphError::VertexCount(self.order()).into());
        }
        Ok(())
    }
}

/// Builds the family member with the labeling documented at module level.
pub fn build_family(spec: FamilySpec) -> Result<Graph, FamilyError> {
    let spec = spec.normalized();
    spec.validate()?;
    let order = spec.order();
    let g = match spec {
        FamilySpec::Path(n) => Graph::path(n)?,
        FamilySpec::Complete(n) => Graph::complete(n)?,
        FamilySpec::Cycle(n) => {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)?
        }
        FamilySpec::Star(n) => {
            let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
            Graph::from_edges(order, &edges)?
        }
        FamilySpec::CompleteMinusEdge(n) => {
            let mut edges = clique_edges(0..n);
            edges.retain(|&e| e != (0, 1));
            Graph::from_edges(n, &edges)?
        }
        FamilySpec::CompletePlusPendant(n) => {
            let mut edges = clique_edges(1..n);
            edges.push((0, 1));
            Graph::from_edges(n, &edges)?
        }
        FamilySpec::CliqueK2Gadget(n) => {
            // clique on {0} ∪ {3..n}; u = 1, v = 2 adjacent to each other and to y = 0
            let mut edges = clique_edges(std::iter::once(0).chain(3..n));
            edges.extend([(1, 2), (0, 1), (0, 2)]);
            Graph::from_edges(n, &edges)?
        }
        FamilySpec::SubdividedStar { n, t } => {
            // 1..=t subdivision vertices, t+1..=2t their far ends, 2t+1..=n+t intact leaves
            let mut edges = Vec::with_capacity(n + t);
            for i in 1..=t {
                edges.push((0, i));
                edges.push((i, t + i));
            }
            for leaf in 2 * t + 1..=n + t {
                edges.push((0, leaf));
            }
            Graph::from_edges(order, &edges)?
        }
        FamilySpec::Gadget(i) => gadgets::gadget(i).expect("validated index"),
    };
    debug_assert!(g.is_well_formed());
    debug_assert_eq!(g.order(), order);
    Ok(g)
}

fn clique_edges<I: IntoIterator<Item = usize>>(verts: I) -> Vec<(usize, usize)> {
    let v: Vec<usize> = verts.into_iter().collect();
    let mut out = Vec::new();
    for (a, &x) in v.iter().enumerate() {
        for &y in &v[a + 1..] {
            out.push((x, y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts_match_closed_forms() {
        for n in 1..=20 {
            assert_eq!(
                build_family(FamilySpec::Complete(n)).unwrap().size(),
                n * (n - 1) / 2
            );
        }
        for n in 3..=20 {
            let g = build_family(FamilySpec::CompleteMinusEdge(n)).unwrap();
            assert_eq!(g.size(), n * (n - 1) / 2 - 1);
            assert!(!g.has_edge(0, 1));
            let g = build_family(FamilySpec::CompletePlusPendant(n)).unwrap();
            assert_eq!(g.size(), (n - 1) * (n - 2) / 2 + 1);
            assert_eq!(g.degree(0), 1);
        }
        for n in 5..=20 {
            let g = build_family(FamilySpec::CliqueK2Gadget(n)).unwrap();
            assert_eq!(g.size(), (n - 2) * (n - 3) / 2 + 3);
            assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 2));
            assert_eq!(g.degree(1), 2);
        }
        for n in 2..=12 {
            for t in 1..n {
                let g = build_family(FamilySpec::SubdividedStar { n, t }).unwrap();
                assert_eq!((g.order(), g.size()), (n + t + 1, n + t));
                assert_eq!(g.degree(0), n);
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn small_members() {
        let k4 = build_family(FamilySpec::Complete(4)).unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
        let s = build_family(FamilySpec::SubdividedStar { n: 3, t: 2 }).unwrap();
        assert_eq!((s.order(), s.size()), (6, 5));
        let star = build_family(FamilySpec::Star(3)).unwrap();
        assert_eq!((star.order(), star.size(), star.degree(0)), (4, 3, 3));
        let c5 = build_family(FamilySpec::Cycle(5)).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));
    }

    #[test]
    fn rejects_invalid_parameters() {
        for spec in [
            FamilySpec::Path(0),
            FamilySpec::Cycle(2),
            FamilySpec::CompleteMinusEdge(2),
            FamilySpec::CompletePlusPendant(2),
            FamilySpec::CliqueK2Gadget(4),
            FamilySpec::SubdividedStar { n: 0, t: 0 },
            FamilySpec::SubdividedStar { n: 3, t: 3 },
            FamilySpec::Gadget(0),
            FamilySpec::Gadget(18),
        ] {
            assert_eq!(build_family(spec), Err(FamilyError::Parameters(spec.normalized())));
        }
        assert!(matches!(
            build_family(FamilySpec::Complete(63)),
            Err(FamilyError::Graph(GraphError::VertexCount(63)))
        ));
    }
}

use serde::Serialize;

use super::{clique_number, count_cliques_in};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeWitness {
    pub edge: (VertexId, VertexId),
    /// Number of ω-cliques through the edge (0 or at least 2).
    pub cliques: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub regular: bool,
    /// First offending edge in lexicographic order; absent when the graph
    /// is regular or has no edges.
    pub counterexample: Option<EdgeWitness>,
}

/// Number of ω-cliques containing the edge `uv`, counting at most `cap`.
pub fn cliques_through_edge(
    g: &Graph,
    u: VertexId,
    v: VertexId,
    omega: usize,
    cap: usize,
) -> usize {
    debug_assert!(g.has_edge(u, v) && omega >= 2);
    let mut common = g.neighbors(u).clone();
    common.intersect_with(g.neighbors(v));
    count_cliques_in(g, &common, omega - 2, cap)
}

/// Whether the edge set is nonempty and every edge lies in exactly one
/// ω-clique.
pub fn is_clique_regular(g: &Graph, omega: usize) -> Result<Regularity> {
    if omega < 2 {
        return Err(Error::invalid("clique regularity needs omega >= 2"));
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Ok(Regularity {
            regular: false,
            counterexample: None,
        });
    }
    for &(u, v) in &edges {
        if cliques_through_edge(g, u, v, omega, 2) != 1 {
            return Ok(Regularity {
                regular: false,
                counterexample: Some(EdgeWitness {
                    edge: (u, v),
                    cliques: cliques_through_edge(g, u, v, omega, usize::MAX),
                }),
            });
        }
    }
    Ok(Regularity {
        regular: true,
        counterexample: None,
    })
}

/// All ω ≥ 2 for which `g` is ω-clique regular. Always a subset of
/// `{2, ω(g)}`.
pub fn clique_regular_orders(g: &Graph) -> Vec<usize> {
    let top = clique_number(g);
    let orders: Vec<usize> = (2..=top)
        .filter(|&w| is_clique_regular(g, w).map(|r| r.regular).unwrap_or(false))
        .collect();
    assert!(
        orders.iter().all(|&w| w == 2 || w == top),
        "clique-regular order outside {{2, ω}}: {orders:?}"
    );
    orders
}

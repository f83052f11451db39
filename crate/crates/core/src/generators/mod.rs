//! Deterministic constructions of the graph families under study.
//!
//! Vertex numbering is part of each generator's contract, so graph6 output
//! is reproducible:
//! - rook: cell `(r, c)` is `r·n + c`;
//! - triangular: edges `{i, j}` of `K_n` in lexicographic order;
//! - OA block graph: row `(a, b)` is `a·n + b`;
//! - GQ collinearity: points in the order documented in [`gq`];
//! - Golay coset graph: the syndrome `Σ sᵢxⁱ` is `Σ sᵢ3ⁱ`.

mod golay;
pub mod gq;
mod oa;

pub use golay::{golay_coset_graph, GOLAY_GENERATOR};
pub use gq::{gq_collinearity_graph, gq_dual, gq_elliptic, gq_symplectic, IncidenceStructure};
pub use oa::{oa_block_graph, orthogonal_array, OrthogonalArray};

use crate::clique::build_line_graph;
use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph};
use crate::srg::{classify_srg, SrgParams};

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn expect_srg(g: &Graph, want: SrgParams, family: &str) -> Result<()> {
    match classify_srg(g) {
        Some(c) if c.params == want => Ok(()),
        got => Err(Error::TheoremViolation(format!(
            "{family} is not srg{want}: got {:?}",
            got.map(|c| c.params)
        ))),
    }
}

/// `n × n` rook's graph: srg(n², 2(n−1), n−2, 2).
pub fn rook_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid("rook graph needs n >= 2"));
    }
    let g = Graph::from_fn(n * n, |a, b| a / n == b / n || a % n == b % n);
    let n64 = n as u64;
    expect_srg(
        &g,
        SrgParams {
            n: n64 * n64,
            k: 2 * (n64 - 1),
            lambda: n64 - 2,
            mu: 2,
        },
        "rook graph",
    )?;
    Ok(g)
}

/// `T_n = L(K_n)`: srg(n(n−1)/2, 2(n−2), n−2, 4) for n ≥ 4.
pub fn triangular_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("triangular graph needs n >= 3"));
    }
    let g = build_line_graph(&complete_graph(n)).clique_graph;
    if n >= 4 {
        let n64 = n as u64;
        expect_srg(
            &g,
            SrgParams {
                n: n64 * (n64 - 1) / 2,
                k: 2 * (n64 - 2),
                lambda: n64 - 2,
                mu: 4,
            },
            "triangular graph",
        )?;
    }
    Ok(g)
}

//! The standard corpus: named members of every generated family together
//! with the clique order each is known to be clique regular for.

use crate::error::Result;
use crate::generators::{
    golay_coset_graph, gq_collinearity_graph, gq_dual, gq_elliptic, gq_symplectic, oa_block_graph,
    orthogonal_array, rook_graph, triangular_graph,
};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
    pub omega: usize,
}

fn entry(name: impl Into<String>, graph: Graph, omega: usize) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        graph,
        omega,
    }
}

/// Rook 3–6, T₅–T₈, the OA(5,3) block graph, the GQ(2,2), GQ(3,3), GQ(2,4)
/// and GQ(4,2) collinearity graphs, and the Golay coset graph.
pub fn standard_corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in 3..=6 {
        out.push(entry(format!("rook-{n}"), rook_graph(n)?, n));
    }
    for n in 5..=8 {
        out.push(entry(
            format!("triangular-{n}"),
            triangular_graph(n)?,
            n - 1,
        ));
    }
    out.push(entry(
        "oa-block-5-3",
        oa_block_graph(&orthogonal_array(5, 3)?),
        5,
    ));
    let w2 = gq_symplectic(2)?;
    out.push(entry("gq-2-2", gq_collinearity_graph(&w2)?, 3));
    out.push(entry(
        "gq-3-3",
        gq_collinearity_graph(&gq_symplectic(3)?)?,
        4,
    ));
    let e2 = gq_elliptic(2)?;
    out.push(entry("gq-2-4", gq_collinearity_graph(&e2)?, 3));
    out.push(entry("gq-4-2", gq_collinearity_graph(&gq_dual(&e2)?)?, 5));
    out.push(entry("golay", golay_coset_graph(), 3));
    Ok(out)
}

/// Corpus members with at most `max_n` vertices.
pub fn corpus_up_to(max_n: usize) -> Result<Vec<CorpusEntry>> {
    Ok(standard_corpus()?
        .into_iter()
        .filter(|e| e.graph.n() <= max_n)
        .collect())
}

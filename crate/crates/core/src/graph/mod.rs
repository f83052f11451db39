//! Dense undirected simple graphs over `0..n`.
//!
//! Adjacency rows are fixed-width bitsets. A [`Graph`] is immutable once
//! built; every constructor goes through [`Graph::from_rows`] or
//! [`Graph::new`], which check symmetry and loop-freeness.

mod graph6;
mod iso;

pub use graph6::{parse_graph6, write_graph6};
pub use iso::{
    are_isomorphic, are_isomorphic_with_budget, complete_multipartite_parts, is_witness, IsoOptions,
};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// Vertex index, valid only relative to the graph it came from.
pub type VertexId = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeInfo {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub is_regular: bool,
    /// The common degree when the graph is regular.
    pub k: Option<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge(u, v, n));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    /// Builds a graph from prepared adjacency rows, checking the invariants.
    pub fn from_rows(rows: Vec<FixedBitSet>) -> Result<Self> {
        let n = rows.len();
        for (v, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row {v} has width {} != {n}",
                    row.len()
                )));
            }
            if row.contains(v) {
                return Err(Error::InvalidEdge(v, v, n));
            }
            for u in row.ones() {
                if !rows[u].contains(v) {
                    return Err(Error::invalid(format!(
                        "asymmetric adjacency at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Builds a graph from a symmetric predicate evaluated on `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(VertexId, VertexId) -> bool) -> Self {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in (i + 1)..n {
                if adjacent(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: VertexId) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_info(&self) -> DegreeInfo {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let is_regular = degrees.windows(2).all(|w| w[0] == w[1]);
        let k = is_regular.then(|| degrees.first().copied().unwrap_or(0));
        DegreeInfo {
            degrees,
            max_degree,
            is_regular,
            k,
        }
    }

    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Result<FixedBitSet> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "vertex out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(
                "common_neighbors needs two distinct vertices",
            ));
        }
        let mut s = self.adj[u].clone();
        s.intersect_with(&self.adj[v]);
        Ok(s)
    }

    pub fn common_neighbor_count(&self, u: VertexId, v: VertexId) -> usize {
        self.adj[u].intersection_count(&self.adj[v])
    }

    pub fn complement(&self) -> Graph {
        let rows = (0..self.n)
            .map(|v| {
                let mut r = self.adj[v].clone();
                r.toggle_range(..);
                r.set(v, false);
                r
            })
            .collect();
        Graph {
            n: self.n,
            adj: rows,
        }
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length mismatch"));
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        for &p in perm {
            if p >= self.n || seen.put(p) {
                return Err(Error::invalid("not a permutation"));
            }
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n, &edges)
    }

    /// Induced subgraph on `vertices`, relabeled `0..len` in the given order.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.put(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.adj[v].ones() {
                    if !seen.put(u) {
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix<T: crate::Ring>(&self) -> Vec<Vec<T>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        if self.has_edge(i, j) {
                            T::one()
                        } else {
                            T::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Disjoint union, `self` first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, &edges).expect("valid by construction")
    }
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b]).expect("two parts")
}

/// Parts occupy consecutive vertex ranges in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.contains(&0) {
        return Err(Error::invalid("part sizes must be positive"));
    }
    let part_of: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| std::iter::repeat_n(i, p))
        .collect();
    Ok(Graph::from_fn(part_of.len(), |i, j| {
        part_of[i] != part_of[j]
    }))
}

pub fn cycle_graph(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| n >= 3 && (j == i + 1 || (i == 0 && j == n - 1)))
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1)
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star_graph(leaves: usize) -> Graph {
    Graph::from_fn(leaves + 1, |i, _| i == 0)
}

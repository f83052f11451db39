//! Clique enumeration, ω-clique regularity and clique graphs.

mod build;
pub mod line;
mod regular;

pub use build::{
    build_clique_graph, build_line_graph, phi_block_sums, verify_incidence_identities,
    verify_phi_identity, CliqueGraphResult, IncidenceMatrix,
};
pub use regular::{
    clique_regular_orders, cliques_through_edge, is_clique_regular, EdgeWitness, Regularity,
};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A clique in canonical form: strictly increasing vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Clique(Vec<VertexId>);

impl Clique {
    /// Sorts and checks the vertices against `g`.
    pub fn new(g: &Graph, mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        for (i, &u) in vertices.iter().enumerate() {
            if u >= g.n() {
                return Err(Error::invalid(format!("vertex {u} out of range")));
            }
            if let Some(&v) = vertices[i + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                return Err(Error::invalid(format!("{u} and {v} are not adjacent")));
            }
        }
        Ok(Clique(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Edges inside the clique, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(i, &u)| self.0[i + 1..].iter().map(move |&v| (u, v)))
    }
}

/// All maximal cliques, each sorted, the list in lexicographic order.
pub fn enumerate_maximal_cliques(g: &Graph) -> Vec<Clique> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    bron_kerbosch(g, &mut Vec::new(), p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out.into_iter().map(Clique).collect()
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<VertexId>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<VertexId>>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximizing |P ∩ N(u)|
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (p.intersection_count(g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let mut candidates = p.clone();
    candidates.difference_with(g.neighbors(pivot));
    for v in candidates.ones() {
        let mut np = p.clone();
        np.intersect_with(g.neighbors(v));
        let mut nx = x.clone();
        nx.intersect_with(g.neighbors(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// All cliques of exactly `omega` vertices, lexicographic. Cliques are
/// grown directly rather than filtered from maximal cliques, since an
/// ω-clique need not be maximal.
pub fn enumerate_cliques_of_order(g: &Graph, omega: usize) -> Result<Vec<Clique>> {
    if omega == 0 {
        return Err(Error::invalid("clique order must be at least 1"));
    }
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(omega);
    grow(g, &mut current, &all, omega, &mut |c| {
        out.push(Clique(c.to_vec()))
    });
    Ok(out)
}

/// Calls `visit` on every `need`-subset of `cand` (each appended to
/// `current`) that is a clique, in lexicographic order.
pub(crate) fn grow(
    g: &Graph,
    current: &mut Vec<VertexId>,
    cand: &FixedBitSet,
    need: usize,
    visit: &mut dyn FnMut(&[VertexId]),
) {
    if need == 0 {
        visit(current);
        return;
    }
    let mut remaining = cand.count_ones(..);
    for v in cand.ones() {
        if remaining < need {
            break;
        }
        remaining -= 1;
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(v));
        next.remove_range(..v + 1);
        if need == 1 || next.count_ones(..) >= need - 1 {
            current.push(v);
            grow(g, current, &next, need - 1, visit);
            current.pop();
        }
    }
}

/// Number of `need`-cliques inside `cand`, stopping once `cap` is reached.
pub(crate) fn count_cliques_in(g: &Graph, cand: &FixedBitSet, need: usize, cap: usize) -> usize {
    fn rec(g: &Graph, cand: &FixedBitSet, need: usize, cap: usize, acc: &mut usize) {
        if need == 0 {
            *acc += 1;
            return;
        }
        for v in cand.ones() {
            if *acc >= cap {
                return;
            }
            let mut next = cand.clone();
            next.intersect_with(g.neighbors(v));
            next.remove_range(..v + 1);
            if next.count_ones(..) + 1 >= need {
                rec(g, &next, need - 1, cap, acc);
            }
        }
    }
    let mut acc = 0;
    rec(g, cand, need, cap, &mut acc);
    acc
}

/// ω(Γ): 0 for the empty graph, 1 for a nonempty edgeless graph.
pub fn clique_number(g: &Graph) -> usize {
    enumerate_maximal_cliques(g)
        .iter()
        .map(Clique::order)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    fn rook3() -> Graph {
        Graph::from_fn(9, |a, b| a / 3 == b / 3 || a % 3 == b % 3)
    }

    /// Brute force over all vertex subsets.
    fn subset_cliques(g: &Graph) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = g.n();
        let is_clique = |mask: u32| {
            (0..n).all(|i| {
                mask & (1 << i) == 0 || (i + 1..n).all(|j| mask & (1 << j) == 0 || g.has_edge(i, j))
            })
        };
        let members = |mask: u32| (0..n).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>();
        let mut all = Vec::new();
        let mut maximal = Vec::new();
        for mask in 1u32..(1 << n) {
            if !is_clique(mask) {
                continue;
            }
            all.push(members(mask));
            if (0..n).all(|v| mask & (1 << v) != 0 || !is_clique(mask | (1 << v))) {
                maximal.push(members(mask));
            }
        }
        all.sort();
        maximal.sort();
        (all, maximal)
    }

    #[test]
    fn maximal_examples() {
        let k4 = enumerate_maximal_cliques(&complete_graph(4));
        assert_eq!(k4.len(), 1);
        assert_eq!(k4[0].vertices(), &[0, 1, 2, 3]);

        let c5 = enumerate_maximal_cliques(&cycle_graph(5));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|c| c.order() == 2));
    }

    #[test]
    fn rook3_matches_subset_scan() {
        let g = rook3();
        let (_, maximal) = subset_cliques(&g);
        assert_eq!(maximal.len(), 6);
        assert!(maximal.iter().all(|c| c.len() == 3));
        let ours: Vec<Vec<usize>> = enumerate_maximal_cliques(&g)
            .into_iter()
            .map(|c| c.0)
            .collect();
        assert_eq!(ours, maximal);
    }

    #[test]
    fn order_enumeration_matches_subset_scan() {
        let g = Graph::new(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (1, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (4, 6),
                (0, 3),
            ],
        )
        .unwrap();
        let (all, maximal) = subset_cliques(&g);
        for w in 1..=5 {
            let want: Vec<_> = all.iter().filter(|c| c.len() == w).cloned().collect();
            let got: Vec<_> = enumerate_cliques_of_order(&g, w)
                .unwrap()
                .into_iter()
                .map(|c| c.0)
                .collect();
            assert_eq!(got, want, "order {w}");
        }
        let got: Vec<_> = enumerate_maximal_cliques(&g)
            .into_iter()
            .map(|c| c.0)
            .collect();
        assert_eq!(got, maximal);
    }

    #[test]
    fn k4_triangles() {
        assert_eq!(
            enumerate_cliques_of_order(&complete_graph(4), 3)
                .unwrap()
                .len(),
            4
        );
        assert!(enumerate_cliques_of_order(&complete_graph(4), 5)
            .unwrap()
            .is_empty());
        assert!(enumerate_cliques_of_order(&complete_graph(4), 0).is_err());
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&complete_graph(7)), 7);
        assert_eq!(clique_number(&cycle_graph(5)), 2);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        assert_eq!(clique_number(&Graph::empty(4)), 1);
    }

    #[test]
    fn clique_new_checks() {
        let g = cycle_graph(5);
        assert_eq!(Clique::new(&g, vec![1, 0]).unwrap().vertices(), &[0, 1]);
        assert!(Clique::new(&g, vec![0, 2]).is_err());
        assert!(Clique::new(&g, vec![0, 9]).is_err());
    }

    #[test]
    fn count_with_cap() {
        let k6 = complete_graph(6);
        let mut all = FixedBitSet::with_capacity(6);
        all.insert_range(..);
        assert_eq!(count_cliques_in(&k6, &all, 3, usize::MAX), 20);
        assert_eq!(count_cliques_in(&k6, &all, 3, 2), 2);
        assert_eq!(count_cliques_in(&k6, &all, 0, 5), 1);
    }
}

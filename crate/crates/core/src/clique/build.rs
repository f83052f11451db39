use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{enumerate_cliques_of_order, is_clique_regular, Clique};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scalar::binomial;

/// Vertex-by-clique 0/1 matrix `R`, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IncidenceMatrix {
    rows: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn get(&self, v: VertexId, c: usize) -> u8 {
        self.rows[v][c]
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

#[derive(Debug, Clone)]
pub struct CliqueGraphResult {
    pub omega: usize,
    /// Lexicographic; index `i` is vertex `i` of `clique_graph`.
    pub cliques: Vec<Clique>,
    pub clique_graph: Graph,
    pub incidence: IncidenceMatrix,
}

impl CliqueGraphResult {
    pub fn m(&self) -> usize {
        self.cliques.len()
    }
}

/// C_ω(G). A graph without ω-cliques yields the empty clique graph.
pub fn build_clique_graph(g: &Graph, omega: usize) -> Result<CliqueGraphResult> {
    if omega < 2 {
        return Err(Error::invalid("clique graphs need omega >= 2"));
    }
    let cliques = enumerate_cliques_of_order(g, omega)?;
    let m = cliques.len();

    let mut through: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut rows = vec![vec![0u8; m]; g.n()];
    for (j, c) in cliques.iter().enumerate() {
        for &v in c.vertices() {
            through[v].push(j);
            rows[v][j] = 1;
        }
    }

    let mut edges = Vec::new();
    for list in &through {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                edges.push((i, j));
            }
        }
    }
    let clique_graph = Graph::new(m, &edges)?;

    Ok(CliqueGraphResult {
        omega,
        cliques,
        clique_graph,
        incidence: IncidenceMatrix { rows },
    })
}

/// L(G) = C_2(G): vertices are the edges of `g` in lexicographic order.
pub fn build_line_graph(g: &Graph) -> CliqueGraphResult {
    build_clique_graph(g, 2).expect("omega = 2 is always valid")
}

fn require_regular(g: &Graph, omega: usize) -> Result<()> {
    if is_clique_regular(g, omega)?.regular {
        Ok(())
    } else {
        Err(Error::NotCliqueRegular { omega })
    }
}

/// Checks `RᵀR = A_C + ωI` and `(ω−1)RRᵀ = (ω−1)A + D` entrywise.
pub fn verify_incidence_identities(g: &Graph, omega: usize) -> Result<bool> {
    require_regular(g, omega)?;
    let cg = build_clique_graph(g, omega)?;
    let r = cg.incidence.rows();
    let (n, m) = (g.n(), cg.m());
    let w = omega as i64;

    for i in 0..m {
        for j in 0..m {
            let rtr: i64 = (0..n).map(|v| i64::from(r[v][i] * r[v][j])).sum();
            let rhs = i64::from(cg.clique_graph.has_edge(i, j)) + if i == j { w } else { 0 };
            if rtr != rhs {
                return Ok(false);
            }
        }
    }
    for u in 0..n {
        for v in 0..n {
            let rrt: i64 = (0..m).map(|c| i64::from(r[u][c] * r[v][c])).sum();
            let deg = if u == v { g.degree(u) as i64 } else { 0 };
            if (w - 1) * rrt != (w - 1) * i64::from(g.has_edge(u, v)) + deg {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Edges of `g` grouped by the ω-clique containing them, cliques in
/// canonical order and edges lexicographic within each block.
fn edges_by_clique(cliques: &[Clique]) -> Vec<(VertexId, VertexId)> {
    cliques.iter().flat_map(Clique::edges).collect()
}

/// Sum of the entries of each block `S_ij` of `A_L` under the clique-grouped
/// edge order.
pub fn phi_block_sums(g: &Graph, omega: usize) -> Result<Vec<Vec<i64>>> {
    require_regular(g, omega)?;
    let cg = build_clique_graph(g, omega)?;
    let block = binomial(omega as u64, 2) as usize;
    let order = edges_by_clique(&cg.cliques);
    let m = cg.m();
    let mut sums = vec![vec![0i64; m]; m];
    for (a, &(u1, v1)) in order.iter().enumerate() {
        for (b, &(u2, v2)) in order.iter().enumerate() {
            let share = a != b && (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2);
            if share {
                sums[a / block][b / block] += 1;
            }
        }
    }
    Ok(sums)
}

/// Checks `vᵀÃv = φ(v)ᵀ A_L φ(v)` with `Ã = 6·C(ω,3)·I + (ω−1)²·A_C`: once as
/// a block-sum comparison (covering every basis vector and pair), then on
/// `trials` random integer vectors evaluated through the line graph itself.
pub fn verify_phi_identity(g: &Graph, omega: usize, trials: usize) -> Result<bool> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    require_regular(g, omega)?;
    let cg = build_clique_graph(g, omega)?;
    let m = cg.m();
    let w = omega as i64;
    let diag = 6 * binomial(omega as u64, 3) as i64;
    let off = (w - 1) * (w - 1);
    let tilde = |i: usize, j: usize| -> i64 {
        if i == j {
            diag
        } else if cg.clique_graph.has_edge(i, j) {
            off
        } else {
            0
        }
    };

    let sums = phi_block_sums(g, omega)?;
    for i in 0..m {
        for j in 0..m {
            if sums[i][j] != tilde(i, j) {
                return Ok(false);
            }
        }
    }

    // A_L in the grouped order, from edge incidences directly.
    let order = edges_by_clique(&cg.cliques);
    let e = order.len();
    let line = Graph::from_fn(e, |a, b| {
        let (u1, v1) = order[a];
        let (u2, v2) = order[b];
        u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2
    });
    let block = binomial(omega as u64, 2) as usize;
    debug_assert_eq!(e, m * block);

    let mut rng = ChaCha8Rng::seed_from_u64(0x0c11_9e57);
    for _ in 0..trials {
        let v: Vec<i128> = (0..m).map(|_| rng.gen_range(-50..=50)).collect();
        let lhs: i128 = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|(i, j)| v[i] * i128::from(tilde(i, j)) * v[j])
            .sum();
        let phi: Vec<i128> = (0..e).map(|a| v[a / block]).collect();
        let rhs: i128 = line.edges().iter().map(|&(a, b)| 2 * phi[a] * phi[b]).sum();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        are_isomorphic, complete_bipartite, complete_graph, cycle_graph, star_graph,
    };

    fn rook(n: usize) -> Graph {
        Graph::from_fn(n * n, |a, b| a / n == b / n || a % n == b % n)
    }

    #[test]
    fn k3_clique_graph_is_single_vertex() {
        let cg = build_clique_graph(&complete_graph(3), 3).unwrap();
        assert_eq!(cg.m(), 1);
        assert_eq!(cg.clique_graph.edge_count(), 0);
    }

    #[test]
    fn rook5_gives_k55() {
        let cg = build_clique_graph(&rook(5), 5).unwrap();
        assert_eq!(cg.m(), 10);
        assert!(are_isomorphic(&cg.clique_graph, &complete_bipartite(5, 5))
            .unwrap()
            .is_some());
        for (j, c) in cg.cliques.iter().enumerate() {
            let ones: Vec<usize> = (0..25).filter(|&v| cg.incidence.get(v, j) == 1).collect();
            assert_eq!(ones, c.vertices());
        }
    }

    #[test]
    fn no_cliques_gives_empty_graph() {
        let cg = build_clique_graph(&cycle_graph(6), 3).unwrap();
        assert_eq!(cg.m(), 0);
        assert_eq!(cg.clique_graph.n(), 0);
        assert_eq!(cg.incidence.n_rows(), 6);
    }

    #[test]
    fn line_graph_examples() {
        for w in 3..6 {
            let l = build_line_graph(&star_graph(w)).clique_graph;
            assert!(are_isomorphic(&l, &complete_graph(w)).unwrap().is_some());
        }
        let l3 = build_line_graph(&complete_graph(3)).clique_graph;
        assert!(are_isomorphic(&l3, &complete_graph(3)).unwrap().is_some());
        let l5 = build_line_graph(&cycle_graph(5)).clique_graph;
        assert!(are_isomorphic(&l5, &cycle_graph(5)).unwrap().is_some());
    }

    #[test]
    fn incidence_identities_rook() {
        assert!(verify_incidence_identities(&rook(5), 5).unwrap());
        assert!(verify_incidence_identities(&rook(3), 3).unwrap());
        assert!(matches!(
            verify_incidence_identities(&complete_graph(4), 3),
            Err(Error::NotCliqueRegular { omega: 3 })
        ));
    }

    #[test]
    fn phi_identity_rook3() {
        assert!(verify_phi_identity(&rook(3), 3, 20).unwrap());
        let sums = phi_block_sums(&rook(3), 3).unwrap();
        // 6·C(3,3) on the diagonal, (ω−1)² = 4 between meeting cliques
        for i in 0..6 {
            assert_eq!(sums[i][i], 6);
        }
        let values: std::collections::BTreeSet<i64> = sums.iter().flatten().copied().collect();
        assert_eq!(values, [0, 4, 6].into_iter().collect());
        assert!(verify_phi_identity(&rook(3), 3, 0).is_err());
    }

    #[test]
    fn phi_identity_k5_omega_4_blocks() {
        let t5 = build_line_graph(&complete_graph(5)).clique_graph;
        let sums = phi_block_sums(&t5, 4).unwrap();
        assert!(sums.iter().enumerate().all(|(i, r)| r[i] == 24));
        assert!(sums
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, &x)| i == j || x == 9)));
        assert!(verify_phi_identity(&t5, 4, 5).unwrap());
    }
}

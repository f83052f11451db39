//! Isomorphism testing by individualization and refinement.
//!
//! Both graphs are colored jointly: each refinement round recolors every
//! vertex by its old color plus the multiset of neighbor colors, with color
//! ids drawn from one shared sorted key space. Class sizes must agree
//! between the graphs after every round. When refinement stalls, one vertex
//! of the smallest non-singleton class in `g` is individualized against each
//! candidate of the same class in `h`.

use std::collections::BTreeMap;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct IsoOptions {
    /// Maximum number of search nodes before giving up with a
    /// resource-limit error.
    pub node_budget: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            node_budget: 2_000_000,
        }
    }
}

/// Returns a witness `perm` with `g.has_edge(u, v) == h.has_edge(perm[u], perm[v])`
/// when the graphs are isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<VertexId>>> {
    are_isomorphic_with_budget(g, h, IsoOptions::default())
}

pub fn are_isomorphic_with_budget(
    g: &Graph,
    h: &Graph,
    opts: IsoOptions,
) -> Result<Option<Vec<VertexId>>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut dg = g.degree_info().degrees;
    let mut dh = h.degree_info().degrees;
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(None);
    }

    match (multipartite_parts(g), multipartite_parts(h)) {
        (Some(pg), Some(ph)) => return Ok(match_parts(pg, ph)),
        (Some(_), None) | (None, Some(_)) => return Ok(None),
        (None, None) => {}
    }

    let mut search = Search {
        g,
        h,
        nodes: 0,
        budget: opts.node_budget,
    };
    let witness = search.run(vec![0; g.n()], vec![0; h.n()])?;
    if let Some(perm) = &witness {
        assert!(is_witness(g, h, perm), "search produced an invalid witness");
    }
    Ok(witness)
}

/// Checks that `perm` maps the edges of `g` onto the edges of `h`.
pub fn is_witness(g: &Graph, h: &Graph, perm: &[VertexId]) -> bool {
    perm.len() == g.n()
        && g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && g.edges().iter().all(|&(u, v)| h.has_edge(perm[u], perm[v]))
}

/// Sorted part sizes when `g` is complete multipartite (including the
/// one-part edgeless case), i.e. when its complement is a disjoint union of
/// cliques.
pub fn complete_multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    multipartite_parts(g).map(|parts| {
        let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    })
}

fn multipartite_parts(g: &Graph) -> Option<Vec<Vec<VertexId>>> {
    let comp = g.complement();
    let parts = comp.components();
    for part in &parts {
        for (i, &u) in part.iter().enumerate() {
            if part[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                return None;
            }
        }
    }
    Some(parts)
}

fn match_parts(mut pg: Vec<Vec<VertexId>>, mut ph: Vec<Vec<VertexId>>) -> Option<Vec<VertexId>> {
    if pg.len() != ph.len() {
        return None;
    }
    pg.sort_by_key(Vec::len);
    ph.sort_by_key(Vec::len);
    let n: usize = pg.iter().map(Vec::len).sum();
    let mut perm = vec![0; n];
    for (a, b) in pg.iter().zip(&ph) {
        if a.len() != b.len() {
            return None;
        }
        for (&u, &v) in a.iter().zip(b) {
            perm[u] = v;
        }
    }
    Some(perm)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, mut cg: Vec<u32>, mut ch: Vec<u32>) -> Result<Option<Vec<VertexId>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit(format!(
                "isomorphism search exceeded {} nodes",
                self.budget
            )));
        }
        let Some(num_colors) = refine(self.g, self.h, &mut cg, &mut ch) else {
            return Ok(None);
        };

        let mut sizes = vec![0usize; num_colors];
        for &c in &cg {
            sizes[c as usize] += 1;
        }
        let target = (0..num_colors)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c));

        let Some(target) = target else {
            let mut by_color = vec![0; num_colors];
            for (w, &c) in ch.iter().enumerate() {
                by_color[c as usize] = w;
            }
            let perm: Vec<VertexId> = cg.iter().map(|&c| by_color[c as usize]).collect();
            return Ok(is_witness(self.g, self.h, &perm).then_some(perm));
        };

        let v = cg
            .iter()
            .position(|&c| c as usize == target)
            .expect("nonempty class");
        let fresh = num_colors as u32;
        for w in (0..ch.len()).filter(|&w| ch[w] as usize == target) {
            let mut cg2 = cg.clone();
            let mut ch2 = ch.clone();
            cg2[v] = fresh;
            ch2[w] = fresh;
            if let Some(perm) = self.run(cg2, ch2)? {
                return Ok(Some(perm));
            }
        }
        Ok(None)
    }
}

/// Refines both colorings to their common stable partition. Returns the
/// number of colors, or `None` if the class sizes diverge.
fn refine(g: &Graph, h: &Graph, cg: &mut [u32], ch: &mut [u32]) -> Option<usize> {
    let mut count = distinct(cg);
    loop {
        let kg = signatures(g, cg);
        let kh = signatures(h, ch);
        let mut ids: BTreeMap<&[u32], (u32, usize, usize)> = BTreeMap::new();
        for k in &kg {
            ids.entry(k.as_slice()).or_insert((0, 0, 0)).1 += 1;
        }
        for k in &kh {
            ids.entry(k.as_slice()).or_insert((0, 0, 0)).2 += 1;
        }
        for (next, entry) in ids.values_mut().enumerate() {
            if entry.1 != entry.2 {
                return None;
            }
            entry.0 = next as u32;
        }
        let new_count = ids.len();
        for (v, k) in kg.iter().enumerate() {
            cg[v] = ids[k.as_slice()].0;
        }
        for (v, k) in kh.iter().enumerate() {
            ch[v] = ids[k.as_slice()].0;
        }
        if new_count == count {
            return Some(new_count);
        }
        count = new_count;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn signatures(g: &Graph, colors: &[u32]) -> Vec<Vec<u32>> {
    (0..g.n())
        .map(|v| {
            let mut key = Vec::with_capacity(1 + g.degree(v));
            key.push(colors[v]);
            let start = key.len();
            key.extend(g.neighbors(v).ones().map(|u| colors[u]));
            key[start..].sort_unstable();
            key
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, path_graph, star_graph};

    #[test]
    fn reflexive_small() {
        let k3 = complete_graph(3);
        let perm = are_isomorphic(&k3, &k3).unwrap().unwrap();
        assert!(is_witness(&k3, &k3, &perm));
    }

    #[test]
    fn degree_mismatch_is_fast_false() {
        assert_eq!(
            are_isomorphic(&path_graph(4), &star_graph(3)).unwrap(),
            None
        );
    }

    #[test]
    fn c6_vs_two_triangles() {
        let two_k3 = complete_graph(3).disjoint_union(&complete_graph(3));
        assert_eq!(are_isomorphic(&cycle_graph(6), &two_k3).unwrap(), None);
    }

    #[test]
    fn multipartite_shortcut() {
        let a = complete_bipartite(2, 3);
        let b = a.permute(&[4, 0, 3, 1, 2]).unwrap();
        let perm = are_isomorphic(&a, &b).unwrap().unwrap();
        assert!(is_witness(&a, &b, &perm));
        assert_eq!(complete_multipartite_parts(&a), Some(vec![2, 3]));
        assert_eq!(complete_multipartite_parts(&cycle_graph(5)), None);
        assert_eq!(complete_multipartite_parts(&Graph::empty(3)), Some(vec![3]));
        // K_{1,3} vs K_{2,2} have different degree multisets anyway;
        // K_{2,2} vs C_4 are the same graph.
        assert!(are_isomorphic(&complete_bipartite(2, 2), &cycle_graph(4))
            .unwrap()
            .is_some());
    }

    #[test]
    fn petersen_relabelled() {
        // outer 5-cycle, inner pentagram, spokes
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        let p = Graph::new(10, &edges).unwrap();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let q = p.permute(&perm).unwrap();
        let w = are_isomorphic(&p, &q).unwrap().unwrap();
        assert!(is_witness(&p, &q, &w));
    }

    #[test]
    fn budget_is_enforced() {
        let c = cycle_graph(12);
        let err = are_isomorphic_with_budget(&c, &c, IsoOptions { node_budget: 1 });
        assert!(matches!(err, Err(Error::ResourceLimit(_))));
    }
}

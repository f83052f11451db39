//! Structural predicates on a host graph that decide properties of its line
//! graph without building it.

use crate::graph::{complete_graph, Graph};

use super::enumerate_cliques_of_order;

/// Every degree is 1 or ω. For ω ≥ 4 this holds exactly when `L(g)` is
/// ω-clique regular.
pub fn degrees_one_or(g: &Graph, omega: usize) -> bool {
    (0..g.n()).all(|v| matches!(g.degree(v), d if d == 1 || d == omega))
}

/// Every component is a triangle, or is triangle free with all degrees in
/// {1, 3}. Holds exactly when `L(g)` is 3-clique regular.
pub fn components_allow_three_clique_line(g: &Graph) -> bool {
    let k3 = complete_graph(3);
    g.components().iter().all(|comp| {
        let h = g.induced(comp);
        if h == k3 {
            return true;
        }
        enumerate_cliques_of_order(&h, 3).unwrap().is_empty() && degrees_one_or(&h, 3)
    })
}

/// (1) Every degree is 2 or 3.
pub fn degrees_two_or_three(g: &Graph) -> bool {
    (0..g.n()).all(|v| matches!(g.degree(v), 2 | 3))
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    enumerate_cliques_of_order(g, 3)
        .unwrap()
        .iter()
        .map(|c| [c.vertices()[0], c.vertices()[1], c.vertices()[2]])
        .collect()
}

/// (2) Every degree-2 vertex lies in a triangle.
pub fn degree_two_in_triangle(g: &Graph) -> bool {
    let t = triangles(g);
    (0..g.n())
        .filter(|&v| g.degree(v) == 2)
        .all(|v| t.iter().any(|tri| tri.contains(&v)))
}

/// (3) Every triangle has exactly one degree-2 vertex.
pub fn triangle_has_one_degree_two(g: &Graph) -> bool {
    triangles(g)
        .iter()
        .all(|tri| tri.iter().filter(|&&v| g.degree(v) == 2).count() == 1)
}

/// (4) Distinct triangles are vertex disjoint.
pub fn triangles_disjoint(g: &Graph) -> bool {
    let mut seen = vec![false; g.n()];
    for tri in triangles(g) {
        for v in tri {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
    }
    true
}

/// The four conditions characterizing connected graphs with
/// `C_3(L(g)) ≅ g`, kept separate so failures can be attributed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreeCliqueLineConditions {
    pub degrees_two_or_three: bool,
    pub degree_two_in_triangle: bool,
    pub triangle_has_one_degree_two: bool,
    pub triangles_disjoint: bool,
}

impl ThreeCliqueLineConditions {
    pub fn of(g: &Graph) -> Self {
        ThreeCliqueLineConditions {
            degrees_two_or_three: degrees_two_or_three(g),
            degree_two_in_triangle: degree_two_in_triangle(g),
            triangle_has_one_degree_two: triangle_has_one_degree_two(g),
            triangles_disjoint: triangles_disjoint(g),
        }
    }

    pub fn all(&self) -> bool {
        self.degrees_two_or_three
            && self.degree_two_in_triangle
            && self.triangle_has_one_degree_two
            && self.triangles_disjoint
    }
}

use super::is_prime;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `n² × m` array over `0..n` in which every pair of columns shows each
/// ordered symbol pair exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalArray {
    n: usize,
    m: usize,
    rows: Vec<Vec<usize>>,
}

impl OrthogonalArray {
    /// Validates the pair-coverage property.
    pub fn new(n: usize, m: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let oa = OrthogonalArray { n, m, rows };
        oa.validate()?;
        Ok(oa)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.n, self.m);
        if self.rows.len() != n * n {
            return Err(Error::invalid(format!("expected {} rows", n * n)));
        }
        if self
            .rows
            .iter()
            .any(|r| r.len() != m || r.iter().any(|&x| x >= n))
        {
            return Err(Error::invalid(
                "row with wrong length or symbol out of range",
            ));
        }
        for c1 in 0..m {
            for c2 in c1 + 1..m {
                let mut seen = vec![false; n * n];
                for r in &self.rows {
                    let slot = &mut seen[r[c1] * n + r[c2]];
                    if *slot {
                        return Err(Error::invalid(format!(
                            "columns {c1}, {c2} repeat the pair ({}, {})",
                            r[c1], r[c2]
                        )));
                    }
                    *slot = true;
                }
            }
        }
        Ok(())
    }

    /// Rows with symbol `symbol` in column `column`: the canonical clique
    /// `S_{column,symbol}` of the block graph.
    pub fn canonical_clique(&self, column: usize, symbol: usize) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| self.rows[i][column] == symbol)
            .collect()
    }
}

/// OA(n, m) over the prime field: row `a·n + b` is
/// `(a, b, a + b, a + 2b, …, a + (m−2)b) mod n`.
pub fn orthogonal_array(n: usize, m: usize) -> Result<OrthogonalArray> {
    if !is_prime(n) {
        return Err(Error::Unsupported(format!(
            "orthogonal arrays only over prime orders, got {n}"
        )));
    }
    if !(2..=n + 1).contains(&m) {
        return Err(Error::invalid(format!("need 2 <= m <= {}, got {m}", n + 1)));
    }
    let rows = (0..n * n)
        .map(|idx| {
            let (a, b) = (idx / n, idx % n);
            let mut row = vec![a, b];
            row.extend((1..m - 1).map(|i| (a + i * b) % n));
            row
        })
        .collect();
    OrthogonalArray::new(n, m, rows)
}

/// Rows adjacent when they agree in some position.
pub fn oa_block_graph(oa: &OrthogonalArray) -> Graph {
    let rows = oa.rows();
    Graph::from_fn(rows.len(), |i, j| {
        rows[i].iter().zip(&rows[j]).any(|(x, y)| x == y)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::enumerate_cliques_of_order;
    use crate::generators::rook_graph;

    #[test]
    fn oa33_rows_one_based() {
        // symbols shifted to 1..3
        let expected = [
            [1, 1, 1],
            [1, 2, 2],
            [1, 3, 3],
            [2, 1, 2],
            [2, 2, 3],
            [2, 3, 1],
            [3, 1, 3],
            [3, 2, 1],
            [3, 3, 2],
        ];
        let oa = orthogonal_array(3, 3).unwrap();
        let ours: Vec<[usize; 3]> = oa
            .rows()
            .iter()
            .map(|r| [r[0] + 1, r[1] + 1, r[2] + 1])
            .collect();
        assert_eq!(ours, expected);
    }

    #[test]
    fn pair_coverage_brute_force() {
        let oa = orthogonal_array(5, 3).unwrap();
        for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
            let mut count = [[0; 5]; 5];
            for r in oa.rows() {
                count[r[c1]][r[c2]] += 1;
            }
            assert!(count.iter().flatten().all(|&c| c == 1));
        }
        for m in 2..=6 {
            assert!(orthogonal_array(5, m).is_ok());
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(orthogonal_array(4, 3), Err(Error::Unsupported(_))));
        assert!(matches!(
            orthogonal_array(5, 7),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            orthogonal_array(5, 1),
            Err(Error::InvalidArgument(_))
        ));
        let bad = vec![vec![0, 0]; 4];
        assert!(OrthogonalArray::new(2, 2, bad).is_err());
    }

    #[test]
    fn block_graphs() {
        assert_eq!(
            oa_block_graph(&orthogonal_array(3, 2).unwrap()),
            rook_graph(3).unwrap()
        );
        assert_eq!(
            oa_block_graph(&orthogonal_array(5, 2).unwrap()),
            rook_graph(5).unwrap()
        );
        let g = oa_block_graph(&orthogonal_array(5, 3).unwrap());
        assert_eq!(g.degree_info().k, Some(12));
    }

    #[test]
    fn five_cliques_are_canonical() {
        let oa = orthogonal_array(5, 3).unwrap();
        let g = oa_block_graph(&oa);
        let found: Vec<Vec<usize>> = enumerate_cliques_of_order(&g, 5)
            .unwrap()
            .into_iter()
            .map(|c| c.vertices().to_vec())
            .collect();
        let mut canonical: Vec<Vec<usize>> = (0..3)
            .flat_map(|c| (0..5).map(move |s| (c, s)))
            .map(|(c, s)| oa.canonical_clique(c, s))
            .collect();
        canonical.sort();
        assert_eq!(found, canonical);
    }
}

use num_bigint::BigInt;

use super::Polynomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Ring;
use crate::IntPolynomial;

/// Default cap on the vertex count for exact characteristic polynomials.
pub const DEFAULT_EXACT_LIMIT: usize = 128;

/// Exact-size cap, overridable through `CLIQUEGRAPH_EXACT_LIMIT`.
pub fn exact_limit() -> usize {
    std::env::var("CLIQUEGRAPH_EXACT_LIMIT")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_EXACT_LIMIT)
}

/// `det(xI − A)` by Berkowitz's division-free recurrence.
///
/// For each leading principal block `[[A_r, c], [ρ, a]]` the running
/// coefficient vector is multiplied by the lower-triangular Toeplitz matrix
/// with first column `1, −a, −ρc, −ρA_rc, −ρA_r²c, …`.
pub fn berkowitz<T: Ring>(a: &[Vec<T>]) -> Polynomial<T> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return Polynomial::constant(T::one());
    }
    // descending coefficients
    let mut v: Vec<T> = vec![T::one(), -a[0][0].clone()];
    for r in 1..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(-a[r][r].clone());
        let mut w: Vec<T> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let dot = (0..r)
                .filter(|&j| !a[r][j].is_zero())
                .fold(T::zero(), |acc, j| acc + a[r][j].clone() * w[j].clone());
            toeplitz.push(-dot);
            w = (0..r)
                .map(|i| {
                    (0..r)
                        .filter(|&j| !a[i][j].is_zero())
                        .fold(T::zero(), |acc, j| acc + a[i][j].clone() * w[j].clone())
                })
                .collect();
        }
        let next: Vec<T> = (0..=r + 1)
            .map(|i| {
                (0..=r.min(i))
                    .filter(|&j| i - j < toeplitz.len())
                    .fold(T::zero(), |acc, j| {
                        acc + toeplitz[i - j].clone() * v[j].clone()
                    })
            })
            .collect();
        v = next;
    }
    v.reverse();
    Polynomial::new(v)
}

/// Exact characteristic polynomial of the adjacency matrix, subject to
/// [`exact_limit`].
pub fn char_poly_exact(g: &Graph) -> Result<IntPolynomial> {
    char_poly_exact_with_limit(g, exact_limit())
}

pub fn char_poly_exact_with_limit(g: &Graph, limit: usize) -> Result<IntPolynomial> {
    if g.n() > limit {
        return Err(Error::ResourceLimit(format!(
            "exact characteristic polynomial limited to {limit} vertices (graph has {}); use the numeric spectrum",
            g.n()
        )));
    }
    Ok(berkowitz(&g.adjacency_matrix::<BigInt>()))
}

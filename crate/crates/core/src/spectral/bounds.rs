use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::spectral::symmetric_eigenvalues;

/// Closed interval `[lower, upper]` that eigenvalues must lie in.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenBounds<T> {
    pub lower: T,
    pub upper: T,
}

impl<T: Scalar> EigenBounds<T> {
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.lower.to_f64_lossy() - tol <= x && x <= self.upper.to_f64_lossy() + tol
    }

    pub fn to_f64(&self) -> EigenBounds<f64> {
        EigenBounds {
            lower: self.lower.to_f64_lossy(),
            upper: self.upper.to_f64_lossy(),
        }
    }
}

fn interlace_at<T: Scalar>(omega: usize, mu: T) -> T {
    let w = T::from_int(omega as i64);
    let ratio = w.clone() / (w.clone() - T::one());
    ratio * (mu / T::from_int(2) - w + T::from_int(2))
}

/// `(ω/(ω−1))(μ/2 − ω + 2)` at the extreme line-graph eigenvalues.
pub fn interlacing_bounds<T: Scalar>(omega: usize, mu_min: T, mu_max: T) -> EigenBounds<T> {
    assert!(omega >= 2, "omega must be at least 2");
    assert!(mu_min <= mu_max, "mu_min exceeds mu_max");
    EigenBounds {
        lower: interlace_at(omega, mu_min),
        upper: interlace_at(omega, mu_max),
    }
}

/// `[−ω, ω(Δ/(ω−1) − 1)]`.
pub fn degree_bounds<T: Scalar>(omega: usize, max_degree: usize) -> EigenBounds<T> {
    assert!(omega >= 2, "omega must be at least 2");
    assert!(max_degree + 1 >= omega, "max degree below omega - 1");
    let w = T::from_int(omega as i64);
    let delta = T::from_int(max_degree as i64);
    EigenBounds {
        lower: T::zero() - w.clone(),
        upper: w.clone() * (delta / (w - T::one()) - T::one()),
    }
}

/// `2ω − 4 < μ_max`.
pub fn check_line_bound<T: Scalar>(omega: usize, mu_max: T) -> bool {
    T::from_int(2 * omega as i64 - 4) < mu_max
}

/// `(μ_min, μ_max)` of `L(g)`, read off the signless Laplacian `Q = D + A`:
/// `L(g) + 2I` and `Q` share their nonzero eigenvalues, and `L(g)` has `−2`
/// whenever it has more vertices than `g`.
pub fn line_graph_extremes(g: &Graph) -> Result<(f64, f64)> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::invalid(
            "line graph of an edgeless graph has no eigenvalues",
        ));
    }
    let n = g.n();
    let mut q = g.adjacency_matrix::<f64>();
    for (v, row) in q.iter_mut().enumerate() {
        row[v] = g.degree(v) as f64;
    }
    let mut shifted: Vec<f64> = symmetric_eigenvalues(&q)?
        .into_iter()
        .map(|x| x - 2.0)
        .collect();
    // Q is positive semidefinite; its m largest eigenvalues carry over
    shifted.drain(..n.saturating_sub(m));
    let max = *shifted.last().expect("m >= 1");
    let min = if m > n { -2.0 } else { shifted[0] };
    Ok((min, max))
}

//! Edge-regular and strongly regular graphs: detection, exact parameter
//! algebra and the clique-graph classification.

mod clique;
mod quad;

pub use clique::{
    absolute_bound_holds, clique_graph_srg_classification,
    enumerate_srg_locally_linear_with_srg_clique_graph, rca_necessary_condition,
    same_params_criterion, CliqueGraphClassification, Rejection, ThreeGraphSearch,
};
pub(crate) use quad::exact_sqrt;
pub use quad::QuadSurd;

use serde::Serialize;

use crate::clique::{clique_number, enumerate_maximal_cliques, is_clique_regular};
use crate::error::{Error, Result};
use crate::graph::{complete_multipartite_parts, Graph};
use crate::spectral::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// Parameters satisfying `k < n`, `λ < k` (when `k > 0`), `μ ≤ k` and
    /// `(n − k − 1)μ = k(k − λ − 1)`.
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let p = SrgParams { n, k, lambda, mu };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        let SrgParams { n, k, lambda, mu } = *self;
        if k >= n {
            return Err(Error::InvalidParams(format!(
                "k = {k} must be below n = {n}"
            )));
        }
        if k > 0 && lambda >= k {
            return Err(Error::InvalidParams(format!(
                "λ = {lambda} must be below k = {k}"
            )));
        }
        if mu > k {
            return Err(Error::InvalidParams(format!("μ = {mu} exceeds k = {k}")));
        }
        let lhs = u128::from(n - k - 1) * u128::from(mu);
        let rhs = u128::from(k) * u128::from(k.saturating_sub(lambda + 1));
        if lhs != rhs {
            return Err(Error::InvalidParams(format!(
                "(n-k-1)μ = {lhs} but k(k-λ-1) = {rhs}"
            )));
        }
        Ok(())
    }

    /// Disjoint union of equal cliques (`μ = 0`) or complete multipartite
    /// with equal parts (`μ = k`).
    pub fn is_boring(&self) -> bool {
        self.mu == 0 || self.mu == self.k
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// `k^1, r^f, s^g` with `r > s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgSpectrum {
    pub k: u64,
    pub r: QuadSurd,
    pub s: QuadSurd,
    pub f: u64,
    pub g: u64,
}

impl SrgSpectrum {
    pub fn spectrum(&self) -> Spectrum {
        Spectrum::from_exact([
            (QuadSurd::integer(self.k as i64), 1),
            (self.r, self.f as usize),
            (self.s, self.g as usize),
        ])
    }
}

pub fn srg_spectrum_from_params(p: &SrgParams) -> Result<SrgSpectrum> {
    p.check()?;
    let (n, k, l, m) = (p.n as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let d = (l - m) * (l - m) + 4 * (k - m);
    let r = QuadSurd::new(l - m, 1, d, 2);
    let s = QuadSurd::new(l - m, -1, d, 2);

    // f, g = ((n−1) ∓ e/√D)/2 with e = 2k + (n−1)(λ−μ)
    let e = 2 * k + (n - 1) * (l - m);
    let (f, g) = if e == 0 {
        if (n - 1) % 2 != 0 {
            return Err(Error::InfeasibleParams(format!(
                "multiplicities (n-1)/2 = {}/2 are not integers",
                n - 1
            )));
        }
        ((n - 1) / 2, (n - 1) / 2)
    } else {
        let root = exact_sqrt(d).ok_or_else(|| {
            Error::InfeasibleParams(format!("√{d} is irrational, so f and g are not integers"))
        })?;
        let twice_f = (n - 1) * root - e;
        let twice_g = (n - 1) * root + e;
        if twice_f % (2 * root) != 0 || twice_g % (2 * root) != 0 {
            return Err(Error::InfeasibleParams(format!(
                "multiplicities f = {twice_f}/{} and g = {twice_g}/{} are not integers",
                2 * root,
                2 * root
            )));
        }
        (twice_f / (2 * root), twice_g / (2 * root))
    };
    if f <= 0 || g <= 0 {
        return Err(Error::InfeasibleParams(format!(
            "multiplicities f = {f}, g = {g} must be positive"
        )));
    }

    let sum = r.checked_add(&s).expect("conjugates");
    let prod = r.checked_mul(&s).expect("conjugates");
    assert_eq!(sum, QuadSurd::integer(l - m), "r + s = λ − μ");
    assert_eq!(prod, QuadSurd::integer(m - k), "rs = μ − k");
    assert_eq!(1 + f + g, n, "1 + f + g = n");
    let trace = r
        .checked_mul(&QuadSurd::integer(f))
        .and_then(|x| x.checked_add(&s.checked_mul(&QuadSurd::integer(g))?))
        .map(|x| x.add_int(k));
    assert_eq!(trace, Some(QuadSurd::integer(0)), "k + fr + gs = 0");

    Ok(SrgSpectrum {
        k: p.k,
        r,
        s,
        f: f as u64,
        g: g as u64,
    })
}

/// `(n, k, λ)` when `g` is regular and all adjacent pairs have the same
/// number of common neighbors. Edgeless graphs report `λ = 0`.
pub fn classify_edge_regular(g: &Graph) -> Option<(u64, u64, u64)> {
    let info = g.degree_info();
    let k = info.k?;
    let mut lambda = None;
    for (u, v) in g.edges() {
        let c = g.common_neighbor_count(u, v);
        if *lambda.get_or_insert(c) != c {
            return None;
        }
    }
    Some((g.n() as u64, k as u64, lambda.unwrap_or(0) as u64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgClassification {
    pub params: SrgParams,
    pub boring: bool,
}

/// Full parameters when `g` is strongly regular. Complete graphs report
/// `μ = 0`.
pub fn classify_srg(g: &Graph) -> Option<SrgClassification> {
    if g.n() == 0 {
        return None;
    }
    let (n, k, lambda) = classify_edge_regular(g)?;
    let mut mu = None;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                let c = g.common_neighbor_count(u, v);
                if *mu.get_or_insert(c) != c {
                    return None;
                }
            }
        }
    }
    let params = SrgParams {
        n,
        k,
        lambda,
        mu: mu.unwrap_or(0) as u64,
    };
    debug_assert!(params.check().is_ok(), "{params} from a graph");
    Some(SrgClassification {
        params,
        boring: is_boring_graph(g),
    })
}

/// Disjoint union of equal complete graphs, or the complement of one
/// (complete multipartite with equal parts).
pub fn is_boring_graph(g: &Graph) -> bool {
    let equal = |parts: Vec<usize>| parts.windows(2).all(|w| w[0] == w[1]);
    if complete_multipartite_parts(g).is_some_and(equal) {
        return true;
    }
    complete_multipartite_parts(&g.complement()).is_some_and(equal)
}

/// Whether `g` is a regular clique assembly with clique number `ω`, decided
/// both from the definition and from the erg characterization; the two
/// must agree.
pub fn is_regular_clique_assembly(g: &Graph, omega: usize) -> Result<bool> {
    let (by_definition, by_theorem) = rca_decisions(g, omega)?;
    assert_eq!(
        by_definition, by_theorem,
        "regular clique assembly routes disagree for omega = {omega}"
    );
    Ok(by_definition)
}

/// `(definitional, theorem)` verdicts.
pub fn rca_decisions(g: &Graph, omega: usize) -> Result<(bool, bool)> {
    if omega < 2 {
        return Err(Error::invalid("omega must be at least 2"));
    }
    let definitional = g.degree_info().is_regular && clique_number(g) == omega && {
        let maximal = enumerate_maximal_cliques(g);
        maximal.iter().all(|c| c.order() == omega)
            && g.edges().iter().all(|&(u, v)| {
                maximal
                    .iter()
                    .filter(|c| c.contains(u) && c.contains(v))
                    .count()
                    == 1
            })
    };
    let theorem = is_clique_regular(g, omega)?.regular
        && classify_edge_regular(g).is_some_and(|(_, _, l)| l == omega as u64 - 2);
    Ok((definitional, theorem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, complete_multipartite, cycle_graph, path_graph};
    use crate::spectral::{spectrum_numeric, DEFAULT_TOL};

    fn rook(n: usize) -> Graph {
        Graph::from_fn(n * n, |a, b| a / n == b / n || a % n == b % n)
    }

    fn t(n: usize) -> Graph {
        crate::clique::build_line_graph(&complete_graph(n)).clique_graph
    }

    #[test]
    fn params_identity() {
        assert!(SrgParams::new(25, 8, 3, 2).is_ok());
        assert!(SrgParams::new(99, 14, 1, 2).is_ok());
        // the swapped form (n−k−1)λ = k(k−μ−1) would reject rook(5)
        assert!(matches!(
            SrgParams::new(25, 8, 2, 3),
            Err(Error::InvalidParams(_))
        ));
        assert!(SrgParams::new(5, 5, 1, 1).is_err());
    }

    #[test]
    fn spectra_from_params() {
        let s = srg_spectrum_from_params(&SrgParams::new(99, 14, 1, 2).unwrap()).unwrap();
        assert_eq!(
            (s.r, s.s, s.f, s.g),
            (QuadSurd::integer(3), QuadSurd::integer(-4), 54, 44)
        );
        let s = srg_spectrum_from_params(&SrgParams::new(9, 4, 1, 2).unwrap()).unwrap();
        assert_eq!(
            (s.r, s.s, s.f, s.g),
            (QuadSurd::integer(1), QuadSurd::integer(-2), 4, 4)
        );
        let s = srg_spectrum_from_params(&SrgParams::new(15, 6, 1, 3).unwrap()).unwrap();
        assert_eq!(
            (s.r, s.s, s.f, s.g),
            (QuadSurd::integer(1), QuadSurd::integer(-3), 9, 5)
        );
        // conference graph: Paley(13)
        let s = srg_spectrum_from_params(&SrgParams::new(13, 6, 2, 3).unwrap()).unwrap();
        assert_eq!(s.r, QuadSurd::new(-1, 1, 13, 2));
        assert_eq!((s.f, s.g), (6, 6));
        // pentagon
        let s = srg_spectrum_from_params(&SrgParams::new(5, 2, 0, 1).unwrap()).unwrap();
        assert_eq!(s.spectrum().to_string(), "{2^1, (-1+√5)/2^2, (-1-√5)/2^2}");
    }

    #[test]
    fn infeasible_multiplicities() {
        // (n, 6, 1, 1) with n = 31: √20 irrational and e ≠ 0
        let p = SrgParams::new(31, 6, 1, 1).unwrap();
        assert!(matches!(
            srg_spectrum_from_params(&p),
            Err(Error::InfeasibleParams(_))
        ));
        // K_5: f = 0
        let p = SrgParams::new(5, 4, 3, 0).unwrap();
        assert!(matches!(
            srg_spectrum_from_params(&p),
            Err(Error::InfeasibleParams(_))
        ));
    }

    #[test]
    fn edge_regular_examples() {
        assert_eq!(classify_edge_regular(&rook(5)), Some((25, 8, 3)));
        assert_eq!(classify_edge_regular(&cycle_graph(5)), Some((5, 2, 0)));
        assert_eq!(classify_edge_regular(&path_graph(3)), None);
    }

    #[test]
    fn srg_examples() {
        let c = classify_srg(&t(5)).unwrap();
        assert_eq!(c.params, SrgParams::new(10, 6, 3, 4).unwrap());
        assert!(!c.boring);
        let k5 = classify_srg(&complete_graph(5)).unwrap();
        assert!(k5.boring);
        assert_eq!(k5.params.mu, 0);
        let k333 = classify_srg(&complete_multipartite(&[3, 3, 3]).unwrap()).unwrap();
        assert!(k333.boring);
        assert_eq!(k333.params, SrgParams::new(9, 6, 3, 6).unwrap());
        let two_k3 = complete_graph(3).disjoint_union(&complete_graph(3));
        assert!(classify_srg(&two_k3).unwrap().boring);
        assert!(classify_srg(&path_graph(3)).is_none());
        assert!(classify_srg(&Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap()).is_none());
    }

    #[test]
    fn boring_spectral_cross_check() {
        for g in [
            complete_graph(5),
            complete_graph(3).disjoint_union(&complete_graph(3)),
            Graph::empty(4),
        ] {
            assert!(is_boring_graph(&g));
            assert!(spectrum_numeric(&g, DEFAULT_TOL).unwrap().distinct() <= 2);
        }
        assert!(!is_boring_graph(&cycle_graph(5)));
        assert!(!is_boring_graph(&complete_multipartite(&[2, 3]).unwrap()));
    }

    #[test]
    fn rca_examples() {
        assert!(is_regular_clique_assembly(&rook(5), 5).unwrap());
        assert!(!is_regular_clique_assembly(&cycle_graph(6), 3).unwrap());
        assert!(is_regular_clique_assembly(&cycle_graph(6), 2).unwrap());
        assert!(!is_regular_clique_assembly(&t(5), 4).unwrap());
        assert!(is_regular_clique_assembly(&complete_graph(4), 4).unwrap());
    }
}

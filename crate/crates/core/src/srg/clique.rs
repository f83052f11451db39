use serde::Serialize;

use super::{srg_spectrum_from_params, QuadSurd, SrgParams};
use crate::error::{Error, Result};
use crate::spectral::{clique_graph_order, predicted_clique_spectrum, Spectrum};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliqueGraphClassification {
    pub is_srg: bool,
    pub predicted: Option<SrgParams>,
    pub predicted_spectrum: Spectrum,
    /// `λ*`, `μ*` came from the closed forms (λ = ω − 2) rather than from
    /// the predicted spectrum.
    pub closed_form: bool,
}

/// Whether `C_ω` of an srg with parameters `p` is strongly regular:
/// exactly when `s = −k/(ω−1)` or `k = ω(ω−1)`.
pub fn clique_graph_srg_classification(
    p: &SrgParams,
    omega: usize,
) -> Result<CliqueGraphClassification> {
    if p.is_boring() {
        return Err(Error::NotApplicable(format!(
            "{p} is a boring parameter set"
        )));
    }
    let host = srg_spectrum_from_params(p)?;
    let (per_clique, m) = clique_graph_order(p.n, p.k, omega as u64)?;
    let w = omega as u64;
    let k_star = w * (per_clique - 1);

    let is_srg = host.s == QuadSurd::integer(-(per_clique as i64)) || p.k == w * (w - 1);
    let predicted_spectrum = predicted_clique_spectrum(&host.spectrum(), p.k as usize, omega)?;
    if !is_srg {
        return Ok(CliqueGraphClassification {
            is_srg,
            predicted: None,
            predicted_spectrum,
            closed_form: false,
        });
    }

    let from_spectrum = params_from_spectrum(m, k_star, &predicted_spectrum)?;
    let closed_form = p.lambda == w - 2;
    let predicted = if closed_form {
        let lambda_star = per_clique - 2;
        let mu_star = (p.mu + w)
            .checked_sub(per_clique)
            .ok_or_else(|| Error::TheoremViolation(format!("μ* negative for {p}")))?;
        let closed = SrgParams {
            n: m,
            k: k_star,
            lambda: lambda_star,
            mu: mu_star,
        };
        if closed != from_spectrum {
            return Err(Error::TheoremViolation(format!(
                "closed-form parameters {closed} differ from spectral {from_spectrum}"
            )));
        }
        closed
    } else {
        from_spectrum
    };
    predicted.check()?;
    Ok(CliqueGraphClassification {
        is_srg,
        predicted: Some(predicted),
        predicted_spectrum,
        closed_form,
    })
}

/// `μ* = k* + r*s*`, `λ* = μ* + r* + s*` from the non-principal
/// eigenvalues. A single non-principal eigenvalue means a complete graph.
fn params_from_spectrum(n: u64, k: u64, spec: &Spectrum) -> Result<SrgParams> {
    let exact = spec.exact_entries().expect("predicted spectra are exact");
    let k_val = QuadSurd::integer(k as i64);
    let others: Vec<QuadSurd> = exact
        .iter()
        .filter(|(v, _)| *v != k_val)
        .map(|(v, _)| *v)
        .collect();
    let bad =
        || Error::TheoremViolation(format!("predicted spectrum {spec} is not an srg spectrum"));
    match others.as_slice() {
        [_] => Ok(SrgParams {
            n,
            k,
            lambda: k.saturating_sub(1),
            mu: 0,
        }),
        [r, s] => {
            let prod = r.checked_mul(s).ok_or_else(bad)?;
            let sum = r.checked_add(s).ok_or_else(bad)?;
            let mu = prod.add_int(k as i64).as_integer().ok_or_else(bad)?;
            let lambda = sum.add_int(mu).as_integer().ok_or_else(bad)?;
            if mu < 0 || lambda < 0 {
                return Err(bad());
            }
            Ok(SrgParams {
                n,
                k,
                lambda: lambda as u64,
                mu: mu as u64,
            })
        }
        _ => Err(bad()),
    }
}

/// `k = ω(ω−1)`; when it holds the predicted parameters equal `p`.
pub fn same_params_criterion(p: &SrgParams, omega: usize) -> Result<bool> {
    let w = omega as u64;
    let same = p.k == w * (w - 1);
    if same {
        let c = clique_graph_srg_classification(p, omega)?;
        if c.predicted != Some(*p) {
            return Err(Error::TheoremViolation(format!(
                "k = ω(ω−1) but predicted parameters {:?} differ from {p}",
                c.predicted
            )));
        }
    }
    Ok(same)
}

/// `k ≥ μ(ω−1)` for an srg with `λ = ω − 2`.
pub fn rca_necessary_condition(p: &SrgParams, omega: usize) -> Result<bool> {
    if omega < 2 || p.lambda != omega as u64 - 2 {
        return Err(Error::NotApplicable(format!(
            "needs λ = ω − 2, got λ = {} with ω = {omega}",
            p.lambda
        )));
    }
    Ok(p.k >= p.mu * (omega as u64 - 1))
}

/// `n ≤ f(f+3)/2` and `n ≤ g(g+3)/2`.
pub fn absolute_bound_holds(p: &SrgParams) -> Result<bool> {
    let s = srg_spectrum_from_params(p)?;
    let bound = |x: u64| x * (x + 3) / 2;
    Ok(p.n <= bound(s.f) && p.n <= bound(s.g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rejection {
    pub branch: &'static str,
    pub candidate: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreeGraphSearch {
    pub accepted: Vec<SrgParams>,
    pub rejected: Vec<Rejection>,
}

/// Locally linear srgs (λ = 1, ω = 3) whose 3-clique graph is strongly
/// regular. Either `k = ω(ω−1) = 6`, forcing `n = 24/μ + 7`, or
/// `s = −k/2`, forcing `(k+2) | 24`, `μ = k/2` and `n = 3k − 3`.
pub fn enumerate_srg_locally_linear_with_srg_clique_graph() -> ThreeGraphSearch {
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    let mut consider = |branch: &'static str, candidate: String, p: Result<SrgParams>| {
        let verdict = p.and_then(|p| {
            let s = srg_spectrum_from_params(&p)?;
            if !absolute_bound_holds(&p)? {
                return Err(Error::InfeasibleParams(format!(
                    "violates the absolute bound (f = {}, g = {})",
                    s.f, s.g
                )));
            }
            let c = clique_graph_srg_classification(&p, 3)?;
            if !c.is_srg {
                return Err(Error::TheoremViolation(
                    "clique graph is not strongly regular".into(),
                ));
            }
            Ok(p)
        });
        match verdict {
            Ok(p) => accepted.push(p),
            Err(e) => rejected.push(Rejection {
                branch,
                candidate,
                reason: e.to_string(),
            }),
        }
    };

    for mu in (1..=24u64).filter(|m| 24 % m == 0) {
        let n = 24 / mu + 7;
        consider(
            "k = 6",
            format!("({n},6,1,{mu})"),
            SrgParams::new(n, 6, 1, mu),
        );
    }

    for k in (1..=22u64).filter(|k| 24 % (k + 2) == 0) {
        let candidate = format!("k = {k}");
        if k % 2 == 1 {
            consider(
                "s = -k/2",
                candidate,
                Err(Error::NotApplicable("k must be even".into())),
            );
            continue;
        }
        if k == 2 {
            consider(
                "s = -k/2",
                candidate,
                Err(Error::NotApplicable(
                    "k = 2 and λ = 1 force K_3, a boring graph".into(),
                )),
            );
            continue;
        }
        let p = SrgParams::new(3 * k - 3, k, 1, k / 2);
        let candidate = p.map_or(candidate, |p| p.to_string());
        consider(
            "s = -k/2",
            candidate,
            SrgParams::new(3 * k - 3, k, 1, k / 2),
        );
    }

    accepted.sort();
    accepted.dedup();
    ThreeGraphSearch { accepted, rejected }
}

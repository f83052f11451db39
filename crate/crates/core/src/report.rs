//! Versioned JSON reports shared by the command-line tool.
//!
//! Field order is fixed by the struct definitions. Spectra carry their own
//! provenance: every entry says whether it is exact and, if not, the
//! tolerance it was grouped with.

use serde::Serialize;

use crate::clique::{
    build_clique_graph, clique_number, clique_regular_orders, is_clique_regular, EdgeWitness,
};
use crate::error::Result;
use crate::graph::{complete_multipartite_parts, write_graph6, Graph};
use crate::spectral::{
    char_poly_exact, check_line_bound, clique_graph_order, degree_bounds, exact_limit,
    interlacing_bounds, line_graph_extremes, predicted_clique_charpoly, predicted_clique_spectrum,
    predicted_clique_values, spectrum_exact, spectrum_numeric, Spectrum, DEFAULT_TOL,
};
use crate::srg::{
    absolute_bound_holds, classify_srg, clique_graph_srg_classification,
    is_regular_clique_assembly, rca_necessary_condition, srg_spectrum_from_params,
    CliqueGraphClassification, SrgClassification, SrgParams,
};
use crate::FloatBounds;

pub const SCHEMA_VERSION: &str = "cliquegraph-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub omegas: Vec<usize>,
    pub tol: f64,
    /// Fail with a resource-limit error instead of switching to numeric
    /// mode above the exact-size cap.
    pub force_exact: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            omegas: Vec::new(),
            tol: DEFAULT_TOL,
            force_exact: false,
        }
    }
}

impl AnalysisOptions {
    fn mode_for(&self, n: usize) -> Mode {
        if self.force_exact || n <= exact_limit() {
            Mode::Exact
        } else {
            Mode::Numeric
        }
    }

    fn spectrum(&self, g: &Graph) -> Result<SpectrumReport> {
        let mode = self.mode_for(g.n());
        let spectrum = match mode {
            Mode::Exact => spectrum_exact(g, self.tol)?,
            Mode::Numeric => spectrum_numeric(g, self.tol)?,
        };
        Ok(SpectrumReport {
            mode,
            tol: self.tol,
            spectrum,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub mode: Mode,
    pub tol: f64,
    pub spectrum: Spectrum,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDescriptor {
    pub source: String,
    pub graph6: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub k: Option<usize>,
    pub connected: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub lower: f64,
    pub upper: f64,
    pub holds: bool,
}

impl BoundCheck {
    fn of(b: FloatBounds, values: &[f64], tol: f64) -> Self {
        BoundCheck {
            lower: b.lower,
            upper: b.upper,
            holds: values.iter().all(|&x| b.contains(x, tol)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub line_graph_min: f64,
    pub line_graph_max: f64,
    pub interlacing: BoundCheck,
    pub degree: BoundCheck,
    /// `2ω − 4 < μ_max`, reported for connected non-complete hosts.
    pub line_bound: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransferCheck {
    pub mode: Mode,
    pub holds: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CliqueGraphSummary {
    pub n: usize,
    pub edges: usize,
    pub k: Option<usize>,
    /// `K_m`, `K_{a,b,…}` or `edgeless` when the clique graph has that shape.
    pub shape: Option<String>,
    pub srg: Option<SrgClassification>,
    pub graph6: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct OmegaReport {
    pub omega: usize,
    pub clique_count: usize,
    pub clique_regular: bool,
    pub counterexample: Option<EdgeWitness>,
    pub regular_clique_assembly: bool,
    pub clique_graph: CliqueGraphSummary,
    pub spectrum: Option<SpectrumReport>,
    pub bounds: Option<BoundsReport>,
    pub transfer: Option<TransferCheck>,
    pub srg_prediction: Option<CliqueGraphClassification>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub kind: &'static str,
    pub input: InputDescriptor,
    pub stats: GraphStats,
    pub clique_number: usize,
    pub clique_regular_orders: Vec<usize>,
    pub srg: Option<SrgClassification>,
    pub spectrum: SpectrumReport,
    pub omegas: Vec<OmegaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

fn shape(g: &Graph) -> Option<String> {
    let parts = complete_multipartite_parts(g)?;
    Some(if parts.len() == 1 {
        "edgeless".into()
    } else if parts.iter().all(|&p| p == 1) {
        format!("K_{}", g.n())
    } else {
        let list: Vec<String> = parts.iter().rev().map(usize::to_string).collect();
        format!("K_{{{}}}", list.join(","))
    })
}

pub fn analyze(g: &Graph, source: &str, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let info = g.degree_info();
    let stats = GraphStats {
        n: g.n(),
        edges: g.edge_count(),
        min_degree: info.degrees.iter().copied().min().unwrap_or(0),
        max_degree: info.max_degree,
        regular: info.is_regular,
        k: info.k,
        connected: g.is_connected(),
    };
    let srg = classify_srg(g);
    let spectrum = opts.spectrum(g)?;
    let omegas = opts
        .omegas
        .iter()
        .map(|&w| analyze_omega(g, w, opts, &spectrum, srg.as_ref()))
        .collect::<Result<_>>()?;
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        kind: "analysis",
        input: InputDescriptor {
            source: source.to_string(),
            graph6: write_graph6(g),
        },
        stats,
        clique_number: clique_number(g),
        clique_regular_orders: clique_regular_orders(g),
        srg,
        spectrum,
        omegas,
        timestamp: None,
    })
}

fn analyze_omega(
    g: &Graph,
    omega: usize,
    opts: &AnalysisOptions,
    host: &SpectrumReport,
    srg: Option<&SrgClassification>,
) -> Result<OmegaReport> {
    let regularity = is_clique_regular(g, omega)?;
    let built = build_clique_graph(g, omega)?;
    let c = &built.clique_graph;
    let summary = CliqueGraphSummary {
        n: c.n(),
        edges: c.edge_count(),
        k: c.degree_info().k,
        shape: if c.n() > 0 { shape(c) } else { None },
        srg: classify_srg(c),
        graph6: write_graph6(c),
    };
    let spectrum = if c.n() > 0 {
        Some(opts.spectrum(c)?)
    } else {
        None
    };

    let info = g.degree_info();
    let bounds = match &spectrum {
        Some(spec) if regularity.regular => {
            let (lo, hi) = line_graph_extremes(g)?;
            let values = spec.spectrum.values_f64();
            let tol = 1e-9;
            let non_complete = g.edge_count() < g.n() * (g.n() - 1) / 2;
            Some(BoundsReport {
                line_graph_min: lo,
                line_graph_max: hi,
                interlacing: BoundCheck::of(interlacing_bounds(omega, lo, hi), &values, tol),
                degree: BoundCheck::of(degree_bounds(omega, info.max_degree), &values, tol),
                line_bound: (g.is_connected() && non_complete).then(|| check_line_bound(omega, hi)),
            })
        }
        _ => None,
    };

    let transfer = match (info.k, &spectrum) {
        (Some(k), Some(spec)) if regularity.regular => {
            Some(transfer_check(g, c, k, omega, host, spec, opts.tol)?)
        }
        _ => None,
    };

    let srg_prediction = match srg {
        Some(s) if !s.boring && regularity.regular => {
            clique_graph_srg_classification(&s.params, omega).ok()
        }
        _ => None,
    };

    Ok(OmegaReport {
        omega,
        clique_count: built.m(),
        clique_regular: regularity.regular,
        counterexample: regularity.counterexample,
        regular_clique_assembly: is_regular_clique_assembly(g, omega)?,
        clique_graph: summary,
        spectrum,
        bounds,
        transfer,
        srg_prediction,
    })
}

fn transfer_check(
    g: &Graph,
    c: &Graph,
    k: usize,
    omega: usize,
    host: &SpectrumReport,
    clique: &SpectrumReport,
    tol: f64,
) -> Result<TransferCheck> {
    if host.mode == Mode::Exact && clique.mode == Mode::Exact {
        let predicted = predicted_clique_charpoly(&char_poly_exact(g)?, g.n(), k, omega);
        let actual = char_poly_exact(c)?;
        return Ok(match predicted {
            Ok(p) => TransferCheck {
                mode: Mode::Exact,
                holds: p == actual,
                detail: (p != actual).then(|| format!("predicted {p}, actual {actual}")),
            },
            Err(e) => TransferCheck {
                mode: Mode::Exact,
                holds: false,
                detail: Some(e.to_string()),
            },
        });
    }
    let mut actual = clique.spectrum.values_f64();
    actual.sort_by(f64::total_cmp);
    let outcome = predicted_clique_values(&host.spectrum.values_f64(), k, omega, tol);
    Ok(match outcome {
        Ok(p) => {
            let worst = p
                .iter()
                .zip(&actual)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            let holds = p.len() == actual.len() && worst <= tol;
            TransferCheck {
                mode: Mode::Numeric,
                holds,
                detail: (!holds).then(|| format!("largest deviation {worst:e}")),
            }
        }
        Err(e) => TransferCheck {
            mode: Mode::Numeric,
            holds: false,
            detail: Some(e.to_string()),
        },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictionReport {
    pub schema: &'static str,
    pub kind: &'static str,
    pub params: SrgParams,
    pub omega: usize,
    pub host_spectrum: Spectrum,
    pub clique_graph_order: u64,
    pub clique_graph_degree: u64,
    pub predicted_spectrum: Spectrum,
    /// Absent for boring parameter sets.
    pub classification: Option<CliqueGraphClassification>,
    pub rca_necessary_condition: Option<bool>,
    pub absolute_bound: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

/// Everything the parameters alone say about the ω-clique graph.
pub fn predict(params: &SrgParams, omega: usize) -> Result<PredictionReport> {
    params.check()?;
    let host = srg_spectrum_from_params(params)?;
    let (per_clique, m) = clique_graph_order(params.n, params.k, omega as u64)?;
    let host_spectrum = host.spectrum();
    let predicted_spectrum = predicted_clique_spectrum(&host_spectrum, params.k as usize, omega)?;
    let classification = if params.is_boring() {
        None
    } else {
        Some(clique_graph_srg_classification(params, omega)?)
    };
    Ok(PredictionReport {
        schema: SCHEMA_VERSION,
        kind: "prediction",
        params: *params,
        omega,
        host_spectrum,
        clique_graph_order: m,
        clique_graph_degree: omega as u64 * (per_clique - 1),
        predicted_spectrum,
        classification,
        rca_necessary_condition: rca_necessary_condition(params, omega).ok(),
        absolute_bound: absolute_bound_holds(params)?,
        timestamp: None,
    })
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string(report).expect("reports serialize")
}

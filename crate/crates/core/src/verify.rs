//! Theorem drivers: each runs one family of checks and returns a report with
//! the first counterexample, if any.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clique::line::{
    components_allow_three_clique_line, degrees_one_or, ThreeCliqueLineConditions,
};
use crate::clique::{
    build_clique_graph, build_line_graph, clique_number, clique_regular_orders, is_clique_regular,
    verify_incidence_identities, verify_phi_identity,
};
use crate::corpus::{standard_corpus, CorpusEntry};
use crate::error::{Error, Result};
use crate::generators::{
    gq_collinearity_graph, gq_dual, gq_elliptic, gq_symplectic, oa_block_graph, orthogonal_array,
    rook_graph, triangular_graph, IncidenceStructure,
};
use crate::graph::{
    are_isomorphic, complete_bipartite, complete_graph, complete_multipartite, is_witness,
    write_graph6, Graph,
};
use crate::report::SCHEMA_VERSION;
use crate::spectral::{
    char_poly_exact, degree_bounds, exact_limit, interlacing_bounds, line_graph_extremes,
    predicted_clique_charpoly, predicted_clique_values, spectrum_exact, spectrum_numeric, Spectrum,
    DEFAULT_TOL,
};
use crate::srg::{
    classify_srg, clique_graph_srg_classification,
    enumerate_srg_locally_linear_with_srg_clique_graph, rca_decisions, SrgParams,
};

pub const THEOREMS: &[&str] = &[
    "rook",
    "triangular",
    "oa",
    "transfer",
    "srg-classification",
    "gq-duality",
    "three-graph-classification",
    "clique-regular-orders",
    "line-graph-regularity",
    "line-graph-isomorphism",
    "incidence-identities",
    "phi-identity",
    "bounds",
    "rca-agreement",
];

/// Tolerance for eigenvalue bound checks.
pub const BOUND_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct Scope {
    /// Every connected labeled graph on up to this many vertices.
    pub exhaustive_max_n: usize,
    pub random_count: usize,
    pub random_max_n: usize,
    pub seed: u64,
    /// Field orders for the GQ duality check.
    pub q: Vec<usize>,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            exhaustive_max_n: 6,
            random_count: 10_000,
            random_max_n: 9,
            seed: 0x5eed,
            q: vec![2, 3],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub kind: &'static str,
    pub theorem: String,
    pub pass: bool,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<Case>,
    /// Named cases; sweeps over generated graphs only count theirs.
    pub results: Vec<Case>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

#[derive(Default)]
struct Recorder {
    cases: usize,
    failures: usize,
    first_failure: Option<Case>,
    results: Vec<Case>,
}

impl Recorder {
    fn push(&mut self, case: Case, keep: bool) {
        self.cases += 1;
        if !case.pass {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(case.clone());
            }
        }
        if keep {
            self.results.push(case);
        }
    }

    fn named(
        &mut self,
        name: impl Into<String>,
        pass: bool,
        detail: Option<String>,
        g: Option<&Graph>,
    ) {
        let case = Case {
            name: name.into(),
            pass,
            detail,
            graph6: g.map(write_graph6),
        };
        self.push(case, true);
    }

    fn sweep(&mut self, name: &str, pass: bool, detail: impl FnOnce() -> String, g: &Graph) {
        let case = Case {
            name: name.to_string(),
            pass,
            detail: (!pass).then(detail),
            graph6: (!pass).then(|| write_graph6(g)),
        };
        self.push(case, false);
    }

    fn finish(self, theorem: &str, data: Option<serde_json::Value>) -> VerifyReport {
        VerifyReport {
            schema: SCHEMA_VERSION,
            kind: "verification",
            theorem: theorem.to_string(),
            pass: self.failures == 0 && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first_failure,
            results: self.results,
            data,
        }
    }
}

pub fn run(theorem: &str, scope: &Scope) -> Result<VerifyReport> {
    match theorem {
        "rook" => verify_rook(),
        "triangular" => verify_triangular(),
        "oa" => verify_oa(),
        "transfer" => verify_transfer(&standard_corpus()?),
        "srg-classification" => verify_srg_classification(&standard_corpus()?),
        "gq-duality" => verify_gq_duality(&scope.q),
        "three-graph-classification" => Ok(verify_three_graphs()),
        "clique-regular-orders"
        | "line-graph-regularity"
        | "line-graph-isomorphism"
        | "incidence-identities"
        | "phi-identity"
        | "bounds"
        | "rca-agreement" => sweep(theorem, scope),
        other => Err(Error::invalid(format!(
            "unknown theorem '{other}'; known: {}",
            THEOREMS.join(", ")
        ))),
    }
}

fn spectrum_is(spec: &Spectrum, want: &[(i64, usize)]) -> bool {
    spec.integer_entries().as_deref() == Some(want)
}

pub fn verify_rook() -> Result<VerifyReport> {
    let mut rec = Recorder::default();
    for n in 3..=6 {
        let g = rook_graph(n)?;
        let c = build_clique_graph(&g, n)?.clique_graph;
        let iso = are_isomorphic(&c, &complete_bipartite(n, n))?;
        let witnessed = iso.is_some_and(|p| is_witness(&c, &complete_bipartite(n, n), &p));
        let spec = spectrum_exact(&c, DEFAULT_TOL)?;
        let n64 = n as i64;
        let spec_ok = spectrum_is(&spec, &[(n64, 1), (0, 2 * (n - 1)), (-n64, 1)]);
        rec.named(
            format!("C_{n}(rook {n}) = K_{{{n},{n}}}"),
            is_clique_regular(&g, n)?.regular && witnessed && spec_ok,
            Some(format!("spectrum {spec}")),
            None,
        );
    }
    Ok(rec.finish("rook", None))
}

pub fn verify_triangular() -> Result<VerifyReport> {
    let mut rec = Recorder::default();
    for n in [3, 5, 6, 7, 8] {
        let g = triangular_graph(n)?;
        let regular = is_clique_regular(&g, n - 1)?.regular;
        let c = build_clique_graph(&g, n - 1)?.clique_graph;
        let iso = are_isomorphic(&c, &complete_graph(n))?.is_some();
        rec.named(
            format!("C_{}(T_{n}) = K_{n}", n - 1),
            regular && iso,
            None,
            None,
        );
    }
    let t4 = triangular_graph(4)?;
    let r = is_clique_regular(&t4, 3)?;
    rec.named(
        "T_4 is not 3-clique regular",
        !r.regular,
        r.counterexample
            .map(|w| format!("edge {:?} in {} triangles", w.edge, w.cliques)),
        None,
    );
    Ok(rec.finish("triangular", None))
}

pub fn verify_oa() -> Result<VerifyReport> {
    let mut rec = Recorder::default();
    for (n, m) in [(5, 2), (5, 3), (7, 2), (7, 3)] {
        let g = oa_block_graph(&orthogonal_array(n, m)?);
        let regular = is_clique_regular(&g, n)?.regular;
        let c = build_clique_graph(&g, n)?.clique_graph;
        let target = complete_multipartite(&vec![n; m])?;
        let iso = are_isomorphic(&c, &target)?.is_some();
        rec.named(
            format!("C_{n}(OA({n},{m})) = complete {m}-partite, parts of {n}"),
            regular && iso,
            None,
            None,
        );
    }
    Ok(rec.finish("oa", None))
}

/// Exact polynomial identity up to the exact-size cap, eigenvalue
/// comparison within the default tolerance beyond it.
pub fn transfer_case(e: &CorpusEntry) -> Result<(bool, String)> {
    let g = &e.graph;
    let k = g
        .degree_info()
        .k
        .ok_or_else(|| Error::NotApplicable(format!("{} is not regular", e.name)))?;
    let c = build_clique_graph(g, e.omega)?.clique_graph;
    if c.n().max(g.n()) <= exact_limit() {
        let predicted = predicted_clique_charpoly(&char_poly_exact(g)?, g.n(), k, e.omega)?;
        let actual = char_poly_exact(&c)?;
        return Ok((predicted == actual, format!("exact, degree {}", c.n())));
    }
    let host = spectrum_numeric(g, DEFAULT_TOL)?.values_f64();
    let predicted = predicted_clique_values(&host, k, e.omega, DEFAULT_TOL)?;
    let mut actual = spectrum_numeric(&c, DEFAULT_TOL)?.values_f64();
    actual.sort_by(f64::total_cmp);
    let worst = predicted
        .iter()
        .zip(&actual)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok((
        predicted.len() == actual.len() && worst <= DEFAULT_TOL,
        format!("numeric, largest deviation {worst:e}"),
    ))
}

pub fn verify_transfer(corpus: &[CorpusEntry]) -> Result<VerifyReport> {
    let mut rec = Recorder::default();
    for e in corpus {
        let (pass, detail) = transfer_case(e)?;
        rec.named(
            format!("{} (omega {})", e.name, e.omega),
            pass,
            Some(detail),
            None,
        );
    }
    Ok(rec.finish("transfer", None))
}

pub fn verify_srg_classification(corpus: &[CorpusEntry]) -> Result<VerifyReport> {
    let mut rec = Recorder::default();
    for e in corpus {
        let Some(host) = classify_srg(&e.graph).filter(|s| !s.boring) else {
            continue;
        };
        let predicted = clique_graph_srg_classification(&host.params, e.omega)?;
        let c = build_clique_graph(&e.graph, e.omega)?.clique_graph;
        let actual = classify_srg(&c).map(|s| s.params);
        let pass = predicted.is_srg == actual.is_some() && predicted.predicted == actual;
        rec.named(
            format!("{} {} omega {}", e.name, host.params, e.omega),
            pass,
            Some(format!(
                "predicted {}, built {}",
                fmt_params(predicted.predicted),
                fmt_params(actual)
            )),
            None,
        );
    }
    Ok(rec.finish("srg-classification", None))
}

fn fmt_params(p: Option<SrgParams>) -> String {
    p.map_or_else(|| "not srg".into(), |p| p.to_string())
}

/// Clique `i` of the collinearity graph is a line of `s`; sending it to
/// that line's index is an isomorphism onto the dual's collinearity graph.
pub fn gq_duality_witness(s: &IncidenceStructure) -> Result<Option<Vec<usize>>> {
    let coll = gq_collinearity_graph(s)?;
    let built = build_clique_graph(&coll, s.s + 1)?;
    let dual_coll = gq_collinearity_graph(&gq_dual(s)?)?;
    let line_index: HashMap<&[usize], usize> = s
        .lines
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_slice(), i))
        .collect();
    let perm: Option<Vec<usize>> = built
        .cliques
        .iter()
        .map(|c| line_index.get(c.vertices()).copied())
        .collect();
    Ok(perm.filter(|p| is_witness(&built.clique_graph, &dual_coll, p)))
}

/// srg((t+1)(st+1), t(s+1), t−1, s+1).
pub fn gq_dual_params(s: usize, t: usize) -> SrgParams {
    let (s, t) = (s as u64, t as u64);
    SrgParams {
        n: (t + 1) * (s * t + 1),
        k: t * (s + 1),
        lambda: t - 1,
        mu: s + 1,
    }
}

pub fn verify_gq_duality(qs: &[usize]) -> Result<VerifyReport> {
    let mut rec = Recorder::default();
    for &q in qs {
        let mut structures = vec![(format!("W({q})"), gq_symplectic(q)?)];
        if q == 2 || q == 3 {
            structures.push((format!("Q-(5,{q})"), gq_elliptic(q)?));
        }
        for (name, s) in structures {
            let witness = gq_duality_witness(&s)?;
            let coll = gq_collinearity_graph(&s)?;
            let c = build_clique_graph(&coll, s.s + 1)?.clique_graph;
            let got = classify_srg(&c).map(|x| x.params);
            let want = gq_dual_params(s.s, s.t);
            rec.named(
                format!(
                    "{name}: GQ({},{}) clique graph = dual collinearity graph",
                    s.s, s.t
                ),
                witness.is_some() && got == Some(want),
                Some(format!("expected srg{want}, built {}", fmt_params(got))),
                None,
            );
        }
    }
    Ok(rec.finish("gq-duality", None))
}

pub fn verify_three_graphs() -> VerifyReport {
    let search = enumerate_srg_locally_linear_with_srg_clique_graph();
    let want = [(9, 4, 1, 2), (15, 6, 1, 3), (27, 10, 1, 5)].map(|(n, k, l, m)| SrgParams {
        n,
        k,
        lambda: l,
        mu: m,
    });
    let mut rec = Recorder::default();
    rec.named(
        "accepted parameter sets",
        search.accepted == want,
        Some(
            search
                .accepted
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        ),
        None,
    );
    let data = serde_json::to_value(&search).expect("search serializes");
    rec.finish("three-graph-classification", Some(data))
}

/// Every labeled connected graph on `n` vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("valid edges");
        g.is_connected().then_some(g)
    })
}

/// `count` graphs with 1..=max_n vertices and a random edge density per graph.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = rng.gen_range(0.15..0.85);
            Graph::from_fn(n, |_, _| rng.gen_bool(p))
        })
        .collect()
}

fn sweep(theorem: &str, scope: &Scope) -> Result<VerifyReport> {
    let mut rec = Recorder::default();
    let mut check = |g: &Graph| -> Result<()> { check_graph(theorem, g, &mut rec) };
    for n in 1..=scope.exhaustive_max_n {
        for g in connected_graphs(n) {
            check(&g)?;
        }
    }
    for g in random_graphs(scope.random_count, scope.random_max_n, scope.seed) {
        check(&g)?;
    }
    Ok(rec.finish(theorem, None))
}

/// Graphs on which the instance-level identities are exercised: `g` and,
/// when small, its line graph.
fn instances(g: &Graph) -> Vec<Graph> {
    let mut out = vec![g.clone()];
    if g.edge_count() > 0 && g.edge_count() <= 16 {
        out.push(build_line_graph(g).clique_graph);
    }
    out
}

fn check_graph(theorem: &str, g: &Graph, rec: &mut Recorder) -> Result<()> {
    match theorem {
        "clique-regular-orders" => {
            let orders = clique_regular_orders(g);
            let w = clique_number(g);
            let mut direct = Vec::new();
            for omega in 2..=w.max(2) {
                if is_clique_regular(g, omega)?.regular {
                    direct.push(omega);
                }
            }
            let pass = orders == direct && orders.iter().all(|&o| o == 2 || o == w);
            rec.sweep(
                theorem,
                pass,
                || format!("orders {orders:?}, direct {direct:?}, clique number {w}"),
                g,
            );
        }
        "line-graph-regularity" => {
            let isolated = (0..g.n()).any(|v| g.degree(v) == 0);
            let l = build_line_graph(g).clique_graph;
            if isolated || l.edge_count() == 0 {
                return Ok(());
            }
            let got = is_clique_regular(&l, 3)?.regular;
            let want = components_allow_three_clique_line(g);
            rec.sweep(
                "omega 3",
                got == want,
                || format!("L 3-clique regular {got}, predicate {want}"),
                g,
            );
            for omega in 4..=g.degree_info().max_degree + 1 {
                let got = is_clique_regular(&l, omega)?.regular;
                let want = degrees_one_or(g, omega);
                rec.sweep(
                    "omega >= 4",
                    got == want,
                    || {
                        format!(
                            "omega {omega}: L clique regular {got}, degrees in {{1, omega}} {want}"
                        )
                    },
                    g,
                );
            }
        }
        "line-graph-isomorphism" => {
            if !g.is_connected() || g.edge_count() < 2 {
                return Ok(());
            }
            let l = build_line_graph(g).clique_graph;
            let c3 = build_clique_graph(&l, 3)?.clique_graph;
            let got = are_isomorphic(&c3, g)?.is_some();
            let cond = ThreeCliqueLineConditions::of(g);
            rec.sweep(
                "omega 3",
                got == cond.all(),
                || format!("C_3(L(G)) = G is {got}, conditions {cond:?}"),
                g,
            );
            let info = g.degree_info();
            for omega in 4..=info.max_degree.max(4) {
                let c = build_clique_graph(&l, omega)?.clique_graph;
                let got = are_isomorphic(&c, g)?.is_some();
                let want = info.k == Some(omega);
                rec.sweep(
                    "omega >= 4",
                    got == want,
                    || format!("omega {omega}: C(L(G)) = G is {got}, G omega-regular {want}"),
                    g,
                );
            }
        }
        "incidence-identities" | "phi-identity" | "bounds" => {
            for h in instances(g) {
                for omega in clique_regular_orders(&h) {
                    check_instance(theorem, &h, omega, rec)?;
                }
            }
        }
        "rca-agreement" => {
            for omega in 2..=clique_number(g) + 1 {
                let (a, b) = rca_decisions(g, omega)?;
                rec.sweep(
                    theorem,
                    a == b,
                    || format!("omega {omega}: definition {a}, theorem {b}"),
                    g,
                );
            }
        }
        _ => unreachable!("dispatched by run"),
    }
    Ok(())
}

fn check_instance(theorem: &str, h: &Graph, omega: usize, rec: &mut Recorder) -> Result<()> {
    match theorem {
        "incidence-identities" => {
            let pass = verify_incidence_identities(h, omega)?;
            rec.sweep(theorem, pass, || format!("omega {omega}"), h);
        }
        "phi-identity" => {
            let pass = verify_phi_identity(h, omega, 3)?;
            rec.sweep(theorem, pass, || format!("omega {omega}"), h);
        }
        _ => {
            let c = build_clique_graph(h, omega)?.clique_graph;
            let values = spectrum_numeric(&c, DEFAULT_TOL)?.values_f64();
            let (lo, hi) = line_graph_extremes(h)?;
            let inter = interlacing_bounds(omega, lo, hi);
            let deg = degree_bounds::<f64>(omega, h.degree_info().max_degree);
            let bad = values
                .iter()
                .find(|&&x| !inter.contains(x, BOUND_TOL) || !deg.contains(x, BOUND_TOL));
            rec.sweep(theorem, bad.is_none(), || {
                format!(
                    "omega {omega}: eigenvalue {:?} outside interlacing {inter:?} or degree {deg:?}",
                    bad
                )
            }, h);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Scope {
        Scope {
            exhaustive_max_n: 4,
            random_count: 200,
            random_max_n: 7,
            seed: 1,
            q: vec![2],
        }
    }

    #[test]
    fn connected_counts() {
        // labeled connected graphs: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).count()).collect();
        assert_eq!(counts, [1, 1, 4, 38, 728]);
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_graphs(20, 8, 3), random_graphs(20, 8, 3));
    }

    #[test]
    fn named_theorems_pass() {
        for t in [
            "rook",
            "triangular",
            "oa",
            "three-graph-classification",
            "gq-duality",
        ] {
            let r = run(t, &small()).unwrap();
            assert!(r.pass, "{t}: {:?}", r.first_failure);
        }
    }

    #[test]
    fn sweeps_pass_on_small_scope() {
        for t in THEOREMS.iter().filter(|t| {
            !matches!(
                **t,
                "rook"
                    | "triangular"
                    | "oa"
                    | "transfer"
                    | "srg-classification"
                    | "gq-duality"
                    | "three-graph-classification"
            )
        }) {
            let r = run(t, &small()).unwrap();
            assert!(r.pass, "{t}: {:?}", r.first_failure);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn unknown_theorem() {
        assert!(matches!(
            run("nope", &small()),
            Err(Error::InvalidArgument(_))
        ));
    }
}

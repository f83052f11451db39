use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};

use super::{char_poly_exact, symmetric_eigenvalues, Polynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::srg::QuadSurd;
use crate::IntPolynomial;

/// Default numeric tolerance for snapping and grouping.
pub const DEFAULT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eigenvalue {
    Exact(QuadSurd),
    /// Numeric value within `tol` of an integer.
    Snapped {
        value: i64,
        tol: f64,
    },
    Float {
        value: f64,
        tol: f64,
    },
}

impl Eigenvalue {
    pub fn to_f64(&self) -> f64 {
        match self {
            Eigenvalue::Exact(q) => q.to_f64(),
            Eigenvalue::Snapped { value, .. } => *value as f64,
            Eigenvalue::Float { value, .. } => *value,
        }
    }

    /// Integer value, from either an exact or a snapped entry.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Eigenvalue::Exact(q) => q.as_integer(),
            Eigenvalue::Snapped { value, .. } => Some(*value),
            Eigenvalue::Float { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Eigenvalue::Exact(_))
    }

    pub fn tol(&self) -> Option<f64> {
        match self {
            Eigenvalue::Exact(_) => None,
            Eigenvalue::Snapped { tol, .. } | Eigenvalue::Float { tol, .. } => Some(*tol),
        }
    }

    fn cmp_desc(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Eigenvalue::Exact(a), Eigenvalue::Exact(b)) => b.cmp(a),
            _ => other
                .to_f64()
                .partial_cmp(&self.to_f64())
                .unwrap_or(Ordering::Equal),
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Exact(q) => write!(f, "{q}"),
            Eigenvalue::Snapped { value, .. } => write!(f, "{value}"),
            Eigenvalue::Float { value, .. } => write!(f, "{value:.9}"),
        }
    }
}

/// Eigenvalues with multiplicities, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<(Eigenvalue, usize)>,
}

impl Spectrum {
    fn from_sorted(mut entries: Vec<(Eigenvalue, usize)>) -> Self {
        entries.retain(|&(_, m)| m > 0);
        entries.sort_by(|a, b| a.0.cmp_desc(&b.0));
        Spectrum { entries }
    }

    /// Merges repeated values and drops zero multiplicities.
    pub fn from_exact(pairs: impl IntoIterator<Item = (QuadSurd, usize)>) -> Self {
        let mut merged: Vec<(QuadSurd, usize)> = Vec::new();
        for (v, m) in pairs {
            match merged.iter_mut().find(|(w, _)| *w == v) {
                Some(slot) => slot.1 += m,
                None => merged.push((v, m)),
            }
        }
        Spectrum::from_sorted(
            merged
                .into_iter()
                .map(|(v, m)| (Eigenvalue::Exact(v), m))
                .collect(),
        )
    }

    pub fn from_integers(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        Spectrum::from_exact(pairs.into_iter().map(|(v, m)| (QuadSurd::integer(v), m)))
    }

    pub fn entries(&self) -> &[(Eigenvalue, usize)] {
        &self.entries
    }

    /// Sum of the multiplicities.
    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(|e| e.0.is_exact())
    }

    pub fn exact_entries(&self) -> Option<Vec<(QuadSurd, usize)>> {
        self.entries
            .iter()
            .map(|&(v, m)| match v {
                Eigenvalue::Exact(q) => Some((q, m)),
                _ => None,
            })
            .collect()
    }

    /// `(value, multiplicity)` when every entry is an integer, exact or
    /// snapped.
    pub fn integer_entries(&self) -> Option<Vec<(i64, usize)>> {
        self.entries
            .iter()
            .map(|&(v, m)| v.as_integer().map(|i| (i, m)))
            .collect()
    }

    pub fn multiplicity_of(&self, value: i64) -> usize {
        self.entries
            .iter()
            .filter(|e| e.0.as_integer() == Some(value))
            .map(|e| e.1)
            .sum()
    }

    pub fn max(&self) -> Option<f64> {
        self.entries.first().map(|e| e.0.to_f64())
    }

    pub fn min(&self) -> Option<f64> {
        self.entries.last().map(|e| e.0.to_f64())
    }

    /// All eigenvalues with repetition, descending, as floats.
    pub fn values_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v.to_f64(), m))
            .collect()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}^{m}")?;
        }
        write!(f, "}}")
    }
}

struct EntryJson<'a>(&'a Eigenvalue, usize);

impl Serialize for EntryJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("value", &self.0.to_string())?;
        map.serialize_entry("multiplicity", &self.1)?;
        map.serialize_entry("exact", &self.0.is_exact())?;
        if let Some(tol) = self.0.tol() {
            map.serialize_entry("tol", &tol)?;
        }
        if let Eigenvalue::Exact(q) = self.0 {
            if !q.is_rational() {
                map.serialize_entry("surd", q)?;
            }
        }
        map.end()
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (v, m) in &self.entries {
            seq.serialize_element(&EntryJson(v, *m))?;
        }
        seq.end()
    }
}

/// Snaps values within `tol` of an integer and merges neighbors closer than
/// `tol`; fails if a merged run spans more than `10·tol`.
pub fn group_eigenvalues(values: &[f64], tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0) {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    let mut entries = Vec::new();
    let mut start = 0;
    while start < sorted.len() {
        let mut end = start + 1;
        while end < sorted.len() && sorted[end - 1] - sorted[end] < tol {
            end += 1;
        }
        let run = &sorted[start..end];
        let span = run[0] - run[run.len() - 1];
        if span > 10.0 * tol {
            return Err(Error::Numeric(format!(
                "eigenvalue cluster near {} spans {span:e}, more than 10·tol",
                run[0]
            )));
        }
        let mean = run.iter().sum::<f64>() / run.len() as f64;
        let rounded = mean.round();
        let value = if (mean - rounded).abs() < tol {
            Eigenvalue::Snapped {
                value: rounded as i64,
                tol,
            }
        } else {
            Eigenvalue::Float { value: mean, tol }
        };
        entries.push((value, run.len()));
        start = end;
    }
    Ok(Spectrum::from_sorted(entries))
}

/// Adjacency spectrum in floating point, snapped and grouped by `tol`.
pub fn spectrum_numeric(g: &Graph, tol: f64) -> Result<Spectrum> {
    let values = symmetric_eigenvalues(&g.adjacency_matrix::<f64>())?;
    group_eigenvalues(&values, tol)
}

/// Exact spectrum where the characteristic polynomial allows: integer roots
/// and conjugate quadratic pairs are certified by exact division; anything
/// else stays numeric.
pub fn spectrum_exact(g: &Graph, tol: f64) -> Result<Spectrum> {
    let p = char_poly_exact(g)?;
    let numeric = spectrum_numeric(g, tol)?;
    certify_spectrum(&p, &numeric, tol)
}

/// Certifies `numeric` against the exact polynomial `p`.
pub fn certify_spectrum(p: &IntPolynomial, numeric: &Spectrum, tol: f64) -> Result<Spectrum> {
    let mut rest = p.clone();
    let mut out: Vec<(Eigenvalue, usize)> = Vec::new();
    let mut floats: Vec<(f64, usize)> = Vec::new();

    for &(v, m) in numeric.entries() {
        match v {
            Eigenvalue::Snapped { value, .. } => {
                let lin = Polynomial::x_plus(BigInt::from(-value));
                let mut count = 0;
                while let Some(q) = rest.div_exact_monic(&lin) {
                    rest = q;
                    count += 1;
                }
                if count != m {
                    return Err(Error::Numeric(format!(
                        "eigenvalue {value}: numeric multiplicity {m}, exact {count}"
                    )));
                }
                out.push((Eigenvalue::Exact(QuadSurd::integer(value)), m));
            }
            Eigenvalue::Float { value, .. } => floats.push((value, m)),
            Eigenvalue::Exact(q) => out.push((Eigenvalue::Exact(q), m)),
        }
    }

    let mut used = vec![false; floats.len()];
    for i in 0..floats.len() {
        if used[i] {
            continue;
        }
        for j in i + 1..floats.len() {
            if used[j] || floats[i].1 != floats[j].1 {
                continue;
            }
            if let Some((t, pr)) = conjugate_pair(floats[i].0, floats[j].0, tol) {
                let quad =
                    Polynomial::new(vec![BigInt::from(pr), BigInt::from(-t), BigInt::from(1)]);
                let mut trial = rest.clone();
                let mut ok = true;
                for _ in 0..floats[i].1 {
                    match trial.div_exact_monic(&quad) {
                        Some(q) => trial = q,
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    rest = trial;
                    let disc = t * t - 4 * pr;
                    let m = floats[i].1;
                    out.push((Eigenvalue::Exact(QuadSurd::new(t, 1, disc, 2)), m));
                    out.push((Eigenvalue::Exact(QuadSurd::new(t, -1, disc, 2)), m));
                    used[i] = true;
                    used[j] = true;
                    break;
                }
            }
        }
    }
    let mut leftover = 0;
    for (i, &(value, m)) in floats.iter().enumerate() {
        if !used[i] {
            out.push((Eigenvalue::Float { value, tol }, m));
            leftover += m;
        }
    }
    if rest.degree() != Some(leftover) {
        return Err(Error::Numeric(
            "numeric spectrum disagrees with the characteristic polynomial".into(),
        ));
    }
    Ok(Spectrum::from_sorted(out))
}

/// Integer trace and norm of a candidate conjugate pair.
fn conjugate_pair(x: f64, y: f64, tol: f64) -> Option<(i64, i64)> {
    let t = x + y;
    let p = x * y;
    let (tr, pr) = (t.round(), p.round());
    let slack = 10.0 * tol * (1.0 + x.abs().max(y.abs()));
    ((t - tr).abs() < slack && (p - pr).abs() < slack && tr * tr - 4.0 * pr > 0.0)
        .then_some((tr as i64, pr as i64))
}

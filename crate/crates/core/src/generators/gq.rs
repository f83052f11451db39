//! Generalized quadrangles over prime fields.
//!
//! Projective points are vectors whose first nonzero coordinate is 1, listed
//! in lexicographic order of their coordinates; GQ points keep that relative
//! order. Lines are sorted point-id lists, themselves sorted.

use std::collections::BTreeSet;

use serde::Serialize;

use super::is_prime;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceStructure {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
    pub s: usize,
    pub t: usize,
}

impl IncidenceStructure {
    /// Lines through each point.
    pub fn pencils(&self) -> Vec<Vec<usize>> {
        let mut through = vec![Vec::new(); self.points];
        for (li, line) in self.lines.iter().enumerate() {
            for &p in line {
                through[p].push(li);
            }
        }
        through
    }

    /// Checks the GQ(s, t) axioms exhaustively.
    pub fn validate(&self) -> Result<()> {
        let (s, t) = (self.s, self.t);
        if s == 0 || t == 0 {
            return Err(Error::invalid("GQ needs s, t >= 1"));
        }
        if self.points != (s + 1) * (s * t + 1) || self.lines.len() != (t + 1) * (s * t + 1) {
            return Err(Error::invalid(format!(
                "GQ({s},{t}) needs {} points and {} lines, got {} and {}",
                (s + 1) * (s * t + 1),
                (t + 1) * (s * t + 1),
                self.points,
                self.lines.len()
            )));
        }
        let mut on_line = vec![vec![false; self.points]; self.lines.len()];
        for (li, line) in self.lines.iter().enumerate() {
            if line.len() != s + 1 {
                return Err(Error::invalid(format!(
                    "line {li} has {} points",
                    line.len()
                )));
            }
            for &p in line {
                if p >= self.points || on_line[li][p] {
                    return Err(Error::invalid(format!("line {li} has a bad point {p}")));
                }
                on_line[li][p] = true;
            }
        }
        let pencils = self.pencils();
        if let Some(p) = (0..self.points).find(|&p| pencils[p].len() != t + 1) {
            return Err(Error::invalid(format!(
                "point {p} is on {} lines",
                pencils[p].len()
            )));
        }
        for a in 0..self.lines.len() {
            for b in a + 1..self.lines.len() {
                let shared = self.lines[a].iter().filter(|&&p| on_line[b][p]).count();
                if shared > 1 {
                    return Err(Error::invalid(format!(
                        "lines {a} and {b} share {shared} points"
                    )));
                }
            }
        }
        for (li, line) in self.lines.iter().enumerate() {
            for p in (0..self.points).filter(|&p| !on_line[li][p]) {
                let meeting = pencils[p]
                    .iter()
                    .filter(|&&m| line.iter().any(|&q| on_line[m][q]))
                    .count();
                if meeting != 1 {
                    return Err(Error::invalid(format!(
                        "point {p} off line {li} sees it through {meeting} lines"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Collinear points are adjacent.
pub fn gq_collinearity_graph(s: &IncidenceStructure) -> Result<Graph> {
    s.validate()?;
    let mut edges = Vec::new();
    for line in &s.lines {
        for (i, &a) in line.iter().enumerate() {
            edges.extend(line[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    Graph::new(s.points, &edges)
}

/// Points and lines swapped: dual point `i` is line `i`, dual line `p` is the
/// pencil of point `p`.
pub fn gq_dual(s: &IncidenceStructure) -> Result<IncidenceStructure> {
    s.validate()?;
    let dual = IncidenceStructure {
        points: s.lines.len(),
        lines: s.pencils(),
        s: s.t,
        t: s.s,
    };
    dual.validate()?;
    Ok(dual)
}

fn projective_points(dim: usize, q: usize) -> Vec<Vec<usize>> {
    let total = q.pow(dim as u32);
    (1..total)
        .map(|mut x| {
            let mut v = vec![0; dim];
            for c in v.iter_mut().rev() {
                *c = x % q;
                x /= q;
            }
            v
        })
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect()
}

fn normalize(v: &mut [usize], q: usize) {
    if let Some(&lead) = v.iter().find(|&&c| c != 0) {
        let inv = (1..q).find(|&i| i * lead % q == 1).expect("prime field");
        for c in v.iter_mut() {
            *c = *c * inv % q;
        }
    }
}

/// Lines spanned by pairs of points that are orthogonal under `form`, on a
/// point set closed under such spans.
fn isotropic_lines(
    points: &[Vec<usize>],
    q: usize,
    form: impl Fn(&[usize], &[usize]) -> usize,
) -> Vec<Vec<usize>> {
    let index: std::collections::HashMap<&[usize], usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut lines = BTreeSet::new();
    for (i, p) in points.iter().enumerate() {
        for (j, r) in points.iter().enumerate().skip(i + 1) {
            if form(p, r) != 0 {
                continue;
            }
            let mut line: Vec<usize> = vec![i, j];
            for a in 1..q {
                let mut v: Vec<usize> = p.iter().zip(r).map(|(x, y)| (a * x + y) % q).collect();
                normalize(&mut v, q);
                line.push(*index.get(v.as_slice()).expect("span stays on the quadric"));
            }
            line.sort_unstable();
            line.dedup();
            lines.insert(line);
        }
    }
    lines.into_iter().collect()
}

/// W(q): totally isotropic lines of `x₀y₁ − x₁y₀ + x₂y₃ − x₃y₂` on PG(3, q),
/// a GQ(q, q).
pub fn gq_symplectic(q: usize) -> Result<IncidenceStructure> {
    if !is_prime(q) {
        return Err(Error::Unsupported(format!(
            "symplectic GQ needs a prime q, got {q}"
        )));
    }
    let points = projective_points(4, q);
    let form = |x: &[usize], y: &[usize]| {
        (x[0] * y[1] + (q - x[1]) * y[0] + x[2] * y[3] + (q - x[3]) * y[2]) % q
    };
    let gq = IncidenceStructure {
        points: points.len(),
        lines: isotropic_lines(&points, q, form),
        s: q,
        t: q,
    };
    gq.validate()?;
    Ok(gq)
}

/// Q⁻(5, q): singular points and lines of `x₀x₁ + x₂x₃ + f(x₄, x₅)` with
/// `f` irreducible (`x² + xy + y²` for q = 2, `x² + y²` for q = 3), a
/// GQ(q, q²).
pub fn gq_elliptic(q: usize) -> Result<IncidenceStructure> {
    let quad = move |x: &[usize]| -> usize {
        let f = match q {
            2 => x[4] * x[4] + x[4] * x[5] + x[5] * x[5],
            _ => x[4] * x[4] + x[5] * x[5],
        };
        (x[0] * x[1] + x[2] * x[3] + f) % q
    };
    if q != 2 && q != 3 {
        return Err(Error::Unsupported(format!(
            "elliptic GQ only for q in {{2, 3}}, got {q}"
        )));
    }
    let points: Vec<Vec<usize>> = projective_points(6, q)
        .into_iter()
        .filter(|v| quad(v) == 0)
        .collect();
    // polar form B(x, y) = Q(x + y) − Q(x) − Q(y)
    let polar = |x: &[usize], y: &[usize]| {
        let sum: Vec<usize> = x.iter().zip(y).map(|(a, b)| (a + b) % q).collect();
        (quad(&sum) + 2 * q - quad(x) - quad(y)) % q
    };
    let gq = IncidenceStructure {
        points: points.len(),
        lines: isotropic_lines(&points, q, polar),
        s: q,
        t: q * q,
    };
    gq.validate()?;
    Ok(gq)
}

//! Spectrum of the ω-clique graph of a k-regular ω-clique-regular graph,
//! predicted from the host alone:
//! `p(C_ω; x) = (x + ω)^{m−n} · p(Γ; x + ω − k/(ω−1))`, `m = nk/(ω(ω−1))`.

use num_bigint::BigInt;

use super::{Polynomial, Spectrum};
use crate::error::{Error, Result};
use crate::srg::QuadSurd;
use crate::IntPolynomial;

/// Checks divisibility and returns `(k/(ω−1), m)`.
pub fn clique_graph_order(n: u64, k: u64, omega: u64) -> Result<(u64, u64)> {
    if omega < 2 {
        return Err(Error::invalid("omega must be at least 2"));
    }
    if !k.is_multiple_of(omega - 1) {
        return Err(Error::NotApplicable(format!(
            "k = {k} is not divisible by omega - 1 = {}",
            omega - 1
        )));
    }
    let nk = n
        .checked_mul(k)
        .ok_or_else(|| Error::invalid("n·k overflows"))?;
    let w = omega * (omega - 1);
    if nk % w != 0 {
        return Err(Error::NotApplicable(format!(
            "n·k = {nk} is not divisible by omega(omega - 1) = {w}"
        )));
    }
    Ok((k / (omega - 1), nk / w))
}

pub fn predicted_clique_charpoly(
    p: &IntPolynomial,
    n: usize,
    k: usize,
    omega: usize,
) -> Result<IntPolynomial> {
    if p.degree() != Some(n) || !p.is_monic() {
        return Err(Error::invalid(format!(
            "expected a monic polynomial of degree {n}"
        )));
    }
    let (per_clique, m) = clique_graph_order(n as u64, k as u64, omega as u64)?;
    let shift = BigInt::from(omega as i64 - per_clique as i64);
    let shifted = p.shift(&shift);
    let lin = Polynomial::x_plus(BigInt::from(omega));
    let m = m as usize;
    if m >= n {
        Ok(&lin.pow((m - n) as u64) * &shifted)
    } else {
        shifted
            .div_exact_monic(&lin.pow((n - m) as u64))
            .ok_or_else(|| {
                Error::TheoremViolation(format!(
                    "(x + {omega})^{} does not divide the shifted polynomial",
                    n - m
                ))
            })
    }
}

/// Shifts every eigenvalue by `k/(ω−1) − ω` and adjusts the multiplicity of
/// `−ω` by `m − n`. The input must be exact and contain `k`.
pub fn predicted_clique_spectrum(spec: &Spectrum, k: usize, omega: usize) -> Result<Spectrum> {
    let entries = spec
        .exact_entries()
        .ok_or_else(|| Error::invalid("predicted spectra need an exact input spectrum"))?;
    let n = spec.dimension();
    if spec.multiplicity_of(k as i64) == 0 {
        return Err(Error::invalid(format!("spectrum does not contain k = {k}")));
    }
    let (per_clique, m) = clique_graph_order(n as u64, k as u64, omega as u64)?;
    let shift = per_clique as i64 - omega as i64;
    let minus_omega = QuadSurd::integer(-(omega as i64));

    let mut shifted: Vec<(QuadSurd, i128)> = entries
        .into_iter()
        .map(|(v, mult)| (v.add_int(shift), mult as i128))
        .collect();
    let extra = m as i128 - n as i128;
    match shifted.iter_mut().find(|(v, _)| *v == minus_omega) {
        Some(slot) => slot.1 += extra,
        None => shifted.push((minus_omega, extra)),
    }
    if let Some((_, mult)) = shifted.iter().find(|(v, _)| *v == minus_omega) {
        if *mult < 0 {
            return Err(Error::TheoremViolation(format!(
                "eigenvalue -{omega} would have multiplicity {mult}"
            )));
        }
    }
    Ok(Spectrum::from_exact(
        shifted.into_iter().map(|(v, mult)| (v, mult as usize)),
    ))
}

/// Floating-point counterpart of [`predicted_clique_spectrum`] on an
/// eigenvalue list; removing copies of `−ω` matches within `tol`. Ascending.
pub fn predicted_clique_values(
    values: &[f64],
    k: usize,
    omega: usize,
    tol: f64,
) -> Result<Vec<f64>> {
    let n = values.len();
    let (per_clique, m) = clique_graph_order(n as u64, k as u64, omega as u64)?;
    let shift = per_clique as f64 - omega as f64;
    let minus_omega = -(omega as f64);
    let mut out: Vec<f64> = values.iter().map(|v| v + shift).collect();
    let m = m as usize;
    if m >= n {
        out.extend(std::iter::repeat_n(minus_omega, m - n));
    } else {
        for _ in 0..n - m {
            let pos = out
                .iter()
                .position(|v| (v - minus_omega).abs() <= tol)
                .ok_or_else(|| {
                    Error::TheoremViolation(format!("too few eigenvalues near -{omega} to cancel"))
                })?;
            out.swap_remove(pos);
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

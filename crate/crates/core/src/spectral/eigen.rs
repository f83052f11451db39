//! Dense symmetric eigenvalues: Householder reduction to tridiagonal form,
//! then implicit QL with Wilkinson-style shifts.

use num_traits::Float;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 60;

/// All eigenvalues of a real symmetric matrix, ascending. Only the lower
/// triangle is read.
pub fn symmetric_eigenvalues<F: Float>(matrix: &[Vec<F>]) -> Result<Vec<F>> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::invalid("matrix must be square"));
    }
    if matrix.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::Numeric("matrix has non-finite entries".into()));
    }
    let mut a = matrix.to_vec();
    let (mut d, mut e) = tridiagonalize(&mut a);
    tridiagonal_ql(&mut d, &mut e)?;
    d.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(d)
}

fn tridiagonalize<F: Float>(a: &mut [Vec<F>]) -> (Vec<F>, Vec<F>) {
    let n = a.len();
    let two = F::one() + F::one();
    let mut d = vec![F::zero(); n];
    let mut e = vec![F::zero(); n];
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = F::zero();
        if l > 0 {
            let scale = (0..=l).fold(F::zero(), |s, k| s + a[i][k].abs());
            if scale == F::zero() {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] = a[i][k] / scale;
                    h = h + a[i][k] * a[i][k];
                }
                let f = a[i][l];
                let g = if f >= F::zero() { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h = h - f * g;
                a[i][l] = f - g;
                let mut f = F::zero();
                for j in 0..=l {
                    let mut g = F::zero();
                    for k in 0..=j {
                        g = g + a[j][k] * a[i][k];
                    }
                    for k in j + 1..=l {
                        g = g + a[k][j] * a[i][k];
                    }
                    e[j] = g / h;
                    f = f + e[j] * a[i][j];
                }
                let hh = f / (h * two);
                for j in 0..=l {
                    let f = a[i][j];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[j][k] = a[j][k] - (f * e[k] + g * a[i][k]);
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
    }
    for i in 0..n {
        d[i] = a[i][i];
    }
    (d, e)
}

/// `d` is the diagonal, `e[i]` the entry between rows `i − 1` and `i`.
fn tridiagonal_ql<F: Float>(d: &mut [F], e: &mut [F]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    let two = F::one() + F::one();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = F::zero();

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= F::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_SWEEPS {
                return Err(Error::Numeric(format!(
                    "QL iteration did not converge for eigenvalue {l}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(F::one());
            g = d[m] - d[l] + e[l] / (g + if g >= F::zero() { r.abs() } else { -r.abs() });
            let (mut s, mut c, mut p) = (F::one(), F::one(), F::zero());
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == F::zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = F::zero();
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = F::zero();
        }
    }
    Ok(())
}

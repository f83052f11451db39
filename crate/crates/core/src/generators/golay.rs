use crate::graph::Graph;

const Q: u8 = 3;
const LEN: usize = 11;
const DIM: usize = 6;
const REDUNDANCY: usize = LEN - DIM;

/// Generator polynomial `2 + x² + 2x³ + x⁴ + x⁵` of the cyclic ternary
/// Golay code, coefficients ascending.
const GOLAY_POLY: [u8; REDUNDANCY + 1] = [2, 0, 1, 2, 1, 1];

/// Generator matrix of the ternary Golay code over GF(3): row `i` holds the
/// coefficients of `xⁱ·g(x)`.
pub const GOLAY_GENERATOR: [[u8; LEN]; DIM] = [
    [2, 0, 1, 2, 1, 1, 0, 0, 0, 0, 0],
    [0, 2, 0, 1, 2, 1, 1, 0, 0, 0, 0],
    [0, 0, 2, 0, 1, 2, 1, 1, 0, 0, 0],
    [0, 0, 0, 2, 0, 1, 2, 1, 1, 0, 0],
    [0, 0, 0, 0, 2, 0, 1, 2, 1, 1, 0],
    [0, 0, 0, 0, 0, 2, 0, 1, 2, 1, 1],
];

/// Remainder of `v(x)` modulo the monic `g(x)`.
fn syndrome(v: &[u8; LEN]) -> [u8; REDUNDANCY] {
    let mut r = *v;
    for top in (REDUNDANCY..LEN).rev() {
        let c = r[top];
        if c != 0 {
            for (i, &gi) in GOLAY_POLY.iter().enumerate() {
                let idx = top - REDUNDANCY + i;
                r[idx] = (r[idx] + Q * Q - c * gi) % Q;
            }
        }
    }
    let mut out = [0; REDUNDANCY];
    out.copy_from_slice(&r[..REDUNDANCY]);
    out
}

fn syndrome_index(s: &[u8; REDUNDANCY]) -> usize {
    s.iter()
        .rev()
        .fold(0, |acc, &c| acc * Q as usize + c as usize)
}

/// Every vector of GF(3)¹¹ lies within distance 2 of exactly one codeword:
/// minimum weight 5 and `3⁶ · |ball of radius 2| = 3¹¹`.
fn assert_perfect() {
    for row in &GOLAY_GENERATOR {
        assert_eq!(
            syndrome(row),
            [0; REDUNDANCY],
            "generator row outside the code"
        );
    }
    let mut min_weight = LEN;
    for msg in 1..3usize.pow(DIM as u32) {
        let mut word = [0u8; LEN];
        let mut m = msg;
        for row in &GOLAY_GENERATOR {
            let a = (m % 3) as u8;
            m /= 3;
            for (w, &g) in word.iter_mut().zip(row) {
                *w = (*w + a * g) % Q;
            }
        }
        min_weight = min_weight.min(word.iter().filter(|&&c| c != 0).count());
    }
    assert_eq!(min_weight, 5, "Golay code has minimum distance 5");
    let ball = 1 + LEN * 2 + LEN * (LEN - 1) / 2 * 4;
    assert_eq!(3usize.pow(DIM as u32) * ball, 3usize.pow(LEN as u32));
}

/// Coset graph of the ternary Golay code: the 243 cosets, adjacent when
/// they differ by a weight-1 vector. Vertex of syndrome `Σ sᵢxⁱ` is `Σ sᵢ3ⁱ`.
pub fn golay_coset_graph() -> Graph {
    assert_perfect();
    let n = 3usize.pow(REDUNDANCY as u32);
    let unit_syndromes: Vec<[u8; REDUNDANCY]> = (0..LEN)
        .flat_map(|i| {
            (1..Q).map(move |a| {
                let mut e = [0u8; LEN];
                e[i] = a;
                syndrome(&e)
            })
        })
        .collect();
    let mut edges = Vec::with_capacity(n * unit_syndromes.len() / 2);
    for v in 0..n {
        let mut s = [0u8; REDUNDANCY];
        let mut x = v;
        for c in s.iter_mut() {
            *c = (x % 3) as u8;
            x /= 3;
        }
        for e in &unit_syndromes {
            let mut t = s;
            for (a, b) in t.iter_mut().zip(e) {
                *a = (*a + b) % Q;
            }
            let w = syndrome_index(&t);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::new(n, &edges).expect("syndromes index the 243 cosets")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg::{classify_srg, SrgParams};

    #[test]
    fn generator_rows_are_shifts_of_g() {
        for (i, row) in GOLAY_GENERATOR.iter().enumerate() {
            let mut want = [0u8; LEN];
            want[i..i + GOLAY_POLY.len()].copy_from_slice(&GOLAY_POLY);
            assert_eq!(*row, want);
        }
    }

    #[test]
    fn g_divides_x11_minus_1() {
        // x^11 ≡ 1 mod g: reduce x^10, multiply by x, reduce again
        let mut v = [0u8; LEN];
        v[LEN - 1] = 1;
        let s10 = syndrome(&v);
        let mut shifted = [0u8; LEN];
        shifted[1..=REDUNDANCY].copy_from_slice(&s10);
        assert_eq!(syndrome(&shifted), [1, 0, 0, 0, 0]);
    }

    #[test]
    fn coset_graph_is_srg() {
        let g = golay_coset_graph();
        assert_eq!(
            classify_srg(&g).unwrap().params,
            SrgParams::new(243, 22, 1, 2).unwrap()
        );
    }
}

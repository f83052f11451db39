use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

/// Exact real `(a + b√D)/c`.
///
/// Normal form: `c > 0`, `D` squarefree and greater than 1 whenever
/// `b ≠ 0`, `gcd(a, b, c) = 1`; rationals have `b = 0, D = 1`. Normal form
/// is unique, so structural equality is value equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuadSurd {
    a: i64,
    b: i64,
    #[serde(rename = "D")]
    d: i64,
    c: i64,
}

fn square_part(mut d: i64) -> (i64, i64) {
    // returns (s, r) with d = s²·r, r squarefree
    let mut s = 1;
    let mut p = 2;
    while p * p <= d {
        while d % (p * p) == 0 {
            d /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, d)
}

impl QuadSurd {
    /// `(a + b√d)/c` for any `d ≥ 0`, `c ≠ 0`.
    pub fn new(a: i64, b: i64, d: i64, c: i64) -> Self {
        assert!(c != 0, "zero denominator");
        assert!(d >= 0, "negative radicand");
        let (s, r) = square_part(d);
        let (mut a, mut b, mut d) = if b == 0 || d == 0 {
            (a, 0, 1)
        } else if r == 1 {
            (a + b * s, 0, 1)
        } else {
            (a, b * s, r)
        };
        let mut c = c;
        if c < 0 {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if g > 1 {
            a /= g;
            b /= g;
            c /= g;
        }
        if b == 0 {
            d = 1;
        }
        QuadSurd { a, b, d, c }
    }

    pub fn integer(v: i64) -> Self {
        QuadSurd::new(v, 0, 1, 1)
    }

    pub fn rational(num: i64, den: i64) -> Self {
        QuadSurd::new(num, 0, 1, den)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.b == 0 && self.c == 1).then_some(self.a)
    }

    pub fn to_f64(&self) -> f64 {
        (self.a as f64 + self.b as f64 * (self.d as f64).sqrt()) / self.c as f64
    }

    /// Same value with `√D` negated.
    pub fn conjugate(&self) -> Self {
        QuadSurd {
            b: -self.b,
            ..*self
        }
    }

    fn common_radicand(&self, other: &Self) -> Option<i64> {
        match (self.b, other.b) {
            (0, 0) => Some(1),
            (0, _) => Some(other.d),
            (_, 0) => Some(self.d),
            _ if self.d == other.d => Some(self.d),
            _ => None,
        }
    }

    /// Sum, when both operands live in the same quadratic field.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        let c = self.c.checked_mul(other.c)?;
        let a = self
            .a
            .checked_mul(other.c)?
            .checked_add(other.a.checked_mul(self.c)?)?;
        let b = self
            .b
            .checked_mul(other.c)?
            .checked_add(other.b.checked_mul(self.c)?)?;
        Some(QuadSurd::new(a, b, d, c))
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&-*other)
    }

    /// Product, when both operands live in the same quadratic field.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        let a = self
            .a
            .checked_mul(other.a)?
            .checked_add(self.b.checked_mul(other.b)?.checked_mul(d)?)?;
        let b = self
            .a
            .checked_mul(other.b)?
            .checked_add(self.b.checked_mul(other.a)?)?;
        Some(QuadSurd::new(a, b, d, self.c.checked_mul(other.c)?))
    }

    pub fn add_int(&self, v: i64) -> Self {
        QuadSurd::new(self.a + v * self.c, self.b, self.d, self.c)
    }
}

impl std::ops::Neg for QuadSurd {
    type Output = QuadSurd;

    fn neg(self) -> QuadSurd {
        QuadSurd {
            a: -self.a,
            b: -self.b,
            ..self
        }
    }
}

/// Sign of `p + q√d` for `d ≥ 0`.
fn sign2(p: &BigInt, q: &BigInt, d: &BigInt) -> Ordering {
    let zero = BigInt::zero();
    let sp = p.cmp(&zero);
    let sq = if d.is_zero() {
        Ordering::Equal
    } else {
        q.cmp(&zero)
    };
    if sq == Ordering::Equal || sp == sq {
        return if sp == Ordering::Equal { sq } else { sp };
    }
    if sp == Ordering::Equal {
        return sq;
    }
    // opposite signs: compare p² with q²d
    match (p * p).cmp(&(q * q * d)) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `p + q√d1 + r√d2`.
fn sign3(p: &BigInt, q: &BigInt, d1: &BigInt, r: &BigInt, d2: &BigInt) -> Ordering {
    // sign of t = q√d1 + r√d2 first, by comparing squares
    let zero = BigInt::zero();
    let st = {
        let a = q.cmp(&zero);
        let b = r.cmp(&zero);
        if a == b || b == Ordering::Equal {
            a
        } else if a == Ordering::Equal {
            b
        } else {
            match (q * q * d1).cmp(&(r * r * d2)) {
                Ordering::Greater => a,
                Ordering::Less => b,
                Ordering::Equal => Ordering::Equal,
            }
        }
    };
    let sp = p.cmp(&zero);
    if st == Ordering::Equal || sp == st {
        return if sp == Ordering::Equal { st } else { sp };
    }
    if sp == Ordering::Equal {
        return st;
    }
    // compare p² with t² = q²d1 + r²d2 + 2qr√(d1d2)
    let diff = sign2(
        &(p * p - q * q * d1 - r * r * d2),
        &(BigInt::from(-2) * q * r),
        &(d1 * d2),
    );
    match diff {
        Ordering::Greater => sp,
        Ordering::Less => st,
        Ordering::Equal => Ordering::Equal,
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        // self − other = (a1c2 − a2c1)/(c1c2) + (b1c2/(c1c2))√d1 − (b2c1/(c1c2))√d2
        let big = BigInt::from;
        let p = big(self.a) * big(other.c) - big(other.a) * big(self.c);
        let q = big(self.b) * big(other.c);
        let r = -(big(other.b) * big(self.c));
        if self.d == other.d {
            sign2(&p, &(q + r), &big(self.d))
        } else {
            sign3(&p, &q, &big(self.d), &r, &big(other.d))
        }
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            return if self.c == 1 {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.c)
            };
        }
        let coeff = if self.b.abs() == 1 {
            String::new()
        } else {
            self.b.abs().to_string()
        };
        let sign = if self.b < 0 { "-" } else { "+" };
        let head = if self.a == 0 {
            if self.b < 0 {
                "-".to_string()
            } else {
                String::new()
            }
        } else {
            format!("{}{sign}", self.a)
        };
        write!(f, "({head}{coeff}√{})", self.d)?;
        if self.c != 1 {
            write!(f, "/{}", self.c)?;
        }
        Ok(())
    }
}

/// Integer square root when `v` is a perfect square.
pub(crate) fn exact_sqrt(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    let r = BigInt::from(v).sqrt();
    let r: i64 = r.try_into().ok()?;
    (r * r == v).then_some(r)
}

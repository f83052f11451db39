//! Scalar abstractions shared by the numeric modules.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, Num, One, Zero};

/// Commutative ring with identity. Enough for polynomial arithmetic,
/// division by monic polynomials and division-free determinants.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

macro_rules! impl_ring_prim {
    ($($t:ty),*) => {
        $(impl Ring for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        })*
    };
}

impl_ring_prim!(i32, i64, i128, f32, f64);

impl Ring for num_bigint::BigInt {
    fn from_i64(v: i64) -> Self {
        v.into()
    }
}

impl<T> Ring for num_rational::Ratio<T>
where
    T: Clone + Debug + num_integer::Integer + num_traits::Signed + From<i64>,
{
    fn from_i64(v: i64) -> Self {
        num_rational::Ratio::from_integer(T::from(v))
    }
}

/// Ordered field-like scalar for closed-form bound evaluation: `f32`,
/// `f64`, `Rational64`, `BigRational`.
pub trait Scalar: Num + Clone + Debug + PartialOrd + FromPrimitive {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer is representable")
    }

    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for f32 {
    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for f64 {
    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for num_rational::Rational64 {
    fn to_f64_lossy(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Scalar for num_rational::BigRational {
    fn to_f64_lossy(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Binomial coefficient in `u64`; panics on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};

/// Numeric type used for point values and discrepancies.
///
/// Implemented for `f32`, `f64` and exact rationals. Floating types give
/// rounded presentation values; `Rational` gives exact results.
pub trait Scalar: Clone + PartialOrd + Num + FromPrimitive + Debug {}

impl<T> Scalar for T where T: Clone + PartialOrd + Num + FromPrimitive + Debug {}

/// `Σ digits[j] base^{-j-1}`, evaluated by Horner from the least significant digit.
pub fn digits_value<T: Scalar>(digits: &[u32], base: u32) -> T {
    let b = T::from_u32(base).expect("base representable");
    digits.iter().rev().fold(T::zero(), |acc, &d| {
        (acc + T::from_u32(d).expect("digit representable")) / b.clone()
    })
}

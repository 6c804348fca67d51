use crate::error::{Error, Result};
use crate::scalar::{digits_value, Scalar};
use crate::Rational;

/// One coordinate as base-`b` digits `y_1, y_2, ...`, representing `Σ y_j b^{-j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitCoordinate {
    base: u32,
    digits: Vec<u32>,
}

impl DigitCoordinate {
    pub fn new(base: u32, digits: Vec<u32>) -> Self {
        debug_assert!(digits.iter().all(|&d| d < base));
        DigitCoordinate { base, digits }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn precision(&self) -> usize {
        self.digits.len()
    }

    /// Integer formed by the first `depth` digits (the anchor `a` of the
    /// elementary interval of length `b^{-depth}` containing this value).
    pub fn prefix_value(&self, depth: usize) -> u64 {
        self.digits[..depth]
            .iter()
            .fold(0u64, |acc, &d| acc * self.base as u64 + d as u64)
    }

    pub fn value<T: Scalar>(&self) -> T {
        digits_value(&self.digits, self.base)
    }
}

/// A point of `[0,1)^s` as exact digit streams.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitPoint {
    coords: Vec<DigitCoordinate>,
}

impl DigitPoint {
    pub fn new(coords: Vec<DigitCoordinate>) -> Self {
        DigitPoint { coords }
    }

    /// Convenience constructor for a common base.
    pub fn from_digits(base: u32, coords: Vec<Vec<u32>>) -> Self {
        DigitPoint {
            coords: coords
                .into_iter()
                .map(|d| DigitCoordinate::new(base, d))
                .collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coordinate(&self, i: usize) -> &DigitCoordinate {
        &self.coords[i]
    }

    pub fn coordinates(&self) -> &[DigitCoordinate] {
        &self.coords
    }

    /// Smallest digit count over the coordinates.
    pub fn precision(&self) -> usize {
        self.coords
            .iter()
            .map(DigitCoordinate::precision)
            .min()
            .unwrap_or(0)
    }

    /// `[x]_{b,m}`: keeps the first `m` digits of each coordinate.
    pub fn truncate(&self, m: usize) -> Result<DigitPoint> {
        let max = self.precision();
        if m < 1 || m > max {
            return Err(Error::PrecisionOutOfRange { precision: m, max });
        }
        Ok(DigitPoint {
            coords: self
                .coords
                .iter()
                .map(|c| DigitCoordinate::new(c.base, c.digits[..m].to_vec()))
                .collect(),
        })
    }

    /// Pads every coordinate with zero digits up to `m` (values unchanged).
    pub fn padded(&self, m: usize) -> DigitPoint {
        DigitPoint {
            coords: self
                .coords
                .iter()
                .map(|c| {
                    let mut d = c.digits.clone();
                    if d.len() < m {
                        d.resize(m, 0);
                    }
                    DigitCoordinate::new(c.base, d)
                })
                .collect(),
        }
    }

    /// Coordinate values in the requested scalar type; lossy for floats.
    pub fn to_real<T: Scalar>(&self) -> Vec<T> {
        self.coords.iter().map(DigitCoordinate::value).collect()
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.to_real()
    }
}

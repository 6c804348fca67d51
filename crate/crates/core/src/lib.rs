//! Halton-type low-discrepancy sequences built from global function fields,
//! with exact verification of their net structure and star discrepancy.
//!
//! A point is `x_n = φ(f_n)`: the index `n` selects a function `f_n` from the
//! nested Riemann–Roch basis of `L(m P_inf)`, and `φ` reads off the local
//! expansions of `f_n` at places `P_1, ..., P_s` as digit streams.
//!
//! ```
//! use ffhalton::{FunctionFieldModel, PlaceSpec, Construction};
//!
//! let model = FunctionFieldModel::parse("rational(q=2)").unwrap();
//! let places = model.places(&PlaceSpec::parse("x,x^2+x+1").unwrap()).unwrap();
//! let seq = Construction::new(model, places).unwrap();
//! let p = seq.point(11, 4).unwrap();
//! assert_eq!(p.coordinate(1).digits(), &[1, 0, 1, 1]);
//! ```

pub mod algebra;
pub mod cli;
mod error;
pub mod function_field;
mod scalar;
pub mod sequence;
pub mod verify;

pub use algebra::{DigitBijection, Field, FieldElement, Polynomial, ResidueElement, ResidueField};
pub use error::{Error, Result};
pub use function_field::{Element, FunctionFieldModel, Place, PlaceSpec};
pub use scalar::{digits_value, Scalar};
pub use sequence::{Construction, DigitCoordinate, DigitPoint, SequenceConfig};

/// Exact rational scalar used for discrepancies and exact point values.
pub type Rational = num_rational::BigRational;

/// Double-precision presentation scalar.
pub type Real = f64;

/// Single-precision presentation scalar.
pub type Real32 = f32;

/// A point rendered in double precision.
pub type RealPoint = Vec<Real>;

/// A point with exact rational coordinates.
pub type RationalPoint = Vec<Rational>;

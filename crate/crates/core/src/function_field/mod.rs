//! Concrete function field models: places, local expansions and the nested
//! Riemann–Roch basis of `L(m P_inf)`.

mod model;
mod place;
mod series;

pub use model::{Element, FunctionFieldModel, ModelKind};
pub use place::{Place, PlaceKind, PlaceSpec};
pub use series::{hensel_sqrt, PowerSeries};

//! The Halton-type sequence `x_n = φ(f_n)` as exact digit streams, the
//! classical Halton baseline and truncation.

mod halton;
mod point;

pub use halton::{halton_classical, radical_inverse_digits};
pub use point::{DigitCoordinate, DigitPoint};

use rayon::prelude::*;

use crate::algebra::DigitBijection;
use crate::error::{Error, Result};
use crate::function_field::{Element, FunctionFieldModel, Place};

/// Largest number of base-`q` digits per coordinate.
pub const MAX_PRECISION: usize = 64;

/// A model with its chosen places and digit bijection `η`.
#[derive(Clone, Debug)]
pub struct Construction {
    model: FunctionFieldModel,
    places: Vec<Place>,
    eta: DigitBijection,
}

impl Construction {
    pub fn new(model: FunctionFieldModel, places: Vec<Place>) -> Result<Self> {
        if places.is_empty() {
            return Err(Error::TooSmall { min: 1, got: 0 });
        }
        for (i, p) in places.iter().enumerate() {
            if places[..i].contains(p) {
                return Err(Error::DuplicatePlace(p.to_string()));
            }
        }
        let eta = DigitBijection::identity(model.field().order() as u64);
        Ok(Construction { model, places, eta })
    }

    /// Uses `η = canonical ∘ eta`; `eta` must fix 0.
    pub fn with_eta(mut self, eta: DigitBijection) -> Result<Self> {
        if eta.size() != self.base() as u64 || eta.forward(0)? != 0 {
            return Err(Error::InvalidBijection(
                "eta must be a bijection of Z_q fixing 0".into(),
            ));
        }
        self.eta = eta;
        Ok(self)
    }

    pub fn model(&self) -> &FunctionFieldModel {
        &self.model
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn dimension(&self) -> usize {
        self.places.len()
    }

    pub fn base(&self) -> u32 {
        self.model.field().order()
    }

    pub fn genus(&self) -> usize {
        self.model.genus()
    }

    /// Place degrees `e = (e_1, ..., e_s)`.
    pub fn degrees(&self) -> Vec<usize> {
        self.places.iter().map(Place::degree).collect()
    }

    /// `f_n`.
    pub fn element(&self, n: u64) -> Element {
        self.model
            .element_from_index_with(n, &self.eta)
            .expect("eta validated on construction")
    }

    /// `φ(u)` truncated to `precision` base-`q` digits per coordinate.
    pub fn phi(&self, u: &Element, precision: usize) -> Result<DigitPoint> {
        if !(1..=MAX_PRECISION).contains(&precision) {
            return Err(Error::PrecisionOutOfRange {
                precision,
                max: MAX_PRECISION,
            });
        }
        let base = self.base();
        let coords = self
            .places
            .iter()
            .map(|place| {
                let e = place.degree();
                let residues = self
                    .model
                    .local_expansion(u, place, precision.div_ceil(e))?;
                let mut digits = Vec::with_capacity(residues.len() * e);
                for r in &residues {
                    place.residue_field().sigma_digits(r, &mut digits)?;
                }
                digits.truncate(precision);
                Ok(DigitCoordinate::new(base, digits))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DigitPoint::new(coords))
    }

    /// `x_n = φ(f_n)` with `precision` digits per coordinate.
    pub fn point(&self, n: u64, precision: usize) -> Result<DigitPoint> {
        self.phi(&self.element(n), precision)
    }

    /// Points `start .. start + count`, evaluated in parallel, in index order.
    pub fn points(&self, start: u64, count: u64, precision: usize) -> Result<Vec<DigitPoint>> {
        let end = start
            .checked_add(count)
            .ok_or_else(|| Error::InvalidParameter("index range overflows u64".into()))?;
        (start..end)
            .into_par_iter()
            .map(|n| self.point(n, precision))
            .collect()
    }
}

/// A construction plus the window of indices and the digit precision to emit.
#[derive(Clone, Debug)]
pub struct SequenceConfig {
    pub construction: Construction,
    pub precision: usize,
    pub start: u64,
    pub count: u64,
}

impl SequenceConfig {
    pub fn new(
        construction: Construction,
        precision: usize,
        start: u64,
        count: u64,
    ) -> Result<Self> {
        if !(1..=MAX_PRECISION).contains(&precision) {
            return Err(Error::PrecisionOutOfRange {
                precision,
                max: MAX_PRECISION,
            });
        }
        Ok(SequenceConfig {
            construction,
            precision,
            start,
            count,
        })
    }

    pub fn point(&self, n: u64) -> Result<DigitPoint> {
        self.construction.point(n, self.precision)
    }

    /// The configured window; equal to calling `point` on each index.
    pub fn generate(&self) -> Result<Vec<DigitPoint>> {
        self.construction
            .points(self.start, self.count, self.precision)
    }

    /// Sequential iterator over the configured window.
    pub fn iter(&self) -> impl Iterator<Item = Result<DigitPoint>> + '_ {
        (self.start..self.start.saturating_add(self.count)).map(|n| self.point(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::function_field::{PlaceKind, PlaceSpec};

    fn construction(model: &str, places: &str) -> Construction {
        let model = FunctionFieldModel::parse(model).unwrap();
        let places = model.places(&PlaceSpec::parse(places).unwrap()).unwrap();
        Construction::new(model, places).unwrap()
    }

    fn reals(p: &DigitPoint) -> Vec<f64> {
        p.to_real::<f64>()
    }

    #[test]
    fn origin_at_zero() {
        for (m, p) in [
            ("rational(q=2)", "auto:s=3"),
            ("hyperelliptic(q=5, f=x^3+x+1)", "auto:s=2"),
        ] {
            let c = construction(m, p);
            assert!(c
                .point(0, 6)
                .unwrap()
                .coordinates()
                .iter()
                .all(|x| x.digits().iter().all(|&d| d == 0)));
        }
    }

    #[test]
    fn single_place_examples() {
        let c = construction("rational(q=2)", "x");
        assert_eq!(c.point(5, 3).unwrap().coordinate(0).digits(), &[1, 0, 1]);
        assert_eq!(reals(&c.point(5, 3).unwrap()), [0.625]);
        let c = construction("rational(q=2)", "x+1");
        assert_eq!(c.point(5, 3).unwrap().coordinate(0).digits(), &[0, 0, 1]);
        let c = construction("rational(q=2)", "x^2+x+1");
        assert_eq!(
            c.point(11, 4).unwrap().coordinate(0).digits(),
            &[1, 0, 1, 1]
        );
        assert_eq!(reals(&c.point(11, 4).unwrap()), [11.0 / 16.0]);
    }

    #[test]
    fn odd_precision_with_quadratic_place() {
        let c = construction("rational(q=2)", "x^2+x+1");
        assert_eq!(c.point(11, 3).unwrap().coordinate(0).digits(), &[1, 0, 1]);
    }

    #[test]
    fn first_points_two_linear_places() {
        let cfg = SequenceConfig::new(construction("rational(q=2)", "x,x+1"), 2, 0, 4).unwrap();
        let pts = cfg.generate().unwrap();
        let xs: Vec<f64> = pts.iter().map(|p| reals(p)[0]).collect();
        let ys: Vec<f64> = pts.iter().map(|p| reals(p)[1]).collect();
        assert_eq!(xs, [0.0, 0.5, 0.25, 0.75]);
        assert_eq!(ys, [0.0, 0.5, 0.75, 0.25]);
    }

    #[test]
    fn generate_equals_pointwise() {
        let c = construction("hyperelliptic(q=5, f=x^3+x+1)", "auto:s=2");
        let cfg = SequenceConfig::new(c, 5, 1000, 100).unwrap();
        let streamed: Vec<_> = cfg.iter().collect::<Result<_>>().unwrap();
        assert_eq!(cfg.generate().unwrap(), streamed);
    }

    #[test]
    fn precision_caps() {
        let c = construction("rational(q=2)", "x");
        assert!(c.point(1, 0).is_err());
        assert!(c.point(1, MAX_PRECISION + 1).is_err());
        assert!(SequenceConfig::new(c, 0, 0, 1).is_err());
    }

    #[test]
    fn digit_prefix_depends_only_on_residue_mod_place_power() {
        let c = construction("rational(q=3)", "x^2+1,x+2");
        let fd = c.model().field().clone();
        for n in [17u64, 500, 6561, 40000] {
            let full = c.point(n, 5).unwrap();
            let u = c.element(n);
            for (i, place) in c.places().iter().enumerate() {
                let PlaceKind::Polynomial(p) = place.kind() else {
                    unreachable!()
                };
                let power = (0..5usize.div_ceil(place.degree()))
                    .fold(Polynomial::one(), |acc, _| acc.mul(p, &fd));
                let reduced = Element::from_poly(u.a.rem(&power, &fd).unwrap());
                assert_eq!(
                    c.phi(&reduced, 5).unwrap().coordinate(i),
                    full.coordinate(i)
                );
            }
        }
    }

    #[test]
    fn custom_eta_fixes_origin() {
        let c = construction("rational(q=3)", "x")
            .with_eta(DigitBijection::from_table(vec![0, 2, 1]).unwrap())
            .unwrap();
        assert_eq!(c.point(0, 2).unwrap().coordinate(0).digits(), &[0, 0]);
        assert_eq!(c.point(1, 2).unwrap().coordinate(0).digits(), &[2, 0]);
        assert!(construction("rational(q=3)", "x")
            .with_eta(DigitBijection::from_table(vec![1, 0, 2]).unwrap())
            .is_err());
    }

    #[test]
    fn custom_sigma() {
        let model = FunctionFieldModel::parse("rational(q=2)").unwrap();
        let place = model
            .places(&PlaceSpec::parse("x").unwrap())
            .unwrap()
            .remove(0);
        let place = place
            .with_sigma(DigitBijection::from_table(vec![1, 0]).unwrap())
            .unwrap();
        let c = Construction::new(model, vec![place]).unwrap();
        assert_eq!(c.point(0, 3).unwrap().coordinate(0).digits(), &[1, 1, 1]);
    }
}

use std::fmt;

use crate::algebra::{
    DigitBijection, Field, FieldElement, MonicIrreducibles, Polynomial, ResidueElement,
    ResidueField, MAX_DEGREE,
};
use crate::error::{Error, Result};
use crate::function_field::place::{split_top_level, Place, PlaceKind, PlaceSpec};
use crate::function_field::series::{hensel_sqrt, PowerSeries};

/// Precision to which the expansion of `y` is cached at each curve point.
const CACHED_SERIES_PRECISION: usize = 64;

/// An element `a(x) + b(x) y` of the ring of functions regular away from `P_inf`.
///
/// In the rational model `b` is always zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub a: Polynomial,
    pub b: Polynomial,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn from_poly(a: Polynomial) -> Self {
        Element {
            a,
            b: Polynomial::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})y", self.b),
            (false, false) => write!(f, "{}+({})y", self.a, self.b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// `F_q(x)` with `P_inf` the pole of `x`; genus 0.
    Rational,
    /// `y^2 = f(x)` with `f` squarefree of odd degree, odd characteristic.
    Hyperelliptic { f: Polynomial },
}

/// A global function field together with its distinguished rational place `P_inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFieldModel {
    field: Field,
    kind: ModelKind,
    genus: usize,
}

impl FunctionFieldModel {
    pub fn rational(field: &Field) -> Self {
        FunctionFieldModel {
            field: field.clone(),
            kind: ModelKind::Rational,
            genus: 0,
        }
    }

    pub fn hyperelliptic(field: &Field, f: Polynomial) -> Result<Self> {
        if field.characteristic() == 2 {
            return Err(Error::InvalidCurve("characteristic must be odd".into()));
        }
        let deg = f.degree().unwrap_or(0);
        if deg != 3 && deg != 5 {
            return Err(Error::InvalidCurve(format!("degree of {f} must be 3 or 5")));
        }
        if f.gcd(&f.derivative(field), field).degree() != Some(0) {
            return Err(Error::InvalidCurve(format!("{f} is not squarefree")));
        }
        Ok(FunctionFieldModel {
            field: field.clone(),
            kind: ModelKind::Hyperelliptic { f },
            genus: (deg - 1) / 2,
        })
    }

    /// Parses `"rational(q=2)"` or `"hyperelliptic(q=5, f=x^3+x+1)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad model spec {s:?}"));
        let s = s.trim();
        let open = s.find('(').ok_or_else(err)?;
        let name = s[..open].trim();
        let args = s[open + 1..].strip_suffix(')').ok_or_else(err)?;
        let mut q = None;
        let mut f = None;
        for item in split_top_level(args) {
            let (k, v) = item.split_once('=').ok_or_else(err)?;
            match k.trim() {
                "q" => q = Some(v.trim().to_string()),
                "f" => f = Some(v.trim().to_string()),
                _ => return Err(err()),
            }
        }
        let field = Field::parse(&q.ok_or_else(err)?)?;
        match (name, f) {
            ("rational", None) => Ok(Self::rational(&field)),
            ("hyperelliptic", Some(f)) => {
                let f = Polynomial::parse(&f, &field)?;
                Self::hyperelliptic(&field, f)
            }
            _ => Err(err()),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn add(&self, u: &Element, v: &Element) -> Element {
        Element {
            a: u.a.add(&v.a, &self.field),
            b: u.b.add(&v.b, &self.field),
        }
    }

    pub fn sub(&self, u: &Element, v: &Element) -> Element {
        Element {
            a: u.a.sub(&v.a, &self.field),
            b: u.b.sub(&v.b, &self.field),
        }
    }

    pub fn scale(&self, u: &Element, c: FieldElement) -> Element {
        Element {
            a: u.a.scale(c, &self.field),
            b: u.b.scale(c, &self.field),
        }
    }

    /// Product, reducing `y^2 = f(x)` on the curve model.
    pub fn mul(&self, u: &Element, v: &Element) -> Element {
        let fd = &self.field;
        let a = u.a.mul(&v.a, fd);
        let b = u.a.mul(&v.b, fd).add(&v.a.mul(&u.b, fd), fd);
        match &self.kind {
            ModelKind::Rational => Element { a, b },
            ModelKind::Hyperelliptic { f } => Element {
                a: a.add(&u.b.mul(&v.b, fd).mul(f, fd), fd),
                b,
            },
        }
    }

    /// Pole order at `P_inf`; `None` for zero.
    pub fn pole_order(&self, u: &Element) -> Option<usize> {
        let g2p1 = 2 * self.genus + 1;
        match &self.kind {
            ModelKind::Rational => u.a.degree(),
            ModelKind::Hyperelliptic { .. } => {
                let pa = u.a.degree().map(|d| 2 * d);
                let pb = u.b.degree().map(|d| 2 * d + g2p1);
                pa.max(pb)
            }
        }
    }

    /// Exponents `(i, j)` of the `r`-th chain basis monomial `x^i y^j`.
    pub fn chain_monomial(&self, r: usize) -> (usize, usize) {
        let g = self.genus;
        match &self.kind {
            ModelKind::Rational => (r, 0),
            ModelKind::Hyperelliptic { .. } if r < g => (r, 0),
            ModelKind::Hyperelliptic { .. } => {
                let pole = r + g;
                if pole.is_multiple_of(2) {
                    (pole / 2, 0)
                } else {
                    ((pole - 2 * g - 1) / 2, 1)
                }
            }
        }
    }

    /// Pole order of the `r`-th chain basis element.
    pub fn chain_pole_order(&self, r: usize) -> usize {
        match &self.kind {
            ModelKind::Rational => r,
            ModelKind::Hyperelliptic { .. } => {
                let (i, j) = self.chain_monomial(r);
                2 * i + j * (2 * self.genus + 1)
            }
        }
    }

    /// The `r`-th element `v_r` of the nested basis.
    pub fn basis_element(&self, r: usize) -> Element {
        let (i, j) = self.chain_monomial(r);
        let mono = Polynomial::monomial(FieldElement::ONE, i);
        if j == 0 {
            Element::from_poly(mono)
        } else {
            Element {
                a: Polynomial::zero(),
                b: mono,
            }
        }
    }

    /// `ℓ(m P_inf)` for `m >= 0`.
    pub fn rr_dimension(&self, m: usize) -> usize {
        let g = self.genus;
        if m >= 2 * g {
            m + 1 - g
        } else {
            m / 2 + 1
        }
    }

    /// The first `ℓ(m P_inf)` chain elements `v_0, v_1, ...`, a basis of `L(m P_inf)`.
    pub fn rr_basis(&self, m: i64) -> Result<Vec<Element>> {
        if m < 0 {
            return Err(Error::TooSmall { min: 0, got: m });
        }
        Ok((0..self.rr_dimension(m as usize))
            .map(|r| self.basis_element(r))
            .collect())
    }

    /// `f_n = Σ η(a_r(n)) v_r` with the canonical `η`.
    pub fn element_from_index(&self, n: u64) -> Element {
        self.element_from_index_with(n, &DigitBijection::identity(self.field.order() as u64))
            .expect("identity bijection has the right size")
    }

    /// `f_n` with a custom digit bijection `η = canonical ∘ eta`, which must fix 0.
    pub fn element_from_index_with(&self, mut n: u64, eta: &DigitBijection) -> Result<Element> {
        let q = self.field.order() as u64;
        if eta.size() != q || eta.forward(0)? != 0 {
            return Err(Error::InvalidBijection(
                "eta must be a bijection of Z_q fixing 0".into(),
            ));
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut r = 0;
        while n > 0 {
            let digit = n % q;
            n /= q;
            if digit != 0 {
                let c = self.field.eta(eta.forward(digit)?)?;
                let (i, j) = self.chain_monomial(r);
                let target = if j == 0 { &mut a } else { &mut b };
                if target.len() <= i {
                    target.resize(i + 1, FieldElement::ZERO);
                }
                target[i] = c;
            }
            r += 1;
        }
        Ok(Element {
            a: Polynomial::from_coeffs(a),
            b: Polynomial::from_coeffs(b),
        })
    }

    /// Builds the place at the zero of a monic irreducible (rational model only).
    pub fn place_at_polynomial(&self, p: Polynomial) -> Result<Place> {
        if self.kind != ModelKind::Rational {
            return Err(Error::PlaceModelMismatch);
        }
        let degree = p.degree().unwrap_or(0);
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                cap: MAX_DEGREE,
            });
        }
        let residue = ResidueField::new(&self.field, p.clone())?;
        Ok(Place::new(PlaceKind::Polynomial(p), residue, None))
    }

    /// Builds the place at an affine point of the curve (curve model only).
    pub fn place_at_point(&self, x0: FieldElement, y0: FieldElement) -> Result<Place> {
        let ModelKind::Hyperelliptic { f } = &self.kind else {
            return Err(Error::PlaceModelMismatch);
        };
        let fd = &self.field;
        if fd.mul(y0, y0) != f.eval(x0, fd) {
            return Err(Error::NotOnCurve {
                x0: x0.index(),
                y0: y0.index(),
            });
        }
        if y0.is_zero() {
            return Err(Error::RamifiedPoint);
        }
        let z = Polynomial::from_coeffs(vec![fd.neg(x0), FieldElement::ONE]);
        let residue = ResidueField::new(fd, z)?;
        let shifted =
            PowerSeries::from_polynomial(&f.taylor_shift(x0, fd), CACHED_SERIES_PRECISION);
        let y_series = hensel_sqrt(&shifted, y0, CACHED_SERIES_PRECISION, fd)?;
        Ok(Place::new(
            PlaceKind::Point { x0, y0 },
            residue,
            Some(y_series),
        ))
    }

    /// Rational affine points with `y0 != 0`, ordered by `x0` then `y0`.
    pub fn affine_points(&self) -> Vec<(FieldElement, FieldElement)> {
        let ModelKind::Hyperelliptic { f } = &self.kind else {
            return Vec::new();
        };
        let fd = &self.field;
        fd.elements()
            .flat_map(|x0| {
                let fx = f.eval(x0, fd);
                let roots = if fx.is_zero() {
                    Vec::new()
                } else {
                    fd.sqrt_all(fx)
                };
                roots.into_iter().map(move |y0| (x0, y0))
            })
            .collect()
    }

    /// Resolves a place specification into `s` distinct places.
    pub fn places(&self, spec: &PlaceSpec) -> Result<Vec<Place>> {
        let places = match spec {
            PlaceSpec::Auto { s } => {
                let s = *s;
                let found: Vec<Place> = match &self.kind {
                    ModelKind::Rational => MonicIrreducibles::new(&self.field)
                        .take(s)
                        .map(|p| self.place_at_polynomial(p))
                        .collect::<Result<_>>()?,
                    ModelKind::Hyperelliptic { .. } => self
                        .affine_points()
                        .into_iter()
                        .take(s)
                        .map(|(x0, y0)| self.place_at_point(x0, y0))
                        .collect::<Result<_>>()?,
                };
                if found.len() < s {
                    return Err(Error::NotEnoughPlaces {
                        requested: s,
                        available: found.len(),
                    });
                }
                found
            }
            PlaceSpec::Explicit(items) => items
                .iter()
                .map(|item| self.parse_place(item))
                .collect::<Result<_>>()?,
        };
        for (i, p) in places.iter().enumerate() {
            if places[..i].contains(p) {
                return Err(Error::DuplicatePlace(p.to_string()));
            }
        }
        Ok(places)
    }

    fn parse_place(&self, item: &str) -> Result<Place> {
        let item = item.trim();
        match item.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some(inner) => {
                let (x, y) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad point {item:?}")))?;
                let coord = |t: &str| -> Result<FieldElement> {
                    let v = Polynomial::parse(t, &self.field)?;
                    match v.degree() {
                        None => Ok(FieldElement::ZERO),
                        Some(0) => Ok(v.coeff(0)),
                        _ => Err(Error::Parse(format!("bad point {item:?}"))),
                    }
                };
                self.place_at_point(coord(x)?, coord(y)?)
            }
            None => self.place_at_polynomial(Polynomial::parse(item, &self.field)?),
        }
    }

    fn check_element(&self, u: &Element) -> Result<()> {
        if self.kind == ModelKind::Rational && !u.b.is_zero() {
            return Err(Error::InvalidParameter(
                "element has a y-part in the rational model".into(),
            ));
        }
        Ok(())
    }

    /// The first `count` coefficients `f_0, ..., f_{count-1}` of the local
    /// expansion `u = Σ f_j z^j` at `place`, each in the residue field.
    ///
    /// Coefficients are lifted canonically: by representatives of degree `< e`
    /// in the rational model and by constants on the curve.
    pub fn local_expansion(
        &self,
        u: &Element,
        place: &Place,
        count: usize,
    ) -> Result<Vec<ResidueElement>> {
        if count < 1 {
            return Err(Error::TooSmall {
                min: 1,
                got: count as i64,
            });
        }
        self.check_element(u)?;
        let fd = &self.field;
        let rf = place.residue_field();
        match place.kind() {
            PlaceKind::Polynomial(p) => {
                if self.kind != ModelKind::Rational {
                    return Err(Error::PlaceModelMismatch);
                }
                let mut rest = u.a.clone();
                let mut out = Vec::with_capacity(count);
                for _ in 0..count {
                    if rest.is_zero() {
                        out.push(rf.zero());
                        continue;
                    }
                    let (quot, rem) = rest.divmod(p, fd)?;
                    out.push(rf.reduce(&rem));
                    rest = quot;
                }
                Ok(out)
            }
            PlaceKind::Point { x0, y0 } => {
                if self.kind == ModelKind::Rational {
                    return Err(Error::PlaceModelMismatch);
                }
                let a = PowerSeries::from_polynomial(&u.a.taylor_shift(*x0, fd), count);
                let series = if u.b.is_zero() {
                    a
                } else {
                    let y = match &place.y_series {
                        Some(y) if y.precision() >= count => y.truncate(count),
                        _ => self.y_expansion(*x0, *y0, count)?,
                    };
                    let b = PowerSeries::from_polynomial(&u.b.taylor_shift(*x0, fd), count);
                    a.add(&b.mul(&y, fd), fd)
                };
                Ok(series
                    .coeffs()
                    .iter()
                    .map(|&c| rf.from_constant(c))
                    .collect())
            }
        }
    }

    /// Expansion of `y` at `(x0, y0)` in powers of `x - x0`.
    pub fn y_expansion(
        &self,
        x0: FieldElement,
        y0: FieldElement,
        count: usize,
    ) -> Result<PowerSeries> {
        let ModelKind::Hyperelliptic { f } = &self.kind else {
            return Err(Error::PlaceModelMismatch);
        };
        let fd = &self.field;
        let shifted = PowerSeries::from_polynomial(&f.taylor_shift(x0, fd), count);
        hensel_sqrt(&shifted, y0, count, fd)
    }

    /// The local parameter used at `place`.
    pub fn local_parameter(&self, place: &Place) -> Element {
        match place.kind() {
            PlaceKind::Polynomial(p) => Element::from_poly(p.clone()),
            PlaceKind::Point { x0, .. } => Element::from_poly(Polynomial::from_coeffs(vec![
                self.field.neg(*x0),
                FieldElement::ONE,
            ])),
        }
    }

    /// Whether `u` vanishes at `place`.
    pub fn vanishes_at(&self, u: &Element, place: &Place) -> bool {
        let fd = &self.field;
        match place.kind() {
            PlaceKind::Polynomial(p) => u.a.rem(p, fd).map(|r| r.is_zero()).unwrap_or(false),
            PlaceKind::Point { x0, y0 } => fd
                .add(u.a.eval(*x0, fd), fd.mul(u.b.eval(*x0, fd), *y0))
                .is_zero(),
        }
    }
}

impl fmt::Display for FunctionFieldModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ModelKind::Rational => write!(f, "rational(q={})", self.field.order()),
            ModelKind::Hyperelliptic { f: poly } => {
                write!(f, "hyperelliptic(q={}, f={poly})", self.field.order())
            }
        }
    }
}

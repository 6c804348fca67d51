use std::fmt;

use crate::algebra::{DigitBijection, FieldElement, Polynomial, ResidueField};
use crate::error::{Error, Result};
use crate::function_field::series::PowerSeries;

/// Where a place sits on its model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceKind {
    /// The zero of a monic irreducible `p(x)` in the rational function field;
    /// local parameter `p` itself.
    Polynomial(Polynomial),
    /// A rational affine point `(x0, y0)` of `y^2 = f(x)` with `y0 != 0`;
    /// local parameter `x - x0`.
    Point { x0: FieldElement, y0: FieldElement },
}

/// A place `P != P_inf` with its residue field and digit bijection.
#[derive(Clone, Debug)]
pub struct Place {
    kind: PlaceKind,
    residue: ResidueField,
    /// Expansion of `y` in powers of `x - x0`, for curve points.
    pub(crate) y_series: Option<PowerSeries>,
}

impl PartialEq for Place {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Place {}

impl Place {
    pub(crate) fn new(
        kind: PlaceKind,
        residue: ResidueField,
        y_series: Option<PowerSeries>,
    ) -> Self {
        Place {
            kind,
            residue,
            y_series,
        }
    }

    pub fn kind(&self) -> &PlaceKind {
        &self.kind
    }

    pub fn degree(&self) -> usize {
        self.residue.degree()
    }

    pub fn residue_field(&self) -> &ResidueField {
        &self.residue
    }

    /// Replaces the canonical digit bijection `F_P -> Z_{q^e}`.
    pub fn with_sigma(mut self, sigma: DigitBijection) -> Result<Self> {
        self.residue = self.residue.with_sigma(sigma)?;
        Ok(self)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            PlaceKind::Polynomial(p) => write!(f, "{p}"),
            PlaceKind::Point { x0, y0 } => write!(f, "({x0},{y0})"),
        }
    }
}

/// How to choose `P_1, ..., P_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceSpec {
    /// The first `s` places in canonical order.
    Auto { s: usize },
    /// Explicit places, each either a polynomial (`"x^2+x+1"`) or a point (`"(0,1)"`).
    Explicit(Vec<String>),
}

impl PlaceSpec {
    /// Parses `"auto:s=3"` or a comma-separated list such as `"x,x^2+x+1"` or `"(0,1),(0,4)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("auto") {
            let count = rest
                .trim()
                .strip_prefix(':')
                .map(str::trim)
                .and_then(|r| r.strip_prefix("s="))
                .and_then(|n| n.trim().parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("bad place spec {s:?}")))?;
            return Ok(PlaceSpec::Auto { s: count });
        }
        let items = split_top_level(s);
        if items.iter().any(|i| i.is_empty()) {
            return Err(Error::Parse(format!("bad place spec {s:?}")));
        }
        Ok(PlaceSpec::Explicit(items))
    }
}

impl fmt::Display for PlaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceSpec::Auto { s } => write!(f, "auto:s={s}"),
            PlaceSpec::Explicit(items) => write!(f, "{}", items.join(",")),
        }
    }
}

/// Splits on commas that are not inside parentheses.
pub(crate) fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur.trim().to_string());
    out
}

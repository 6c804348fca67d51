use crate::algebra::{Field, FieldElement, Polynomial};
use crate::error::{Error, Result};

/// A power series in `z` truncated modulo `z^precision`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<FieldElement>,
}

impl PowerSeries {
    /// Pads with zeros or truncates so that exactly `precision` coefficients are kept.
    pub fn new(mut coeffs: Vec<FieldElement>, precision: usize) -> Self {
        coeffs.resize(precision, FieldElement::ZERO);
        PowerSeries { coeffs }
    }

    pub fn from_polynomial(p: &Polynomial, precision: usize) -> Self {
        Self::new(p.coeffs().to_vec(), precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self::new(
            self.coeffs.iter().take(precision).copied().collect(),
            precision,
        )
    }

    pub fn add(&self, other: &Self, field: &Field) -> Self {
        let n = self.precision().min(other.precision());
        PowerSeries {
            coeffs: (0..n)
                .map(|i| field.add(self.coeffs[i], other.coeffs[i]))
                .collect(),
        }
    }

    pub fn scale(&self, c: FieldElement, field: &Field) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&a| field.mul(a, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, field: &Field) -> Self {
        let n = self.precision().min(other.precision());
        let mut out = vec![FieldElement::ZERO; n];
        for (i, &a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Multiplicative inverse modulo `z^precision`; the constant term must be nonzero.
    pub fn inverse(&self, field: &Field) -> Result<Self> {
        let n = self.precision();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0_inv = field
            .inv(self.coeffs[0])
            .map_err(|_| Error::Series("series is not a unit".into()))?;
        let mut out = vec![FieldElement::ZERO; n];
        out[0] = c0_inv;
        for k in 1..n {
            let mut acc = FieldElement::ZERO;
            for j in 1..=k {
                acc = field.add(acc, field.mul(self.coeffs[j], out[k - j]));
            }
            out[k] = field.neg(field.mul(acc, c0_inv));
        }
        Ok(PowerSeries { coeffs: out })
    }
}

/// Square root of `series` modulo `z^precision` with constant term `y0`,
/// by Newton iteration `g <- (g + series / g) / 2` with doubling precision.
pub fn hensel_sqrt(
    series: &PowerSeries,
    y0: FieldElement,
    precision: usize,
    field: &Field,
) -> Result<PowerSeries> {
    if field.characteristic() == 2 {
        return Err(Error::Series("square roots need odd characteristic".into()));
    }
    if y0.is_zero() {
        return Err(Error::Series("y0 must be nonzero".into()));
    }
    if series.precision() < precision {
        return Err(Error::Series(format!(
            "input known to z^{} only",
            series.precision()
        )));
    }
    if series.coeff(0) != field.mul(y0, y0) {
        return Err(Error::Series("constant term is not y0^2".into()));
    }
    let half = field.inv(field.from_int(2))?;
    let mut g = PowerSeries::new(vec![y0], precision.min(1));
    let mut prec = g.precision();
    while prec < precision {
        prec = (2 * prec).min(precision);
        let g_ext = g.truncate(prec);
        let quotient = series.truncate(prec).mul(&g_ext.inverse(field)?, field);
        g = g_ext.add(&quotient, field).scale(half, field);
    }
    Ok(g)
}

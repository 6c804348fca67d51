use std::fmt;

use crate::algebra::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// A univariate polynomial over `F_q` with ascending coefficients.
///
/// Trailing zeros are never stored, so the zero polynomial has no
/// coefficients and `degree()` returns `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![FieldElement::ONE],
        }
    }

    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![FieldElement::ZERO, FieldElement::ONE],
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Polynomial from canonical coefficient indices, ascending.
    pub fn from_indices(field: &Field, indices: &[u32]) -> Result<Self> {
        let coeffs = indices
            .iter()
            .map(|&i| field.element(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }

    /// The monic polynomial of degree `degree` whose lower coefficients are the
    /// base-`q` digits of `index` (least significant first).
    pub fn monic_from_index(field: &Field, degree: usize, mut index: u64) -> Self {
        let q = field.order() as u64;
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push(FieldElement((index % q) as u32));
            index /= q;
        }
        coeffs.push(FieldElement::ONE);
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == FieldElement::ONE
    }

    pub fn add(&self, other: &Self, field: &Field) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| field.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, field: &Field) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self, field: &Field) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| field.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: FieldElement, field: &Field) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Self, field: &Field) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and `deg remainder < deg divisor`.
    pub fn divmod(&self, divisor: &Self, field: &Field) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = field.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&sd| sd >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![FieldElement::ZERO; sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = field.mul(rem[i + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = field.sub(rem[i + j], field.mul(c, b));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self, field: &Field) -> Result<Self> {
        Ok(self.divmod(divisor, field)?.1)
    }

    pub fn eval(&self, x: FieldElement, field: &Field) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| {
                field.add(field.mul(acc, x), c)
            })
    }

    pub fn derivative(&self, field: &Field) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| field.mul(c, field.from_int(i as i64)))
                .collect(),
        )
    }

    /// Scales to leading coefficient one. The zero polynomial is returned unchanged.
    pub fn make_monic(&self, field: &Field) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = field
            .inv(self.leading())
            .expect("nonzero leading coefficient");
        self.scale(inv, field)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self, field: &Field) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, field).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.make_monic(field)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self, field: &Field) -> Result<Self> {
        let mut base = self.rem(modulus, field)?;
        let mut acc = Self::one().rem(modulus, field)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, field).rem(modulus, field)?;
            }
            base = base.mul(&base, field).rem(modulus, field)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Coefficients of `self(x0 + z)` as a polynomial in `z`.
    pub fn taylor_shift(&self, x0: FieldElement, field: &Field) -> Self {
        // Horner in the shifted variable: acc <- acc * (z + x0) + c.
        let shift = Self::from_coeffs(vec![x0, FieldElement::ONE]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, &c| {
            acc.mul(&shift, field).add(&Self::constant(c), field)
        })
    }

    /// Irreducibility over `F_q` by Ben-Or's test: `gcd(x^{q^i} - x, f) = 1`
    /// for every `1 <= i <= deg f / 2`. Constants are not irreducible.
    pub fn is_irreducible(&self, field: &Field) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.make_monic(field);
        let q = field.order() as u64;
        let x = Self::x();
        let mut h = x.clone();
        for _ in 0..n / 2 {
            h = h.pow_mod(q, &f, field).expect("f is nonzero");
            let g = f.gcd(&h.sub(&x, field), field);
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Parses the text form, e.g. `"x^3+x+1"` or `"2x^2 + 3*x - 1"`.
    ///
    /// Integer coefficients are read through the canonical digit map, so over an
    /// extension field `3` denotes the element with index 3.
    pub fn parse(s: &str, field: &Field) -> Result<Self> {
        let err = || Error::Parse(format!("bad polynomial {s:?}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err());
        }
        let mut acc = Self::zero();
        let mut rest = text.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let negative = match rest.as_bytes()[0] {
                b'+' if !first => {
                    rest = &rest[1..];
                    false
                }
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                _ if first => false,
                _ => return Err(err()),
            };
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            if term.is_empty() {
                return Err(err());
            }
            let (coef_text, power) = match term.find('x') {
                None => (term, None),
                Some(pos) => {
                    let c = term[..pos].trim_end_matches('*');
                    let tail = &term[pos + 1..];
                    let power = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(err)?
                    };
                    (c, Some(power))
                }
            };
            let coef = if coef_text.is_empty() {
                if power.is_none() {
                    return Err(err());
                }
                FieldElement::ONE
            } else {
                let v: u64 = coef_text.parse().map_err(|_| err())?;
                if field.degree() == 1 {
                    field.from_int((v % field.order() as u64) as i64)
                } else {
                    field.eta(v)?
                }
            };
            let coef = if negative { field.neg(coef) } else { coef };
            acc = acc.add(&Self::monomial(coef, power.unwrap_or(0)), field);
        }
        Ok(acc)
    }
}

/// Renders with descending powers, e.g. `x^3+x+1`; coefficients by canonical index.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c.0) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                (_, v) => write!(f, "{v}x^{i}")?,
            }
        }
        Ok(())
    }
}

use crate::algebra::bijection::DigitBijection;
use crate::algebra::field::{Field, FieldElement};
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};

/// The residue class field `F_q[x]/(p)` of a place, of order `q^e`, together
/// with its digit bijection onto `Z_{q^e}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    field: Field,
    modulus: Polynomial,
    sigma: DigitBijection,
}

/// A residue class, stored by its canonical representative of degree `< e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueElement {
    rep: Polynomial,
}

impl ResidueElement {
    pub fn representative(&self) -> &Polynomial {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

impl ResidueField {
    /// `modulus` must be monic and irreducible. The canonical sigma is used.
    pub fn new(field: &Field, modulus: Polynomial) -> Result<Self> {
        if !modulus.is_monic() {
            return Err(Error::NotMonic(modulus.to_string()));
        }
        if !modulus.is_irreducible(field) {
            return Err(Error::NotIrreducible(modulus.to_string()));
        }
        let e = modulus.degree().unwrap_or(0);
        let order = (field.order() as u64)
            .checked_pow(e as u32)
            .filter(|&o| o <= 1 << 62)
            .ok_or(Error::ResidueFieldTooLarge {
                q: field.order(),
                e,
            })?;
        Ok(ResidueField {
            field: field.clone(),
            modulus,
            sigma: DigitBijection::identity(order),
        })
    }

    /// Replaces the canonical sigma by `canonical ∘ table`, i.e. the returned
    /// field maps residue `r` to `table[canonical(r)]`.
    pub fn with_sigma(mut self, sigma: DigitBijection) -> Result<Self> {
        if sigma.size() != self.order() {
            return Err(Error::InvalidBijection(format!(
                "sigma table has {} entries, residue field has {}",
                sigma.size(),
                self.order()
            )));
        }
        self.sigma = sigma;
        Ok(self)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn order(&self) -> u64 {
        (self.field.order() as u64).pow(self.degree() as u32)
    }

    pub fn has_canonical_sigma(&self) -> bool {
        self.sigma.is_identity()
    }

    pub fn zero(&self) -> ResidueElement {
        ResidueElement {
            rep: Polynomial::zero(),
        }
    }

    pub fn reduce(&self, f: &Polynomial) -> ResidueElement {
        ResidueElement {
            rep: f
                .rem(&self.modulus, &self.field)
                .expect("modulus is nonzero"),
        }
    }

    pub fn from_constant(&self, c: FieldElement) -> ResidueElement {
        ResidueElement {
            rep: Polynomial::constant(c),
        }
    }

    fn check(&self, r: &ResidueElement) -> Result<()> {
        match r.rep.degree() {
            Some(d) if d >= self.degree() => Err(Error::ResidueMismatch),
            _ => Ok(()),
        }
    }

    pub fn add(&self, a: &ResidueElement, b: &ResidueElement) -> Result<ResidueElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(ResidueElement {
            rep: a.rep.add(&b.rep, &self.field),
        })
    }

    pub fn mul(&self, a: &ResidueElement, b: &ResidueElement) -> Result<ResidueElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.reduce(&a.rep.mul(&b.rep, &self.field)))
    }

    /// Canonical index `Σ eta_inv(c_j) q^j` of the representative.
    fn canonical_index(&self, r: &ResidueElement) -> u64 {
        let q = self.field.order() as u64;
        r.rep
            .coeffs()
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * q + self.field.eta_inv(c))
    }

    /// The digit bijection `F_P -> Z_{q^e}`; zero maps to zero under the canonical choice.
    pub fn sigma(&self, r: &ResidueElement) -> Result<u64> {
        self.check(r)?;
        self.sigma.forward(self.canonical_index(r))
    }

    pub fn sigma_inv(&self, v: u64) -> Result<ResidueElement> {
        let mut idx = self.sigma.inverse(v)?;
        let q = self.field.order() as u64;
        let coeffs = (0..self.degree())
            .map(|_| {
                let c = idx % q;
                idx /= q;
                self.field.eta(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ResidueElement {
            rep: Polynomial::from_coeffs(coeffs),
        })
    }

    /// Appends the `e` base-`q` digits of `sigma(r)`, most significant first.
    pub fn sigma_digits(&self, r: &ResidueElement, out: &mut Vec<u32>) -> Result<()> {
        let e = self.degree();
        if self.sigma.is_identity() {
            self.check(r)?;
            out.extend(
                (0..e)
                    .rev()
                    .map(|j| self.field.eta_inv(r.rep.coeff(j)) as u32),
            );
            return Ok(());
        }
        let v = self.sigma(r)?;
        let q = self.field.order() as u64;
        let start = out.len();
        let mut rest = v;
        for _ in 0..e {
            out.push((rest % q) as u32);
            rest /= q;
        }
        out[start..].reverse();
        Ok(())
    }

    /// Every residue class, in sigma order.
    pub fn elements(&self) -> impl Iterator<Item = ResidueElement> + '_ {
        (0..self.order()).map(|v| self.sigma_inv(v).expect("in range"))
    }
}

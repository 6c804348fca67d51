//! Exact arithmetic over `F_q` and `F_q[x]`.

mod bijection;
mod field;
mod poly;
mod residue;

pub use bijection::{DigitBijection, MAX_TABLE_SIZE};
pub use field::{Field, FieldElement, MAX_FIELD_ORDER};
pub use poly::Polynomial;
pub use residue::{ResidueElement, ResidueField};

/// Largest polynomial degree accepted for places and curve models.
pub const MAX_DEGREE: usize = 32;

/// Lazily enumerates monic irreducible polynomials over `field`, ordered by
/// degree and then by canonical coefficient index.
#[derive(Clone, Debug)]
pub struct MonicIrreducibles {
    field: Field,
    degree: usize,
    index: u64,
    max_degree: Option<usize>,
}

impl MonicIrreducibles {
    pub fn new(field: &Field) -> Self {
        MonicIrreducibles {
            field: field.clone(),
            degree: 1,
            index: 0,
            max_degree: None,
        }
    }

    pub fn up_to(field: &Field, max_degree: usize) -> Self {
        MonicIrreducibles {
            max_degree: Some(max_degree),
            ..Self::new(field)
        }
    }
}

impl Iterator for MonicIrreducibles {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        let q = self.field.order() as u64;
        loop {
            if self.degree > self.max_degree.unwrap_or(MAX_DEGREE).min(MAX_DEGREE) {
                return None;
            }
            let count = q.checked_pow(self.degree as u32)?;
            if self.index >= count {
                self.degree += 1;
                self.index = 0;
                continue;
            }
            let candidate = Polynomial::monic_from_index(&self.field, self.degree, self.index);
            self.index += 1;
            if candidate.is_irreducible(&self.field) {
                return Some(candidate);
            }
        }
    }
}

/// All monic irreducibles of degree `1..=max_degree`, in canonical order.
pub fn monic_irreducibles(field: &Field, max_degree: usize) -> Vec<Polynomial> {
    MonicIrreducibles::up_to(field, max_degree).collect()
}

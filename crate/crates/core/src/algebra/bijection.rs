use crate::error::{Error, Result};

/// Largest user-supplied bijection table.
pub const MAX_TABLE_SIZE: usize = 1 << 24;

/// A bijection of `Z_n = {0, ..., n-1}` onto itself, used to customize the
/// digit maps. `Identity` is the canonical choice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DigitBijection {
    Identity {
        size: u64,
    },
    Table {
        forward: Vec<u64>,
        inverse: Vec<u64>,
    },
}

impl DigitBijection {
    pub fn identity(size: u64) -> Self {
        DigitBijection::Identity { size }
    }

    /// Validates that `table` is a permutation of `0..table.len()`.
    pub fn from_table(table: Vec<u64>) -> Result<Self> {
        let n = table.len();
        if n == 0 || n > MAX_TABLE_SIZE {
            return Err(Error::InvalidBijection(format!(
                "table size {n} not supported"
            )));
        }
        let mut inverse = vec![u64::MAX; n];
        for (i, &v) in table.iter().enumerate() {
            let slot = inverse
                .get_mut(v as usize)
                .ok_or_else(|| Error::InvalidBijection(format!("value {v} out of range 0..{n}")))?;
            if *slot != u64::MAX {
                return Err(Error::InvalidBijection(format!("value {v} repeated")));
            }
            *slot = i as u64;
        }
        Ok(DigitBijection::Table {
            forward: table,
            inverse,
        })
    }

    /// Like `from_table`, additionally requiring `0 -> 0`.
    pub fn from_table_fixing_zero(table: Vec<u64>) -> Result<Self> {
        if table.first() != Some(&0) {
            return Err(Error::InvalidBijection("table must map 0 to 0".into()));
        }
        Self::from_table(table)
    }

    pub fn size(&self) -> u64 {
        match self {
            DigitBijection::Identity { size } => *size,
            DigitBijection::Table { forward, .. } => forward.len() as u64,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            DigitBijection::Identity { .. } => true,
            DigitBijection::Table { forward, .. } => {
                forward.iter().enumerate().all(|(i, &v)| i as u64 == v)
            }
        }
    }

    pub fn forward(&self, d: u64) -> Result<u64> {
        self.check(d)?;
        Ok(match self {
            DigitBijection::Identity { .. } => d,
            DigitBijection::Table { forward, .. } => forward[d as usize],
        })
    }

    pub fn inverse(&self, v: u64) -> Result<u64> {
        self.check(v)?;
        Ok(match self {
            DigitBijection::Identity { .. } => v,
            DigitBijection::Table { inverse, .. } => inverse[v as usize],
        })
    }

    fn check(&self, d: u64) -> Result<()> {
        if d < self.size() {
            Ok(())
        } else {
            Err(Error::DigitOutOfRange {
                digit: d,
                base: self.size(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_validation() {
        assert!(DigitBijection::from_table(vec![1, 0, 2]).is_ok());
        assert!(DigitBijection::from_table(vec![1, 1, 2]).is_err());
        assert!(DigitBijection::from_table(vec![0, 3]).is_err());
        assert!(DigitBijection::from_table_fixing_zero(vec![1, 0]).is_err());
        let b = DigitBijection::from_table_fixing_zero(vec![0, 2, 1]).unwrap();
        for d in 0..3 {
            assert_eq!(b.inverse(b.forward(d).unwrap()).unwrap(), d);
        }
        assert!(b.forward(3).is_err());
        assert!(!b.is_identity());
        assert!(DigitBijection::identity(5).is_identity());
    }
}

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function_field::{Element, FunctionFieldModel};

/// Largest block `q^m` enumerated by `lemma1_check`.
pub const MAX_LEMMA_BLOCK: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub k: u64,
    pub m: usize,
    pub genus: usize,
    /// `q^m`.
    pub block_size: u64,
    /// Distinct elements among `f_n` in the block.
    pub distinct: usize,
    /// Size of `L((m + g - 1) P_inf)` enumerated independently.
    pub span_size: usize,
    pub holds: bool,
}

/// All `F_q`-combinations of `basis`, built by closing `{0}` under `+ c v`.
fn span(model: &FunctionFieldModel, basis: &[Element]) -> HashSet<Element> {
    let mut set: HashSet<Element> = HashSet::from([Element::zero()]);
    for v in basis {
        let multiples: Vec<Element> = model
            .field()
            .elements()
            .map(|c| model.scale(v, c))
            .collect();
        set = set
            .iter()
            .flat_map(|s| multiples.iter().map(move |w| model.add(s, w)))
            .collect();
    }
    set
}

/// Verifies that `{f_n : k q^m <= n < (k+1) q^m} = h + L((m + g - 1) P_inf)`
/// with `h = f_{k q^m}`.
pub fn lemma1_check(model: &FunctionFieldModel, k: u64, m: usize) -> Result<Lemma1Report> {
    let g = model.genus();
    if m < g {
        return Err(Error::TooSmall {
            min: g as i64,
            got: m as i64,
        });
    }
    let q = model.field().order() as u64;
    let block = q
        .checked_pow(m as u32)
        .filter(|&b| b <= MAX_LEMMA_BLOCK)
        .ok_or(Error::EnumerationCap((q as u128).saturating_pow(m as u32)))?;
    let start = k
        .checked_mul(block)
        .filter(|s| s.checked_add(block).is_some())
        .ok_or(Error::EnumerationCap(k as u128 * block as u128))?;
    let h = model.element_from_index(start);
    let shifted: HashSet<Element> = (start..start + block)
        .map(|n| model.sub(&model.element_from_index(n), &h))
        .collect();
    let degree = m as i64 + g as i64 - 1;
    let basis = if degree < 0 {
        Vec::new()
    } else {
        model.rr_basis(degree)?
    };
    let expected = span(model, &basis);
    Ok(Lemma1Report {
        k,
        m,
        genus: g,
        block_size: block,
        distinct: shifted.len(),
        span_size: expected.len(),
        holds: shifted.len() as u64 == block && shifted == expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    #[test]
    fn rational_f2_block() {
        let model = FunctionFieldModel::parse("rational(q=2)").unwrap();
        let r = lemma1_check(&model, 1, 2).unwrap();
        assert!(r.holds);
        assert_eq!(model.element_from_index(4).to_string(), "x^2");
        let fd = model.field().clone();
        let set: HashSet<String> = (4..8)
            .map(|n| model.element_from_index(n).to_string())
            .collect();
        let expected: HashSet<String> = ["0", "1", "x", "x+1"]
            .iter()
            .map(|c| {
                let c = Element::from_poly(Polynomial::parse(c, &fd).unwrap());
                model.add(&model.element_from_index(4), &c).to_string()
            })
            .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn curve_zero_block_is_l2() {
        let model = FunctionFieldModel::parse("hyperelliptic(q=5, f=x^3+x+1)").unwrap();
        let r = lemma1_check(&model, 0, 2).unwrap();
        assert!(r.holds);
        assert_eq!((r.distinct, r.span_size), (25, 25));
        assert!(lemma1_check(&model, 0, 0).is_err());
    }

    #[test]
    fn degenerate_m_zero_rational() {
        let model = FunctionFieldModel::parse("rational(q=3)").unwrap();
        for k in 0..5 {
            assert!(lemma1_check(&model, k, 0).unwrap().holds);
        }
    }
}

use crate::error::{Error, Result};
use crate::sequence::{DigitCoordinate, DigitPoint};

/// Base-`b` digits of `φ_b(n)`: the digits of `n` read least significant first.
pub fn radical_inverse_digits(base: u32, mut n: u64) -> Vec<u32> {
    let mut out = Vec::new();
    while n > 0 {
        out.push((n % base as u64) as u32);
        n /= base as u64;
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `h_n = (φ_{b_1}(n), ..., φ_{b_s}(n))` for pairwise coprime bases.
pub fn halton_classical(bases: &[u32], n: u64) -> Result<DigitPoint> {
    for (i, &b) in bases.iter().enumerate() {
        if b < 2 {
            return Err(Error::BadBase(b as u64));
        }
        if let Some(&c) = bases[..i].iter().find(|&&c| gcd(b as u64, c as u64) != 1) {
            return Err(Error::NotCoprime(c as u64, b as u64));
        }
    }
    Ok(DigitPoint::new(
        bases
            .iter()
            .map(|&b| DigitCoordinate::new(b, radical_inverse_digits(b, n)))
            .collect(),
    ))
}

use num_bigint::BigUint;
use num_traits::{Float, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::verify::net::t_from_u;

fn factorial<T: Float>(s: usize) -> T {
    (1..=s).fold(T::one(), |acc, k| acc * T::from(k).expect("small integer"))
}

fn cast<T: Float>(v: u64) -> T {
    T::from(v).expect("representable")
}

/// Leading discrepancy constant for `(t, s)`-sequences in base `b`
/// (Faure–Kritzer), with the even/odd base split.
pub fn c_fk<T: Float>(b: u32, s: usize, t: usize) -> T {
    let bf: T = cast(b as u64);
    let two: T = cast(2);
    let lead = bf.powi(t as i32) / factorial::<T>(s);
    let core = ((bf - T::one()) / (two * bf.ln())).powi(s as i32);
    let parity = if b.is_multiple_of(2) {
        bf * bf / (two * (bf * bf - T::one()))
    } else {
        T::one() / two
    };
    lead * parity * core
}

/// Leading discrepancy constant for `(u, e, s)`-sequences in base `b` (Tezuka):
/// `(b^u / s!) Π ⌊b^{e_i}/2⌋ / (e_i ln b)`.
pub fn c_tez<T: Float>(b: u32, u: usize, e: &[usize]) -> T {
    let bf: T = cast(b as u64);
    let ln_b = bf.ln();
    let lead = bf.powi(u as i32) / factorial::<T>(e.len());
    e.iter().fold(lead, |acc, &ei| {
        let half = (BigUint::from(b).pow(ei as u32) / 2u32)
            .to_f64()
            .unwrap_or(f64::INFINITY);
        let half: T = T::from(half).expect("finite");
        acc * half / (cast::<T>(ei as u64) * ln_b)
    })
}

/// Upper estimate `(b^u / s!) b^{Σ e_i} / ((2 ln b)^s Π e_i)` of `c_tez`.
pub fn c_tez_upper<T: Float>(b: u32, u: usize, e: &[usize]) -> T {
    let bf: T = cast(b as u64);
    let two: T = cast(2);
    let sum_e: usize = e.iter().sum();
    let prod_e = e.iter().fold(T::one(), |acc, &ei| acc * cast(ei as u64));
    bf.powi(u as i32) / factorial::<T>(e.len()) * bf.powi(sum_e as i32)
        / ((two * bf.ln()).powi(e.len() as i32) * prod_e)
}

/// `(1/2) ((q - 1)/q)^s Π e_i`, a lower bound on `c_fk / c_tez`.
pub fn ratio_lower_bound<T: Float>(q: u32, e: &[usize]) -> T {
    let qf: T = cast(q as u64);
    let prod_e = e.iter().fold(T::one(), |acc, &ei| acc * cast(ei as u64));
    prod_e * ((qf - T::one()) / qf).powi(e.len() as i32) / cast(2)
}

/// Whether `Π e_i > 2 (q/(q-1))^s`, decided in exact integer arithmetic as
/// `Π e_i (q-1)^s > 2 q^s`.
pub fn tez_bound_is_better(q: u32, e: &[usize]) -> bool {
    let s = e.len() as u32;
    let prod = e
        .iter()
        .fold(BigUint::from(1u32), |acc, &ei| acc * BigUint::from(ei));
    prod * BigUint::from(q - 1).pow(s) > BigUint::from(2u32) * BigUint::from(q).pow(s)
}

/// Both leading constants for a sequence with genus `g` and place degrees `e`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub q: u32,
    pub s: usize,
    pub g: usize,
    pub e: Vec<usize>,
    pub u: usize,
    pub t: usize,
    pub c_fk: f64,
    pub c_tez: f64,
    pub ratio: f64,
    pub ratio_lower_bound: f64,
    pub tez_better: bool,
}

pub fn bound_comparison(q: u32, s: usize, g: usize, e: &[usize]) -> Result<BoundsReport> {
    if q < 2 {
        return Err(Error::BadBase(q as u64));
    }
    if s < 1 || e.len() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: e.len(),
        });
    }
    if e.contains(&0) {
        return Err(Error::InvalidParameter("e_i must be at least 1".into()));
    }
    let t = t_from_u(g, e);
    let c_fk = c_fk::<f64>(q, s, t);
    let c_tez = c_tez::<f64>(q, g, e);
    Ok(BoundsReport {
        q,
        s,
        g,
        e: e.to_vec(),
        u: g,
        t,
        c_fk,
        c_tez,
        ratio: c_fk / c_tez,
        ratio_lower_bound: ratio_lower_bound(q, e),
        tez_better: tez_bound_is_better(q, e),
    })
}

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::{Construction, DigitPoint};

/// Largest point set the checker will bucket.
pub const MAX_NET_POINTS: u128 = 1 << 24;

/// An elementary interval `J = Π [a_i b^{-d_i}, (a_i + 1) b^{-d_i})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalShape {
    pub d: Vec<usize>,
    pub a: Vec<u64>,
}

impl IntervalShape {
    /// `log_b` of the inverse volume, `Σ d_i`.
    pub fn depth(&self) -> usize {
        self.d.iter().sum()
    }

    /// Whether the point lies in `J`, judged on its digits.
    pub fn contains(&self, p: &DigitPoint) -> bool {
        self.d
            .iter()
            .zip(&self.a)
            .enumerate()
            .all(|(i, (&d, &a))| p.coordinate(i).prefix_value(d) == a)
    }
}

/// An interval whose point count differs from `b^m λ(J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub d: Vec<usize>,
    pub a: Vec<u64>,
    pub count: u64,
    pub expected: u64,
}

impl Witness {
    pub fn shape(&self) -> IntervalShape {
        IntervalShape {
            d: self.d.clone(),
            a: self.a.clone(),
        }
    }
}

/// Outcome of a `(u, m, e, s)`-net check in base `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetReport {
    pub b: u32,
    pub m: usize,
    pub s: usize,
    pub e: Vec<usize>,
    pub u: usize,
    pub pass: bool,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub minimal_u: Option<usize>,
    /// Number of admissible depth vectors `d` examined.
    #[serde(skip)]
    pub shapes_checked: usize,
    /// How many intervals held each observed count, over all shapes.
    #[serde(skip)]
    pub histogram: BTreeMap<u64, u64>,
}

/// Depth vectors `d` with `e_i | d_i` and `Σ d_i <= budget`, in lexicographic order.
pub fn admissible_depths(e: &[usize], budget: usize) -> Vec<Vec<usize>> {
    fn rec(e: &[usize], budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&step, rest)) = e.split_first() else {
            out.push(cur.clone());
            return;
        };
        let mut d = 0;
        while d <= budget {
            cur.push(d);
            rec(rest, budget - d, cur, out);
            cur.pop();
            d += step;
        }
    }
    let mut out = Vec::new();
    rec(e, budget, &mut Vec::with_capacity(e.len()), &mut out);
    out
}

struct ShapeOutcome {
    witness: Option<Witness>,
    histogram: BTreeMap<u64, u64>,
}

fn check_shape(points: &[DigitPoint], b: u64, m: usize, d: &[usize]) -> ShapeOutcome {
    let total: usize = d.iter().sum();
    let buckets = b.pow(total as u32) as usize;
    let expected = b.pow((m - total) as u32);
    let mut counts = vec![0u64; buckets];
    for p in points {
        let idx = d.iter().enumerate().fold(0u64, |acc, (i, &di)| {
            acc * b.pow(di as u32) + p.coordinate(i).prefix_value(di)
        });
        counts[idx as usize] += 1;
    }
    let mut histogram = BTreeMap::new();
    for &c in &counts {
        *histogram.entry(c).or_insert(0) += 1;
    }
    let witness = counts.iter().position(|&c| c != expected).map(|idx| {
        let mut rest = idx as u64;
        let mut a = vec![0u64; d.len()];
        for i in (0..d.len()).rev() {
            let radix = b.pow(d[i] as u32);
            a[i] = rest % radix;
            rest /= radix;
        }
        Witness {
            d: d.to_vec(),
            a,
            count: counts[idx],
            expected,
        }
    });
    ShapeOutcome { witness, histogram }
}

/// Checks Definition-style net equidistribution: every interval with
/// `e_i | d_i` and `Σ d_i <= m - u` must hold exactly `b^{m - Σ d_i}` points.
///
/// Shapes are checked in parallel; the reported witness is the first failing
/// shape in lexicographic order of `d`, and within it the smallest anchor.
pub fn check_net(
    points: &[DigitPoint],
    b: u32,
    m: usize,
    u: usize,
    e: &[usize],
) -> Result<NetReport> {
    if b < 2 {
        return Err(Error::BadBase(b as u64));
    }
    let expected_len = (b as u128)
        .checked_pow(m as u32)
        .filter(|&n| n <= MAX_NET_POINTS);
    let Some(expected_len) = expected_len else {
        return Err(Error::EnumerationCap((b as u128).saturating_pow(m as u32)));
    };
    if points.len() as u128 != expected_len {
        return Err(Error::WrongCardinality {
            expected: expected_len,
            got: points.len(),
        });
    }
    if u > m {
        return Err(Error::InvalidParameter(format!("u = {u} exceeds m = {m}")));
    }
    if e.contains(&0) {
        return Err(Error::InvalidParameter("e_i must be at least 1".into()));
    }
    let s = e.len();
    for (index, p) in points.iter().enumerate() {
        if p.dimension() != s {
            return Err(Error::DimensionMismatch {
                expected: s,
                got: p.dimension(),
            });
        }
        if p.coordinates().iter().any(|c| c.base() != b) {
            return Err(Error::InvalidParameter(format!(
                "point {index} is not in base {b}"
            )));
        }
        if p.precision() < m {
            return Err(Error::InsufficientPrecision { index, needed: m });
        }
    }
    let shapes = admissible_depths(e, m - u);
    let outcomes: Vec<ShapeOutcome> = shapes
        .par_iter()
        .map(|d| check_shape(points, b as u64, m, d))
        .collect();
    let mut histogram = BTreeMap::new();
    let mut witness = None;
    for o in outcomes {
        for (k, v) in o.histogram {
            *histogram.entry(k).or_insert(0) += v;
        }
        if witness.is_none() {
            witness = o.witness;
        }
    }
    Ok(NetReport {
        b,
        m,
        s,
        e: e.to_vec(),
        u,
        pass: witness.is_none(),
        witness,
        minimal_u: None,
        shapes_checked: shapes.len(),
        histogram,
    })
}

/// Smallest `u` for which `check_net` passes. Passing is monotone in `u`.
pub fn minimal_u(points: &[DigitPoint], b: u32, m: usize, e: &[usize]) -> Result<usize> {
    for u in 0..=m {
        if check_net(points, b, m, u, e)?.pass {
            return Ok(u);
        }
    }
    Ok(m)
}

/// One block `k b^m <= n < (k + 1) b^m` of a sequence check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub k: u64,
    pub m: usize,
    pub report: NetReport,
}

/// Aggregate of the block checks of a sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub b: u32,
    pub s: usize,
    pub e: Vec<usize>,
    pub u: usize,
    pub pass: bool,
    pub blocks: Vec<BlockReport>,
}

impl SequenceReport {
    pub fn first_failure(&self) -> Option<&BlockReport> {
        self.blocks.iter().find(|b| !b.report.pass)
    }
}

/// Checks that for every `m` and `k` in range the truncated points
/// `[x_n]_{b,m}`, `k b^m <= n < (k+1) b^m`, form a `(u, m, e, s)`-net.
pub fn check_sequence(
    construction: &Construction,
    m_range: RangeInclusive<usize>,
    k_range: RangeInclusive<u64>,
    u: usize,
    e: &[usize],
) -> Result<SequenceReport> {
    if e.len() != construction.dimension() {
        return Err(Error::DimensionMismatch {
            expected: construction.dimension(),
            got: e.len(),
        });
    }
    let b = construction.base();
    let mut blocks = Vec::new();
    for m in m_range {
        if m <= u {
            return Err(Error::InvalidParameter(format!(
                "block size m = {m} must exceed u = {u}"
            )));
        }
        let size = (b as u64)
            .checked_pow(m as u32)
            .filter(|&n| n as u128 <= MAX_NET_POINTS)
            .ok_or(Error::EnumerationCap((b as u128).saturating_pow(m as u32)))?;
        for k in k_range.clone() {
            let start = k
                .checked_mul(size)
                .ok_or(Error::EnumerationCap(k as u128 * size as u128))?;
            let points = construction.points(start, size, m)?;
            let report = check_net(&points, b, m, u, e)?;
            blocks.push(BlockReport { k, m, report });
        }
    }
    Ok(SequenceReport {
        b,
        s: e.len(),
        e: e.to_vec(),
        u,
        pass: blocks.iter().all(|blk| blk.report.pass),
        blocks,
    })
}

/// `t = u + Σ (e_i - 1)`.
pub fn t_from_u(u: usize, e: &[usize]) -> usize {
    u + e.iter().map(|&ei| ei.saturating_sub(1)).sum::<usize>()
}

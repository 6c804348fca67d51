use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sequence::DigitPoint;
use crate::Rational;

/// Largest dimension accepted by the exact discrepancy routines.
pub const MAX_DISCREPANCY_DIMENSION: usize = 3;

fn cmp<T: PartialOrd>(a: &T, b: &T) -> Ordering {
    a.partial_cmp(b).expect("coordinates are comparable")
}

fn max<T: Scalar>(a: T, b: T) -> T {
    if b > a {
        b
    } else {
        a
    }
}

fn validate<T>(points: &[Vec<T>]) -> Result<usize> {
    let s = points
        .first()
        .map(Vec::len)
        .ok_or(Error::TooSmall { min: 1, got: 0 })?;
    if s == 0 || s > MAX_DISCREPANCY_DIMENSION {
        return Err(Error::InvalidParameter(format!(
            "dimension {s} not in 1..={MAX_DISCREPANCY_DIMENSION}"
        )));
    }
    if let Some(p) = points.iter().find(|p| p.len() != s) {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: p.len(),
        });
    }
    Ok(s)
}

/// One-dimensional star discrepancy by the sorted-points formula
/// `1/(2N) + max_i |x_(i) - (2i - 1)/(2N)|`.
pub fn star_discrepancy_1d<T: Scalar>(xs: &[T]) -> Result<T> {
    if xs.is_empty() {
        return Err(Error::TooSmall { min: 1, got: 0 });
    }
    let mut sorted = xs.to_vec();
    sorted.sort_by(cmp);
    let two_n = T::from_usize(2 * xs.len()).expect("N representable");
    let mut worst = T::zero();
    for (i, x) in sorted.into_iter().enumerate() {
        let center = T::from_usize(2 * i + 1).expect("index representable") / two_n.clone();
        let dev = if x > center { x - center } else { center - x };
        worst = max(worst, dev);
    }
    Ok(T::one() / two_n + worst)
}

/// Star discrepancy as the maximum over the critical grid: boxes `[0, y)` and
/// `[0, y]` whose corners use point coordinates (or 1) in every dimension.
/// Repeated points are counted with multiplicity.
pub fn star_discrepancy_grid<T: Scalar>(points: &[Vec<T>]) -> Result<T> {
    let s = validate(points)?;
    let n = T::from_usize(points.len()).expect("N representable");
    let mut grids: Vec<Vec<T>> = Vec::with_capacity(s);
    let mut ranks: Vec<Vec<usize>> = vec![Vec::with_capacity(s); points.len()];
    for j in 0..s {
        let mut g: Vec<T> = points.iter().map(|p| p[j].clone()).collect();
        g.sort_by(cmp);
        g.dedup();
        if g.last().is_none_or(|v| *v < T::one()) {
            g.push(T::one());
        }
        for (p, r) in points.iter().zip(ranks.iter_mut()) {
            r.push(
                g.binary_search_by(|v| cmp(v, &p[j]))
                    .expect("coordinate on grid"),
            );
        }
        grids.push(g);
    }
    let mut idx = vec![0usize; s];
    let mut worst = T::zero();
    loop {
        let volume = idx
            .iter()
            .enumerate()
            .fold(T::one(), |acc, (j, &i)| acc * grids[j][i].clone());
        let (mut open, mut closed) = (0usize, 0usize);
        for r in &ranks {
            if r.iter().zip(&idx).all(|(a, b)| a <= b) {
                closed += 1;
                if r.iter().zip(&idx).all(|(a, b)| a < b) {
                    open += 1;
                }
            }
        }
        let open = T::from_usize(open).expect("count representable") / n.clone();
        let closed = T::from_usize(closed).expect("count representable") / n.clone();
        worst = max(worst, volume.clone() - open);
        worst = max(worst, closed - volume);
        // odometer over the grid
        let mut j = 0;
        loop {
            if j == s {
                return Ok(worst);
            }
            idx[j] += 1;
            if idx[j] < grids[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// `D*_N` for points given as scalars; `s = 1` uses the closed form.
pub fn star_discrepancy<T: Scalar>(points: &[Vec<T>]) -> Result<T> {
    let s = validate(points)?;
    if s == 1 {
        let xs: Vec<T> = points.iter().map(|p| p[0].clone()).collect();
        star_discrepancy_1d(&xs)
    } else {
        star_discrepancy_grid(points)
    }
}

/// Exact `D*_N` of digit points, in rational arithmetic.
pub fn star_discrepancy_exact(points: &[DigitPoint]) -> Result<Rational> {
    let values: Vec<Vec<Rational>> = points.iter().map(DigitPoint::to_rational).collect();
    star_discrepancy(&values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn one_dimensional_values() {
        assert_eq!(star_discrepancy(&[vec![r(0, 1)]]).unwrap(), r(1, 1));
        assert_eq!(
            star_discrepancy(&[vec![r(0, 1)], vec![r(1, 2)]]).unwrap(),
            r(1, 2)
        );
        let vdc: Vec<Vec<Rational>> = [0, 2, 1, 3].iter().map(|&k| vec![r(k, 4)]).collect();
        assert_eq!(star_discrepancy(&vdc).unwrap(), r(1, 4));
        assert_eq!(star_discrepancy_grid(&vdc).unwrap(), r(1, 4));
    }

    #[test]
    fn duplicates_counted_with_multiplicity() {
        let pts = vec![vec![r(1, 2)], vec![r(1, 2)]];
        // closed box [0, 1/2] holds both points: 1 - 1/2
        assert_eq!(star_discrepancy(&pts).unwrap(), r(1, 2));
        assert_eq!(star_discrepancy_grid(&pts).unwrap(), r(1, 2));
    }

    #[test]
    fn two_dimensional_single_point() {
        // one point at the origin: the closed box [0,0]^2 gives 1
        assert_eq!(
            star_discrepancy(&[vec![r(0, 1), r(0, 1)]]).unwrap(),
            r(1, 1)
        );
        let d = star_discrepancy(&[vec![r(1, 2), r(1, 2)]]).unwrap();
        // [0,1) x [0,1/2) is empty with volume 1/2; [0,1/2]^2 holds it with volume 1/4
        assert_eq!(d, r(3, 4));
    }

    #[test]
    fn float_and_exact_agree() {
        let pts: Vec<Vec<f64>> = vec![
            vec![0.0, 0.0],
            vec![0.5, 0.5],
            vec![0.25, 0.75],
            vec![0.75, 0.25],
        ];
        let exact: Vec<Vec<Rational>> = [(0, 0), (2, 2), (1, 3), (3, 1)]
            .iter()
            .map(|&(a, b)| vec![r(a, 4), r(b, 4)])
            .collect();
        let d = star_discrepancy(&pts).unwrap();
        let e = star_discrepancy(&exact).unwrap();
        assert!((d - num_traits::ToPrimitive::to_f64(&e).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn errors() {
        assert!(star_discrepancy::<f64>(&[]).is_err());
        assert!(star_discrepancy(&[vec![0.0; 4]]).is_err());
        assert!(star_discrepancy(&[vec![0.0, 0.1], vec![0.2]]).is_err());
    }
}

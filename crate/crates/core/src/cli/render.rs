use serde_json::json;

use crate::cli::OutputMode;
use crate::error::{Error, Result};
use crate::sequence::{DigitCoordinate, DigitPoint};

const DIGIT_CHARS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// One char per digit for bases up to 36, dot-separated decimals above.
pub(crate) fn digit_string(c: &DigitCoordinate) -> String {
    if c.base() as usize <= DIGIT_CHARS.len() {
        c.digits()
            .iter()
            .map(|&d| DIGIT_CHARS[d as usize] as char)
            .collect()
    } else {
        c.digits()
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

pub(crate) fn parse_digit_string(s: &str, base: u32) -> Result<DigitCoordinate> {
    let err = || Error::Parse(format!("bad digit string {s:?} for base {base}"));
    let digits: Vec<u32> = if base as usize <= DIGIT_CHARS.len() {
        s.chars()
            .map(|ch| ch.to_digit(36).ok_or_else(err))
            .collect::<Result<_>>()?
    } else if s.is_empty() {
        Vec::new()
    } else {
        s.split('.')
            .map(|t| t.parse::<u32>().map_err(|_| err()))
            .collect::<Result<_>>()?
    };
    if digits.iter().any(|&d| d >= base) {
        return Err(err());
    }
    Ok(DigitCoordinate::new(base, digits))
}

pub(crate) fn points_csv(
    start: u64,
    points: &[DigitPoint],
    mode: OutputMode,
    decimals: usize,
) -> String {
    let s = points.first().map(|p| p.dimension()).unwrap_or(0);
    let mut out = String::from("n");
    for i in 1..=s {
        out.push_str(&format!(",x{i}"));
    }
    out.push('\n');
    for (offset, p) in points.iter().enumerate() {
        out.push_str(&(start + offset as u64).to_string());
        for c in p.coordinates() {
            out.push(',');
            match mode {
                OutputMode::Real => out.push_str(&format!("{:.*}", decimals, c.value::<f64>())),
                _ => out.push_str(&digit_string(c)),
            }
        }
        out.push('\n');
    }
    out
}

pub(crate) fn points_json(start: u64, points: &[DigitPoint]) -> serde_json::Value {
    let rows: Vec<_> = points
        .iter()
        .enumerate()
        .map(|(offset, p)| {
            let coords: Vec<_> = p
                .coordinates()
                .iter()
                .map(|c| json!({ "base": c.base(), "digits": c.digits(), "value": c.value::<f64>() }))
                .collect();
            json!({ "n": start + offset as u64, "coordinates": coords })
        })
        .collect();
    json!(rows)
}

/// Reads a digits-mode CSV: `#` comments and the header row are skipped.
pub(crate) fn parse_points_csv(text: &str, base: u32) -> Result<Vec<DigitPoint>> {
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .skip(1)
        .map(|line| {
            let coords = line
                .split(',')
                .skip(1)
                .map(|field| parse_digit_string(field.trim(), base))
                .collect::<Result<Vec<_>>>()?;
            Ok(DigitPoint::new(coords))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_strings_round_trip() {
        for (base, digits) in [
            (2u32, vec![1, 0, 1]),
            (36, vec![35, 0]),
            (257, vec![256, 3, 0]),
            (5, vec![]),
        ] {
            let c = DigitCoordinate::new(base, digits);
            assert_eq!(parse_digit_string(&digit_string(&c), base).unwrap(), c);
        }
        assert!(parse_digit_string("12", 2).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let pts = vec![
            DigitPoint::from_digits(3, vec![vec![0, 1], vec![2, 2]]),
            DigitPoint::from_digits(3, vec![vec![1, 0], vec![0, 1]]),
        ];
        let text = points_csv(0, &pts, OutputMode::Digits, 0);
        assert_eq!(text, "n,x1,x2\n0,01,22\n1,10,01\n");
        assert_eq!(parse_points_csv(&text, 3).unwrap(), pts);
        let real = points_csv(4, &pts, OutputMode::Real, 3);
        assert_eq!(real, "n,x1,x2\n4,0.111,0.889\n5,0.333,0.111\n");
    }
}

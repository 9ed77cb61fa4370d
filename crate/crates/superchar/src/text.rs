//! Text helpers for half-integers stored as doubled integers.

use crate::error::{Error, Result};

/// Parses "3", "-2", "3/2", "1.5" or "−1/2" into a doubled integer.
pub fn parse_half(s: &str) -> Result<i64> {
    let t = s.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("not an integer or half-integer: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        return match den.trim() {
            "1" => Ok(2 * num),
            "2" => Ok(num),
            _ => Err(bad()),
        };
    }
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let whole: i64 = match int.trim() {
            "" | "-" | "+" => 0,
            x => x.parse().map_err(|_| bad())?,
        };
        let frac = frac.trim_end_matches('0');
        let half = match frac {
            "" => 0,
            "5" => 1,
            _ => return Err(bad()),
        };
        return Ok(2 * whole + if neg { -half } else { half });
    }
    t.parse::<i64>().map(|v| 2 * v).map_err(|_| bad())
}

/// Renders a doubled integer as "3", "-2" or "3/2".
pub fn fmt_half(d: i64) -> String {
    if d % 2 == 0 {
        (d / 2).to_string()
    } else {
        format!("{d}/2")
    }
}

//! Phase angles on the command line: plain radians (`1.5708`) or multiples
//! of π (`pi`, `-pi`, `2pi`, `1/2 pi`, `3/4pi`, `pi/2`, `π`).

use std::f64::consts::PI;

fn coefficient(s: &str) -> Option<f64> {
    let s = s.trim().trim_end_matches('*').trim();
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => match s.split_once('/') {
            Some((k, m)) => {
                let (k, m) = (k.trim().parse::<f64>().ok()?, m.trim().parse::<f64>().ok()?);
                (m != 0.0).then(|| k / m)
            }
            None => s.parse().ok(),
        },
    }
}

pub fn parse_phase(text: &str) -> Result<f64, String> {
    let t = text.trim().to_ascii_lowercase().replace('π', "pi");
    let value = match t.find("pi") {
        Some(i) => {
            let coef = coefficient(&t[..i]);
            let rest = t[i + 2..].trim();
            let divisor = if rest.is_empty() {
                Some(1.0)
            } else {
                rest.strip_prefix('/')
                    .and_then(|d| d.trim().parse::<f64>().ok())
                    .filter(|&d| d != 0.0)
            };
            coef.zip(divisor).map(|(c, d)| c * PI / d)
        }
        None => t.parse::<f64>().ok(),
    };
    value
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("cannot read phase {text:?}; use radians or \"k/m pi\""))
}

/// Exactly three comma-separated phases.
pub fn parse_phases(text: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated phases, got {}", parts.len()));
    }
    Ok([parse_phase(parts[0])?, parse_phase(parts[1])?, parse_phase(parts[2])?])
}

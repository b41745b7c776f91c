//! Byte-level randomness statistics in the style of the classic ENT tool.
//!
//! * entropy: Shannon entropy of the byte histogram, bits per byte
//! * chi-square: against a flat histogram, 255 degrees of freedom
//! * mean: arithmetic mean of byte values
//! * Monte-Carlo π: non-overlapping 6-byte groups as two 24-bit big-endian
//!   coordinates in the unit square, counted inside the quarter circle when
//!   `x² + y² < 1`
//! * serial correlation: lag-1, wrapping the last byte around to the first

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Smallest input with at least one Monte-Carlo point.
pub const MIN_BYTES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntReport {
    pub entropy: f64,
    pub chi_square: f64,
    pub mean: f64,
    pub mc_pi: f64,
    pub serial_corr: f64,
    pub n_bytes: usize,
}

impl EntReport {
    /// Ideal values for a perfectly random stream.
    pub const OPTIMAL: EntReport = EntReport {
        entropy: 8.0,
        chi_square: 256.0,
        mean: 127.5,
        mc_pi: PI,
        serial_corr: 0.0,
        n_bytes: 0,
    };

    pub fn mc_pi_error(&self) -> f64 {
        (self.mc_pi - PI).abs()
    }
}

pub fn analyze(data: &[u8]) -> Result<EntReport> {
    let n = data.len();
    if n < MIN_BYTES {
        return Err(Error::InputTooShort {
            len: n,
            min: MIN_BYTES,
        });
    }

    let mut counts = [0u64; 256];
    for &b in data {
        counts[b as usize] += 1;
    }
    let nf = n as f64;

    let entropy = -counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / nf;
            p * p.log2()
        })
        .sum::<f64>();

    let expected = nf / 256.0;
    let chi_square = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();

    // Integer sums keep mean and serial correlation exact up to the final division.
    let sum: u128 = data.iter().map(|&b| b as u128).sum();
    let sum_sq: u128 = data.iter().map(|&b| (b as u128) * (b as u128)).sum();
    let sum_lag: u128 = data
        .iter()
        .zip(data.iter().cycle().skip(1))
        .map(|(&a, &b)| (a as u128) * (b as u128))
        .sum();
    let mean = sum as f64 / nf;

    let num = n as i128 * sum_lag as i128 - (sum * sum) as i128;
    let den = n as i128 * sum_sq as i128 - (sum * sum) as i128;
    let serial_corr = if den == 0 { 0.0 } else { num as f64 / den as f64 };

    let scale = (1u32 << 24) as f64;
    let (inside, points) = data
        .chunks_exact(6)
        .fold((0u64, 0u64), |(inside, points), g| {
            let x = u32::from_be_bytes([0, g[0], g[1], g[2]]) as f64 / scale;
            let y = u32::from_be_bytes([0, g[3], g[4], g[5]]) as f64 / scale;
            (inside + u64::from(x * x + y * y < 1.0), points + 1)
        });
    let mc_pi = 4.0 * inside as f64 / points as f64;

    Ok(EntReport {
        entropy,
        chi_square,
        mean,
        mc_pi,
        serial_corr,
        n_bytes: n,
    })
}

const ROWS: [&str; 5] = [
    "Entropy",
    "Chi-square",
    "Arithmetic Mean",
    "Monte-Carlo π",
    "Serial Correlation Coefficient",
];

fn cells(r: &EntReport) -> [String; 5] {
    [
        format!("{:.6}", r.entropy),
        format!("{:.2}", r.chi_square),
        format!("{:.4}", r.mean),
        format!("{:.9}", r.mc_pi),
        format!("{:.6}", r.serial_corr),
    ]
}

/// Renders the comparison table: one row per statistic, the optimal values
/// first, then one column per named report.
pub fn report_table(reports: &[(&str, EntReport)]) -> String {
    let mut header = vec!["Parameters".to_string(), "Optimal values".to_string()];
    header.extend(reports.iter().map(|(name, _)| name.to_string()));

    let optimal = cells(&EntReport::OPTIMAL);
    let columns: Vec<[String; 5]> = reports.iter().map(|(_, r)| cells(r)).collect();
    let mut rows: Vec<Vec<String>> = Vec::with_capacity(5);
    for (i, label) in ROWS.iter().enumerate() {
        let mut row = vec![label.to_string(), optimal[i].clone()];
        row.extend(columns.iter().map(|c| c[i].clone()));
        rows.push(row);
    }

    let width = |col: usize| {
        std::iter::once(&header)
            .chain(rows.iter())
            .map(|r| r[col].chars().count())
            .max()
            .unwrap_or(0)
    };
    let widths: Vec<usize> = (0..header.len()).map(width).collect();
    let line = |cols: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in cols.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str(" | ");
            }
            let pad = w - c.chars().count();
            if i == 0 {
                let _ = write!(s, "{c}{}", " ".repeat(pad));
            } else {
                let _ = write!(s, "{}{c}", " ".repeat(pad));
            }
        }
        s.trim_end().to_string()
    };

    let mut out = line(&header);
    out.push('\n');
    let total: usize = widths.iter().sum::<usize>() + 3 * (widths.len() - 1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

/// One `name.statistic=value` line per statistic, full precision.
pub fn report_kv(reports: &[(&str, EntReport)]) -> String {
    let mut out = String::new();
    for (name, r) in reports {
        let prefix = if name.is_empty() {
            String::new()
        } else {
            format!("{name}.")
        };
        let _ = writeln!(out, "{prefix}n_bytes={}", r.n_bytes);
        let _ = writeln!(out, "{prefix}entropy={}", r.entropy);
        let _ = writeln!(out, "{prefix}chi_square={}", r.chi_square);
        let _ = writeln!(out, "{prefix}mean={}", r.mean);
        let _ = writeln!(out, "{prefix}mc_pi={}", r.mc_pi);
        let _ = writeln!(out, "{prefix}serial_corr={}", r.serial_corr);
    }
    out
}

//! Auxiliary one-variable inequalities used by the sufficient conditions.
//! Each function returns the left-hand side minus the right-hand side, so a
//! non-negative value means the inequality holds at that point.

use crate::error::{Error, Result};

/// Upper end of the interval on which [`lemma22_margin`] is claimed.
pub const LAMBDA_CAP: f64 = 7.11;

/// `x - 10/11 - (9/11) ln x - x^2/11` on `(0, 7.11]`.
pub fn lemma22_margin(x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= LAMBDA_CAP) {
        return Err(Error::Domain { op: "lemma22_margin", x, domain: "(0, 7.11]" });
    }
    Ok(x - 10.0 / 11.0 - 9.0 / 11.0 * x.ln() - x * x / 11.0)
}

/// `(2c+1)(x-d) + (b - x^2) - 2c ln x`, decreasing in `x` on `[max(c, 1), inf)`.
pub fn lemma34_f(x: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain { op: "lemma34_f", x, domain: "x > 0" });
    }
    if !(c >= 0.0) {
        return Err(Error::Domain { op: "lemma34_f", x: c, domain: "c >= 0" });
    }
    Ok((2.0 * c + 1.0) * (x - d) + (b - x * x) - 2.0 * c * x.ln())
}

/// Real roots of `x * f'(x) = -2x^2 + (2c+1)x - 2c`, ascending.
pub fn lemma34_derivative_roots(c: f64) -> Option<(f64, f64)> {
    let disc = 4.0 * c * c - 12.0 * c + 1.0;
    if disc < 0.0 {
        return None;
    }
    let s = disc.sqrt();
    Some(((2.0 * c + 1.0 - s) / 4.0, (2.0 * c + 1.0 + s) / 4.0))
}

/// `2(x-1)/sqrt(x) - 4 - ln x` for `x >= 13`.
pub fn lemma35_margin(x: f64) -> Result<f64> {
    if !(x >= 13.0) {
        return Err(Error::Domain { op: "lemma35_margin", x, domain: "[13, inf)" });
    }
    Ok(2.0 * (x - 1.0) / x.sqrt() - 4.0 - x.ln())
}

/// `(x-1) sqrt(1 - (2 ln x + 4)/x) - x + ln x + 4` for `x >= 13`.
pub fn lemma36_margin(x: f64) -> Result<f64> {
    if !(x >= 13.0) {
        return Err(Error::Domain { op: "lemma36_margin", x, domain: "[13, inf)" });
    }
    Ok((x - 1.0) * (1.0 - (2.0 * x.ln() + 4.0) / x).sqrt() - x + x.ln() + 4.0)
}

/// `n - 2 ln n - 3`, the average-degree threshold.
pub fn avg_degree_threshold(n: usize) -> f64 {
    let n = n as f64;
    n - 2.0 * n.ln() - 3.0
}

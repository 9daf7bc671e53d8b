//! Exact integer linear algebra on adjacency matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Determinant of the adjacency matrix as an exact integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactDet(pub BigInt);

impl ExactDet {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs_f64(&self) -> f64 {
        self.0.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    /// `ln |det|`; `-inf` for a singular matrix.
    pub fn ln_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        // ln of a huge integer without overflowing f64
        let bits = self.0.bits();
        if bits < 1000 {
            self.abs_f64().ln()
        } else {
            let shift = bits - 64;
            let top: BigInt = self.0.abs() >> shift;
            top.to_f64().expect("64-bit value").ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

impl std::fmt::Display for ExactDet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Fraction-free Gaussian elimination. Runs in checked `i128` and restarts in
/// arbitrary precision on the first overflow.
pub fn exact_determinant(g: &Graph) -> ExactDet {
    let n = g.order();
    let rows: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j) as i128).collect()).collect();
    match bareiss_i128(rows) {
        Some(d) => ExactDet(BigInt::from(d)),
        None => {
            let rows = (0..n).map(|i| (0..n).map(|j| BigInt::from(g.has_edge(i, j) as u8)).collect()).collect();
            ExactDet(bareiss_big(rows))
        }
    }
}

pub fn is_nonsingular(g: &Graph) -> bool {
    !exact_determinant(g).is_zero()
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n.saturating_sub(1) {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return Some(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i][j].checked_mul(a[k][k])?;
                let rhs = a[i][k].checked_mul(a[k][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[n - 1][n - 1])
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Integer coefficients of `det(xI - A)`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub coefficients: Vec<BigInt>,
}

pub const CHARPOLY_MAX_ORDER: usize = 32;

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// Faddeev–LeVerrier recurrence over big integers; every division is exact.
pub fn char_poly(g: &Graph) -> Result<CharPoly> {
    let n = g.order();
    if n > CHARPOLY_MAX_ORDER {
        return Err(Error::UnsupportedOrder { op: "char_poly", n, max: CHARPOLY_MAX_ORDER });
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // m holds M_k; a*m is computed from adjacency rows directly.
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for t in crate::graph::bits(g.neighbors(i)) {
                    s += &m[t][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        m = next;
        // c_{n-k} = -tr(A M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for t in crate::graph::bits(g.neighbors(i)) {
                tr += &m[t][i];
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k);
    }
    Ok(CharPoly { coefficients: coeffs })
}

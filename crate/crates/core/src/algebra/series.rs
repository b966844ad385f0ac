use std::fmt;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Element of `Q[t]/(t^{m+1})`; `coeffs[j]` is the coefficient of `t^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(m: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); m + 1],
        }
    }

    pub fn one(m: usize) -> Self {
        Self::monomial(m, 0, Rational::one())
    }

    /// `c t^k`, which is zero when `k > m`.
    pub fn monomial(m: usize, k: usize, c: Rational) -> Self {
        let mut s = Self::zero(m);
        if k <= m {
            s.coeffs[k] = c;
        }
        s
    }

    /// Truncates or zero-pads `coeffs` to length `m + 1`.
    pub fn from_coeffs(m: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(m + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(m: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(m, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Least `j` with a nonzero coefficient; `None` stands for `+inf`.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Highest index with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::TruncationMismatch(self.truncation(), other.truncation()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.truncation();
        let mut out = vec![Rational::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=m - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn invert(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NonUnit);
        }
        let m = self.truncation();
        let a0_inv = self.coeffs[0].recip();
        let mut inv = vec![Rational::zero(); m + 1];
        inv[0] = a0_inv.clone();
        for k in 1..=m {
            let mut s = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &inv[k - j];
                }
            }
            inv[k] = -s * &a0_inv;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Multiplies by `t^k`, dropping what falls past the truncation.
    pub fn shift_up(&self, k: usize) -> Self {
        let m = self.truncation();
        let mut out = vec![Rational::zero(); m + 1];
        for j in 0..=m {
            if j + k <= m {
                out[j + k] = self.coeffs[j].clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Drops the terms below `t^k` and divides by `t^k`, filling the
    /// unknown top coefficients with zero.
    pub fn shift_down(&self, k: usize) -> Self {
        let m = self.truncation();
        let mut out = vec![Rational::zero(); m + 1];
        if k <= m {
            out[..=m - k].clone_from_slice(&self.coeffs[k..]);
        }
        TruncatedSeries { coeffs: out }
    }

    /// Keeps the coefficients of `t^j` for `j < k`.
    pub fn truncate_below(&self, k: usize) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut().skip(k) {
            *c = Rational::zero();
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_series(self))
    }
}

//! Integer coefficient vectors with a fixed stored length.
//!
//! δ-vectors and W-polynomials are compared coefficientwise, and their stored
//! length (dimension + 1) is part of the value, so trailing zeros are kept.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `t` stored as `coeffs[j]` = coefficient of `t^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(vec![BigInt::zero(); len])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Stored length, trailing zeros included.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest index with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Coefficients `0..=degree`, i.e. with stored trailing zeros dropped.
    pub fn effective(&self) -> &[BigInt] {
        match self.degree() {
            Some(d) => &self.coeffs[..=d],
            None => &[],
        }
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// First index holding a negative coefficient.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_negative())
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Pads with zeros (or truncates) to `len` coefficients.
    pub fn resized(&self, len: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        Self::new(coeffs)
    }

    /// Equality after dropping trailing zeros on both sides.
    pub fn same_polynomial(&self, other: &Self) -> bool {
        self.effective() == other.effective()
    }
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

/// ASCII rendering in the usual notation, e.g. `1 + 3t + t^2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let show_coeff = j == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match j {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{j}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Exact binomial coefficient `binom(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle with alternating signs: `(-1)^k binom(n, k)`.
pub(crate) fn signed_binomial_row(n: u64) -> Vec<BigInt> {
    (0..=n)
        .map(|k| {
            let b = binomial(n, k);
            if k.is_odd() {
                -b
            } else {
                b
            }
        })
        .collect()
}

/// Coefficients of `(1 - t)^power · Σ_m values[m] t^m`, truncated to the
/// length of `values`.
///
/// This is the numerator of a rational generating function whose
/// denominator is `(1 - t)^power`; when `values` comes from a polynomial
/// of degree < `power`, every coefficient past `power - 1` vanishes.
pub fn series_numerator(values: &[BigInt], power: u64) -> Vec<BigInt> {
    let row = signed_binomial_row(power);
    (0..values.len())
        .map(|j| {
            row.iter()
                .take(j + 1)
                .enumerate()
                .map(|(k, b)| b * &values[j - k])
                .sum()
        })
        .collect()
}

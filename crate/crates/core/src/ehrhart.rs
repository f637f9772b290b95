//! δ-vectors from lattice-count tables and back.
//!
//! If `i(Q; m)` is a polynomial of degree at most `d`, its generating series is
//! `δ(t) / (1 - t)^{d+1}` with `deg δ ≤ d`. Everything here is exact.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{binomial, series_numerator, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EhrhartError {
    #[error("need counts for m = 0..={dim} ({needed} values), got {got}")]
    InsufficientCounts { dim: usize, needed: usize, got: usize },
    #[error("count of the zeroth dilation must be 1, got {0}")]
    OriginCount(BigUint),
    #[error("coefficient {index} is negative ({value})")]
    Negative { index: usize, value: BigInt },
    #[error("series numerator has nonzero coefficient {value} at t^{index}, past the dimension")]
    NonVanishing { index: usize, value: BigInt },
}

/// A δ-vector of stored length `dim + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaVector {
    dim: usize,
    poly: IntPolynomial,
}

impl DeltaVector {
    /// Checks the stored length, `δ_0 = 1` and nonnegativity.
    pub fn new(dim: usize, poly: IntPolynomial) -> Result<Self, EhrhartError> {
        let poly = poly.resized(dim + 1);
        if let Some(index) = poly.first_negative() {
            return Err(EhrhartError::Negative {
                index,
                value: poly.coeffs()[index].clone(),
            });
        }
        if !poly.coeffs()[0].is_one() {
            let origin = poly.coeffs()[0].to_biguint().unwrap_or_default();
            return Err(EhrhartError::OriginCount(origin));
        }
        Ok(Self { dim, poly })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn into_poly(self) -> IntPolynomial {
        self.poly
    }
}

fn signed(values: &[BigUint]) -> Vec<BigInt> {
    values
        .iter()
        .map(|v| BigInt::from_biguint(Sign::Plus, v.clone()))
        .collect()
}

/// Numerator of `Σ_m values[m] t^m` over `(1 - t)^{dim+1}`, truncated to
/// `dim + 1` coefficients. Signs are not checked.
///
/// `values` must hold at least `dim + 1` entries; any entries past that are
/// used to confirm the numerator really has degree ≤ `dim`.
pub fn series_delta(values: &[BigUint], dim: usize) -> Result<IntPolynomial, EhrhartError> {
    let needed = dim + 1;
    if values.len() < needed {
        return Err(EhrhartError::InsufficientCounts {
            dim,
            needed,
            got: values.len(),
        });
    }
    let numerator = series_numerator(&signed(values), needed as u64);
    if let Some((index, value)) = numerator
        .iter()
        .enumerate()
        .skip(needed)
        .find(|(_, c)| !c.is_zero())
    {
        return Err(EhrhartError::NonVanishing {
            index,
            value: value.clone(),
        });
    }
    Ok(IntPolynomial::new(numerator[..needed].to_vec()))
}

/// [`series_delta`], rejecting negative coefficients.
pub(crate) fn checked_numerator(values: &[BigUint], dim: usize) -> Result<IntPolynomial, EhrhartError> {
    let poly = series_delta(values, dim)?;
    if let Some(index) = poly.first_negative() {
        return Err(EhrhartError::Negative {
            index,
            value: poly.coeffs()[index].clone(),
        });
    }
    Ok(poly)
}

/// `δ_j = Σ_{k=0}^{j} (-1)^k binom(d+1, k) · counts[j-k]` for `j = 0..=d`.
pub fn delta_from_counts(counts: &[BigUint], dim: usize) -> Result<DeltaVector, EhrhartError> {
    if let Some(first) = counts.first() {
        if !first.is_one() {
            return Err(EhrhartError::OriginCount(first.clone()));
        }
    }
    let poly = checked_numerator(counts, dim)?;
    DeltaVector::new(dim, poly)
}

/// `i(m) = Σ_j δ_j · binom(m - j + d, d)` for `m = 0..=horizon`.
pub fn counts_from_delta(delta: &DeltaVector, horizon: u64) -> Vec<BigUint> {
    let d = delta.dim as u64;
    (0..=horizon)
        .map(|m| {
            let total: BigInt = delta
                .poly
                .coeffs()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j as u64 <= m)
                .map(|(j, c)| c * binomial(m - j as u64 + d, d))
                .sum();
            total.to_biguint().expect("nonnegative δ gives nonnegative counts")
        })
        .collect()
}

/// The interpolating polynomial through `(m, counts[m])`, `m = 0..=dim`,
/// as rational coefficients of `m^0, m^1, …`.
pub fn ehrhart_polynomial(counts: &[BigUint], dim: usize) -> Result<Vec<BigRational>, EhrhartError> {
    if counts.len() < dim + 1 {
        return Err(EhrhartError::InsufficientCounts {
            dim,
            needed: dim + 1,
            got: counts.len(),
        });
    }
    // leading entries of the forward-difference table
    let mut row = signed(&counts[..=dim]);
    let mut leading = Vec::with_capacity(dim + 1);
    while !row.is_empty() {
        leading.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // Newton form Σ_k Δ^k(0) · binom(m, k), expanded into monomials
    let mut result = vec![BigRational::zero(); dim + 1];
    let mut basis = vec![BigRational::one()]; // binom(m, k) as a polynomial in m
    for (k, diff) in leading.iter().enumerate() {
        let diff = BigRational::from_integer(diff.clone());
        for (i, b) in basis.iter().enumerate() {
            result[i] += &diff * b;
        }
        // binom(m, k+1) = binom(m, k) · (m - k) / (k + 1)
        let denom = BigRational::from_integer(BigInt::from(k + 1));
        let shift = BigRational::from_integer(BigInt::from(k));
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b / &denom;
            next[i] -= b * &shift / &denom;
        }
        basis = next;
    }
    Ok(result)
}

pub fn eval_rational(coeffs: &[BigRational], m: i64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(m));
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// Degree of the polynomial sampled at consecutive integer points, if the
/// table is long enough to certify it: the index of the last nonzero row of
/// forward differences, provided a nonempty all-zero row follows.
pub fn finite_difference_degree(values: &[BigInt]) -> Option<usize> {
    let mut row = values.to_vec();
    let mut last_nonzero = None;
    let mut k = 0;
    while !row.is_empty() {
        if row.iter().all(Zero::is_zero) {
            return last_nonzero;
        }
        last_nonzero = Some(k);
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        k += 1;
    }
    None
}

/// Exact check that `finite_difference_degree` found a constant, positive
/// top difference, i.e. growth of order `m^degree` with positive leading term.
pub fn leading_difference(values: &[BigInt], degree: usize) -> Option<BigInt> {
    let mut row = values.to_vec();
    for _ in 0..degree {
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let first = row.first()?.clone();
    (row.iter().all(|v| *v == first) && first.is_positive()).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_from_counts(&u(&[1, 2]), 1).unwrap().poly(), &p(&[1, 0]));
        assert_eq!(delta_from_counts(&u(&[1, 5, 14, 30]), 3).unwrap().poly(), &p(&[1, 1, 0, 0]));
        assert_eq!(delta_from_counts(&u(&[1, 3, 6]), 2).unwrap().poly(), &p(&[1, 0, 0]));
    }

    #[test]
    fn delta_errors() {
        assert_eq!(
            delta_from_counts(&u(&[1, 5]), 3),
            Err(EhrhartError::InsufficientCounts { dim: 3, needed: 4, got: 2 })
        );
        assert_eq!(
            delta_from_counts(&u(&[2, 4]), 1),
            Err(EhrhartError::OriginCount(BigUint::from(2u32)))
        );
        // 1, 1, 3: δ = (1, -1, 2)
        assert!(matches!(
            delta_from_counts(&u(&[1, 1, 3]), 2),
            Err(EhrhartError::Negative { index: 1, .. })
        ));
        // m+1 then a jump that no degree-1 polynomial explains
        assert!(matches!(
            delta_from_counts(&u(&[1, 2, 3, 5]), 1),
            Err(EhrhartError::NonVanishing { index: 3, .. })
        ));
    }

    #[test]
    fn longer_tables_are_cross_checked() {
        // P_3 counts continue 55, 91 (cube oracle values)
        let dv = delta_from_counts(&u(&[1, 5, 14, 30, 55, 91]), 3).unwrap();
        assert_eq!(dv.poly(), &p(&[1, 1, 0, 0]));
    }

    #[test]
    fn counts_from_delta_examples() {
        let seg = DeltaVector::new(1, p(&[1, 0])).unwrap();
        assert_eq!(counts_from_delta(&seg, 4), u(&[1, 2, 3, 4, 5]));
        let p3 = DeltaVector::new(3, p(&[1, 1, 0, 0])).unwrap();
        assert_eq!(counts_from_delta(&p3, 3), u(&[1, 5, 14, 30]));
        // binom(m+4,4) + 3 binom(m+3,4) + binom(m+2,4) at m = 0, 1, 2
        let d4 = DeltaVector::new(4, p(&[1, 3, 1])).unwrap();
        assert_eq!(counts_from_delta(&d4, 2), u(&[1, 8, 31]));
    }

    #[test]
    fn delta_vector_checks() {
        assert!(matches!(
            DeltaVector::new(2, p(&[1, -2, 1])),
            Err(EhrhartError::Negative { index: 1, .. })
        ));
        assert!(DeltaVector::new(2, p(&[2, 1])).is_err());
        assert_eq!(DeltaVector::new(3, p(&[1, 1])).unwrap().poly().len(), 4);
    }

    #[test]
    fn interpolation() {
        assert_eq!(ehrhart_polynomial(&u(&[1, 2]), 1).unwrap(), vec![r(1, 1), r(1, 1)]);
        assert_eq!(
            ehrhart_polynomial(&u(&[1, 3, 6]), 2).unwrap(),
            vec![r(1, 1), r(3, 2), r(1, 2)]
        );
        // (m+1)(m+2)(2m+3)/6 = 1 + 13/6 m + 3/2 m^2 + 1/3 m^3
        let p3 = ehrhart_polynomial(&u(&[1, 5, 14, 30]), 3).unwrap();
        assert_eq!(p3, vec![r(1, 1), r(13, 6), r(3, 2), r(1, 3)]);
        assert_eq!(eval_rational(&p3, 4), r(55, 1));
        assert_eq!(eval_rational(&p3, 5), r(91, 1));
    }

    #[test]
    fn difference_degree() {
        let cubes: Vec<BigInt> = (0..6).map(|m: i64| BigInt::from(m * m * m + 1)).collect();
        assert_eq!(finite_difference_degree(&cubes), Some(3));
        assert_eq!(leading_difference(&cubes, 3), Some(BigInt::from(6)));
        assert_eq!(finite_difference_degree(&cubes[..4]), None);
        let constant = vec![BigInt::from(7); 3];
        assert_eq!(finite_difference_degree(&constant), Some(0));
    }
}

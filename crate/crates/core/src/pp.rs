//! Order-preserving maps, (P, ω)-partitions and W-polynomials.
//!
//! `Ω̃(P; m)` counts maps `η: P → {1..m}` with `x ⪯ y ⇒ η(x) ≤ η(y)`.
//! `Ω(P, ω; m)` counts (P, ω)-partitions bounded by `m`: maps that reverse the
//! order and drop strictly across every relation `x ≺ y` with `ω(x) > ω(y)`.
//! Both are polynomials of degree `|P|` in `m`, and the W-polynomials are
//! the numerators of `Σ_{m≥0} value(m+1) t^m` over `(1 - t)^{|P|+1}`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::ehrhart::{checked_numerator, EhrhartError};
use crate::poly::IntPolynomial;
use crate::poset::{is_natural, Labeling, Poset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PpError {
    #[error("labeling has {got} labels but the poset has {expected} elements")]
    LabelingSize { expected: usize, got: usize },
    #[error("labeling is not natural")]
    NotNatural,
    #[error("poset has more than {0} linear extensions")]
    TooManyExtensions(u64),
    #[error("inconsistent order-polynomial values: {0}")]
    Inconsistent(#[from] EhrhartError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WMethod {
    DescentStatistic,
    TransformOfOmega,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPolynomial {
    pub poly: IntPolynomial,
    pub labeling_used: Labeling,
    pub method: WMethod,
}

fn check_labeling(poset: &Poset, labeling: &Labeling) -> Result<(), PpError> {
    if labeling.len() != poset.size() {
        return Err(PpError::LabelingSize {
            expected: poset.size(),
            got: labeling.len(),
        });
    }
    Ok(())
}

/// Elements in an order where every element follows its lower covers.
fn bottom_up_order(poset: &Poset) -> Vec<usize> {
    let labeling = poset.natural_labeling();
    let mut order = vec![0; poset.size()];
    for x in 0..poset.size() {
        order[labeling.label(x) - 1] = x;
    }
    order
}

/// Depth-first assignment of values `1..=m`, one element at a time in a
/// bottom-up order. `range` gives the admissible values of an element from
/// the values already assigned below it.
struct Assignment<'a, F> {
    poset: &'a Poset,
    order: Vec<usize>,
    m: u64,
    range: F,
}

impl<'a, F> Assignment<'a, F>
where
    F: Fn(&Poset, usize, &[u64]) -> (u64, u64),
{
    fn new(poset: &'a Poset, m: u64, range: F) -> Self {
        Self {
            poset,
            order: bottom_up_order(poset),
            m,
            range,
        }
    }

    fn count(&self) -> BigUint {
        if self.m == 0 {
            return BigUint::zero();
        }
        let mut values = vec![0u64; self.poset.size()];
        BigUint::from(self.count_from(0, &mut values))
    }

    fn count_from(&self, idx: usize, values: &mut [u64]) -> u128 {
        let x = self.order[idx];
        let (lo, hi) = (self.range)(self.poset, x, values);
        if lo > hi {
            return 0;
        }
        if idx + 1 == self.order.len() {
            return u128::from(hi - lo + 1);
        }
        let mut total = 0;
        for v in lo..=hi {
            values[x] = v;
            total += self.count_from(idx + 1, values);
        }
        values[x] = 0;
        total
    }

    fn collect(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        if self.m > 0 {
            let mut values = vec![0u64; self.poset.size()];
            self.collect_from(0, &mut values, &mut out);
        }
        out
    }

    fn collect_from(&self, idx: usize, values: &mut [u64], out: &mut Vec<Vec<u64>>) {
        if idx == self.order.len() {
            out.push(values.to_vec());
            return;
        }
        let x = self.order[idx];
        let (lo, hi) = (self.range)(self.poset, x, values);
        for v in lo..=hi {
            values[x] = v;
            self.collect_from(idx + 1, values, out);
        }
        values[x] = 0;
    }
}

fn order_preserving_assignment(poset: &Poset, m: u64) -> Assignment<'_, impl Fn(&Poset, usize, &[u64]) -> (u64, u64)> {
    Assignment::new(poset, m, move |p: &Poset, x, values: &[u64]| {
        let lo = p.lower_covers(x).iter().map(|&l| values[l]).max().unwrap_or(1);
        (lo, m)
    })
}

fn partition_assignment<'a>(
    poset: &'a Poset,
    labeling: &'a Labeling,
    m: u64,
) -> Assignment<'a, impl Fn(&Poset, usize, &[u64]) -> (u64, u64) + 'a> {
    Assignment::new(poset, m, move |p: &Poset, y, values: &[u64]| {
        let hi = p
            .lower_covers(y)
            .iter()
            .map(|&x| {
                let strict = labeling.label(x) > labeling.label(y);
                values[x].saturating_sub(u64::from(strict))
            })
            .min()
            .unwrap_or(m);
        (1, hi)
    })
}

/// `Ω̃(P; m)` by exhaustive assignment, without the fence fast path.
pub fn count_order_preserving_brute(poset: &Poset, m: u64) -> BigUint {
    order_preserving_assignment(poset, m).count()
}

/// `Ω̃(Z_n; m)` by a transfer matrix over the value of the current element.
pub fn count_order_preserving_zigzag(n: usize, m: u64) -> BigUint {
    if m == 0 {
        return BigUint::zero();
    }
    let width = m as usize;
    // ways[v]: maps on a_1..a_k with a_k ↦ v + 1
    let mut ways = vec![BigUint::one(); width];
    for k in 0..n.saturating_sub(1) {
        let mut next = vec![BigUint::zero(); width];
        let mut acc = BigUint::zero();
        if k % 2 == 0 {
            // a_k ≺ a_{k+1}: the new value is at least the old one
            for v in 0..width {
                acc += &ways[v];
                next[v] = acc.clone();
            }
        } else {
            for v in (0..width).rev() {
                acc += &ways[v];
                next[v] = acc.clone();
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// `Ω̃(P; m)`, using the fence transfer matrix when the cover set is
/// literally that of a zig-zag poset.
pub fn count_order_preserving(poset: &Poset, m: u64) -> BigUint {
    match poset.zigzag_order() {
        Some(n) => count_order_preserving_zigzag(n, m),
        None => count_order_preserving_brute(poset, m),
    }
}

/// Every order-preserving map into `1..=m`, as value vectors indexed by
/// element, in lexicographic order.
pub fn order_preserving_maps(poset: &Poset, m: u64) -> Vec<Vec<u64>> {
    let mut maps = order_preserving_assignment(poset, m).collect();
    maps.sort();
    maps
}

/// `Ω(P, ω; m)` by exhaustive assignment. Strictness is enforced on covers,
/// which implies it on every comparable pair.
pub fn count_p_omega_partitions(poset: &Poset, labeling: &Labeling, m: u64) -> Result<BigUint, PpError> {
    check_labeling(poset, labeling)?;
    Ok(partition_assignment(poset, labeling, m).count())
}

/// Every (P, ω)-partition bounded by `m`, in lexicographic order.
pub fn p_omega_partitions(poset: &Poset, labeling: &Labeling, m: u64) -> Result<Vec<Vec<u64>>, PpError> {
    check_labeling(poset, labeling)?;
    let mut maps = partition_assignment(poset, labeling, m).collect();
    if cfg!(debug_assertions) {
        for sigma in &maps {
            debug_assert!(is_p_omega_partition(poset, labeling, sigma));
        }
    }
    maps.sort();
    Ok(maps)
}

/// The defining conditions checked on all comparable pairs.
pub fn is_p_omega_partition(poset: &Poset, labeling: &Labeling, sigma: &[u64]) -> bool {
    let d = poset.size();
    (0..d).all(|x| {
        (0..d).all(|y| {
            !poset.lt(x, y)
                || (sigma[x] >= sigma[y]
                    && (labeling.label(x) < labeling.label(y) || sigma[x] > sigma[y]))
        })
    })
}

/// W-polynomial from order-polynomial values at `m = 1, 2, …`; at least
/// `|P| + 1` values are needed, extra values are used as a cross-check.
pub fn w_from_order_values(
    poset: &Poset,
    labeling: Labeling,
    values: &[BigUint],
) -> Result<WPolynomial, PpError> {
    check_labeling(poset, &labeling)?;
    let poly = checked_numerator(values, poset.size())?;
    Ok(WPolynomial {
        poly,
        labeling_used: labeling,
        method: WMethod::TransformOfOmega,
    })
}

/// `W̃(P; t)` from `Ω̃(P; 1..=|P|+1)`. The recorded labeling is the natural
/// labeling, for which `Ω(P, ω; m) = Ω̃(P; m)`.
pub fn w_tilde_polynomial(poset: &Poset) -> Result<WPolynomial, PpError> {
    let values: Vec<BigUint> = (1..=poset.size() as u64 + 1)
        .map(|m| count_order_preserving(poset, m))
        .collect();
    w_from_order_values(poset, poset.natural_labeling(), &values)
}

/// `W(P, ω; t)` from `Ω(P, ω; 1..=|P|+1)`.
pub fn w_polynomial_from_partitions(poset: &Poset, labeling: &Labeling) -> Result<WPolynomial, PpError> {
    let values = (1..=poset.size() as u64 + 1)
        .map(|m| count_p_omega_partitions(poset, labeling, m))
        .collect::<Result<Vec<_>, _>>()?;
    w_from_order_values(poset, labeling.clone(), &values)
}

/// `W(P, ω; t) = Σ_e t^{des(e)}` over linear extensions `e`, where a descent
/// is a position with `ω(e_i) > ω(e_{i+1})`.
pub fn w_polynomial_descents(poset: &Poset, labeling: &Labeling) -> Result<WPolynomial, PpError> {
    w_polynomial_descents_limited(poset, labeling, u64::MAX)
}

/// As [`w_polynomial_descents`], failing once more than `max_extensions`
/// extensions have been visited.
pub fn w_polynomial_descents_limited(
    poset: &Poset,
    labeling: &Labeling,
    max_extensions: u64,
) -> Result<WPolynomial, PpError> {
    check_labeling(poset, labeling)?;
    let mut tally = vec![0u64; poset.size() + 1];
    let mut seen = 0u64;
    let mut stream = poset.linear_extensions();
    while let Some(ext) = stream.advance() {
        seen += 1;
        if seen > max_extensions {
            return Err(PpError::TooManyExtensions(max_extensions));
        }
        let descents = ext
            .windows(2)
            .filter(|w| labeling.label(w[0]) > labeling.label(w[1]))
            .count();
        tally[descents] += 1;
    }
    Ok(WPolynomial {
        poly: IntPolynomial::new(tally.into_iter().map(BigInt::from).collect()),
        labeling_used: labeling.clone(),
        method: WMethod::DescentStatistic,
    })
}

const BIJECTION_MAX_SIZE: usize = 5;
const BIJECTION_MAX_BOUND: u64 = 4;

/// Checks `Ω(P, ω; m) = Ω̃(P; m)` for a natural labeling. For `|P| ≤ 5` and
/// `m ≤ 4` it also checks that `η ↦ m + 1 - η` carries the order-reversing
/// solutions onto the order-preserving ones.
pub fn verify_complement_bijection(poset: &Poset, labeling: &Labeling, m: u64) -> Result<bool, PpError> {
    check_labeling(poset, labeling)?;
    if !is_natural(poset, labeling) {
        return Err(PpError::NotNatural);
    }
    let reversing = count_p_omega_partitions(poset, labeling, m)?;
    if reversing != count_order_preserving_brute(poset, m) {
        return Ok(false);
    }
    if poset.size() <= BIJECTION_MAX_SIZE && m <= BIJECTION_MAX_BOUND {
        let partitions = p_omega_partitions(poset, labeling, m)?;
        let image: BTreeSet<Vec<u64>> = partitions
            .iter()
            .map(|sigma| sigma.iter().map(|&v| m + 1 - v).collect())
            .collect();
        let preserving: BTreeSet<Vec<u64>> = order_preserving_maps(poset, m).into_iter().collect();
        return Ok(image.len() == partitions.len() && image == preserving);
    }
    Ok(true)
}

//! Rational H-polytopes and exact lattice-point counts of their dilations.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::poset::{Chain, Poset, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("coordinate {0} is unbounded")]
    Unbounded(usize),
    #[error("row {row} has {got} coefficients, expected {expected}")]
    RowLength {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("integer data of the dilated system does not fit in 64 bits")]
    Overflow,
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// One inequality `coeffs · x ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Row {
    pub coeffs: Vec<BigRational>,
    pub bound: BigRational,
}

impl Row {
    pub fn new(coeffs: Vec<BigRational>, bound: BigRational) -> Self {
        Self { coeffs, bound }
    }

    pub fn from_ints(coeffs: &[i64], bound: i64) -> Self {
        Self {
            coeffs: coeffs.iter().map(|&c| rational(c)).collect(),
            bound: rational(bound),
        }
    }

    /// The same half-space scaled so the first nonzero coefficient (or the
    /// bound, for a zero row) has absolute value 1.
    pub fn normalized(&self) -> Row {
        let pivot = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .unwrap_or(&self.bound)
            .abs();
        if pivot.is_zero() {
            return self.clone();
        }
        Row {
            coeffs: self.coeffs.iter().map(|c| c / &pivot).collect(),
            bound: &self.bound / &pivot,
        }
    }

    /// Scales by the lcm of the denominators, giving an equivalent integer row.
    fn integral(&self) -> (Vec<BigInt>, BigInt) {
        let lcm = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.bound))
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = |c: &BigRational| (c * BigRational::from_integer(lcm.clone())).to_integer();
        (self.coeffs.iter().map(scale).collect(), scale(&self.bound))
    }
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `{x ∈ R^dim : row.coeffs · x ≤ row.bound for every row}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    rows: Vec<Row>,
}

impl HPolytope {
    pub fn new(dim: usize, rows: Vec<Row>) -> Result<Self, LatticeError> {
        for (i, r) in rows.iter().enumerate() {
            if r.coeffs.len() != dim {
                return Err(LatticeError::RowLength {
                    row: i,
                    got: r.coeffs.len(),
                    expected: dim,
                });
            }
        }
        Ok(Self { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Rows normalized, sorted and deduplicated, for comparing systems.
    pub fn normalized_rows(&self) -> Vec<Row> {
        let mut rows: Vec<Row> = self.rows.iter().map(Row::normalized).collect();
        rows.sort();
        rows.dedup();
        rows
    }

    /// Same normalized row set as `other`.
    pub fn same_rows(&self, other: &HPolytope) -> bool {
        self.dim == other.dim && self.normalized_rows() == other.normalized_rows()
    }
}

fn unit_vector(dim: usize, i: usize, value: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = value;
    v
}

fn chain_rows(dim: usize, chains: &[Chain]) -> Vec<Row> {
    let mut rows: Vec<Row> = (0..dim)
        .map(|i| Row::from_ints(&unit_vector(dim, i, -1), 0))
        .collect();
    for c in chains {
        let mut coeffs = vec![0; dim];
        for &x in c.elems() {
            coeffs[x] = 1;
        }
        rows.push(Row::from_ints(&coeffs, 1));
    }
    rows
}

/// The chain polytope: `x ≥ 0` and `Σ_{p ∈ C} x_p ≤ 1` for every maximal
/// chain `C`. Constraints of shorter chains are implied given `x ≥ 0`.
pub fn chain_polytope(poset: &Poset) -> HPolytope {
    HPolytope {
        dim: poset.size(),
        rows: chain_rows(poset.size(), &poset.maximal_chains()),
    }
}

/// The chain polytope with one row per chain, maximal or not.
pub fn chain_polytope_all_chains(poset: &Poset) -> HPolytope {
    HPolytope {
        dim: poset.size(),
        rows: chain_rows(poset.size(), &poset.all_chains()),
    }
}

/// `x_i ≥ 0` for all `i` and `x_i + x_{i+1} ≤ 1`; for `n = 1`, `x_1 ≤ 1`.
pub fn kirillov_polytope(n: usize) -> Result<HPolytope, LatticeError> {
    if n == 0 {
        return Err(PosetError::Empty.into());
    }
    let mut rows: Vec<Row> = (0..n)
        .map(|i| Row::from_ints(&unit_vector(n, i, -1), 0))
        .collect();
    if n == 1 {
        rows.push(Row::from_ints(&[1], 1));
    }
    for i in 0..n.saturating_sub(1) {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        coeffs[i + 1] = 1;
        rows.push(Row::from_ints(&coeffs, 1));
    }
    Ok(HPolytope { dim: n, rows })
}

/// Closed integer interval `[lo, hi]`; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn width(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo) as u64 + 1
        }
    }
}

const PROPAGATION_ROUNDS: usize = 64;

/// Integer intervals containing every lattice point of `m·Q`.
///
/// Bounds come from single-variable rows and are then tightened by
/// propagating the current box through every row until nothing changes.
pub fn bounding_box(q: &HPolytope, m: u64) -> Result<Vec<Interval>, LatticeError> {
    let dilation = BigRational::from_integer(BigInt::from(m));
    let rows: Vec<(Vec<BigRational>, BigRational)> = q
        .rows
        .iter()
        .map(|r| (r.coeffs.clone(), &r.bound * &dilation))
        .collect();
    let mut lo: Vec<Option<BigInt>> = vec![None; q.dim];
    let mut hi: Vec<Option<BigInt>> = vec![None; q.dim];

    for _ in 0..PROPAGATION_ROUNDS {
        let mut changed = false;
        for (coeffs, bound) in &rows {
            for i in 0..q.dim {
                let a = &coeffs[i];
                if a.is_zero() {
                    continue;
                }
                // smallest possible value of Σ_{j≠i} a_j x_j over the box
                let mut rest = BigRational::zero();
                let mut finite = true;
                for (j, c) in coeffs.iter().enumerate() {
                    if j == i || c.is_zero() {
                        continue;
                    }
                    let end = if c.is_positive() { &lo[j] } else { &hi[j] };
                    match end {
                        Some(v) => rest += c * BigRational::from_integer(v.clone()),
                        None => {
                            finite = false;
                            break;
                        }
                    }
                }
                if !finite {
                    continue;
                }
                let limit = (bound - rest) / a;
                if a.is_positive() {
                    let cand = limit.floor().to_integer();
                    if hi[i].as_ref().is_none_or(|h| cand < *h) {
                        hi[i] = Some(cand);
                        changed = true;
                    }
                } else {
                    let cand = limit.ceil().to_integer();
                    if lo[i].as_ref().is_none_or(|l| cand > *l) {
                        lo[i] = Some(cand);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    (0..q.dim)
        .map(|i| match (&lo[i], &hi[i]) {
            (Some(l), Some(h)) => Ok(Interval {
                lo: l.to_i64().ok_or(LatticeError::Overflow)?,
                hi: h.to_i64().ok_or(LatticeError::Overflow)?,
            }),
            _ => Err(LatticeError::Unbounded(i)),
        })
        .collect()
}

/// Integer system `A x ≤ b` with precomputed pruning data.
struct BoxWalk {
    dim: usize,
    a: Vec<Vec<i128>>,
    b: Vec<i128>,
    bx: Vec<Interval>,
    // rest_min[r][k]: minimum of Σ_{j ≥ k} a[r][j] x_j over the box
    rest_min: Vec<Vec<i128>>,
}

impl BoxWalk {
    fn new(q: &HPolytope, m: u64) -> Result<Self, LatticeError> {
        let bx = bounding_box(q, m)?;
        let mut a = Vec::with_capacity(q.rows.len());
        let mut b = Vec::with_capacity(q.rows.len());
        for row in &q.rows {
            let (coeffs, bound) = row.integral();
            let to_i128 = |v: &BigInt| v.to_i64().map(i128::from).ok_or(LatticeError::Overflow);
            a.push(coeffs.iter().map(to_i128).collect::<Result<Vec<_>, _>>()?);
            let bound = to_i128(&bound)?
                .checked_mul(i128::from(m))
                .ok_or(LatticeError::Overflow)?;
            b.push(bound);
        }
        let rest_min = a
            .iter()
            .map(|coeffs: &Vec<i128>| {
                let mut acc = vec![0i128; q.dim + 1];
                for k in (0..q.dim).rev() {
                    let c = coeffs[k];
                    let lo = c * i128::from(bx[k].lo);
                    let hi = c * i128::from(bx[k].hi);
                    acc[k] = acc[k + 1] + lo.min(hi);
                }
                acc
            })
            .collect();
        Ok(Self {
            dim: q.dim,
            a,
            b,
            bx,
            rest_min,
        })
    }

    /// Counts points whose first coordinate is `first`.
    fn count_with_first(&self, first: i64) -> u128 {
        let mut partial = vec![0i128; self.a.len()];
        self.assign(0, first, &mut partial)
    }

    fn assign(&self, k: usize, v: i64, partial: &mut [i128]) -> u128 {
        for (r, p) in partial.iter_mut().enumerate() {
            *p += self.a[r][k] * i128::from(v);
        }
        let feasible = partial
            .iter()
            .enumerate()
            .all(|(r, p)| p + self.rest_min[r][k + 1] <= self.b[r]);
        let result = if !feasible {
            0
        } else if k + 1 == self.dim {
            1
        } else if k + 2 == self.dim {
            self.last_coordinate(partial)
        } else {
            let next = self.bx[k + 1];
            (next.lo..=next.hi)
                .map(|w| self.assign(k + 1, w, partial))
                .sum()
        };
        for (r, p) in partial.iter_mut().enumerate() {
            *p -= self.a[r][k] * i128::from(v);
        }
        result
    }

    /// Counts values of the final coordinate satisfying every row, solving
    /// each row for that coordinate.
    fn last_coordinate(&self, partial: &[i128]) -> u128 {
        let k = self.dim - 1;
        let mut lo = i128::from(self.bx[k].lo);
        let mut hi = i128::from(self.bx[k].hi);
        for (r, p) in partial.iter().enumerate() {
            let c = self.a[r][k];
            let slack = self.b[r] - p;
            if c > 0 {
                hi = hi.min(Integer::div_floor(&slack, &c));
            } else if c < 0 {
                lo = lo.max(Integer::div_ceil(&slack, &c));
            } else if slack < 0 {
                return 0;
            }
        }
        if lo > hi {
            0
        } else {
            (hi - lo + 1) as u128
        }
    }
}

/// Number of integer points `x` with `A x ≤ m·b`, by a pruned walk over the
/// bounding box. The outermost coordinate is split across worker threads.
pub fn count_lattice_points(q: &HPolytope, m: u64) -> Result<BigUint, LatticeError> {
    count_lattice_points_in_chunks(q, m, usize::MAX)
}

/// As [`count_lattice_points`], with the outermost coordinate range split
/// into at most `chunks` contiguous pieces whose partial counts are added.
pub fn count_lattice_points_in_chunks(
    q: &HPolytope,
    m: u64,
    chunks: usize,
) -> Result<BigUint, LatticeError> {
    if q.dim == 0 {
        let scale = BigRational::from_integer(BigInt::from(m));
        let ok = q.rows.iter().all(|r| !(&r.bound * &scale).is_negative());
        return Ok(BigUint::from(u32::from(ok)));
    }
    let walk = BoxWalk::new(q, m)?;
    if walk.bx.iter().any(Interval::is_empty) {
        return Ok(BigUint::zero());
    }
    let outer = walk.bx[0];
    let values: Vec<i64> = (outer.lo..=outer.hi).collect();
    let per_chunk = values.len().div_ceil(chunks.max(1)).max(1);
    let total: u128 = values
        .par_chunks(per_chunk)
        .map(|chunk| chunk.iter().map(|&v| walk.count_with_first(v)).sum::<u128>())
        .sum();
    Ok(BigUint::from(total))
}

/// `i(Q; m)` for `m = 0..=max_dilation`.
pub fn lattice_count_table(q: &HPolytope, max_dilation: u64) -> Result<Vec<BigUint>, LatticeError> {
    (0..=max_dilation).map(|m| count_lattice_points(q, m)).collect()
}

/// Lattice points of the `m`-th dilation of the Kirillov polytope on `n`
/// coordinates, by a transfer matrix over the value of the current
/// coordinate. Cost is `O(n·m)` big-integer additions.
pub fn count_zigzag_fast(n: usize, m: u64) -> BigUint {
    let width = m as usize + 1;
    // ways[v]: admissible prefixes whose last coordinate equals v
    let mut ways = vec![BigUint::one(); width];
    let mut prefix = vec![BigUint::zero(); width];
    for _ in 1..n {
        let mut acc = BigUint::zero();
        for (v, w) in ways.iter().enumerate() {
            acc += w;
            prefix[v] = acc.clone();
        }
        // next coordinate u needs previous value ≤ m - u
        for (u, w) in ways.iter_mut().enumerate() {
            *w = prefix[width - 1 - u].clone();
        }
    }
    ways.into_iter().sum()
}

/// `count_zigzag_fast(n, m)` for `m = 0..=max_dilation`.
pub fn zigzag_count_table(n: usize, max_dilation: u64) -> Vec<BigUint> {
    (0..=max_dilation).map(|m| count_zigzag_fast(n, m)).collect()
}

//! Coefficient-sequence predicates and the cross-method verification suites.
//!
//! The δ-polynomial of a chain polytope is computed three ways:
//!
//! * `lattice`: lattice-point counts of `C(P)` for `m = 0..=|P|`, then the
//!   `(1 - t)^{|P|+1}` transform;
//! * `omega`: `Ω̃(P; m)` for `m = 1..=|P|+1`, then the same transform;
//! * `descents`: the descent generating function over linear extensions
//!   under the natural labeling.
//!
//! Each route uses brute force while it fits in the [`Budget`] and a
//! transfer-matrix fast path for fence posets.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ehrhart::series_delta;
use crate::lattice::{chain_polytope, count_lattice_points, zigzag_count_table};
use crate::poly::IntPolynomial;
use crate::poset::{is_natural, zigzag_poset, Labeling, NotGraded, Poset};
use crate::pp::{
    count_order_preserving_brute, count_order_preserving_zigzag,
    verify_complement_bijection, w_polynomial_descents, w_polynomial_descents_limited, PpError,
};
use crate::random::{random_graded_poset, random_natural_labeling, random_poset, rng_from_seed};

/// Weakly rising then weakly falling coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unimodality {
    pub unimodal: bool,
    /// Smallest index of a maximal coefficient, when unimodal and nonempty.
    pub peak: Option<usize>,
}

/// Judged over the full stored vector, trailing zeros included.
pub fn is_unimodal(p: &IntPolynomial) -> Unimodality {
    let c = p.coeffs();
    let mut i = 0;
    while i + 1 < c.len() && c[i] <= c[i + 1] {
        i += 1;
    }
    let mut j = i;
    while j + 1 < c.len() && c[j] >= c[j + 1] {
        j += 1;
    }
    let unimodal = j + 1 >= c.len();
    let peak = if unimodal && !c.is_empty() {
        c.iter().position(|v| *v == c[i])
    } else {
        None
    };
    Unimodality { unimodal, peak }
}

/// `a_i = a_{deg - i}` over the effective degree; the zero polynomial counts
/// as symmetric.
pub fn is_symmetric(p: &IntPolynomial) -> bool {
    let e = p.effective();
    e.iter().eq(e.iter().rev())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Lattice,
    Omega,
    Descents,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Lattice, Method::Omega, Method::Descents];

    pub fn name(self) -> &'static str {
        match self {
            Method::Lattice => "lattice",
            Method::Omega => "omega",
            Method::Descents => "descents",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}` (expected lattice, omega or descents)"))
    }
}

/// A nonempty subset of [`Method`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MethodSet([bool; 3]);

impl MethodSet {
    pub fn all() -> Self {
        Self([true; 3])
    }

    pub fn only(method: Method) -> Self {
        let mut set = [false; 3];
        set[method as usize] = true;
        Self(set)
    }

    pub fn contains(&self, method: Method) -> bool {
        self.0[method as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = Method> + '_ {
        Method::ALL.into_iter().filter(|&m| self.contains(m))
    }
}

impl Default for MethodSet {
    fn default() -> Self {
        Self::all()
    }
}

impl FromStr for MethodSet {
    type Err = String;

    /// Comma-separated method names, e.g. `lattice,omega`.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut set = [false; 3];
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            set[part.parse::<Method>()? as usize] = true;
        }
        if set == [false; 3] {
            return Err("at least one method is required".into());
        }
        Ok(Self(set))
    }
}

impl fmt::Display for MethodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(Method::name).collect();
        f.write_str(&names.join(","))
    }
}

/// Limits on the brute-force routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest poset size whose chain polytope is counted by box walk.
    pub lattice_max_dim: usize,
    /// Largest dilation counted by box walk.
    pub lattice_max_dilation: u64,
    /// Most linear extensions the descent route may visit.
    pub max_extensions: u64,
    /// Largest `m^d` for which `Ω̃(P; m)` is counted by assignment.
    pub omega_max_assignments: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            lattice_max_dim: 6,
            lattice_max_dilation: 6,
            max_extensions: 5_000_000,
            omega_max_assignments: 100_000_000,
        }
    }
}

/// How a method produced its polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Path {
    BruteForce,
    TransferMatrix,
    ExtensionStream,
}

impl Path {
    pub fn name(self) -> &'static str {
        match self {
            Path::BruteForce => "brute-force",
            Path::TransferMatrix => "transfer-matrix",
            Path::ExtensionStream => "extension-stream",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodOutcome {
    Computed {
        delta: IntPolynomial,
        path: Path,
        elapsed: Duration,
    },
    /// Disabled because the input exceeds the budget.
    OverBudget(String),
    /// The computation produced inconsistent data.
    Failed(String),
}

impl MethodOutcome {
    pub fn delta(&self) -> Option<&IntPolynomial> {
        match self {
            MethodOutcome::Computed { delta, .. } => Some(delta),
            _ => None,
        }
    }

    pub fn elapsed(&self) -> Option<Duration> {
        match self {
            MethodOutcome::Computed { elapsed, .. } => Some(*elapsed),
            _ => None,
        }
    }
}

/// Agreement of each pair of computed δ-polynomials; `None` when either
/// side was not computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Identities {
    pub lattice_omega: Option<bool>,
    pub lattice_descents: Option<bool>,
    pub omega_descents: Option<bool>,
}

impl Identities {
    pub fn all_ok(&self) -> bool {
        [self.lattice_omega, self.lattice_descents, self.omega_descents]
            .iter()
            .all(|x| x.unwrap_or(true))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub poset: String,
    pub d: usize,
    pub lattice: Option<MethodOutcome>,
    pub omega: Option<MethodOutcome>,
    pub descents: Option<MethodOutcome>,
    pub identities: Identities,
    pub identities_ok: bool,
    /// The polynomial the predicates below were evaluated on.
    pub delta: Option<IntPolynomial>,
    pub unimodal: bool,
    pub peak: Option<usize>,
    /// Whether unimodality is a claim being checked or merely reported.
    pub unimodality_asserted: bool,
    pub symmetric: bool,
    pub effective_degree: Option<usize>,
    pub nonnegative: bool,
    pub delta0_is_one: bool,
    pub coefficient_sum: Option<BigInt>,
}

impl VerificationReport {
    pub fn outcome(&self, method: Method) -> Option<&MethodOutcome> {
        match method {
            Method::Lattice => self.lattice.as_ref(),
            Method::Omega => self.omega.as_ref(),
            Method::Descents => self.descents.as_ref(),
        }
    }

    pub fn delta_by(&self, method: Method) -> Option<&IntPolynomial> {
        self.outcome(method).and_then(MethodOutcome::delta)
    }

    /// Methods disabled by the budget.
    pub fn over_budget(&self) -> Vec<Method> {
        Method::ALL
            .into_iter()
            .filter(|&m| matches!(self.outcome(m), Some(MethodOutcome::OverBudget(_))))
            .collect()
    }

    pub fn failures(&self) -> Vec<(Method, &str)> {
        Method::ALL
            .into_iter()
            .filter_map(|m| match self.outcome(m) {
                Some(MethodOutcome::Failed(msg)) => Some((m, msg.as_str())),
                _ => None,
            })
            .collect()
    }

    /// Every asserted check holds. Methods disabled by budget do not fail it.
    pub fn passed(&self) -> bool {
        self.delta.is_some()
            && self.failures().is_empty()
            && self.identities_ok
            && self.nonnegative
            && self.delta0_is_one
            && (!self.unimodality_asserted || self.unimodal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("budget exceeded by method(s): {}", .0.iter().map(|m| m.name()).collect::<Vec<_>>().join(", "))]
    BudgetExceeded(Vec<Method>),
    #[error("n_max must be at least 1")]
    EmptyRange,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn computed(delta: IntPolynomial, path: Path, elapsed: Duration) -> MethodOutcome {
    MethodOutcome::Computed {
        delta,
        path,
        elapsed,
    }
}

fn lattice_route(poset: &Poset, budget: &Budget, prefer_fast: bool) -> MethodOutcome {
    let d = poset.size();
    let fence = poset.zigzag_order();
    let brute_ok = d <= budget.lattice_max_dim && d as u64 <= budget.lattice_max_dilation;
    let (counts, path, elapsed) = match (fence, brute_ok) {
        (Some(n), ok) if prefer_fast || !ok => {
            let (counts, t) = timed(|| zigzag_count_table(n, d as u64));
            (counts, Path::TransferMatrix, t)
        }
        (_, true) => {
            let q = chain_polytope(poset);
            let (counts, t) = timed(|| {
                (0..=d as u64)
                    .map(|m| count_lattice_points(&q, m))
                    .collect::<Result<Vec<_>, _>>()
            });
            match counts {
                Ok(c) => (c, Path::BruteForce, t),
                Err(e) => return MethodOutcome::Failed(e.to_string()),
            }
        }
        (_, false) => {
            return MethodOutcome::OverBudget(format!(
                "box walk limited to |P| <= {} and m <= {}",
                budget.lattice_max_dim, budget.lattice_max_dilation
            ))
        }
    };
    match series_delta(&counts, d) {
        Ok(delta) => computed(delta, path, elapsed),
        Err(e) => MethodOutcome::Failed(e.to_string()),
    }
}

fn omega_route(poset: &Poset, budget: &Budget, prefer_fast: bool) -> MethodOutcome {
    let d = poset.size();
    let top = d as u64 + 1;
    let assignments = u128::from(top).checked_pow(d as u32);
    let brute_ok = assignments.is_some_and(|a| a <= budget.omega_max_assignments);
    let (values, path, elapsed): (Vec<BigUint>, Path, Duration) = match (poset.zigzag_order(), brute_ok) {
        (Some(n), ok) if prefer_fast || !ok => {
            let (v, t) = timed(|| (1..=top).map(|m| count_order_preserving_zigzag(n, m)).collect());
            (v, Path::TransferMatrix, t)
        }
        (_, true) => {
            let (v, t) = timed(|| (1..=top).map(|m| count_order_preserving_brute(poset, m)).collect());
            (v, Path::BruteForce, t)
        }
        (_, false) => {
            return MethodOutcome::OverBudget(format!(
                "assignment count (|P|+1)^|P| exceeds {}",
                budget.omega_max_assignments
            ))
        }
    };
    match series_delta(&values, d) {
        Ok(delta) => computed(delta, path, elapsed),
        Err(e) => MethodOutcome::Failed(e.to_string()),
    }
}

const EXTENSION_COUNT_STATES: usize = 1 << 20;

fn descents_route(poset: &Poset, budget: &Budget) -> MethodOutcome {
    let over = || {
        MethodOutcome::OverBudget(format!(
            "more than {} linear extensions",
            budget.max_extensions
        ))
    };
    if let Some(count) = poset.count_linear_extensions(EXTENSION_COUNT_STATES) {
        if count > BigUint::from(budget.max_extensions) {
            return over();
        }
    }
    let labeling = poset.natural_labeling();
    let (w, elapsed) = timed(|| w_polynomial_descents_limited(poset, &labeling, budget.max_extensions));
    match w {
        Ok(w) => computed(w.poly, Path::ExtensionStream, elapsed),
        Err(PpError::TooManyExtensions(_)) => over(),
        Err(e) => MethodOutcome::Failed(e.to_string()),
    }
}

fn run_method(method: Method, poset: &Poset, budget: &Budget, prefer_fast: bool) -> MethodOutcome {
    match method {
        Method::Lattice => lattice_route(poset, budget, prefer_fast),
        Method::Omega => omega_route(poset, budget, prefer_fast),
        Method::Descents => descents_route(poset, budget),
    }
}

fn agree(a: Option<&IntPolynomial>, b: Option<&IntPolynomial>) -> Option<bool> {
    Some(a? == b?)
}

fn assemble(
    description: String,
    poset: &Poset,
    outcomes: [Option<MethodOutcome>; 3],
    unimodality_asserted: bool,
) -> VerificationReport {
    let [lattice, omega, descents] = outcomes;
    let get = |o: &Option<MethodOutcome>| o.as_ref().and_then(MethodOutcome::delta).cloned();
    let (dl, dom, dd) = (get(&lattice), get(&omega), get(&descents));
    let identities = Identities {
        lattice_omega: agree(dl.as_ref(), dom.as_ref()),
        lattice_descents: agree(dl.as_ref(), dd.as_ref()),
        omega_descents: agree(dom.as_ref(), dd.as_ref()),
    };
    let computed: Vec<&IntPolynomial> = [&dom, &dl, &dd].into_iter().flatten().collect();
    let delta = computed.first().map(|p| (*p).clone());
    let uni = delta.as_ref().map(is_unimodal);
    VerificationReport {
        poset: description,
        d: poset.size(),
        identities,
        identities_ok: identities.all_ok(),
        unimodal: uni.is_some_and(|u| u.unimodal),
        peak: uni.and_then(|u| u.peak),
        unimodality_asserted,
        symmetric: delta.as_ref().is_some_and(is_symmetric),
        effective_degree: delta.as_ref().and_then(IntPolynomial::degree),
        nonnegative: computed.iter().all(|p| p.is_nonnegative()),
        delta0_is_one: !computed.is_empty()
            && computed.iter().all(|p| p.coeffs().first().is_some_and(One::is_one)),
        coefficient_sum: delta.as_ref().map(IntPolynomial::coefficient_sum),
        delta,
        lattice,
        omega,
        descents,
    }
}

fn describe(poset: &Poset) -> String {
    match poset.zigzag_order() {
        Some(n) => format!("Z_{n}"),
        None => {
            let covers: Vec<String> = poset.covers().iter().map(|(i, j)| format!("{i}<{j}")).collect();
            format!("d={} covers=[{}]", poset.size(), covers.join(","))
        }
    }
}

/// δ of `C(P)` by all three methods with default budgets.
pub fn cross_verify(poset: &Poset) -> Result<VerificationReport, AnalysisError> {
    cross_verify_with(poset, MethodSet::all(), &Budget::default())
}

/// δ of `C(P)` by every enabled method, preferring brute force wherever the
/// budget allows. Unimodality is reported, not asserted.
pub fn cross_verify_with(
    poset: &Poset,
    methods: MethodSet,
    budget: &Budget,
) -> Result<VerificationReport, AnalysisError> {
    let outcomes = Method::ALL.map(|m| methods.contains(m).then(|| run_method(m, poset, budget, false)));
    let report = assemble(describe(poset), poset, outcomes, false);
    let over = report.over_budget();
    if !over.is_empty() {
        return Err(AnalysisError::BudgetExceeded(over));
    }
    Ok(report)
}

/// δ of the Kirillov polytope `P_n` for `n = 1..=n_max`, asserting
/// unimodality. Fast paths are used wherever they exist; methods disabled by
/// the budget are recorded in the report, never silently dropped.
pub fn verify_kirillov(
    n_max: usize,
    methods: MethodSet,
    budget: &Budget,
) -> Result<Vec<VerificationReport>, AnalysisError> {
    if n_max == 0 {
        return Err(AnalysisError::EmptyRange);
    }
    Ok((1..=n_max).map(|n| verify_kirillov_one(n, methods, budget)).collect())
}

pub fn verify_kirillov_one(n: usize, methods: MethodSet, budget: &Budget) -> VerificationReport {
    let poset = zigzag_poset(n.max(1)).expect("n >= 1");
    let outcomes = Method::ALL.map(|m| methods.contains(m).then(|| run_method(m, &poset, budget, true)));
    assemble(format!("Z_{n}"), &poset, outcomes, true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GasharovReport {
    pub rank: Option<usize>,
    pub not_graded: Option<NotGraded>,
    pub natural: bool,
    /// Hypotheses of the rank 1–2 theorem that fail for this input.
    pub failed_hypotheses: Vec<String>,
    pub w: IntPolynomial,
    pub unimodal: bool,
    pub peak: Option<usize>,
}

impl GasharovReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.failed_hypotheses.is_empty()
    }

    /// Unimodality is asserted only when the hypotheses hold.
    pub fn passed(&self) -> bool {
        !self.hypotheses_hold() || self.unimodal
    }
}

/// Checks gradedness with rank 1 or 2 and naturality of `labeling`, and
/// evaluates unimodality of `W(P, ω; t)` either way.
pub fn verify_gasharov(poset: &Poset, labeling: &Labeling) -> Result<GasharovReport, PpError> {
    let w = w_polynomial_descents(poset, labeling)?.poly;
    let mut failed = Vec::new();
    let (rank, not_graded) = match poset.rank_function() {
        Ok(rf) => (Some(rf.rank), None),
        Err(e) => (None, Some(e)),
    };
    match rank {
        None => failed.push("graded".to_string()),
        Some(0) => failed.push("rank >= 1".to_string()),
        Some(r) if r > 2 => failed.push("rank <= 2".to_string()),
        Some(_) => {}
    }
    let natural = is_natural(poset, labeling);
    if !natural {
        failed.push("natural labeling".to_string());
    }
    let uni = is_unimodal(&w);
    Ok(GasharovReport {
        rank,
        not_graded,
        natural,
        failed_hypotheses: failed,
        w,
        unimodal: uni.unimodal,
        peak: uni.peak,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelftestConfig {
    pub seed: u64,
    pub count: usize,
    pub max_size: usize,
    /// Corrupts the descent route so the harness can be shown to fail.
    pub inject_fault: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            count: 50,
            max_size: 5,
            inject_fault: false,
        }
    }
}

/// First failing case of a suite, with the poset in the file format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestFailure {
    pub case: usize,
    pub poset_text: String,
    pub labeling: Option<Vec<usize>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<SelftestFailure>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Largest dilation used by the pointwise and bijection suites.
const SUITE_MAX_DILATION: u64 = 4;

/// The random-poset property suites. Deterministic for a fixed config.
pub fn selftest(config: &SelftestConfig) -> Vec<SuiteResult> {
    let mut rng = rng_from_seed(config.seed);
    let budget = Budget::default();
    let max_size = config.max_size.max(1);

    let mut identity = Suite::new("identity-chain");
    let mut pointwise = Suite::new("lattice-equals-order-preserving");
    let mut bijection = Suite::new("complement-bijection");
    let mut gasharov = Suite::new("gasharov-rank-1-2");

    for case in 0..config.count {
        let poset = random_poset(&mut rng, max_size);

        let result = cross_verify_with(&poset, MethodSet::all(), &budget).map(|mut r| {
            if config.inject_fault {
                if let Some(MethodOutcome::Computed { delta, .. }) = &mut r.descents {
                    let mut c = delta.clone().into_coeffs();
                    c[0] += 1;
                    *delta = IntPolynomial::new(c);
                }
                r = assemble(r.poset.clone(), &poset, [r.lattice, r.omega, r.descents], false);
            }
            r
        });
        identity.record(case, &poset, None, match result {
            Ok(r) if r.passed() => Ok(()),
            Ok(r) => Err(format!(
                "identities {:?}, nonnegative {}, delta0 {}, failures {:?}",
                r.identities,
                r.nonnegative,
                r.delta0_is_one,
                r.failures()
            )),
            Err(e) => Err(e.to_string()),
        });

        let q = chain_polytope(&poset);
        let pointwise_check = (0..=SUITE_MAX_DILATION).try_for_each(|m| {
            let lhs = count_lattice_points(&q, m).map_err(|e| e.to_string())?;
            let rhs = count_order_preserving_brute(&poset, m + 1);
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("m={m}: i(C(P);m)={lhs} but order-preserving count {rhs}"))
            }
        });
        pointwise.record(case, &poset, None, pointwise_check);

        let labeling = random_natural_labeling(&mut rng, &poset);
        let bijection_check = (1..=SUITE_MAX_DILATION).try_for_each(|m| {
            match verify_complement_bijection(&poset, &labeling, m) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!("m={m}: complement map is not a bijection")),
                Err(e) => Err(e.to_string()),
            }
        });
        bijection.record(case, &poset, Some(&labeling), bijection_check);

        let (graded, _) = random_graded_poset(&mut rng, max_size.clamp(2, 6));
        let graded_labeling = random_natural_labeling(&mut rng, &graded);
        let check = match verify_gasharov(&graded, &graded_labeling) {
            Ok(r) if !r.hypotheses_hold() => Err(format!("hypotheses failed: {:?}", r.failed_hypotheses)),
            Ok(r) if !r.unimodal => Err(format!("W = {} is not unimodal", r.w)),
            Ok(_) => Ok(()),
            Err(e) => Err(e.to_string()),
        };
        gasharov.record(case, &graded, Some(&graded_labeling), check);
    }
    vec![identity.done(), pointwise.done(), bijection.done(), gasharov.done()]
}

struct Suite(SuiteResult);

impl Suite {
    fn new(name: &'static str) -> Self {
        Self(SuiteResult {
            name,
            checked: 0,
            failures: 0,
            first_failure: None,
        })
    }

    fn record(&mut self, case: usize, poset: &Poset, labeling: Option<&Labeling>, outcome: Result<(), String>) {
        self.0.checked += 1;
        if let Err(detail) = outcome {
            self.0.failures += 1;
            self.0.first_failure.get_or_insert_with(|| SelftestFailure {
                case,
                poset_text: poset.to_text(),
                labeling: labeling.map(|l| l.labels().to_vec()),
                detail,
            });
        }
    }

    fn done(self) -> SuiteResult {
        self.0
    }
}

/// `E_0..=E_n`, the Euler zig-zag numbers, from
/// `2 E_{k+1} = Σ_j binom(k, j) E_j E_{k-j}` (`k ≥ 1`).
pub fn euler_zigzag_numbers(n: usize) -> Vec<BigUint> {
    let mut e = vec![BigUint::one(), BigUint::one()];
    for k in 1..n {
        let mut binom = BigUint::one();
        let mut total = BigUint::zero();
        for j in 0..=k {
            total += &binom * &e[j] * &e[k - j];
            binom = binom * (k - j) / (j + 1);
        }
        e.push(total / 2u32);
    }
    e.truncate(n + 1);
    e
}

/// Nonnegative coefficients and a constant term of one.
pub fn delta_conditions_hold(p: &IntPolynomial) -> bool {
    p.coeffs().iter().all(|c| !c.is_negative()) && p.coeffs().first().is_some_and(One::is_one)
}

//! Exact computation of Ehrhart δ-polynomials of chain polytopes of finite
//! posets, by lattice-point counting, by order-preserving-map counting and by
//! descent statistics over linear extensions, plus the predicates used to
//! check unimodality of the results.
//!
//! The zig-zag (fence) posets `a1 ≺ a2 ≻ a3 ≺ …` get transfer-matrix fast
//! paths; their chain polytopes are the Kirillov polytopes
//! `{x ≥ 0, x_i + x_{i+1} ≤ 1}`.

pub mod analysis;
pub mod ehrhart;
pub mod lattice;
pub mod poly;
pub mod poset;
pub mod pp;
pub mod random;

pub use analysis::{
    cross_verify, cross_verify_with, is_symmetric, is_unimodal, verify_gasharov, verify_kirillov,
    AnalysisError, Budget, GasharovReport, Method, MethodOutcome, MethodSet, Unimodality,
    VerificationReport,
};

pub use ehrhart::{counts_from_delta, delta_from_counts, ehrhart_polynomial, DeltaVector, EhrhartError};
pub use lattice::{
    bounding_box, chain_polytope, count_lattice_points, count_zigzag_fast, kirillov_polytope,
    HPolytope, Interval, LatticeError, Row,
};
pub use poly::IntPolynomial;
pub use poset::{
    is_natural, parse_poset, zigzag_poset, Chain, Labeling, NotGraded, ParseError, Poset,
    PosetError, RankFunction,
};
pub use pp::{
    count_order_preserving, count_p_omega_partitions, verify_complement_bijection,
    w_polynomial_descents, w_tilde_polynomial, PpError, WMethod, WPolynomial,
};

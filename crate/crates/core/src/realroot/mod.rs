//! Certified real root isolation and exact sign computations at real
//! algebraic numbers.

mod algebraic;
mod fiber;
mod interval;
mod isolate;
mod sturm;

pub use algebraic::{common_roots, common_roots_of, sign_at, AlgebraicNumber};
pub use fiber::{fiber_roots, fiber_roots_with, DoubleRootHint, FiberRoot, Ordinate};
pub use interval::{eval_interval_poly, eval_poly, rational_to_f64, simplest_rational, Interval};
pub use sturm::{sturm_count, sturm_sequence};

use thiserror::Error;

use crate::poly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealRootError {
    #[error("zero polynomial has no isolated roots")]
    ZeroInput,
    #[error("input polynomial is not square-free")]
    NotSquareFree,
    #[error("interval endpoint is a root")]
    RootAtEndpoint,
    #[error("genericity violation: {0}")]
    GenericityViolation(String),
}

/// Real roots of the square-free `p` in ascending order, with pairwise
/// disjoint isolating intervals. Rational roots come back exact.
pub fn isolate(p: &UniPoly) -> Result<Vec<AlgebraicNumber>, RealRootError> {
    isolate::isolate(p)
}

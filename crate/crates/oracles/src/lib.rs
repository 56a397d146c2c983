//! Slow, independent reference computations for the test suites.
//!
//! Nothing here shares code with the algorithms under test beyond the
//! polynomial containers: elimination goes through explicit determinants,
//! and component counts come from floating-point subdivision and path
//! sampling.

pub mod determinant;
pub mod subdivision;
pub mod tracking;

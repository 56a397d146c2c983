//! Connectivity queries on real algebraic space curves given by a rational
//! parametrization of their plane projection.

pub mod apparent;
pub mod connect;
mod error;
pub mod params;
pub mod poly;
pub mod realroot;
pub mod topo2d;

pub use error::{Error, Result};

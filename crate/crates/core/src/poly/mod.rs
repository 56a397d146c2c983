//! Exact polynomial arithmetic over Q.
//!
//! Univariate polynomials are dense, bivariate ones sparse. The elimination
//! kernels (resultant and first subresultant with respect to `x2`) work on
//! bivariate polynomials viewed as polynomials in `x2` with coefficients in
//! `Q[x1]`.

mod bi;
mod subres;
mod uni;

pub use bi::{BiPoly, Term, Var};
pub use subres::{first_subresultant_x2, homogenized_substitute, resultant_x2, FirstSubresultant};
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

/// Arbitrary-precision normalized fraction.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero denominator in homogenized substitution")]
    ZeroDenominator,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
}

/// `n/d` as a rational; panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Joins `(coefficient, monomial)` pairs, highest term first, into
/// `c*m + ... - k` form. An empty monomial is the constant term.
pub(crate) fn format_terms(terms: &[(Rational, String)]) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

/// `f(a, x2)` as a polynomial in `x2`.
pub fn eval_fiber(f: &BiPoly, a: &Rational) -> UniPoly {
    f.eval_x1(a)
}

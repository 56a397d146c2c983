//! Zero- and one-dimensional rational parametrizations, their validation,
//! and lifting of plane points back to the space curve.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::apparent::node_polynomial;
use crate::poly::{
    first_subresultant_x2, homogenized_substitute, resultant_x2, BiPoly, Rational, UniPoly, Var,
};
use crate::realroot::{eval_poly, sign_at, AlgebraicNumber, Interval};
use crate::{Error, Result};

/// Finite point set: for each real root `b` of `lambda`, the point
/// `(b, theta_2(b)/lambda'(b), ..., theta_n(b)/lambda'(b))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroDimParam {
    pub n: usize,
    pub lambda: UniPoly,
    /// `theta_2, ..., theta_n`.
    pub thetas: Vec<UniPoly>,
}

/// Curve whose plane projection is `omega = 0` and whose remaining
/// coordinates are `x_i = rho_i / (d omega / d x2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimParam {
    pub n: usize,
    pub omega: BiPoly,
    /// `rho_3, ..., rho_n`.
    pub rhos: Vec<BiPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DimensionMismatch { expected: usize, found: usize },
    DimensionTooSmall(usize),
    ZeroPolynomial,
    NotMonic,
    NotMonicInX2,
    NotSquareFree,
    /// Coordinate index (2-based for thetas, 3-based for rhos).
    DegreeViolation { coordinate: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimensionMismatch { expected, found } => {
                write!(f, "DimensionMismatch: expected {expected} coordinate polynomials, found {found}")
            }
            Violation::DimensionTooSmall(n) => write!(f, "DimensionTooSmall: n = {n}, need n >= 2"),
            Violation::ZeroPolynomial => write!(f, "ZeroPolynomial"),
            Violation::NotMonic => write!(f, "NotMonic"),
            Violation::NotMonicInX2 => write!(f, "NotMonicInX2"),
            Violation::NotSquareFree => write!(f, "NotSquareFree"),
            Violation::DegreeViolation { coordinate } => {
                write!(f, "DegreeViolation: coordinate x{coordinate}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    RationalCoefficients,
    NotMonicInX1,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::RationalCoefficients => write!(f, "RationalCoefficients"),
            Warning::NotMonicInX1 => write!(f, "NotMonicInX1"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn integral(p: &UniPoly) -> bool {
    p.coeffs().iter().all(|c| c.is_integer())
}

fn integral_bi(p: &BiPoly) -> bool {
    p.terms().iter().all(|t| t.coeff.is_integer())
}

pub fn validate_zero_dim(p: &ZeroDimParam) -> ValidationReport {
    let mut r = ValidationReport::default();
    if p.n < 2 {
        r.violations.push(Violation::DimensionTooSmall(p.n));
    } else if p.thetas.len() != p.n - 1 {
        r.violations.push(Violation::DimensionMismatch { expected: p.n - 1, found: p.thetas.len() });
    }
    if p.lambda.is_zero() {
        r.violations.push(Violation::ZeroPolynomial);
        return r;
    }
    if !p.lambda.lc().is_one() {
        r.violations.push(Violation::NotMonic);
    }
    if !p.lambda.is_squarefree() {
        r.violations.push(Violation::NotSquareFree);
    }
    let d = p.lambda.degree().unwrap();
    for (i, t) in p.thetas.iter().enumerate() {
        if t.degree().is_some_and(|e| e >= d) {
            r.violations.push(Violation::DegreeViolation { coordinate: i + 2 });
        }
    }
    if !integral(&p.lambda) || !p.thetas.iter().all(integral) {
        r.warnings.push(Warning::RationalCoefficients);
    }
    r
}

pub fn validate_one_dim(c: &OneDimParam) -> ValidationReport {
    let mut r = ValidationReport::default();
    if c.n < 2 {
        r.violations.push(Violation::DimensionTooSmall(c.n));
    } else if c.rhos.len() != c.n - 2 {
        r.violations.push(Violation::DimensionMismatch { expected: c.n - 2, found: c.rhos.len() });
    }
    if c.omega.is_zero() {
        r.violations.push(Violation::ZeroPolynomial);
        return r;
    }
    let d2 = c.omega.deg_x2().unwrap();
    if !c.omega.is_monic_in_x2() {
        r.violations.push(Violation::NotMonicInX2);
    } else if d2 >= 2 {
        // a monic polynomial in x2 is square-free iff its discriminant is
        // not identically zero
        let w2 = c.omega.partial(Var::X2);
        if resultant_x2(&c.omega, &w2).map(|res| res.is_zero()).unwrap_or(true) {
            r.violations.push(Violation::NotSquareFree);
        }
    }
    for (i, rho) in c.rhos.iter().enumerate() {
        if rho.deg_x2().is_some_and(|e| e >= d2) {
            r.violations.push(Violation::DegreeViolation { coordinate: i + 3 });
        }
    }
    if !c.omega.is_monic_in_x1() {
        r.warnings.push(Warning::NotMonicInX1);
    }
    if !integral_bi(&c.omega) || !c.rhos.iter().all(integral_bi) {
        r.warnings.push(Warning::RationalCoefficients);
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Unknown,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

fn check(name: &'static str, status: CheckStatus, detail: impl Into<String>) -> GenericityCheck {
    GenericityCheck { name, status, detail: detail.into() }
}

fn pass_if(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// `A(x1, num/den) * den^e` for `e >= deg_x2 A`.
fn homogenize_to(a: &BiPoly, num: &UniPoly, den: &UniPoly, e: usize) -> Result<UniPoly> {
    let Some(d) = a.deg_x2() else {
        return Ok(UniPoly::zero());
    };
    let h = homogenized_substitute(a, num, den)?;
    Ok(&h * &den.pow(e - d as usize))
}

/// Exact test that every point encoded by `p` lies on the curve `c`, using
/// arithmetic modulo `lambda`. Requires `lambda` square-free.
pub fn queries_on_curve(c: &OneDimParam, p: &ZeroDimParam) -> Result<bool> {
    let lambda = &p.lambda;
    if lambda.is_constant() {
        return Ok(true);
    }
    let Some(theta2) = p.thetas.first() else {
        return Err(Error::InvalidInput("zero-dimensional parametrization has no theta_2".into()));
    };
    let dl = lambda.derivative();
    let d = c.omega.deg_x2().unwrap_or(0) as usize;
    // omega(b, theta2(b)/lambda'(b)) = 0 at every root b of lambda
    let w = homogenize_to(&c.omega, theta2, &dl, d)?;
    if !w.rem(lambda)?.is_zero() {
        return Ok(false);
    }
    // lambda' * rho_i(b, y) = theta_i * omega_y(b, y)
    let wy = c.omega.partial(Var::X2);
    for (rho, theta) in c.rhos.iter().zip(p.thetas.iter().skip(1)) {
        let e = rho.deg_x2().unwrap_or(0).max(wy.deg_x2().unwrap_or(0)) as usize;
        let lhs = &homogenize_to(rho, theta2, &dl, e)? * &dl;
        let rhs = &homogenize_to(&wy, theta2, &dl, e)? * theta;
        if !(&lhs - &rhs).rem(lambda)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Best-effort checks of necessary consequences of generic position.
pub fn genericity_report(c: &OneDimParam, p: Option<&ZeroDimParam>) -> Vec<GenericityCheck> {
    let mut out = Vec::new();
    let d2 = c.omega.deg_x2().unwrap_or(0);
    let wy = c.omega.partial(Var::X2);
    let res = if d2 >= 1 { resultant_x2(&c.omega, &wy).ok() } else { Some(UniPoly::one()) };

    match &res {
        Some(r) if !r.is_zero() => out.push(check("resultant_nonzero", CheckStatus::Pass, "")),
        _ => out.push(check("resultant_nonzero", CheckStatus::Fail, "Res(omega, omega_x2) is zero")),
    }
    let r = res.filter(|r| !r.is_zero());

    // (b) the multiple ordinate of each critical fiber is given by S1
    match &r {
        Some(r) if d2 >= 2 && !r.is_constant() => {
            let status = first_subresultant_x2(&c.omega, &wy)
                .ok()
                .and_then(|s| {
                    let rs = r.squarefree_part().ok()?;
                    Some(pass_if(rs.gcd(&s.sr1).ok()?.is_constant()))
                })
                .unwrap_or(CheckStatus::Fail);
            out.push(check("unique_multiple_ordinate", status, "sr1 nonzero at every root of R"));
        }
        Some(_) => out.push(check("unique_multiple_ordinate", CheckStatus::Pass, "vacuous")),
        None => out.push(check("unique_multiple_ordinate", CheckStatus::Unknown, "")),
    }

    // (c) query abscissas avoid critical fibers
    match (p, &r) {
        (None, _) => out.push(check("queries_avoid_critical_fibers", CheckStatus::Pass, "no queries")),
        (Some(p), Some(r)) => {
            let ok = p.lambda.gcd(r).map(|g| g.is_constant()).unwrap_or(false);
            out.push(check("queries_avoid_critical_fibers", pass_if(ok), "gcd(lambda, R) constant"));
        }
        (Some(_), None) => out.push(check("queries_avoid_critical_fibers", CheckStatus::Unknown, "")),
    }

    // (d) multiple roots of R are double
    match &r {
        Some(r) => {
            let ok = node_polynomial(r)
                .ok()
                .and_then(|q| {
                    let rest = r.exact_div(&q.pow(2))?;
                    Some(rest.gcd(&q).ok()?.is_constant())
                })
                .unwrap_or(false);
            out.push(check("double_root_multiplicity", pass_if(ok), "q^2 divides R, R/q^2 coprime to q"));
        }
        None => out.push(check("double_root_multiplicity", CheckStatus::Unknown, "")),
    }

    // (e) query points on the curve, decided exactly modulo lambda
    match p {
        None => out.push(check("queries_on_curve", CheckStatus::Pass, "no queries")),
        Some(p) if p.lambda.is_squarefree() => {
            let status = queries_on_curve(c, p).map(pass_if).unwrap_or(CheckStatus::Fail);
            out.push(check("queries_on_curve", status, "exact test modulo lambda"));
        }
        Some(_) => out.push(check("queries_on_curve", CheckStatus::Unknown, "lambda not square-free")),
    }

    for name in ["H2", "H3", "H6"] {
        out.push(check(name, CheckStatus::Unknown, "not decidable from the parametrizations"));
    }
    out
}

fn eval_bi(p: &BiPoly, x: &Interval, y: &Interval) -> Interval {
    let mut acc = Interval::point(Rational::from_integer(BigInt::from(0)));
    for c in p.coeffs_in_x2().iter().rev() {
        acc = acc.mul(y).add(&eval_poly(c, x));
    }
    acc
}

/// Exact zero test of `omega_x2` at `(x, y)` when one coordinate is
/// rational; `None` when both are irrational.
fn derivative_vanishes(wy: &BiPoly, x: &AlgebraicNumber, y: &AlgebraicNumber) -> Option<bool> {
    if let Some(a) = x.as_rational() {
        return Some(sign_at(&wy.eval_x1(&a), y) == Ordering::Equal);
    }
    if let Some(b) = y.as_rational() {
        return Some(sign_at(&wy.eval_x2(&b), x) == Ordering::Equal);
    }
    None
}

/// Coordinates `x3..xn` of the point of the space curve above `(x, y)`, as
/// intervals narrower than `eps`.
///
/// When both coordinates are irrational a vanishing denominator cannot be
/// decided exactly; it is reported as `CriticalPoint` once the enclosure
/// stays ambiguous at very high precision.
pub fn lift_plane_point(
    c: &OneDimParam,
    x: &AlgebraicNumber,
    y: &AlgebraicNumber,
    eps: &Rational,
) -> Result<Vec<Interval>> {
    let wy = c.omega.partial(Var::X2);
    if derivative_vanishes(&wy, x, y) == Some(true) {
        return Err(Error::CriticalPoint);
    }
    if let (Some(a), Some(b)) = (x.as_rational(), y.as_rational()) {
        let den = wy.eval(&a, &b);
        return Ok(c.rhos.iter().map(|r| Interval::point(r.eval(&a, &b) / &den)).collect());
    }
    let (mut x, mut y) = (x.clone(), y.clone());
    let mut bits = 32u32;
    while bits <= 8192 {
        let w = Rational::new(BigInt::one(), BigInt::one() << bits);
        x.refine_in_place(&w);
        y.refine_in_place(&w);
        let (ix, iy) = (x.interval().clone(), y.interval().clone());
        if let Some(out) = c
            .rhos
            .iter()
            .map(|r| eval_bi(r, &ix, &iy).div(&eval_bi(&wy, &ix, &iy)))
            .collect::<Option<Vec<_>>>()
        {
            if out.iter().all(|i| &i.width() < eps) {
                return Ok(out);
            }
        }
        bits *= 2;
    }
    Err(Error::CriticalPoint)
}

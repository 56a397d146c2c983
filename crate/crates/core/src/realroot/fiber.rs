//! Real roots of `omega(alpha, x2)` above a real algebraic abscissa.
//!
//! Rational abscissas are handled exactly. For irrational ones the fiber
//! polynomial is enclosed by interval coefficients, the known double root
//! (if any) is divided out twice, and the remaining simple roots are
//! isolated by interval subdivision. Precision on `alpha` is doubled until
//! every box is certified.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{eval_interval_poly, eval_poly, isolate, sign_at, AlgebraicNumber, Interval, RealRootError};
use crate::poly::{BiPoly, Rational, UniPoly};

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 16384;

/// Default width bound for ordinate boxes.
pub fn default_box_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 20)
}

/// Location of the multiple root above a root of the discriminant:
/// `sr1(alpha) * beta = -sr10(alpha)`.
#[derive(Clone, Debug)]
pub struct DoubleRootHint {
    pub sr1: UniPoly,
    pub sr10: UniPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ordinate {
    Exact(AlgebraicNumber),
    /// Certified box holding exactly one root of the fiber.
    Boxed(Interval),
}

impl Ordinate {
    pub fn interval(&self) -> &Interval {
        match self {
            Ordinate::Exact(a) => a.interval(),
            Ordinate::Boxed(b) => b,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Ordinate::Exact(a) => a.to_f64(),
            Ordinate::Boxed(b) => b.to_f64_mid(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberRoot {
    pub ordinate: Ordinate,
    pub multiplicity: u32,
}

pub fn fiber_roots(
    omega: &BiPoly,
    alpha: &AlgebraicNumber,
    hint: Option<&DoubleRootHint>,
) -> Result<Vec<FiberRoot>, RealRootError> {
    fiber_roots_with(omega, alpha, hint, &default_box_width())
}

/// Like [`fiber_roots`], with ordinate boxes narrower than `eps`.
pub fn fiber_roots_with(
    omega: &BiPoly,
    alpha: &AlgebraicNumber,
    hint: Option<&DoubleRootHint>,
    eps: &Rational,
) -> Result<Vec<FiberRoot>, RealRootError> {
    if let Some(a) = alpha.as_rational() {
        return exact_fiber(omega, &a, eps);
    }
    let coeffs = omega.coeffs_in_x2();
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    if let Some(h) = hint {
        if sign_at(&h.sr1, alpha) == Ordering::Equal {
            return Err(RealRootError::GenericityViolation(format!(
                "first subresultant vanishes at x1 = {alpha}"
            )));
        }
        if coeffs.len() < 3 {
            return Err(RealRootError::GenericityViolation(
                "double root requested on a fiber of degree < 2".into(),
            ));
        }
    }
    let mut a = alpha.clone();
    let mut bits = START_BITS;
    while bits <= MAX_BITS {
        a.refine_in_place(&Rational::new(BigInt::one(), BigInt::one() << bits));
        if let Some(r) = a.as_rational() {
            return exact_fiber(omega, &r, eps);
        }
        let ia = a.interval().round_out(bits + 4);
        if let Some(out) = attempt(&coeffs, &ia, hint, bits, eps) {
            return Ok(out);
        }
        bits *= 2;
    }
    Err(RealRootError::GenericityViolation(format!(
        "fiber roots above x1 = {alpha} could not be separated"
    )))
}

fn exact_fiber(omega: &BiPoly, a: &Rational, eps: &Rational) -> Result<Vec<FiberRoot>, RealRootError> {
    let f = omega.eval_x1(a);
    if f.is_zero() {
        return Err(RealRootError::GenericityViolation(format!("curve contains the line x1 = {a}")));
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let g = f.gcd(&f.derivative()).expect("f is nonzero");
    let double = match g.degree() {
        Some(0) => None,
        Some(1) => Some(-g.coeff(0) / g.coeff(1)),
        _ => {
            return Err(RealRootError::GenericityViolation(format!(
                "fiber x1 = {a} has more than one multiple root or a root of multiplicity > 2"
            )))
        }
    };
    let sf = f.squarefree_part().map_err(|_| RealRootError::ZeroInput)?;
    let roots = isolate(&sf)?;
    Ok(roots
        .into_iter()
        .map(|r| {
            let multiplicity = match (&double, r.as_rational()) {
                (Some(d), Some(v)) if *d == v => 2,
                _ => 1,
            };
            FiberRoot { ordinate: Ordinate::Exact(r.refine(eps)), multiplicity }
        })
        .collect())
}

/// Synthetic division by `(y - b)` over interval coefficients; the
/// remainder is dropped.
fn deflate(h: &[Interval], b: &Interval, bits: u32) -> Vec<Interval> {
    let n = h.len() - 1;
    let mut q = vec![Interval::point(Rational::zero()); n];
    q[n - 1] = h[n].clone();
    for k in (1..n).rev() {
        q[k - 1] = h[k].add(&b.mul(&q[k])).round_out(bits);
    }
    q
}

fn derivative(h: &[Interval]) -> Vec<Interval> {
    h.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&Rational::from_integer(BigInt::from(k))))
        .collect()
}

/// Sign of the enclosed polynomial at `x`, if the enclosure decides it.
fn point_sign(h: &[Interval], x: &Rational) -> Option<Ordering> {
    eval_interval_poly(h, &Interval::point(x.clone())).sign()
}

/// A split point of `(lo, hi)` where the sign is decided. Several
/// candidates are tried so that a root sitting exactly on the midpoint does
/// not stall the subdivision.
fn split_point(h: &[Interval], lo: &Rational, hi: &Rational) -> Option<(Rational, Ordering)> {
    let w = hi - lo;
    [(1, 2), (7, 16), (9, 16), (3, 8), (5, 8)].iter().find_map(|&(n, d)| {
        let m = lo + &w * Rational::new(BigInt::from(n), BigInt::from(d));
        point_sign(h, &m).map(|s| (m, s))
    })
}

struct Piece {
    lo: Rational,
    hi: Rational,
    s_lo: Ordering,
    s_hi: Ordering,
}

/// Isolates the real roots of every polynomial in the family `h` (monic
/// enclosure), or `None` when precision is insufficient.
fn isolate_enclosure(h: &[Interval], bits: u32, eps: &Rational) -> Option<Vec<Interval>> {
    if h.len() <= 1 {
        return Some(Vec::new());
    }
    let n = h.len() - 1;
    let lead = &h[n];
    if lead.contains_zero() {
        return None;
    }
    let lead_min = lead.lo.abs().min(lead.hi.abs());
    let max = h[..n].iter().map(|c| c.max_abs()).max().unwrap_or_else(Rational::zero);
    let bound = (max / lead_min).ceil() + Rational::from_integer(BigInt::from(2));
    let dh = derivative(h);
    let min_w = Rational::new(BigInt::one(), BigInt::one() << (bits / 2));

    let lo = -bound.clone();
    let s_lo = point_sign(h, &lo)?;
    let s_hi = point_sign(h, &bound)?;
    let mut stack = vec![Piece { lo, hi: bound, s_lo, s_hi }];
    let mut out = Vec::new();
    while let Some(p) = stack.pop() {
        let x = Interval::new(p.lo.clone(), p.hi.clone());
        if eval_interval_poly(h, &x).sign().is_some() {
            continue;
        }
        if eval_interval_poly(&dh, &x).sign().is_some() {
            if p.s_lo == p.s_hi {
                continue;
            }
            out.push(shrink(h, p, eps)?);
            continue;
        }
        if x.width() < min_w {
            return None;
        }
        let (m, s) = split_point(h, &p.lo, &p.hi)?;
        stack.push(Piece { lo: m.clone(), hi: p.hi, s_lo: s, s_hi: p.s_hi });
        stack.push(Piece { lo: p.lo, hi: m, s_lo: p.s_lo, s_hi: s });
    }
    Some(out)
}

/// Narrows a box with a certified sign change below `eps`.
fn shrink(h: &[Interval], mut p: Piece, eps: &Rational) -> Option<Interval> {
    while &(&p.hi - &p.lo) >= eps {
        let (m, s) = split_point(h, &p.lo, &p.hi)?;
        if s == p.s_lo {
            p.lo = m;
        } else {
            p.hi = m;
        }
    }
    Some(Interval::new(p.lo, p.hi))
}

fn attempt(
    coeffs: &[UniPoly],
    ia: &Interval,
    hint: Option<&DoubleRootHint>,
    bits: u32,
    eps: &Rational,
) -> Option<Vec<FiberRoot>> {
    let r = bits + 8;
    let mut h: Vec<Interval> = coeffs.iter().map(|c| eval_poly(c, ia).round_out(r)).collect();
    let mut beta = None;
    if let Some(hint) = hint {
        let num = eval_poly(&hint.sr10, ia).neg();
        let den = eval_poly(&hint.sr1, ia);
        let b = num.div(&den)?.round_out(r);
        if &b.width() >= eps {
            return None;
        }
        h = deflate(&deflate(&h, &b, r), &b, r);
        beta = Some(b);
    }
    let boxes = isolate_enclosure(&h, bits, eps)?;
    let mut out: Vec<FiberRoot> = boxes
        .into_iter()
        .map(|b| FiberRoot { ordinate: Ordinate::Boxed(b), multiplicity: 1 })
        .collect();
    if let Some(b) = beta {
        if out.iter().any(|f| f.ordinate.interval().intersects(&b)) {
            return None;
        }
        let pos = out.iter().take_while(|f| f.ordinate.interval().hi < b.lo).count();
        out.insert(pos, FiberRoot { ordinate: Ordinate::Boxed(b), multiplicity: 2 });
    }
    Some(out)
}

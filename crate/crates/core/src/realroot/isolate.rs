//! Descartes-rule bisection over the integers.
//!
//! The input is mapped onto `[0, 1]` by `x = -B + 2B t` with `B` a power of
//! two bounding every root; subintervals are then handled through the usual
//! `2^n q(t/2)` and Taylor-shift transforms so that all arithmetic stays in
//! `Z[t]`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{simplest_rational, AlgebraicNumber, Interval, RealRootError};
use crate::poly::{Rational, UniPoly};

type IntPoly = Vec<BigInt>;

fn taylor_shift(p: &IntPoly, c: &BigInt) -> IntPoly {
    let mut a = p.clone();
    let n = a.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let t = &a[j + 1] * c;
            a[j] += t;
        }
    }
    a
}

fn taylor_shift_one(p: &IntPoly) -> IntPoly {
    let mut a = p.clone();
    let n = a.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
    a
}

fn scale_var(p: &IntPoly, s: &BigInt) -> IntPoly {
    let mut f = BigInt::one();
    p.iter()
        .map(|c| {
            let v = c * &f;
            f *= s;
            v
        })
        .collect()
}

fn sign_variations(p: &IntPoly) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in p {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Upper bound on the number of roots of `q` in `(0, 1)`.
fn descartes_01(q: &IntPoly) -> usize {
    let rev: IntPoly = q.iter().rev().cloned().collect();
    sign_variations(&taylor_shift_one(&rev))
}

/// `2^n q(t/2)`, the left half of `[0, 1]` mapped back onto `[0, 1]`.
fn left_half(q: &IntPoly) -> IntPoly {
    let n = q.len() - 1;
    q.iter().enumerate().map(|(i, c)| c << (n - i)).collect()
}

/// Exact division by `t - 1`; `q(1)` must vanish.
fn deflate_at_one(q: &IntPoly) -> IntPoly {
    let n = q.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (1..=n).rev() {
        carry += &q[i];
        out[i - 1] = carry.clone();
    }
    debug_assert!((carry + &q[0]).is_zero());
    out
}

pub(super) fn int_eval_sign(p: &IntPoly, x: &Rational) -> i8 {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + Rational::from_integer(c.clone());
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

enum Found {
    Exact(Rational),
    Isolating(Interval),
}

enum Task {
    Node { q: IntPoly, c: BigInt, k: u32, lo_root: bool, hi_root: bool },
    Emit(Rational),
}

/// Root bound `B`, a power of two with `|root| < B` for every complex root.
fn root_bound(p: &IntPoly) -> BigInt {
    let lead = p.last().unwrap().abs();
    let max = p[..p.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    // 1 + max/lead <= 1 + ceil(max/lead)
    let q = (&max + &lead - BigInt::one()) / &lead;
    let target = q + BigInt::one();
    let mut b = BigInt::one();
    while b <= target {
        b <<= 1;
    }
    b
}

fn bisect_isolate(p: &IntPoly) -> Vec<Found> {
    let b = root_bound(p);
    let two_b = &b << 1;
    let q0 = scale_var(&taylor_shift(p, &-&b), &two_b);
    let to_x = |c: &BigInt, k: u32| -> Rational {
        let num = &two_b * c;
        Rational::new(num, BigInt::one() << k) - Rational::from_integer(b.clone())
    };
    let mut out = Vec::new();
    let mut stack = vec![Task::Node { q: q0, c: BigInt::zero(), k: 0, lo_root: false, hi_root: false }];
    while let Some(task) = stack.pop() {
        let (q, c, k, lo_root, hi_root) = match task {
            Task::Emit(r) => {
                out.push(Found::Exact(r));
                continue;
            }
            Task::Node { q, c, k, lo_root, hi_root } => (q, c, k, lo_root, hi_root),
        };
        if q.len() <= 1 {
            continue;
        }
        let v = descartes_01(&q);
        if v == 0 {
            continue;
        }
        if v == 1 && !lo_root && !hi_root {
            out.push(Found::Isolating(Interval::new(to_x(&c, k), to_x(&(&c + 1), k))));
            continue;
        }
        let mut ql = left_half(&q);
        let mut qr = taylor_shift_one(&ql);
        let mid_root = qr[0].is_zero();
        let c2 = &c << 1;
        let mid_x = to_x(&(&c2 + 1), k + 1);
        if mid_root {
            ql = deflate_at_one(&ql);
            qr.remove(0);
        }
        stack.push(Task::Node { q: qr, c: &c2 + 1, k: k + 1, lo_root: mid_root, hi_root });
        if mid_root {
            stack.push(Task::Emit(mid_x));
        }
        stack.push(Task::Node { q: ql, c: c2, k: k + 1, lo_root, hi_root: mid_root });
    }
    out
}

/// Bisects an isolating interval of `p` until narrower than `1 / lead^2`,
/// then tests the simplest rational inside; any rational root of the
/// primitive integer polynomial `p` has denominator at most `lead`, so it is
/// the unique simplest rational of such an interval.
fn detect_rational(p: &IntPoly, iv: &Interval) -> Option<Rational> {
    let lead = p.last().unwrap().abs();
    if lead.bits() > 512 {
        return None;
    }
    let target = Rational::new(BigInt::one(), &lead * &lead);
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let s_lo = int_eval_sign(p, &lo);
    while &hi - &lo >= target {
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        match int_eval_sign(p, &mid) {
            0 => return Some(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    let r = simplest_rational(&lo, &hi);
    (int_eval_sign(p, &r) == 0).then_some(r)
}

pub(super) fn isolate(p: &UniPoly) -> Result<Vec<AlgebraicNumber>, RealRootError> {
    if p.is_zero() {
        return Err(RealRootError::ZeroInput);
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    if !p.is_squarefree() {
        return Err(RealRootError::NotSquareFree);
    }
    let ip = p.primitive_integer();
    let found = bisect_isolate(&ip);

    let mut exact: Vec<Option<Rational>> = Vec::with_capacity(found.len());
    let mut intervals: Vec<Interval> = Vec::with_capacity(found.len());
    for f in &found {
        match f {
            Found::Exact(r) => {
                exact.push(Some(r.clone()));
                intervals.push(Interval::point(r.clone()));
            }
            Found::Isolating(iv) => {
                exact.push(detect_rational(&ip, iv));
                intervals.push(iv.clone());
            }
        }
    }

    // Irrational roots keep the reduced polynomial as their definition.
    let mut reduced = UniPoly::from_bigints(&ip);
    for r in exact.iter().flatten() {
        reduced = reduced.exact_div(&UniPoly::linear_root(r)).expect("rational root divides");
    }
    let reduced = reduced.monic();

    let n = intervals.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        match &exact[i] {
            Some(r) => {
                // half the distance to the closest neighbour, capped at 1
                let mut gap = Rational::one();
                if i > 0 {
                    gap = gap.min(r - &intervals[i - 1].hi);
                }
                if i + 1 < n {
                    gap = gap.min(&intervals[i + 1].lo - r);
                }
                let w = gap / Rational::from_integer(BigInt::from(2));
                let iv = Interval::new(r - &w, r + &w);
                intervals[i] = iv.clone();
                out.push(AlgebraicNumber::from_parts(UniPoly::linear_root(r), iv));
            }
            None => out.push(AlgebraicNumber::from_parts(reduced.clone(), intervals[i].clone())),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn transforms() {
        // (x+1)^2 = x^2 + 2x + 1
        assert_eq!(taylor_shift_one(&ip(&[0, 0, 1])), ip(&[1, 2, 1]));
        assert_eq!(taylor_shift(&ip(&[0, 0, 1]), &BigInt::from(-3)), ip(&[9, -6, 1]));
        assert_eq!(deflate_at_one(&ip(&[-1, 0, 1])), ip(&[1, 1]));
        assert_eq!(sign_variations(&ip(&[1, 0, -1, 0, 2])), 2);
    }

    #[test]
    fn bound_covers_roots() {
        // roots of x^2 - 100 are +-10
        assert!(root_bound(&ip(&[-100, 0, 1])) > BigInt::from(10));
    }
}

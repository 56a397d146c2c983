use num_traits::{Signed, Zero};

use super::{Interval, RealRootError};
use crate::poly::{Rational, UniPoly};

/// Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone()];
    if p.is_constant() {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        // positive rescaling keeps the sign pattern and the sizes small
        let r = -r.primitive_with_sign();
        debug_assert!(!r.is_zero());
        seq.push(r);
    }
    seq
}

fn variations_at(seq: &[UniPoly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
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

/// Number of real roots of the square-free `p` in the open interval
/// `(lo, hi)`.
pub fn sturm_count(p: &UniPoly, iv: &Interval) -> Result<usize, RealRootError> {
    if p.is_zero() {
        return Err(RealRootError::ZeroInput);
    }
    if p.eval(&iv.lo).is_zero() || p.eval(&iv.hi).is_zero() {
        return Err(RealRootError::RootAtEndpoint);
    }
    let seq = sturm_sequence(p);
    let a = variations_at(&seq, &iv.lo);
    let b = variations_at(&seq, &iv.hi);
    Ok(a.saturating_sub(b))
}

trait PrimitiveWithSign {
    fn primitive_with_sign(&self) -> UniPoly;
}

impl PrimitiveWithSign for UniPoly {
    /// Positive multiple with coprime integer coefficients, keeping the sign
    /// of the leading coefficient.
    fn primitive_with_sign(&self) -> UniPoly {
        let p = self.primitive();
        if self.lc().is_negative() {
            -p
        } else {
            p
        }
    }
}

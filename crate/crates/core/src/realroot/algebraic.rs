use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::interval::{eval_poly, rational_to_f64};
use super::Interval;
use crate::poly::{Rational, UniPoly};

/// A real algebraic number: a square-free defining polynomial together with
/// an interval holding exactly one of its roots.
///
/// Rational values always carry a degree-1 defining polynomial, so
/// [`AlgebraicNumber::as_rational`] is exact; their interval is a point when
/// built with [`AlgebraicNumber::from_rational`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    defining: UniPoly,
    isol: Interval,
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl AlgebraicNumber {
    pub(crate) fn from_parts(defining: UniPoly, isol: Interval) -> Self {
        debug_assert!(isol.lo < isol.hi);
        AlgebraicNumber { defining, isol }
    }

    /// Checks the isolation contract before wrapping: square-free
    /// definition, strict sign change over the interval, and a single root
    /// inside it.
    pub fn new(defining: UniPoly, isol: Interval) -> Option<Self> {
        if isol.lo >= isol.hi || !defining.is_squarefree() {
            return None;
        }
        let a = sign_of(&defining.eval(&isol.lo));
        let b = sign_of(&defining.eval(&isol.hi));
        if a * b >= 0 {
            return None;
        }
        match super::sturm_count(&defining, &isol) {
            Ok(1) => Some(AlgebraicNumber { defining: defining.monic(), isol }),
            _ => None,
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        AlgebraicNumber { defining: UniPoly::linear_root(&r), isol: Interval::point(r) }
    }

    pub fn defining(&self) -> &UniPoly {
        &self.defining
    }

    pub fn interval(&self) -> &Interval {
        &self.isol
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.defining.degree() == Some(1))
            .then(|| -self.defining.coeff(0) / self.defining.coeff(1))
    }

    pub fn is_rational(&self) -> bool {
        self.defining.degree() == Some(1)
    }

    /// Halves the isolating interval once.
    pub fn bisect(&mut self) {
        if let Some(r) = self.as_rational() {
            let quarter = self.isol.width() / Rational::from_integer(BigInt::from(4));
            self.isol = Interval::new(&r - &quarter, &r + &quarter);
            return;
        }
        let mid = self.isol.mid();
        let s_mid = sign_of(&self.defining.eval(&mid));
        if s_mid == 0 {
            // the root is this rational midpoint
            *self = AlgebraicNumber::from_rational(mid);
            return;
        }
        let s_lo = sign_of(&self.defining.eval(&self.isol.lo));
        if s_mid == s_lo {
            self.isol.lo = mid;
        } else {
            self.isol.hi = mid;
        }
    }

    /// Same root with an interval narrower than `eps` (`eps > 0`).
    pub fn refine(&self, eps: &Rational) -> AlgebraicNumber {
        let mut a = self.clone();
        a.refine_in_place(eps);
        a
    }

    pub fn refine_in_place(&mut self, eps: &Rational) {
        assert!(eps.is_positive(), "refinement width must be positive");
        while &self.isol.width() >= eps {
            self.bisect();
        }
    }

    /// Compares with a rational, refining as needed.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if let Some(v) = self.as_rational() {
            return v.cmp(r);
        }
        // the root lies strictly inside the isolating interval
        let mut a = self.clone();
        loop {
            if r <= &a.isol.lo {
                return Ordering::Greater;
            }
            if r >= &a.isol.hi {
                return Ordering::Less;
            }
            a.bisect();
            if let Some(v) = a.as_rational() {
                return v.cmp(r);
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(v) = self.as_rational() {
            return rational_to_f64(&v);
        }
        let a = self.refine(&Rational::new(BigInt::from(1), BigInt::from(1u64 << 60)));
        a.isol.to_f64_mid()
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "root of {} in {}", self.defining, self.isol),
        }
    }
}

/// Exact sign of `p` at `a`.
///
/// Zero is decided through `gcd(p, defining)`; otherwise the isolating
/// interval is refined until the interval value of `p` excludes zero.
pub fn sign_at(p: &UniPoly, a: &AlgebraicNumber) -> Ordering {
    if let Some(v) = a.as_rational() {
        return p.eval(&v).cmp(&Rational::zero());
    }
    if p.is_zero() {
        return Ordering::Equal;
    }
    let g = p.gcd(a.defining()).expect("defining polynomial is nonzero");
    if !g.is_constant() {
        let lo = sign_of(&g.eval(&a.isol.lo));
        let hi = sign_of(&g.eval(&a.isol.hi));
        if lo * hi < 0 {
            return Ordering::Equal;
        }
    }
    let mut a = a.clone();
    loop {
        if let Some(v) = a.as_rational() {
            return p.eval(&v).cmp(&Rational::zero());
        }
        if let Some(s) = eval_poly(p, &a.isol).sign() {
            return s;
        }
        a.bisect();
    }
}

/// Flags, for each real root of the square-free `p` (in ascending order),
/// whether it is also a root of `q`.
pub fn common_roots(p: &UniPoly, q: &UniPoly) -> Result<Vec<bool>, super::RealRootError> {
    let roots = super::isolate(p)?;
    Ok(common_roots_of(&roots, p, q))
}

/// [`common_roots`] against already isolated roots of `p`.
pub fn common_roots_of(roots: &[AlgebraicNumber], p: &UniPoly, q: &UniPoly) -> Vec<bool> {
    if q.is_zero() {
        return vec![true; roots.len()];
    }
    let g = p.gcd(q).expect("p is nonzero");
    if g.is_constant() {
        return vec![false; roots.len()];
    }
    roots
        .iter()
        .map(|a| match a.as_rational() {
            Some(v) => g.eval(&v).is_zero(),
            None => {
                // g | p and the interval holds a single root of p
                let lo = sign_of(&g.eval(&a.isol.lo));
                let hi = sign_of(&g.eval(&a.isol.hi));
                lo * hi < 0
            }
        })
        .collect()
}

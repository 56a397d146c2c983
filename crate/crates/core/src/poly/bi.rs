//! Sparse bivariate polynomials in `(x1, x2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, UniPoly};

/// Selects one of the two plane coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X1,
    X2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub e1: u32,
    pub e2: u32,
    pub coeff: Rational,
}

/// Terms are kept sorted by `(e2, e1)` with no duplicate exponent pairs and
/// no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: Vec<Term>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms(vec![Term { e1: 0, e2: 0, coeff: c }])
    }

    pub fn var(v: Var) -> Self {
        let (e1, e2) = match v {
            Var::X1 => (1, 0),
            Var::X2 => (0, 1),
        };
        Self::from_terms(vec![Term { e1, e2, coeff: Rational::one() }])
    }

    /// Normalizes arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for t in terms {
            *acc.entry((t.e2, t.e1)).or_insert_with(Rational::zero) += t.coeff;
        }
        BiPoly {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((e2, e1), coeff)| Term { e1, e2, coeff })
                .collect(),
        }
    }

    /// `(e1, e2, coeff)` triples with integer coefficients.
    pub fn from_i64_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e1, e2, c)| Term {
            e1,
            e2,
            coeff: Rational::from_integer(BigInt::from(c)),
        }))
    }

    /// A polynomial in `x1` alone.
    pub fn from_uni_x1(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| Term {
            e1: i as u32,
            e2: 0,
            coeff: c.clone(),
        }))
    }

    /// Inverse of [`BiPoly::coeffs_in_x2`].
    pub fn from_x2_coeffs(coeffs: &[UniPoly]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().flat_map(|(k, a)| {
            a.coeffs().iter().enumerate().map(move |(i, c)| Term {
                e1: i as u32,
                e2: k as u32,
                coeff: c.clone(),
            })
        }))
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_x1(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.e1).max()
    }

    pub fn deg_x2(&self) -> Option<u32> {
        self.terms.last().map(|t| t.e2)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.e1 + t.e2).max()
    }

    /// Coefficients as a polynomial in `x2` over `Q[x1]`; entry `k` is the
    /// coefficient of `x2^k`.
    pub fn coeffs_in_x2(&self) -> Vec<UniPoly> {
        let Some(d) = self.deg_x2() else {
            return Vec::new();
        };
        let mut dense: Vec<Vec<Rational>> = vec![Vec::new(); d as usize + 1];
        for t in &self.terms {
            let row = &mut dense[t.e2 as usize];
            if row.len() <= t.e1 as usize {
                row.resize(t.e1 as usize + 1, Rational::zero());
            }
            row[t.e1 as usize] = t.coeff.clone();
        }
        dense.into_iter().map(UniPoly::from_coeffs).collect()
    }

    /// Leading coefficient in `x2`, a polynomial in `x1`.
    pub fn leading_x2_coeff(&self) -> UniPoly {
        self.coeffs_in_x2().pop().unwrap_or_else(UniPoly::zero)
    }

    pub fn is_monic_in_x2(&self) -> bool {
        self.leading_x2_coeff() == UniPoly::one()
    }

    /// Same as [`BiPoly::is_monic_in_x2`] for `x1`: the coefficient of the
    /// highest power of `x1` is the constant 1.
    pub fn is_monic_in_x1(&self) -> bool {
        let Some(d) = self.deg_x1() else { return false };
        let top: Vec<&Term> = self.terms.iter().filter(|t| t.e1 == d).collect();
        top.len() == 1 && top[0].e2 == 0 && top[0].coeff.is_one()
    }

    pub fn partial(&self, which: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|t| {
            let e = match which {
                Var::X1 => t.e1,
                Var::X2 => t.e2,
            };
            if e == 0 {
                return None;
            }
            let coeff = &t.coeff * Rational::from_integer(BigInt::from(e));
            Some(match which {
                Var::X1 => Term { e1: t.e1 - 1, e2: t.e2, coeff },
                Var::X2 => Term { e1: t.e1, e2: t.e2 - 1, coeff },
            })
        }))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|t| Term { coeff: &t.coeff * s, ..t.clone() }))
    }

    /// Specializes `x1 = a`, giving a polynomial in `x2`.
    pub fn eval_x1(&self, a: &Rational) -> UniPoly {
        let coeffs: Vec<Rational> = self.coeffs_in_x2().iter().map(|c| c.eval(a)).collect();
        UniPoly::from_coeffs(coeffs)
    }

    /// Specializes `x2 = b`, giving a polynomial in `x1`.
    pub fn eval_x2(&self, b: &Rational) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs_in_x2().iter().rev() {
            acc = &acc.scale(b) + c;
        }
        acc
    }

    pub fn eval(&self, a: &Rational, b: &Rational) -> Rational {
        self.eval_x1(a).eval(b)
    }

    /// Human-readable form, e.g. `x2^2 - x1^3 - x1^2`. Terms are listed by
    /// decreasing `x2` exponent, then by decreasing `x1` exponent.
    pub fn display_with(&self, v1: &str, v2: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut sorted: Vec<&Term> = self.terms.iter().collect();
        sorted.sort_by_key(|t| std::cmp::Reverse((t.e2, t.e1)));
        let pieces: Vec<(Rational, String)> = sorted
            .into_iter()
            .map(|t| {
                let mut parts = Vec::new();
                for (name, e) in [(v1, t.e1), (v2, t.e2)] {
                    match e {
                        0 => {}
                        1 => parts.push(name.to_string()),
                        _ => parts.push(format!("{name}^{e}")),
                    }
                }
                (t.coeff.clone(), parts.join("*"))
            })
            .collect();
        super::format_terms(&pieces)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x1", "x2"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().chain(rhs.terms.iter()).cloned())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .cloned()
                .chain(rhs.terms.iter().map(|t| Term { coeff: -&t.coeff, ..t.clone() })),
        )
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().flat_map(|a| {
            rhs.terms.iter().map(move |b| Term {
                e1: a.e1 + b.e1,
                e2: a.e2 + b.e2,
                coeff: &a.coeff * &b.coeff,
            })
        }))
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

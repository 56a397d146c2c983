//! Resultants and first subresultants with respect to `x2`.
//!
//! Polynomials are handled as dense vectors in `x2` whose coefficients live
//! in `D = Q[x1]`. Inputs are scaled to integer coefficients first; the
//! subresultant PRS (Brown's formulation) then runs with exact divisions in
//! `D`.

use num_bigint::BigInt;
use num_traits::One;

use super::{BiPoly, PolyError, Rational, UniPoly};

type PolyX2 = Vec<UniPoly>;

/// Degree-1 subresultant `S1 = sr1 * x2 + sr10` of a pair with respect to
/// `x2`, both coefficients polynomials in `x1`.
///
/// At a root `a` of the resultant where `sr1(a) != 0`, the unique multiple
/// root of `f(a, x2)` is `-sr10(a) / sr1(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstSubresultant {
    pub sr1: UniPoly,
    pub sr10: UniPoly,
}

fn trim(mut p: PolyX2) -> PolyX2 {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn deg(p: &PolyX2) -> Option<usize> {
    p.len().checked_sub(1)
}

fn lc(p: &PolyX2) -> UniPoly {
    p.last().cloned().unwrap_or_else(UniPoly::zero)
}

fn mul_ground(p: &PolyX2, c: &UniPoly) -> PolyX2 {
    trim(p.iter().map(|a| a * c).collect())
}

fn quo_ground(p: &PolyX2, c: &UniPoly) -> PolyX2 {
    trim(
        p.iter()
            .map(|a| a.exact_div(c).expect("subresultant PRS division is exact"))
            .collect(),
    )
}

/// Pseudo-remainder `lc(g)^(deg f - deg g + 1) * f mod g`.
fn prem(f: &PolyX2, g: &PolyX2) -> PolyX2 {
    let dg = deg(g).expect("prem by zero");
    let b = lc(g);
    let mut r = f.clone();
    let Some(df) = deg(&r) else { return r };
    if df < dg {
        return r;
    }
    let mut e = df - dg + 1;
    while let Some(dr) = deg(&r) {
        if dr < dg {
            break;
        }
        let t = lc(&r);
        let shift = dr - dg;
        let mut next: PolyX2 = r.iter().map(|c| c * &b).collect();
        for (j, gc) in g.iter().enumerate() {
            next[j + shift] = &next[j + shift] - &(&t * gc);
        }
        r = trim(next);
        e -= 1;
    }
    let s = b.pow(e);
    mul_ground(&r, &s)
}

/// Subresultant PRS of `f, g` with `deg f >= deg g`, `g != 0`.
///
/// Returns the sequence `R` (`f`, `g`, then the successive pseudo-remainders
/// scaled so that each equals a determinantal subresultant up to sign) and,
/// aligned with it, the principal subresultant coefficients `S`: the
/// subresultant of degree `deg R[i]` is `S[i] / lc(R[i]) * R[i]`.
fn inner_subresultants(f: &PolyX2, g: &PolyX2) -> (Vec<PolyX2>, Vec<UniPoly>) {
    let n = deg(f).expect("nonzero f");
    let mut m = deg(g).expect("nonzero g");
    debug_assert!(n >= m);
    let mut seq = vec![f.clone(), g.clone()];
    let mut d = n - m;
    let minus_one = UniPoly::constant(-Rational::one());
    let b = minus_one.pow(d + 1);
    let mut h = mul_ground(&prem(f, g), &b);
    let mut lcg = lc(g);
    let mut c = lcg.pow(d);
    let mut principal = vec![UniPoly::one(), c.clone()];
    c = -&c;
    let (mut ff, mut gg);
    gg = g.clone();
    while !h.is_empty() {
        let k = deg(&h).unwrap();
        seq.push(h.clone());
        ff = gg;
        gg = h;
        d = m - k;
        m = k;
        let b = -&(&lcg * &c.pow(d));
        h = quo_ground(&prem(&ff, &gg), &b);
        lcg = lc(&gg);
        if d > 1 {
            let q = c.pow(d - 1);
            c = (-&lcg).pow(d).exact_div(&q).expect("exact scalar subresultant");
        } else {
            c = -&lcg;
        }
        principal.push(-&c);
    }
    (seq, principal)
}

fn clear_denominators(p: &BiPoly) -> (PolyX2, BigInt) {
    let coeffs = p.coeffs_in_x2();
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, &c.denominator_lcm()));
    let s = Rational::from_integer(l.clone());
    (coeffs.iter().map(|c| c.scale(&s)).collect(), l)
}

fn checked_x2_degree(p: &BiPoly, what: &str) -> Result<usize, PolyError> {
    p.deg_x2()
        .map(|d| d as usize)
        .ok_or_else(|| PolyError::DegenerateInput(format!("{what} is the zero polynomial")))
}

/// Resultant of `f` and `g` with respect to `x2`, as a polynomial in `x1`,
/// with the sign of the Sylvester determinant whose first rows hold `f`.
pub fn resultant_x2(f: &BiPoly, g: &BiPoly) -> Result<UniPoly, PolyError> {
    let n = checked_x2_degree(f, "first argument")?;
    let m = checked_x2_degree(g, "second argument")?;
    if n == 0 && m == 0 {
        return Err(PolyError::DegenerateInput("both arguments are free of x2".into()));
    }
    let (fi, cf) = clear_denominators(f);
    let (gi, cg) = clear_denominators(g);
    // Res(a, b) = (-1)^(deg a * deg b) Res(b, a)
    let (res, swapped) = if n >= m {
        (prs_resultant(&fi, &gi), false)
    } else {
        (prs_resultant(&gi, &fi), true)
    };
    let mut res = res;
    if swapped && (n * m) % 2 == 1 {
        res = -res;
    }
    // Res(cf*f, cg*g) = cf^m cg^n Res(f, g)
    let unscale = Rational::from_integer(cf.pow(m as u32) * cg.pow(n as u32)).recip();
    Ok(res.scale(&unscale))
}

fn prs_resultant(f: &PolyX2, g: &PolyX2) -> UniPoly {
    let (seq, principal) = inner_subresultants(f, g);
    if deg(seq.last().unwrap()).unwrap() > 0 {
        UniPoly::zero()
    } else {
        principal.last().unwrap().clone()
    }
}

/// Coefficients of the degree-1 subresultant of `(f, g)` with respect to
/// `x2`. Requires `deg_x2 f >= 2`, `deg_x2 g >= 1` and `deg_x2 f >= deg_x2 g`.
///
/// The result equals the determinantal subresultant up to a global sign.
pub fn first_subresultant_x2(f: &BiPoly, g: &BiPoly) -> Result<FirstSubresultant, PolyError> {
    let n = checked_x2_degree(f, "first argument")?;
    let m = checked_x2_degree(g, "second argument")?;
    if n < 2 || m < 1 || m > n {
        return Err(PolyError::DegenerateInput(format!(
            "first subresultant needs deg f >= 2, 1 <= deg g <= deg f (got {n}, {m})"
        )));
    }
    let (fi, cf) = clear_denominators(f);
    let (gi, cg) = clear_denominators(g);
    let (seq, principal) = inner_subresultants(&fi, &gi);
    let mut s1: PolyX2 = Vec::new();
    for i in 1..seq.len() {
        let di = deg(&seq[i]).unwrap();
        let dprev = deg(&seq[i - 1]).unwrap();
        if di == 1 {
            // bottom of the block: S_1 = (sr_1 / lc R_i) R_i
            let l = lc(&seq[i]);
            s1 = quo_ground(&mul_ground(&seq[i], &principal[i]), &l);
            break;
        }
        if i >= 2 && dprev == 2 && di == 0 {
            // top of a defective block: S_1 = R_i, a constant in x2
            s1 = seq[i].clone();
            break;
        }
        if di < 1 {
            break;
        }
    }
    // S_j(cf f, cg g) = cf^(m-j) cg^(n-j) S_j(f, g)
    let unscale =
        Rational::from_integer(cf.pow((m - 1) as u32) * cg.pow((n - 1) as u32)).recip();
    let coeff = |k: usize| s1.get(k).map(|c| c.scale(&unscale)).unwrap_or_else(UniPoly::zero);
    Ok(FirstSubresultant { sr1: coeff(1), sr10: coeff(0) })
}

/// With `d = deg_x2 A` and `A = sum a_k(x1) x2^k`, returns
/// `sum a_k * num^k * den^(d-k)`: the `x2`-homogenization of `A` evaluated at
/// `(x1, num, den)`.
pub fn homogenized_substitute(
    a: &BiPoly,
    num: &UniPoly,
    den: &UniPoly,
) -> Result<UniPoly, PolyError> {
    if den.is_zero() {
        return Err(PolyError::ZeroDenominator);
    }
    let coeffs = a.coeffs_in_x2();
    let Some(d) = coeffs.len().checked_sub(1) else {
        return Ok(UniPoly::zero());
    };
    let mut acc = UniPoly::zero();
    for (k, ak) in coeffs.iter().enumerate() {
        if ak.is_zero() {
            continue;
        }
        acc = &acc + &(&(ak * &num.pow(k)) * &den.pow(d - k));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, Var};

    fn bp(t: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_i64_terms(t)
    }

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn resultant_examples() {
        let nodal = bp(&[(0, 2, 1), (3, 0, -1), (2, 0, -1)]);
        let r = resultant_x2(&nodal, &nodal.partial(Var::X2)).unwrap();
        assert_eq!(r, up(&[0, 0, -4, -4]));
        let circle = bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        // det [[1, 0, x^2-1], [2, 0, 0], [0, 2, 0]] = 4(x^2 - 1)
        assert_eq!(resultant_x2(&circle, &circle.partial(Var::X2)).unwrap(), up(&[-4, 0, 4]));
        let para = bp(&[(0, 1, 1), (2, 0, -1)]);
        assert_eq!(resultant_x2(&para, &BiPoly::constant(int(1))).unwrap(), UniPoly::one());
    }

    #[test]
    fn resultant_rejects_zero() {
        let circle = bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        assert!(resultant_x2(&circle, &BiPoly::zero()).is_err());
    }

    #[test]
    fn first_subresultant_examples() {
        let nodal = bp(&[(0, 2, 1), (3, 0, -1), (2, 0, -1)]);
        let s = first_subresultant_x2(&nodal, &nodal.partial(Var::X2)).unwrap();
        assert!(s.sr10.is_zero());
        assert!(s.sr1.is_constant() && !s.sr1.is_zero());
        let circle = bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        let s = first_subresultant_x2(&circle, &circle.partial(Var::X2)).unwrap();
        assert!(s.sr10.is_zero() && s.sr1.is_constant() && !s.sr1.is_zero());
    }

    #[test]
    fn homogenized_substitute_examples() {
        let a = bp(&[(1, 0, 8), (0, 0, 4)]);
        let out = homogenized_substitute(&a, &up(&[3, 1]), &up(&[2])).unwrap();
        assert_eq!(out, up(&[4, 8]));
        let x2 = bp(&[(0, 1, 1)]);
        assert_eq!(homogenized_substitute(&x2, &UniPoly::zero(), &up(&[2])).unwrap(), UniPoly::zero());
        let b = bp(&[(0, 2, 1), (1, 0, 1)]);
        assert_eq!(homogenized_substitute(&b, &up(&[1]), &up(&[1])).unwrap(), up(&[1, 1]));
        assert_eq!(
            homogenized_substitute(&b, &up(&[1]), &UniPoly::zero()),
            Err(PolyError::ZeroDenominator)
        );
    }
}

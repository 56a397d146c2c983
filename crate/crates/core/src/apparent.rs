//! Abscissas of apparent singularities: nodes of the plane projection that
//! are not images of singular points of the space curve.

use crate::params::OneDimParam;
use crate::poly::{first_subresultant_x2, homogenized_substitute, resultant_x2, UniPoly, Var};
use crate::realroot::{isolate, AlgebraicNumber};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApparentResult {
    /// Monic, square-free; its real roots are the apparent node abscissas.
    pub q_app: UniPoly,
    pub r: UniPoly,
    pub r_star: UniPoly,
    /// Roots of `R` of multiplicity exactly two.
    pub q: UniPoly,
    pub sr1: UniPoly,
    pub sr10: UniPoly,
    pub b: UniPoly,
    /// Set when the node criterion vanishes at every root of `q`; `q_app`
    /// is then 1.
    pub criterion_degenerate: bool,
}

/// `gcd(R*, R') / gcd(R*, R', R'')` for nonzero `r`.
pub(crate) fn node_polynomial(r: &UniPoly) -> Result<UniPoly> {
    if r.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    if r.is_constant() {
        return Ok(UniPoly::one());
    }
    let rs = r.squarefree_part()?;
    let d1 = r.derivative();
    let g1 = rs.gcd(&d1)?;
    let g2 = g1.gcd(&d1.derivative())?;
    Ok(g1.exact_div(&g2).expect("nested gcds divide").monic())
}

pub fn apparent_singularities(c: &OneDimParam) -> Result<ApparentResult> {
    let omega = &c.omega;
    let d2 = omega.deg_x2().unwrap_or(0);
    let wy = omega.partial(Var::X2);
    let r = if d2 >= 1 { resultant_x2(omega, &wy)? } else { UniPoly::one() };
    if r.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    let r_star = r.squarefree_part()?;
    let q = node_polynomial(&r)?;
    let (sr1, sr10) = if d2 >= 2 {
        let s = first_subresultant_x2(omega, &wy)?;
        (s.sr1, s.sr10)
    } else {
        (UniPoly::zero(), UniPoly::zero())
    };

    let mut out = ApparentResult {
        q_app: UniPoly::one(),
        r,
        r_star,
        q,
        sr1,
        sr10,
        b: UniPoly::zero(),
        criterion_degenerate: false,
    };
    // a plane curve is its own projection
    let Some(rho3) = c.rhos.first() else {
        return Ok(out);
    };
    if out.q.is_constant() {
        return Ok(out);
    }
    let a = &(&omega.partial(Var::X2).partial(Var::X2) * &rho3.partial(Var::X1))
        - &(&omega.partial(Var::X1).partial(Var::X2) * &rho3.partial(Var::X2));
    out.b = homogenized_substitute(&a, &-&out.sr10, &out.sr1)?;
    if out.b.is_zero() {
        out.criterion_degenerate = true;
        return Ok(out);
    }
    let g = out.q.gcd(&out.b)?;
    if g == out.q {
        out.criterion_degenerate = true;
        return Ok(out);
    }
    out.q_app = out.q.exact_div(&g).expect("gcd divides q").monic();
    Ok(out)
}

pub fn apparent_abscissas(res: &ApparentResult) -> Vec<AlgebraicNumber> {
    isolate(&res.q_app).expect("q_app is square-free and nonzero")
}

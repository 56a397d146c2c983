//! Resultants and subresultants as determinants, specialized at integer
//! abscissas and recovered by interpolation.

use ccq_core::poly::{BiPoly, Rational, UniPoly};
use num_traits::{One, Zero};

/// Determinant by Gaussian elimination over Q.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut acc = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            acc = -acc;
        }
        let pivot = m[col][col].clone();
        acc *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &f * src;
            }
        }
    }
    acc
}

/// Newton interpolation through `(x_i, y_i)` with distinct `x_i`.
pub fn interpolate(points: &[(Rational, Rational)]) -> UniPoly {
    let n = points.len();
    let mut dd: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
        }
    }
    let mut acc = UniPoly::zero();
    for i in (0..n).rev() {
        let lin = UniPoly::from_coeffs(vec![-points[i].0.clone(), Rational::one()]);
        acc = &(&acc * &lin) + &UniPoly::constant(dd[i].clone());
    }
    acc
}

/// Coefficients of `f(a, x2)` in decreasing powers of `x2`, padded to the
/// formal degree `d`.
fn fiber_desc(f: &BiPoly, a: &Rational, d: usize) -> Vec<Rational> {
    let p = f.eval_x1(a);
    (0..=d).rev().map(|k| p.coeff(k)).collect()
}

/// Rows `x2^(k-1) f, ..., f` followed by `x2^(l-1) g, ..., g` over a fixed
/// number of columns, highest power first.
fn stacked_rows(f: &[Rational], k: usize, g: &[Rational], l: usize, cols: usize) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for (p, count) in [(f, k), (g, l)] {
        for shift in 0..count {
            let mut row = vec![Rational::zero(); cols];
            for (i, c) in p.iter().enumerate() {
                row[shift + i] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

fn degrees(f: &BiPoly, g: &BiPoly) -> (usize, usize, usize, usize) {
    let n = f.deg_x2().expect("nonzero f") as usize;
    let m = g.deg_x2().expect("nonzero g") as usize;
    let a = f.deg_x1().unwrap_or(0) as usize;
    let b = g.deg_x1().unwrap_or(0) as usize;
    (n, m, a, b)
}

fn sample_and_interpolate(bound: usize, mut at: impl FnMut(&Rational) -> Rational) -> UniPoly {
    let pts: Vec<(Rational, Rational)> = (0..=bound as i64)
        .map(|i| {
            let x = Rational::from_integer(i.into());
            let y = at(&x);
            (x, y)
        })
        .collect();
    interpolate(&pts)
}

/// `Res_x2(f, g)` as the Sylvester determinant with the rows of `f` first.
pub fn sylvester_resultant_x2(f: &BiPoly, g: &BiPoly) -> UniPoly {
    let (n, m, a, b) = degrees(f, g);
    sample_and_interpolate(m * a + n * b, |x| {
        let rows = stacked_rows(&fiber_desc(f, x, n), m, &fiber_desc(g, x, m), n, n + m);
        det(rows)
    })
}

/// `(sr1, sr10)` of the determinantal degree-1 subresultant of `(f, g)` with
/// respect to `x2`. Needs `deg_x2 f, deg_x2 g >= 1` and `deg f + deg g >= 3`.
pub fn determinantal_s1(f: &BiPoly, g: &BiPoly) -> (UniPoly, UniPoly) {
    let (n, m, a, b) = degrees(f, g);
    assert!(n >= 1 && m >= 1 && n + m >= 3, "S1 needs deg f + deg g >= 3");
    let cols = n + m - 1;
    let bound = (m - 1) * a + (n - 1) * b;
    let coeff = |power: usize| {
        sample_and_interpolate(bound, |x| {
            let rows = stacked_rows(&fiber_desc(f, x, n), m - 1, &fiber_desc(g, x, m), n - 1, cols);
            // leading n + m - 3 columns, then the column of x2^power
            let sq = rows
                .into_iter()
                .map(|r| {
                    let mut s: Vec<Rational> = r[..cols - 2].to_vec();
                    s.push(r[cols - 1 - power].clone());
                    s
                })
                .collect();
            det(sq)
        })
    };
    (coeff(1), coeff(0))
}

/// `p(x2, x1)`: exchanges the roles of the two variables.
pub fn swap_variables(p: &BiPoly) -> BiPoly {
    BiPoly::from_terms(p.terms().iter().map(|t| ccq_core::poly::Term {
        e1: t.e2,
        e2: t.e1,
        coeff: t.coeff.clone(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ccq_core::poly::int;

    #[test]
    fn small_determinants() {
        let m = vec![vec![int(2), int(1)], vec![int(4), int(3)]];
        assert_eq!(det(m), int(2));
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(det(m), int(-1));
    }

    #[test]
    fn interpolation_recovers_a_cubic() {
        let p = UniPoly::from_i64s(&[1, -2, 0, 3]);
        let pts: Vec<_> = (0..4).map(|i| (int(i), p.eval(&int(i)))).collect();
        assert_eq!(interpolate(&pts), p);
    }

    #[test]
    fn nodal_cubic_and_circle() {
        let nodal = BiPoly::from_i64_terms(&[(0, 2, 1), (3, 0, -1), (2, 0, -1)]);
        let dy = BiPoly::from_i64_terms(&[(0, 1, 2)]);
        assert_eq!(sylvester_resultant_x2(&nodal, &dy), UniPoly::from_i64s(&[0, 0, -4, -4]));
        let circle = BiPoly::from_i64_terms(&[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        assert_eq!(sylvester_resultant_x2(&circle, &dy), UniPoly::from_i64s(&[-4, 0, 4]));
        let (s1, s10) = determinantal_s1(&circle, &dy);
        assert_eq!((s1, s10), (UniPoly::from_i64s(&[2]), UniPoly::zero()));
    }
}

use ccq_core::poly::{first_subresultant_x2, resultant_x2, BiPoly, Rational, Term, UniPoly, Var};
use ccq_oracles::determinant::{determinantal_s1, sylvester_resultant_x2};
use proptest::prelude::*;

fn uni() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 1..7).prop_map(|c| UniPoly::from_i64s(&c))
}

fn nonzero_uni() -> impl Strategy<Value = UniPoly> {
    uni().prop_filter("nonzero", |p| !p.is_zero())
}

fn bi(max_deg: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, -9i64..=9), 1..10)
        .prop_map(|ts| {
            BiPoly::from_terms(ts.into_iter().map(|(e1, e2, c)| Term { e1, e2, coeff: Rational::from_integer(c.into()) }))
        })
        .prop_filter("depends on x2", |p| p.deg_x2().is_some_and(|d| d >= 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn division_reconstructs(a in uni(), b in nonzero_uni()) {
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in nonzero_uni(), b in nonzero_uni(), c in nonzero_uni()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc).unwrap();
        prop_assert!(g.divides(&ac) && g.divides(&bc));
        prop_assert!(c.divides(&g) || c.is_constant());
    }

    #[test]
    fn squarefree_part_is_squarefree(a in nonzero_uni(), b in nonzero_uni()) {
        let p = &(&a * &a) * &b;
        let s = p.squarefree_part().unwrap();
        prop_assert!(s.is_squarefree());
        prop_assert!(s.divides(&p));
        // every root of p is a root of s
        prop_assert!(a.squarefree_part().unwrap().divides(&s));
        prop_assert!(b.squarefree_part().unwrap().divides(&s));
    }

    #[test]
    fn resultant_is_the_sylvester_determinant(f in bi(3), g in bi(3)) {
        prop_assert_eq!(resultant_x2(&f, &g).unwrap(), sylvester_resultant_x2(&f, &g));
    }

    #[test]
    fn resultant_is_multiplicative(f in bi(2), g in bi(2), h in bi(2)) {
        let lhs = resultant_x2(&(&f * &g), &h).unwrap();
        let rhs = &resultant_x2(&f, &h).unwrap() * &resultant_x2(&g, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn first_subresultant_is_the_determinant(f in bi(3)) {
        prop_assume!(f.deg_x2().unwrap() >= 2);
        let fy = f.partial(Var::X2);
        let s = first_subresultant_x2(&f, &fy).unwrap();
        let (d1, d0) = determinantal_s1(&f, &fy);
        prop_assert!((s.sr1 == d1 && s.sr10 == d0) || (s.sr1 == -&d1 && s.sr10 == -&d0));
    }
}

#[test]
fn subresultant_examples_match_the_determinant() {
    let nodal = BiPoly::from_i64_terms(&[(0, 2, 1), (3, 0, -1), (2, 0, -1)]);
    let dy = BiPoly::from_i64_terms(&[(0, 1, 2)]);
    let s = first_subresultant_x2(&nodal, &dy).unwrap();
    assert_eq!((s.sr1.clone(), s.sr10.clone()), (UniPoly::from_i64s(&[2]), UniPoly::zero()));
    assert_eq!(determinantal_s1(&nodal, &dy), (s.sr1, s.sr10));

    let f = BiPoly::from_i64_terms(&[(0, 2, 1), (1, 0, -1)]);
    let g = BiPoly::from_i64_terms(&[(0, 1, 1), (0, 0, -1)]);
    let s = first_subresultant_x2(&f, &g).unwrap();
    let d = determinantal_s1(&f, &g);
    assert!((s.sr1 == d.0 && s.sr10 == d.1) || (s.sr1 == -&d.0 && s.sr10 == -&d.1));
}

mod common;

use common::*;
use phforge_core::arith::int;
use phforge_core::geometry::speed_function;
use phforge_core::hull::min_norm_point;
use phforge_core::sdp::min_eigenvalue;
use phforge_core::*;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (small(), small(), small(), small()).prop_map(|(w, x, y, z)| quat(w, x, y, z))
}

fn pure() -> impl Strategy<Value = Quaternion> {
    (small(), small(), small()).prop_map(|(x, y, z)| quat(0, x, y, z))
}

fn qpoly(max_deg: usize) -> impl Strategy<Value = QuaternionPolynomial> {
    prop::collection::vec(quaternion(), 1..=max_deg + 1)
        .prop_map(QuaternionPolynomial::new)
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn rpoly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small(), 1..=max_deg + 1).prop_map(|c| poly(&c))
}

fn gpoly(max_deg: usize) -> impl Strategy<Value = GaussianPolynomial> {
    prop::collection::vec((small(), small()), 1..=max_deg + 1)
        .prop_map(|c| {
            GaussianPolynomial::new(c.into_iter().map(|(a, b)| Gaussian::new(int(a), int(b))).collect())
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// (b, c) with b^2 < 4c
fn irreducible() -> impl Strategy<Value = (i64, i64)> {
    (-4i64..=4, 1i64..=12).prop_filter("irreducible", |(b, c)| b * b < 4 * c)
}

fn qfactor(b: i64, c: i64, m: u32) -> QuadraticFactor {
    QuadraticFactor::new(int(b), int(c), m).unwrap()
}

fn vector_eq(a: &VectorPolynomial, b: &VectorPolynomial) -> bool {
    a.iter().zip(b).all(|(x, y)| x == y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quaternion_product_is_associative(a in quaternion(), b in quaternion(), c in quaternion()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn quaternion_norm_is_multiplicative(a in quaternion(), b in quaternion()) {
        prop_assert_eq!((a.clone() * b.clone()).norm_sqr(), a.norm_sqr() * b.norm_sqr());
        prop_assert_eq!((a.clone() * b.clone()).conj(), b.conj() * a.conj());
    }

    #[test]
    fn conjugation_reverses_polynomial_products(a in qpoly(2), b in qpoly(2)) {
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        prop_assert_eq!((&a * &b).norm_poly(), &a.norm_poly() * &b.norm_poly());
    }

    #[test]
    fn rotation_scales_by_the_norm(a in qpoly(3), v in pure()) {
        let av = rotate_vector(&a, &v).unwrap();
        let lhs = av.iter().fold(Polynomial::zero(), |acc, p| &acc + &(p * p));
        let n = a.norm_poly();
        let rhs = (&n * &n).scale(&v.norm_sqr());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn i_reduction_is_idempotent(a in qpoly(2), r in gpoly(2)) {
        let a = &a * &QuaternionPolynomial::from_gaussian(&r);
        let red = i_reduce(&a).unwrap();
        let back = &red.reduced * &QuaternionPolynomial::from_gaussian(&red.right_factor);
        prop_assert_eq!(back, a);
        let again = i_reduce(&red.reduced).unwrap();
        prop_assert!(again.was_reduced());
        prop_assert_eq!(again.reduced, red.reduced);
    }

    #[test]
    fn tangent_ignores_right_factors_about_i(a in qpoly(2), r in gpoly(2)) {
        let ar = &a * &QuaternionPolynomial::from_gaussian(&r);
        let t = tangent_indicatrix(&a).unwrap();
        let tr = tangent_indicatrix(&ar).unwrap();
        for k in 0..3 {
            let x = RationalFunction::new(t.numerator()[k].clone(), t.denominator().clone());
            let y = RationalFunction::new(tr.numerator()[k].clone(), tr.denominator().clone());
            prop_assert_eq!(x, y);
        }
        let rn = QuaternionPolynomial::from_gaussian(&r).norm_poly();
        let scaled: VectorPolynomial = t.numerator().clone().map(|p| &p * &rn);
        prop_assert!(vector_eq(&scaled, tr.numerator()));
    }

    #[test]
    fn residues_are_linear(
        (b, c) in irreducible(),
        m in 1u32..=3,
        p1 in rpoly(5),
        p2 in rpoly(5),
        s in small(),
    ) {
        let q = qfactor(b, c, m);
        let den = &q.power() * &poly(&[3, 0, 1]);
        let f = RationalFunction::new(p1.clone(), den.clone());
        let g = RationalFunction::new(p2.clone(), den.clone());
        let sum = RationalFunction::new(&p1 + &p2.scale(&int(s)), den);
        let res = |h: &RationalFunction| match residue_at(h, &q) {
            Ok(r) => r,
            Err(Error::NotAFactor { .. }) => ExtensionElement::from_rational(int(0)),
            Err(e) => panic!("{e}"),
        };
        let (rf, rg, rs) = (res(&f), res(&g), res(&sum));
        prop_assert_eq!(rs.r0, rf.r0 + rg.r0 * int(s));
        prop_assert_eq!(rs.r1, rf.r1 + rg.r1 * int(s));
    }

    #[test]
    fn hermite_recovers_derivatives((b, c) in irreducible(), k in 1u32..=3, p in rpoly(6), w in rpoly(3)) {
        let den = &qfactor(b, c, k).power() * &poly(&[2, 0, 1]);
        let r = &RationalFunction::new(p, den) + &RationalFunction::from_poly(w);
        let f = r.derivative();
        let g = hermite_antiderivative(&f).unwrap();
        prop_assert_eq!(g.derivative(), f.clone());
        // the antiderivative differs from r by a constant
        prop_assert!((&g - &r).derivative().is_zero());
    }

    #[test]
    fn reparameterization_keeps_the_hodograph_pythagorean(
        a in 1i64..=4, bb in small(), c in 1i64..=4, d in small()
    ) {
        prop_assume!(a * d - bb * c != 0);
        let cv = speed_example_curve();
        let re = cv.reparameterize(&int(a), &int(bb), &int(c), &int(d)).unwrap();
        prop_assert!(speed_function(&re).is_ok());
    }
}

/// Builds `lead * prod (t - r_i) * prod (t^2 + b t + c)` and returns it with
/// its distinct real roots.
fn known_roots() -> impl Strategy<Value = (Polynomial, Vec<i64>)> {
    (
        prop::collection::btree_set(-9i64..=9, 0..=4),
        prop::collection::vec(irreducible(), 0..=2),
        1i64..=3,
        prop::bool::ANY,
        prop::bool::ANY,
    )
        .prop_filter("degree at most 8", |(r, q, _, _, _)| r.len() + 2 * q.len() <= 7)
        .prop_map(|(roots, quads, lead, neg, doubled)| {
            let mut p = poly(&[if neg { -lead } else { lead }]);
            for &r in &roots {
                p = &p * &poly(&[-r, 1]);
            }
            if doubled {
                if let Some(&r) = roots.iter().next() {
                    p = &p * &poly(&[-r, 1]);
                }
            }
            for (b, c) in quads {
                p = &p * &poly(&[c, b, 1]);
            }
            (p, roots.into_iter().collect())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sturm_counts_known_roots((p, roots) in known_roots(), lo in -10i64..=10, width in 0i64..=20) {
        let total = sturm_real_root_count(&p, &ExtendedReal::NegInfinity, &ExtendedReal::PosInfinity);
        prop_assert_eq!(total, roots.len());
        let hi = lo + width;
        let inside = roots.iter().filter(|&&r| lo < r && r <= hi).count();
        let got = sturm_real_root_count(&p, &ExtendedReal::Finite(int(lo)), &ExtendedReal::Finite(int(hi)));
        prop_assert_eq!(got, inside);
    }
}

fn residual(pts: &[[f64; 3]]) -> f64 {
    let (_, x) = min_norm_point(pts);
    x.iter().map(|c| c * c).sum::<f64>().sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn refining_samples_never_moves_the_hull_away(a in qpoly(3), n in 16usize..=64) {
        prop_assume!(a.degree().unwrap_or(0) >= 1);
        let t = tangent_indicatrix(&a).unwrap();
        let coarse = residual(&t.sample(n));
        let fine = residual(&t.sample(2 * n));
        prop_assert!(fine <= coarse + 1e-12, "{fine} > {coarse}");
        let c = convex_hull_contains_origin(&t, n, 1e-9);
        if c.verdict == HullVerdict::Contains {
            prop_assert_eq!(convex_hull_contains_origin(&t, 2 * n, 1e-9).verdict, HullVerdict::Contains);
        }
    }

    #[test]
    fn smallest_eigenvalue_is_concave_on_the_slice(
        x in prop::array::uniform3(-1.0f64..1.0),
        y in prop::array::uniform3(-1.0f64..1.0),
    ) {
        let space = build_residue_system(&problem(cubic(), 0, 4, 6));
        let slice = build_gram_slice(&space);
        let mid: Vec<f64> = x.iter().zip(&y).map(|(a, b)| 0.5 * (a + b)).collect();
        let lx = min_eigenvalue(&slice.matrix_f64(&x));
        let ly = min_eigenvalue(&slice.matrix_f64(&y));
        let lm = min_eigenvalue(&slice.matrix_f64(&mid));
        prop_assert!(lm >= 0.5 * (lx + ly) - 1e-9);
    }
}

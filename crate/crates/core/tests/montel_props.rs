mod common;

use common::*;
use frechet::genpoly::GeneralizedPoly;
use frechet::montel::{graph_slice, montel_check, orbit_classify, popoviciu_polynomial, rational_refinement_check};
use frechet::polyalg::shear_compose;
use proptest::prelude::*;

fn nonzero_factor() -> impl Strategy<Value = i64> {
    prop_oneof![-5i64..=-1, 1i64..=5]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generalized_polys_refine(g in genpoly(&q2(), 3), x0 in element(&q2(), 3, 2), p in nonzero_factor(), q in nonzero_factor()) {
        let f = q2();
        let m = g.degree();
        let check = rational_refinement_check(&g, &x0, &int(&f, 1), &root(&f, 2), m, p, q).unwrap();
        prop_assert!(check.is_ok(), "{:?}", check);
    }

    #[test]
    fn orbits_of_solutions_extend(g in genpoly(&q2(), 3), x0 in element(&q2(), 3, 2), h1 in nonzero_element(&q2(), 3, 2), h2 in nonzero_element(&q2(), 3, 2)) {
        let m = g.degree();
        let report = orbit_classify(&g, &x0, &h1, &h2, m, 4).unwrap();
        prop_assert!(report.extension_ok);
        prop_assert!(report.n <= m);
        prop_assert_eq!(shear_compose(&report.shear), report.p.clone());
    }

    #[test]
    fn classification_dichotomy(a in additive(&q2()), k in 1usize..=3, x0 in element(&q2(), 3, 2)) {
        let f = q2();
        let g = GeneralizedPoly::additive_power(&a, k).unwrap();
        let report = orbit_classify(&g, &x0, &int(&f, 1), &root(&f, 2), k, 3).unwrap();
        let scaled_images_agree = !a.is_discontinuous();
        let both_zero = a.eval(&int(&f, 1)).unwrap().is_zero() && a.eval(&root(&f, 2)).unwrap().is_zero();
        if scaled_images_agree {
            prop_assert_eq!(report.n, 0);
        } else {
            prop_assert!(!both_zero);
            prop_assert_eq!(report.n, k);
            prop_assert!(report.is_witness());
        }
    }

    #[test]
    fn ordinary_polys_classify_as_ordinary(p in poly(&q2(), 3), x0 in element(&q2(), 3, 2), h1 in nonzero_element(&q2(), 3, 2), h2 in nonzero_element(&q2(), 3, 2), t in element(&q2(), 5, 3)) {
        let m = p.degree().unwrap_or(0).max(1);
        let report = orbit_classify(&p, &x0, &h1, &h2, m, 3).unwrap();
        prop_assert_eq!(report.n, 0);
        // A_0(t) = p(x0 + t)
        prop_assert_eq!(report.shear.component(0).eval(&t).unwrap(), p.eval(&(&x0 + &t)).unwrap());
        let slice = graph_slice(&report, &t).unwrap();
        prop_assert!(slice.is_constant());
    }

    #[test]
    fn interpolant_reproduces_samples(g in genpoly(&q2(), 2), x0 in element(&q2(), 3, 2), h1 in nonzero_element(&q2(), 3, 2), h2 in nonzero_element(&q2(), 3, 2)) {
        let m = g.degree();
        let p = popoviciu_polynomial(&g, &x0, &h1, &h2, m).unwrap();
        for i in 0..=m as i64 {
            for j in 0..=m as i64 {
                let (s, t) = (h1.scale(&frechet::exactnum::integer(i)), h2.scale(&frechet::exactnum::integer(j)));
                prop_assert_eq!(p.eval(&s, &t).unwrap(), g.eval(&(&(&x0 + &s) + &t)).unwrap());
            }
        }
    }

    #[test]
    fn montel_agrees_with_degree(g in genpoly(&q2(), 3), xs in prop::collection::vec(element(&q2(), 5, 3), 1..5), h1 in nonzero_element(&q2(), 3, 2), h2 in nonzero_element(&q2(), 3, 2)) {
        prop_assert!(montel_check(&g, &h1, &h2, g.degree(), &xs).unwrap().holds());
    }
}

mod common;

use common::*;
use frechet::genpoly::{
    coverage_metric, fixed_step_check, frechet_check_genpoly, BoxRegion, CloudPoint, GeneralizedPoly, PointCloud,
    SymmetricTensor,
};
use frechet::exactnum::rational;
use frechet::{FieldElement, Rational};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn additive_maps_are_rational_linear(a in additive(&q23()), x in element(&q23(), 9, 5), y in element(&q23(), 9, 5), r in small_rational(9, 5)) {
        prop_assert_eq!(a.eval(&(&x + &y)).unwrap(), &a.eval(&x).unwrap() + &a.eval(&y).unwrap());
        prop_assert_eq!(a.eval(&x.scale(&r)).unwrap(), a.eval(&x).unwrap().scale(&r));
    }

    #[test]
    fn discontinuity_means_unequal_ratios(a in additive(&q2())) {
        let f = q2();
        let linear = a.eval(&root(&f, 2)).unwrap() == &a.eval(&int(&f, 1)).unwrap() * &root(&f, 2);
        prop_assert_eq!(a.is_discontinuous(), !linear);
    }

    #[test]
    fn powers_diagonalize(a in additive(&q23()), k in 1usize..=4, x in element(&q23(), 5, 3), r in small_rational(5, 3)) {
        let t = SymmetricTensor::additive_power(&a, k).unwrap();
        let ax = a.eval(&x).unwrap();
        prop_assert_eq!(t.diagonal(&x).unwrap(), ax.pow(k as u32));
        prop_assert_eq!(t.multi_eval(&vec![x.clone(); k]).unwrap(), t.diagonal(&x).unwrap());
        let scaled = t.diagonal(&x.scale(&r)).unwrap();
        prop_assert_eq!(scaled, t.diagonal(&x).unwrap().scale(&num_traits::pow(r, k)));
    }

    #[test]
    fn multi_eval_is_symmetric_and_additive(a in additive(&q2()), b in additive(&q2()), xs in prop::collection::vec(element(&q2(), 5, 3), 3), z in element(&q2(), 5, 3)) {
        let t = SymmetricTensor::product_of(&[a.clone(), b.clone()]).unwrap();
        let (x, y) = (&xs[0], &xs[1]);
        let v = t.multi_eval(&[x.clone(), y.clone()]).unwrap();
        prop_assert_eq!(&v, &t.multi_eval(&[y.clone(), x.clone()]).unwrap());
        let sum = t.multi_eval(&[x + &z, y.clone()]).unwrap();
        prop_assert_eq!(sum, &v + &t.multi_eval(&[z.clone(), y.clone()]).unwrap());
        // (a·b)(x) symmetrized: (a(x)b(y) + a(y)b(x)) / 2
        let expected = (&(&a.eval(x).unwrap() * &b.eval(y).unwrap()) + &(&a.eval(y).unwrap() * &b.eval(x).unwrap()))
            .scale(&rational(1, 2));
        prop_assert_eq!(v, expected);
    }

    #[test]
    fn generalized_polys_satisfy_their_degree(g in genpoly(&q23(), 3), trials in prop::collection::vec((element(&q23(), 5, 3), element(&q23(), 5, 3)), 1..6)) {
        prop_assert!(frechet_check_genpoly(&g, g.degree(), &trials).unwrap().holds());
        prop_assert!(fixed_step_check(&g, g.degree() + 1, &trials).unwrap().holds());
    }

    #[test]
    fn unipolys_embed(p in poly(&q2(), 4), x in element(&q2(), 5, 3)) {
        let g = GeneralizedPoly::from_unipoly(&p).unwrap();
        prop_assert_eq!(g.eval(&x).unwrap(), p.eval(&x).unwrap());
    }

    #[test]
    fn coverage_grows_with_eps(points in prop::collection::vec((small_rational(12, 6), small_rational(12, 6)), 0..30), e1 in 1i64..10, e2 in 1i64..10, grid in 1usize..6) {
        let f = q2();
        let cloud = PointCloud::from_points(
            &f,
            points.into_iter().map(|(x, y)| CloudPoint::new(FieldElement::from_rational(&f, x), FieldElement::from_rational(&f, y))).collect(),
        ).unwrap();
        let region = BoxRegion::new(vec![int(&f, 0), int(&f, -1)], vec![int(&f, 1), int(&f, 1)]).unwrap();
        let (small, large) = (e1.min(e2), e1.max(e2));
        let a = coverage_metric(&cloud, &region, &rational(small, 20), grid).unwrap();
        let b = coverage_metric(&cloud, &region, &rational(large, 20), grid).unwrap();
        prop_assert!(a.covered_fraction <= b.covered_fraction);
        prop_assert!(b.covered_fraction <= Rational::from_integer(1.into()));
    }

    #[test]
    fn coverage_grows_with_points(points in prop::collection::vec((small_rational(12, 6), small_rational(12, 6)), 1..30), keep in 0usize..30) {
        let f = q2();
        let all: Vec<_> = points.into_iter().map(|(x, y)| CloudPoint::new(FieldElement::from_rational(&f, x), FieldElement::from_rational(&f, y))).collect();
        let some = all[..keep.min(all.len())].to_vec();
        let region = BoxRegion::new(vec![int(&f, -1), int(&f, -1)], vec![int(&f, 1), int(&f, 1)]).unwrap();
        let eps = rational(1, 8);
        let a = coverage_metric(&PointCloud::from_points(&f, some).unwrap(), &region, &eps, 4).unwrap();
        let b = coverage_metric(&PointCloud::from_points(&f, all).unwrap(), &region, &eps, 4).unwrap();
        prop_assert!(a.covered_fraction <= b.covered_fraction);
    }
}

mod common;

use common::*;
use frechet::polyalg::{
    coboundary, lagrange_tensor, recover_from_cocycle, root_bound, shear_compose, shear_decompose, BiPoly, UniPoly,
};
use frechet::FieldElement;
use proptest::prelude::*;

fn bipoly(m: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(prop::collection::vec(element(&q2(), 5, 3), m + 1), m + 1)
        .prop_map(move |c| BiPoly::new(&q2(), m, c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shear_round_trip(p in (0usize..=3).prop_flat_map(bipoly), x in element(&q2(), 5, 3), y in element(&q2(), 5, 3)) {
        let form = shear_decompose(&p);
        prop_assert_eq!(shear_compose(&form), p.clone());
        // P(x, y) = Σ A_i(x + y)·xⁱ
        let u = &x + &y;
        let mut acc = FieldElement::zero(&q2());
        for (i, a) in form.components().iter().enumerate() {
            acc = &acc + &(&a.eval(&u).unwrap() * &x.pow(i as u32));
        }
        prop_assert_eq!(acc, p.eval(&x, &y).unwrap());
    }

    #[test]
    fn cocycles_recover_their_source(tail in prop::collection::vec(element(&q2(), 5, 3), 0..=4), c in nonzero_element(&q2(), 5, 3)) {
        let f = q2();
        let mut coeffs = vec![FieldElement::zero(&f); 2];
        coeffs.extend(tail);
        let r = UniPoly::new(&f, coeffs).unwrap();
        let q = coboundary(&r);
        prop_assert!(q.is_symmetric());
        prop_assert_eq!(recover_from_cocycle(&q).unwrap(), r.clone());
        // a linear term is invisible, a constant one leaves Q(x, 0) = -c
        let linear = r.add(&UniPoly::monomial(c.clone(), 1));
        prop_assert_eq!(coboundary(&linear), q.clone());
        let shifted = r.add(&UniPoly::constant(c));
        prop_assert!(recover_from_cocycle(&coboundary(&shifted)).is_err());
    }

    #[test]
    fn interpolation_hits_nodes(m in 0usize..=3, values in prop::collection::vec(element(&q2(), 9, 5), 16), h1 in nonzero_element(&q2(), 3, 2), h2 in nonzero_element(&q2(), 3, 2)) {
        let samples: Vec<Vec<_>> = (0..=m).map(|i| values[i * (m + 1)..(i + 1) * (m + 1)].to_vec()).collect();
        let p = lagrange_tensor(&samples, &h1, &h2, m).unwrap();
        for (i, row) in samples.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let s = h1.scale(&frechet::exactnum::integer(i as i64));
                let t = h2.scale(&frechet::exactnum::integer(j as i64));
                prop_assert_eq!(&p.eval(&s, &t).unwrap(), v);
            }
        }
    }

    #[test]
    fn anti_diagonal_matches_evaluation(p in (0usize..=3).prop_flat_map(bipoly), alpha in element(&q2(), 5, 3), x in element(&q2(), 5, 3)) {
        let slice = p.anti_diagonal_slice(&alpha);
        prop_assert_eq!(slice.eval(&x).unwrap(), p.eval(&x, &(&alpha - &x)).unwrap());
    }

    #[test]
    fn root_bound_dominates_roots(roots in prop::collection::vec(small_rational(20, 6), 1..=5), lead in nonzero_rational(5, 3)) {
        let f = q2();
        let mut p = UniPoly::constant(FieldElement::from_rational(&f, lead));
        for r in &roots {
            p = p.mul(&UniPoly::new(&f, vec![FieldElement::from_rational(&f, -r.clone()), int(&f, 1)]).unwrap());
        }
        let bound = root_bound(&p).unwrap();
        for r in roots {
            prop_assert!(FieldElement::from_rational(&f, r).abs().cmp_value(&bound).is_le());
        }
    }
}

mod common;

use common::*;
use frechet::diffcalc::{
    delta_multi_eval, delta_power_eval, djokovic_verify, frechet_eval, signsum_eval, FunctionHandle, TableFunction,
};
use frechet::exactnum::integer;
use frechet::polyalg::UniPoly;
use frechet::FieldElement;
use proptest::prelude::*;

fn steps_strategy(max: usize) -> impl Strategy<Value = Vec<FieldElement>> {
    prop::collection::vec(element(&q23(), 4, 3), 1..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursion_matches_sign_sum(p in poly(&q23(), 5), steps in steps_strategy(5), x in element(&q23(), 5, 3)) {
        prop_assert_eq!(delta_multi_eval(&p, &steps, &x).unwrap(), signsum_eval(&p, &steps, &x).unwrap());
    }

    #[test]
    fn generalized_polys_too(g in genpoly(&q23(), 3), steps in steps_strategy(4), x in element(&q23(), 5, 3)) {
        let f = FunctionHandle::from(g);
        prop_assert_eq!(delta_multi_eval(&f, &steps, &x).unwrap(), signsum_eval(&f, &steps, &x).unwrap());
    }

    #[test]
    fn step_order_is_irrelevant(p in poly(&q23(), 4), mut steps in steps_strategy(4), x in element(&q23(), 5, 3)) {
        let before = delta_multi_eval(&p, &steps, &x).unwrap();
        steps.reverse();
        prop_assert_eq!(delta_multi_eval(&p, &steps, &x).unwrap(), before);
    }

    #[test]
    fn binomial_form_for_equal_steps(p in poly(&q2(), 6), h in element(&q2(), 5, 3), s in 0usize..=6, x in element(&q2(), 5, 3)) {
        let steps = vec![h.clone(); s];
        prop_assert_eq!(delta_power_eval(&p, &h, s as i64, &x).unwrap(), delta_multi_eval(&p, &steps, &x).unwrap());
    }

    #[test]
    fn differences_are_linear(p in poly(&q2(), 4), r in poly(&q2(), 4), steps in prop::collection::vec(element(&q2(), 4, 3), 1..=3), x in element(&q2(), 5, 3)) {
        let sum = delta_multi_eval(&p.add(&r), &steps, &x).unwrap();
        let parts = &delta_multi_eval(&p, &steps, &x).unwrap() + &delta_multi_eval(&r, &steps, &x).unwrap();
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn frechet_operator_polarizes(m in 0usize..=4, xs in prop::collection::vec(element(&q2(), 5, 3), 5)) {
        let f = q2();
        let xs = &xs[..=m];
        let power = UniPoly::monomial(FieldElement::one(&f), m + 1);
        let factorial: i64 = (1..=(m as i64 + 1)).product();
        let product = xs.iter().fold(FieldElement::one(&f), |acc, x| &acc * x).scale(&integer(factorial));
        prop_assert_eq!(frechet_eval(&power, m, xs).unwrap(), product);
        let lower = UniPoly::monomial(FieldElement::one(&f), m);
        prop_assert!(frechet_eval(&lower, m, xs).unwrap().is_zero());
    }

    #[test]
    fn djokovic_holds_on_polynomials(p in poly(&q23(), 5), steps in steps_strategy(4), x in element(&q23(), 5, 3)) {
        let check = djokovic_verify(&p, &steps, &x).unwrap();
        prop_assert!(check.holds);
        prop_assert_eq!(&check.lhs, &delta_multi_eval(&p, &steps, &x).unwrap());
    }

    #[test]
    fn tables_agree_with_what_they_tabulate(p in poly(&q2(), 3), steps in prop::collection::vec(element(&q2(), 4, 3), 1..=3), x in element(&q2(), 5, 3)) {
        let f = q2();
        let mut points = Vec::new();
        for mask in 0u32..(1 << steps.len()) {
            let mut at = x.clone();
            for (r, h) in steps.iter().enumerate() {
                if mask & (1 << r) != 0 {
                    at = &at + h;
                }
            }
            points.push(at);
        }
        let table = TableFunction::tabulate(&f, points, |y| p.eval(y)).unwrap();
        prop_assert_eq!(signsum_eval(&table, &steps, &x).unwrap(), signsum_eval(&p, &steps, &x).unwrap());
    }
}

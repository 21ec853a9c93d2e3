mod common;

use common::*;
use frechet::exactnum::{format_rational, parse_rational};
use frechet::wire::{element_from_wire, element_to_wire};
use frechet::{FieldElement, Sign};
use proptest::prelude::*;

proptest! {
    #[test]
    fn ring_laws(a in element(&q23(), 9, 5), b in element(&q23(), 9, 5), c in element(&q23(), 9, 5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn inverses(a in nonzero_element(&q23(), 9, 5)) {
        let inv = a.inv().unwrap();
        prop_assert_eq!(&a * &inv, FieldElement::one(&q23()));
        prop_assert_eq!(a.checked_div(&a).unwrap(), FieldElement::one(&q23()));
    }

    #[test]
    fn sign_agrees_with_floating_point(a in element(&q23(), 50, 7)) {
        let approx = a.to_f64();
        match a.sign() {
            Sign::Zero => prop_assert!(a.is_zero()),
            Sign::Positive => prop_assert!(approx > -1e-9),
            Sign::Negative => prop_assert!(approx < 1e-9),
        }
        prop_assert_eq!((-&a).sign(), a.sign().times(Sign::Negative));
        prop_assert_ne!(a.abs().sign(), Sign::Negative);
    }

    #[test]
    fn sign_is_multiplicative(a in element(&q23(), 9, 5), b in element(&q23(), 9, 5)) {
        prop_assert_eq!((&a * &b).sign(), a.sign().times(b.sign()));
    }

    #[test]
    fn enclosures_contain_the_value(a in element(&q23(), 30, 7), precision in 1u32..40) {
        let (lo, hi) = a.enclosure(precision);
        let f = q23();
        prop_assert!(FieldElement::from_rational(&f, lo).cmp_value(&a).is_le());
        prop_assert!(a.cmp_value(&FieldElement::from_rational(&f, hi)).is_le());
    }

    #[test]
    fn order_is_total(a in element(&q2(), 9, 5), b in element(&q2(), 9, 5)) {
        prop_assert_eq!(a.cmp_value(&b), b.cmp_value(&a).reverse());
        prop_assert_eq!(a.cmp_value(&b), (&a - &b).sign().as_i8().cmp(&0));
    }

    #[test]
    fn wire_round_trip(a in element(&q23(), 99, 50)) {
        prop_assert_eq!(element_from_wire(&q23(), &element_to_wire(&a)).unwrap(), a);
    }

    #[test]
    fn rational_text_round_trip(r in small_rational(1_000_000, 1000)) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
}

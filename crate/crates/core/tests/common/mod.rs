#![allow(dead_code)]

use frechet::exactnum::rational;
use frechet::genpoly::{AdditiveMap, GeneralizedPoly};
use frechet::polyalg::UniPoly;
use frechet::{FieldElement, RadicalField, Rational};
use proptest::prelude::*;

pub fn q2() -> RadicalField {
    RadicalField::new(&[2]).unwrap()
}

pub fn q23() -> RadicalField {
    RadicalField::new(&[2, 3]).unwrap()
}

pub fn int(f: &RadicalField, n: i64) -> FieldElement {
    FieldElement::from_integer(f, n)
}

pub fn root(f: &RadicalField, b: u64) -> FieldElement {
    FieldElement::basis_vector(f, b).unwrap()
}

pub fn small_rational(num: i64, den: i64) -> impl Strategy<Value = Rational> {
    (-num..=num, 1..=den).prop_map(|(n, d)| rational(n, d))
}

pub fn nonzero_rational(num: i64, den: i64) -> impl Strategy<Value = Rational> {
    (1..=num, 1..=den, any::<bool>()).prop_map(|(n, d, neg)| rational(if neg { -n } else { n }, d))
}

pub fn element(f: &RadicalField, num: i64, den: i64) -> impl Strategy<Value = FieldElement> {
    let f = f.clone();
    prop::collection::vec(small_rational(num, den), f.dimension()).prop_map(move |coords| {
        FieldElement::from_coords(&f, f.basis().iter().copied().zip(coords)).unwrap()
    })
}

pub fn nonzero_element(f: &RadicalField, num: i64, den: i64) -> impl Strategy<Value = FieldElement> {
    element(f, num, den).prop_filter("nonzero", |x| !x.is_zero())
}

pub fn poly(f: &RadicalField, max_degree: usize) -> impl Strategy<Value = UniPoly> {
    let f = f.clone();
    prop::collection::vec(element(&f, 5, 3), 1..=max_degree + 1).prop_map(move |c| UniPoly::new(&f, c).unwrap())
}

pub fn additive(f: &RadicalField) -> impl Strategy<Value = AdditiveMap> {
    let f = f.clone();
    prop::collection::vec(element(&f, 4, 3), f.dimension()).prop_map(move |images| {
        let images = f.basis().iter().copied().zip(images).collect();
        AdditiveMap::new(&f, &images).unwrap()
    })
}

/// `c + a(x)^k` for a random additive `a`.
pub fn genpoly(f: &RadicalField, max_degree: usize) -> impl Strategy<Value = GeneralizedPoly> {
    (additive(f), 1..=max_degree, element(f, 3, 2)).prop_map(|(a, k, c)| {
        let g = GeneralizedPoly::additive_power(&a, k).unwrap();
        GeneralizedPoly::new(c, g.forms().to_vec()).unwrap()
    })
}

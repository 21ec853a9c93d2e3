//! Random exact values for trial sampling.

use num_bigint::BigInt;
use rand::Rng;

use crate::exactnum::{FieldElement, RadicalField, Rational};

/// Uniform rational `n/d` with `|n| <= num_bound`, `1 <= d <= den_bound`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, num_bound: i64, den_bound: i64) -> Rational {
    let n = rng.gen_range(-num_bound..=num_bound);
    let d = rng.gen_range(1..=den_bound.max(1));
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element with independent random rational coordinates on every basis
/// vector.
pub fn random_element<R: Rng + ?Sized>(field: &RadicalField, rng: &mut R, num_bound: i64, den_bound: i64) -> FieldElement {
    let coords = field
        .basis()
        .iter()
        .map(|&b| (b, random_rational(rng, num_bound, den_bound)))
        .collect::<Vec<_>>();
    FieldElement::from_coords(field, coords).expect("basis indices come from the field")
}

pub fn random_nonzero_element<R: Rng + ?Sized>(
    field: &RadicalField,
    rng: &mut R,
    num_bound: i64,
    den_bound: i64,
) -> FieldElement {
    loop {
        let x = random_element(field, rng, num_bound.max(1), den_bound);
        if !x.is_zero() {
            return x;
        }
    }
}

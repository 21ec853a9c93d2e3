use super::{binomial, shear_compose, BiPoly, ShearForm, UniPoly};
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Rational};

/// `R(x + y) − R(x) − R(y)` as a bivariate polynomial.
pub fn coboundary(r: &UniPoly) -> BiPoly {
    let field = r.field();
    let m = r.degree().unwrap_or(0);
    let sum = shear_compose(&ShearForm::new(field, m, vec![r.clone()]));
    let mut terms: Vec<_> = sum.terms().collect();
    for (k, c) in r.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        terms.push((k, 0, -c));
        terms.push((0, k, -c));
    }
    BiPoly::from_terms(field, m, terms).expect("degrees bounded by deg R")
}

/// Finds `R` without constant or linear term such that
/// `Q(x, y) = R(x + y) − R(x) − R(y)`.
///
/// Works one homogeneous degree `i` at a time: the degree-`i` part of `Q`
/// must equal `A_i·((x+y)ⁱ − xⁱ − yⁱ)`, so `A_i` is read off the `x·y^{i−1}`
/// coefficient and every other coefficient is checked against it.
pub fn recover_from_cocycle(q: &BiPoly) -> Result<UniPoly> {
    let field = q.field().clone();
    let m = q.bound();
    for t in 0..=m {
        for s in 0..t {
            if q.coeff(t, s) != q.coeff(s, t) {
                return Err(Error::NotSymmetric { t, s });
            }
        }
    }
    for t in 0..=m {
        let c = q.coeff(t, 0);
        if !c.is_zero() {
            return Err(Error::NotCoboundary(format!(
                "Q(x,0) must vanish but the coefficient of x^{t} is {c}"
            )));
        }
    }

    let mut coeffs = vec![FieldElement::zero(&field); 2 * m + 1];
    for degree in 2..=2 * m {
        let a = q.coeff(1, degree - 1).scale(&Rational::new(1.into(), (degree as i64).into()));
        for t in 1..degree {
            let expected = a.scale(&binomial(degree, t));
            let actual = q.coeff(t, degree - t);
            if actual != expected {
                return Err(Error::NotCoboundary(format!(
                    "coefficient of x^{t} y^{} is {actual}, expected C({degree},{t})·A_{degree} = {expected}",
                    degree - t
                )));
            }
        }
        coeffs[degree] = a;
    }
    UniPoly::new(&field, coeffs)
}

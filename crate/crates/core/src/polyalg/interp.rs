use super::{BiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::exactnum::FieldElement;

/// Lagrange basis polynomials `L_i` for distinct `nodes`, with
/// `L_i(nodes[k]) = δ_ik`.
pub fn lagrange_basis(nodes: &[FieldElement]) -> Result<Vec<UniPoly>> {
    let Some(first) = nodes.first() else {
        return Ok(Vec::new());
    };
    let field = first.field().clone();
    let one = FieldElement::one(&field);
    let mut basis = Vec::with_capacity(nodes.len());
    for (i, xi) in nodes.iter().enumerate() {
        let mut numer = UniPoly::constant(one.clone());
        let mut denom = one.clone();
        for (k, xk) in nodes.iter().enumerate() {
            if k == i {
                continue;
            }
            numer = numer.mul(&UniPoly::new(&field, vec![-xk, one.clone()])?);
            denom = &denom * &xi.checked_sub(xk)?;
        }
        let inv = denom.inv().map_err(|_| Error::Invalid("interpolation nodes must be distinct".into()))?;
        basis.push(numer.scale(&inv));
    }
    Ok(basis)
}

fn step_nodes(h: &FieldElement, m: usize) -> Vec<FieldElement> {
    (0..=m)
        .map(|i| FieldElement::from_integer(h.field(), i as i64) * h)
        .collect()
}

/// The unique `P` of degree `<= m` in each variable with
/// `P(i·h1, j·h2) = samples[i][j]` for `0 <= i, j <= m`.
pub fn lagrange_tensor(samples: &[Vec<FieldElement>], h1: &FieldElement, h2: &FieldElement, m: usize) -> Result<BiPoly> {
    if h1.is_zero() || h2.is_zero() {
        return Err(Error::ZeroStep);
    }
    h1.field().check_same(h2.field())?;
    if samples.len() != m + 1 || samples.iter().any(|row| row.len() != m + 1) {
        return Err(Error::Shape(format!("sample matrix must be {0}×{0}", m + 1)));
    }
    let field = h1.field().clone();
    for v in samples.iter().flatten() {
        field.check_same(v.field())?;
    }
    let lx = lagrange_basis(&step_nodes(h1, m))?;
    let ly = lagrange_basis(&step_nodes(h2, m))?;

    // partial[i][s] = Σ_j samples[i][j]·ly_j[s]
    let partial: Vec<Vec<FieldElement>> = samples
        .iter()
        .map(|row| {
            (0..=m)
                .map(|s| {
                    row.iter()
                        .zip(&ly)
                        .fold(FieldElement::zero(&field), |acc, (v, l)| &acc + &(v * &l.coeff(s)))
                })
                .collect()
        })
        .collect();

    let mut coeffs = vec![vec![FieldElement::zero(&field); m + 1]; m + 1];
    for (t, row) in coeffs.iter_mut().enumerate() {
        for (s, slot) in row.iter_mut().enumerate() {
            *slot = partial
                .iter()
                .zip(&lx)
                .fold(FieldElement::zero(&field), |acc, (p, l)| &acc + &(&l.coeff(t) * &p[s]));
        }
    }
    BiPoly::new(&field, m, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::RadicalField;

    fn setup() -> (RadicalField, FieldElement, FieldElement) {
        let f = RadicalField::new(&[2]).unwrap();
        let one = FieldElement::one(&f);
        let s2 = FieldElement::basis_vector(&f, 2).unwrap();
        (f, one, s2)
    }

    fn int(f: &RadicalField, v: i64) -> FieldElement {
        FieldElement::from_integer(f, v)
    }

    #[test]
    fn constant_table() {
        let (f, one, s2) = setup();
        let c = int(&f, 7);
        let p = lagrange_tensor(&[vec![c.clone()]], &one, &s2, 0).unwrap();
        assert_eq!(p, BiPoly::from_terms(&f, 0, [(0, 0, c)]).unwrap());
    }

    #[test]
    fn square_of_sum() {
        let (f, one, s2) = setup();
        let samples: Vec<Vec<_>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let x = &int(&f, i) + &(&int(&f, j) * &s2);
                        &x * &x
                    })
                    .collect()
            })
            .collect();
        let p = lagrange_tensor(&samples, &one, &s2, 2).unwrap();
        let expected = BiPoly::from_terms(&f, 2, [(2, 0, one.clone()), (1, 1, int(&f, 2)), (0, 2, one.clone())]).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn y_independent_table() {
        let (f, one, s2) = setup();
        let samples: Vec<Vec<_>> = (0..3).map(|i| vec![int(&f, i * i); 3]).collect();
        let p = lagrange_tensor(&samples, &one, &s2, 2).unwrap();
        assert_eq!(p, BiPoly::from_terms(&f, 2, [(2, 0, one)]).unwrap());
    }

    #[test]
    fn rejects_zero_step_and_bad_shape() {
        let (f, one, _) = setup();
        let zero = FieldElement::zero(&f);
        assert_eq!(lagrange_tensor(&[vec![one.clone()]], &zero, &one, 0), Err(Error::ZeroStep));
        assert!(matches!(lagrange_tensor(&[vec![one.clone()]], &one, &one, 1), Err(Error::Shape(_))));
    }
}

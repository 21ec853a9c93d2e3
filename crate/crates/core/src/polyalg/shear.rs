use super::{binomial, BiPoly, UniPoly};
use crate::exactnum::{FieldElement, RadicalField};

/// `P(x, y) = Σ_{i=0}^{2m} A_i(x + y)·xⁱ` with every `A_i` of degree `<= m`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShearForm {
    field: RadicalField,
    m: usize,
    components: Vec<UniPoly>,
}

impl ShearForm {
    /// `components[i]` is `A_i`; missing trailing components are zero.
    pub fn new(field: &RadicalField, m: usize, mut components: Vec<UniPoly>) -> Self {
        components.resize(2 * m + 1, UniPoly::zero(field));
        ShearForm {
            field: field.clone(),
            m,
            components,
        }
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    pub fn bound(&self) -> usize {
        self.m
    }

    pub fn components(&self) -> &[UniPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> UniPoly {
        self.components.get(i).cloned().unwrap_or_else(|| UniPoly::zero(&self.field))
    }

    /// Largest `i` with `A_i ≠ 0`, or 0 when every component vanishes.
    pub fn leading_index(&self) -> usize {
        self.components.iter().rposition(|a| !a.is_zero()).unwrap_or(0)
    }

    /// `A_N` for the leading index `N`.
    pub fn leading_component(&self) -> UniPoly {
        self.component(self.leading_index())
    }
}

/// Rewrites `P` in the sheared variables `(x, u) = (x, x + y)`.
///
/// Each term `c·xᵗyˢ` becomes `c·xᵗ(u − x)ˢ = Σ_j c·C(s,j)(−1)^{s−j} uʲ x^{t+s−j}`,
/// contributing to `A_{t+s−j}` at degree `j`.
pub fn shear_decompose(p: &BiPoly) -> ShearForm {
    let field = p.field().clone();
    let m = p.bound();
    let mut table = vec![vec![FieldElement::zero(&field); m + 1]; 2 * m + 1];
    for (t, s, c) in p.terms() {
        for j in 0..=s {
            let mut w = binomial(s, j);
            if (s - j) % 2 == 1 {
                w = -w;
            }
            let i = t + s - j;
            table[i][j] = &table[i][j] + &c.scale(&w);
        }
    }
    let components = table
        .into_iter()
        .map(|coeffs| UniPoly::new(&field, coeffs).expect("coefficients share the field"))
        .collect();
    ShearForm::new(&field, m, components)
}

/// Expands `Σ A_i(x + y)·xⁱ` back into monomials. The result's degree
/// bound is the larger of the form's bound and the actual degrees.
pub fn shear_compose(form: &ShearForm) -> BiPoly {
    let field = form.field().clone();
    let mut terms = Vec::new();
    for (i, a) in form.components().iter().enumerate() {
        for (k, c) in a.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c·(x+y)^k·x^i
            for j in 0..=k {
                terms.push((i + j, k - j, c.scale(&binomial(k, j))));
            }
        }
    }
    let needed = terms.iter().map(|&(t, s, _)| t.max(s)).max().unwrap_or(0);
    BiPoly::from_terms(&field, form.bound().max(needed), terms).expect("bound covers every term")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> RadicalField {
        RadicalField::new(&[2]).unwrap()
    }

    fn int(v: i64) -> FieldElement {
        FieldElement::from_integer(&f(), v)
    }

    fn bi(terms: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_terms(&f(), 2, terms.iter().map(|&(t, s, c)| (t, s, int(c)))).unwrap()
    }

    #[test]
    fn square_of_sum_is_pure_a0() {
        let form = shear_decompose(&bi(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)]));
        assert_eq!(form.component(0), UniPoly::from_integers(&f(), &[0, 0, 1]));
        assert!(form.component(1).is_zero() && form.component(2).is_zero());
        assert_eq!(form.leading_index(), 0);
    }

    #[test]
    fn x_squared_is_a2() {
        let form = shear_decompose(&bi(&[(2, 0, 1)]));
        assert_eq!(form.component(2), UniPoly::from_integers(&f(), &[1]));
        assert!(form.component(0).is_zero() && form.component(1).is_zero());
        assert_eq!(form.leading_index(), 2);
    }

    #[test]
    fn xy_splits() {
        let form = shear_decompose(&bi(&[(1, 1, 1)]));
        assert_eq!(form.component(1), UniPoly::from_integers(&f(), &[0, 1]));
        assert_eq!(form.component(2), UniPoly::from_integers(&f(), &[-1]));
        assert_eq!(form.leading_index(), 2);
    }

    #[test]
    fn compose_examples() {
        let a0 = ShearForm::new(&f(), 2, vec![UniPoly::from_integers(&f(), &[0, 0, 1])]);
        assert_eq!(shear_compose(&a0), bi(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)]));
        let zero = ShearForm::new(&f(), 2, vec![]);
        assert!(shear_compose(&zero).is_zero());
        let xy = ShearForm::new(
            &f(),
            2,
            vec![
                UniPoly::zero(&f()),
                UniPoly::from_integers(&f(), &[0, 1]),
                UniPoly::from_integers(&f(), &[-1]),
            ],
        );
        assert_eq!(shear_compose(&xy), bi(&[(1, 1, 1)]));
    }
}

//! Polynomials with coefficients in a radical field.
//!
//! [`UniPoly`] is a dense univariate polynomial; [`BiPoly`] is a bivariate
//! polynomial with a per-variable degree bound `m`, stored as an
//! `(m+1)×(m+1)` matrix where entry `(t, s)` is the coefficient of `xᵗ yˢ`.

mod bounds;
mod cocycle;
mod interp;
mod shear;

pub use bounds::{perturbed_lower_bound, root_bound};
pub use cocycle::{coboundary, recover_from_cocycle};
pub use interp::{lagrange_basis, lagrange_tensor};
pub use shear::{shear_compose, shear_decompose, ShearForm};

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, RadicalField, Rational};

#[derive(Clone)]
pub struct UniPoly {
    field: RadicalField,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    /// Coefficients in increasing degree; trailing zeros are stripped.
    pub fn new(field: &RadicalField, coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            field.check_same(c.field())?;
        }
        Ok(Self::normalized(field, coeffs))
    }

    fn normalized(field: &RadicalField, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &RadicalField) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Self::normalized(&field, vec![c])
    }

    /// `c·xᵏ`
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![FieldElement::zero(&field); k];
        coeffs.push(c);
        Self::normalized(&field, coeffs)
    }

    /// Polynomial from integer coefficients, lowest degree first.
    pub fn from_integers(field: &RadicalField, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| FieldElement::from_integer(field, c)).collect();
        Self::normalized(field, coeffs)
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(x.field())?;
        let mut acc = FieldElement::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Self::normalized(&self.field, coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        Self::normalized(&self.field, coeffs)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut coeffs = vec![FieldElement::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::normalized(&self.field, coeffs)
    }

    pub fn scale(&self, factor: &FieldElement) -> UniPoly {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        Self::normalized(&self.field, coeffs)
    }

    pub fn pow(&self, exp: u32) -> UniPoly {
        let mut acc = UniPoly::constant(FieldElement::one(&self.field));
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for UniPoly {}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone)]
pub struct BiPoly {
    field: RadicalField,
    m: usize,
    coeffs: Vec<Vec<FieldElement>>,
}

impl BiPoly {
    pub fn new(field: &RadicalField, m: usize, coeffs: Vec<Vec<FieldElement>>) -> Result<Self> {
        if coeffs.len() != m + 1 || coeffs.iter().any(|row| row.len() != m + 1) {
            return Err(Error::Shape(format!("bivariate coefficients must be {0}×{0}", m + 1)));
        }
        for c in coeffs.iter().flatten() {
            field.check_same(c.field())?;
        }
        Ok(BiPoly {
            field: field.clone(),
            m,
            coeffs,
        })
    }

    pub fn zero(field: &RadicalField, m: usize) -> Self {
        BiPoly {
            field: field.clone(),
            m,
            coeffs: vec![vec![FieldElement::zero(field); m + 1]; m + 1],
        }
    }

    /// Builds from `(t, s, c)` terms meaning `c·xᵗyˢ`; repeated terms add up.
    pub fn from_terms<I>(field: &RadicalField, m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, FieldElement)>,
    {
        let mut out = Self::zero(field, m);
        for (t, s, c) in terms {
            if t > m || s > m {
                return Err(Error::Shape(format!("term x^{t} y^{s} exceeds degree bound {m}")));
            }
            out.coeffs[t][s] = &out.coeffs[t][s] + &c;
        }
        Ok(out)
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    /// Per-variable degree bound.
    pub fn bound(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[Vec<FieldElement>] {
        &self.coeffs
    }

    /// Coefficient of `xᵗ yˢ` (zero beyond the bound).
    pub fn coeff(&self, t: usize, s: usize) -> FieldElement {
        self.coeffs
            .get(t)
            .and_then(|row| row.get(s))
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(FieldElement::is_zero)
    }

    /// Actual degrees in x and in y; `None` for the zero polynomial.
    pub fn degrees(&self) -> Option<(usize, usize)> {
        let mut dx = None;
        let mut dy = None;
        for (t, row) in self.coeffs.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    dx = dx.max(Some(t));
                    dy = dy.max(Some(s));
                }
            }
        }
        dx.zip(dy)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.m).all(|t| (0..t).all(|s| self.coeffs[t][s] == self.coeffs[s][t]))
    }

    /// Same polynomial under a larger degree bound.
    pub fn with_bound(&self, m: usize) -> Result<Self> {
        let terms = self.terms().collect::<Vec<_>>();
        Self::from_terms(&self.field, m, terms)
    }

    /// Nonzero terms `(t, s, c)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, FieldElement)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(t, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(s, c)| (t, s, c.clone()))
        })
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(x.field())?;
        self.field.check_same(y.field())?;
        let mut acc = FieldElement::zero(&self.field);
        for row in self.coeffs.iter().rev() {
            let mut inner = FieldElement::zero(&self.field);
            for c in row.iter().rev() {
                inner = &(&inner * y) + c;
            }
            acc = &(&acc * x) + &inner;
        }
        Ok(acc)
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let m = self.m.max(other.m);
        let mut out = BiPoly::zero(&self.field, m);
        for t in 0..=m {
            for s in 0..=m {
                out.coeffs[t][s] = &self.coeff(t, s) - &other.coeff(t, s);
            }
        }
        out
    }

    /// Restriction `x ↦ P(x, α − x)`.
    pub fn anti_diagonal_slice(&self, alpha: &FieldElement) -> UniPoly {
        let x = UniPoly::monomial(FieldElement::one(&self.field), 1);
        let y = UniPoly::constant(alpha.clone()).sub(&x);
        let mut acc = UniPoly::zero(&self.field);
        for (t, s, c) in self.terms() {
            acc = acc.add(&x.pow(t as u32).mul(&y.pow(s as u32)).scale(&c));
        }
        acc
    }
}

/// Coefficient-wise equality; the degree bounds may differ.
impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field {
            return false;
        }
        let m = self.m.max(other.m);
        (0..=m).all(|t| (0..=m).all(|s| self.coeff(t, s) == other.coeff(t, s)))
    }
}

impl Eq for BiPoly {}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly(m={}; ", self.m)?;
        let mut first = true;
        for (t, s, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})x^{t}y^{s}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Either kind of polynomial, for arity-checked evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Polynomial {
    Uni(UniPoly),
    Bi(BiPoly),
}

pub fn poly_eval(p: &Polynomial, point: &[FieldElement]) -> Result<FieldElement> {
    match (p, point) {
        (Polynomial::Uni(u), [x]) => u.eval(x),
        (Polynomial::Bi(b), [x, y]) => b.eval(x, y),
        (Polynomial::Uni(_), _) => Err(Error::Arity {
            expected: 1,
            got: point.len(),
        }),
        (Polynomial::Bi(_), _) => Err(Error::Arity {
            expected: 2,
            got: point.len(),
        }),
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::from_integer(BigInt::from(0));
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2() -> RadicalField {
        RadicalField::new(&[2]).unwrap()
    }

    #[test]
    fn uni_eval_examples() {
        let f = q2();
        let sq = UniPoly::from_integers(&f, &[0, 0, 1]);
        let s2 = FieldElement::basis_vector(&f, 2).unwrap();
        assert_eq!(poly_eval(&Polynomial::Uni(sq), std::slice::from_ref(&s2)).unwrap(), FieldElement::from_integer(&f, 2));
        assert_eq!(UniPoly::zero(&f).eval(&s2).unwrap(), FieldElement::zero(&f));
        assert_eq!(UniPoly::zero(&f).degree(), None);
    }

    #[test]
    fn bi_eval_example() {
        let f = q2();
        let one = FieldElement::one(&f);
        let two = FieldElement::from_integer(&f, 2);
        // (x+y)^2
        let p = BiPoly::from_terms(&f, 2, [(2, 0, one.clone()), (1, 1, two), (0, 2, one.clone())]).unwrap();
        let s2 = FieldElement::basis_vector(&f, 2).unwrap();
        let got = poly_eval(&Polynomial::Bi(p.clone()), &[one.clone(), s2.clone()]).unwrap();
        let expected = &FieldElement::from_integer(&f, 3) + &(&two_el(&f) * &s2);
        assert_eq!(got, expected);
        assert_eq!(
            poly_eval(&Polynomial::Bi(p), &[one]),
            Err(Error::Arity { expected: 2, got: 1 })
        );
    }

    fn two_el(f: &RadicalField) -> FieldElement {
        FieldElement::from_integer(f, 2)
    }

    #[test]
    fn trailing_zeros_stripped() {
        let f = q2();
        let p = UniPoly::from_integers(&f, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs().len(), 2);
    }

    #[test]
    fn bipoly_shape_checked() {
        let f = q2();
        let bad = vec![vec![FieldElement::zero(&f); 2]; 3];
        assert!(matches!(BiPoly::new(&f, 2, bad), Err(Error::Shape(_))));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Rational::from_integer(10.into()));
        assert_eq!(binomial(4, 0), Rational::from_integer(1.into()));
        assert_eq!(binomial(3, 4), Rational::from_integer(0.into()));
    }
}

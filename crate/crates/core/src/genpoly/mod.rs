//! Generalized polynomials built from ℚ-linear data on the field basis.
//!
//! An [`AdditiveMap`] is fixed by arbitrary images of the ℚ-basis vectors
//! and extended ℚ-linearly; when the image/basis ratios are not all equal
//! the map is additive but not of the form `c·x`. Products of such maps give
//! [`SymmetricTensor`]s, and a constant plus diagonals of tensors is a
//! [`GeneralizedPoly`].

mod cloud;
mod sanjuan;

pub use crate::coverage::{BoxRegion, Coverage};
pub use cloud::{coverage_metric, format_significant, CloudPoint, PointCloud, PointSource};
pub use sanjuan::{bounded_rationals, san_juan_sample};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diffcalc::{delta_power_eval, Evaluate};
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, RadicalField, Rational};
use crate::polyalg::UniPoly;

/// ℚ-linear map determined by its values on the field basis.
#[derive(Debug, Clone, PartialEq)]
pub struct AdditiveMap {
    field: RadicalField,
    // images[p] is the image of the basis vector at storage position p
    images: Vec<FieldElement>,
}

impl AdditiveMap {
    /// `images` must assign exactly one value to every basis index.
    pub fn new(field: &RadicalField, images: &BTreeMap<u64, FieldElement>) -> Result<Self> {
        for &index in images.keys() {
            if field.position_of(index).is_none() {
                return Err(Error::UnknownBasisIndex {
                    index,
                    field: field.to_string(),
                });
            }
        }
        let mut ordered = Vec::with_capacity(field.dimension());
        for &b in field.basis() {
            let image = images.get(&b).ok_or(Error::MissingImage(b))?;
            field.check_same(image.field())?;
            ordered.push(image.clone());
        }
        Ok(AdditiveMap {
            field: field.clone(),
            images: ordered,
        })
    }

    /// The map `x ↦ x`.
    pub fn identity(field: &RadicalField) -> Self {
        let images = field
            .basis()
            .iter()
            .map(|&b| FieldElement::basis_vector(field, b).expect("basis index"))
            .collect();
        AdditiveMap {
            field: field.clone(),
            images,
        }
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    pub fn images(&self) -> BTreeMap<u64, FieldElement> {
        self.field.basis().iter().copied().zip(self.images.iter().cloned()).collect()
    }

    pub fn image(&self, index: u64) -> Option<&FieldElement> {
        self.field.position_of(index).map(|p| &self.images[p])
    }

    /// Ratios `images[b] / √b` per basis index.
    pub fn ratios(&self) -> BTreeMap<u64, FieldElement> {
        self.field
            .basis()
            .iter()
            .zip(&self.images)
            .map(|(&b, img)| {
                let v = FieldElement::basis_vector(&self.field, b).expect("basis index");
                (b, img.checked_div(&v).expect("basis vectors are nonzero"))
            })
            .collect()
    }

    /// True iff two basis vectors have different image/basis ratios, i.e.
    /// the map is not `x ↦ c·x`.
    pub fn is_discontinuous(&self) -> bool {
        let ratios: Vec<_> = self.ratios().into_values().collect();
        ratios.windows(2).any(|w| w[0] != w[1])
    }

    /// `Σ_b coords(x)_b · images[b]`
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(x.field())?;
        Ok(x.dense_coords()
            .iter()
            .zip(&self.images)
            .filter(|(c, _)| !c.is_zero())
            .fold(FieldElement::zero(&self.field), |acc, (c, img)| &acc + &img.scale(c)))
    }
}

impl Evaluate for AdditiveMap {
    fn field(&self) -> &RadicalField {
        &self.field
    }
    fn evaluate(&self, x: &FieldElement) -> Result<FieldElement> {
        self.eval(x)
    }
}

/// Symmetric k-additive form in ℚ-coordinates.
///
/// Keys are sorted k-tuples of basis indices. The coefficient stored under
/// a key multiplies the monomial `Π coords(x)_{b}` of the diagonal, so
/// `diag(x) = Σ_key coeff·Π_{b ∈ key} coords(x)_b`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTensor {
    field: RadicalField,
    order: usize,
    coeffs: BTreeMap<Vec<u64>, FieldElement>,
}

impl SymmetricTensor {
    /// Keys are canonicalized by sorting; repeated keys add up.
    pub fn new<I>(field: &RadicalField, order: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u64>, FieldElement)>,
    {
        if order == 0 {
            return Err(Error::Invalid("form order must be at least 1".into()));
        }
        let mut coeffs: BTreeMap<Vec<u64>, FieldElement> = BTreeMap::new();
        for (mut key, value) in entries {
            if key.len() != order {
                return Err(Error::Arity {
                    expected: order,
                    got: key.len(),
                });
            }
            for &b in &key {
                if field.position_of(b).is_none() {
                    return Err(Error::UnknownBasisIndex {
                        index: b,
                        field: field.to_string(),
                    });
                }
            }
            field.check_same(value.field())?;
            key.sort_unstable();
            let slot = coeffs.entry(key).or_insert_with(|| FieldElement::zero(field));
            *slot = &*slot + &value;
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(SymmetricTensor {
            field: field.clone(),
            order,
            coeffs,
        })
    }

    /// Diagonal of the product of linear maps: `x ↦ Π_i a_i(x)`.
    pub fn product_of(maps: &[AdditiveMap]) -> Result<Self> {
        let Some(first) = maps.first() else {
            return Err(Error::Invalid("product needs at least one factor".into()));
        };
        let field = first.field().clone();
        let mut acc: BTreeMap<Vec<u64>, FieldElement> = BTreeMap::new();
        acc.insert(Vec::new(), FieldElement::one(&field));
        for map in maps {
            field.check_same(map.field())?;
            let mut next: BTreeMap<Vec<u64>, FieldElement> = BTreeMap::new();
            for (key, value) in &acc {
                for (b, image) in map.images() {
                    if image.is_zero() {
                        continue;
                    }
                    let mut k = key.clone();
                    k.push(b);
                    k.sort_unstable();
                    let slot = next.entry(k).or_insert_with(|| FieldElement::zero(&field));
                    *slot = &*slot + &(value * &image);
                }
            }
            acc = next;
        }
        SymmetricTensor::new(&field, maps.len(), acc)
    }

    /// `x ↦ a(x)^k`
    pub fn additive_power(a: &AdditiveMap, k: usize) -> Result<Self> {
        Self::product_of(&vec![a.clone(); k])
    }

    /// The ordinary power `x ↦ x^k` written as a form in ℚ-coordinates.
    pub fn ordinary_power(field: &RadicalField, k: usize) -> Result<Self> {
        Self::additive_power(&AdditiveMap::identity(field), k)
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u64>, FieldElement> {
        &self.coeffs
    }

    /// `A_k(x) = A^k(x, …, x)`
    pub fn diagonal(&self, x: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(x.field())?;
        let mut acc = FieldElement::zero(&self.field);
        for (key, coeff) in &self.coeffs {
            let mut monomial = Rational::from_integer(BigInt::from(1));
            for &b in key {
                monomial *= x.coord(b);
                if monomial.is_zero() {
                    break;
                }
            }
            if !monomial.is_zero() {
                acc = &acc + &coeff.scale(&monomial);
            }
        }
        Ok(acc)
    }

    /// The symmetric k-additive map `A^k(x_1, …, x_k)` whose diagonal is
    /// [`SymmetricTensor::diagonal`].
    pub fn multi_eval(&self, args: &[FieldElement]) -> Result<FieldElement> {
        if args.len() != self.order {
            return Err(Error::Arity {
                expected: self.order,
                got: args.len(),
            });
        }
        for a in args {
            self.field.check_same(a.field())?;
        }
        let mut acc = FieldElement::zero(&self.field);
        for (key, coeff) in &self.coeffs {
            let perms = distinct_permutations(key);
            let weight = Rational::new(BigInt::from(1), BigInt::from(perms.len()));
            let mut total = Rational::zero();
            for perm in &perms {
                let mut prod = Rational::from_integer(BigInt::from(1));
                for (arg, &b) in args.iter().zip(perm) {
                    prod *= arg.coord(b);
                }
                total += prod;
            }
            acc = &acc + &coeff.scale(&(total * weight));
        }
        Ok(acc)
    }
}

fn distinct_permutations(sorted: &[u64]) -> Vec<Vec<u64>> {
    fn go(remaining: &mut Vec<u64>, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        let mut prev = None;
        for i in 0..remaining.len() {
            if prev == Some(remaining[i]) {
                continue;
            }
            prev = Some(remaining[i]);
            let v = remaining.remove(i);
            current.push(v);
            go(remaining, current, out);
            current.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut sorted.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// `f(x) = A_0 + Σ_k A_k(x)` with each `A_k` the diagonal of a symmetric
/// k-additive form.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedPoly {
    field: RadicalField,
    constant: FieldElement,
    forms: Vec<SymmetricTensor>,
}

impl GeneralizedPoly {
    pub fn new(constant: FieldElement, forms: Vec<SymmetricTensor>) -> Result<Self> {
        let field = constant.field().clone();
        for form in &forms {
            field.check_same(form.field())?;
        }
        Ok(GeneralizedPoly { field, constant, forms })
    }

    pub fn from_additive(a: &AdditiveMap) -> Self {
        let form = SymmetricTensor::product_of(std::slice::from_ref(a)).expect("one factor");
        GeneralizedPoly {
            field: a.field().clone(),
            constant: FieldElement::zero(a.field()),
            forms: vec![form],
        }
    }

    /// `x ↦ a(x)^k`
    pub fn additive_power(a: &AdditiveMap, k: usize) -> Result<Self> {
        GeneralizedPoly::new(FieldElement::zero(a.field()), vec![SymmetricTensor::additive_power(a, k)?])
    }

    /// An ordinary polynomial rewritten as a generalized one.
    pub fn from_unipoly(p: &UniPoly) -> Result<Self> {
        let field = p.field();
        let mut forms = Vec::new();
        for (k, c) in p.coeffs().iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            let power = SymmetricTensor::ordinary_power(field, k)?;
            let scaled = power.coeffs().iter().map(|(key, v)| (key.clone(), v * c));
            forms.push(SymmetricTensor::new(field, k, scaled)?);
        }
        GeneralizedPoly::new(p.coeff(0), forms)
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    pub fn constant(&self) -> &FieldElement {
        &self.constant
    }

    pub fn forms(&self) -> &[SymmetricTensor] {
        &self.forms
    }

    /// Largest form order present (0 for a constant).
    pub fn degree(&self) -> usize {
        self.forms.iter().map(SymmetricTensor::order).max().unwrap_or(0)
    }

    /// `A_k(x)`: the sum of the diagonals of all forms of order `k`
    /// (the constant for `k = 0`).
    pub fn component(&self, k: usize, x: &FieldElement) -> Result<FieldElement> {
        if k == 0 {
            return Ok(self.constant.clone());
        }
        let mut acc = FieldElement::zero(&self.field);
        for form in self.forms.iter().filter(|f| f.order() == k) {
            acc = &acc + &form.diagonal(x)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(x.field())?;
        let mut acc = self.constant.clone();
        for form in &self.forms {
            acc = &acc + &form.diagonal(x)?;
        }
        Ok(acc)
    }
}

impl Evaluate for GeneralizedPoly {
    fn field(&self) -> &RadicalField {
        &self.field
    }
    fn evaluate(&self, x: &FieldElement) -> Result<FieldElement> {
        self.eval(x)
    }
}

/// Outcome of a fixed-step Fréchet check.
#[derive(Debug, Clone, PartialEq)]
pub enum FrechetCheck {
    Holds,
    /// First trial with `Δ_h^{m+1} f(x) ≠ 0`.
    Witness {
        x: FieldElement,
        h: FieldElement,
        value: FieldElement,
    },
}

impl FrechetCheck {
    pub fn holds(&self) -> bool {
        matches!(self, FrechetCheck::Holds)
    }
}

/// Checks `Δ_h^{m+1} f(x) = 0` on every trial pair `(x, h)`.
pub fn fixed_step_check<F: Evaluate + ?Sized>(f: &F, m: usize, trials: &[(FieldElement, FieldElement)]) -> Result<FrechetCheck> {
    for (x, h) in trials {
        let value = delta_power_eval(f, h, m as i64 + 1, x)?;
        if !value.is_zero() {
            return Ok(FrechetCheck::Witness {
                x: x.clone(),
                h: h.clone(),
                value,
            });
        }
    }
    Ok(FrechetCheck::Holds)
}

pub fn frechet_check_genpoly(f: &GeneralizedPoly, m: usize, trials: &[(FieldElement, FieldElement)]) -> Result<FrechetCheck> {
    fixed_step_check(f, m, trials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{integer, rational};

    pub(crate) fn q2() -> RadicalField {
        RadicalField::new(&[2]).unwrap()
    }

    pub(crate) fn hamel(f: &RadicalField, one: i64, root: i64) -> AdditiveMap {
        let images = BTreeMap::from([(1, FieldElement::from_integer(f, one)), (2, FieldElement::from_integer(f, root))]);
        AdditiveMap::new(f, &images).unwrap()
    }

    fn el(f: &RadicalField, a: i64, b: i64) -> FieldElement {
        FieldElement::from_coords(f, [(1, integer(a)), (2, integer(b))]).unwrap()
    }

    #[test]
    fn discontinuity_flag() {
        let f = q2();
        assert!(hamel(&f, 1, 0).is_discontinuous());
        assert!(!AdditiveMap::identity(&f).is_discontinuous());
        assert!(!hamel(&f, 0, 0).is_discontinuous());
        // a(1) = 1, a(√2) = 2 has ratios 1 and √2
        assert!(hamel(&f, 1, 2).is_discontinuous());
    }

    #[test]
    fn missing_image_rejected() {
        let f = q2();
        let images = BTreeMap::from([(1, FieldElement::one(&f))]);
        assert_eq!(AdditiveMap::new(&f, &images), Err(Error::MissingImage(2)));
    }

    #[test]
    fn additive_eval_examples() {
        let f = q2();
        let a = hamel(&f, 1, 0);
        assert_eq!(a.eval(&el(&f, 3, 2)).unwrap(), FieldElement::from_integer(&f, 3));
        let x = el(&f, 5, -7);
        let r = rational(2, 3);
        assert_eq!(a.eval(&x.scale(&r)).unwrap(), a.eval(&x).unwrap().scale(&r));
        let id = AdditiveMap::identity(&f);
        assert_eq!(id.eval(&x).unwrap(), x);
    }

    #[test]
    fn square_of_hamel_map() {
        let f = q2();
        let g = GeneralizedPoly::additive_power(&hamel(&f, 1, 0), 2).unwrap();
        assert_eq!(g.eval(&el(&f, 1, 1)).unwrap(), FieldElement::one(&f));
        let x = el(&f, 3, -2);
        let two_x = x.scale(&integer(2));
        assert_eq!(g.eval(&two_x).unwrap(), g.eval(&x).unwrap().scale(&integer(4)));
    }

    #[test]
    fn ordinary_square_form() {
        let f = RadicalField::new(&[2, 3]).unwrap();
        let sq = GeneralizedPoly::from_unipoly(&UniPoly::from_integers(&f, &[1, 0, 1])).unwrap();
        let x = FieldElement::from_coords(&f, [(1, integer(2)), (2, rational(1, 3)), (6, integer(-1))]).unwrap();
        assert_eq!(sq.eval(&x).unwrap(), &(&x * &x) + &FieldElement::one(&f));
    }

    #[test]
    fn multi_eval_matches_diagonal_and_is_symmetric() {
        let f = q2();
        let t = SymmetricTensor::product_of(&[hamel(&f, 1, 3), hamel(&f, -2, 5), AdditiveMap::identity(&f)]).unwrap();
        let x = el(&f, 2, -1);
        let y = el(&f, 1, 4);
        let z = el(&f, -3, 2);
        assert_eq!(t.multi_eval(&[x.clone(), x.clone(), x.clone()]).unwrap(), t.diagonal(&x).unwrap());
        let xyz = t.multi_eval(&[x.clone(), y.clone(), z.clone()]).unwrap();
        assert_eq!(xyz, t.multi_eval(&[z.clone(), x.clone(), y.clone()]).unwrap());
        // additive in the first slot
        let sum = t.multi_eval(&[&x + &y, y.clone(), z.clone()]).unwrap();
        assert_eq!(sum, &xyz + &t.multi_eval(&[y.clone(), y, z]).unwrap());
    }

    #[test]
    fn frechet_checks() {
        let f = q2();
        let a = hamel(&f, 1, 0);
        let sq = GeneralizedPoly::additive_power(&a, 2).unwrap();
        let lin = GeneralizedPoly::from_additive(&a);
        let trials = vec![(el(&f, 0, 0), el(&f, 1, 0)), (el(&f, 2, 1), el(&f, 1, 3)), (el(&f, -1, 5), el(&f, 0, 1))];
        assert!(frechet_check_genpoly(&sq, 2, &trials).unwrap().holds());
        assert!(frechet_check_genpoly(&lin, 1, &trials).unwrap().holds());
        match frechet_check_genpoly(&sq, 1, &trials).unwrap() {
            FrechetCheck::Witness { value, .. } => assert_eq!(value, FieldElement::from_integer(&f, 2)),
            FrechetCheck::Holds => panic!("degree two should fail at m = 1"),
        }
    }
}

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::Rational;
use crate::error::{Error, Result};

/// Largest supported number of adjoined radicals (basis of 2^8 vectors).
const MAX_RADICALS: usize = 8;

/// The field ℚ(√d₁,…,√d_k) with its 2^k-element product basis.
///
/// Basis position `mask` holds the square-free part of the product of the
/// radicands selected by the bits of `mask`; position 0 is the unit.
#[derive(Clone)]
pub struct RadicalField {
    inner: Arc<FieldData>,
}

struct FieldData {
    radicands: Vec<u64>,
    basis: Vec<u64>,
    // coefficient c with √b_i·√b_j = c·√b_{i^j}, row-major by (i, j)
    products: Vec<Rational>,
}

impl RadicalField {
    pub fn new(radicands: &[i64]) -> Result<Self> {
        let mut checked = Vec::with_capacity(radicands.len());
        for &value in radicands {
            if value < 2 {
                return Err(Error::RadicandTooSmall(value));
            }
            if let Some((square, rest)) = square_factor(value as u64) {
                return Err(Error::NotSquareFree { value, square, rest });
            }
            checked.push(value as u64);
        }
        checked.sort_unstable();
        if checked.len() > MAX_RADICALS {
            return Err(Error::FieldTooLarge(checked));
        }

        let dim = 1usize << checked.len();
        let mut basis = Vec::with_capacity(dim);
        for mask in 0..dim {
            let mut acc: u128 = 1;
            for (bit, &r) in checked.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    acc = squarefree_product(acc, r as u128);
                }
            }
            let acc = u64::try_from(acc).map_err(|_| Error::FieldTooLarge(checked.clone()))?;
            basis.push(acc);
        }
        let mut sorted = basis.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != dim {
            return Err(Error::DependentRadicands(checked));
        }

        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let target = basis[i ^ j] as u128;
                let prod = basis[i] as u128 * basis[j] as u128;
                debug_assert_eq!(prod % target, 0);
                let square = prod / target;
                let root = isqrt_u128(square);
                debug_assert_eq!(root * root, square);
                products.push(Rational::from_integer(BigInt::from(root)));
            }
        }

        Ok(RadicalField {
            inner: Arc::new(FieldData {
                radicands: checked,
                basis,
                products,
            }),
        })
    }

    /// The field ℚ itself.
    pub fn rationals() -> Self {
        RadicalField::new(&[]).expect("empty extension is always valid")
    }

    pub fn radicands(&self) -> &[u64] {
        &self.inner.radicands
    }

    pub fn dimension(&self) -> usize {
        self.inner.basis.len()
    }

    /// Basis indices in storage order (position 0 is `1`).
    pub fn basis(&self) -> &[u64] {
        &self.inner.basis
    }

    pub fn position_of(&self, index: u64) -> Option<usize> {
        self.inner.basis.iter().position(|&b| b == index)
    }

    pub(crate) fn product_coefficient(&self, i: usize, j: usize) -> &Rational {
        &self.inner.products[i * self.dimension() + j]
    }

    pub fn same_as(&self, other: &RadicalField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.radicands == other.inner.radicands
    }

    pub(crate) fn check_same(&self, other: &RadicalField) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for RadicalField {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for RadicalField {}

impl std::hash::Hash for RadicalField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.radicands.hash(state);
    }
}

impl fmt::Display for RadicalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.radicands.is_empty() {
            return write!(f, "Q");
        }
        write!(f, "Q(")?;
        for (k, r) in self.inner.radicands.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "√{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RadicalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalField({self})")
    }
}

/// Returns `(p², n / p²)` for the smallest prime p with p² | n.
fn square_factor(n: u64) -> Option<(u64, u64)> {
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p * p) {
            return Some((p * p, n / (p * p)));
        }
        p += 1;
    }
    None
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// square-free part of a·b for square-free a, b
fn squarefree_product(a: u128, b: u128) -> u128 {
    let g = gcd(a, b);
    (a / g) * (b / g)
}

fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_extension_is_q() {
        let q = RadicalField::new(&[]).unwrap();
        assert_eq!(q.basis(), &[1]);
        assert_eq!(q.dimension(), 1);
    }

    #[test]
    fn single_radical() {
        let f = RadicalField::new(&[2]).unwrap();
        assert_eq!(f.basis(), &[1, 2]);
    }

    #[test]
    fn two_radicals_close_under_products() {
        let f = RadicalField::new(&[3, 2]).unwrap();
        let mut basis = f.basis().to_vec();
        basis.sort_unstable();
        assert_eq!(basis, vec![1, 2, 3, 6]);
        assert_eq!(f.dimension(), 4);
        assert_eq!(f.radicands(), &[2, 3]);
    }

    #[test]
    fn shared_factor_reduces() {
        // √2·√6 = 2√3
        let f = RadicalField::new(&[2, 6]).unwrap();
        let mut basis = f.basis().to_vec();
        basis.sort_unstable();
        assert_eq!(basis, vec![1, 2, 3, 6]);
        let i = f.position_of(2).unwrap();
        let j = f.position_of(6).unwrap();
        assert_eq!(f.basis()[i ^ j], 3);
        assert_eq!(f.product_coefficient(i, j), &Rational::from_integer(2.into()));
    }

    #[test]
    fn rejects_square_factor() {
        let err = RadicalField::new(&[8]).unwrap_err();
        assert_eq!(err.to_string(), "radicand 8 is not square-free (4·2)");
        assert!(matches!(RadicalField::new(&[9]), Err(Error::NotSquareFree { square: 9, rest: 1, .. })));
        assert!(matches!(RadicalField::new(&[1]), Err(Error::RadicandTooSmall(1))));
    }

    #[test]
    fn rejects_dependent_radicands() {
        assert!(matches!(RadicalField::new(&[2, 3, 6]), Err(Error::DependentRadicands(_))));
        assert!(matches!(RadicalField::new(&[5, 5]), Err(Error::DependentRadicands(_))));
    }
}

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::{rational_to_f64, RadicalField, Rational};
use crate::error::{Error, Result};

/// Starting precision (bits) for sign refinement.
const INITIAL_PRECISION: u32 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative = -1,
    Zero = 0,
    Positive = 1,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        self as i8
    }

    pub fn times(self, other: Sign) -> Sign {
        match self.as_i8() * other.as_i8() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// An element of a [`RadicalField`], stored as its rational coordinates
/// over the product basis.
#[derive(Clone)]
pub struct FieldElement {
    field: RadicalField,
    coords: Vec<Rational>,
}

/// Exact sum, difference or product of two elements of the same field.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

impl FieldElement {
    pub fn zero(field: &RadicalField) -> Self {
        FieldElement {
            field: field.clone(),
            coords: vec![Rational::zero(); field.dimension()],
        }
    }

    pub fn one(field: &RadicalField) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &RadicalField, value: Rational) -> Self {
        let mut out = Self::zero(field);
        out.coords[0] = value;
        out
    }

    pub fn from_integer(field: &RadicalField, value: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(value)))
    }

    /// The basis vector √index (index `1` gives the unit).
    pub fn basis_vector(field: &RadicalField, index: u64) -> Result<Self> {
        let pos = field.position_of(index).ok_or_else(|| Error::UnknownBasisIndex {
            index,
            field: field.to_string(),
        })?;
        let mut out = Self::zero(field);
        out.coords[pos] = Rational::one();
        Ok(out)
    }

    /// Builds an element from a sparse coordinate map; absent indices are zero.
    pub fn from_coords<I>(field: &RadicalField, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        let mut out = Self::zero(field);
        for (index, value) in coords {
            let pos = field.position_of(index).ok_or_else(|| Error::UnknownBasisIndex {
                index,
                field: field.to_string(),
            })?;
            out.coords[pos] += value;
        }
        Ok(out)
    }

    pub(crate) fn from_dense(field: &RadicalField, coords: Vec<Rational>) -> Self {
        debug_assert_eq!(coords.len(), field.dimension());
        FieldElement {
            field: field.clone(),
            coords,
        }
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    /// Rational coordinates over the field basis, keyed by basis index.
    /// Zero coordinates are omitted.
    pub fn coords_over_q(&self) -> BTreeMap<u64, Rational> {
        self.field
            .basis()
            .iter()
            .zip(&self.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&b, c)| (b, c.clone()))
            .collect()
    }

    /// Coordinate of the basis vector √index (zero if absent).
    pub fn coord(&self, index: u64) -> Rational {
        self.field
            .position_of(index)
            .map(|p| self.coords[p].clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Coordinates in storage order (see [`RadicalField::basis`]).
    pub fn dense_coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.field.check_same(&other.field)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self::from_dense(&self.field, coords))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.field.check_same(&other.field)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Self::from_dense(&self.field, coords))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.field.check_same(&other.field)?;
        let dim = self.coords.len();
        if dim == 1 {
            return Ok(Self::from_dense(&self.field, vec![&self.coords[0] * &other.coords[0]]));
        }
        let mut out = vec![Rational::zero(); dim];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = self.field.product_coefficient(i, j);
                let term = a * b;
                if c.is_one() {
                    out[i ^ j] += term;
                } else {
                    out[i ^ j] += term * c;
                }
            }
        }
        Ok(Self::from_dense(&self.field, out))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.field.check_same(&other.field)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let coords = self.coords.iter().map(|c| c * factor).collect();
        Self::from_dense(&self.field, coords)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse, by solving the rational linear system of
    /// multiplication-by-`self` against the unit vector.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dim = self.coords.len();
        if dim == 1 {
            return Ok(Self::from_dense(&self.field, vec![self.coords[0].recip()]));
        }
        // column j of the matrix is self·e_j
        let mut matrix = vec![vec![Rational::zero(); dim + 1]; dim];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..dim {
                let row = i ^ j;
                matrix[row][j] += a * self.field.product_coefficient(i, j);
            }
        }
        matrix[0][dim] = Rational::one();
        let solution = crate::linalg::solve_unique(matrix).ok_or(Error::DivisionByZero)?;
        Ok(Self::from_dense(&self.field, solution))
    }

    /// Rational interval `[lo, hi]` that contains the element, obtained from
    /// `precision`-bit enclosures of each square root.
    pub fn enclosure(&self, precision: u32) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (&b, c) in self.field.basis().iter().zip(&self.coords) {
            if c.is_zero() {
                continue;
            }
            let (rlo, rhi) = sqrt_enclosure(b, precision);
            if c.is_positive() {
                lo += c * &rlo;
                hi += c * &rhi;
            } else {
                lo += c * &rhi;
                hi += c * &rlo;
            }
        }
        (lo, hi)
    }

    /// Exact sign. Zero is decided from the coordinates; otherwise the
    /// enclosure is refined with doubling precision until it excludes 0.
    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if self.is_rational() {
            return if self.coords[0].is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        let mut precision = INITIAL_PRECISION;
        loop {
            let (lo, hi) = self.enclosure(precision);
            if lo.is_positive() {
                return Sign::Positive;
            }
            if hi.is_negative() {
                return Sign::Negative;
            }
            precision *= 2;
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    /// Exact comparison of real values. Panics on field mismatch.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn max_value(&self, other: &Self) -> Self {
        if self.cmp_value(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// Nearest `f64`, from a 64-bit enclosure.
    pub fn to_f64(&self) -> f64 {
        if self.is_rational() {
            return rational_to_f64(&self.coords[0]);
        }
        let (lo, hi) = self.enclosure(64);
        rational_to_f64(&((lo + hi) / Rational::from_integer(2.into())))
    }
}

fn sqrt_enclosure(b: u64, precision: u32) -> (Rational, Rational) {
    if b == 1 {
        return (Rational::one(), Rational::one());
    }
    let scaled = BigUint::from(b) << (2 * precision as usize);
    let root = scaled.sqrt();
    let denom = BigInt::one() << precision as usize;
    let lo = BigInt::from(root.clone());
    let exact = &root * &root == scaled;
    let hi = if exact { lo.clone() } else { lo.clone() + 1 };
    (Rational::new(lo, denom.clone()), Rational::new(hi, denom))
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.coords.hash(state);
    }
}

fn expect_same<T>(r: Result<T>) -> T {
    r.unwrap_or_else(|e| panic!("{e}"))
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                expect_same(self.$checked(rhs))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                expect_same(self.$checked(&rhs))
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                expect_same(self.$checked(rhs))
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                expect_same(self.$checked(&rhs))
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let coords = self.coords.iter().map(|c| -c).collect();
        FieldElement::from_dense(&self.field, coords)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&b, c) in self.field.basis().iter().zip(&self.coords) {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if b == 1 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "√{b}")?;
            } else {
                write!(f, "{magnitude}√{b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self} in {})", self.field)
    }
}

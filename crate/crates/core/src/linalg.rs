//! Gaussian elimination over exact scalars (ℚ or a radical field).

use num_traits::{One, Zero};

use crate::exactnum::{FieldElement, Rational};

pub trait Scalar: Clone {
    fn is_zero_value(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn sub_value(&self, other: &Self) -> Self;
    fn mul_value(&self, other: &Self) -> Self;
    /// Panics if `other` is zero.
    fn div_value(&self, other: &Self) -> Self;
    fn neg_value(&self) -> Self;
}

impl Scalar for Rational {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn sub_value(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_value(&self, other: &Self) -> Self {
        self * other
    }
    fn div_value(&self, other: &Self) -> Self {
        self / other
    }
    fn neg_value(&self) -> Self {
        -self
    }
}

impl Scalar for FieldElement {
    // exact: a nonzero coordinate vector is a nonzero real
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        FieldElement::zero(self.field())
    }
    fn one_like(&self) -> Self {
        FieldElement::one(self.field())
    }
    fn sub_value(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_value(&self, other: &Self) -> Self {
        self * other
    }
    fn div_value(&self, other: &Self) -> Self {
        self.checked_div(other).expect("pivot is nonzero")
    }
    fn neg_value(&self) -> Self {
        -self
    }
}

/// Reduces `rows` to reduced row echelon form in place and returns the
/// pivot column of each nonzero row.
pub fn rref<T: Scalar>(rows: &mut [Vec<T>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero_value()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for entry in rows[r].iter_mut() {
            *entry = entry.div_value(&pivot);
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero_value() {
                continue;
            }
            let factor = rows[i][c].clone();
            for j in 0..ncols {
                let delta = factor.mul_value(&rows[r][j]);
                rows[i][j] = rows[i][j].sub_value(&delta);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// Basis of `{v : rows · v = 0}`. `sample` provides zero/one of the right
/// kind when `rows` is empty.
pub fn kernel<T: Scalar>(rows: &[Vec<T>], ncols: usize, sample: &T) -> Vec<Vec<T>> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work);
    let zero = sample.zero_like();
    let one = sample.one_like();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); ncols];
        v[free] = one.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = work[row][free].neg_value();
        }
        basis.push(v);
    }
    basis
}

/// Solves a square system given as an augmented `n × (n+1)` matrix.
/// Returns `None` when the system is singular.
pub fn solve_unique(mut augmented: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = augmented.len();
    let pivots = rref(&mut augmented);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(augmented.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::integer;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| integer(v)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ker = kernel(&a, 3, &integer(0));
        assert_eq!(ker.len(), 1);
        for row in &a {
            let dot: Rational = row.iter().zip(&ker[0]).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solves_and_detects_singular() {
        let sys = m(&[&[2, 1, 5], &[1, -1, 1]]);
        assert_eq!(solve_unique(sys).unwrap(), vec![integer(2), integer(1)]);
        assert!(solve_unique(m(&[&[1, 1, 1], &[2, 2, 2]])).is_none());
    }
}

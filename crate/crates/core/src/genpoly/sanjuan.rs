use num_bigint::BigInt;
use num_integer::Integer;

use super::cloud::{CloudPoint, PointCloud};
use super::AdditiveMap;
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Rational};

/// Distinct rationals `n/d` with `|n| <= num_bound` and `1 <= d <= den_bound`,
/// in increasing order.
pub fn bounded_rationals(num_bound: u64, den_bound: u64) -> Vec<Rational> {
    let mut out = Vec::new();
    for d in 1..=den_bound.max(1) {
        for n in -(num_bound as i64)..=num_bound as i64 {
            if n.gcd(&(d as i64)) == 1 || (n == 0 && d == 1) {
                out.push(Rational::new(BigInt::from(n), BigInt::from(d)));
            }
        }
    }
    out.sort();
    out
}

/// Rational combinations `r0·(x0, a(x0)) + r1·(x1, a(x1))` of two graph
/// points of an additive map. All of them lie on the graph, and when the
/// two vectors are independent they span a dense subset of the plane.
pub fn san_juan_sample(a: &AdditiveMap, x0: &FieldElement, x1: &FieldElement, den_bound: u64, num_bound: u64) -> Result<PointCloud> {
    let y0 = a.eval(x0)?;
    let y1 = a.eval(x1)?;
    let det = &(x0 * &y1) - &(x1 * &y0);
    if det.is_zero() {
        return Err(Error::DependentGenerators(det.to_string()));
    }
    let rs = bounded_rationals(num_bound, den_bound);
    let scaled = |x: &FieldElement, y: &FieldElement| -> Vec<CloudPoint> {
        rs.iter().map(|r| CloudPoint::new(x.scale(r), y.scale(r))).collect()
    };
    PointCloud::combinations(a.field(), scaled(x0, &y0), scaled(x1, &y1))
}

//! ε-coverage of a uniform target grid by a finite point set.
//!
//! Targets are the centres of the `grid^d` congruent cells of a box. A
//! target counts as covered when some point lies within `eps` of it in the
//! maximum norm, and that comparison is always made exactly. Floating-point
//! projections only decide which points are worth checking.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rational_to_f64, FieldElement, Rational, Sign};

/// Axis-aligned box `[lo_1, hi_1] × ⋯ × [lo_d, hi_d]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxRegion {
    lo: Vec<FieldElement>,
    hi: Vec<FieldElement>,
}

impl BoxRegion {
    pub fn new(lo: Vec<FieldElement>, hi: Vec<FieldElement>) -> Result<Self> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(Error::Shape(format!(
                "box corners have dimensions {} and {}",
                lo.len(),
                hi.len()
            )));
        }
        let field = lo[0].field().clone();
        for (a, b) in lo.iter().zip(&hi) {
            field.check_same(a.field())?;
            field.check_same(b.field())?;
            if (b - a).sign() == Sign::Negative {
                return Err(Error::Invalid(format!("box side [{a}, {b}] is empty")));
            }
        }
        Ok(BoxRegion { lo, hi })
    }

    pub fn dimension(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[FieldElement] {
        &self.lo
    }

    pub fn hi(&self) -> &[FieldElement] {
        &self.hi
    }

    /// Exact membership test.
    pub fn contains(&self, point: &[FieldElement]) -> bool {
        point.len() == self.dimension()
            && point
                .iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(p, (lo, hi))| (p - lo).sign() != Sign::Negative && (hi - p).sign() != Sign::Negative)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coverage {
    /// Covered targets over all targets.
    #[serde(with = "crate::wire::rational_string")]
    pub covered_fraction: Rational,
    /// Largest nearest-point distance over all targets (floating point);
    /// `None` when there are no points.
    pub worst_gap: Option<f64>,
}

impl Coverage {
    pub fn is_complete(&self) -> bool {
        self.covered_fraction == Rational::from_integer(BigInt::from(1))
    }
}

/// Source of points for [`grid_coverage`]: a float projection of each
/// point, visited in index order, and the exact coordinates on demand.
pub(crate) trait PointSet {
    fn len(&self) -> usize;
    fn for_each_approx(&self, visit: &mut dyn FnMut(usize, &[f64]));
    fn exact(&self, index: usize) -> Vec<FieldElement>;
}

struct Targets {
    dim: usize,
    grid: usize,
    lo: Vec<f64>,
    width: Vec<f64>,
    exact: Vec<Vec<FieldElement>>,
    approx: Vec<Vec<f64>>,
}

impl Targets {
    fn new(region: &BoxRegion, grid: usize) -> Self {
        let dim = region.dimension();
        let count = grid.pow(dim as u32);
        let mut exact = Vec::with_capacity(count);
        for flat in 0..count {
            let mut rest = flat;
            let mut point = Vec::with_capacity(dim);
            for c in 0..dim {
                let i = rest % grid;
                rest /= grid;
                let t = Rational::new(BigInt::from(2 * i + 1), BigInt::from(2 * grid));
                let lo = &region.lo[c];
                point.push(lo + &(&region.hi[c] - lo).scale(&t));
            }
            exact.push(point);
        }
        let approx = exact.iter().map(|p| p.iter().map(FieldElement::to_f64).collect()).collect();
        let lo: Vec<f64> = region.lo.iter().map(FieldElement::to_f64).collect();
        let width = region
            .hi
            .iter()
            .zip(&lo)
            .map(|(h, l)| h.to_f64() - l)
            .collect();
        Targets {
            dim,
            grid,
            lo,
            width,
            exact,
            approx,
        }
    }

    /// Flat index of the nearest target and whether the point lies inside
    /// that target's cell.
    fn cell_of(&self, p: &[f64]) -> (usize, bool) {
        let mut flat = 0;
        let mut stride = 1;
        let mut inside = true;
        for c in 0..self.dim {
            let raw = if self.width[c] > 0.0 {
                ((p[c] - self.lo[c]) / self.width[c] * self.grid as f64).floor()
            } else {
                0.0
            };
            let i = if raw < 0.0 {
                inside = false;
                0
            } else if raw >= self.grid as f64 {
                let on_edge = (p[c] - self.lo[c] - self.width[c]).abs() <= f64::EPSILON * self.width[c].abs().max(1.0);
                inside &= on_edge;
                self.grid - 1
            } else {
                raw as usize
            };
            if self.width[c] == 0.0 && p[c] != self.lo[c] {
                inside = false;
            }
            flat += i * stride;
            stride *= self.grid;
        }
        (flat, inside)
    }
}

fn max_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn within_exact(point: &[FieldElement], target: &[FieldElement], eps: &FieldElement) -> bool {
    point
        .iter()
        .zip(target)
        .all(|(p, t)| (eps - &(p - t).abs()).sign() != Sign::Negative)
}

pub(crate) fn grid_coverage<P: PointSet + ?Sized>(points: &P, region: &BoxRegion, eps: &Rational, grid: usize) -> Result<Coverage> {
    if !eps.is_positive() {
        return Err(Error::Invalid("eps must be positive".into()));
    }
    if grid == 0 {
        return Err(Error::Invalid("grid must be at least 1".into()));
    }
    let targets = Targets::new(region, grid);
    let count = targets.exact.len();
    if points.len() == 0 {
        return Ok(Coverage {
            covered_fraction: Rational::from_integer(BigInt::from(0)),
            worst_gap: None,
        });
    }
    let field = region.lo[0].field();
    let eps_exact = FieldElement::from_rational(field, eps.clone());
    let eps_f = rational_to_f64(eps);
    let slack = 1e-9 * eps_f.max(1e-300) + 1e-12;

    let mut best = vec![f64::INFINITY; count];
    let mut covered = vec![false; count];
    let mut occupied = vec![false; count];
    let check = |index: usize, t: usize, covered: &mut [bool]| {
        if !covered[t] && within_exact(&points.exact(index), &targets.exact[t], &eps_exact) {
            covered[t] = true;
        }
    };

    points.for_each_approx(&mut |index, p| {
        let (t, inside) = targets.cell_of(p);
        occupied[t] |= inside;
        let d = max_dist(p, &targets.approx[t]);
        if d < best[t] {
            best[t] = d;
        }
        if d <= eps_f + slack {
            check(index, t, &mut covered);
        }
    });

    // a point inside a target's own cell is nearer than any point outside
    // it, so only empty cells need a full scan
    let empty: Vec<usize> = (0..count).filter(|&t| !occupied[t]).collect();
    if !empty.is_empty() {
        points.for_each_approx(&mut |index, p| {
            for &t in &empty {
                let d = max_dist(p, &targets.approx[t]);
                if d < best[t] {
                    best[t] = d;
                }
                if d <= eps_f + slack {
                    check(index, t, &mut covered);
                }
            }
        });
    }

    let hits = covered.iter().filter(|&&c| c).count();
    Ok(Coverage {
        covered_fraction: Rational::new(BigInt::from(hits), BigInt::from(count)),
        worst_gap: Some(best.into_iter().fold(0.0, f64::max)),
    })
}

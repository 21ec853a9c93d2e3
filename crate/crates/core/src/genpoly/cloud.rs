use std::io::{self, Write};

use crate::coverage::{grid_coverage, BoxRegion, Coverage, PointSet};
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, RadicalField, Rational};

/// One exact point of a graph sample.
#[derive(Debug, Clone, PartialEq)]
pub struct CloudPoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl CloudPoint {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        CloudPoint { x, y }
    }

    fn plus(&self, other: &CloudPoint) -> CloudPoint {
        CloudPoint::new(&self.x + &other.x, &self.y + &other.y)
    }

    fn approx(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }
}

/// How the points of a cloud are stored.
#[derive(Debug, Clone, PartialEq)]
pub enum PointSource {
    /// Every point listed.
    Explicit(Vec<CloudPoint>),
    /// All sums `first[i] + second[j]`, enumerated with `j` fastest.
    Combinations {
        first: Vec<CloudPoint>,
        second: Vec<CloudPoint>,
    },
}

/// Finite sample of a planar point set with the exact points retained.
/// Floating-point projections exist only for output and for pruning
/// coverage scans.
#[derive(Debug, Clone)]
pub struct PointCloud {
    field: RadicalField,
    source: PointSource,
    approx_first: Vec<[f64; 2]>,
    approx_second: Vec<[f64; 2]>,
}

impl PartialEq for PointCloud {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.source == other.source
    }
}

impl PointCloud {
    pub fn from_points(field: &RadicalField, points: Vec<CloudPoint>) -> Result<Self> {
        for p in &points {
            field.check_same(p.x.field())?;
            field.check_same(p.y.field())?;
        }
        let approx_first = points.iter().map(CloudPoint::approx).collect();
        Ok(PointCloud {
            field: field.clone(),
            source: PointSource::Explicit(points),
            approx_first,
            approx_second: Vec::new(),
        })
    }

    /// The cloud of all pairwise sums, stored without expanding it.
    pub fn combinations(field: &RadicalField, first: Vec<CloudPoint>, second: Vec<CloudPoint>) -> Result<Self> {
        for p in first.iter().chain(&second) {
            field.check_same(p.x.field())?;
            field.check_same(p.y.field())?;
        }
        let approx_first = first.iter().map(CloudPoint::approx).collect();
        let approx_second = second.iter().map(CloudPoint::approx).collect();
        Ok(PointCloud {
            field: field.clone(),
            source: PointSource::Combinations { first, second },
            approx_first,
            approx_second,
        })
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    pub fn source(&self) -> &PointSource {
        &self.source
    }

    pub fn len(&self) -> usize {
        match &self.source {
            PointSource::Explicit(points) => points.len(),
            PointSource::Combinations { first, second } => first.len() * second.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Exact point at `index`; panics when out of range.
    pub fn point(&self, index: usize) -> CloudPoint {
        match &self.source {
            PointSource::Explicit(points) => points[index].clone(),
            PointSource::Combinations { first, second } => {
                let n = second.len();
                first[index / n].plus(&second[index % n])
            }
        }
    }

    pub fn approx(&self, index: usize) -> [f64; 2] {
        match &self.source {
            PointSource::Explicit(_) => self.approx_first[index],
            PointSource::Combinations { second, .. } => {
                let n = second.len();
                let a = self.approx_first[index / n];
                let b = self.approx_second[index % n];
                [a[0] + b[0], a[1] + b[1]]
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = CloudPoint> + '_ {
        (0..self.len()).map(move |i| self.point(i))
    }

    /// Visits `(index, approximation)` for every point in order.
    pub fn for_each_approx(&self, mut visit: impl FnMut(usize, [f64; 2])) {
        match &self.source {
            PointSource::Explicit(_) => {
                for (i, &a) in self.approx_first.iter().enumerate() {
                    visit(i, a);
                }
            }
            PointSource::Combinations { .. } => {
                let mut index = 0;
                for a in &self.approx_first {
                    for b in &self.approx_second {
                        visit(index, [a[0] + b[0], a[1] + b[1]]);
                        index += 1;
                    }
                }
            }
        }
    }

    /// Visits every exact point in order, reusing the partial sums of the
    /// combination form.
    pub fn for_each_exact(&self, mut visit: impl FnMut(usize, &CloudPoint)) {
        match &self.source {
            PointSource::Explicit(points) => {
                for (i, p) in points.iter().enumerate() {
                    visit(i, p);
                }
            }
            PointSource::Combinations { first, second } => {
                let mut index = 0;
                for a in first {
                    for b in second {
                        visit(index, &a.plus(b));
                        index += 1;
                    }
                }
            }
        }
    }

    /// Keeps the points that satisfy `keep`, as an explicit cloud.
    pub fn filter(&self, mut keep: impl FnMut(&CloudPoint) -> bool) -> PointCloud {
        let mut points = Vec::new();
        self.for_each_exact(|_, p| {
            if keep(p) {
                points.push(p.clone());
            }
        });
        PointCloud::from_points(&self.field, points).expect("points come from this cloud")
    }

    /// CSV with header `x,y`; coordinates rounded to `precision` significant
    /// digits.
    pub fn write_csv<W: Write>(&self, out: &mut W, precision: usize) -> io::Result<()> {
        writeln!(out, "x,y")?;
        let mut result = Ok(());
        self.for_each_approx(|_, [x, y]| {
            if result.is_ok() {
                result = writeln!(out, "{},{}", format_significant(x, precision), format_significant(y, precision));
            }
        });
        result
    }

    pub fn to_csv(&self, precision: usize) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf, precision).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }
}

/// Shortest decimal rendering of `value` rounded to `digits` significant
/// digits.
pub fn format_significant(value: f64, digits: usize) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    let digits = digits.clamp(1, 17);
    let rounded: f64 = format!("{:.*e}", digits - 1, value).parse().expect("valid float literal");
    format!("{rounded}")
}

struct PlanarPoints<'a>(&'a PointCloud);

impl PointSet for PlanarPoints<'_> {
    fn len(&self) -> usize {
        self.0.len()
    }
    fn for_each_approx(&self, visit: &mut dyn FnMut(usize, &[f64])) {
        self.0.for_each_approx(|i, a| visit(i, &a));
    }
    fn exact(&self, index: usize) -> Vec<FieldElement> {
        let p = self.0.point(index);
        vec![p.x, p.y]
    }
}

/// Fraction of the `grid × grid` cell-centre targets of `region` that have
/// a cloud point within `eps` in the maximum norm.
pub fn coverage_metric(cloud: &PointCloud, region: &BoxRegion, eps: &Rational, grid: usize) -> Result<Coverage> {
    if region.dimension() != 2 {
        return Err(Error::Shape(format!("expected a planar box, got dimension {}", region.dimension())));
    }
    cloud.field().check_same(region.lo()[0].field())?;
    grid_coverage(&PlanarPoints(cloud), region, eps, grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::integer;

    fn pt(f: &RadicalField, x: i64, y: i64) -> CloudPoint {
        CloudPoint::new(FieldElement::from_integer(f, x), FieldElement::from_integer(f, y))
    }

    #[test]
    fn combination_indexing() {
        let f = RadicalField::rationals();
        let cloud = PointCloud::combinations(&f, vec![pt(&f, 0, 0), pt(&f, 10, 20)], vec![pt(&f, 1, 1), pt(&f, 2, 3), pt(&f, 3, 5)]).unwrap();
        assert_eq!(cloud.len(), 6);
        assert_eq!(cloud.point(4), pt(&f, 12, 23));
        assert_eq!(cloud.approx(4), [12.0, 23.0]);
        let mut seen = Vec::new();
        cloud.for_each_exact(|i, p| seen.push((i, p.clone())));
        assert_eq!(seen[5], (5, pt(&f, 13, 25)));
        let kept = cloud.filter(|p| p.x.to_f64() > 5.0);
        assert_eq!(kept.len(), 3);
    }

    #[test]
    fn csv_output() {
        let f = RadicalField::new(&[2]).unwrap();
        let s2 = FieldElement::basis_vector(&f, 2).unwrap();
        let cloud = PointCloud::from_points(&f, vec![CloudPoint::new(s2, FieldElement::from_integer(&f, -3))]).unwrap();
        assert_eq!(cloud.to_csv(12), "x,y\n1.41421356237,-3\n");
        assert_eq!(cloud.to_csv(3), "x,y\n1.41,-3\n");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(123456.0, 2), "120000");
        assert_eq!(format_significant(0.000123456, 3), "0.000123");
        assert_eq!(format_significant(0.0, 12), "0");
    }

    #[test]
    fn empty_cloud_coverage() {
        let f = RadicalField::rationals();
        let cloud = PointCloud::from_points(&f, vec![]).unwrap();
        let region = BoxRegion::new(vec![FieldElement::zero(&f); 2], vec![FieldElement::one(&f); 2]).unwrap();
        let cov = coverage_metric(&cloud, &region, &integer(1), 4).unwrap();
        assert_eq!(cov.covered_fraction, integer(0));
    }
}

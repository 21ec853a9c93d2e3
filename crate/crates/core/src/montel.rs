//! Fixed-step checks along two steps and the orbit-interpolation pipeline.
//!
//! For a function `f` and a base point `x0`, the values on the lattice
//! orbit `x0 + i·h1 + j·h2` are interpolated by a bivariate polynomial `P`
//! of degree at most `m` in each variable. When `f` satisfies both
//! fixed-step equations the interpolant reproduces `f` on the whole orbit,
//! and the shear form `P(x, y) = Σ A_i(x + y)·xⁱ` tells an ordinary
//! polynomial restriction (`N = 0`) from an unbounded one (`N ≥ 1`).

use crate::coverage::BoxRegion;
use crate::diffcalc::Evaluate;
use crate::error::{Error, Result};
use crate::exactnum::{integer, FieldElement, RadicalField, Rational};
use crate::genpoly::{bounded_rationals, fixed_step_check, CloudPoint, FrechetCheck, PointCloud};
use crate::polyalg::{lagrange_tensor, shear_decompose, BiPoly, ShearForm, UniPoly};

/// Default half-width of the extension window.
pub const DEFAULT_WINDOW: usize = 8;

/// Checks `Δ_{h1}^{m+1} f(x) = 0` and `Δ_{h2}^{m+1} f(x) = 0` at every
/// sample point.
pub fn montel_check<F: Evaluate + ?Sized>(
    f: &F,
    h1: &FieldElement,
    h2: &FieldElement,
    m: usize,
    xs: &[FieldElement],
) -> Result<FrechetCheck> {
    if h1.is_zero() || h2.is_zero() {
        return Err(Error::ZeroStep);
    }
    let trials: Vec<_> = xs
        .iter()
        .flat_map(|x| [(x.clone(), h1.clone()), (x.clone(), h2.clone())])
        .collect();
    fixed_step_check(f, m, &trials)
}

fn orbit_point(x0: &FieldElement, h1: &FieldElement, h2: &FieldElement, i: i64, j: i64) -> FieldElement {
    let field = x0.field();
    &(x0 + &(FieldElement::from_integer(field, i) * h1)) + &(FieldElement::from_integer(field, j) * h2)
}

/// The interpolant with `P(i·h1, j·h2) = f(x0 + i·h1 + j·h2)` for
/// `0 <= i, j <= m`.
pub fn popoviciu_polynomial<F: Evaluate + ?Sized>(
    f: &F,
    x0: &FieldElement,
    h1: &FieldElement,
    h2: &FieldElement,
    m: usize,
) -> Result<BiPoly> {
    if h1.is_zero() || h2.is_zero() {
        return Err(Error::ZeroStep);
    }
    let field = f.field();
    for v in [x0, h1, h2] {
        field.check_same(v.field())?;
    }
    let mut samples = Vec::with_capacity(m + 1);
    for i in 0..=m as i64 {
        let row = (0..=m as i64)
            .map(|j| f.evaluate(&orbit_point(x0, h1, h2, i, j)))
            .collect::<Result<Vec<_>>>()?;
        samples.push(row);
    }
    lagrange_tensor(&samples, h1, h2, m)
}

/// Result of comparing `P` with `f` on a window of the orbit.
#[derive(Debug, Clone, PartialEq)]
pub enum ExtensionCheck {
    /// All `(2·window + 1)²` points agree.
    Ok { checked: usize },
    /// First disagreement in order of increasing `max(|i|, |j|)`.
    Failure {
        i: i64,
        j: i64,
        expected: FieldElement,
        found: FieldElement,
    },
}

impl ExtensionCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, ExtensionCheck::Ok { .. })
    }
}

/// Lattice points with `max(|i|, |j|) = r`, row by row.
fn shell(r: i64) -> impl Iterator<Item = (i64, i64)> {
    (-r..=r).flat_map(move |i| (-r..=r).filter(move |&j| i.abs().max(j.abs()) == r).map(move |j| (i, j)))
}

/// Checks `P(i·h1, j·h2) = f(x0 + i·h1 + j·h2)` for `|i|, |j| <= window`,
/// shell by shell outwards from the base point.
pub fn verify_extension<F: Evaluate + ?Sized>(
    p: &BiPoly,
    f: &F,
    x0: &FieldElement,
    h1: &FieldElement,
    h2: &FieldElement,
    window: usize,
) -> Result<ExtensionCheck> {
    let field = f.field();
    field.check_same(p.field())?;
    let mut checked = 0;
    for r in 0..=window as i64 {
        for (i, j) in shell(r) {
            let u = FieldElement::from_integer(field, i) * h1;
            let v = FieldElement::from_integer(field, j) * h2;
            let found = f.evaluate(&(&(x0 + &u) + &v))?;
            let expected = p.eval(&u, &v)?;
            if expected != found {
                return Ok(ExtensionCheck::Failure { i, j, expected, found });
            }
            checked += 1;
        }
    }
    Ok(ExtensionCheck::Ok { checked })
}

/// Result of comparing the interpolants for steps `(h1, h2)` and
/// `(h1/p, h2/q)` on the coarse grid.
#[derive(Debug, Clone, PartialEq)]
pub enum RefinementCheck {
    Ok,
    Mismatch {
        i: usize,
        j: usize,
        coarse: FieldElement,
        fine: FieldElement,
    },
}

impl RefinementCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, RefinementCheck::Ok)
    }
}

pub fn rational_refinement_check<F: Evaluate + ?Sized>(
    f: &F,
    x0: &FieldElement,
    h1: &FieldElement,
    h2: &FieldElement,
    m: usize,
    p: i64,
    q: i64,
) -> Result<RefinementCheck> {
    if p == 0 || q == 0 {
        return Err(Error::Invalid("refinement factors must be nonzero".into()));
    }
    let coarse = popoviciu_polynomial(f, x0, h1, h2, m)?;
    let fine_h1 = h1.scale(&Rational::new(1.into(), p.into()));
    let fine_h2 = h2.scale(&Rational::new(1.into(), q.into()));
    let fine = popoviciu_polynomial(f, x0, &fine_h1, &fine_h2, m)?;
    for i in 0..=m {
        for j in 0..=m {
            let u = h1.scale(&integer(i as i64));
            let v = h2.scale(&integer(j as i64));
            let a = coarse.eval(&u, &v)?;
            let b = fine.eval(&u, &v)?;
            if a != b {
                return Ok(RefinementCheck::Mismatch { i, j, coarse: a, fine: b });
            }
        }
    }
    Ok(RefinementCheck::Ok)
}

/// Everything learned about `f` along one orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitReport {
    pub x0: FieldElement,
    pub h1: FieldElement,
    pub h2: FieldElement,
    pub m: usize,
    pub p: BiPoly,
    pub shear: ShearForm,
    /// Leading shear index.
    pub n: usize,
    pub window: usize,
    pub extension_ok: bool,
}

impl OrbitReport {
    /// True when the orbit restriction is not an ordinary polynomial in
    /// `x + y` and the interpolant was confirmed on the window.
    pub fn is_witness(&self) -> bool {
        self.extension_ok && self.n >= 1
    }

    /// `A_N` of the shear form.
    pub fn leading_component(&self) -> UniPoly {
        self.shear.component(self.n)
    }
}

pub fn orbit_classify<F: Evaluate + ?Sized>(
    f: &F,
    x0: &FieldElement,
    h1: &FieldElement,
    h2: &FieldElement,
    m: usize,
    window: usize,
) -> Result<OrbitReport> {
    orbit_classify_detailed(f, x0, h1, h2, m, window).map(|(report, _)| report)
}

/// [`orbit_classify`] together with the extension check it ran.
pub fn orbit_classify_detailed<F: Evaluate + ?Sized>(
    f: &F,
    x0: &FieldElement,
    h1: &FieldElement,
    h2: &FieldElement,
    m: usize,
    window: usize,
) -> Result<(OrbitReport, ExtensionCheck)> {
    let p = popoviciu_polynomial(f, x0, h1, h2, m)?;
    let extension = verify_extension(&p, f, x0, h1, h2, window)?;
    let shear = shear_decompose(&p);
    let report = OrbitReport {
        x0: x0.clone(),
        h1: h1.clone(),
        h2: h2.clone(),
        m,
        n: shear.leading_index(),
        shear,
        p,
        window,
        extension_ok: extension.is_ok(),
    };
    Ok((report, extension))
}

/// The slice `p_α(x) = P(x, α − x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSlice {
    pub alpha: FieldElement,
    pub poly: UniPoly,
    /// `A_N(α) = 0`, so `α` is one of the at most `m` excluded values.
    pub leading_vanishes: bool,
}

impl GraphSlice {
    pub fn is_constant(&self) -> bool {
        self.poly.is_constant()
    }
}

/// `p_α(x) = Σ_i A_i(α)·xⁱ`, read off the shear form.
pub fn graph_slice(report: &OrbitReport, alpha: &FieldElement) -> Result<GraphSlice> {
    report.shear.field().check_same(alpha.field())?;
    let coeffs = report
        .shear
        .components()
        .iter()
        .map(|a| a.eval(alpha))
        .collect::<Result<Vec<_>>>()?;
    let poly = UniPoly::new(report.shear.field(), coeffs)?;
    debug_assert_eq!(poly, report.p.anti_diagonal_slice(alpha));
    let leading_vanishes = report.leading_component().eval(alpha)?.is_zero();
    Ok(GraphSlice {
        alpha: alpha.clone(),
        poly,
        leading_vanishes,
    })
}

/// Base points and step pairs tried when the caller supplies none: `x0`
/// in `{0, 1}` and ordered pairs of distinct steps from `{1, √d, 1 + √d}`
/// with `d` the smallest radicand, or from `{1, 2, 3}` over ℚ.
pub fn default_candidates(field: &RadicalField) -> Vec<(FieldElement, FieldElement, FieldElement)> {
    let one = FieldElement::one(field);
    let steps = match field.basis().iter().skip(1).min() {
        Some(&d) => {
            let root = FieldElement::basis_vector(field, d).expect("basis index");
            vec![one.clone(), root.clone(), &one + &root]
        }
        None => (1..=3).map(|k| FieldElement::from_integer(field, k)).collect(),
    };
    let mut out = Vec::new();
    for x0 in [FieldElement::zero(field), one] {
        for h1 in &steps {
            for h2 in &steps {
                if h1 != h2 {
                    out.push((x0.clone(), h1.clone(), h2.clone()));
                }
            }
        }
    }
    out
}

/// First candidate orbit whose report is a witness (confirmed extension
/// and `N ≥ 1`).
pub fn witness_search<F: Evaluate + ?Sized>(
    f: &F,
    m: usize,
    candidates: &[(FieldElement, FieldElement, FieldElement)],
    window: usize,
) -> Result<Option<OrbitReport>> {
    for (x0, h1, h2) in candidates {
        let report = orbit_classify(f, x0, h1, h2, m, window)?;
        if report.is_witness() {
            return Ok(Some(report));
        }
    }
    Ok(None)
}

/// Graph points `(x, f(x))` at `x = x0 + r·h1 + s·h2` for all rationals
/// `r, s` with `|numerator| <= num_bound` and `denominator <= den_bound`,
/// optionally restricted to a box.
pub fn graph_cloud<F: Evaluate + ?Sized>(
    f: &F,
    report: &OrbitReport,
    num_bound: u64,
    den_bound: u64,
    region: Option<&BoxRegion>,
) -> Result<PointCloud> {
    if !report.extension_ok {
        return Err(Error::Invalid("orbit extension was not confirmed".into()));
    }
    if let Some(region) = region {
        if region.dimension() != 2 {
            return Err(Error::Shape(format!("expected a planar box, got dimension {}", region.dimension())));
        }
    }
    let rs = bounded_rationals(num_bound, den_bound);
    let mut points = Vec::new();
    for r in &rs {
        let u = &report.x0 + &report.h1.scale(r);
        for s in &rs {
            let x = &u + &report.h2.scale(s);
            let y = f.evaluate(&x)?;
            let keep = match region {
                Some(b) => b.contains(&[x.clone(), y.clone()]),
                None => true,
            };
            if keep {
                points.push(CloudPoint::new(x, y));
            }
        }
    }
    PointCloud::from_points(f.field(), points)
}

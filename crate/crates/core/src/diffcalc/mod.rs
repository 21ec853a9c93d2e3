//! Finite differences over a radical field.
//!
//! Every operator evaluates its argument through [`Evaluate`], so the same
//! code runs on ordinary polynomials, generalized polynomials and finite
//! lookup tables. A table lookup outside the stored keys is an error.

mod djokovic;
mod table;

pub use djokovic::{djokovic_expand, djokovic_verify, djokovic_verify_terms, DjokovicCheck, DjokovicTerm};
pub use table::TableFunction;

use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, RadicalField};
use crate::genpoly::{AdditiveMap, GeneralizedPoly};
use crate::polyalg::{binomial, UniPoly};

/// Exact pointwise evaluation.
pub trait Evaluate {
    fn field(&self) -> &RadicalField;
    fn evaluate(&self, x: &FieldElement) -> Result<FieldElement>;
}

impl<T: Evaluate + ?Sized> Evaluate for &T {
    fn field(&self) -> &RadicalField {
        (**self).field()
    }
    fn evaluate(&self, x: &FieldElement) -> Result<FieldElement> {
        (**self).evaluate(x)
    }
}

impl Evaluate for UniPoly {
    fn field(&self) -> &RadicalField {
        UniPoly::field(self)
    }
    fn evaluate(&self, x: &FieldElement) -> Result<FieldElement> {
        self.eval(x)
    }
}

/// One of the supported function representations.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionHandle {
    Poly(UniPoly),
    GenPoly(GeneralizedPoly),
    Table(TableFunction),
}

impl Evaluate for FunctionHandle {
    fn field(&self) -> &RadicalField {
        match self {
            FunctionHandle::Poly(p) => p.field(),
            FunctionHandle::GenPoly(g) => g.field(),
            FunctionHandle::Table(t) => t.field(),
        }
    }

    fn evaluate(&self, x: &FieldElement) -> Result<FieldElement> {
        match self {
            FunctionHandle::Poly(p) => p.eval(x),
            FunctionHandle::GenPoly(g) => g.eval(x),
            FunctionHandle::Table(t) => t.eval(x),
        }
    }
}

impl From<UniPoly> for FunctionHandle {
    fn from(p: UniPoly) -> Self {
        FunctionHandle::Poly(p)
    }
}

impl From<GeneralizedPoly> for FunctionHandle {
    fn from(g: GeneralizedPoly) -> Self {
        FunctionHandle::GenPoly(g)
    }
}

impl From<TableFunction> for FunctionHandle {
    fn from(t: TableFunction) -> Self {
        FunctionHandle::Table(t)
    }
}

impl From<AdditiveMap> for FunctionHandle {
    fn from(a: AdditiveMap) -> Self {
        FunctionHandle::GenPoly(GeneralizedPoly::from_additive(&a))
    }
}

fn check_points<F: Evaluate + ?Sized>(f: &F, points: &[&FieldElement]) -> Result<()> {
    for p in points {
        f.field().check_same(p.field())?;
    }
    Ok(())
}

/// `Δ_{h_1⋯h_s} f(x) = Δ_{h_1}(Δ_{h_2⋯h_s} f)(x)`, evaluated by the
/// defining recursion.
pub fn delta_multi_eval<F: Evaluate + ?Sized>(f: &F, steps: &[FieldElement], x: &FieldElement) -> Result<FieldElement> {
    check_points(f, &[x])?;
    for h in steps {
        check_points(f, &[h])?;
    }
    recursive(f, steps, x)
}

fn recursive<F: Evaluate + ?Sized>(f: &F, steps: &[FieldElement], x: &FieldElement) -> Result<FieldElement> {
    match steps.split_first() {
        None => f.evaluate(x),
        Some((h, rest)) => {
            let ahead = recursive(f, rest, &(x + h))?;
            let here = recursive(f, rest, x)?;
            Ok(&ahead - &here)
        }
    }
}

/// `Σ_{ε ∈ {0,1}^s} (−1)^{s−|ε|} f(x + Σ ε_r h_r)`.
pub fn signsum_eval<F: Evaluate + ?Sized>(f: &F, steps: &[FieldElement], x: &FieldElement) -> Result<FieldElement> {
    check_points(f, &[x])?;
    let s = steps.len();
    if s >= usize::BITS as usize {
        return Err(Error::Invalid(format!("{s} steps is too many")));
    }
    let mut acc = FieldElement::zero(f.field());
    for mask in 0usize..(1 << s) {
        let mut point = x.clone();
        for (r, h) in steps.iter().enumerate() {
            if mask & (1 << r) != 0 {
                point = point.checked_add(h)?;
            }
        }
        let value = f.evaluate(&point)?;
        if (s - mask.count_ones() as usize).is_multiple_of(2) {
            acc = &acc + &value;
        } else {
            acc = &acc - &value;
        }
    }
    Ok(acc)
}

/// `Δ_h^s f(x) = Σ_{k=0}^{s} C(s,k)(−1)^{s−k} f(x + k·h)`.
pub fn delta_power_eval<F: Evaluate + ?Sized>(f: &F, h: &FieldElement, s: i64, x: &FieldElement) -> Result<FieldElement> {
    if s < 0 {
        return Err(Error::NegativeOrder(s));
    }
    check_points(f, &[h, x])?;
    let s = s as usize;
    let field = f.field();
    let mut acc = FieldElement::zero(field);
    for k in 0..=s {
        let point = x + &(FieldElement::from_integer(field, k as i64) * h);
        let mut w = binomial(s, k);
        if (s - k) % 2 == 1 {
            w = -w;
        }
        acc = &acc + &f.evaluate(&point)?.scale(&w);
    }
    Ok(acc)
}

/// The Fréchet operator
/// `F_{m+1}(f)(x_1,…,x_{m+1}) = Σ_{t=0}^{m} (−1)^t Σ_{#A = m+1−t} f(Σ_{i∈A} x_i) + (−1)^{m+1} f(0)`.
pub fn frechet_eval<F: Evaluate + ?Sized>(f: &F, m: usize, xs: &[FieldElement]) -> Result<FieldElement> {
    if xs.len() != m + 1 {
        return Err(Error::Arity {
            expected: m + 1,
            got: xs.len(),
        });
    }
    for x in xs {
        check_points(f, &[x])?;
    }
    let n = m + 1;
    if n >= usize::BITS as usize {
        return Err(Error::Invalid(format!("order {n} is too large")));
    }
    let field = f.field();
    let mut acc = FieldElement::zero(field);
    for t in 0..=n {
        let size = n - t;
        let mut level = FieldElement::zero(field);
        for mask in (0usize..(1 << n)).filter(|mask| mask.count_ones() as usize == size) {
            let point = xs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(FieldElement::zero(field), |acc, (_, x)| &acc + x);
            level = &level + &f.evaluate(&point)?;
        }
        acc = if t % 2 == 0 { &acc + &level } else { &acc - &level };
    }
    Ok(acc)
}

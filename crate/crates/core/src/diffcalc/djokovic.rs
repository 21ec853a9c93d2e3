use super::{delta_multi_eval, delta_power_eval, Evaluate};
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, Rational};

/// One summand `sign·Δ^{order}_{step} f(x + shift)` of the expansion of a
/// mixed difference into fixed-step differences.
#[derive(Debug, Clone, PartialEq)]
pub struct DjokovicTerm {
    pub sign: i8,
    pub step: FieldElement,
    pub shift: FieldElement,
    pub order: usize,
}

/// Both sides of the identity, evaluated exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct DjokovicCheck {
    pub holds: bool,
    pub lhs: FieldElement,
    pub rhs: FieldElement,
}

/// Terms of
/// `Δ_{h_1⋯h_s} f(x) = Σ_ε (−1)^{|ε|} Δ^s_{α(ε)} f(x + β(ε))` with
/// `α(ε) = −Σ ε_r h_r / r` and `β(ε) = Σ ε_r h_r`.
///
/// Terms are listed by ε read as a binary number with `ε_1` the lowest bit.
pub fn djokovic_expand(steps: &[FieldElement]) -> Result<Vec<DjokovicTerm>> {
    let s = steps.len();
    let Some(first) = steps.first() else {
        return Err(Error::Invalid("expansion needs at least one step".into()));
    };
    if s >= 31 {
        return Err(Error::Invalid(format!("{s} steps is too many")));
    }
    let field = first.field().clone();
    for h in steps {
        field.check_same(h.field())?;
    }
    let scaled: Vec<FieldElement> = steps
        .iter()
        .enumerate()
        .map(|(r, h)| h.scale(&Rational::new(1.into(), ((r + 1) as i64).into())))
        .collect();
    let mut terms = Vec::with_capacity(1 << s);
    for mask in 0usize..(1 << s) {
        let mut step = FieldElement::zero(&field);
        let mut shift = FieldElement::zero(&field);
        for r in (0..s).filter(|r| mask & (1 << r) != 0) {
            step = &step - &scaled[r];
            shift = &shift + &steps[r];
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        terms.push(DjokovicTerm {
            sign,
            step,
            shift,
            order: s,
        });
    }
    Ok(terms)
}

/// Evaluates the mixed difference and its fixed-step expansion.
pub fn djokovic_verify<F: Evaluate + ?Sized>(f: &F, steps: &[FieldElement], x: &FieldElement) -> Result<DjokovicCheck> {
    let terms = djokovic_expand(steps)?;
    djokovic_verify_terms(f, steps, &terms, x)
}

/// Like [`djokovic_verify`] but with a caller-supplied expansion, so a
/// claimed expansion can be checked against the mixed difference.
pub fn djokovic_verify_terms<F: Evaluate + ?Sized>(
    f: &F,
    steps: &[FieldElement],
    terms: &[DjokovicTerm],
    x: &FieldElement,
) -> Result<DjokovicCheck> {
    let lhs = delta_multi_eval(f, steps, x)?;
    let mut rhs = FieldElement::zero(f.field());
    for term in terms {
        let value = delta_power_eval(f, &term.step, term.order as i64, &(x + &term.shift))?;
        rhs = match term.sign {
            1 => &rhs + &value,
            -1 => &rhs - &value,
            other => return Err(Error::Invalid(format!("term sign must be ±1, got {other}"))),
        };
    }
    Ok(DjokovicCheck {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

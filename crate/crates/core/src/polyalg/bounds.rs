use super::UniPoly;
use crate::error::{Error, Result};
use crate::exactnum::{integer, rational, FieldElement};

fn leading_parts(p: &UniPoly) -> Result<(usize, FieldElement)> {
    match p.degree() {
        Some(n) if n >= 1 => Ok((n, p.coeffs()[n].abs())),
        _ => Err(Error::DegreeTooLow),
    }
}

/// `max{1, Σ_{k<N} |a_k| / |a_N|}`: every complex root of `p` has modulus
/// at most this value.
pub fn root_bound(p: &UniPoly) -> Result<FieldElement> {
    let (n, lead) = leading_parts(p)?;
    let field = p.field();
    let inv = lead.inv()?;
    let sum = p.coeffs()[..n]
        .iter()
        .fold(FieldElement::zero(field), |acc, a| &acc + &(&a.abs() * &inv));
    Ok(sum.max_value(&FieldElement::one(field)))
}

/// Lower bound for `|q(x)|` valid for every `q` whose coefficients differ
/// from those of `p` by at most `delta < |a_N|/2`.
///
/// All roots of such `q` lie in the disc of radius
/// `M = max{1, Σ_{k<N} 2(|a_N|/2 + |a_k|)/|a_N|}`, and `|q(x)|` is at least
/// `(|a_N|/2)·dist(x, B_M)^N`. Returns 0 when `|x| <= M`.
pub fn perturbed_lower_bound(p: &UniPoly, delta: &FieldElement, x: &FieldElement) -> Result<FieldElement> {
    let (n, lead) = leading_parts(p)?;
    let field = p.field();
    field.check_same(delta.field())?;
    field.check_same(x.field())?;
    let half_lead = lead.scale(&rational(1, 2));
    if delta.sign() == crate::exactnum::Sign::Negative {
        return Err(Error::Invalid("perturbation must be non-negative".into()));
    }
    if delta.cmp_value(&half_lead) != std::cmp::Ordering::Less {
        return Err(Error::PerturbationTooLarge {
            delta: delta.to_string(),
            half_leading: half_lead.to_string(),
        });
    }
    let inv = lead.inv()?;
    let two = integer(2);
    let sum = p.coeffs()[..n].iter().fold(FieldElement::zero(field), |acc, a| {
        &acc + &(&(&half_lead + &a.abs()) * &inv).scale(&two)
    });
    let radius = sum.max_value(&FieldElement::one(field));
    let dist = &x.abs() - &radius;
    if dist.sign() != crate::exactnum::Sign::Positive {
        return Ok(FieldElement::zero(field));
    }
    Ok(&half_lead * &dist.pow(n as u32))
}

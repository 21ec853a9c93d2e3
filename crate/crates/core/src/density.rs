//! Density of finitely generated additive subgroups of ℝᵈ.
//!
//! For generators `h_1, …, h_ℓ` with coordinates in one radical field let
//! `H` be the `d × ℓ` matrix whose columns are the generators. The group
//! `h_1ℤ + ⋯ + h_ℓℤ` is dense exactly when `H` has rank `d` and no nonzero
//! rational vector lies in the row space of `H`. The second condition is
//! decided by writing membership as orthogonality to the kernel of `H` and
//! splitting every such equation into its rational components.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coverage::{grid_coverage, BoxRegion, Coverage, PointSet};
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, RadicalField, Rational};
use crate::linalg::{kernel, rank};

/// Generators of a subgroup of ℝᵈ.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSet {
    field: RadicalField,
    d: usize,
    generators: Vec<Vec<FieldElement>>,
}

impl GeneratorSet {
    pub fn new(d: usize, generators: Vec<Vec<FieldElement>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Invalid("ambient dimension must be at least 1".into()));
        }
        let Some(first) = generators.first() else {
            return Err(Error::Invalid("need at least one generator".into()));
        };
        let Some(anchor) = first.first() else {
            return Err(Error::Shape(format!("generator 0 has 0 coordinates, expected {d}")));
        };
        let field = anchor.field().clone();
        for (k, g) in generators.iter().enumerate() {
            if g.len() != d {
                return Err(Error::Shape(format!("generator {k} has {} coordinates, expected {d}", g.len())));
            }
            for c in g {
                field.check_same(c.field())?;
            }
        }
        Ok(GeneratorSet { field, d, generators })
    }

    /// `e_1, …, e_d, (θ_1, …, θ_d)`: the group `ℤᵈ + θℤ`.
    pub fn kronecker(thetas: &[FieldElement]) -> Result<Self> {
        let Some(first) = thetas.first() else {
            return Err(Error::Invalid("need at least one θ".into()));
        };
        let field = first.field();
        let d = thetas.len();
        let mut generators: Vec<Vec<FieldElement>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|c| FieldElement::from_integer(field, (i == c) as i64))
                    .collect()
            })
            .collect();
        generators.push(thetas.to_vec());
        GeneratorSet::new(d, generators)
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Vec<FieldElement>] {
        &self.generators
    }

    /// `H`: one row per coordinate, one column per generator.
    pub fn matrix(&self) -> Vec<Vec<FieldElement>> {
        (0..self.d)
            .map(|c| self.generators.iter().map(|g| g[c].clone()).collect())
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityReason {
    RankDeficient,
    IntegerVectorInRowspace,
    Dense,
}

/// The linear algebra behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTranscript {
    pub d: usize,
    pub generators: usize,
    /// Rank of `H` over the field.
    pub rank: usize,
    /// Dimension of `rowspace(H) ∩ ℚ^ℓ`; only computed at full rank.
    pub rational_rowspace_dim: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityVerdict {
    pub dense: bool,
    pub reason: DensityReason,
    /// Nonzero integer `n` with `rank(A(n)) <= d`, for a not-dense verdict.
    #[serde(with = "crate::wire::integer_strings")]
    pub certificate: Option<Vec<BigInt>>,
    /// For Kronecker verdicts: integers `c_0, …, c_d`, not all zero, with
    /// `c_0 + Σ c_k θ_k = 0`.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "crate::wire::integer_strings")]
    pub dependence: Option<Vec<BigInt>>,
    pub transcript: RankTranscript,
}

/// Rational coordinate vectors of `elems` are linearly independent.
pub fn qlin_independent(elems: &[FieldElement]) -> Result<bool> {
    let Some(first) = elems.first() else {
        return Ok(true);
    };
    let field = first.field();
    for e in elems {
        field.check_same(e.field())?;
    }
    Ok(rank(&coordinate_rows(elems)) == elems.len())
}

/// Row `b` holds coordinate `b` of every element.
fn coordinate_rows(elems: &[FieldElement]) -> Vec<Vec<Rational>> {
    let dim = elems.first().map_or(0, |e| e.field().dimension());
    (0..dim)
        .map(|b| elems.iter().map(|e| e.dense_coords()[b].clone()).collect())
        .collect()
}

/// Scales a nonzero rational vector to a primitive integer vector whose
/// first nonzero entry is positive.
fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = v.iter().map(|r| (r * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    let sign = match ints.iter().find(|n| !n.is_zero()) {
        Some(n) if n.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|n| n / &gcd * &sign).collect()
}

/// `ℤᵈ + θℤ` is dense iff `1, θ_1, …, θ_d` are linearly independent over ℚ.
pub fn kronecker_dense(thetas: &[FieldElement]) -> Result<DensityVerdict> {
    let gs = GeneratorSet::kronecker(thetas)?;
    let field = gs.field();
    let mut elems = vec![FieldElement::one(field)];
    elems.extend_from_slice(thetas);
    let relations = kernel(&coordinate_rows(&elems), elems.len(), &Rational::zero());
    let d = thetas.len();
    let transcript = RankTranscript {
        d,
        generators: d + 1,
        rank: d,
        rational_rowspace_dim: Some(relations.len()),
    };
    Ok(match relations.first() {
        None => DensityVerdict {
            dense: true,
            reason: DensityReason::Dense,
            certificate: None,
            dependence: None,
            transcript,
        },
        Some(rel) => {
            let c = primitive_integer_vector(rel);
            // c_0 + Σ c_k θ_k = 0 puts (c_1, …, c_d, −c_0) in the row space
            let mut n: Vec<BigInt> = c[1..].to_vec();
            n.push(-c[0].clone());
            DensityVerdict {
                dense: false,
                reason: DensityReason::IntegerVectorInRowspace,
                certificate: Some(n),
                dependence: Some(c),
                transcript,
            }
        }
    })
}

/// Exact density decision for `h_1ℤ + ⋯ + h_ℓℤ ⊂ ℝᵈ`.
pub fn subgroup_dense(gs: &GeneratorSet) -> DensityVerdict {
    let h = gs.matrix();
    let ell = gs.generators.len();
    let r = rank(&h);
    let mut transcript = RankTranscript {
        d: gs.d,
        generators: ell,
        rank: r,
        rational_rowspace_dim: None,
    };
    if r < gs.d {
        // A(n) has rank at most r + 1 <= d for every n
        let mut n = vec![BigInt::zero(); ell];
        n[0] = BigInt::one();
        return DensityVerdict {
            dense: false,
            reason: DensityReason::RankDeficient,
            certificate: Some(n),
            dependence: None,
            transcript,
        };
    }

    // n ∈ rowspace(H) iff n·v = 0 for every v in ker(H); each such equation
    // splits into one rational equation per basis coordinate
    let sample = FieldElement::zero(gs.field());
    let null = kernel(&h, ell, &sample);
    let dim = gs.field().dimension();
    let mut system: Vec<Vec<Rational>> = Vec::new();
    for v in &null {
        for b in 0..dim {
            system.push(v.iter().map(|x| x.dense_coords()[b].clone()).collect());
        }
    }
    let solutions = if system.is_empty() {
        (0..ell)
            .map(|j| (0..ell).map(|k| Rational::from_integer(BigInt::from((j == k) as i64))).collect())
            .collect()
    } else {
        kernel(&system, ell, &Rational::zero())
    };
    transcript.rational_rowspace_dim = Some(solutions.len());
    match solutions.first() {
        None => DensityVerdict {
            dense: true,
            reason: DensityReason::Dense,
            certificate: None,
            dependence: None,
            transcript,
        },
        Some(n) => DensityVerdict {
            dense: false,
            reason: DensityReason::IntegerVectorInRowspace,
            certificate: Some(primitive_integer_vector(n)),
            dependence: None,
            transcript,
        },
    }
}

/// Rank of `H` bordered below by the row `n`.
pub fn bordered_rank(gs: &GeneratorSet, n: &[BigInt]) -> Result<usize> {
    if n.len() != gs.generators.len() {
        return Err(Error::Arity {
            expected: gs.generators.len(),
            got: n.len(),
        });
    }
    let mut a = gs.matrix();
    a.push(
        n.iter()
            .map(|c| FieldElement::from_rational(gs.field(), Rational::from_integer(c.clone())))
            .collect(),
    );
    Ok(rank(&a))
}

/// Recomputes a verdict's claim from scratch: a not-dense certificate must
/// be nonzero with `rank(A(n)) <= d`; a dense verdict must show full rank
/// and no rational solutions, and agree with a fresh decision.
pub fn replay_verdict(gs: &GeneratorSet, verdict: &DensityVerdict) -> Result<bool> {
    if verdict.dense {
        let fresh = subgroup_dense(gs);
        return Ok(fresh.dense
            && verdict.certificate.is_none()
            && verdict.transcript.rank == gs.d
            && verdict.transcript.rational_rowspace_dim == Some(0)
            && fresh.transcript == verdict.transcript);
    }
    let Some(n) = &verdict.certificate else {
        return Ok(false);
    };
    if n.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    Ok(bordered_rank(gs, n)? <= gs.d)
}

struct Combinations<'a> {
    gs: &'a GeneratorSet,
    bound: i64,
    approx: Vec<Vec<f64>>,
}

impl Combinations<'_> {
    fn coefficients(&self, mut index: usize) -> Vec<i64> {
        let base = (2 * self.bound + 1) as usize;
        (0..self.approx.len())
            .map(|_| {
                let c = (index % base) as i64 - self.bound;
                index /= base;
                c
            })
            .collect()
    }
}

impl PointSet for Combinations<'_> {
    fn len(&self) -> usize {
        ((2 * self.bound + 1) as usize).pow(self.approx.len() as u32)
    }

    fn for_each_approx(&self, visit: &mut dyn FnMut(usize, &[f64])) {
        let d = self.gs.d;
        let ell = self.approx.len();
        let mut coeffs = vec![-self.bound; ell];
        let mut point = vec![0.0; d];
        for index in 0..self.len() {
            point.iter_mut().for_each(|p| *p = 0.0);
            for (c, g) in coeffs.iter().zip(&self.approx) {
                for (p, x) in point.iter_mut().zip(g) {
                    *p += *c as f64 * x;
                }
            }
            visit(index, &point);
            for c in coeffs.iter_mut() {
                if *c < self.bound {
                    *c += 1;
                    break;
                }
                *c = -self.bound;
            }
        }
    }

    fn exact(&self, index: usize) -> Vec<FieldElement> {
        let field = self.gs.field();
        let mut point = vec![FieldElement::zero(field); self.gs.d];
        for (c, g) in self.coefficients(index).into_iter().zip(&self.gs.generators) {
            if c == 0 {
                continue;
            }
            let c = Rational::from_integer(BigInt::from(c));
            for (p, x) in point.iter_mut().zip(g) {
                *p = &*p + &x.scale(&c);
            }
        }
        point
    }
}

/// ε-coverage of the `grid^d` cell-centre targets of `region` by all
/// integer combinations with coefficients in `[-coef_bound, coef_bound]`.
/// A consistency signal only; the decision is [`subgroup_dense`].
pub fn density_bruteforce_oracle(
    gs: &GeneratorSet,
    region: &BoxRegion,
    eps: &Rational,
    coef_bound: u32,
    grid: usize,
) -> Result<Coverage> {
    if region.dimension() != gs.d {
        return Err(Error::Shape(format!(
            "box has dimension {}, generators have {}",
            region.dimension(),
            gs.d
        )));
    }
    gs.field().check_same(region.lo()[0].field())?;
    let combos = Combinations {
        gs,
        bound: coef_bound as i64,
        approx: gs
            .generators
            .iter()
            .map(|g| g.iter().map(FieldElement::to_f64).collect())
            .collect(),
    };
    grid_coverage(&combos, region, eps, grid)
}

//! Exact finite-difference calculus and generalized polynomials over
//! multiquadratic number fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: ℚ and ℚ(√d₁,…,√d_k) with exact sign determination;
//! * [`polyalg`]: univariate/bivariate polynomials, tensor Lagrange
//!   interpolation, the shear decomposition and root bounds;
//! * [`diffcalc`]: mixed and fixed-step differences, the Fréchet operator
//!   and Djoković's variable-to-fixed-step expansion;
//! * [`genpoly`]: additive maps, symmetric forms, generalized polynomials
//!   and the dense-graph sampler;
//! * [`montel`]: the Montel checker and the orbit-interpolation pipeline;
//! * [`density`]: density of finitely generated subgroups of ℝᵈ.
//!
//! ```
//! use frechet::genpoly::{AdditiveMap, GeneralizedPoly};
//! use frechet::montel::orbit_classify;
//! use frechet::{FieldElement, RadicalField};
//! use std::collections::BTreeMap;
//!
//! let f = RadicalField::new(&[2])?;
//! let one = FieldElement::one(&f);
//! let root2 = FieldElement::basis_vector(&f, 2)?;
//!
//! // a(1) = 1, a(√2) = 0 is additive but not linear
//! let a = AdditiveMap::new(&f, &BTreeMap::from([(1, one.clone()), (2, FieldElement::zero(&f))]))?;
//! let g = GeneralizedPoly::additive_power(&a, 2)?;
//!
//! let report = orbit_classify(&g, &FieldElement::zero(&f), &one, &root2, 2, 8)?;
//! assert_eq!(report.n, 2);
//! # Ok::<(), frechet::Error>(())
//! ```

#![allow(clippy::needless_range_loop)]

pub mod coverage;
pub mod density;
pub mod diffcalc;
pub mod error;
pub mod exactnum;
pub mod genpoly;
pub mod linalg;
pub mod montel;
pub mod polyalg;
pub mod sample;
pub mod wire;

pub use error::{Error, Result};
pub use exactnum::{FieldElement, RadicalField, Rational, Sign};

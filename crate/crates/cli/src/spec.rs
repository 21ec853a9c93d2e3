//! Problem specifications: the JSON schema and its validation.

use std::fmt;

use frechet::density::GeneratorSet;
use frechet::diffcalc::{DjokovicTerm, FunctionHandle};
use frechet::exactnum::{parse_rational, FieldElement, RadicalField, Rational};
use frechet::genpoly::{AdditiveMap, BoxRegion};
use frechet::wire::{
    element_from_wire, AdditiveWire, ElementWire, FieldWire, GenPolyWire, GeneratorSetWire, TableWire, UniPolyWire,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// A spec that could not be parsed, with the location of the problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub path: String,
    pub message: String,
}

impl SpecError {
    fn new(path: impl Into<String>, message: impl fmt::Display) -> Self {
        SpecError {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() || self.path == "." {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for SpecError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    FrechetCheck,
    MontelCheck,
    Popoviciu,
    Classify,
    WitnessSearch,
    GraphSample,
    Sanjuan,
    Density,
    Kronecker,
    DjokovicVerify,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::FrechetCheck,
        Command::MontelCheck,
        Command::Popoviciu,
        Command::Classify,
        Command::WitnessSearch,
        Command::GraphSample,
        Command::Sanjuan,
        Command::Density,
        Command::Kronecker,
        Command::DjokovicVerify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::FrechetCheck => "frechet-check",
            Command::MontelCheck => "montel-check",
            Command::Popoviciu => "popoviciu",
            Command::Classify => "classify",
            Command::WitnessSearch => "witness-search",
            Command::GraphSample => "graph-sample",
            Command::Sanjuan => "sanjuan",
            Command::Density => "density",
            Command::Kronecker => "kronecker",
            Command::DjokovicVerify => "djokovic-verify",
        }
    }

    fn needs_function(self) -> bool {
        !matches!(self, Command::Density | Command::Kronecker)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FunctionWire {
    Unipoly(UniPolyWire),
    Genpoly(GenPolyWire),
    Table(TableWire),
    Additive(AdditiveWire),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecWire {
    pub field: FieldWire,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<FunctionWire>,
    pub command: Command,
    #[serde(default)]
    pub params: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxWire {
    pub lo: Vec<ElementWire>,
    pub hi: Vec<ElementWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrechetCheckWire {
    pub m: usize,
    pub points: Option<Vec<Vec<ElementWire>>>,
    pub trials: Option<usize>,
    pub num_bound: Option<i64>,
    pub den_bound: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MontelCheckWire {
    pub m: usize,
    pub h1: ElementWire,
    pub h2: ElementWire,
    pub xs: Option<Vec<ElementWire>>,
    pub trials: Option<usize>,
    pub num_bound: Option<i64>,
    pub den_bound: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitWire {
    pub m: usize,
    pub x0: ElementWire,
    pub h1: ElementWire,
    pub h2: ElementWire,
    pub window: Option<usize>,
    pub refinements: Option<Vec<(i64, i64)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSearchWire {
    pub m: usize,
    pub candidates: Option<Vec<(ElementWire, ElementWire, ElementWire)>>,
    pub window: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSampleWire {
    pub m: usize,
    pub x0: ElementWire,
    pub h1: ElementWire,
    pub h2: ElementWire,
    pub window: Option<usize>,
    pub num_bound: u64,
    pub den_bound: u64,
    #[serde(rename = "box")]
    pub region: Option<BoxWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SanJuanWire {
    pub x0: ElementWire,
    pub x1: ElementWire,
    pub num_bound: u64,
    pub den_bound: u64,
    #[serde(rename = "box")]
    pub region: Option<BoxWire>,
    pub eps: Option<String>,
    pub grid: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleWire {
    #[serde(rename = "box")]
    pub region: BoxWire,
    pub eps: String,
    pub coef_bound: u32,
    pub grid: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityWire {
    pub d: usize,
    pub generators: Vec<Vec<ElementWire>>,
    pub oracle: Option<OracleWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KroneckerWire {
    pub thetas: Vec<ElementWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermWire {
    pub sign: i8,
    pub step: ElementWire,
    pub shift: ElementWire,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DjokovicWire {
    pub steps: Vec<ElementWire>,
    pub x: ElementWire,
    pub terms: Option<Vec<TermWire>>,
}

/// Trial sampling for randomized checks.
#[derive(Debug, Clone, PartialEq)]
pub struct Sampling {
    pub trials: usize,
    pub num_bound: i64,
    pub den_bound: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Orbit {
    pub m: usize,
    pub x0: FieldElement,
    pub h1: FieldElement,
    pub h2: FieldElement,
    pub window: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Oracle {
    pub region: BoxRegion,
    pub eps: Rational,
    pub coef_bound: u32,
    pub grid: usize,
}

/// Validated, command-specific parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Params {
    FrechetCheck {
        m: usize,
        points: Option<Vec<Vec<FieldElement>>>,
        sampling: Sampling,
    },
    MontelCheck {
        m: usize,
        h1: FieldElement,
        h2: FieldElement,
        xs: Option<Vec<FieldElement>>,
        sampling: Sampling,
    },
    Popoviciu {
        orbit: Orbit,
        refinements: Vec<(i64, i64)>,
    },
    Classify(Orbit),
    WitnessSearch {
        m: usize,
        candidates: Option<Vec<(FieldElement, FieldElement, FieldElement)>>,
        window: Option<usize>,
    },
    GraphSample {
        orbit: Orbit,
        num_bound: u64,
        den_bound: u64,
        region: Option<BoxRegion>,
    },
    Sanjuan {
        x0: FieldElement,
        x1: FieldElement,
        num_bound: u64,
        den_bound: u64,
        coverage: Option<(BoxRegion, Rational, usize)>,
    },
    Density {
        generators: GeneratorSet,
        oracle: Option<Oracle>,
    },
    Kronecker {
        thetas: Vec<FieldElement>,
    },
    DjokovicVerify {
        steps: Vec<FieldElement>,
        x: FieldElement,
        terms: Option<Vec<DjokovicTerm>>,
    },
}

/// The additive map of a spec is kept separately because the San Juan
/// sampler needs it as a map, not only as a function.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub field: RadicalField,
    pub function: Option<FunctionHandle>,
    pub additive: Option<AdditiveMap>,
    pub command: Command,
    pub params: Params,
}

const DEFAULT_TRIALS: usize = 20;
const DEFAULT_NUM_BOUND: i64 = 10;
const DEFAULT_DEN_BOUND: i64 = 6;
const DEFAULT_EPS: (i64, i64) = (1, 20);
const DEFAULT_GRID: usize = 10;

fn lib_error(path: &str) -> impl Fn(frechet::Error) -> SpecError + '_ {
    move |e| match e {
        frechet::Error::At { path: inner, source } => {
            let sep = if inner.starts_with('[') { "" } else { "." };
            SpecError::new(format!("{path}{sep}{inner}"), source)
        }
        other => SpecError::new(path, other),
    }
}

fn typed<T: DeserializeOwned>(value: serde_json::Value, prefix: &str) -> Result<T, SpecError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let inner = e.path().to_string();
        let path = if inner == "." { prefix.to_string() } else { format!("{prefix}.{inner}") };
        SpecError::new(path, e.into_inner())
    })
}

struct Ctx<'a> {
    field: &'a RadicalField,
}

impl Ctx<'_> {
    fn elem(&self, raw: &ElementWire, path: &str) -> Result<FieldElement, SpecError> {
        element_from_wire(self.field, raw).map_err(lib_error(path))
    }

    fn elems(&self, raw: &[ElementWire], path: &str) -> Result<Vec<FieldElement>, SpecError> {
        raw.iter()
            .enumerate()
            .map(|(i, e)| self.elem(e, &format!("{path}[{i}]")))
            .collect()
    }

    fn region(&self, raw: &BoxWire, path: &str) -> Result<BoxRegion, SpecError> {
        let lo = self.elems(&raw.lo, &format!("{path}.lo"))?;
        let hi = self.elems(&raw.hi, &format!("{path}.hi"))?;
        BoxRegion::new(lo, hi).map_err(lib_error(path))
    }

    fn orbit(&self, m: usize, x0: &ElementWire, h1: &ElementWire, h2: &ElementWire, window: Option<usize>) -> Result<Orbit, SpecError> {
        Ok(Orbit {
            m,
            x0: self.elem(x0, "params.x0")?,
            h1: self.elem(h1, "params.h1")?,
            h2: self.elem(h2, "params.h2")?,
            window,
        })
    }
}

fn rational_param(text: &str, path: &str) -> Result<Rational, SpecError> {
    parse_rational(text).map_err(lib_error(path))
}

fn sampling(trials: Option<usize>, num: Option<i64>, den: Option<i64>) -> Result<Sampling, SpecError> {
    let s = Sampling {
        trials: trials.unwrap_or(DEFAULT_TRIALS),
        num_bound: num.unwrap_or(DEFAULT_NUM_BOUND),
        den_bound: den.unwrap_or(DEFAULT_DEN_BOUND),
    };
    if s.num_bound < 1 {
        return Err(SpecError::new("params.num_bound", "must be at least 1"));
    }
    if s.den_bound < 1 {
        return Err(SpecError::new("params.den_bound", "must be at least 1"));
    }
    Ok(s)
}

/// Parses and validates a spec. Every element must lie in the declared
/// field and unknown keys are rejected.
pub fn parse_spec(text: &[u8]) -> Result<ProblemSpec, SpecError> {
    let mut de = serde_json::Deserializer::from_slice(text);
    let raw: SpecWire = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        SpecError::new(if path == "." { String::new() } else { path }, e.into_inner())
    })?;
    de.end().map_err(|e| SpecError::new("", e))?;
    validate(raw)
}

pub fn validate(raw: SpecWire) -> Result<ProblemSpec, SpecError> {
    let field = raw.field.to_field().map_err(lib_error("field"))?;
    let ctx = Ctx { field: &field };

    let mut additive = None;
    let function = match &raw.function {
        None => None,
        Some(FunctionWire::Unipoly(w)) => Some(FunctionHandle::from(w.to_poly(&field).map_err(lib_error("function"))?)),
        Some(FunctionWire::Genpoly(w)) => Some(FunctionHandle::from(w.to_poly(&field).map_err(lib_error("function"))?)),
        Some(FunctionWire::Table(w)) => Some(FunctionHandle::from(w.to_table(&field).map_err(lib_error("function"))?)),
        Some(FunctionWire::Additive(w)) => {
            let a = w.to_map(&field).map_err(lib_error("function"))?;
            additive = Some(a.clone());
            Some(FunctionHandle::from(a))
        }
    };
    if raw.command.needs_function() && function.is_none() {
        return Err(SpecError::new("function", format!("command {} needs a function", raw.command)));
    }
    if raw.command == Command::Sanjuan && additive.is_none() {
        return Err(SpecError::new("function.kind", "sanjuan needs a function of kind \"additive\""));
    }

    let params = raw.params;
    let params = match raw.command {
        Command::FrechetCheck => {
            let w: FrechetCheckWire = typed(params, "params")?;
            let points = match &w.points {
                None => None,
                Some(tuples) => {
                    let mut out = Vec::with_capacity(tuples.len());
                    for (i, t) in tuples.iter().enumerate() {
                        let path = format!("params.points[{i}]");
                        if t.len() != w.m + 1 {
                            return Err(SpecError::new(path, format!("expected {} points, got {}", w.m + 1, t.len())));
                        }
                        out.push(ctx.elems(t, &path)?);
                    }
                    Some(out)
                }
            };
            Params::FrechetCheck {
                m: w.m,
                points,
                sampling: sampling(w.trials, w.num_bound, w.den_bound)?,
            }
        }
        Command::MontelCheck => {
            let w: MontelCheckWire = typed(params, "params")?;
            Params::MontelCheck {
                m: w.m,
                h1: ctx.elem(&w.h1, "params.h1")?,
                h2: ctx.elem(&w.h2, "params.h2")?,
                xs: w.xs.as_deref().map(|xs| ctx.elems(xs, "params.xs")).transpose()?,
                sampling: sampling(w.trials, w.num_bound, w.den_bound)?,
            }
        }
        Command::Popoviciu => {
            let w: OrbitWire = typed(params, "params")?;
            let refinements = w.refinements.clone().unwrap_or_default();
            if let Some(i) = refinements.iter().position(|&(p, q)| p == 0 || q == 0) {
                return Err(SpecError::new(format!("params.refinements[{i}]"), "refinement factors must be nonzero"));
            }
            Params::Popoviciu {
                orbit: ctx.orbit(w.m, &w.x0, &w.h1, &w.h2, w.window)?,
                refinements,
            }
        }
        Command::Classify => {
            let w: OrbitWire = typed(params, "params")?;
            if w.refinements.is_some() {
                return Err(SpecError::new("params.refinements", "unknown field for classify"));
            }
            Params::Classify(ctx.orbit(w.m, &w.x0, &w.h1, &w.h2, w.window)?)
        }
        Command::WitnessSearch => {
            let w: WitnessSearchWire = typed(params, "params")?;
            let candidates = match &w.candidates {
                None => None,
                Some(list) => Some(
                    list.iter()
                        .enumerate()
                        .map(|(i, (x0, h1, h2))| {
                            let p = format!("params.candidates[{i}]");
                            Ok((ctx.elem(x0, &format!("{p}[0]"))?, ctx.elem(h1, &format!("{p}[1]"))?, ctx.elem(h2, &format!("{p}[2]"))?))
                        })
                        .collect::<Result<Vec<_>, SpecError>>()?,
                ),
            };
            Params::WitnessSearch {
                m: w.m,
                candidates,
                window: w.window,
            }
        }
        Command::GraphSample => {
            let w: GraphSampleWire = typed(params, "params")?;
            Params::GraphSample {
                orbit: ctx.orbit(w.m, &w.x0, &w.h1, &w.h2, w.window)?,
                num_bound: w.num_bound,
                den_bound: w.den_bound,
                region: w.region.as_ref().map(|b| ctx.region(b, "params.box")).transpose()?,
            }
        }
        Command::Sanjuan => {
            let w: SanJuanWire = typed(params, "params")?;
            let coverage = match &w.region {
                None => {
                    if w.eps.is_some() || w.grid.is_some() {
                        return Err(SpecError::new("params.box", "eps and grid need a box"));
                    }
                    None
                }
                Some(b) => {
                    let eps = match &w.eps {
                        Some(t) => rational_param(t, "params.eps")?,
                        None => Rational::new(DEFAULT_EPS.0.into(), DEFAULT_EPS.1.into()),
                    };
                    Some((ctx.region(b, "params.box")?, eps, w.grid.unwrap_or(DEFAULT_GRID)))
                }
            };
            Params::Sanjuan {
                x0: ctx.elem(&w.x0, "params.x0")?,
                x1: ctx.elem(&w.x1, "params.x1")?,
                num_bound: w.num_bound,
                den_bound: w.den_bound,
                coverage,
            }
        }
        Command::Density => {
            let w: DensityWire = typed(params, "params")?;
            let gs = GeneratorSetWire {
                d: w.d,
                generators: w.generators.clone(),
            }
            .to_set(&field)
            .map_err(lib_error("params"))?;
            let oracle = match &w.oracle {
                None => None,
                Some(o) => Some(Oracle {
                    region: ctx.region(&o.region, "params.oracle.box")?,
                    eps: rational_param(&o.eps, "params.oracle.eps")?,
                    coef_bound: o.coef_bound,
                    grid: o.grid,
                }),
            };
            Params::Density { generators: gs, oracle }
        }
        Command::Kronecker => {
            let w: KroneckerWire = typed(params, "params")?;
            if w.thetas.is_empty() {
                return Err(SpecError::new("params.thetas", "need at least one θ"));
            }
            Params::Kronecker {
                thetas: ctx.elems(&w.thetas, "params.thetas")?,
            }
        }
        Command::DjokovicVerify => {
            let w: DjokovicWire = typed(params, "params")?;
            if w.steps.is_empty() {
                return Err(SpecError::new("params.steps", "need at least one step"));
            }
            let terms = match &w.terms {
                None => None,
                Some(list) => Some(
                    list.iter()
                        .enumerate()
                        .map(|(i, t)| {
                            let p = format!("params.terms[{i}]");
                            if t.sign != 1 && t.sign != -1 {
                                return Err(SpecError::new(format!("{p}.sign"), "must be 1 or -1"));
                            }
                            Ok(DjokovicTerm {
                                sign: t.sign,
                                step: ctx.elem(&t.step, &format!("{p}.step"))?,
                                shift: ctx.elem(&t.shift, &format!("{p}.shift"))?,
                                order: t.order,
                            })
                        })
                        .collect::<Result<Vec<_>, SpecError>>()?,
                ),
            };
            Params::DjokovicVerify {
                steps: ctx.elems(&w.steps, "params.steps")?,
                x: ctx.elem(&w.x, "params.x")?,
                terms,
            }
        }
    };

    Ok(ProblemSpec {
        field,
        function,
        additive,
        command: raw.command,
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "field": {"radicands": [2]},
        "function": {"kind": "unipoly", "coeffs": [{}, {}, {"1": "1/1"}]},
        "command": "frechet-check",
        "params": {"m": 2}
    }"#;

    #[test]
    fn minimal_spec() {
        let spec = parse_spec(MINIMAL.as_bytes()).unwrap();
        assert_eq!(spec.command, Command::FrechetCheck);
        assert!(matches!(spec.params, Params::FrechetCheck { m: 2, points: None, .. }));
        assert_eq!(spec.field, RadicalField::new(&[2]).unwrap());
    }

    #[test]
    fn non_square_free_radicand() {
        let text = MINIMAL.replace("[2]", "[8]");
        let err = parse_spec(text.as_bytes()).unwrap_err();
        assert_eq!(err.path, "field.radicands");
        assert!(err.message.contains("not square-free (4·2)"), "{err}");
    }

    #[test]
    fn unknown_command_lists_valid_ones() {
        let text = MINIMAL.replace("frechet-check", "foo");
        let err = parse_spec(text.as_bytes()).unwrap_err().to_string();
        assert!(err.contains("foo"));
        for c in Command::ALL {
            assert!(err.contains(c.name()), "{err} lacks {c}");
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = MINIMAL.replace("\"m\": 2", "\"m\": 2, \"colour\": 1");
        let err = parse_spec(text.as_bytes()).unwrap_err();
        assert!(err.to_string().contains("colour"));
        let text = MINIMAL.replace("\"command\"", "\"extra\": 0, \"command\"");
        assert!(parse_spec(text.as_bytes()).is_err());
    }

    #[test]
    fn element_outside_field() {
        let text = MINIMAL.replace("{\"1\": \"1/1\"}", "{\"3\": \"1/1\"}");
        let err = parse_spec(text.as_bytes()).unwrap_err();
        assert_eq!(err.path, "function.coeffs[2]");
        assert!(err.message.contains("basis index 3"));
    }

    #[test]
    fn malformed_json() {
        assert!(parse_spec(b"{\"field\": ").is_err());
        assert!(parse_spec(format!("{MINIMAL} trailing").as_bytes()).is_err());
    }

    #[test]
    fn round_trip_of_schema() {
        let raw: SpecWire = serde_json::from_str(MINIMAL).unwrap();
        let again: SpecWire = serde_json::from_str(&serde_json::to_string(&raw).unwrap()).unwrap();
        assert_eq!(raw, again);
    }

    #[test]
    fn sanjuan_needs_additive() {
        let text = r#"{"field": {"radicands": [2]},
            "function": {"kind": "unipoly", "coeffs": [{}]},
            "command": "sanjuan",
            "params": {"x0": {"1": "1"}, "x1": {"2": "1"}, "num_bound": 1, "den_bound": 1}}"#;
        let err = parse_spec(text.as_bytes()).unwrap_err();
        assert_eq!(err.path, "function.kind");
    }
}

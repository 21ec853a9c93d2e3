//! Result documents written to standard output.
//!
//! Every document carries the command name under `"command"`. Exact values
//! use the element format; keys are emitted in sorted order.

use frechet::density::DensityVerdict;
use frechet::genpoly::Coverage;
use frechet::wire::{BiPolyWire, ElementWire, OrbitReportWire, UniPolyWire};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Output {
    FrechetCheck(FrechetCheckOut),
    MontelCheck(MontelCheckOut),
    Popoviciu(PopoviciuOut),
    Classify(ClassifyOut),
    WitnessSearch(WitnessSearchOut),
    GraphSample(GraphSampleOut),
    Sanjuan(SanJuanOut),
    Density(DensityOut),
    Kronecker(KroneckerOut),
    DjokovicVerify(DjokovicOut),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrechetWitness {
    pub xs: Vec<ElementWire>,
    pub value: ElementWire,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrechetCheckOut {
    pub holds: bool,
    pub m: usize,
    pub checked: usize,
    pub witness: Option<FrechetWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepWitness {
    pub x: ElementWire,
    pub h: ElementWire,
    pub value: ElementWire,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MontelCheckOut {
    pub holds: bool,
    pub m: usize,
    pub checked: usize,
    pub witness: Option<StepWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFailure {
    pub i: i64,
    pub j: i64,
    pub expected: ElementWire,
    pub found: ElementWire,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionOut {
    pub ok: bool,
    pub window: usize,
    pub checked: usize,
    pub failure: Option<ExtensionFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RefinementMismatch {
    pub i: usize,
    pub j: usize,
    pub coarse: ElementWire,
    pub fine: ElementWire,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RefinementOut {
    pub p: i64,
    pub q: i64,
    pub ok: bool,
    pub mismatch: Option<RefinementMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PopoviciuOut {
    pub holds: bool,
    #[serde(rename = "P")]
    pub p: BiPolyWire,
    pub extension: ExtensionOut,
    pub refinements: Vec<RefinementOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyOut {
    pub holds: bool,
    /// `N = 0`: the orbit restriction is an ordinary polynomial in `x + y`.
    pub ordinary: bool,
    pub report: OrbitReportWire,
    pub extension: ExtensionOut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSearchOut {
    pub found: bool,
    pub candidates: usize,
    pub report: Option<OrbitReportWire>,
    /// `A_N` of the witness orbit.
    pub leading: Option<UniPolyWire>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSampleOut {
    pub holds: bool,
    pub report: OrbitReportWire,
    pub extension: ExtensionOut,
    pub points: usize,
    /// Every emitted point satisfies `y = f(x)` exactly.
    pub on_graph: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SanJuanOut {
    pub independent: bool,
    pub discontinuous: bool,
    pub determinant: ElementWire,
    pub points: usize,
    pub coverage: Option<Coverage>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityOut {
    pub dense: bool,
    pub verdict: DensityVerdict,
    pub replayed: bool,
    pub oracle: Option<Coverage>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KroneckerOut {
    pub dense: bool,
    pub verdict: DensityVerdict,
    pub replayed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DjokovicOut {
    pub holds: bool,
    pub lhs: ElementWire,
    pub rhs: ElementWire,
    pub terms: usize,
}

/// Pretty JSON with every object's keys in sorted order.
pub fn render(output: &Output) -> String {
    let value = serde_json::to_value(output).expect("results always serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("values always serialize");
    text.push('\n');
    text
}

//! JSON wire formats for exact values.
//!
//! An element is a map from decimal basis index to a rational string,
//! `{"1": "3/1", "2": "2/1"}` for `3 + 2√2`; zero coordinates are omitted
//! on output. The `*Wire` types mirror the published formats and convert
//! to library values against a given field, reporting the location of any
//! invalid entry.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::density::GeneratorSet;
use crate::diffcalc::TableFunction;
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, FieldElement, RadicalField};
use crate::genpoly::{AdditiveMap, GeneralizedPoly, SymmetricTensor};
use crate::montel::OrbitReport;
use crate::polyalg::{BiPoly, ShearForm, UniPoly};

/// A rational as the string `"p/q"`.
pub mod rational_string {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::exactnum::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

/// An optional integer vector as decimal strings.
pub mod integer_strings {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
        value
            .as_ref()
            .map(|v| v.iter().map(BigInt::to_string).collect::<Vec<_>>())
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<BigInt>>, D::Error> {
        let raw = Option::<Vec<String>>::deserialize(d)?;
        raw.map(|v| {
            v.iter()
                .map(|t| t.parse::<BigInt>().map_err(|_| D::Error::custom(format!("invalid integer {t:?}"))))
                .collect()
        })
        .transpose()
    }
}

pub type ElementWire = BTreeMap<String, String>;

pub fn element_to_wire(x: &FieldElement) -> ElementWire {
    x.coords_over_q()
        .into_iter()
        .map(|(b, c)| (b.to_string(), format_rational(&c)))
        .collect()
}

pub fn element_from_wire(field: &RadicalField, raw: &ElementWire) -> Result<FieldElement> {
    let mut coords = Vec::with_capacity(raw.len());
    for (key, value) in raw {
        let index: u64 = key
            .parse()
            .map_err(|_| Error::Invalid(format!("basis index {key:?} is not a positive integer")).at(format!("[{key:?}]")))?;
        let c = parse_rational(value).map_err(|e| e.at(format!("[{key:?}]")))?;
        coords.push((index, c));
    }
    FieldElement::from_coords(field, coords)
}

fn elements_from_wire(field: &RadicalField, raw: &[ElementWire], name: &str) -> Result<Vec<FieldElement>> {
    raw.iter()
        .enumerate()
        .map(|(i, e)| element_from_wire(field, e).map_err(|err| err.at(format!("{name}[{i}]"))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldWire {
    pub radicands: Vec<i64>,
}

impl FieldWire {
    pub fn from_field(field: &RadicalField) -> Self {
        FieldWire {
            radicands: field.radicands().iter().map(|&r| r as i64).collect(),
        }
    }

    pub fn to_field(&self) -> Result<RadicalField> {
        RadicalField::new(&self.radicands).map_err(|e| e.at("radicands"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniPolyWire {
    pub coeffs: Vec<ElementWire>,
}

impl UniPolyWire {
    pub fn from_poly(p: &UniPoly) -> Self {
        UniPolyWire {
            coeffs: p.coeffs().iter().map(element_to_wire).collect(),
        }
    }

    pub fn to_poly(&self, field: &RadicalField) -> Result<UniPoly> {
        UniPoly::new(field, elements_from_wire(field, &self.coeffs, "coeffs")?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiPolyWire {
    pub m: usize,
    pub coeffs: Vec<Vec<ElementWire>>,
}

impl BiPolyWire {
    pub fn from_poly(p: &BiPoly) -> Self {
        BiPolyWire {
            m: p.bound(),
            coeffs: p.coeffs().iter().map(|row| row.iter().map(element_to_wire).collect()).collect(),
        }
    }

    pub fn to_poly(&self, field: &RadicalField) -> Result<BiPoly> {
        let rows = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(t, row)| elements_from_wire(field, row, &format!("coeffs[{t}]")))
            .collect::<Result<Vec<_>>>()?;
        BiPoly::new(field, self.m, rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShearFormWire {
    pub m: usize,
    /// `components[i]` is `A_i`.
    pub components: Vec<UniPolyWire>,
}

impl ShearFormWire {
    pub fn from_form(form: &ShearForm) -> Self {
        ShearFormWire {
            m: form.bound(),
            components: form.components().iter().map(UniPolyWire::from_poly).collect(),
        }
    }

    pub fn to_form(&self, field: &RadicalField) -> Result<ShearForm> {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_poly(field).map_err(|e| e.at(format!("components[{i}]"))))
            .collect::<Result<Vec<_>>>()?;
        if components.len() > 2 * self.m + 1 {
            return Err(Error::Shape(format!("at most {} components for m = {}", 2 * self.m + 1, self.m)));
        }
        Ok(ShearForm::new(field, self.m, components))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableWire {
    pub entries: Vec<(ElementWire, ElementWire)>,
}

impl TableWire {
    pub fn from_table(t: &TableFunction) -> Self {
        TableWire {
            entries: t.entries().map(|(k, v)| (element_to_wire(k), element_to_wire(v))).collect(),
        }
    }

    pub fn to_table(&self, field: &RadicalField) -> Result<TableFunction> {
        let mut table = TableFunction::new(field, [])?;
        for (i, (k, v)) in self.entries.iter().enumerate() {
            let at = |e: Error| e.at(format!("entries[{i}]"));
            let key = element_from_wire(field, k).map_err(at)?;
            let value = element_from_wire(field, v).map_err(at)?;
            table.insert(key, value).map_err(at)?;
        }
        Ok(table)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormWire {
    pub k: usize,
    pub coeffs: Vec<(Vec<u64>, ElementWire)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenPolyWire {
    pub constant: ElementWire,
    pub forms: Vec<FormWire>,
}

impl GenPolyWire {
    pub fn from_poly(g: &GeneralizedPoly) -> Self {
        GenPolyWire {
            constant: element_to_wire(g.constant()),
            forms: g
                .forms()
                .iter()
                .map(|form| FormWire {
                    k: form.order(),
                    coeffs: form.coeffs().iter().map(|(key, v)| (key.clone(), element_to_wire(v))).collect(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self, field: &RadicalField) -> Result<GeneralizedPoly> {
        let constant = element_from_wire(field, &self.constant).map_err(|e| e.at("constant"))?;
        let mut forms = Vec::with_capacity(self.forms.len());
        for (i, form) in self.forms.iter().enumerate() {
            let at = |e: Error| e.at(format!("forms[{i}]"));
            let entries = form
                .coeffs
                .iter()
                .map(|(key, v)| Ok((key.clone(), element_from_wire(field, v)?)))
                .collect::<Result<Vec<_>>>()
                .map_err(at)?;
            forms.push(SymmetricTensor::new(field, form.k, entries).map_err(at)?);
        }
        GeneralizedPoly::new(constant, forms)
    }
}

/// Images of the basis vectors, keyed by decimal basis index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdditiveWire {
    pub images: BTreeMap<String, ElementWire>,
}

impl AdditiveWire {
    pub fn from_map(a: &AdditiveMap) -> Self {
        AdditiveWire {
            images: a.images().iter().map(|(b, v)| (b.to_string(), element_to_wire(v))).collect(),
        }
    }

    pub fn to_map(&self, field: &RadicalField) -> Result<AdditiveMap> {
        let mut images = BTreeMap::new();
        for (key, raw) in &self.images {
            let at = |e: Error| e.at(format!("images[{key:?}]"));
            let index: u64 = key
                .parse()
                .map_err(|_| at(Error::Invalid(format!("basis index {key:?} is not a positive integer"))))?;
            images.insert(index, element_from_wire(field, raw).map_err(at)?);
        }
        AdditiveMap::new(field, &images).map_err(|e| e.at("images"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSetWire {
    pub d: usize,
    pub generators: Vec<Vec<ElementWire>>,
}

impl GeneratorSetWire {
    pub fn from_set(gs: &GeneratorSet) -> Self {
        GeneratorSetWire {
            d: gs.dimension(),
            generators: gs
                .generators()
                .iter()
                .map(|g| g.iter().map(element_to_wire).collect())
                .collect(),
        }
    }

    pub fn to_set(&self, field: &RadicalField) -> Result<GeneratorSet> {
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| elements_from_wire(field, g, &format!("generators[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(self.d, generators)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitReportWire {
    pub x0: ElementWire,
    pub h1: ElementWire,
    pub h2: ElementWire,
    pub m: usize,
    #[serde(rename = "P")]
    pub p: BiPolyWire,
    pub shear: ShearFormWire,
    #[serde(rename = "N")]
    pub n: usize,
    pub window: usize,
    pub extension_ok: bool,
}

impl OrbitReportWire {
    pub fn from_report(r: &OrbitReport) -> Self {
        OrbitReportWire {
            x0: element_to_wire(&r.x0),
            h1: element_to_wire(&r.h1),
            h2: element_to_wire(&r.h2),
            m: r.m,
            p: BiPolyWire::from_poly(&r.p),
            shear: ShearFormWire::from_form(&r.shear),
            n: r.n,
            window: r.window,
            extension_ok: r.extension_ok,
        }
    }

    pub fn to_report(&self, field: &RadicalField) -> Result<OrbitReport> {
        Ok(OrbitReport {
            x0: element_from_wire(field, &self.x0).map_err(|e| e.at("x0"))?,
            h1: element_from_wire(field, &self.h1).map_err(|e| e.at("h1"))?,
            h2: element_from_wire(field, &self.h2).map_err(|e| e.at("h2"))?,
            m: self.m,
            p: self.p.to_poly(field).map_err(|e| e.at("P"))?,
            shear: self.shear.to_form(field).map_err(|e| e.at("shear"))?,
            n: self.n,
            window: self.window,
            extension_ok: self.extension_ok,
        })
    }
}

pub fn integers_to_wire(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

use indexmap::IndexMap;

use super::Evaluate;
use crate::error::{Error, Result};
use crate::exactnum::{FieldElement, RadicalField};

/// A finite exact map from field points to field values.
#[derive(Debug, Clone, PartialEq)]
pub struct TableFunction {
    field: RadicalField,
    entries: IndexMap<FieldElement, FieldElement>,
}

impl TableFunction {
    /// Rejects duplicate keys and values from another field.
    pub fn new<I>(field: &RadicalField, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FieldElement, FieldElement)>,
    {
        let mut table = TableFunction {
            field: field.clone(),
            entries: IndexMap::new(),
        };
        for (k, v) in entries {
            table.insert(k, v)?;
        }
        Ok(table)
    }

    /// Tabulates `f` on `points`, skipping repeated points.
    pub fn tabulate<F, I>(field: &RadicalField, points: I, mut f: F) -> Result<Self>
    where
        F: FnMut(&FieldElement) -> Result<FieldElement>,
        I: IntoIterator<Item = FieldElement>,
    {
        let mut table = TableFunction::new(field, [])?;
        for p in points {
            if !table.entries.contains_key(&p) {
                let v = f(&p)?;
                table.insert(p, v)?;
            }
        }
        Ok(table)
    }

    pub fn insert(&mut self, key: FieldElement, value: FieldElement) -> Result<()> {
        self.field.check_same(key.field())?;
        self.field.check_same(value.field())?;
        if self.entries.contains_key(&key) {
            return Err(Error::DuplicateKey(key.to_string()));
        }
        self.entries.insert(key, value);
        Ok(())
    }

    /// Overwrites the value at an existing key.
    pub fn set(&mut self, key: &FieldElement, value: FieldElement) -> Result<()> {
        match self.entries.get_mut(key) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(Error::TableMiss(key.to_string())),
        }
    }

    pub fn field(&self) -> &RadicalField {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        self.entries.contains_key(x)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&FieldElement, &FieldElement)> {
        self.entries.iter()
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        self.field.check_same(x.field())?;
        self.entries.get(x).cloned().ok_or_else(|| Error::TableMiss(x.to_string()))
    }
}

impl Evaluate for TableFunction {
    fn field(&self) -> &RadicalField {
        &self.field
    }
    fn evaluate(&self, x: &FieldElement) -> Result<FieldElement> {
        self.eval(x)
    }
}

//! JSON file formats. Scalars are strings in the field's grammar; sparse
//! tables are lists of `[i, j, [[k, "c"], ...]]` sorted by `(i, j)` and `k`
//! with zero coefficients dropped, so serialization is canonical.

use std::collections::{BTreeMap, BTreeSet};

use h2coord::{
    Algebra, BilinearTable, Convention, Element, Error, FieldSpec, GradedBracketAlgebra, GradedTables,
    LinearMap, Scalar,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub type SparseEntry = (usize, usize, Vec<(usize, String)>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub structure: Vec<SparseEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub elements: BTreeMap<String, Vec<String>>,
    /// Linear maps as lists of image columns.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketFile {
    pub field: String,
    pub s0_dim: usize,
    pub s1_dim: usize,
    pub names: Vec<String>,
    pub convention: String,
    pub unit: Vec<String>,
    pub p00: Vec<SparseEntry>,
    pub p01: Vec<SparseEntry>,
    pub p11: Vec<SparseEntry>,
    pub b00: Vec<SparseEntry>,
    pub b01: Vec<SparseEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b11: Option<Vec<SparseEntry>>,
}

/// A decoded [`AlgebraFile`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedAlgebra {
    pub algebra: Algebra,
    pub elements: BTreeMap<String, Element>,
    pub maps: BTreeMap<String, LinearMap>,
}

impl LoadedAlgebra {
    /// A named element, falling back to a basis vector of that name.
    pub fn lookup(&self, name: &str) -> Option<Element> {
        self.elements.get(name).cloned().or_else(|| {
            self.algebra
                .names()
                .iter()
                .position(|n| n == name)
                .map(|i| self.algebra.basis(i))
        })
    }
}

fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    text.parse::<FieldSpec>().map_err(CliError::input)
}

fn scalars(field: FieldSpec, texts: &[String]) -> Result<Vec<Scalar>, CliError> {
    texts
        .iter()
        .map(|t| field.parse_scalar(t).map_err(CliError::input))
        .collect()
}

fn strings(values: &[Scalar]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn check_len(expected: usize, found: usize) -> Result<(), CliError> {
    if expected == found {
        Ok(())
    } else {
        Err(CliError::input(Error::DimensionMismatch { expected, found }))
    }
}

fn sparse_from_dense<F>(rows: usize, cols: usize, mut value: F) -> Vec<SparseEntry>
where
    F: FnMut(usize, usize) -> Vec<Scalar>,
{
    let mut out = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let terms: Vec<(usize, String)> = value(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.to_string()))
                .collect();
            if !terms.is_empty() {
                out.push((i, j, terms));
            }
        }
    }
    out
}

/// Decodes sparse entries into dense `(i, j) → vector` values, rejecting
/// duplicate keys and out-of-range indices.
fn dense_from_sparse(
    field: FieldSpec,
    entries: &[SparseEntry],
    shape: (usize, usize, usize),
) -> Result<BTreeMap<(usize, usize), Vec<Scalar>>, CliError> {
    let (rows, cols, out) = shape;
    let mut map = BTreeMap::new();
    for (i, j, terms) in entries {
        for (idx, dim) in [(*i, rows), (*j, cols)] {
            if idx >= dim {
                return Err(CliError::input(Error::IndexOutOfRange { index: idx, dim }));
            }
        }
        let mut v = vec![field.zero(); out];
        let mut seen = BTreeSet::new();
        for (k, c) in terms {
            if *k >= out {
                return Err(CliError::input(Error::IndexOutOfRange { index: *k, dim: out }));
            }
            if !seen.insert(*k) {
                return Err(CliError::input(Error::DuplicateEntry(*i, *j)));
            }
            v[*k] = field.parse_scalar(c).map_err(CliError::input)?;
        }
        if map.insert((*i, *j), v).is_some() {
            return Err(CliError::input(Error::DuplicateEntry(*i, *j)));
        }
    }
    Ok(map)
}

impl AlgebraFile {
    pub fn from_algebra(alg: &Algebra, elements: &[(&str, &Element)], maps: &[(&str, &LinearMap)]) -> Self {
        let n = alg.dim();
        let structure = sparse_from_dense(n, n, |i, j| alg.structure_vector(i, j).into_coords());
        let mut named: BTreeMap<String, Vec<String>> = elements
            .iter()
            .map(|(k, v)| (k.to_string(), strings(v.coords())))
            .collect();
        if let Some(u) = alg.unit() {
            named
                .entry(String::from("unit"))
                .or_insert_with(|| strings(u.coords()));
        }
        AlgebraFile {
            field: alg.field().to_string(),
            dim: n,
            basis: alg.names().to_vec(),
            structure,
            elements: named,
            maps: maps
                .iter()
                .map(|(k, m)| {
                    let cols = (0..m.in_dim()).map(|j| strings(m.column(j).coords())).collect();
                    (k.to_string(), cols)
                })
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<LoadedAlgebra, CliError> {
        let field = parse_field(&self.field)?;
        check_len(self.dim, self.basis.len())?;
        let n = self.dim;
        let dense = dense_from_sparse(field, &self.structure, (n, n, n))?;
        let entries = dense.into_iter().map(|(key, v)| {
            let terms = v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect::<Vec<_>>();
            (key, terms)
        });
        let mut algebra = Algebra::new(field, self.basis.clone(), entries).map_err(CliError::input)?;
        let mut elements = BTreeMap::new();
        for (name, coords) in &self.elements {
            check_len(n, coords.len())?;
            elements.insert(name.clone(), Element::new(scalars(field, coords)?));
        }
        if let Some(u) = elements.get("unit") {
            algebra = algebra.with_unit(u.clone()).map_err(CliError::math)?;
        }
        let mut maps = BTreeMap::new();
        for (name, cols) in &self.maps {
            check_len(n, cols.len())?;
            let mut images = Vec::with_capacity(n);
            for c in cols {
                check_len(n, c.len())?;
                images.push(Element::new(scalars(field, c)?));
            }
            maps.insert(name.clone(), LinearMap::from_columns(field, n, &images));
        }
        Ok(LoadedAlgebra {
            algebra,
            elements,
            maps,
        })
    }
}

fn table_to_sparse(t: &BilinearTable) -> Vec<SparseEntry> {
    let (rows, cols, _) = t.shape();
    sparse_from_dense(rows, cols, |i, j| t.get(i, j).to_vec())
}

fn table_from_sparse(
    field: FieldSpec,
    entries: &[SparseEntry],
    shape: (usize, usize, usize),
) -> Result<BilinearTable, CliError> {
    let mut t = BilinearTable::zero(field, shape.0, shape.1, shape.2);
    for ((i, j), v) in dense_from_sparse(field, entries, shape)? {
        t.set(i, j, v).map_err(CliError::input)?;
    }
    Ok(t)
}

impl BracketFile {
    pub fn from_graded(s: &GradedBracketAlgebra) -> Self {
        let t = s.tables();
        BracketFile {
            field: s.field().to_string(),
            s0_dim: s.even_dim(),
            s1_dim: s.odd_dim(),
            names: s.names().to_vec(),
            convention: String::from(s.convention().as_str()),
            unit: strings(&s.unit_even_coords()),
            p00: table_to_sparse(&t.p00),
            p01: table_to_sparse(&t.p01),
            p11: table_to_sparse(&t.p11),
            b00: table_to_sparse(&t.b00),
            b01: table_to_sparse(&t.b01),
            b11: t.b11.as_ref().map(table_to_sparse),
        }
    }

    pub fn to_graded(&self) -> Result<GradedBracketAlgebra, CliError> {
        let field = parse_field(&self.field)?;
        let (d0, d1) = (self.s0_dim, self.s1_dim);
        check_len(d0 + d1, self.names.len())?;
        check_len(d0, self.unit.len())?;
        let convention = Convention::parse(&self.convention)
            .ok_or_else(|| CliError::Input(format!("unknown convention `{}`", self.convention)))?;
        let tables = GradedTables {
            p00: table_from_sparse(field, &self.p00, (d0, d0, d0))?,
            p01: table_from_sparse(field, &self.p01, (d0, d1, d1))?,
            p11: table_from_sparse(field, &self.p11, (d1, d1, d0))?,
            b00: table_from_sparse(field, &self.b00, (d0, d0, d1))?,
            b01: table_from_sparse(field, &self.b01, (d0, d1, d0))?,
            b11: self
                .b11
                .as_ref()
                .map(|e| table_from_sparse(field, e, (d1, d1, d1)))
                .transpose()?,
        };
        let unit = scalars(field, &self.unit)?;
        GradedBracketAlgebra::new(field, self.names.clone(), d0, tables, unit, convention)
            .map_err(CliError::math)
    }
}

/// Canonical text: objects one key per line, flat arrays on one line, and
/// arrays of arrays one item per line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("file types serialize");
    let mut s = String::new();
    write_value(&v, 0, &mut s);
    s.push('\n');
    s
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent + 2);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(item, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&item.to_string());
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed JSON: {e}")))
}

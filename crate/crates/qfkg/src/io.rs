//! JSON / text interchange formats.
//!
//! Every parser here is total on arbitrary input: malformed bytes yield
//! [`Error::Json`] or [`Error::Parse`], never a panic. These are the
//! entry points exercised by the fuzz targets.
//!
//! Formats:
//!
//! * poset — `{"elements": ["a","b"], "covers": [["a","b"], [0,1]]}`
//!   (cover endpoints may be element names or 0-based indices);
//! * complex — `{"vertices": ["x","y"], "facets": [["x","y"], [1]]}`;
//! * instance — `{"poset": …, "mu": {…}, "g": {…}, "h": {…}, "s": 1, "t": 2}`
//!   where the three tables are keyed by ideal (comma-joined member labels,
//!   `""` for the empty ideal) and must cover every ideal exactly;
//! * polynomial — `["1", "3/2", 0, 2]` (rational strings or integers),
//!   index = degree;
//! * partition — `"3,1"` / `"0"` / `""`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::lattice::{IdealLattice, Lattice, DEFAULT_MAX_LATTICE};
use crate::partition::Partition;
use crate::poly::QPolynomial;
use crate::poset::Poset;
use crate::rat::{format_q, parse_q, Q};
use crate::tables::{FuncTable, WeightTable};
use serde::Deserialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// An element reference inside a JSON document: either its label or its
/// 0-based index into the enclosing element list.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ElementRef {
    Index(u64),
    Name(String),
}

impl ElementRef {
    fn resolve(&self, labels: &[String], what: &str) -> Result<usize> {
        match self {
            ElementRef::Index(i) => {
                let i = usize::try_from(*i)
                    .map_err(|_| Error::Parse(format!("{what} index {i} out of range")))?;
                if i < labels.len() {
                    Ok(i)
                } else {
                    Err(Error::Parse(format!(
                        "{what} index {i} out of range (have {} elements)",
                        labels.len()
                    )))
                }
            }
            ElementRef::Name(name) => labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::Parse(format!("unknown {what} name {name:?}"))),
        }
    }
}

/// A rational constant: `"3/2"`, `"-5"`, or a JSON integer.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RatRef {
    Int(i64),
    Text(String),
}

impl RatRef {
    fn resolve(&self) -> Result<Q> {
        match self {
            RatRef::Int(n) => Ok(Q::from_integer((*n).into())),
            RatRef::Text(s) => parse_q(s),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetJson {
    elements: Vec<String>,
    covers: Vec<(ElementRef, ElementRef)>,
}

impl PosetJson {
    fn build(&self) -> Result<Poset> {
        let mut covers = Vec::with_capacity(self.covers.len());
        for (a, b) in &self.covers {
            covers.push((
                a.resolve(&self.elements, "cover")?,
                b.resolve(&self.elements, "cover")?,
            ));
        }
        Poset::from_covers(self.elements.clone(), &covers)
    }
}

/// Parse a poset from its JSON description.
pub fn parse_poset_json(text: &str) -> Result<Poset> {
    let doc: PosetJson = serde_json::from_str(text)?;
    doc.build()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    vertices: Vec<String>,
    facets: Vec<Vec<ElementRef>>,
}

/// Parse a simplicial complex from its JSON description.
pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    let doc: ComplexJson = serde_json::from_str(text)?;
    let mut facets = Vec::with_capacity(doc.facets.len());
    for facet in &doc.facets {
        let mut members = Vec::with_capacity(facet.len());
        for v in facet {
            members.push(v.resolve(&doc.vertices, "vertex")?);
        }
        facets.push(members);
    }
    SimplicialComplex::from_facets(doc.vertices, &facets)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceJson {
    poset: PosetJson,
    mu: BTreeMap<String, RatRef>,
    g: BTreeMap<String, RatRef>,
    h: BTreeMap<String, RatRef>,
    #[serde(default)]
    s: Option<u32>,
    #[serde(default)]
    t: Option<u32>,
    #[serde(default)]
    max_elements: Option<usize>,
}

/// A fully specified verification input: the lattice of ideals of `poset`
/// together with a weight and two test functions on it, plus optional
/// chain-weight exponents.
#[derive(Debug, Clone)]
pub struct Instance {
    pub poset: Poset,
    pub lattice: IdealLattice,
    pub mu: WeightTable,
    pub g: FuncTable,
    pub h: FuncTable,
    pub s: Option<u32>,
    pub t: Option<u32>,
}

fn table_values(
    lat: &IdealLattice,
    map: &BTreeMap<String, RatRef>,
    what: &str,
) -> Result<Vec<Q>> {
    if map.len() != lat.len() {
        let known: Vec<String> = (0..lat.len()).map(|x| lat.ideal_key(x)).collect();
        if let Some(extra) = map.keys().find(|k| !known.contains(k)) {
            return Err(Error::Parse(format!(
                "{what} table key {extra:?} is not an ideal of the poset"
            )));
        }
    }
    let mut values = Vec::with_capacity(lat.len());
    for x in 0..lat.len() {
        let key = lat.ideal_key(x);
        let entry = map.get(&key).ok_or_else(|| {
            Error::Parse(format!("{what} table is missing ideal {key:?}"))
        })?;
        values.push(entry.resolve()?);
    }
    if map.len() != lat.len() {
        return Err(Error::Parse(format!(
            "{what} table has {} entries but the lattice has {} ideals",
            map.len(),
            lat.len()
        )));
    }
    Ok(values)
}

/// Parse an instance document, materializing its ideal lattice (at most
/// `max_elements` ideals, which the document may lower but not raise).
pub fn parse_instance_json_capped(text: &str, max_elements: usize) -> Result<Instance> {
    let doc: InstanceJson = serde_json::from_str(text)?;
    let poset = doc.poset.build()?;
    let cap = doc.max_elements.unwrap_or(max_elements).min(max_elements);
    let lattice = IdealLattice::from_poset_capped(&poset, cap)?;
    let mu = WeightTable::new(table_values(&lattice, &doc.mu, "mu")?)?;
    let g = FuncTable::new(table_values(&lattice, &doc.g, "g")?);
    let h = FuncTable::new(table_values(&lattice, &doc.h, "h")?);
    if let (Some(s), Some(t)) = (doc.s, doc.t) {
        if s > t {
            return Err(Error::BadExponents {
                s: s as i64,
                t: t as i64,
            });
        }
    }
    Ok(Instance {
        poset,
        lattice,
        mu,
        g,
        h,
        s: doc.s,
        t: doc.t,
    })
}

/// [`parse_instance_json_capped`] with the default lattice size cap.
pub fn parse_instance_json(text: &str) -> Result<Instance> {
    parse_instance_json_capped(text, DEFAULT_MAX_LATTICE)
}

/// Parse a polynomial given as a JSON array of coefficients
/// (constant term first), each a rational string or an integer.
pub fn parse_polynomial_json(text: &str) -> Result<QPolynomial> {
    let doc: Vec<RatRef> = serde_json::from_str(text)?;
    let mut coeffs = Vec::with_capacity(doc.len());
    for c in &doc {
        coeffs.push(c.resolve()?);
    }
    Ok(QPolynomial::from_coeffs(coeffs))
}

/// Parse a partition from text such as `"4,2,1"` (empty, `"0"`, and `"()"`
/// all denote the empty partition). Surrounding whitespace is ignored.
pub fn parse_partition_text(text: &str) -> Result<Partition> {
    Partition::parse(text.trim())
}

/// Serialize an ideal lattice: each element as its sorted member-label
/// list, plus ranks and cover pairs (indices into `elements`).
pub fn lattice_to_json(lat: &IdealLattice) -> Value {
    let elements: Vec<Value> = (0..lat.len())
        .map(|x| {
            Value::Array(
                lat.members(x)
                    .into_iter()
                    .map(|i| Value::String(lat.poset().label(i).to_string()))
                    .collect(),
            )
        })
        .collect();
    let ranks: Vec<usize> = (0..lat.len()).map(|x| lat.rank(x)).collect();
    let mut covers = Vec::new();
    for x in 0..lat.len() {
        for &y in lat.upper_covers(x) {
            covers.push(json!([x, y]));
        }
    }
    json!({
        "elements": elements,
        "ranks": ranks,
        "covers": covers,
    })
}

/// Serialize a weight or function table keyed the way instances expect.
pub fn table_to_json(lat: &IdealLattice, values: &[Q]) -> Value {
    let map: BTreeMap<String, String> = (0..lat.len().min(values.len()))
        .map(|x| (lat.ideal_key(x), format_q(&values[x])))
        .collect();
    json!(map)
}

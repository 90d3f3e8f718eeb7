//! Body files, report serialization, and canonical digests.
//!
//! Scalars travel as strings (`"p"` or `"p/q"`), never as floats, so a
//! file round-trips exactly; serialized reports carry both the exact
//! coefficient and a 12-significant-digit rendering of every value.  JSON
//! objects serialize with sorted keys, making every serialization
//! byte-deterministic.  Canonical digests are SHA-256 over the canonical
//! vertex list and identify a body independently of the vertex rotation
//! it was entered with.
//!
//! The body-file format is one JSON object:
//!
//! ```json
//! {
//!   "dim": 2,
//!   "vertices": [["3/2", "0"], ["0", "1"], ["-1", "-1"]],
//!   "lattice": [["1", "0"], ["0", "1"]],
//!   "meta": {"label": "worked example"}
//! }
//! ```
//!
//! `lattice` (planar bodies only) and `meta` are optional.

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::descent::{DeformationKind, DescentCertificate, EventKind};
use crate::geom::{ConvexPolygon, Point2};
use crate::invariants::{CheckStatus, InvariantReport};
use crate::lattice::{AvoidanceCertificate, IntegerLine, Lattice2};
use crate::scalar::{self, Scalar};
use crate::simplex::SimplexN;
use crate::torus::SystolicReport;
use crate::{Error, Result};

/// A body of either supported kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BodyKind {
    Polygon(ConvexPolygon),
    Simplex(SimplexN),
}

/// One parsed (or to-be-serialized) body file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BodyFile {
    pub body: BodyKind,
    /// Optional lattice; only meaningful for planar bodies.
    pub lattice: Option<Lattice2>,
    /// Free-form metadata, preserved through round trips.
    pub meta: Map<String, Value>,
}

impl BodyFile {
    pub fn polygon(p: ConvexPolygon) -> Self {
        BodyFile { body: BodyKind::Polygon(p), lattice: None, meta: Map::new() }
    }

    pub fn simplex(s: SimplexN) -> Self {
        BodyFile { body: BodyKind::Simplex(s), lattice: None, meta: Map::new() }
    }

    pub fn with_lattice(mut self, lattice: Lattice2) -> Self {
        self.lattice = Some(lattice);
        self
    }

    /// The planar body, if this file holds one.
    pub fn as_polygon(&self) -> Option<&ConvexPolygon> {
        match &self.body {
            BodyKind::Polygon(p) => Some(p),
            BodyKind::Simplex(_) => None,
        }
    }

    /// The simplex, if this file holds one.
    pub fn as_simplex(&self) -> Option<&SimplexN> {
        match &self.body {
            BodyKind::Polygon(_) => None,
            BodyKind::Simplex(s) => Some(s),
        }
    }
}

/// Hex SHA-256 digest of the canonical form of a polygon.
///
/// Two inputs digest equal exactly when they are the same body: the
/// constructor already rotates the vertex list to start at the
/// lexicographically smallest vertex, and coordinates are serialized in
/// lowest terms.
pub fn body_digest(p: &ConvexPolygon) -> String {
    let mut hasher = Sha256::new();
    hasher.update(b"polygon/2\n");
    for v in p.vertices() {
        hasher.update(scalar::to_string(&v.x).as_bytes());
        hasher.update(b" ");
        hasher.update(scalar::to_string(&v.y).as_bytes());
        hasher.update(b"\n");
    }
    format!("{:x}", hasher.finalize())
}

/// Serialize a body file as pretty-printed JSON with sorted keys.
pub fn serialize_body(file: &BodyFile) -> String {
    let mut root = Map::new();
    match &file.body {
        BodyKind::Polygon(p) => {
            root.insert("dim".into(), 2u32.into());
            root.insert("vertices".into(), polygon_rows(p));
        }
        BodyKind::Simplex(s) => {
            root.insert("dim".into(), (s.dim() as u64).into());
            let rows: Vec<Value> = s
                .vertices()
                .iter()
                .map(|row| {
                    Value::from(
                        row.iter()
                            .map(|x| Value::from(scalar::to_string(x)))
                            .collect::<Vec<_>>(),
                    )
                })
                .collect();
            root.insert("vertices".into(), rows.into());
        }
    }
    if let Some(lattice) = &file.lattice {
        let (b1, b2) = lattice.basis();
        root.insert(
            "lattice".into(),
            vec![point_row(b1), point_row(b2)].into(),
        );
    }
    if !file.meta.is_empty() {
        root.insert("meta".into(), Value::Object(file.meta.clone()));
    }
    let mut out = String::new();
    write_pretty(&mut out, &Value::Object(root), 0);
    out
}

/// Pretty-print with one twist: an array of scalars stays on one line, so a
/// vertex row reads `["3/2", "0"]` while the row list itself is expanded.
fn write_pretty(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Array(items) if !items.is_empty() => {
            if items.iter().all(|x| !matches!(x, Value::Array(_) | Value::Object(_))) {
                out.push('[');
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    out.push_str(&x.to_string());
                }
                out.push(']');
            } else {
                out.push_str("[\n");
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(",\n");
                    }
                    out.push_str(&" ".repeat(indent + 2));
                    write_pretty(out, x, indent + 2);
                }
                out.push('\n');
                out.push_str(&" ".repeat(indent));
                out.push(']');
            }
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, val)) in map.iter().enumerate() {
                if i > 0 {
                    out.push_str(",\n");
                }
                out.push_str(&" ".repeat(indent + 2));
                out.push_str(&Value::from(key.as_str()).to_string());
                out.push_str(": ");
                write_pretty(out, val, indent + 2);
            }
            out.push('\n');
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn point_row(p: &Point2) -> Value {
    vec![
        Value::from(scalar::to_string(&p.x)),
        Value::from(scalar::to_string(&p.y)),
    ]
    .into()
}

fn polygon_rows(p: &ConvexPolygon) -> Value {
    p.vertices().iter().map(point_row).collect::<Vec<_>>().into()
}

fn field_err(what: &str) -> Error {
    Error::Parse(what.into())
}

fn parse_scalar_at(v: &Value, place: &str) -> Result<Scalar> {
    let s = v
        .as_str()
        .ok_or_else(|| field_err(&format!("{place}: scalars must be strings")))?;
    scalar::parse(s).map_err(|e| field_err(&format!("{place}: {e}")))
}

/// Parse a body file.
///
/// Rejects unknown top-level keys, malformed scalars (with the offending
/// field named), and vertex lists that fail strict convexity (the error
/// names the offending vertex triple).
pub fn parse_body(text: &str) -> Result<BodyFile> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| field_err(&format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| field_err("top level must be a JSON object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "dim" | "vertices" | "lattice" | "meta") {
            return Err(field_err(&format!("unknown key {key:?}")));
        }
    }
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| field_err("dim: missing or not a positive integer"))? as usize;
    if dim < 2 {
        return Err(field_err("dim: must be at least 2"));
    }
    let rows = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| field_err("vertices: missing or not an array"))?;
    let mut parsed: Vec<Vec<Scalar>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| field_err(&format!("vertices[{i}]: not an array")))?;
        if cells.len() != dim {
            return Err(field_err(&format!(
                "vertices[{i}]: expected {dim} coordinates, got {}",
                cells.len()
            )));
        }
        let mut coords = Vec::with_capacity(dim);
        for (j, cell) in cells.iter().enumerate() {
            coords.push(parse_scalar_at(cell, &format!("vertices[{i}][{j}]"))?);
        }
        parsed.push(coords);
    }
    let body = if dim == 2 {
        let points = parsed
            .into_iter()
            .map(|row| Point2::new(row[0].clone(), row[1].clone()))
            .collect();
        BodyKind::Polygon(ConvexPolygon::new(points)?)
    } else {
        BodyKind::Simplex(SimplexN::new(parsed)?)
    };
    let lattice = match obj.get("lattice") {
        None => None,
        Some(v) => {
            if !matches!(body, BodyKind::Polygon(_)) {
                return Err(field_err("lattice: only supported for dim 2"));
            }
            let rows = v
                .as_array()
                .filter(|r| r.len() == 2)
                .ok_or_else(|| field_err("lattice: expected two basis vectors"))?;
            let mut basis = Vec::with_capacity(2);
            for (i, row) in rows.iter().enumerate() {
                let cells = row
                    .as_array()
                    .filter(|c| c.len() == 2)
                    .ok_or_else(|| field_err(&format!("lattice[{i}]: expected two coordinates")))?;
                basis.push(Point2::new(
                    parse_scalar_at(&cells[0], &format!("lattice[{i}][0]"))?,
                    parse_scalar_at(&cells[1], &format!("lattice[{i}][1]"))?,
                ));
            }
            let b2 = basis.pop().expect("two rows checked");
            let b1 = basis.pop().expect("two rows checked");
            Some(Lattice2::new(b1, b2)?)
        }
    };
    let meta = match obj.get("meta") {
        None => Map::new(),
        Some(v) => v
            .as_object()
            .cloned()
            .ok_or_else(|| field_err("meta: must be an object"))?,
    };
    Ok(BodyFile { body, lattice, meta })
}

/// JSON rendering of one exact value: the exact coefficient plus a
/// 12-significant-digit decimal.
pub fn scalar_value(x: &Scalar) -> Value {
    let mut m = Map::new();
    m.insert("exact".into(), scalar::to_string(x).into());
    m.insert("approx".into(), format!("{:.11e}", scalar::to_f64(x)).into());
    Value::Object(m)
}

fn opt_scalar_value(x: &Option<Scalar>) -> Value {
    match x {
        Some(v) => scalar_value(v),
        None => Value::Null,
    }
}

fn line_value(l: &IntegerLine) -> Value {
    vec![Value::from(l.m), Value::from(l.n)].into()
}

/// JSON rendering of an unavoidability certificate.
pub fn avoidance_certificate_value(c: &AvoidanceCertificate) -> Value {
    let mut m = Map::new();
    m.insert("unavoidable".into(), c.unavoidable.into());
    m.insert(
        "witness".into(),
        c.witness.as_ref().map(line_value).unwrap_or(Value::Null),
    );
    m.insert(
        "dual_interior_points".into(),
        c.dual_interior_points
            .iter()
            .map(line_value)
            .collect::<Vec<_>>()
            .into(),
    );
    Value::Object(m)
}

/// JSON rendering of an invariant report.
pub fn invariant_report_value(r: &InvariantReport) -> Value {
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            let mut m = Map::new();
            m.insert("name".into(), e.name.clone().into());
            m.insert("value".into(), opt_scalar_value(&e.value));
            m.insert("bound".into(), e.bound.clone().into());
            m.insert(
                "status".into(),
                match e.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "fail",
                    CheckStatus::NotApplicable => "not-applicable",
                }
                .into(),
            );
            m.insert(
                "note".into(),
                e.note.clone().map(Value::from).unwrap_or(Value::Null),
            );
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("body_digest".into(), r.body_digest.clone().into());
    m.insert("entries".into(), entries.into());
    Value::Object(m)
}

/// JSON rendering of a descent certificate.
pub fn descent_certificate_value(c: &DescentCertificate) -> Value {
    let steps: Vec<Value> = c
        .steps
        .iter()
        .map(|s| {
            let mut m = Map::new();
            m.insert("start".into(), polygon_rows(&s.start));
            m.insert("vertex_index".into(), (s.vd.vertex_index as u64).into());
            m.insert("direction".into(), point_row(&s.vd.direction));
            m.insert("slope".into(), scalar_value(&s.vd.slope));
            m.insert(
                "kind".into(),
                match s.vd.kind {
                    DeformationKind::Weight0 => "weight0",
                    DeformationKind::Weight1 => "weight1",
                }
                .into(),
            );
            m.insert("tau_plus".into(), opt_scalar_value(&s.tau_plus));
            m.insert("t_origin".into(), opt_scalar_value(&s.t_origin));
            m.insert("t_stop".into(), scalar_value(&s.t_stop));
            m.insert(
                "event".into(),
                match s.event {
                    EventKind::VertexMerge => "vertex-merge",
                    EventKind::WeightIncrease => "weight-increase",
                }
                .into(),
            );
            m.insert("end".into(), polygon_rows(&s.end));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("steps".into(), steps.into());
    m.insert("terminal".into(), polygon_rows(&c.terminal));
    m.insert("terminal_area".into(), scalar_value(&c.terminal_area));
    m.insert("is_minimal".into(), c.is_minimal.into());
    m.insert(
        "strategy_log".into(),
        c.strategy_log
            .iter()
            .map(|s| Value::from(s.clone()))
            .collect::<Vec<_>>()
            .into(),
    );
    Value::Object(m)
}

/// JSON rendering of a systolic report.
pub fn systolic_report_value(r: &SystolicReport) -> Value {
    let mut m = Map::new();
    m.insert("systole".into(), scalar_value(&r.systole));
    m.insert("ht_area_times_pi".into(), scalar_value(&r.ht_area_times_pi));
    m.insert("bh_area_over_pi".into(), opt_scalar_value(&r.bh_area_over_pi));
    m.insert("defect_general".into(), scalar_value(&r.defect_general));
    m.insert(
        "defect_reversible".into(),
        opt_scalar_value(&r.defect_reversible),
    );
    m.insert("general_holds".into(), r.general_holds().into());
    m.insert("general_is_equality".into(), r.general_is_equality().into());
    m.insert(
        "reversible_holds".into(),
        r.reversible_holds().map(Value::from).unwrap_or(Value::Null),
    );
    m.insert(
        "reversible_is_equality".into(),
        r.reversible_is_equality()
            .map(Value::from)
            .unwrap_or(Value::Null),
    );
    m.insert(
        "zoll".into(),
        r.zoll.map(Value::from).unwrap_or(Value::Null),
    );
    Value::Object(m)
}

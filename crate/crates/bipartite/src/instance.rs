//! JSON instance files.
//!
//! Coordinates are strings or JSON numbers; both are read through their
//! decimal text, so `0.1` is exactly one tenth.

use std::collections::BTreeSet;

use bipartite_core::{Ball, GeomError, Mode, Point2, Scalar, Segment};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown kind {0:?}; expected segments, disks or balls")]
    UnknownKind(String),
    #[error("unknown mode {0:?}; expected closed or open")]
    UnknownMode(String),
    #[error("item {id}: {field} is not an exact number: {text}")]
    BadNumber { id: u64, field: &'static str, text: String },
    #[error("item {id}: expected {want} coordinates, got {got}")]
    Arity { id: u64, want: usize, got: usize },
    #[error("item {id}: {source}")]
    Geom { id: u64, source: GeomError },
    #[error("duplicate id {0}")]
    DuplicateId(u64),
    #[error("balls need a positive dim")]
    MissingDim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Segments { mode: Mode, items: Vec<Segment> },
    Disks { items: Vec<Ball> },
    Balls { dim: usize, items: Vec<Ball> },
}

#[derive(Deserialize, Serialize)]
struct RawInstance {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    items: Vec<RawItem>,
}

#[derive(Deserialize, Serialize)]
struct RawItem {
    id: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<Value>,
}

fn number(id: u64, field: &'static str, v: &Value) -> Result<Scalar, InstanceError> {
    let text = match v {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    };
    text.parse().map_err(|_| InstanceError::BadNumber { id, field, text })
}

fn coords(id: u64, field: &'static str, v: Option<&Vec<Value>>, want: usize) -> Result<Vec<Scalar>, InstanceError> {
    let v = v.ok_or(InstanceError::Arity { id, want, got: 0 })?;
    if v.len() != want {
        return Err(InstanceError::Arity { id, want, got: v.len() });
    }
    v.iter().map(|x| number(id, field, x)).collect()
}

fn ball(item: &RawItem, dim: usize) -> Result<Ball, InstanceError> {
    let id = item.id;
    let c = coords(id, "c", item.c.as_ref(), dim)?;
    let r = number(id, "r", item.r.as_ref().unwrap_or(&Value::Null))?;
    Ball::new(id, c, r).map_err(|source| InstanceError::Geom { id, source })
}

fn text(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

impl Instance {
    pub fn parse(json: &str) -> Result<Self, InstanceError> {
        let raw: RawInstance = serde_json::from_str(json)?;
        let mut seen = BTreeSet::new();
        for it in &raw.items {
            if !seen.insert(it.id) {
                return Err(InstanceError::DuplicateId(it.id));
            }
        }
        match raw.kind.as_str() {
            "segments" => {
                let mode = match raw.mode.as_deref() {
                    None | Some("closed") => Mode::Closed,
                    Some("open") => Mode::Open,
                    Some(other) => return Err(InstanceError::UnknownMode(other.to_string())),
                };
                let items = raw
                    .items
                    .iter()
                    .map(|it| {
                        let p = coords(it.id, "p", it.p.as_ref(), 2)?;
                        let q = coords(it.id, "q", it.q.as_ref(), 2)?;
                        let [px, py]: [Scalar; 2] = p.try_into().expect("two coordinates");
                        let [qx, qy]: [Scalar; 2] = q.try_into().expect("two coordinates");
                        Segment::new(it.id, Point2::new(px, py), Point2::new(qx, qy))
                            .map_err(|source| InstanceError::Geom { id: it.id, source })
                    })
                    .collect::<Result<_, _>>()?;
                Ok(Instance::Segments { mode, items })
            }
            "disks" => Ok(Instance::Disks { items: raw.items.iter().map(|it| ball(it, 2)).collect::<Result<_, _>>()? }),
            "balls" => {
                let dim = raw.dim.filter(|&d| d > 0).ok_or(InstanceError::MissingDim)?;
                Ok(Instance::Balls { dim, items: raw.items.iter().map(|it| ball(it, dim)).collect::<Result<_, _>>()? })
            }
            other => Err(InstanceError::UnknownKind(other.to_string())),
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            Instance::Segments { mode, items } => RawInstance {
                kind: "segments".into(),
                mode: Some(if *mode == Mode::Open { "open" } else { "closed" }.into()),
                dim: None,
                items: items
                    .iter()
                    .map(|s| RawItem {
                        id: s.id(),
                        p: Some(vec![text(&s.p().x), text(&s.p().y)]),
                        q: Some(vec![text(&s.q().x), text(&s.q().y)]),
                        c: None,
                        r: None,
                    })
                    .collect(),
            },
            Instance::Disks { items } | Instance::Balls { items, .. } => RawInstance {
                kind: if matches!(self, Instance::Disks { .. }) { "disks" } else { "balls" }.into(),
                mode: None,
                dim: match self {
                    Instance::Balls { dim, .. } => Some(*dim),
                    _ => None,
                },
                items: items
                    .iter()
                    .map(|b| RawItem {
                        id: b.id(),
                        p: None,
                        q: None,
                        c: Some(b.center().iter().map(text).collect()),
                        r: Some(text(b.radius())),
                    })
                    .collect(),
            },
        };
        serde_json::to_string(&raw).expect("instance serializes")
    }

    pub fn len(&self) -> usize {
        match self {
            Instance::Segments { items, .. } => items.len(),
            Instance::Disks { items } | Instance::Balls { items, .. } => items.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Segments { .. } => "segments",
            Instance::Disks { .. } => "disks",
            Instance::Balls { .. } => "balls",
        }
    }
}

//! Verdict documents in JSON.

use std::collections::BTreeMap;

use bipartite_core::{Color, Provenance, Report, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorName {
    Red,
    Blue,
}

/// Flat verdict document: `result` is `bipartite` with `colors`, or
/// `odd_cycle` with `cycle`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub result: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colors: Option<BTreeMap<String, ColorName>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<u64>>,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub perturbed: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("invalid verdict JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown provenance {0:?}")]
    Provenance(String),
    #[error("malformed verdict: {0}")]
    Shape(String),
}

impl VerdictDoc {
    pub fn from_report(r: &Report) -> Self {
        let mut doc = VerdictDoc {
            result: String::new(),
            colors: None,
            cycle: None,
            provenance: r.provenance.as_str().to_string(),
            perturbed: r.perturbed,
        };
        match &r.verdict {
            Verdict::Bipartite { colors } => {
                doc.result = "bipartite".into();
                doc.colors = Some(
                    colors
                        .iter()
                        .map(|(&id, &c)| (id.to_string(), if c == Color::Red { ColorName::Red } else { ColorName::Blue }))
                        .collect(),
                );
            }
            Verdict::OddCycle { cycle } => {
                doc.result = "odd_cycle".into();
                doc.cycle = Some(cycle.clone());
            }
        }
        doc
    }

    pub fn to_report(&self) -> Result<Report, DocError> {
        let verdict = match (self.result.as_str(), &self.colors, &self.cycle) {
            ("bipartite", Some(colors), None) => Verdict::Bipartite {
                colors: colors
                    .iter()
                    .map(|(id, &c)| {
                        let id = id.parse().map_err(|_| DocError::Shape(format!("bad id {id:?}")))?;
                        Ok((id, if c == ColorName::Red { Color::Red } else { Color::Blue }))
                    })
                    .collect::<Result<_, DocError>>()?,
            },
            ("odd_cycle", None, Some(cycle)) => Verdict::OddCycle { cycle: cycle.clone() },
            _ => return Err(DocError::Shape(format!("unexpected result {:?}", self.result))),
        };
        let provenance =
            Provenance::parse(&self.provenance).ok_or_else(|| DocError::Provenance(self.provenance.clone()))?;
        Ok(Report { verdict, provenance, perturbed: self.perturbed })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }

    pub fn parse(json: &str) -> Result<Self, DocError> {
        Ok(serde_json::from_str(json)?)
    }
}

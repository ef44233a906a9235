//! Verdicts and their independent validation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::geom::{Mode, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    /// Even parity is red, odd is blue.
    pub fn from_parity_bit(bit: u8) -> Self {
        if bit & 1 == 0 {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Bipartite { colors: BTreeMap<u64, Color> },
    OddCycle { cycle: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("object {0} has no color")]
    Uncolored(u64),
    #[error("color given for unknown object {0}")]
    UnknownColored(u64),
    #[error("objects {0} and {1} intersect but share a color")]
    Monochromatic(u64, u64),
    #[error("cycle length {0} is not odd and at least 3")]
    BadLength(usize),
    #[error("object {0} is not in the instance")]
    UnknownObject(u64),
    #[error("object {0} repeats in the cycle")]
    Repeated(u64),
    #[error("consecutive cycle objects {0} and {1} do not intersect")]
    NotAdjacent(u64, u64),
}

impl Verdict {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Verdict::Bipartite { .. })
    }

    /// Checks the witness against `objects` with exact predicates only.
    pub fn validate<S: Shape>(&self, objects: &[S], mode: Mode) -> Result<(), WitnessError> {
        match self {
            Verdict::Bipartite { colors } => {
                let mut col = Vec::with_capacity(objects.len());
                for o in objects {
                    col.push(*colors.get(&o.id()).ok_or(WitnessError::Uncolored(o.id()))?);
                }
                if colors.len() != objects.len() {
                    let known: BTreeSet<u64> = objects.iter().map(|o| o.id()).collect();
                    if let Some(id) = colors.keys().find(|id| !known.contains(id)) {
                        return Err(WitnessError::UnknownColored(*id));
                    }
                }
                for i in 0..objects.len() {
                    for j in i + 1..objects.len() {
                        if col[i] == col[j] && objects[i].intersects(&objects[j], mode) {
                            return Err(WitnessError::Monochromatic(objects[i].id(), objects[j].id()));
                        }
                    }
                }
                Ok(())
            }
            Verdict::OddCycle { cycle } => {
                if cycle.len() < 3 || cycle.len() % 2 == 0 {
                    return Err(WitnessError::BadLength(cycle.len()));
                }
                let index: BTreeMap<u64, usize> = objects.iter().enumerate().map(|(i, o)| (o.id(), i)).collect();
                let mut seen = BTreeSet::new();
                let mut members = Vec::with_capacity(cycle.len());
                for &id in cycle {
                    let i = *index.get(&id).ok_or(WitnessError::UnknownObject(id))?;
                    if !seen.insert(id) {
                        return Err(WitnessError::Repeated(id));
                    }
                    members.push(i);
                }
                for k in 0..members.len() {
                    let a = members[k];
                    let b = members[(k + 1) % members.len()];
                    if !objects[a].intersects(&objects[b], mode) {
                        return Err(WitnessError::NotAdjacent(objects[a].id(), objects[b].id()));
                    }
                }
                Ok(())
            }
        }
    }
}

/// Which code path produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Sweep,
    Generic,
    BallsCap,
    Oracle,
    OracleFallback,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Sweep => "sweep",
            Provenance::Generic => "generic",
            Provenance::BallsCap => "balls-cap",
            Provenance::Oracle => "oracle",
            Provenance::OracleFallback => "oracle-fallback",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Provenance::Sweep, Provenance::Generic, Provenance::BallsCap, Provenance::Oracle, Provenance::OracleFallback]
            .into_iter()
            .find(|p| p.as_str() == s)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub verdict: Verdict,
    pub provenance: Provenance,
    /// The sweep ran on an exactly rewritten copy of the input.
    pub perturbed: bool,
}

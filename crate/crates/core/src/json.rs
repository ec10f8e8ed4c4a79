//! JSON space format: `{"points": [...], "opens": [[...], ...]}`, with
//! `"subbasis"` accepted in place of `"opens"`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SpaceError;
use crate::pointset::PointSet;
use crate::space::FiniteSpace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Points {
    Labels(Vec<String>),
    Count(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub points: Points,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbasis: Option<Vec<Vec<usize>>>,
}

impl SpaceJson {
    pub fn from_space(s: &FiniteSpace) -> Self {
        let points = (0..s.carrier_size()).map(|x| s.label(x)).collect();
        let opens = s.opens().iter().map(|u| u.iter().collect()).collect();
        SpaceJson { points: Points::Labels(points), opens: Some(opens), subbasis: None }
    }

    pub fn to_space(&self) -> Result<FiniteSpace, SpaceError> {
        let (n, labels) = match &self.points {
            Points::Labels(l) => (l.len(), Some(l.clone())),
            Points::Count(n) => (*n, None),
        };
        let sets = |fam: &[Vec<usize>]| -> Result<Vec<PointSet>, SpaceError> {
            fam.iter().map(|pts| PointSet::from_points(n, pts.iter().copied())).collect()
        };
        let space = match (&self.opens, &self.subbasis) {
            (Some(opens), None) => FiniteSpace::from_open_sets(n, &sets(opens)?)?,
            (None, Some(sub)) => FiniteSpace::from_subbasis(n, &sets(sub)?)?,
            _ => return Err(SpaceError::Format("exactly one of `opens` and `subbasis` is required".into())),
        };
        match labels {
            Some(l) => space.with_labels(l),
            None => Ok(space),
        }
    }
}

/// Parses a space, reporting syntax errors with line and column.
pub fn parse_space(text: &str) -> Result<FiniteSpace, SpaceError> {
    let raw: SpaceJson = serde_json::from_str(text)
        .map_err(|e| SpaceError::Format(format!("line {} column {}: {e}", e.line(), e.column())))?;
    raw.to_space()
}

pub fn space_to_json(s: &FiniteSpace) -> String {
    serde_json::to_string_pretty(&SpaceJson::from_space(s)).expect("space serializes")
}

impl Serialize for FiniteSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SpaceJson::from_space(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteSpace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        SpaceJson::deserialize(d)?.to_space().map_err(D::Error::custom)
    }
}

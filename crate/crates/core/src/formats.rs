//! JSON interchange formats and graph input parsing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{parse_graph6, AdjacencyJson, Graph};
use crate::subset::{GroundSet, Subset};
use crate::transit::TransitFunction;

/// Version of every JSON document the command line emits.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub u: usize,
    pub v: usize,
    pub set: Vec<usize>,
}

/// `{"n": 3, "labels": ["a","b","c"], "entries": [{"u": 0, "v": 2, "set": [0,1,2]}]}`
///
/// Pairs left out default to `{u, v}`. Only non-default pairs are written.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub entries: Vec<EntryJson>,
}

impl From<&TransitFunction> for TransitJson {
    fn from(r: &TransitFunction) -> Self {
        TransitJson {
            n: r.len(),
            labels: r.ground().labels().map(|l| l.to_vec()),
            entries: r.entries().into_iter().map(|(u, v, s)| EntryJson { u, v, set: s.to_vec() }).collect(),
        }
    }
}

impl TryFrom<TransitJson> for TransitFunction {
    type Error = Error;

    fn try_from(j: TransitJson) -> Result<Self> {
        let ground = match j.labels {
            Some(labels) => {
                if labels.len() != j.n {
                    return Err(Error::InvalidLabels(format!("{} labels for n = {}", labels.len(), j.n)));
                }
                GroundSet::with_labels(labels)?
            }
            None => GroundSet::new(j.n)?,
        };
        let entries =
            j.entries.iter().map(|e| Ok((e.u, e.v, Subset::from_indices(&e.set, j.n)?))).collect::<Result<Vec<_>>>()?;
        TransitFunction::new(ground, entries)
    }
}

pub fn transit_from_json(text: &str) -> Result<TransitFunction> {
    let j: TransitJson = serde_json::from_str(text)?;
    TransitFunction::try_from(j)
}

pub fn transit_to_json(r: &TransitFunction) -> String {
    serde_json::to_string(&TransitJson::from(r)).expect("plain data serializes")
}

/// Reads a graph given either as graph6 or as adjacency JSON.
pub fn graph_from_text(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.starts_with('{') {
        let j: AdjacencyJson = serde_json::from_str(t)?;
        Graph::try_from(j)
    } else {
        parse_graph6(t)
    }
}

/// One graph per nonblank line of a graph6 corpus.
pub fn graphs_from_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| parse_graph6(l.trim())).collect()
}

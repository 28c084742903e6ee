//! Serializable (graph, labeling, weights, verdict) bundles for external audit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_graph, serialize_graph};
use crate::labeling::{weigh, Labeling};

/// Everything an external auditor needs to re-check a labeling claim.
/// Field order is the stable JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Edge-list serialization of the labeled graph.
    pub graph: String,
    /// `labeling[v]` is the label of vertex `v`.
    pub labeling: Vec<usize>,
    /// `weights[v]` is the neighbor-label sum of vertex `v`.
    pub weights: Vec<u64>,
    pub valid: bool,
    pub colors: usize,
    /// Which construction produced the labeling, including any index-reading
    /// adjustments it applied.
    pub provenance: String,
}

impl Certificate {
    pub fn build(g: &Graph, f: &Labeling, provenance: impl Into<String>) -> Result<Certificate> {
        let profile = weigh(g, f)?;
        Ok(Certificate {
            graph: serialize_graph(g),
            labeling: f.labels().to_vec(),
            valid: profile.is_valid(),
            weights: profile.weights,
            colors: profile.distinct_count,
            provenance: provenance.into(),
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        parse_graph(&self.graph)
    }

    pub fn labeling(&self) -> Result<Labeling> {
        Labeling::new(self.labeling.clone())
    }

    /// Recomputes the profile from the embedded graph and labeling and checks
    /// that it reproduces the embedded one exactly.
    pub fn reverify(&self) -> Result<()> {
        let g = self.graph()?;
        let f = self.labeling()?;
        let profile = weigh(&g, &f)?;
        if profile.weights != self.weights {
            return Err(Error::SelfCheck("embedded weights do not reproduce".into()));
        }
        if profile.is_valid() != self.valid || profile.distinct_count != self.colors {
            return Err(Error::SelfCheck("embedded verdict does not reproduce".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }
}

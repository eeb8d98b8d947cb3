use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{PartSizes, PartitionedGraph};
use crate::patterns::{contains_c3, contains_c4multi, enumerate_c4multi, PatternKind};
use crate::TOOL_VERSION;

use super::ForbiddenSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Turan(ForbiddenSet),
    AntiRamsey,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Graph(PartitionedGraph),
    Coloring(EdgeColoring),
}

impl Witness {
    pub fn to_text(&self) -> String {
        match self {
            Witness::Graph(g) => g.to_text(),
            Witness::Coloring(c) => c.to_text(),
        }
    }
}

/// Optimum of an exact search together with a witness attaining it.
#[derive(Debug, Clone)]
pub struct SearchCertificate {
    pub problem: Problem,
    pub parts: PartSizes,
    pub value: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub bound_proof: Option<String>,
}

impl SearchCertificate {
    /// Checks the witness from scratch: its size equals the value and none
    /// of the excluded structures occur.
    pub fn reverify(&self) -> Result<()> {
        match (&self.problem, &self.witness) {
            (Problem::Turan(forbid), Witness::Graph(g)) => {
                g.audit()?;
                if g.edge_count() != self.value {
                    return Err(Error::Invariant(format!(
                        "witness has {} edges, certificate claims {}",
                        g.edge_count(),
                        self.value
                    )));
                }
                if forbid.c4multi {
                    if let Some(copy) = contains_c4multi(g) {
                        return Err(Error::Invariant(format!("witness contains {copy}")));
                    }
                }
                if forbid.c3 {
                    if let Some(copy) = contains_c3(g) {
                        return Err(Error::Invariant(format!("witness contains {copy}")));
                    }
                }
                Ok(())
            }
            (Problem::AntiRamsey, Witness::Coloring(c)) => {
                c.audit()?;
                if c.color_count() != self.value {
                    return Err(Error::Invariant(format!(
                        "witness uses {} colours, certificate claims {}",
                        c.color_count(),
                        self.value
                    )));
                }
                if let Some(copy) = enumerate_c4multi(c.host()).into_iter().find(|k| k.is_rainbow(c)) {
                    return Err(Error::Invariant(format!("witness has a rainbow {copy}")));
                }
                Ok(())
            }
            _ => Err(Error::Invariant("witness kind does not match the problem".into())),
        }
    }

    pub fn document(&self) -> CertificateDocument {
        let (problem, forbidden, pattern) = match &self.problem {
            Problem::Turan(f) => ("exact-turan", Some(f.names()), None),
            Problem::AntiRamsey => ("anti-ramsey", None, Some(PatternKind::C4Multi.to_string())),
        };
        CertificateDocument {
            problem: problem.to_string(),
            parts: self.parts.input_sizes(),
            forbidden,
            pattern,
            value: self.value,
            witness: self.witness.to_text(),
            nodes_explored: self.nodes_explored,
            elapsed_ms: self.elapsed.as_millis() as u64,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.document()).expect("certificate serializes")
    }
}

/// Serialized form of a [`SearchCertificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub problem: String,
    pub parts: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forbidden: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pattern: Option<String>,
    pub value: usize,
    pub witness: String,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    pub tool_version: String,
}

impl CertificateDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    /// Rebuilds the certificate; call [`SearchCertificate::reverify`] on the
    /// result to audit it.
    pub fn into_certificate(self) -> Result<SearchCertificate> {
        let parts = PartSizes::new(&self.parts)?;
        let (problem, witness) = match self.problem.as_str() {
            "exact-turan" => {
                let names = self
                    .forbidden
                    .ok_or_else(|| Error::Precondition("exact-turan certificate without `forbidden`".into()))?;
                let forbid: ForbiddenSet = names.join(",").parse()?;
                (Problem::Turan(forbid), Witness::Graph(PartitionedGraph::from_text(&self.witness)?))
            }
            "anti-ramsey" => (
                Problem::AntiRamsey,
                Witness::Coloring(EdgeColoring::from_text(&self.witness)?),
            ),
            other => return Err(Error::Precondition(format!("unknown problem `{other}`"))),
        };
        let witness_parts = match &witness {
            Witness::Graph(g) => g.parts(),
            Witness::Coloring(c) => c.parts(),
        };
        if *witness_parts != parts {
            return Err(Error::Invariant("witness parts differ from certificate parts".into()));
        }
        Ok(SearchCertificate {
            problem,
            parts,
            value: self.value,
            witness,
            nodes_explored: self.nodes_explored,
            elapsed: Duration::from_millis(self.elapsed_ms),
            bound_proof: None,
        })
    }
}

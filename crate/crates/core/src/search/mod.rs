//! Exact optimisers with re-checkable certificates, plus the single-part
//! edge bound and representing subgraphs.

mod anti_ramsey;
mod certificate;
mod lemma1;
pub(crate) mod space;
mod turan;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{PartSizes, PartitionedGraph};

pub use certificate::{CertificateDocument, Problem, SearchCertificate, Witness};
pub use lemma1::{check_lemma1_premise, lemma1_bound, Lemma1Outcome, Lemma1Variant};

use anti_ramsey::ArSearch;
use space::EdgeSpace;
use turan::TuranSearch;

pub const DEFAULT_VERTEX_CAP: usize = 12;
pub const DEFAULT_EDGE_CAP: usize = 16;
pub const DEFAULT_COPY_CAP: usize = 1_000_000;
pub const DEFAULT_SPLIT_DEPTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads; 0 uses the ambient rayon pool.
    pub threads: usize,
    /// Branch decisions taken before the tree is split into parallel subtrees.
    pub split_depth: usize,
    /// Largest `n1 + n2 + n3` accepted by [`exact_turan`].
    pub vertex_cap: usize,
    /// Largest host edge count accepted by [`exact_anti_ramsey`].
    pub edge_cap: usize,
    /// Largest number of precomputed 4-cycle copies.
    pub copy_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            threads: 0,
            split_depth: DEFAULT_SPLIT_DEPTH,
            vertex_cap: DEFAULT_VERTEX_CAP,
            edge_cap: DEFAULT_EDGE_CAP,
            copy_cap: DEFAULT_COPY_CAP,
        }
    }
}

impl SearchConfig {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub(crate) fn install<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        if self.threads == 0 {
            return Ok(job());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::Invariant(format!("cannot start worker pool: {e}")))?;
        Ok(pool.install(job))
    }
}

/// Patterns excluded from a Turán subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ForbiddenSet {
    pub c3: bool,
    pub c4multi: bool,
}

impl ForbiddenSet {
    pub const C4MULTI: ForbiddenSet = ForbiddenSet { c3: false, c4multi: true };
    pub const C3_C4MULTI: ForbiddenSet = ForbiddenSet { c3: true, c4multi: true };

    pub fn new(c3: bool, c4multi: bool) -> Result<Self> {
        if !c3 && !c4multi {
            return Err(Error::Precondition("forbidden set must be nonempty".into()));
        }
        Ok(ForbiddenSet { c3, c4multi })
    }

    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.c4multi {
            out.push("c4multi".to_string());
        }
        if self.c3 {
            out.push("c3".to_string());
        }
        out
    }
}

impl fmt::Display for ForbiddenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names().join(","))
    }
}

impl FromStr for ForbiddenSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut c3, mut c4) = (false, false);
        for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            match name {
                "c3" => c3 = true,
                "c4multi" => c4 = true,
                other => {
                    return Err(Error::Precondition(format!(
                        "cannot forbid `{other}`; choose from c3, c4multi"
                    )))
                }
            }
        }
        ForbiddenSet::new(c3, c4)
    }
}

pub fn exact_turan(parts: &PartSizes, forbid: ForbiddenSet) -> Result<SearchCertificate> {
    exact_turan_with(parts, forbid, &SearchConfig::default())
}

/// Largest subgraph of the complete 3-partite host avoiding `forbid`.
///
/// Among optimal subgraphs the witness is the one whose edge list, read in
/// branching order (`V1-V2`, `V1-V3`, `V2-V3`), is lexicographically
/// smallest; it does not depend on the thread count.
pub fn exact_turan_with(parts: &PartSizes, forbid: ForbiddenSet, config: &SearchConfig) -> Result<SearchCertificate> {
    parts.require_tripartite()?;
    if parts.total() > config.vertex_cap {
        return Err(Error::CapExceeded {
            what: "vertex count n1+n2+n3",
            cap: config.vertex_cap,
            required: parts.total(),
        });
    }
    let started = Instant::now();
    let space = EdgeSpace::new(parts)?;
    let mut copies = Vec::new();
    if forbid.c4multi {
        copies.extend(space.c4_masks(config.copy_cap)?);
    }
    if forbid.c3 {
        copies.extend(space.c3_masks());
    }
    let search = TuranSearch::new(&space, copies);
    let outcome = config.install(|| search.run(config.split_depth, 0))?;
    let witness = space.graph_of(outcome.mask);
    let certificate = SearchCertificate {
        problem: Problem::Turan(forbid),
        parts: parts.clone(),
        value: outcome.value,
        witness: crate::search::Witness::Graph(witness),
        nodes_explored: outcome.nodes,
        elapsed: started.elapsed(),
        bound_proof: Some(format!(
            "exhaustive branch and bound over {} host edges: every pruned subtree had an upper bound \
             at most {} ({} nodes)",
            space.len(),
            outcome.value,
            outcome.nodes
        )),
    };
    certificate.reverify()?;
    Ok(certificate)
}

pub fn exact_anti_ramsey(parts: &PartSizes) -> Result<SearchCertificate> {
    exact_anti_ramsey_with(parts, &SearchConfig::default())
}

/// Most colours on the complete 3-partite host with no rainbow
/// multipartite 4-cycle.
///
/// The witness is the lexicographically smallest optimal restricted-growth
/// string in branching order, renumbered into canonical edge order.
pub fn exact_anti_ramsey_with(parts: &PartSizes, config: &SearchConfig) -> Result<SearchCertificate> {
    parts.require_tripartite()?;
    let edges = parts.complete_edge_count();
    if edges > config.edge_cap {
        return Err(Error::CapExceeded {
            what: "host edge count",
            cap: config.edge_cap,
            required: edges,
        });
    }
    let started = Instant::now();
    let space = EdgeSpace::new(parts)?;
    let search = ArSearch::new(&space, space.c4_masks(config.copy_cap)?);
    let known = search.greedy_value(10_000);
    let outcome = config.install(|| search.run(config.split_depth, known))?;
    let mut colors = vec![0u32; space.len()];
    for (k, e) in space.edges.iter().enumerate() {
        let canonical = space.host.edges().position(|x| x == *e).expect("host edge");
        colors[canonical] = outcome.colors[k] as u32;
    }
    let witness = EdgeColoring::from_colors(parts.clone(), &colors)?;
    let certificate = SearchCertificate {
        problem: Problem::AntiRamsey,
        parts: parts.clone(),
        value: outcome.value,
        witness: Witness::Coloring(witness),
        nodes_explored: outcome.nodes,
        elapsed: started.elapsed(),
        bound_proof: Some(format!(
            "exhaustive restricted-growth enumeration over {} host edges, seeded at {} colours: \
             every pruned subtree had an upper bound at most {} ({} nodes)",
            space.len(),
            known,
            outcome.value,
            outcome.nodes
        )),
    };
    certificate.reverify()?;
    Ok(certificate)
}

/// Spanning subgraph keeping the canonically smallest edge of every colour.
pub fn representing_subgraph(coloring: &EdgeColoring) -> PartitionedGraph {
    let edges = coloring.classes().into_iter().map(|class| class[0]);
    PartitionedGraph::from_edges(coloring.parts().clone(), edges).expect("host edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_ar_lower_coloring;
    use crate::graph::{Edge, VertexRef};

    fn parts(s: &[usize]) -> PartSizes {
        PartSizes::new(s).unwrap()
    }

    #[test]
    fn turan_small_cases() {
        assert_eq!(exact_turan(&parts(&[1, 1, 1]), ForbiddenSet::C4MULTI).unwrap().value, 3);
        assert_eq!(exact_turan(&parts(&[2, 1, 1]), ForbiddenSet::C4MULTI).unwrap().value, 4);
        assert_eq!(exact_turan(&parts(&[2, 2, 2]), ForbiddenSet::C3_C4MULTI).unwrap().value, 6);
    }

    #[test]
    fn anti_ramsey_small_cases() {
        assert_eq!(exact_anti_ramsey(&parts(&[1, 1, 1])).unwrap().value, 3);
        assert_eq!(exact_anti_ramsey(&parts(&[2, 1, 1])).unwrap().value, 4);
        assert_eq!(exact_anti_ramsey(&parts(&[2, 2, 1])).unwrap().value, 6);
    }

    #[test]
    fn caps_refuse() {
        let err = exact_turan(&parts(&[5, 4, 4]), ForbiddenSet::C4MULTI).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { required: 13, cap: 12, .. }));
        let err = exact_anti_ramsey(&parts(&[3, 3, 2])).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { required: 21, .. }));
        assert!(matches!(
            exact_turan(&parts(&[1, 1, 1, 1]), ForbiddenSet::C4MULTI),
            Err(Error::NotTripartite(4))
        ));
    }

    #[test]
    fn forbidden_set_parsing() {
        assert_eq!("c4multi".parse::<ForbiddenSet>().unwrap(), ForbiddenSet::C4MULTI);
        assert_eq!("c4multi,c3".parse::<ForbiddenSet>().unwrap(), ForbiddenSet::C3_C4MULTI);
        assert_eq!(ForbiddenSet::C3_C4MULTI.to_string(), "c4multi,c3");
        assert!("".parse::<ForbiddenSet>().is_err());
        assert!("c5".parse::<ForbiddenSet>().is_err());
    }

    #[test]
    fn representing_subgraphs() {
        let p = parts(&[2, 2, 2]);
        let full = representing_subgraph(&EdgeColoring::rainbow(p.clone()));
        assert_eq!(full, PartitionedGraph::complete(p.clone()));
        let one = representing_subgraph(&EdgeColoring::monochromatic(p.clone()));
        assert_eq!(one.edges().collect::<Vec<_>>(), vec![Edge::new(VertexRef::new(0, 0), VertexRef::new(1, 0)).unwrap()]);
        let rep = representing_subgraph(&build_ar_lower_coloring(2, 2, 2).unwrap());
        assert_eq!(rep.edge_count(), 7);
        assert_eq!(rep.edges_between(0, 1), 4);
        assert_eq!(rep.edges_between(1, 2), 1);
        for k in 0..2 {
            assert_eq!(rep.degree_into(VertexRef::new(2, k), 0), 1);
        }
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = exact_turan(&parts(&[2, 2, 1]), ForbiddenSet::C3_C4MULTI).unwrap();
        let doc = CertificateDocument::from_json(&cert.to_json()).unwrap();
        assert_eq!(doc, cert.document());
        let back = doc.into_certificate().unwrap();
        back.reverify().unwrap();
        assert_eq!(back.value, 5);

        let cert = exact_anti_ramsey(&parts(&[2, 1, 1])).unwrap();
        let back = CertificateDocument::from_json(&cert.to_json()).unwrap().into_certificate().unwrap();
        back.reverify().unwrap();
        assert_eq!(back.witness, cert.witness);
    }

    #[test]
    fn tampered_certificate_fails() {
        let mut cert = exact_turan(&parts(&[2, 1, 1]), ForbiddenSet::C4MULTI).unwrap();
        cert.value += 1;
        assert!(cert.reverify().is_err());
        let mut cert = exact_anti_ramsey(&parts(&[2, 1, 1])).unwrap();
        cert.witness = Witness::Coloring(EdgeColoring::rainbow(parts(&[2, 1, 1])));
        cert.value = 5;
        assert!(cert.reverify().is_err());
    }
}

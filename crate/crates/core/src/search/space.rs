//! Edge layout shared by both searches: host edges in branching order,
//! pattern copies as edge masks, and the within-part vertex swaps used for
//! symmetry breaking.

use crate::error::{Error, Result};
use crate::graph::{Edge, PartSizes, PartitionedGraph};
use crate::patterns::{enumerate_c3, enumerate_c4multi, PatternCopy};

/// Edge masks are single words.
pub(crate) const MAX_SEARCH_EDGES: usize = 64;

pub(crate) struct EdgeSpace {
    pub host: PartitionedGraph,
    /// Host edges: `V1-V2` block, then `V1-V3`, then `V2-V3`.
    pub edges: Vec<Edge>,
    slot: Vec<u8>,
}

impl EdgeSpace {
    pub fn new(parts: &PartSizes) -> Result<Self> {
        parts.require_tripartite()?;
        let host = PartitionedGraph::complete(parts.clone());
        if host.edge_count() > MAX_SEARCH_EDGES {
            return Err(Error::CapExceeded {
                what: "host edge count (search word width)",
                cap: MAX_SEARCH_EDGES,
                required: host.edge_count(),
            });
        }
        let mut edges: Vec<Edge> = host.edges().collect();
        edges.sort_by_key(|e| (e.u.part, e.v.part, e.u.index, e.v.index));
        let n = host.vertex_count();
        let mut slot = vec![u8::MAX; n * n];
        for (k, e) in edges.iter().enumerate() {
            let (a, b) = (host.global(e.u), host.global(e.v));
            slot[a * n + b] = k as u8;
            slot[b * n + a] = k as u8;
        }
        Ok(EdgeSpace { host, edges, slot })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn index(&self, e: Edge) -> usize {
        let n = self.host.vertex_count();
        self.slot[self.host.global(e.u) * n + self.host.global(e.v)] as usize
    }

    pub fn mask_of(&self, copy: &PatternCopy) -> u64 {
        copy.edges.iter().fold(0, |m, e| m | 1 << self.index(*e))
    }

    pub fn c4_masks(&self, copy_cap: usize) -> Result<Vec<u64>> {
        let sizes = self.host.parts().sizes();
        let choose2 = |n: usize| n * n.saturating_sub(1) / 2;
        let expected = choose2(sizes[0]) * sizes[1] * sizes[2]
            + choose2(sizes[1]) * sizes[0] * sizes[2]
            + choose2(sizes[2]) * sizes[0] * sizes[1];
        if expected > copy_cap {
            return Err(Error::CapExceeded {
                what: "multipartite 4-cycle copy count",
                cap: copy_cap,
                required: expected,
            });
        }
        Ok(enumerate_c4multi(&self.host).iter().map(|c| self.mask_of(c)).collect())
    }

    pub fn c3_masks(&self) -> Vec<u64> {
        enumerate_c3(&self.host).iter().map(|c| self.mask_of(c)).collect()
    }

    /// Edge pairs exchanged by swapping vertices `i` and `i+1` of a part,
    /// one list per such swap. Each list holds `(a, b)` with `a < b`,
    /// ordered by `a`.
    pub fn adjacent_swaps(&self) -> Vec<Vec<(u8, u8)>> {
        let mut out = Vec::new();
        for p in 0..3 {
            for i in 0..self.host.parts().size(p).saturating_sub(1) {
                let swap = |v: crate::graph::VertexRef| {
                    if v.part == p && v.index == i {
                        crate::graph::VertexRef::new(p, i + 1)
                    } else if v.part == p && v.index == i + 1 {
                        crate::graph::VertexRef::new(p, i)
                    } else {
                        v
                    }
                };
                let mut pairs: Vec<(u8, u8)> = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter_map(|(k, e)| {
                        let image = Edge::new(swap(e.u), swap(e.v)).expect("swap keeps parts");
                        let j = self.index(image);
                        (k < j).then_some((k as u8, j as u8))
                    })
                    .collect();
                pairs.sort_unstable();
                out.push(pairs);
            }
        }
        out
    }

    pub fn graph_of(&self, mask: u64) -> PartitionedGraph {
        let edges = (0..self.len()).filter(|k| mask >> k & 1 == 1).map(|k| self.edges[k]);
        PartitionedGraph::from_edges(self.host.parts().clone(), edges).expect("host edges")
    }
}

/// Lex-leader test for one swap on a partial 0/1 assignment of the first
/// `depth` edges.
///
/// Returns `Err(())` when the assignment is lexicographically smaller than
/// its image (including=1 ranks above 0), otherwise the mask of undecided
/// edges that must stay 0 for the test to remain satisfiable.
pub(crate) fn swap_status(pairs: &[(u8, u8)], included: u64, depth: usize) -> Result<u64, ()> {
    for &(a, b) in pairs {
        let (a, b) = (a as usize, b as usize);
        if a >= depth {
            return Ok(0);
        }
        let xa = included >> a & 1;
        if b >= depth {
            return Ok(if xa == 1 { 0 } else { 1 << b });
        }
        let xb = included >> b & 1;
        if xa != xb {
            return if xa > xb { Ok(0) } else { Err(()) };
        }
    }
    Ok(0)
}

/// Greedy count of pairwise disjoint masks among `candidates`.
pub(crate) fn disjoint_packing(candidates: impl Iterator<Item = u64>) -> u32 {
    let mut used = 0u64;
    let mut count = 0;
    for m in candidates {
        if m & used == 0 {
            used |= m;
            count += 1;
        }
    }
    count
}

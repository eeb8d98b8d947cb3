//! Closed-form extremal values and the explicit extremal graphs and
//! colourings that attain them.
//!
//! Every function here takes part sizes already in non-increasing order and
//! refuses anything else: the formulas are not symmetric in the parts.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, PartSizes, PartitionedGraph, VertexRef};

fn require_sorted(n1: usize, n2: usize, n3: usize) -> Result<()> {
    PartSizes::tripartite(n1, n2, n3).map(|_| ())
}

/// Largest edge count of a subgraph of `K_{n1,n2,n3}` with no multipartite 4-cycle.
pub fn turan_c4multi_value(n1: usize, n2: usize, n3: usize) -> Result<usize> {
    require_sorted(n1, n2, n3)?;
    Ok(n1 * n2 + 2 * n3)
}

/// Largest edge count with neither a triangle nor a multipartite 4-cycle.
pub fn turan_c3_c4multi_value(n1: usize, n2: usize, n3: usize) -> Result<usize> {
    require_sorted(n1, n2, n3)?;
    Ok(n1 * n2 + n3)
}

/// Largest number of colours on `K_{n1,n2,n3}` with no rainbow multipartite 4-cycle.
pub fn ar_c4multi_value(n1: usize, n2: usize, n3: usize) -> Result<usize> {
    require_sorted(n1, n2, n3)?;
    Ok(n1 * n2 + n3 + 1)
}

/// Edge threshold above which an r-partite graph must contain a
/// multipartite cycle.
///
/// Consecutive parts are paired, `n1 n2 + n3 n4 + ...`; for odd `r` the
/// last part is added alone together with `(r-1)/2 - 1`, for even `r` the
/// extra term is `r/2 - 1`.
pub fn f_value(parts: &PartSizes) -> Result<usize> {
    parts.require_input_sorted()?;
    let n = parts.sizes();
    let r = n.len();
    if r < 3 {
        return Err(Error::TooFewParts(r));
    }
    let pairs: usize = n.chunks_exact(2).map(|c| c[0] * c[1]).sum();
    Ok(if r % 2 == 1 {
        pairs + n[r - 1] + (r - 1) / 2 - 1
    } else {
        pairs + r / 2 - 1
    })
}

fn edge(a: (usize, usize), b: (usize, usize)) -> Edge {
    Edge::new(VertexRef::new(a.0, a.1), VertexRef::new(b.0, b.1)).expect("parts differ")
}

/// `V1` and `V2` completely joined; vertex `i` of `V3` matched to vertex `i`
/// of `V1` and to vertex `i` of `V2`.
pub fn build_turan_c4multi(n1: usize, n2: usize, n3: usize) -> Result<PartitionedGraph> {
    let mut g = PartitionedGraph::empty(PartSizes::tripartite(n1, n2, n3)?);
    join_first_two(&mut g, n1, n2)?;
    for i in 0..n3 {
        g.add_edge(edge((0, i), (2, i)))?;
        g.add_edge(edge((1, i), (2, i)))?;
    }
    Ok(g)
}

/// `V1` and `V2` completely joined; vertex `i` of `V3` matched to vertex `i`
/// of `V1`; no edges between `V2` and `V3`.
pub fn build_turan_c3_c4multi(n1: usize, n2: usize, n3: usize) -> Result<PartitionedGraph> {
    let mut g = PartitionedGraph::empty(PartSizes::tripartite(n1, n2, n3)?);
    join_first_two(&mut g, n1, n2)?;
    for i in 0..n3 {
        g.add_edge(edge((0, i), (2, i)))?;
    }
    Ok(g)
}

fn join_first_two(g: &mut PartitionedGraph, n1: usize, n2: usize) -> Result<()> {
    for i in 0..n1 {
        for j in 0..n2 {
            g.add_edge(edge((0, i), (1, j)))?;
        }
    }
    Ok(())
}

/// Colouring of `K_{n1,n2,n3}` with `n1 n2 + n3 + 1` colours and no rainbow
/// multipartite 4-cycle.
///
/// Colours are assigned as: one per `V1-V2` edge, one per star from a `V3`
/// vertex into `V1`, and one shared by every `V2-V3` edge. The stored ids are
/// then renumbered by first occurrence like any other [`EdgeColoring`].
pub fn build_ar_lower_coloring(n1: usize, n2: usize, n3: usize) -> Result<EdgeColoring> {
    let parts = PartSizes::tripartite(n1, n2, n3)?;
    let base = (n1 * n2) as u32;
    let coloring = EdgeColoring::from_fn(parts, |e| match (e.u.part, e.v.part) {
        (0, 1) => (e.u.index * n2 + e.v.index) as u32,
        (0, 2) => base + e.v.index as u32,
        _ => base + n3 as u32,
    });
    Ok(coloring)
}

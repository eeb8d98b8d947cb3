//! Detection and enumeration of the patterns used throughout the crate:
//! triangles, multipartite 4-cycles, general multipartite cycles and the
//! members of the family whose rainbow copies force a rainbow multipartite
//! 4-cycle.

mod cycles;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, PartitionedGraph, VertexRef};

pub(crate) use cycles::CycleSearch;

/// Longest cycle [`enumerate_multicycles`] accepts unless told otherwise.
pub const DEFAULT_CYCLE_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternKind {
    /// Triangle, necessarily one vertex in each of three parts.
    C3,
    /// 4-cycle meeting at least three parts.
    C4Multi,
    /// Cycle of the given length meeting at least three parts.
    MultiCycle(usize),
    /// Two triangles with exactly one common vertex.
    TriangleWedgeTriangle,
    /// Multipartite 6-cycle with a vertex whose two cycle neighbours share a part.
    NoncyclicC6Multi,
    /// A triangle and a 5-cycle with exactly one common vertex.
    TriangleWedgeC5,
    /// Multipartite 8-cycle containing two vertex-disjoint 2-edge subpaths
    /// whose endpoints share a part.
    C8MultiTwoFlatP3,
}

/// Members of the family, in the order [`find_family_f`] tries them.
pub const FAMILY_F: [PatternKind; 5] = [
    PatternKind::C4Multi,
    PatternKind::TriangleWedgeTriangle,
    PatternKind::NoncyclicC6Multi,
    PatternKind::TriangleWedgeC5,
    PatternKind::C8MultiTwoFlatP3,
];

impl PatternKind {
    pub fn vertex_count(self) -> usize {
        match self {
            PatternKind::C3 => 3,
            PatternKind::C4Multi => 4,
            PatternKind::MultiCycle(l) => l,
            PatternKind::TriangleWedgeTriangle => 5,
            PatternKind::NoncyclicC6Multi => 6,
            PatternKind::TriangleWedgeC5 => 7,
            PatternKind::C8MultiTwoFlatP3 => 8,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            PatternKind::TriangleWedgeTriangle => 6,
            PatternKind::TriangleWedgeC5 => 8,
            other => other.vertex_count(),
        }
    }

    fn is_wedge(self) -> bool {
        matches!(self, PatternKind::TriangleWedgeTriangle | PatternKind::TriangleWedgeC5)
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::C3 => f.write_str("c3"),
            PatternKind::C4Multi => f.write_str("c4multi"),
            PatternKind::MultiCycle(l) => write!(f, "multicycle:{l}"),
            PatternKind::TriangleWedgeTriangle => f.write_str("c3-wedge-c3"),
            PatternKind::NoncyclicC6Multi => f.write_str("c6-noncyclic"),
            PatternKind::TriangleWedgeC5 => f.write_str("c3-wedge-c5"),
            PatternKind::C8MultiTwoFlatP3 => f.write_str("c8-two-flat-p3"),
        }
    }
}

impl FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "c3" => PatternKind::C3,
            "c4multi" | "g1" => PatternKind::C4Multi,
            "c3-wedge-c3" | "g2" => PatternKind::TriangleWedgeTriangle,
            "c6-noncyclic" => PatternKind::NoncyclicC6Multi,
            "c3-wedge-c5" => PatternKind::TriangleWedgeC5,
            "c8-two-flat-p3" | "g8" => PatternKind::C8MultiTwoFlatP3,
            other => {
                let len = other
                    .strip_prefix("multicycle:")
                    .ok_or_else(|| format!("unknown pattern `{other}`"))?;
                let len: usize = len.parse().map_err(|_| format!("bad cycle length `{len}`"))?;
                if len < 3 {
                    return Err(format!("cycle length must be at least 3, got {len}"));
                }
                PatternKind::MultiCycle(len)
            }
        })
    }
}

/// One copy of a pattern inside a host graph.
///
/// Cycles list their vertices in traversal order, starting at the minimum
/// vertex and heading to its smaller cycle neighbour. Wedges list the
/// shared vertex, then the rest of the first cycle, then the rest of the
/// second, each cycle oriented the same way.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternCopy {
    pub kind: PatternKind,
    pub vertices: Vec<VertexRef>,
    pub edges: Vec<Edge>,
}

impl PatternCopy {
    /// Re-checks the copy against `g` from scratch.
    pub fn verify(&self, g: &PartitionedGraph) -> bool {
        let vs = &self.vertices;
        if vs.len() != self.kind.vertex_count() || self.edges.len() != self.kind.edge_count() {
            return false;
        }
        if vs.iter().any(|v| !g.contains(*v)) || vs.iter().collect::<BTreeSet<_>>().len() != vs.len() {
            return false;
        }
        if self.edges.iter().any(|e| !g.has_edge(e.u, e.v)) {
            return false;
        }
        let expected: Option<Vec<Edge>> = if self.kind.is_wedge() {
            let split = 3;
            let ring_a: Vec<VertexRef> = vs[..split].to_vec();
            let ring_b: Vec<VertexRef> = std::iter::once(vs[0]).chain(vs[split..].iter().copied()).collect();
            ring_edges(&ring_a)
                .and_then(|a| ring_edges(&ring_b).map(|b| a.into_iter().chain(b).collect()))
        } else {
            ring_edges(vs)
        };
        let Some(expected) = expected else { return false };
        if expected.iter().collect::<BTreeSet<_>>() != self.edges.iter().collect::<BTreeSet<_>>() {
            return false;
        }
        let parts: BTreeSet<usize> = vs.iter().map(|v| v.part).collect();
        let part_of = |i: usize| vs[i % vs.len()].part;
        match self.kind {
            PatternKind::C3 | PatternKind::TriangleWedgeTriangle | PatternKind::TriangleWedgeC5 => true,
            PatternKind::C4Multi | PatternKind::MultiCycle(_) => parts.len() >= 3,
            PatternKind::NoncyclicC6Multi => {
                parts.len() >= 3 && (0..6).any(|i| part_of(i + 5) == part_of(i + 1))
            }
            PatternKind::C8MultiTwoFlatP3 => {
                let flat: Vec<usize> = (0..8).filter(|&i| part_of(i + 7) == part_of(i + 1)).collect();
                parts.len() >= 3
                    && flat.iter().any(|&a| flat.iter().any(|&b| cyclic_gap(a, b, 8) >= 3))
            }
        }
    }

    /// Whether all edges of the copy carry different colours.
    pub fn is_rainbow(&self, coloring: &EdgeColoring) -> bool {
        let colors: Option<BTreeSet<u32>> = self.edges.iter().map(|e| coloring.color_of(*e)).collect();
        colors.is_some_and(|c| c.len() == self.edges.len())
    }
}

impl fmt::Display for PatternCopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

fn ring_edges(ring: &[VertexRef]) -> Option<Vec<Edge>> {
    (0..ring.len())
        .map(|i| Edge::new(ring[i], ring[(i + 1) % ring.len()]).ok())
        .collect()
}

fn cyclic_gap(a: usize, b: usize, n: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// Rotate and reflect a cycle so it starts at its minimum and heads to the
/// smaller neighbour.
fn canonical_ring(ring: &[usize]) -> Vec<usize> {
    let n = ring.len();
    let m = (0..n).min_by_key(|&i| ring[i]).expect("non-empty ring");
    let fwd = ring[(m + 1) % n];
    let back = ring[(m + n - 1) % n];
    if fwd <= back {
        (0..n).map(|k| ring[(m + k) % n]).collect()
    } else {
        (0..n).map(|k| ring[(m + n - k) % n]).collect()
    }
}

/// Orient a cycle that must start at `ring[0]` toward its smaller neighbour.
fn oriented_from_start(ring: &[usize]) -> Vec<usize> {
    let n = ring.len();
    if ring[1] <= ring[n - 1] {
        ring.to_vec()
    } else {
        std::iter::once(ring[0]).chain(ring[1..].iter().rev().copied()).collect()
    }
}

fn cycle_copy(g: &PartitionedGraph, kind: PatternKind, ring: &[usize]) -> PatternCopy {
    let vertices: Vec<VertexRef> = canonical_ring(ring).into_iter().map(|x| g.vertex(x)).collect();
    let edges = ring_edges(&vertices).expect("cycle edges join distinct parts");
    PatternCopy { kind, vertices, edges }
}

fn wedge_copy(g: &PartitionedGraph, kind: PatternKind, first: &[usize], second: &[usize]) -> PatternCopy {
    let mut a = oriented_from_start(first);
    let mut b = oriented_from_start(second);
    if kind == PatternKind::TriangleWedgeTriangle && b < a {
        std::mem::swap(&mut a, &mut b);
    }
    let ring_a: Vec<VertexRef> = a.iter().map(|&x| g.vertex(x)).collect();
    let ring_b: Vec<VertexRef> = b.iter().map(|&x| g.vertex(x)).collect();
    let mut edges = ring_edges(&ring_a).expect("valid ring");
    edges.extend(ring_edges(&ring_b).expect("valid ring"));
    let vertices = ring_a.into_iter().chain(ring_b.into_iter().skip(1)).collect();
    PatternCopy { kind, vertices, edges }
}

fn distinct(colors: &[u32]) -> bool {
    colors.iter().enumerate().all(|(i, c)| !colors[..i].contains(c))
}

fn noncyclic(g: &PartitionedGraph, ring: &[usize]) -> bool {
    let n = ring.len();
    (0..n).any(|i| g.part_of(ring[(i + n - 1) % n]) == g.part_of(ring[(i + 1) % n]))
}

fn two_disjoint_flat_p3(g: &PartitionedGraph, ring: &[usize]) -> bool {
    let n = ring.len();
    let flat: Vec<usize> = (0..n)
        .filter(|&i| g.part_of(ring[(i + n - 1) % n]) == g.part_of(ring[(i + 1) % n]))
        .collect();
    flat.iter().any(|&a| flat.iter().any(|&b| cyclic_gap(a, b, n) >= 3))
}

/// Calls `visit` on copies of `kind` in `g`; with a palette, only on copies
/// whose edges have pairwise distinct colours. Wedge kinds may be visited
/// more than once.
fn visit_copies(
    g: &PartitionedGraph,
    kind: PatternKind,
    palette: Option<&EdgeColoring>,
    visit: &mut dyn FnMut(PatternCopy) -> ControlFlow<()>,
) -> ControlFlow<()> {
    match kind {
        PatternKind::C4Multi if g.part_count() == 3 => visit_c4multi(g, palette, visit),
        PatternKind::C3 | PatternKind::C4Multi | PatternKind::MultiCycle(_) => {
            let len = kind.vertex_count();
            CycleSearch::new(g, len)
                .multipartite()
                .rainbow(palette, &[])
                .for_each(&mut |ring, _| visit(cycle_copy(g, kind, ring)))
        }
        PatternKind::NoncyclicC6Multi | PatternKind::C8MultiTwoFlatP3 => {
            let len = kind.vertex_count();
            CycleSearch::new(g, len).multipartite().rainbow(palette, &[]).for_each(&mut |ring, _| {
                let ok = if kind == PatternKind::NoncyclicC6Multi {
                    noncyclic(g, ring)
                } else {
                    two_disjoint_flat_p3(g, ring)
                };
                if ok {
                    visit(cycle_copy(g, kind, ring))
                } else {
                    ControlFlow::Continue(())
                }
            })
        }
        PatternKind::TriangleWedgeTriangle | PatternKind::TriangleWedgeC5 => {
            let second_len = if kind == PatternKind::TriangleWedgeTriangle { 3 } else { 5 };
            CycleSearch::new(g, 3).rainbow(palette, &[]).for_each(&mut |tri, used| {
                let tri = tri.to_vec();
                let used = used.to_vec();
                for k in 0..3 {
                    let shared = tri[k];
                    let others = [tri[(k + 1) % 3], tri[(k + 2) % 3]];
                    let first = [shared, others[0], others[1]];
                    CycleSearch::new(g, second_len)
                        .avoiding(&others)
                        .rainbow(palette, &used)
                        .for_each_through(shared, &mut |ring, _| visit(wedge_copy(g, kind, &first, ring)))?;
                }
                ControlFlow::Continue(())
            })
        }
    }
}

/// Multipartite 4-cycles of a 3-partite graph: an antipodal same-part pair
/// plus one common neighbour in each of the two other parts.
fn visit_c4multi(
    g: &PartitionedGraph,
    palette: Option<&EdgeColoring>,
    visit: &mut dyn FnMut(PatternCopy) -> ControlFlow<()>,
) -> ControlFlow<()> {
    for p in 0..3 {
        let (q, s) = match p {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let lo = g.part_offset(p);
        let hi = lo + g.parts().size(p);
        for a in lo..hi {
            for b in a + 1..hi {
                if !g.share_neighbor_in(a, b, q) || !g.share_neighbor_in(a, b, s) {
                    continue;
                }
                for w in g.common_neighbors_in(a, b, q) {
                    for x in g.common_neighbors_in(a, b, s) {
                        if let Some(pal) = palette {
                            let cs = [
                                pal.color_global(a, w),
                                pal.color_global(w, b),
                                pal.color_global(b, x),
                                pal.color_global(x, a),
                            ];
                            if !distinct(&cs) {
                                continue;
                            }
                        }
                        visit(cycle_copy(g, PatternKind::C4Multi, &[a, w, b, x]))?;
                    }
                }
            }
        }
    }
    ControlFlow::Continue(())
}

fn first_copy(g: &PartitionedGraph, kind: PatternKind, palette: Option<&EdgeColoring>) -> Option<PatternCopy> {
    let mut found = None;
    let _ = visit_copies(g, kind, palette, &mut |copy| {
        found = Some(copy);
        ControlFlow::Break(())
    });
    found
}

/// Every copy of `kind` in `g`, canonical and sorted.
pub fn enumerate_copies(g: &PartitionedGraph, kind: PatternKind) -> Vec<PatternCopy> {
    let mut all = BTreeSet::new();
    let _ = visit_copies(g, kind, None, &mut |copy| {
        all.insert(copy);
        ControlFlow::Continue(())
    });
    all.into_iter().collect()
}

pub fn contains_c4multi(g: &PartitionedGraph) -> Option<PatternCopy> {
    first_copy(g, PatternKind::C4Multi, None)
}

pub fn enumerate_c4multi(g: &PartitionedGraph) -> Vec<PatternCopy> {
    enumerate_copies(g, PatternKind::C4Multi)
}

pub fn contains_c3(g: &PartitionedGraph) -> Option<PatternCopy> {
    first_copy(g, PatternKind::C3, None)
}

pub fn enumerate_c3(g: &PartitionedGraph) -> Vec<PatternCopy> {
    enumerate_copies(g, PatternKind::C3)
}

pub fn contains_pattern(g: &PartitionedGraph, kind: PatternKind) -> Option<PatternCopy> {
    first_copy(g, kind, None)
}

pub fn enumerate_multicycles(g: &PartitionedGraph, len: usize) -> Result<Vec<PatternCopy>> {
    enumerate_multicycles_capped(g, len, DEFAULT_CYCLE_CAP)
}

pub fn enumerate_multicycles_capped(g: &PartitionedGraph, len: usize, cap: usize) -> Result<Vec<PatternCopy>> {
    if len < 3 {
        return Err(Error::Precondition(format!("cycle length must be at least 3, got {len}")));
    }
    if len > cap {
        return Err(Error::CapExceeded {
            what: "cycle length",
            cap,
            required: len,
        });
    }
    Ok(enumerate_copies(g, PatternKind::MultiCycle(len)))
}

/// First member of the family found in `g`, trying members in
/// [`FAMILY_F`] order.
pub fn find_family_f(g: &PartitionedGraph) -> Result<Option<(PatternKind, PatternCopy)>> {
    g.parts().require_tripartite()?;
    Ok(FAMILY_F
        .iter()
        .find_map(|&kind| first_copy(g, kind, None).map(|c| (kind, c))))
}

/// A copy of `kind` in `host` whose edges all have different colours.
///
/// `host` may be the complete host or any subgraph of it on the same parts.
pub fn find_rainbow_copy(
    host: &PartitionedGraph,
    coloring: &EdgeColoring,
    kind: PatternKind,
) -> Result<Option<PatternCopy>> {
    if host.parts() != coloring.parts() {
        return Err(Error::Precondition(format!(
            "colouring is for parts {} but the host has parts {}",
            coloring.parts(),
            host.parts()
        )));
    }
    Ok(first_copy(host, kind, Some(coloring)))
}

/// Rainbow member of the family, trying members in [`FAMILY_F`] order.
pub fn find_rainbow_family_f(
    coloring: &EdgeColoring,
    members: &[PatternKind],
) -> Option<(PatternKind, PatternCopy)> {
    members
        .iter()
        .find_map(|&kind| first_copy(coloring.host(), kind, Some(coloring)).map(|c| (kind, c)))
}

/// Two vertex-disjoint triangles, if any.
pub fn find_disjoint_triangles(g: &PartitionedGraph) -> Option<(PatternCopy, PatternCopy)> {
    let triangles = enumerate_c3(g);
    for (i, a) in triangles.iter().enumerate() {
        for b in &triangles[i + 1..] {
            if a.vertices.iter().all(|v| !b.vertices.contains(v)) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

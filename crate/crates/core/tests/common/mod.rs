//! Brute-force oracles built only on adjacency queries. They share no code
//! with the detectors or the searches.
#![allow(dead_code)]

use std::collections::BTreeSet;

use multex::patterns::PatternKind;
use multex::{Edge, EdgeColoring, PartSizes, PartitionedGraph, VertexRef};

pub type EdgeSet = BTreeSet<Edge>;

fn edge(a: VertexRef, b: VertexRef) -> Edge {
    Edge::new(a, b).expect("adjacent vertices lie in different parts")
}

/// Every cycle of length `len` in `g`, as (vertex sequence, edge set), one
/// entry per edge set.
pub fn rings(g: &PartitionedGraph, len: usize) -> Vec<(Vec<VertexRef>, EdgeSet)> {
    fn grow(
        g: &PartitionedGraph,
        len: usize,
        all: &[VertexRef],
        path: &mut Vec<VertexRef>,
        seen: &mut BTreeSet<EdgeSet>,
        out: &mut Vec<(Vec<VertexRef>, EdgeSet)>,
    ) {
        if path.len() == len {
            if g.has_edge(path[len - 1], path[0]) {
                let edges: EdgeSet = (0..len).map(|i| edge(path[i], path[(i + 1) % len])).collect();
                if seen.insert(edges.clone()) {
                    out.push((path.clone(), edges));
                }
            }
            return;
        }
        for &v in all {
            if !path.contains(&v) && g.has_edge(*path.last().unwrap(), v) {
                path.push(v);
                grow(g, len, all, path, seen, out);
                path.pop();
            }
        }
    }
    let all: Vec<VertexRef> = g.vertices().collect();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for &s in &all {
        grow(g, len, &all, &mut vec![s], &mut seen, &mut out);
    }
    out
}

fn distinct_parts(vs: &[VertexRef]) -> usize {
    vs.iter().map(|v| v.part).collect::<BTreeSet<_>>().len()
}

/// Positions `i` whose two ring neighbours lie in the same part.
fn flat_positions(vs: &[VertexRef]) -> Vec<usize> {
    let n = vs.len();
    (0..n).filter(|&i| vs[(i + n - 1) % n].part == vs[(i + 1) % n].part).collect()
}

fn wedges(a: &[(Vec<VertexRef>, EdgeSet)], b: &[(Vec<VertexRef>, EdgeSet)]) -> BTreeSet<EdgeSet> {
    let mut out = BTreeSet::new();
    for (va, ea) in a {
        for (vb, eb) in b {
            let shared = va.iter().filter(|v| vb.contains(v)).count();
            if shared == 1 {
                out.insert(ea.union(eb).copied().collect());
            }
        }
    }
    out
}

/// Edge sets of every copy of `kind` in `g`, straight from the definitions.
pub fn pattern_edge_sets(g: &PartitionedGraph, kind: PatternKind) -> BTreeSet<EdgeSet> {
    let multi = |len: usize, extra: &dyn Fn(&[VertexRef]) -> bool| -> BTreeSet<EdgeSet> {
        rings(g, len)
            .into_iter()
            .filter(|(vs, _)| distinct_parts(vs) >= 3 && extra(vs))
            .map(|(_, e)| e)
            .collect()
    };
    match kind {
        PatternKind::C3 => rings(g, 3).into_iter().map(|(_, e)| e).collect(),
        PatternKind::C4Multi => multi(4, &|_| true),
        PatternKind::MultiCycle(len) => multi(len, &|_| true),
        PatternKind::NoncyclicC6Multi => multi(6, &|vs| !flat_positions(vs).is_empty()),
        PatternKind::C8MultiTwoFlatP3 => multi(8, &|vs| {
            let flat = flat_positions(vs);
            // 3-vertex windows centred at a and b are disjoint iff the
            // centres are at least 3 apart around the ring
            flat.iter()
                .any(|&a| flat.iter().any(|&b| (a + 8 - b) % 8 >= 3 && (b + 8 - a) % 8 >= 3))
        }),
        PatternKind::TriangleWedgeTriangle => {
            let t = rings(g, 3);
            wedges(&t, &t)
        }
        PatternKind::TriangleWedgeC5 => wedges(&rings(g, 3), &rings(g, 5)),
    }
}

pub fn rainbow(edges: &EdgeSet, c: &EdgeColoring) -> bool {
    let colors: BTreeSet<u32> = edges.iter().map(|e| c.color_of(*e).unwrap()).collect();
    colors.len() == edges.len()
}

/// Host edges ordered by part pair, then by vertex indices.
pub fn branching_order(parts: &PartSizes) -> Vec<Edge> {
    let mut edges: Vec<Edge> = PartitionedGraph::complete(parts.clone()).edges().collect();
    edges.sort_by_key(|e| (e.u.part, e.v.part, e.u.index, e.v.index));
    edges
}

fn mask(order: &[Edge], set: &EdgeSet) -> u64 {
    order
        .iter()
        .enumerate()
        .filter(|(_, e)| set.contains(e))
        .fold(0, |m, (k, _)| m | 1 << k)
}

/// Turán number by checking all `2^m` subgraphs, plus the optimal subgraph
/// whose 0/1 vector in branching order is lexicographically largest.
pub fn brute_turan(parts: &PartSizes, forbid_c3: bool) -> (usize, Vec<Edge>) {
    let order = branching_order(parts);
    let m = order.len();
    assert!(m <= 24, "oracle is exponential in the edge count");
    let host = PartitionedGraph::complete(parts.clone());
    let mut copies: Vec<u64> = pattern_edge_sets(&host, PatternKind::C4Multi).iter().map(|s| mask(&order, s)).collect();
    if forbid_c3 {
        copies.extend(pattern_edge_sets(&host, PatternKind::C3).iter().map(|s| mask(&order, s)));
    }
    // edge 0 is the most significant position
    let lex_key = |x: u64| x.reverse_bits();
    let mut best: Option<u64> = None;
    for x in 0..1u64 << m {
        if copies.iter().any(|&c| c & !x == 0) {
            continue;
        }
        best = match best {
            Some(b) if (b.count_ones(), lex_key(b)) >= (x.count_ones(), lex_key(x)) => Some(b),
            _ => Some(x),
        };
    }
    let b = best.unwrap();
    (b.count_ones() as usize, (0..m).filter(|k| b >> k & 1 == 1).map(|k| order[k]).collect())
}

/// Calls `visit` on every restricted-growth string of length `m`.
pub fn for_each_rgs(m: usize, visit: &mut dyn FnMut(&[u32])) {
    fn go(s: &mut Vec<u32>, m: usize, used: u32, visit: &mut dyn FnMut(&[u32])) {
        if s.len() == m {
            visit(s);
            return;
        }
        for c in 0..=used {
            s.push(c);
            go(s, m, used.max(c + 1), visit);
            s.pop();
        }
    }
    go(&mut Vec::with_capacity(m), m, 0, visit);
}

/// Edge sets of the complete host's multipartite 4-cycles as canonical edge
/// indices.
pub fn c4_index_sets(parts: &PartSizes) -> Vec<Vec<usize>> {
    let host = PartitionedGraph::complete(parts.clone());
    let canon: Vec<Edge> = host.edges().collect();
    pattern_edge_sets(&host, PatternKind::C4Multi)
        .iter()
        .map(|s| s.iter().map(|e| canon.iter().position(|x| x == e).unwrap()).collect())
        .collect()
}

fn all_distinct(colors: &[u32], set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| colors[a] != colors[b]))
}

/// Anti-Ramsey number by enumerating every colouring up to renaming.
pub fn brute_anti_ramsey(parts: &PartSizes) -> usize {
    let m = parts.complete_edge_count();
    assert!(m <= 12, "oracle enumerates Bell(m) colourings");
    let quads = c4_index_sets(parts);
    let mut best = 0;
    for_each_rgs(m, &mut |s| {
        let colors = *s.iter().max().unwrap() as usize + 1;
        if colors > best && !quads.iter().any(|q| all_distinct(s, q)) {
            best = colors;
        }
    });
    best
}

/// Index sets of every non-4-cycle family member in the complete host.
pub fn family_index_sets(parts: &PartSizes) -> Vec<(PatternKind, Vec<usize>)> {
    let host = PartitionedGraph::complete(parts.clone());
    let canon: Vec<Edge> = host.edges().collect();
    let mut out = Vec::new();
    for kind in [
        PatternKind::TriangleWedgeTriangle,
        PatternKind::NoncyclicC6Multi,
        PatternKind::TriangleWedgeC5,
        PatternKind::C8MultiTwoFlatP3,
    ] {
        for s in pattern_edge_sets(&host, kind) {
            out.push((kind, s.iter().map(|e| canon.iter().position(|x| x == e).unwrap()).collect()));
        }
    }
    out
}

/// Colourings (as restricted-growth strings) in which some family member is
/// rainbow but no multipartite 4-cycle is, plus the number of colourings
/// without a rainbow 4-cycle that were examined.
pub fn rainbow_family_exhaustive(parts: &PartSizes) -> (Vec<Vec<u32>>, usize) {
    let m = parts.complete_edge_count();
    assert!(m <= 12, "oracle enumerates Bell(m) colourings");
    let quads = c4_index_sets(parts);
    let members = family_index_sets(parts);
    let mut bad = Vec::new();
    let mut examined = 0;
    for_each_rgs(m, &mut |s| {
        if quads.iter().any(|q| all_distinct(s, q)) {
            return;
        }
        examined += 1;
        if members.iter().any(|(_, set)| all_distinct(s, set)) {
            bad.push(s.to_vec());
        }
    });
    (bad, examined)
}

/// Subgraph of `parts`' complete host keeping the edges whose bit is set,
/// edges taken in canonical order.
pub fn subgraph(parts: &PartSizes, bits: u64) -> PartitionedGraph {
    let host = PartitionedGraph::complete(parts.clone());
    let edges: Vec<Edge> = host.edges().enumerate().filter(|(k, _)| bits.rotate_right(*k as u32 % 64) & 1 == 1).map(|(_, e)| e).collect();
    PartitionedGraph::from_edges(parts.clone(), edges).unwrap()
}

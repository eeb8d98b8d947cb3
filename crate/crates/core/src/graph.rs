//! Complete multipartite hosts and their subgraphs.
//!
//! Vertices are addressed by `(part, index)`. Internally every vertex also has
//! a global id (parts laid out consecutively), and adjacency is stored as one
//! bitrow per (vertex, part) pair so that neighbourhood intersections are
//! word-wise ANDs.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Part sizes of an r-partite host, kept in non-increasing order.
///
/// Sizes given in another order are sorted (stably) and the original
/// position of each part is remembered, so text output can restore it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSizes {
    sizes: Vec<usize>,
    /// `input_part[p]` is the position the sorted part `p` had in the input.
    input_part: Vec<usize>,
}

impl PartSizes {
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.len() < 3 {
            return Err(Error::TooFewParts(sizes.len()));
        }
        if sizes.contains(&0) {
            return Err(Error::EmptyPart(sizes.to_vec()));
        }
        let mut input_part: Vec<usize> = (0..sizes.len()).collect();
        input_part.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]));
        Ok(PartSizes {
            sizes: input_part.iter().map(|&p| sizes[p]).collect(),
            input_part,
        })
    }

    /// Like [`PartSizes::new`] but refuses sizes that are not already
    /// non-increasing.
    pub fn sorted(sizes: &[usize]) -> Result<Self> {
        let parts = Self::new(sizes)?;
        parts.require_input_sorted()?;
        Ok(parts)
    }

    pub fn tripartite(n1: usize, n2: usize, n3: usize) -> Result<Self> {
        Self::sorted(&[n1, n2, n3])
    }

    pub fn require_input_sorted(&self) -> Result<()> {
        if self.is_input_sorted() {
            Ok(())
        } else {
            Err(Error::Unsorted {
                given: self.input_sizes(),
                sorted: self.sizes.clone(),
            })
        }
    }

    pub fn is_input_sorted(&self) -> bool {
        self.input_part.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Sizes in non-increasing order.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Sizes in the order they were supplied.
    pub fn input_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.sizes.len()];
        for (p, &q) in self.input_part.iter().enumerate() {
            out[q] = self.sizes[p];
        }
        out
    }

    pub fn input_part(&self, part: usize) -> usize {
        self.input_part[part]
    }

    pub fn sorted_part(&self, input: usize) -> usize {
        self.input_part
            .iter()
            .position(|&q| q == input)
            .expect("input part index out of range")
    }

    /// Number of parts, `r`.
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn size(&self, part: usize) -> usize {
        self.sizes[part]
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.sizes[0]
    }

    /// Edge count of the complete host, `sum_{i<j} n_i n_j`.
    pub fn complete_edge_count(&self) -> usize {
        let total = self.total();
        let squares: usize = self.sizes.iter().map(|n| n * n).sum();
        (total * total - squares) / 2
    }

    pub(crate) fn require_tripartite(&self) -> Result<()> {
        if self.count() == 3 {
            Ok(())
        } else {
            Err(Error::NotTripartite(self.count()))
        }
    }
}

impl fmt::Display for PartSizes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes = self.input_sizes();
        for (i, n) in sizes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// A vertex, addressed by 0-based part and 0-based index within the part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    pub part: usize,
    pub index: usize,
}

impl VertexRef {
    pub const fn new(part: usize, index: usize) -> Self {
        VertexRef { part, index }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.part, self.index)
    }
}

/// An edge between vertices of different parts, stored with `u.part < v.part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexRef,
    pub v: VertexRef,
}

impl Edge {
    pub fn new(a: VertexRef, b: VertexRef) -> Result<Self> {
        match a.part.cmp(&b.part) {
            Ordering::Less => Ok(Edge { u: a, v: b }),
            Ordering::Greater => Ok(Edge { u: b, v: a }),
            Ordering::Equal => Err(Error::IntraPartEdge(a, b)),
        }
    }

    pub fn touches(&self, x: VertexRef) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

/// Iterate the set bit positions of a word slice, ascending.
pub(crate) fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + bit)
            }
        })
    })
}

/// A subgraph of the complete multipartite host `K_{n_1,...,n_r}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartitionedGraph {
    parts: PartSizes,
    offsets: Vec<usize>,
    /// Words per bitrow, enough for the largest part.
    words: usize,
    /// Row of vertex `g` into part `q` starts at `(g * r + q) * words`.
    rows: Vec<u64>,
    edge_count: usize,
}

impl PartitionedGraph {
    /// The edgeless graph on the host's vertex set.
    pub fn empty(parts: PartSizes) -> Self {
        let mut offsets = Vec::with_capacity(parts.count());
        let mut acc = 0;
        for &n in parts.sizes() {
            offsets.push(acc);
            acc += n;
        }
        let words = parts.largest().div_ceil(64);
        let rows = vec![0; acc * parts.count() * words];
        PartitionedGraph {
            parts,
            offsets,
            words,
            rows,
            edge_count: 0,
        }
    }

    /// The complete host itself.
    pub fn complete(parts: PartSizes) -> Self {
        let mut g = Self::empty(parts);
        let r = g.parts.count();
        for gv in 0..g.vertex_count() {
            let p = g.part_of(gv);
            for q in (0..r).filter(|&q| q != p) {
                let n = g.parts.size(q);
                let start = (gv * r + q) * g.words;
                for w in 0..g.words {
                    let lo = w * 64;
                    g.rows[start + w] = if n >= lo + 64 {
                        u64::MAX
                    } else if n > lo {
                        (1u64 << (n - lo)) - 1
                    } else {
                        0
                    };
                }
            }
        }
        g.edge_count = g.parts.complete_edge_count();
        g
    }

    pub fn from_edges<I>(parts: PartSizes, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Self::empty(parts);
        for e in edges {
            g.add_edge(e)?;
        }
        Ok(g)
    }

    pub fn parts(&self) -> &PartSizes {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.count()
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.total()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains(&self, v: VertexRef) -> bool {
        v.part < self.parts.count() && v.index < self.parts.size(v.part)
    }

    fn check(&self, v: VertexRef) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::NoSuchVertex(v))
        }
    }

    /// Global id of a vertex; global ids follow `VertexRef` order.
    pub fn global(&self, v: VertexRef) -> usize {
        debug_assert!(self.contains(v));
        self.offsets[v.part] + v.index
    }

    pub fn vertex(&self, global: usize) -> VertexRef {
        let part = self.part_of(global);
        VertexRef::new(part, global - self.offsets[part])
    }

    pub fn part_of(&self, global: usize) -> usize {
        match self.offsets.binary_search(&global) {
            Ok(mut p) => {
                // empty parts cannot occur, but keep the lookup exact
                while p + 1 < self.offsets.len() && self.offsets[p + 1] == global {
                    p += 1;
                }
                p
            }
            Err(p) => p - 1,
        }
    }

    pub fn part_offset(&self, part: usize) -> usize {
        self.offsets[part]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        (0..self.vertex_count()).map(|g| self.vertex(g))
    }

    fn row_start(&self, global: usize, part: usize) -> usize {
        (global * self.parts.count() + part) * self.words
    }

    pub(crate) fn row_global(&self, global: usize, part: usize) -> &[u64] {
        let s = self.row_start(global, part);
        &self.rows[s..s + self.words]
    }

    /// Bitrow of `v` into `part`: bit `i` is set iff `v ~ (part, i)`.
    pub fn row(&self, v: VertexRef, part: usize) -> &[u64] {
        self.row_global(self.global(v), part)
    }

    pub fn has_edge(&self, a: VertexRef, b: VertexRef) -> bool {
        if a.part == b.part || !self.contains(a) || !self.contains(b) {
            return false;
        }
        self.has_edge_global(self.global(a), self.global(b))
    }

    pub(crate) fn has_edge_global(&self, a: usize, b: usize) -> bool {
        let pb = self.part_of(b);
        let ib = b - self.offsets[pb];
        let row = self.row_global(a, pb);
        row[ib / 64] >> (ib % 64) & 1 == 1
    }

    fn set_bit(&mut self, a: usize, b: usize, on: bool) {
        let pb = self.part_of(b);
        let ib = b - self.offsets[pb];
        let s = self.row_start(a, pb) + ib / 64;
        if on {
            self.rows[s] |= 1 << (ib % 64);
        } else {
            self.rows[s] &= !(1 << (ib % 64));
        }
    }

    /// Adds an edge; returns false if it was already present.
    pub fn add_edge(&mut self, e: Edge) -> Result<bool> {
        self.check(e.u)?;
        self.check(e.v)?;
        if e.u.part == e.v.part {
            return Err(Error::IntraPartEdge(e.u, e.v));
        }
        let (a, b) = (self.global(e.u), self.global(e.v));
        if self.has_edge_global(a, b) {
            return Ok(false);
        }
        self.set_bit(a, b, true);
        self.set_bit(b, a, true);
        self.edge_count += 1;
        Ok(true)
    }

    /// Removes an edge; returns false if it was absent.
    pub fn remove_edge(&mut self, e: Edge) -> Result<bool> {
        self.check(e.u)?;
        self.check(e.v)?;
        let (a, b) = (self.global(e.u), self.global(e.v));
        if e.u.part == e.v.part || !self.has_edge_global(a, b) {
            return Ok(false);
        }
        self.set_bit(a, b, false);
        self.set_bit(b, a, false);
        self.edge_count -= 1;
        Ok(true)
    }

    /// `|N(v) ∩ V_part|`. Panics if `part` is `v`'s own part.
    pub fn degree_into(&self, v: VertexRef, part: usize) -> usize {
        assert_ne!(v.part, part, "degree_into: {v} has no neighbours in its own part");
        self.row(v, part).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree(&self, v: VertexRef) -> usize {
        (0..self.part_count())
            .filter(|&q| q != v.part)
            .map(|q| self.degree_into(v, q))
            .sum()
    }

    /// Neighbours of `v` inside `part`, ascending.
    pub fn neighbors_into(&self, v: VertexRef, part: usize) -> impl Iterator<Item = VertexRef> + '_ {
        set_bits(self.row(v, part)).map(move |i| VertexRef::new(part, i))
    }

    pub(crate) fn neighbors_global(&self, global: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.part_of(global);
        (0..self.part_count())
            .filter(move |&q| q != p)
            .flat_map(move |q| {
                let off = self.offsets[q];
                set_bits(self.row_global(global, q)).map(move |i| off + i)
            })
    }

    /// Whether `a` and `b` have a common neighbour in `part`.
    pub(crate) fn share_neighbor_in(&self, a: usize, b: usize, part: usize) -> bool {
        self.row_global(a, part)
            .iter()
            .zip(self.row_global(b, part))
            .any(|(x, y)| x & y != 0)
    }

    pub(crate) fn common_neighbors_in(
        &self,
        a: usize,
        b: usize,
        part: usize,
    ) -> impl Iterator<Item = usize> + '_ {
        let off = self.offsets[part];
        let ra = self.row_global(a, part);
        let rb = self.row_global(b, part);
        ra.iter().zip(rb).enumerate().flat_map(move |(w, (x, y))| {
            let mut rest = x & y;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(off + w * 64 + bit)
                }
            })
        })
    }

    /// All edges in canonical order `(u.part, u.index, v.part, v.index)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices().flat_map(move |u| {
            (u.part + 1..self.part_count()).flat_map(move |q| {
                self.neighbors_into(u, q).map(move |v| Edge { u, v })
            })
        })
    }

    /// Number of edges between parts `p` and `q`.
    pub fn edges_between(&self, p: usize, q: usize) -> usize {
        (0..self.parts.size(p))
            .map(|i| self.degree_into(VertexRef::new(p, i), q))
            .sum()
    }

    /// Full consistency audit of the adjacency structure.
    pub fn audit(&self) -> Result<()> {
        let r = self.part_count();
        let mut bits = 0usize;
        for a in 0..self.vertex_count() {
            let pa = self.part_of(a);
            for q in 0..r {
                let row = self.row_global(a, q);
                if q == pa && row.iter().any(|&w| w != 0) {
                    return Err(Error::Invariant(format!(
                        "vertex {} has a bit set inside its own part",
                        self.vertex(a)
                    )));
                }
                for i in set_bits(row) {
                    if i >= self.parts.size(q) {
                        return Err(Error::Invariant(format!(
                            "vertex {} points past the end of part {q}",
                            self.vertex(a)
                        )));
                    }
                    let b = self.offsets[q] + i;
                    if !self.has_edge_global(b, a) {
                        return Err(Error::Invariant(format!(
                            "asymmetric adjacency {} -> {}",
                            self.vertex(a),
                            self.vertex(b)
                        )));
                    }
                    bits += 1;
                }
            }
        }
        if bits != 2 * self.edge_count {
            return Err(Error::Invariant(format!(
                "edge count {} disagrees with popcount {bits}",
                self.edge_count
            )));
        }
        Ok(())
    }

    /// Relabel vertices inside each part so that they appear sorted by
    /// (degree vector into the other parts, bitrows) in decreasing order.
    ///
    /// Sorting repeats until the labelling is stable. Returns the relabelled
    /// graph and, per part, the old index of each new position.
    pub fn canonical_relabel(&self) -> (PartitionedGraph, Vec<Vec<usize>>) {
        let r = self.part_count();
        let mut current = self.clone();
        let mut perms: Vec<Vec<usize>> = (0..r).map(|p| (0..self.parts.size(p)).collect()).collect();
        let rounds = 4 * self.vertex_count() + 4;
        for _ in 0..rounds {
            let mut changed = false;
            #[allow(clippy::needless_range_loop)]
            for p in 0..r {
                let n = current.parts.size(p);
                let key = |i: usize| -> (Vec<usize>, Vec<Vec<bool>>) {
                    let v = VertexRef::new(p, i);
                    let degs = (0..r).filter(|&q| q != p).map(|q| current.degree_into(v, q)).collect();
                    let rows = (0..r)
                        .filter(|&q| q != p)
                        .map(|q| {
                            let row = current.row(v, q);
                            (0..current.parts.size(q)).map(|j| row[j / 64] >> (j % 64) & 1 == 1).collect()
                        })
                        .collect();
                    (degs, rows)
                };
                let mut order: Vec<usize> = (0..n).collect();
                let keys: Vec<_> = order.iter().map(|&i| key(i)).collect();
                order.sort_by(|&a, &b| keys[b].cmp(&keys[a]));
                if order.iter().enumerate().any(|(i, &j)| i != j) {
                    changed = true;
                    current = current.permute_part(p, &order);
                    perms[p] = order.iter().map(|&j| perms[p][j]).collect();
                }
            }
            if !changed {
                break;
            }
        }
        (current, perms)
    }

    /// New graph where position `i` of `part` holds old vertex `order[i]`.
    fn permute_part(&self, part: usize, order: &[usize]) -> PartitionedGraph {
        let mut inverse = vec![0; order.len()];
        for (i, &old) in order.iter().enumerate() {
            inverse[old] = i;
        }
        let relabel = |v: VertexRef| {
            if v.part == part {
                VertexRef::new(part, inverse[v.index])
            } else {
                v
            }
        };
        let mut g = PartitionedGraph::empty(self.parts.clone());
        for e in self.edges() {
            g.add_edge(Edge::new(relabel(e.u), relabel(e.v)).expect("relabel keeps parts"))
                .expect("relabel keeps vertices in range");
        }
        g
    }
}

impl fmt::Debug for PartitionedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartitionedGraph")
            .field("parts", &self.parts.sizes())
            .field("edges", &self.edges().map(|e| e.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

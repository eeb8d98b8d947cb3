use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, PartSizes, PartitionedGraph};

const NO_EDGE: u32 = u32::MAX;

/// A total edge colouring of a complete multipartite host.
///
/// Colour ids are dense, `0..color_count`, numbered by first occurrence in
/// canonical edge order.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    host: PartitionedGraph,
    edges: Vec<Edge>,
    /// `slot[a * n + b]` is the canonical index of edge `ab`.
    slot: Vec<u32>,
    colors: Vec<u32>,
    color_count: usize,
}

impl EdgeColoring {
    /// Builds a colouring from one colour per host edge, given in canonical
    /// edge order. Arbitrary ids are accepted and renumbered.
    pub fn from_colors(parts: PartSizes, colors: &[u32]) -> Result<Self> {
        let host = PartitionedGraph::complete(parts);
        if colors.len() != host.edge_count() {
            return Err(Error::Precondition(format!(
                "colouring is not total: {} colours for {} edges",
                colors.len(),
                host.edge_count()
            )));
        }
        let edges: Vec<Edge> = host.edges().collect();
        let n = host.vertex_count();
        let mut slot = vec![NO_EDGE; n * n];
        for (k, e) in edges.iter().enumerate() {
            let (a, b) = (host.global(e.u), host.global(e.v));
            slot[a * n + b] = k as u32;
            slot[b * n + a] = k as u32;
        }
        let mut renumber = HashMap::new();
        let colors: Vec<u32> = colors
            .iter()
            .map(|c| {
                let next = renumber.len() as u32;
                *renumber.entry(*c).or_insert(next)
            })
            .collect();
        Ok(EdgeColoring {
            host,
            edges,
            slot,
            colors,
            color_count: renumber.len(),
        })
    }

    pub fn from_fn(parts: PartSizes, mut color: impl FnMut(Edge) -> u32) -> Self {
        let host = PartitionedGraph::complete(parts.clone());
        let colors: Vec<u32> = host.edges().map(&mut color).collect();
        Self::from_colors(parts, &colors).expect("one colour per edge")
    }

    pub fn monochromatic(parts: PartSizes) -> Self {
        Self::from_fn(parts, |_| 0)
    }

    /// Every edge gets its own colour.
    pub fn rainbow(parts: PartSizes) -> Self {
        let mut next = 0;
        Self::from_fn(parts, |_| {
            next += 1;
            next
        })
    }

    pub fn host(&self) -> &PartitionedGraph {
        &self.host
    }

    pub fn parts(&self) -> &PartSizes {
        self.host.parts()
    }

    /// Host edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Colours aligned with [`EdgeColoring::edges`].
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        if !self.host.contains(e.u) || !self.host.contains(e.v) {
            return None;
        }
        let n = self.host.vertex_count();
        let k = self.slot[self.host.global(e.u) * n + self.host.global(e.v)];
        (k != NO_EDGE).then_some(k as usize)
    }

    pub fn color_of(&self, e: Edge) -> Option<u32> {
        self.edge_index(e).map(|k| self.colors[k])
    }

    /// Colour of the host edge between two global vertex ids.
    pub(crate) fn color_global(&self, a: usize, b: usize) -> u32 {
        let k = self.slot[a * self.host.vertex_count() + b];
        debug_assert_ne!(k, NO_EDGE);
        self.colors[k as usize]
    }

    /// Edges of each colour class, each class in canonical order.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.color_count];
        for (e, &c) in self.edges.iter().zip(&self.colors) {
            out[c as usize].push(*e);
        }
        out
    }

    /// Re-checks totality and the dense first-occurrence numbering.
    pub fn audit(&self) -> Result<()> {
        if self.colors.len() != self.host.edge_count() {
            return Err(Error::Invariant("colouring is not total".into()));
        }
        let mut seen = 0u32;
        for &c in &self.colors {
            if c > seen {
                return Err(Error::Invariant(format!("colour {c} appears before colour {seen}")));
            }
            if c == seen {
                seen += 1;
            }
        }
        if seen as usize != self.color_count {
            return Err(Error::Invariant("colour count mismatch".into()));
        }
        Ok(())
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EdgeColoring")
            .field("parts", &self.parts().sizes())
            .field("colors", &self.colors)
            .finish()
    }
}

//! Depth-first cycle search over global vertex ids.

use std::ops::ControlFlow;

use crate::coloring::EdgeColoring;
use crate::graph::PartitionedGraph;

/// Receives each cycle's vertex path and, for rainbow searches, its colours.
type Visit<'a> = dyn FnMut(&[usize], &[u32]) -> ControlFlow<()> + 'a;

/// Search state for simple cycles of a fixed length.
///
/// Cycles are reported once each: the DFS either starts at the minimum
/// vertex of the cycle (`min_start`) or at a fixed vertex, and the second
/// vertex must be smaller than the last.
pub(crate) struct CycleSearch<'a> {
    g: &'a PartitionedGraph,
    palette: Option<&'a EdgeColoring>,
    len: usize,
    multipartite: bool,
    min_start: bool,
    path: Vec<usize>,
    blocked: Vec<bool>,
    used: Vec<u32>,
    part_hits: Vec<usize>,
    distinct_parts: usize,
}

impl<'a> CycleSearch<'a> {
    pub fn new(g: &'a PartitionedGraph, len: usize) -> Self {
        CycleSearch {
            g,
            palette: None,
            len,
            multipartite: false,
            min_start: true,
            path: Vec::with_capacity(len),
            blocked: vec![false; g.vertex_count()],
            used: Vec::with_capacity(len + 8),
            part_hits: vec![0; g.part_count()],
            distinct_parts: 0,
        }
    }

    /// Require the cycle's vertices to meet at least three parts.
    pub fn multipartite(mut self) -> Self {
        self.multipartite = true;
        self
    }

    /// Only accept cycles whose edge colours are pairwise distinct and
    /// distinct from `already_used`.
    pub fn rainbow(mut self, palette: Option<&'a EdgeColoring>, already_used: &[u32]) -> Self {
        self.palette = palette;
        self.used.clear();
        self.used.extend_from_slice(already_used);
        self
    }

    pub fn avoiding(mut self, vertices: &[usize]) -> Self {
        for &v in vertices {
            self.blocked[v] = true;
        }
        self
    }

    /// Visit every cycle of the graph once.
    pub fn for_each(
        &mut self,
        visit: &mut Visit<'_>,
    ) -> ControlFlow<()> {
        self.min_start = true;
        for s in 0..self.g.vertex_count() {
            if self.blocked[s] {
                continue;
            }
            self.run(s, visit)?;
        }
        ControlFlow::Continue(())
    }

    /// Visit every cycle through `start` once.
    pub fn for_each_through(
        &mut self,
        start: usize,
        visit: &mut Visit<'_>,
    ) -> ControlFlow<()> {
        self.min_start = false;
        self.run(start, visit)
    }

    fn run(
        &mut self,
        start: usize,
        visit: &mut Visit<'_>,
    ) -> ControlFlow<()> {
        self.push(start);
        let flow = self.extend(visit);
        self.pop();
        flow
    }

    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.blocked[v] = true;
        let p = self.g.part_of(v);
        if self.part_hits[p] == 0 {
            self.distinct_parts += 1;
        }
        self.part_hits[p] += 1;
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.blocked[v] = false;
        let p = self.g.part_of(v);
        self.part_hits[p] -= 1;
        if self.part_hits[p] == 0 {
            self.distinct_parts -= 1;
        }
    }

    fn color_ok(&self, a: usize, b: usize) -> Option<Option<u32>> {
        match self.palette {
            None => Some(None),
            Some(pal) => {
                let c = pal.color_global(a, b);
                (!self.used.contains(&c)).then_some(Some(c))
            }
        }
    }

    fn extend(
        &mut self,
        visit: &mut Visit<'_>,
    ) -> ControlFlow<()> {
        let start = self.path[0];
        let last = *self.path.last().expect("non-empty path");
        if self.path.len() == self.len {
            if self.len < 3 || self.path[1] > self.path[self.len - 1] {
                return ControlFlow::Continue(());
            }
            if !self.g.has_edge_global(last, start) {
                return ControlFlow::Continue(());
            }
            if self.multipartite && self.distinct_parts < 3 {
                return ControlFlow::Continue(());
            }
            let Some(c) = self.color_ok(last, start) else {
                return ControlFlow::Continue(());
            };
            if let Some(c) = c {
                self.used.push(c);
            }
            let flow = visit(&self.path, &self.used);
            if c.is_some() {
                self.used.pop();
            }
            return flow;
        }
        let slots_left = self.len - self.path.len();
        let next: Vec<usize> = self.g.neighbors_global(last).collect();
        for nb in next {
            if self.blocked[nb] || (self.min_start && nb < start) {
                continue;
            }
            if self.multipartite {
                let new_part = self.part_hits[self.g.part_of(nb)] == 0;
                if self.distinct_parts + usize::from(new_part) + (slots_left - 1) < 3 {
                    continue;
                }
            }
            let Some(c) = self.color_ok(last, nb) else {
                continue;
            };
            if let Some(c) = c {
                self.used.push(c);
            }
            self.push(nb);
            let flow = self.extend(visit);
            self.pop();
            if c.is_some() {
                self.used.pop();
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

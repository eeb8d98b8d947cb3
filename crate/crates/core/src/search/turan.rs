//! Branch and bound over edge subsets of the complete 3-partite host.
//!
//! Edges are decided in branching order, "include" before "exclude", so the
//! first optimum reached is the lexicographically largest 0/1 vector among
//! all optimal subgraphs. Pruning never discards that vector:
//!
//! * an edge is *blocked* once including it would complete a forbidden copy
//!   together with already included edges;
//! * every forbidden copy whose missing edges are all still available costs
//!   at least one of them, and a greedy disjoint packing of such copies is
//!   subtracted from the count of available edges;
//! * vertices within a part are interchangeable, so the assignment must be
//!   no smaller than its image under each adjacent vertex swap.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::space::{disjoint_packing, swap_status, EdgeSpace};

pub(crate) struct TuranOutcome {
    pub value: usize,
    pub mask: u64,
    pub nodes: u64,
}

pub(crate) struct TuranSearch {
    m: usize,
    copies: Vec<u64>,
    /// For each edge, every forbidden copy through it minus the edge itself.
    rest_by_edge: Vec<Vec<u64>>,
    swaps: Vec<Vec<(u8, u8)>>,
}

#[derive(Clone, Copy)]
struct Node {
    depth: usize,
    included: u64,
    count: usize,
}

struct Subtree<'s> {
    search: &'s TuranSearch,
    global: &'s AtomicUsize,
    best: Option<(usize, u64)>,
    nodes: u64,
}

impl TuranSearch {
    pub fn new(space: &EdgeSpace, copies: Vec<u64>) -> Self {
        let m = space.len();
        let rest_by_edge = (0..m)
            .map(|e| {
                copies
                    .iter()
                    .filter(|&&c| c >> e & 1 == 1)
                    .map(|&c| c & !(1 << e))
                    .collect()
            })
            .collect();
        TuranSearch {
            m,
            copies,
            rest_by_edge,
            swaps: space.adjacent_swaps(),
        }
    }

    fn blocked(&self, e: usize, included: u64) -> bool {
        self.rest_by_edge[e].iter().any(|&rest| rest & !included == 0)
    }

    /// Mask of undecided edges forced to 0 by symmetry, or `None` if the
    /// partial assignment is not a lex leader.
    fn symmetry(&self, node: Node) -> Option<u64> {
        let mut forced = 0;
        for pairs in &self.swaps {
            forced |= swap_status(pairs, node.included, node.depth).ok()?;
        }
        Some(forced)
    }

    /// Undecided edges that may still be included.
    fn available(&self, node: Node, forced_zero: u64) -> u64 {
        let mut avail = 0;
        for e in node.depth..self.m {
            if forced_zero >> e & 1 == 0 && !self.blocked(e, node.included) {
                avail |= 1 << e;
            }
        }
        avail
    }

    fn bound(&self, node: Node, avail: u64) -> usize {
        let pack = disjoint_packing(self.copies.iter().filter_map(|&c| {
            let missing = c & !node.included;
            (missing != 0 && missing & !avail == 0).then_some(missing)
        }));
        node.count + avail.count_ones() as usize - pack as usize
    }

    /// Children of a node in visiting order.
    fn children(&self, node: Node) -> Option<(u64, [Option<Node>; 2])> {
        let forced = self.symmetry(node)?;
        let avail = self.available(node, forced);
        let bit = 1u64 << node.depth;
        let include = (avail & bit != 0).then_some(Node {
            depth: node.depth + 1,
            included: node.included | bit,
            count: node.count + 1,
        });
        let exclude = Some(Node {
            depth: node.depth + 1,
            ..node
        });
        Some((avail, [include, exclude]))
    }

    /// Nodes at `depth` (or leaves above it) in DFS order, without bound pruning.
    fn frontier(&self, depth: usize, nodes: &mut u64) -> Vec<Node> {
        let mut out = Vec::new();
        let mut stack = vec![Node {
            depth: 0,
            included: 0,
            count: 0,
        }];
        while let Some(node) = stack.pop() {
            if node.depth == depth.min(self.m) {
                out.push(node);
                continue;
            }
            *nodes += 1;
            if let Some((_, kids)) = self.children(node) {
                for kid in kids.into_iter().rev().flatten() {
                    stack.push(kid);
                }
            }
        }
        out
    }

    pub fn run(&self, split_depth: usize, global_floor: usize) -> TuranOutcome {
        let mut nodes = 0;
        let frontier = self.frontier(split_depth, &mut nodes);
        let global = AtomicUsize::new(global_floor);
        let total_nodes = AtomicU64::new(nodes);
        let results: Vec<Option<(usize, u64)>> = frontier
            .par_iter()
            .map(|&start| {
                let mut sub = Subtree {
                    search: self,
                    global: &global,
                    best: None,
                    nodes: 0,
                };
                sub.dfs(start);
                total_nodes.fetch_add(sub.nodes, Ordering::Relaxed);
                sub.best
            })
            .collect();
        // earliest subtree among those reaching the maximum value
        let (value, mask) = results
            .into_iter()
            .flatten()
            .fold(None, |acc: Option<(usize, u64)>, cur| match acc {
                Some(a) if a.0 >= cur.0 => Some(a),
                _ => Some(cur),
            })
            .unwrap_or((0, 0));
        TuranOutcome {
            value,
            mask,
            nodes: total_nodes.into_inner(),
        }
    }
}

impl Subtree<'_> {
    fn dfs(&mut self, node: Node) {
        self.nodes += 1;
        let s = self.search;
        if node.depth == s.m {
            if s.symmetry(node).is_some() && self.best.is_none_or(|(v, _)| node.count > v) {
                self.best = Some((node.count, node.included));
                self.global.fetch_max(node.count, Ordering::Relaxed);
            }
            return;
        }
        let Some((avail, kids)) = s.children(node) else {
            return;
        };
        let bound = s.bound(node, avail);
        if self.best.is_some_and(|(v, _)| bound <= v) || bound < self.global.load(Ordering::Relaxed) {
            return;
        }
        for kid in kids.into_iter().flatten() {
            self.dfs(kid);
        }
    }
}

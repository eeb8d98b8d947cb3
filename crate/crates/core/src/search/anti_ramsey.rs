//! Branch and bound over edge colourings of the complete 3-partite host.
//!
//! Colourings are restricted-growth strings in branching order: edge `k`
//! takes a colour at most one above the largest colour used before it, so
//! each partition of the edge set into colour classes is generated once.
//! Colours are tried in increasing order, which makes the first optimum
//! reached the lexicographically smallest optimal string.
//!
//! After edge `k` is coloured, only the multipartite 4-cycles whose last
//! edge is `k` need checking. The bound counts colours in use plus
//! undecided edges, minus a packing of disjoint copies that are not yet
//! broken (their coloured edges are pairwise distinct): each such copy
//! needs one undecided edge that repeats a colour.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::space::{disjoint_packing, EdgeSpace, MAX_SEARCH_EDGES};

pub(crate) struct ArOutcome {
    pub value: usize,
    /// Colour of each edge in branching order.
    pub colors: Vec<u8>,
    pub nodes: u64,
}

pub(crate) struct ArSearch {
    m: usize,
    copies: Vec<[u8; 4]>,
    masks: Vec<u64>,
    /// Copies whose largest edge index is `k`.
    completed_at: Vec<Vec<[u8; 4]>>,
}

#[derive(Clone)]
struct Node {
    depth: usize,
    used: usize,
    colors: [u8; MAX_SEARCH_EDGES],
}

struct Subtree<'s> {
    search: &'s ArSearch,
    global: &'s AtomicUsize,
    /// Values at or below this are never worth reporting.
    floor: usize,
    best: Option<(usize, [u8; MAX_SEARCH_EDGES])>,
    nodes: u64,
}

fn edges_of(mask: u64) -> [u8; 4] {
    let mut out = [0u8; 4];
    let mut rest = mask;
    for slot in &mut out {
        *slot = rest.trailing_zeros() as u8;
        rest &= rest - 1;
    }
    out
}

fn rainbow(colors: &[u8], copy: &[u8; 4]) -> bool {
    let c = copy.map(|e| colors[e as usize]);
    c[0] != c[1] && c[0] != c[2] && c[0] != c[3] && c[1] != c[2] && c[1] != c[3] && c[2] != c[3]
}

impl ArSearch {
    pub fn new(space: &EdgeSpace, masks: Vec<u64>) -> Self {
        let m = space.len();
        let copies: Vec<[u8; 4]> = masks.iter().map(|&c| edges_of(c)).collect();
        let mut completed_at = vec![Vec::new(); m];
        for c in &copies {
            completed_at[c[3] as usize].push(*c);
        }
        ArSearch {
            m,
            copies,
            masks,
            completed_at,
        }
    }

    fn bound(&self, node: &Node) -> usize {
        let decided = if node.depth >= 64 { u64::MAX } else { (1u64 << node.depth) - 1 };
        let pack = disjoint_packing(self.copies.iter().zip(&self.masks).filter_map(|(copy, &mask)| {
            let open = mask & !decided;
            if open == 0 {
                return None;
            }
            let mut seen: [u8; 4] = [u8::MAX; 4];
            let mut n = 0;
            for &e in copy {
                if (e as usize) < node.depth {
                    let c = node.colors[e as usize];
                    if seen[..n].contains(&c) {
                        return None;
                    }
                    seen[n] = c;
                    n += 1;
                }
            }
            Some(open)
        }));
        node.used + (self.m - node.depth) - pack as usize
    }

    /// Feasible children in colour order.
    fn children(&self, node: &Node) -> Vec<Node> {
        let top = if node.used < u8::MAX as usize { node.used } else { node.used - 1 };
        (0..=top)
            .filter_map(|c| {
                let mut kid = node.clone();
                kid.colors[node.depth] = c as u8;
                if self.completed_at[node.depth].iter().any(|copy| rainbow(&kid.colors, copy)) {
                    return None;
                }
                kid.depth += 1;
                kid.used = kid.used.max(c + 1);
                Some(kid)
            })
            .collect()
    }

    fn root() -> Node {
        Node {
            depth: 0,
            used: 0,
            colors: [0; MAX_SEARCH_EDGES],
        }
    }

    /// Colours reached by a quick greedy dive that prefers fresh colours,
    /// capped at `budget` nodes. Any value it returns is attained.
    pub fn greedy_value(&self, budget: u64) -> usize {
        fn dive(s: &ArSearch, node: Node, budget: &mut u64) -> Option<usize> {
            if node.depth == s.m {
                return Some(node.used);
            }
            for kid in s.children(&node).into_iter().rev() {
                if *budget == 0 {
                    return None;
                }
                *budget -= 1;
                if let Some(v) = dive(s, kid, budget) {
                    return Some(v);
                }
            }
            None
        }
        let mut budget = budget;
        dive(self, Self::root(), &mut budget).unwrap_or(1)
    }

    fn frontier(&self, depth: usize, nodes: &mut u64) -> Vec<Node> {
        let mut out = Vec::new();
        let mut stack = vec![Self::root()];
        while let Some(node) = stack.pop() {
            if node.depth == depth.min(self.m) {
                out.push(node);
                continue;
            }
            *nodes += 1;
            for kid in self.children(&node).into_iter().rev() {
                stack.push(kid);
            }
        }
        out
    }

    /// `known` must be a colour count some colouring is known to attain.
    pub fn run(&self, split_depth: usize, known: usize) -> ArOutcome {
        let mut nodes = 0;
        let frontier = self.frontier(split_depth, &mut nodes);
        let global = AtomicUsize::new(known);
        let total_nodes = AtomicU64::new(nodes);
        let results: Vec<Option<(usize, [u8; MAX_SEARCH_EDGES])>> = frontier
            .into_par_iter()
            .map(|start| {
                let mut sub = Subtree {
                    search: self,
                    global: &global,
                    floor: known.saturating_sub(1),
                    best: None,
                    nodes: 0,
                };
                sub.dfs(start);
                total_nodes.fetch_add(sub.nodes, Ordering::Relaxed);
                sub.best
            })
            .collect();
        let (value, colors) = results
            .into_iter()
            .flatten()
            .fold(None, |acc: Option<(usize, [u8; MAX_SEARCH_EDGES])>, cur| match acc {
                Some(a) if a.0 >= cur.0 => Some(a),
                _ => Some(cur),
            })
            .expect("a colouring attaining the known value exists");
        ArOutcome {
            value,
            colors: colors[..self.m].to_vec(),
            nodes: total_nodes.into_inner(),
        }
    }
}

impl Subtree<'_> {
    fn threshold(&self) -> usize {
        self.best.map_or(self.floor, |(v, _)| v)
    }

    fn dfs(&mut self, node: Node) {
        self.nodes += 1;
        let s = self.search;
        if node.depth == s.m {
            if node.used > self.threshold() {
                self.best = Some((node.used, node.colors));
                self.global.fetch_max(node.used, Ordering::Relaxed);
            }
            return;
        }
        let bound = s.bound(&node);
        if bound <= self.threshold() || bound < self.global.load(Ordering::Relaxed) {
            return;
        }
        for kid in s.children(&node) {
            self.dfs(kid);
        }
    }
}

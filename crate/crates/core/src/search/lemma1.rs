//! Edge bound for 3-partite graphs in which one part `X` sees both other
//! parts from every vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{PartitionedGraph, VertexRef};
use crate::patterns::{contains_c3, contains_c4multi};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma1Variant {
    /// Multipartite-4-cycle-free: `e(G) <= |Y||Z| + 2|X|`.
    C4Free,
    /// Triangle- and multipartite-4-cycle-free: `e(G) <= |Y||Z| + |X|`.
    C3C4Free,
}

impl fmt::Display for Lemma1Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma1Variant::C4Free => "i",
            Lemma1Variant::C3C4Free => "ii",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma1Outcome {
    pub bound: usize,
    pub edges: usize,
    pub holds: bool,
}

fn other_parts(x_part: usize) -> (usize, usize) {
    match x_part {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn check_args(g: &PartitionedGraph, x_part: usize) -> Result<()> {
    g.parts().require_tripartite()?;
    if x_part >= 3 {
        return Err(Error::Precondition(format!("part {x_part} does not exist")));
    }
    Ok(())
}

/// First vertex of `X` missing a neighbour in one of the other parts.
fn premise_gap(g: &PartitionedGraph, x_part: usize) -> Option<(VertexRef, usize)> {
    let (y, z) = other_parts(x_part);
    (0..g.parts().size(x_part)).map(|i| VertexRef::new(x_part, i)).find_map(|v| {
        if g.degree_into(v, y) == 0 {
            Some((v, y))
        } else if g.degree_into(v, z) == 0 {
            Some((v, z))
        } else {
            None
        }
    })
}

/// Every vertex of `X` has a neighbour in each of the other two parts.
pub fn check_lemma1_premise(g: &PartitionedGraph, x_part: usize) -> Result<bool> {
    check_args(g, x_part)?;
    Ok(premise_gap(g, x_part).is_none())
}

/// Evaluates the bound after re-checking the premise and the freeness the
/// variant requires; refuses with a witness when either fails.
pub fn lemma1_bound(g: &PartitionedGraph, x_part: usize, variant: Lemma1Variant) -> Result<Lemma1Outcome> {
    check_args(g, x_part)?;
    if let Some((v, part)) = premise_gap(g, x_part) {
        return Err(Error::Precondition(format!(
            "premise fails: vertex {v} of X has no neighbour in part {part}"
        )));
    }
    if let Some(copy) = contains_c4multi(g) {
        return Err(Error::Precondition(format!("graph is not C4-multi-free: {copy}")));
    }
    if variant == Lemma1Variant::C3C4Free {
        if let Some(copy) = contains_c3(g) {
            return Err(Error::Precondition(format!("graph is not C3-free: {copy}")));
        }
    }
    let (y, z) = other_parts(x_part);
    let sizes = g.parts().sizes();
    let per_x = match variant {
        Lemma1Variant::C4Free => 2,
        Lemma1Variant::C3C4Free => 1,
    };
    let bound = sizes[y] * sizes[z] + per_x * sizes[x_part];
    Ok(Lemma1Outcome {
        bound,
        edges: g.edge_count(),
        holds: g.edge_count() <= bound,
    })
}

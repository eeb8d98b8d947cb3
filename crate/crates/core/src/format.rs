//! Line-oriented text formats for graphs and colourings.
//!
//! ```text
//! multex-graph v1
//! parts 3 2 2
//! e 0:0 1:0
//! ```
//!
//! Colourings use the header `multex-coloring v1` and list every host edge
//! as `e p:i q:j c k`. Parts are written in the order the host was built
//! with; edges are sorted lexicographically in that numbering. Blank lines
//! and `#` comments are ignored on input.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Edge, PartSizes, PartitionedGraph, VertexRef};
use crate::patterns::PatternCopy;

pub const GRAPH_HEADER: &str = "multex-graph v1";
pub const COLORING_HEADER: &str = "multex-coloring v1";

/// Edge expressed in the numbering of the input part order.
fn to_input(parts: &PartSizes, e: Edge) -> Edge {
    let map = |v: VertexRef| VertexRef::new(parts.input_part(v.part), v.index);
    Edge::new(map(e.u), map(e.v)).expect("distinct parts stay distinct")
}

fn write_parts(out: &mut String, parts: &PartSizes) {
    out.push_str("parts");
    for n in parts.input_sizes() {
        let _ = write!(out, " {n}");
    }
    out.push('\n');
}

impl PartitionedGraph {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(GRAPH_HEADER);
        out.push('\n');
        write_parts(&mut out, self.parts());
        let mut edges: Vec<Edge> = self.edges().map(|e| to_input(self.parts(), e)).collect();
        edges.sort();
        for e in edges {
            let _ = writeln!(out, "e {} {}", e.u, e.v);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        lines.expect_header(GRAPH_HEADER)?;
        let parts = lines.parts()?;
        let mut g = PartitionedGraph::empty(parts.clone());
        while let Some((no, line)) = lines.next_line() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "e" {
                return Err(Error::parse(no, format!("expected `e p:i q:j`, found `{line}`")));
            }
            let e = parse_edge(&parts, no, fields[1], fields[2])?;
            if !g.add_edge(e)? {
                return Err(Error::parse(no, "duplicate edge"));
            }
        }
        Ok(g)
    }
}

impl PatternCopy {
    /// `kind v1 v2 ...` with vertices in the input part numbering of `parts`.
    pub fn to_text(&self, parts: &PartSizes) -> String {
        let mut out = self.kind.to_string();
        for v in &self.vertices {
            let _ = write!(out, " {}:{}", parts.input_part(v.part), v.index);
        }
        out
    }
}

impl EdgeColoring {
    pub fn to_text(&self) -> String {
        let parts = self.parts();
        let mut out = String::new();
        out.push_str(COLORING_HEADER);
        out.push('\n');
        write_parts(&mut out, parts);
        let mut rows: Vec<(Edge, u32)> = self
            .edges()
            .iter()
            .zip(self.colors())
            .map(|(e, &c)| (to_input(parts, *e), c))
            .collect();
        rows.sort();
        let mut renumber = HashMap::new();
        for (e, c) in rows {
            let next = renumber.len();
            let id = *renumber.entry(c).or_insert(next);
            let _ = writeln!(out, "e {} {} c {id}", e.u, e.v);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = Lines::new(text);
        lines.expect_header(COLORING_HEADER)?;
        let parts = lines.parts()?;
        let host = PartitionedGraph::complete(parts.clone());
        let mut assigned: BTreeMap<Edge, u32> = BTreeMap::new();
        let mut last_line = lines.line_no;
        while let Some((no, line)) = lines.next_line() {
            last_line = no;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 5 || fields[0] != "e" || fields[3] != "c" {
                return Err(Error::parse(no, format!("expected `e p:i q:j c k`, found `{line}`")));
            }
            let e = parse_edge(&parts, no, fields[1], fields[2])?;
            let c: u32 = fields[4]
                .parse()
                .map_err(|_| Error::parse(no, format!("bad colour id `{}`", fields[4])))?;
            if assigned.insert(e, c).is_some() {
                return Err(Error::parse(no, "edge coloured twice"));
            }
        }
        let mut colors = Vec::with_capacity(host.edge_count());
        for e in host.edges() {
            match assigned.get(&e) {
                Some(&c) => colors.push(c),
                None => {
                    let shown = to_input(&parts, e);
                    return Err(Error::parse(
                        last_line,
                        format!("colouring is not total: edge {shown} has no colour"),
                    ));
                }
            }
        }
        EdgeColoring::from_colors(parts, &colors)
    }
}

fn parse_vertex(parts: &PartSizes, no: usize, s: &str) -> Result<VertexRef> {
    let bad = || Error::parse(no, format!("bad vertex `{s}`, expected `part:index`"));
    let (p, i) = s.split_once(':').ok_or_else(bad)?;
    let p: usize = p.parse().map_err(|_| bad())?;
    let i: usize = i.parse().map_err(|_| bad())?;
    if p >= parts.count() {
        return Err(Error::parse(no, format!("part {p} does not exist")));
    }
    let part = parts.sorted_part(p);
    if i >= parts.size(part) {
        return Err(Error::parse(no, format!("vertex {s} is outside its part")));
    }
    Ok(VertexRef::new(part, i))
}

fn parse_edge(parts: &PartSizes, no: usize, a: &str, b: &str) -> Result<Edge> {
    let a = parse_vertex(parts, no, a)?;
    let b = parse_vertex(parts, no, b)?;
    Edge::new(a, b).map_err(|_| Error::parse(no, format!("intra-part edge {a} {b}")))
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    line_no: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            line_no: 0,
        }
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            self.line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                return Some((i + 1, line));
            }
        }
        None
    }

    fn expect_header(&mut self, header: &str) -> Result<()> {
        match self.next_line() {
            Some((_, line)) if line == header => Ok(()),
            Some((no, line)) => Err(Error::parse(no, format!("expected `{header}`, found `{line}`"))),
            None => Err(Error::parse(self.line_no.max(1), format!("missing `{header}` header"))),
        }
    }

    fn parts(&mut self) -> Result<PartSizes> {
        let (no, line) = self
            .next_line()
            .ok_or_else(|| Error::parse(self.line_no.max(1), "missing `parts` line"))?;
        let mut fields = line.split_whitespace();
        if fields.next() != Some("parts") {
            return Err(Error::parse(no, format!("expected `parts ...`, found `{line}`")));
        }
        let sizes = fields
            .map(|f| f.parse::<usize>().map_err(|_| Error::parse(no, format!("bad part size `{f}`"))))
            .collect::<Result<Vec<_>>>()?;
        PartSizes::new(&sizes).map_err(|e| Error::parse(no, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(s: &[usize]) -> PartSizes {
        PartSizes::new(s).unwrap()
    }

    #[test]
    fn empty_graph_is_header_only() {
        let g = PartitionedGraph::empty(parts(&[1, 1, 1]));
        assert_eq!(g.to_text(), "multex-graph v1\nparts 1 1 1\n");
    }

    #[test]
    fn one_edge_graph() {
        let mut g = PartitionedGraph::empty(parts(&[1, 1, 1]));
        g.add_edge(Edge::new(VertexRef::new(1, 0), VertexRef::new(0, 0)).unwrap()).unwrap();
        let text = g.to_text();
        assert_eq!(text.lines().filter(|l| l.starts_with("e ")).collect::<Vec<_>>(), vec!["e 0:0 1:0"]);
        assert_eq!(PartitionedGraph::from_text(&text).unwrap(), g);
    }

    #[test]
    fn edges_are_sorted_lexicographically() {
        let g = PartitionedGraph::complete(parts(&[2, 1, 1]));
        let text = g.to_text();
        let lines: Vec<&str> = text.lines().skip(2).collect();
        assert_eq!(lines, vec!["e 0:0 1:0", "e 0:0 2:0", "e 0:1 1:0", "e 0:1 2:0", "e 1:0 2:0"]);
    }

    #[test]
    fn unsorted_parts_keep_input_numbering() {
        let text = "multex-graph v1\nparts 1 3 2\ne 0:0 1:2\ne 1:0 2:1\n";
        let g = PartitionedGraph::from_text(text).unwrap();
        assert_eq!(g.parts().sizes(), &[3, 2, 1]);
        assert!(g.has_edge(VertexRef::new(2, 0), VertexRef::new(0, 2)));
        assert_eq!(g.to_text(), text);
    }

    #[test]
    fn copies_render_in_input_numbering() {
        let text = "multex-graph v1\nparts 1 1 1\ne 0:0 1:0\ne 0:0 2:0\ne 1:0 2:0\n";
        let g = PartitionedGraph::from_text(text).unwrap();
        let copy = crate::patterns::contains_c3(&g).unwrap();
        assert_eq!(copy.to_text(g.parts()), "c3 0:0 1:0 2:0");
        let g = PartitionedGraph::from_text("multex-graph v1\nparts 1 2 1\ne 0:0 1:1\ne 0:0 2:0\ne 1:1 2:0\n").unwrap();
        let copy = crate::patterns::contains_c3(&g).unwrap();
        let mut shown: Vec<&str> = Vec::new();
        let rendered = copy.to_text(g.parts());
        shown.extend(rendered.split(' ').skip(1));
        shown.sort_unstable();
        assert_eq!(shown, vec!["0:0", "1:1", "2:0"]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = |t: &str| PartitionedGraph::from_text(t).unwrap_err();
        assert_eq!(err(""), Error::parse(1, "missing `multex-graph v1` header"));
        assert!(matches!(err("multex-graph v2\n"), Error::Parse { line: 1, .. }));
        assert!(matches!(err("multex-graph v1\nparts 1 1\n"), Error::Parse { line: 2, .. }));
        assert!(matches!(
            err("multex-graph v1\nparts 2 1 1\ne 0:0 1:0\ne 0:0 0:1\n"),
            Error::Parse { line: 4, .. }
        ));
        assert!(matches!(err("multex-graph v1\nparts 2 1 1\n\ne 0:7 1:0\n"), Error::Parse { line: 4, .. }));
        assert!(matches!(err("multex-graph v1\nparts 2 1 1\ne 0:0 1:0\ne 1:0 0:0\n"), Error::Parse { line: 4, .. }));
        assert!(matches!(err("multex-graph v1\nparts 2 1 1\ne 0:0\n"), Error::Parse { line: 3, .. }));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a comment\nmultex-graph v1\n\nparts 1 1 1 # sizes\ne 0:0 2:0   # one edge\n";
        let g = PartitionedGraph::from_text(text).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn coloring_round_trip_and_normalization() {
        let p = parts(&[2, 1, 1]);
        let c = EdgeColoring::from_colors(p, &[5, 5, 2, 7, 2]).unwrap();
        let text = c.to_text();
        assert_eq!(
            text,
            "multex-coloring v1\nparts 2 1 1\ne 0:0 1:0 c 0\ne 0:0 2:0 c 0\ne 0:1 1:0 c 1\ne 0:1 2:0 c 2\ne 1:0 2:0 c 1\n"
        );
        assert_eq!(EdgeColoring::from_text(&text).unwrap(), c);
    }

    #[test]
    fn coloring_must_be_total() {
        let text = "multex-coloring v1\nparts 1 1 1\ne 0:0 1:0 c 0\ne 0:0 2:0 c 1\n";
        assert!(matches!(EdgeColoring::from_text(text), Err(Error::Parse { line: 4, .. })));
        let twice = "multex-coloring v1\nparts 1 1 1\ne 0:0 1:0 c 0\ne 0:0 1:0 c 1\n";
        assert!(matches!(EdgeColoring::from_text(twice), Err(Error::Parse { line: 4, .. })));
    }
}

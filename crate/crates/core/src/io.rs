//! Plain-text edge lists.
//!
//! ```text
//! 4
//! 0 1
//! 1 2
//! 2 3
//! B: 0 3
//! ```
//!
//! The first line is the vertex count, then one `u v` line per edge. An
//! optional `B:` line lists boundary vertices. Blank lines and `#` comments
//! are ignored.

use crate::error::{Error, Result};
use crate::graph::{BoundaryGraph, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    pub boundary: Option<Vec<usize>>,
}

impl EdgeList {
    /// The graph with its listed boundary, or with its leaves as boundary
    /// when none is listed.
    pub fn boundary_graph(&self) -> Result<BoundaryGraph> {
        match &self.boundary {
            Some(b) => BoundaryGraph::new_relaxed(self.graph.clone(), b),
            None => BoundaryGraph::leaves_as_boundary(self.graph.clone()),
        }
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a nonnegative integer, found `{tok}`"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut boundary = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("B:") {
            let ids = rest
                .split_whitespace()
                .map(|t| parse_usize(t, line_no))
                .collect::<Result<Vec<_>>>()?;
            boundary = Some(ids);
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (n, toks.as_slice()) {
            (None, [count]) => n = Some(parse_usize(count, line_no)?),
            (Some(_), [u, v]) => edges.push((parse_usize(u, line_no)?, parse_usize(v, line_no)?)),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unexpected line `{line}`"),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    Ok(EdgeList {
        graph: Graph::from_edges(n, &edges)?,
        boundary,
    })
}

pub fn format_edge_list(g: &Graph, boundary: Option<&[usize]>) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    if let Some(b) = boundary {
        let ids: Vec<String> = b.iter().map(usize::to_string).collect();
        s.push_str(&format!("B: {}\n", ids.join(" ")));
    }
    s
}

pub fn format_boundary_graph(bg: &BoundaryGraph) -> String {
    format_edge_list(bg.graph(), Some(&bg.boundary()))
}

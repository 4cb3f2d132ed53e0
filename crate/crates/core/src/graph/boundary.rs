use crate::error::{Error, Result};

use super::Graph;

/// A graph whose vertices are split into interior and boundary sets.
///
/// Boundary vertices have degree one and hang off an interior vertex.
/// [`BoundaryGraph::new`] additionally requires every interior vertex to have
/// degree at least two; [`BoundaryGraph::new_relaxed`] drops that requirement
/// for degenerate inputs such as a single edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryGraph {
    graph: Graph,
    boundary: Vec<bool>,
}

impl BoundaryGraph {
    pub fn new(graph: Graph, boundary: &[usize]) -> Result<Self> {
        let bg = Self::new_relaxed(graph, boundary)?;
        if let Some(v) = bg.interior().into_iter().find(|&v| bg.graph.degree(v) < 2) {
            return Err(Error::invalid(format!(
                "interior vertex {v} has degree {} (< 2)",
                bg.graph.degree(v)
            )));
        }
        Ok(bg)
    }

    pub fn new_relaxed(graph: Graph, boundary: &[usize]) -> Result<Self> {
        let n = graph.order();
        let mut flags = vec![false; n];
        for &b in boundary {
            if b >= n {
                return Err(Error::invalid(format!("boundary vertex {b} out of range")));
            }
            if flags[b] {
                return Err(Error::invalid(format!("boundary vertex {b} listed twice")));
            }
            flags[b] = true;
        }
        for v in (0..n).filter(|&v| flags[v]) {
            if graph.degree(v) != 1 {
                return Err(Error::invalid(format!(
                    "boundary vertex {v} has degree {}",
                    graph.degree(v)
                )));
            }
            let w = graph.neighbors(v)[0];
            if flags[w] {
                return Err(Error::invalid(format!(
                    "boundary vertex {v} is attached to boundary vertex {w}"
                )));
            }
        }
        Ok(BoundaryGraph {
            graph,
            boundary: flags,
        })
    }

    /// Every degree-one vertex becomes boundary, everything else interior.
    pub fn leaves_as_boundary(graph: Graph) -> Result<Self> {
        let leaves: Vec<usize> = (0..graph.order()).filter(|&v| graph.degree(v) == 1).collect();
        Self::new(graph, &leaves)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary[v]
    }

    pub fn boundary(&self) -> Vec<usize> {
        (0..self.graph.order()).filter(|&v| self.boundary[v]).collect()
    }

    pub fn interior(&self) -> Vec<usize> {
        (0..self.graph.order()).filter(|&v| !self.boundary[v]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaves_become_boundary() {
        let bg = BoundaryGraph::leaves_as_boundary(Graph::path(4)).unwrap();
        assert_eq!(bg.boundary(), vec![0, 3]);
        assert_eq!(bg.interior(), vec![1, 2]);
        let star = BoundaryGraph::leaves_as_boundary(Graph::star(3)).unwrap();
        assert_eq!(star.boundary(), vec![1, 2, 3]);
    }

    #[test]
    fn invariants_enforced() {
        // Boundary vertex of degree 2.
        assert!(BoundaryGraph::new(Graph::path(3), &[1]).is_err());
        // Both ends of a single edge would be boundary and adjacent.
        assert!(BoundaryGraph::leaves_as_boundary(Graph::path(2)).is_err());
        // Interior of degree 1 only passes the relaxed constructor.
        assert!(BoundaryGraph::new(Graph::path(2), &[1]).is_err());
        assert!(BoundaryGraph::new_relaxed(Graph::path(2), &[1]).is_ok());
    }
}

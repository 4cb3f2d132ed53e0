//! Simple undirected graphs and the structural predicates the extremal
//! characterizations are phrased in.

mod boundary;
pub mod canon;
pub mod ordering;
mod tree;

use std::collections::VecDeque;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

pub use boundary::BoundaryGraph;
pub use canon::{
    automorphism_count, graph_canonical_code, rooted_tree_code, tree_canonical_code, tree_centers,
    GRAPH_CANON_MAX_N,
};
pub use ordering::{
    find_bfs_ordering, find_bfs_ordering_from, find_slo_ordering, has_bfs_ordering,
    has_slo_ordering, is_ball_approximation, is_bfs_ordering, is_slo_ordering,
    ORDERING_SEARCH_MAX_N,
};
pub use tree::{caterpillar_spine, is_caterpillar, RootedTree};

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph, rejecting loops, parallel edges and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::invalid(format!("edge {u}-{v} out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::invalid(format!("parallel edge {u}-{v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos_v = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos_v, u);
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("cycle needs n >= 3")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Sorted degree sequence; fails when an isolated vertex is present.
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        DegreeSequence::new(self.degrees())
    }

    /// Degrees sorted nonincreasing, zeros kept.
    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Single-source BFS distances; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Heights from `root`, failing if some vertex is unreachable.
    pub fn heights(&self, root: usize) -> Result<Vec<usize>> {
        self.bfs_distances(root)
            .into_iter()
            .enumerate()
            .map(|(v, d)| d.ok_or(Error::Disconnected(root, v)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edge_count + 1 == self.order() && self.is_connected()
    }

    /// All-pairs shortest-path lengths.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.order()).map(|s| self.heights(s)).collect()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("relabeling preserves simplicity");
        }
        g
    }
}

use crate::error::{Error, Result};

use super::Graph;

/// A tree with a designated root, its parent map, heights and subtree sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
    parent: Vec<Option<usize>>,
    height: Vec<usize>,
    phi: Vec<usize>,
}

impl RootedTree {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if !graph.is_tree() {
            return Err(Error::invalid("graph is not a tree"));
        }
        if root >= graph.order() {
            return Err(Error::invalid(format!("root {root} out of range")));
        }
        let n = graph.order();
        let mut parent = vec![None; n];
        let mut height = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in graph.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    height[w] = height[u] + 1;
                    order.push(w);
                }
            }
        }
        let mut phi = vec![1; n];
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                phi[p] += phi[v];
            }
        }
        Ok(RootedTree {
            graph,
            root,
            parent,
            height,
            phi,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn height(&self, v: usize) -> usize {
        self.height[v]
    }

    pub fn heights(&self) -> &[usize] {
        &self.height
    }

    /// Children of `v`, in increasing vertex order.
    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.parent[w] == Some(v))
    }

    /// Subtree sizes `|T(u)|`.
    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn phi_sorted_desc(&self) -> Vec<usize> {
        let mut p = self.phi.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        let depth = self.height.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0; depth + 1];
        for &h in &self.height {
            sizes[h] += 1;
        }
        sizes
    }
}

/// True iff deleting all leaves leaves a path (possibly empty).
pub fn is_caterpillar(g: &Graph) -> Result<bool> {
    Ok(caterpillar_spine(g)?.is_some())
}

/// The spine of a caterpillar as an ordered vertex path, or `None` when the
/// tree is not a caterpillar.
pub fn caterpillar_spine(g: &Graph) -> Result<Option<Vec<usize>>> {
    if !g.is_tree() {
        return Err(Error::invalid("caterpillar test needs a tree"));
    }
    let n = g.order();
    let inner: Vec<bool> = (0..n).map(|v| g.degree(v) >= 2).collect();
    let inner_deg = |v: usize| g.neighbors(v).iter().filter(|&&w| inner[w]).count();
    let spine_vertices: Vec<usize> = (0..n).filter(|&v| inner[v]).collect();
    if spine_vertices.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if spine_vertices.iter().any(|&v| inner_deg(v) > 2) {
        return Ok(None);
    }
    // The inner vertices induce a subtree; with max degree 2 it is a path.
    let start = spine_vertices
        .iter()
        .copied()
        .find(|&v| inner_deg(v) <= 1)
        .expect("a finite path has an end");
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| inner[w] && w != prev);
        match next {
            Some(w) => {
                path.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    Ok(Some(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spider(legs: &[usize]) -> Graph {
        let n = 1 + legs.iter().sum::<usize>();
        let mut g = Graph::empty(n);
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                g.add_edge(prev, next).unwrap();
                prev = next;
                next += 1;
            }
        }
        g
    }

    #[test]
    fn rooted_tree_phi() {
        let t = RootedTree::new(Graph::path(4), 0).unwrap();
        assert_eq!(t.phi(), &[4, 3, 2, 1]);
        assert_eq!(t.layer_sizes(), vec![1, 1, 1, 1]);
        let s = RootedTree::new(Graph::star(3), 0).unwrap();
        assert_eq!(s.phi(), &[4, 1, 1, 1]);
        assert_eq!(s.children(0).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(RootedTree::new(Graph::cycle(3), 0).is_err());
    }

    #[test]
    fn caterpillar_examples() {
        for n in 1..8 {
            assert!(is_caterpillar(&Graph::path(n)).unwrap());
        }
        assert!(is_caterpillar(&Graph::star(5)).unwrap());
        assert!(!is_caterpillar(&spider(&[2, 2, 2])).unwrap());
        assert!(is_caterpillar(&spider(&[1, 2, 2])).unwrap());
        assert!(is_caterpillar(&Graph::cycle(4)).is_err());
    }

    #[test]
    fn spine_is_ordered_path() {
        let spine = caterpillar_spine(&Graph::path(5)).unwrap().unwrap();
        assert!(spine == vec![1, 2, 3] || spine == vec![3, 2, 1]);
        assert_eq!(caterpillar_spine(&Graph::star(4)).unwrap(), Some(vec![0]));
        assert_eq!(caterpillar_spine(&Graph::path(2)).unwrap(), Some(vec![]));
    }
}

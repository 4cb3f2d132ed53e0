//! BFS-orderings, spiral-like (SLO*) orderings and ball approximations.
//!
//! Both ordering notions share the same skeleton: a root, heights measured
//! from it, a per-vertex key that must be nondecreasing along the order, and
//! a cross-edge condition: if `uv` and `xy` are edges going one layer down,
//! `uy` and `xv` are not edges, and `u` precedes `x`, then `v` precedes `y`.
//! The search places vertices layer by layer and only branches among
//! vertices of equal key, pruning on the cross-edge condition as soon as a
//! violation becomes certain.

use crate::construct::greedy_tree;
use crate::error::{Error, Result};

use super::canon::tree_canonical_code;
use super::{BoundaryGraph, Graph};

/// Largest order for which an ordering search is attempted.
pub const ORDERING_SEARCH_MAX_N: usize = 16;

fn check_permutation(n: usize, order: &[usize], root: usize) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::invalid(format!(
            "ordering has {} entries for {n} vertices",
            order.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(Error::invalid("ordering is not a permutation of the vertices"));
        }
        pos[v] = i;
    }
    if order.first() != Some(&root) {
        return Err(Error::invalid("ordering must start at the root"));
    }
    Ok(pos)
}

/// Cross-edge condition over all edge pairs going one layer down. With
/// `same_layer` the two upper endpoints must share a layer.
fn cross_edges_consistent(g: &Graph, h: &[usize], pos: &[usize], same_layer: bool) -> bool {
    let down: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .flat_map(|(a, b)| [(a, b), (b, a)])
        .filter(|&(u, v)| h[v] == h[u] + 1)
        .collect();
    for &(u, v) in &down {
        for &(x, y) in &down {
            if u == x || (same_layer && h[u] != h[x]) {
                continue;
            }
            if g.has_edge(u, y) || g.has_edge(x, v) {
                continue;
            }
            if pos[u] < pos[x] && pos[v] > pos[y] {
                return false;
            }
        }
    }
    true
}

pub fn is_bfs_ordering(g: &Graph, order: &[usize], root: usize) -> Result<bool> {
    let pos = check_permutation(g.order(), order, root)?;
    let h = g.heights(root)?;
    let monotone = order.windows(2).all(|w| {
        h[w[0]] <= h[w[1]] && g.degree(w[0]) >= g.degree(w[1])
    });
    Ok(monotone && cross_edges_consistent(g, &h, &pos, true))
}

pub fn is_slo_ordering(bg: &BoundaryGraph, order: &[usize], root: usize) -> Result<bool> {
    let g = bg.graph();
    let pos = check_permutation(g.order(), order, root)?;
    let h = g.heights(root)?;
    let monotone = order.windows(2).all(|w| {
        let (v, u) = (w[0], w[1]);
        let heights = h[v] <= h[u];
        let boundary_suffix = !bg.is_boundary(v) || bg.is_boundary(u);
        let interior_degrees = bg.is_boundary(v) || bg.is_boundary(u) || g.degree(v) <= g.degree(u);
        heights && boundary_suffix && interior_degrees
    });
    Ok(monotone && cross_edges_consistent(g, &h, &pos, false))
}

struct OrderSearch<'a> {
    g: &'a Graph,
    key: Vec<(usize, usize)>,
    twin_class: Vec<usize>,
    h: Vec<usize>,
    layers: Vec<Vec<usize>>,
    pos: Vec<Option<usize>>,
    order: Vec<usize>,
}

impl<'a> OrderSearch<'a> {
    fn new(g: &'a Graph, key: Vec<(usize, usize)>) -> Self {
        let n = g.order();
        let closed = |v: usize| {
            let mut s = g.neighbors(v).to_vec();
            s.push(v);
            s.sort_unstable();
            s
        };
        let mut twin_class: Vec<usize> = (0..n).collect();
        for v in 0..n {
            for u in 0..v {
                if twin_class[u] != u || key[u] != key[v] {
                    continue;
                }
                if g.neighbors(u) == g.neighbors(v) || closed(u) == closed(v) {
                    twin_class[v] = u;
                    break;
                }
            }
        }
        OrderSearch {
            g,
            key,
            twin_class,
            h: Vec::new(),
            layers: Vec::new(),
            pos: vec![None; n],
            order: Vec::with_capacity(n),
        }
    }

    fn try_root(&mut self, root: usize) -> Result<Option<Vec<usize>>> {
        let n = self.g.order();
        self.h = self.g.heights(root)?;
        let depth = *self.h.iter().max().unwrap();
        self.layers = vec![Vec::new(); depth + 1];
        for v in 0..n {
            self.layers[self.h[v]].push(v);
        }
        // Keys must be nondecreasing along the whole order, so every layer
        // must sit entirely above the previous one.
        for t in 1..=depth {
            let prev_max = self.layers[t - 1].iter().map(|&v| self.key[v]).max().unwrap();
            let cur_min = self.layers[t].iter().map(|&v| self.key[v]).min().unwrap();
            if cur_min < prev_max {
                return Ok(None);
            }
        }
        self.pos = vec![None; n];
        self.order.clear();
        self.pos[root] = Some(0);
        self.order.push(root);
        if self.extend() {
            Ok(Some(self.order.clone()))
        } else {
            Ok(None)
        }
    }

    fn violates(&self, y: usize) -> bool {
        let g = self.g;
        let hy = self.h[y];
        for &x in g.neighbors(y).iter().filter(|&&x| self.h[x] + 1 == hy) {
            let px = self.pos[x].unwrap();
            for &u in &self.layers[hy - 1] {
                if u == x || self.pos[u].unwrap() > px || g.has_edge(u, y) {
                    continue;
                }
                let blocked = g.neighbors(u).iter().any(|&v| {
                    self.h[v] == hy && self.pos[v].is_none() && v != y && !g.has_edge(x, v)
                });
                if blocked {
                    return true;
                }
            }
        }
        false
    }

    fn extend(&mut self) -> bool {
        let placed = self.order.len();
        if placed == self.g.order() {
            return true;
        }
        let layer_idx = self.h[*self.order.last().unwrap()];
        let layer_idx = if self.layers[layer_idx].iter().all(|v| self.pos[*v].is_some()) {
            layer_idx + 1
        } else {
            layer_idx
        };
        let open: Vec<usize> = self.layers[layer_idx]
            .iter()
            .copied()
            .filter(|&v| self.pos[v].is_none())
            .collect();
        let min_key = open.iter().map(|&v| self.key[v]).min().unwrap();
        let mut tried_classes = Vec::new();
        for &c in &open {
            if self.key[c] != min_key || tried_classes.contains(&self.twin_class[c]) {
                continue;
            }
            tried_classes.push(self.twin_class[c]);
            if self.violates(c) {
                continue;
            }
            self.pos[c] = Some(placed);
            self.order.push(c);
            if self.extend() {
                return true;
            }
            self.order.pop();
            self.pos[c] = None;
        }
        false
    }
}

fn search_roots(
    g: &Graph,
    key: Vec<(usize, usize)>,
    roots: Vec<usize>,
) -> Result<Option<(usize, Vec<usize>)>> {
    let n = g.order();
    if n > ORDERING_SEARCH_MAX_N {
        return Err(Error::Capacity {
            what: "ordering search",
            limit: ORDERING_SEARCH_MAX_N,
            got: n,
        });
    }
    if n == 0 {
        return Ok(None);
    }
    let mut search = OrderSearch::new(g, key);
    let mut tried = Vec::new();
    for root in roots {
        let class = search.twin_class[root];
        if tried.contains(&class) {
            continue;
        }
        tried.push(class);
        if let Some(order) = search.try_root(root)? {
            return Ok(Some((root, order)));
        }
    }
    Ok(None)
}

/// Backtracking search for a BFS-ordering of a connected graph. Works for
/// trees too and is independent of the greedy-tree shortcut used by
/// [`has_bfs_ordering`].
pub fn find_bfs_ordering(g: &Graph) -> Result<Option<(usize, Vec<usize>)>> {
    let max = g.max_degree();
    let key = (0..g.order()).map(|v| (0, max - g.degree(v))).collect();
    let roots = (0..g.order()).filter(|&v| g.degree(v) == max).collect();
    search_roots(g, key, roots)
}

/// BFS-ordering search constrained to a fixed root.
pub fn find_bfs_ordering_from(g: &Graph, root: usize) -> Result<Option<Vec<usize>>> {
    let max = g.max_degree();
    let key = (0..g.order()).map(|v| (0, max - g.degree(v))).collect();
    Ok(search_roots(g, key, vec![root])?.map(|(_, order)| order))
}

/// Whether `g` has a BFS-ordering. Trees of any order are decided by
/// comparison with the greedy tree of their degree sequence; other graphs by
/// backtracking (at most [`ORDERING_SEARCH_MAX_N`] vertices).
pub fn has_bfs_ordering(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::invalid("BFS-ordering needs a connected graph"));
    }
    if g.is_tree() {
        if g.order() == 1 {
            return Ok(true);
        }
        let seq = g.degree_sequence()?;
        let greedy = greedy_tree(&seq)?;
        return Ok(tree_canonical_code(greedy.graph())? == tree_canonical_code(g)?);
    }
    Ok(find_bfs_ordering(g)?.is_some())
}

fn slo_key(bg: &BoundaryGraph) -> Vec<(usize, usize)> {
    let g = bg.graph();
    (0..g.order())
        .map(|v| {
            if bg.is_boundary(v) {
                (1, 0)
            } else {
                (0, g.degree(v))
            }
        })
        .collect()
}

/// Backtracking search for an SLO*-ordering rooted at an interior vertex.
pub fn find_slo_ordering(bg: &BoundaryGraph) -> Result<Option<(usize, Vec<usize>)>> {
    let g = bg.graph();
    if !g.is_connected() {
        return Err(Error::invalid("SLO*-ordering needs a connected graph"));
    }
    let interior = bg.interior();
    let Some(min_deg) = interior.iter().map(|&v| g.degree(v)).min() else {
        return Ok(None);
    };
    let roots = interior
        .into_iter()
        .filter(|&v| g.degree(v) == min_deg)
        .collect();
    search_roots(g, slo_key(bg), roots)
}

pub fn has_slo_ordering(bg: &BoundaryGraph) -> Result<bool> {
    Ok(find_slo_ordering(bg)?.is_some())
}

/// Ball approximation: for some interior root and some `r >= 1`, layer sizes
/// are nondecreasing from layer 1 to layer `r` and every boundary vertex sits
/// at height `r` or `r + 1`.
pub fn is_ball_approximation(bg: &BoundaryGraph) -> Result<bool> {
    let g = bg.graph();
    let boundary = bg.boundary();
    for root in bg.interior() {
        let h = g.heights(root)?;
        let depth = *h.iter().max().unwrap();
        let mut sizes = vec![0usize; depth + 2];
        for &x in &h {
            sizes[x] += 1;
        }
        let candidates: Vec<usize> = match (
            boundary.iter().map(|&b| h[b]).min(),
            boundary.iter().map(|&b| h[b]).max(),
        ) {
            (Some(lo), Some(hi)) if hi <= lo + 1 => {
                let mut c = vec![lo];
                if hi == lo && lo >= 2 {
                    c.push(lo - 1);
                }
                c
            }
            (Some(_), Some(_)) => Vec::new(),
            _ => vec![1],
        };
        for r in candidates.into_iter().filter(|&r| r >= 1) {
            if (1..r).all(|i| sizes[i + 1] >= sizes[i]) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tree of order 17 drawn as the greedy tree of (4,4,3,3,3,3,2,1^10),
    /// labeled layer by layer.
    fn figure_one() -> Graph {
        let edges = [
            (0, 1), (0, 2), (0, 3), (0, 4),
            (1, 5), (1, 6), (1, 7), (2, 8), (2, 9), (3, 10), (3, 11), (4, 12), (4, 13),
            (5, 14), (5, 15), (6, 16),
        ];
        Graph::from_edges(17, &edges).unwrap()
    }

    /// Same degree sequence, but the degree-3 vertex of layer 2 hangs below a
    /// degree-3 vertex of layer 1 instead of the degree-4 one.
    fn figure_two() -> Graph {
        let edges = [
            (0, 1), (0, 2), (0, 3), (0, 4),
            (1, 5), (1, 6), (1, 7), (2, 8), (2, 9), (3, 10), (3, 11), (4, 12), (4, 13),
            (8, 14), (8, 15), (6, 16),
        ];
        Graph::from_edges(17, &edges).unwrap()
    }

    #[test]
    fn figure_one_labeling_is_bfs() {
        let g = figure_one();
        let order: Vec<usize> = (0..17).collect();
        assert!(is_bfs_ordering(&g, &order, 0).unwrap());
        assert!(has_bfs_ordering(&g).unwrap());
    }

    #[test]
    fn figure_two_has_no_bfs_ordering() {
        let g = figure_two();
        assert_eq!(g.sorted_degrees(), figure_one().sorted_degrees());
        assert!(!has_bfs_ordering(&g).unwrap());
        let order: Vec<usize> = (0..17).collect();
        assert!(!is_bfs_ordering(&g, &order, 0).unwrap());
    }

    #[test]
    fn single_edge_and_cycle() {
        let e = Graph::path(2);
        assert!(is_bfs_ordering(&e, &[0, 1], 0).unwrap());
        assert!(has_bfs_ordering(&Graph::cycle(5)).unwrap());
        assert!(find_bfs_ordering(&Graph::cycle(5)).unwrap().is_some());
    }

    #[test]
    fn bfs_ordering_rejects_bad_permutations() {
        let g = Graph::path(3);
        assert!(is_bfs_ordering(&g, &[1, 0], 1).is_err());
        assert!(is_bfs_ordering(&g, &[1, 0, 0], 1).is_err());
        assert!(is_bfs_ordering(&g, &[0, 1, 2], 1).is_err());
        // Root of degree 1 followed by a degree-2 vertex.
        assert!(!is_bfs_ordering(&g, &[0, 1, 2], 0).unwrap());
        assert!(is_bfs_ordering(&g, &[1, 0, 2], 1).unwrap());
    }

    #[test]
    fn slo_star_and_path() {
        let star = BoundaryGraph::leaves_as_boundary(Graph::star(4)).unwrap();
        assert!(is_slo_ordering(&star, &[0, 1, 2, 3, 4], 0).unwrap());
        assert!(has_slo_ordering(&star).unwrap());

        let p5 = BoundaryGraph::leaves_as_boundary(Graph::path(5)).unwrap();
        assert!(is_slo_ordering(&p5, &[2, 1, 3, 0, 4], 2).unwrap());
        assert!(has_slo_ordering(&p5).unwrap());
        // A boundary vertex ahead of an interior one.
        assert!(!is_slo_ordering(&p5, &[1, 0, 2, 3, 4], 1).unwrap());
        assert!(!is_slo_ordering(&p5, &[2, 1, 0, 3, 4], 2).unwrap());
    }

    #[test]
    fn slo_p5_only_center_root_works() {
        let p5 = BoundaryGraph::leaves_as_boundary(Graph::path(5)).unwrap();
        let interior = [1usize, 2, 3];
        let mut valid_roots = Vec::new();
        // All orders: root, then the remaining two interior vertices in either
        // order, then both boundary vertices in either order.
        for &root in &interior {
            let rest: Vec<usize> = interior.iter().copied().filter(|&v| v != root).collect();
            for (a, b) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                for (c, d) in [(0, 4), (4, 0)] {
                    if is_slo_ordering(&p5, &[root, a, b, c, d], root).unwrap() {
                        valid_roots.push(root);
                    }
                }
            }
        }
        valid_roots.dedup();
        assert_eq!(valid_roots, vec![2]);
    }

    #[test]
    fn ball_approximation_examples() {
        let star = BoundaryGraph::leaves_as_boundary(Graph::star(4)).unwrap();
        assert!(is_ball_approximation(&star).unwrap());
        let edge = BoundaryGraph::new_relaxed(Graph::path(2), &[1]).unwrap();
        assert!(is_ball_approximation(&edge).unwrap());
        // Rooted at its center, P5 has layers 1,2,2 and both ends at height 2.
        let p5 = BoundaryGraph::leaves_as_boundary(Graph::path(5)).unwrap();
        assert!(is_ball_approximation(&p5).unwrap());
        // A caterpillar with pendants at spine positions 1, 3 and 5: from any
        // root some leaves are two levels apart.
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 7), (3, 8), (5, 9)];
        let t = BoundaryGraph::leaves_as_boundary(Graph::from_edges(10, &edges).unwrap()).unwrap();
        assert!(!is_ball_approximation(&t).unwrap());
    }
}

//! Canonical codes for isomorphism deduplication at desk scale.

use crate::error::{Error, Result};

use super::Graph;

/// Largest order accepted by [`graph_canonical_code`] and [`automorphism_count`].
pub const GRAPH_CANON_MAX_N: usize = 10;

/// AHU code of `g` rooted at `root`. `g` must be a tree.
pub fn rooted_tree_code(g: &Graph, root: usize) -> String {
    fn walk(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| walk(g, w, v))
            .collect();
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        s.push('(');
        for k in kids {
            s.push_str(&k);
        }
        s.push(')');
        s
    }
    walk(g, root, usize::MAX)
}

/// Tree centers (one or two vertices) found by repeated leaf stripping.
pub fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Isomorphism-invariant string for a tree: the smallest AHU code over its
/// centers.
pub fn tree_canonical_code(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::invalid("tree_canonical_code needs a tree"));
    }
    Ok(tree_centers(g)
        .into_iter()
        .map(|c| rooted_tree_code(g, c))
        .min()
        .expect("a tree has at least one center"))
}

/// Stable color refinement starting from degrees. Colors are ranks of
/// label-independent signatures, so they are preserved by isomorphisms.
fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors = g.degrees();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        colors = next;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    /// Allowed vertices for each position.
    cell_of_pos: Vec<Vec<usize>>,
    perm: Vec<usize>,
    used: Vec<bool>,
    cur: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl CanonSearch<'_> {
    fn col_offset(j: usize) -> usize {
        j * (j.saturating_sub(1)) / 2
    }

    /// Returns whether `best` was replaced somewhere below this node.
    fn search(&mut self, j: usize, equal_so_far: bool) -> bool {
        if j == self.n {
            if self.best.is_none() || !equal_so_far {
                self.best = Some(self.cur.clone());
                return true;
            }
            return false;
        }
        let off = Self::col_offset(j);
        let mut eq = equal_so_far && self.best.is_some();
        let mut updated = false;
        let cands = self.cell_of_pos[j].clone();
        for v in cands {
            if self.used[v] {
                continue;
            }
            for i in 0..j {
                self.cur[off + i] = self.g.has_edge(self.perm[i], v);
            }
            let child_eq = if eq {
                let best = self.best.as_ref().unwrap();
                match self.cur[off..off + j].cmp(&best[off..off + j]) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => true,
                }
            } else {
                false
            };
            self.used[v] = true;
            self.perm.push(v);
            if self.search(j + 1, child_eq) {
                updated = true;
                eq = true;
            }
            self.perm.pop();
            self.used[v] = false;
        }
        updated
    }
}

/// Canonical code for a general graph: the lexicographically largest
/// upper-triangle adjacency string over all vertex orders compatible with the
/// refined degree partition. Equal codes iff isomorphic.
pub fn graph_canonical_code(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH_CANON_MAX_N {
        return Err(Error::Capacity {
            what: "graph canonical code",
            limit: GRAPH_CANON_MAX_N,
            got: n,
        });
    }
    let colors = refined_colors(g);
    let mut by_color: Vec<(usize, usize)> = colors.iter().enumerate().map(|(v, &c)| (c, v)).collect();
    by_color.sort_unstable();
    let cell_of_pos: Vec<Vec<usize>> = by_color
        .iter()
        .map(|&(c, _)| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    let mut search = CanonSearch {
        g,
        n,
        cell_of_pos,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        cur: vec![false; n * n.saturating_sub(1) / 2],
        best: None,
    };
    search.search(0, false);
    let bits = search.best.unwrap_or_default();
    let mut hex = String::with_capacity(bits.len() / 4 + 1);
    for chunk in bits.chunks(4) {
        let mut nibble = 0u32;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                nibble |= 8 >> k;
            }
        }
        hex.push(char::from_digit(nibble, 16).unwrap());
    }
    Ok(format!("{n}:{hex}"))
}

/// Number of automorphisms of `g`, by backtracking over color-preserving
/// vertex maps.
pub fn automorphism_count(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > GRAPH_CANON_MAX_N {
        return Err(Error::Capacity {
            what: "automorphism count",
            limit: GRAPH_CANON_MAX_N,
            got: n,
        });
    }
    let colors = refined_colors(g);
    fn extend(g: &Graph, colors: &[usize], image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let v = image.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.order() {
            if used[w] || colors[w] != colors[v] {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            used[w] = true;
            image.push(w);
            total += extend(g, colors, image, used);
            image.pop();
            used[w] = false;
        }
        total
    }
    Ok(extend(g, &colors, &mut Vec::with_capacity(n), &mut vec![false; n]))
}

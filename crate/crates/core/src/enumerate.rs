//! Exhaustive, isomorphism-deduplicated realizations of a degree sequence.
//!
//! Trees come from Prüfer sequences. Unicyclic and general connected
//! realizations are grown from spanning trees: every connected graph with
//! sequence `π` contains a spanning tree whose sorted degrees are dominated
//! entrywise by `π`, so adding edges one at a time to all such trees, pruning
//! any graph whose sorted degrees exceed `π` and deduplicating each level by
//! canonical code, reaches every isomorphism class.

use std::collections::HashSet;

use crate::degseq::{classify, has_connected_realization, Classification, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::{automorphism_count, graph_canonical_code, tree_canonical_code, BoundaryGraph, Graph};

pub const TREE_ENUM_MAX_N: usize = 11;
pub const UNICYCLIC_ENUM_MAX_N: usize = 9;
pub const CONNECTED_ENUM_MAX_N: usize = 8;

fn cap(what: &'static str, limit: usize, n: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Capacity { what, limit, got: n });
    }
    Ok(())
}

/// Rearranges `a` into the next lexicographic permutation; false at the end.
fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Decodes a Prüfer sequence over `0..n`.
pub fn prufer_decode(code: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || code.len() != n - 2 || code.iter().any(|&x| x >= n) {
        return Err(Error::invalid("not a Prüfer sequence"));
    }
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut g = Graph::empty(n);
    for &x in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, x)?;
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1])?;
    Ok(g)
}

/// One representative per isomorphism class of trees with sequence `pi`, in
/// order of first appearance among lexicographically generated Prüfer codes.
/// Vertex `i` of each representative has degree `pi[i]`.
pub fn trees_with_sequence(pi: &DegreeSequence) -> Result<Vec<Graph>> {
    if classify(pi) != Classification::Tree {
        return Err(Error::precondition(format!("{pi} is not a tree sequence")));
    }
    let n = pi.len();
    cap("tree enumeration", TREE_ENUM_MAX_N, n)?;
    if n == 2 {
        return Ok(vec![Graph::path(2)]);
    }
    let mut code: Vec<usize> = pi
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d - 1))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    loop {
        let t = prufer_decode(&code, n)?;
        if seen.insert(tree_canonical_code(&t)?) {
            out.push(t);
        }
        if !next_permutation(&mut code) {
            break;
        }
    }
    Ok(out)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Labeled trees on `0..n` in which vertex `i` has degree `pi[i]`:
/// `(n-2)! / Π (d_i - 1)!`.
pub fn labeled_tree_count(pi: &DegreeSequence) -> Result<u128> {
    if classify(pi) != Classification::Tree {
        return Err(Error::precondition(format!("{pi} is not a tree sequence")));
    }
    let denom: u128 = pi.entries().iter().map(|&d| factorial(d - 1)).product();
    Ok(factorial(pi.len() - 2) / denom)
}

/// Labeled graphs on `0..n` in which vertex `i` has degree `pi[i]`, summed
/// over the given isomorphism classes by orbit counting:
/// `Σ Π m_d! / |Aut(G)|` with `m_d` the multiplicity of degree `d`.
pub fn labeled_count(pi: &DegreeSequence, classes: &[Graph]) -> Result<u128> {
    let mut mult = std::collections::BTreeMap::new();
    for &d in pi.entries() {
        *mult.entry(d).or_insert(0usize) += 1;
    }
    let perms: u128 = mult.values().map(|&m| factorial(m)).product();
    let mut total = 0;
    for g in classes {
        total += perms / u128::from(automorphism_count(g)?);
    }
    Ok(total)
}

fn dominated(g: &Graph, pi: &[usize]) -> bool {
    g.sorted_degrees().iter().zip(pi).all(|(a, b)| a <= b)
}

/// All connected realizations up to isomorphism, grown from spanning trees.
fn grow(pi: &DegreeSequence) -> Result<Vec<Graph>> {
    let n = pi.len();
    let target = pi.entries();
    let extra = pi.sum() / 2 - (n - 1);
    let mut level = Vec::new();
    let mut seen = HashSet::new();
    for seq in crate::degseq::enumerate_tree_sequences(n)? {
        if seq.entries().iter().zip(target).any(|(a, b)| a > b) {
            continue;
        }
        for t in trees_with_sequence(&seq)? {
            if seen.insert(graph_canonical_code(&t)?) {
                level.push(t);
            }
        }
    }
    for _ in 0..extra {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for g in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(u, v)?;
                    if dominated(&h, target) && seen.insert(graph_canonical_code(&h)?) {
                        next.push(h);
                    }
                }
            }
        }
        level = next;
    }
    level.retain(|g| g.sorted_degrees() == target);
    Ok(level)
}

/// Isomorphism classes of connected graphs with `n` edges and sequence `pi`.
pub fn unicyclic_with_sequence(pi: &DegreeSequence) -> Result<Vec<Graph>> {
    if classify(pi) != Classification::Unicyclic {
        return Err(Error::precondition(format!("{pi} is not a unicyclic sequence")));
    }
    cap("unicyclic enumeration", UNICYCLIC_ENUM_MAX_N, pi.len())?;
    grow(pi)
}

/// Isomorphism classes of connected graphs with sequence `pi`.
pub fn connected_with_sequence(pi: &DegreeSequence) -> Result<Vec<Graph>> {
    if !has_connected_realization(pi) {
        return Err(Error::precondition(format!("{pi} has no connected realization")));
    }
    cap("connected enumeration", CONNECTED_ENUM_MAX_N, pi.len())?;
    if pi.len() == 2 {
        return Ok(vec![Graph::path(2)]);
    }
    grow(pi)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryVariants {
    pub graphs: Vec<BoundaryGraph>,
    /// Input positions skipped because some non-leaf vertex has degree < 2
    /// or the leaves cannot all be boundary.
    pub filtered: Vec<usize>,
}

/// Wraps each graph with its leaves as boundary.
pub fn boundary_variants(graphs: &[Graph]) -> BoundaryVariants {
    let mut out = BoundaryVariants {
        graphs: Vec::new(),
        filtered: Vec::new(),
    };
    for (i, g) in graphs.iter().enumerate() {
        let has_leaf = (0..g.order()).any(|v| g.degree(v) == 1);
        match BoundaryGraph::leaves_as_boundary(g.clone()) {
            Ok(bg) if has_leaf => out.graphs.push(bg),
            _ => out.filtered.push(i),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn tree_class_counts() {
        assert_eq!(trees_with_sequence(&seq("2,2,1,1")).unwrap().len(), 1);
        assert_eq!(labeled_tree_count(&seq("2,2,1,1")).unwrap(), 2);
        assert_eq!(trees_with_sequence(&seq("3,2,2,1,1,1")).unwrap().len(), 2);
        assert_eq!(labeled_tree_count(&seq("3,2,2,1,1,1")).unwrap(), 12);
        assert_eq!(trees_with_sequence(&seq("4,1,1,1,1")).unwrap().len(), 1);
        assert_eq!(labeled_tree_count(&seq("4,1,1,1,1")).unwrap(), 1);
    }

    #[test]
    fn tree_representatives_keep_vertex_degrees() {
        let pi = seq("3,3,2,1,1,1,1");
        for t in trees_with_sequence(&pi).unwrap() {
            assert_eq!(t.degrees(), pi.entries());
        }
    }

    #[test]
    fn unicyclic_examples() {
        assert_eq!(unicyclic_with_sequence(&seq("2,2,2")).unwrap().len(), 1);
        assert_eq!(unicyclic_with_sequence(&seq("2,2,2,2")).unwrap().len(), 1);
        // Triangle with a pendant at two of its vertices is the only one.
        assert_eq!(unicyclic_with_sequence(&seq("3,3,2,1,1")).unwrap().len(), 1);
        assert!(unicyclic_with_sequence(&seq("2,1,1")).is_err());
    }

    #[test]
    fn connected_examples() {
        assert_eq!(connected_with_sequence(&seq("1,1")).unwrap().len(), 1);
        assert_eq!(connected_with_sequence(&seq("2,2,2,2,2")).unwrap().len(), 1);
        assert_eq!(connected_with_sequence(&seq("3,3,3,3")).unwrap().len(), 1);
        assert!(connected_with_sequence(&seq("1,1,1,1")).is_err());
    }

    #[test]
    fn labeled_counts_by_orbits() {
        let pi = seq("3,2,2,1,1,1");
        let classes = trees_with_sequence(&pi).unwrap();
        assert_eq!(labeled_count(&pi, &classes).unwrap(), 12);
        let c4 = seq("2,2,2,2");
        assert_eq!(labeled_count(&c4, &connected_with_sequence(&c4).unwrap()).unwrap(), 3);
    }

    #[test]
    fn boundary_wrapping() {
        let v = boundary_variants(&[Graph::path(4), Graph::cycle(5), Graph::star(3)]);
        assert_eq!(v.graphs.len(), 2);
        assert_eq!(v.filtered, vec![1]);
        assert_eq!(v.graphs[0].boundary(), vec![0, 3]);
        assert_eq!(v.graphs[1].boundary(), vec![1, 2, 3]);
    }
}

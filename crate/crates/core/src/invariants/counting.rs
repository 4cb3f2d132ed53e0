//! Matching, independent-set and subtree counts.
//!
//! Trees use rooted dynamic programming over polynomials; other graphs use
//! vertex branching on bitmasks, limited to [`BRANCHING_MAX_N`] vertices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedTree};

pub const BRANCHING_MAX_N: usize = 16;

fn add_into(acc: &mut Vec<u64>, p: &[u64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += c;
    }
}

fn mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut p: Vec<u64>) -> Vec<u64> {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn postorder(t: &RootedTree) -> Vec<usize> {
    let mut order = vec![t.root()];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        order.extend(t.children(v));
        i += 1;
    }
    order.reverse();
    order
}

fn tree_matchings(t: &RootedTree) -> Vec<u64> {
    let n = t.graph().order();
    // free[v]: v unmatched inside T(v); all[v]: any matching of T(v).
    let mut free = vec![Vec::new(); n];
    let mut all = vec![Vec::new(); n];
    for v in postorder(t) {
        let mut f = vec![1u64];
        for c in t.children(v) {
            f = mul(&f, &all[c]);
        }
        let mut a = f.clone();
        for c in t.children(v) {
            // Match v with c: c must be free, the other children arbitrary.
            let mut rest = vec![1u64];
            for d in t.children(v).filter(|&d| d != c) {
                rest = mul(&rest, &all[d]);
            }
            add_into(&mut a, &mul(&rest, &free[c]), 1);
        }
        free[v] = f;
        all[v] = a;
    }
    trim(all[t.root()].clone())
}

fn tree_independent_sets(t: &RootedTree) -> Vec<u64> {
    let n = t.graph().order();
    let mut out_ = vec![Vec::new(); n];
    let mut in_ = vec![Vec::new(); n];
    for v in postorder(t) {
        let mut without = vec![1u64];
        let mut with = vec![0u64, 1];
        for c in t.children(v) {
            let mut either = out_[c].clone();
            add_into(&mut either, &in_[c], 0);
            without = mul(&without, &either);
            with = mul(&with, &out_[c]);
        }
        out_[v] = without;
        in_[v] = with;
    }
    let r = t.root();
    let mut total = out_[r].clone();
    add_into(&mut total, &in_[r], 0);
    trim(total)
}

fn check_branching(g: &Graph) -> Result<()> {
    if g.order() > BRANCHING_MAX_N {
        return Err(Error::Capacity {
            what: "matching/independence branching",
            limit: BRANCHING_MAX_N,
            got: g.order(),
        });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn branch_matchings(nb: &[u32], alive: u32, memo: &mut HashMap<u32, Vec<u64>>) -> Vec<u64> {
    // Drop vertices without live neighbors; they never take part.
    let mut live = alive;
    for (v, &m) in nb.iter().enumerate() {
        if live & (1 << v) != 0 && m & live == 0 {
            live &= !(1 << v);
        }
    }
    if live == 0 {
        return vec![1];
    }
    if let Some(p) = memo.get(&live) {
        return p.clone();
    }
    let v = live.trailing_zeros() as usize;
    let rest = live & !(1 << v);
    let mut p = branch_matchings(nb, rest, memo);
    let mut partners = nb[v] & rest;
    while partners != 0 {
        let u = partners.trailing_zeros();
        partners &= partners - 1;
        let sub = branch_matchings(nb, rest & !(1 << u), memo);
        add_into(&mut p, &sub, 1);
    }
    memo.insert(live, p.clone());
    p
}

fn branch_independent(nb: &[u32], alive: u32, memo: &mut HashMap<u32, Vec<u64>>) -> Vec<u64> {
    if alive == 0 {
        return vec![1];
    }
    if let Some(p) = memo.get(&alive) {
        return p.clone();
    }
    let v = alive.trailing_zeros() as usize;
    let mut p = branch_independent(nb, alive & !(1 << v), memo);
    let sub = branch_independent(nb, alive & !(1 << v) & !nb[v], memo);
    add_into(&mut p, &sub, 1);
    memo.insert(alive, p.clone());
    p
}

fn full_mask(n: usize) -> u32 {
    (1u32 << n) - 1
}

/// `m(G, k)` for `k = 0, 1, ...`, with `m(G, 0) = 1`.
pub fn matching_profile(g: &Graph) -> Result<Vec<u64>> {
    if g.is_tree() {
        return Ok(tree_matchings(&RootedTree::new(g.clone(), 0)?));
    }
    check_branching(g)?;
    Ok(trim(branch_matchings(&masks(g), full_mask(g.order()), &mut HashMap::new())))
}

/// `i(G, k)` for `k = 0, 1, ...`, with `i(G, 0) = 1`.
pub fn independence_profile(g: &Graph) -> Result<Vec<u64>> {
    if g.is_tree() {
        return Ok(tree_independent_sets(&RootedTree::new(g.clone(), 0)?));
    }
    check_branching(g)?;
    Ok(trim(branch_independent(&masks(g), full_mask(g.order()), &mut HashMap::new())))
}

/// Hosoya index: total number of matchings, including the empty one.
pub fn hosoya(g: &Graph) -> Result<u64> {
    Ok(matching_profile(g)?.iter().sum())
}

/// Merrifield–Simmons index: total number of independent sets, including
/// the empty one.
pub fn merrifield_simmons(g: &Graph) -> Result<u64> {
    Ok(independence_profile(g)?.iter().sum())
}

/// Number of nonempty subtrees of a tree.
pub fn subtree_count(g: &Graph) -> Result<u64> {
    if !g.is_tree() {
        return Err(Error::invalid("subtree count needs a tree"));
    }
    let t = RootedTree::new(g.clone(), 0)?;
    // f[v]: subtrees whose top vertex is v.
    let mut f = vec![1u64; g.order()];
    for v in postorder(&t) {
        f[v] = t.children(v).map(|c| 1 + f[c]).product();
    }
    Ok(f.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_star_profiles() {
        assert_eq!(matching_profile(&Graph::path(4)).unwrap(), vec![1, 3, 1]);
        assert_eq!(hosoya(&Graph::path(4)).unwrap(), 5);
        assert_eq!(matching_profile(&Graph::star(3)).unwrap(), vec![1, 3]);
        assert_eq!(merrifield_simmons(&Graph::path(4)).unwrap(), 8);
        assert_eq!(merrifield_simmons(&Graph::star(3)).unwrap(), 9);
    }

    #[test]
    fn cycles_use_branching() {
        assert_eq!(hosoya(&Graph::cycle(5)).unwrap(), 11);
        assert_eq!(merrifield_simmons(&Graph::cycle(5)).unwrap(), 11);
        assert_eq!(matching_profile(&Graph::complete(4)).unwrap(), vec![1, 6, 3]);
        assert_eq!(independence_profile(&Graph::complete(4)).unwrap(), vec![1, 4]);
        assert!(hosoya(&Graph::cycle(17)).is_err());
    }

    #[test]
    fn subtree_examples() {
        assert_eq!(subtree_count(&Graph::path(3)).unwrap(), 6);
        assert_eq!(subtree_count(&Graph::star(3)).unwrap(), 11);
        assert_eq!(subtree_count(&Graph::path(4)).unwrap(), 10);
        assert!(subtree_count(&Graph::cycle(3)).is_err());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        assert_eq!(hosoya(&g).unwrap(), 1);
        assert_eq!(merrifield_simmons(&g).unwrap(), 2);
        assert_eq!(subtree_count(&g).unwrap(), 1);
    }
}

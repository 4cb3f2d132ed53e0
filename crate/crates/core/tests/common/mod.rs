//! Brute-force oracles, independent of the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use extremal::Graph;

/// Sorted degree sequences of every labeled graph on `n` vertices without
/// isolated vertices.
pub fn realizable_sequences(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut deg = vec![0usize; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg.contains(&0) {
            continue;
        }
        deg.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(deg);
    }
    out
}

/// Counts edge subsets that are matchings.
pub fn brute_hosoya(g: &Graph) -> u64 {
    let edges = g.edges();
    let mut count = 0;
    for mask in 0u64..(1 << edges.len()) {
        let mut used = 0u64;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used & (1 << u | 1 << v) != 0 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        count += u64::from(ok);
    }
    count
}

/// Counts vertex subsets spanning no edge.
pub fn brute_merrifield_simmons(g: &Graph) -> u64 {
    let edges = g.edges();
    (0u64..(1 << g.order()))
        .filter(|s| edges.iter().all(|&(u, v)| s >> u & s >> v & 1 == 0))
        .count() as u64
}

fn induces_connected(g: &Graph, set: u64) -> bool {
    let start = set.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if set >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == set
}

/// Counts nonempty vertex subsets inducing a connected subgraph.
pub fn brute_subtrees(g: &Graph) -> u64 {
    (1u64..(1 << g.order())).filter(|&s| induces_connected(g, s)).count() as u64
}

/// Sum of all pairwise BFS distances, computed with Floyd–Warshall.
pub fn brute_wiener(g: &Graph) -> u64 {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| d[i][j] as u64).sum()
}

/// Decodes a Prüfer sequence by the textbook smallest-leaf rule.
pub fn prufer_tree(code: &[usize]) -> Graph {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

/// Every labeled tree on `n >= 2` vertices.
pub fn all_labeled_trees(n: usize) -> Vec<Graph> {
    if n == 2 {
        return vec![Graph::path(2)];
    }
    let total = n.pow(n as u32 - 2);
    (0..total)
        .map(|mut x| {
            let code: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect();
            prufer_tree(&code)
        })
        .collect()
}

/// Isomorphism invariant strong enough to separate trees up to order 12:
/// the multiset of sorted rooted-subtree signatures from every root.
pub fn tree_signature(g: &Graph) -> Vec<String> {
    fn enc(g: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| enc(g, w, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    let mut all: Vec<String> = (0..g.order()).map(|r| enc(g, r, usize::MAX)).collect();
    all.sort();
    all
}

/// Counts labeled trees per isomorphism class by brute force.
pub fn labeled_class_sizes(n: usize) -> HashMap<Vec<String>, usize> {
    let mut out = HashMap::new();
    for t in all_labeled_trees(n) {
        *out.entry(tree_signature(&t)).or_insert(0) += 1;
    }
    out
}

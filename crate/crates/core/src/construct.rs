//! Extremal constructions: greedy trees and unicyclic graphs, their
//! boundary (SLO*) counterparts and the parameterized extremal families.
//!
//! All constructions label vertices in construction order, core first, and
//! then hand out children breadth-first: vertex `v` receives as many new
//! neighbors as its target degree still demands, taken from the next unused
//! labels.

use serde::{Deserialize, Serialize};

use crate::degseq::{classify, Classification, DegreeSequence};
use crate::enumerate::trees_with_sequence;
use crate::error::{Error, Result};
use crate::graph::{
    has_slo_ordering, BoundaryGraph, Graph, RootedTree, ORDERING_SEARCH_MAX_N,
};
use crate::invariants::{spectral_radius, Matrix};

/// How a validated construction was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// The closed-form construction passed validation.
    Direct,
    /// Validation failed and an exhaustive search supplied the answer.
    Fallback,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Built<T> {
    pub value: T,
    pub route: Route,
}

/// Adds breadth-first children to `g` until every vertex reaches its target
/// degree. Labels `next..` are the unused ones.
fn attach_breadth_first(g: &mut Graph, target: &[usize], mut next: usize) -> Result<()> {
    let n = g.order();
    for v in 0..n {
        if v >= next {
            return Err(Error::precondition(format!(
                "vertex {v} is unreachable in the breadth-first fill"
            )));
        }
        let have = g.degree(v);
        if have > target[v] {
            return Err(Error::precondition(format!(
                "vertex {v} exceeds its target degree {}",
                target[v]
            )));
        }
        for _ in have..target[v] {
            if next >= n {
                return Err(Error::precondition("degree sequence needs more vertices"));
            }
            g.add_edge(v, next)?;
            next += 1;
        }
    }
    Ok(())
}

fn build(target: &[usize], core: &[(usize, usize)], core_order: usize) -> Result<Graph> {
    let mut g = Graph::from_edges(target.len(), core)?;
    attach_breadth_first(&mut g, target, core_order.max(1))?;
    Ok(g)
}

fn require(pi: &DegreeSequence, class: Classification) -> Result<()> {
    let got = classify(pi);
    if got != class {
        return Err(Error::precondition(format!(
            "{pi} is classified {got}, expected {class}"
        )));
    }
    Ok(())
}

/// The greedy tree: degrees assigned largest first in breadth-first order,
/// rooted at vertex 0.
pub fn greedy_tree(pi: &DegreeSequence) -> Result<RootedTree> {
    require(pi, Classification::Tree)?;
    let g = build(pi.entries(), &[], 1)?;
    RootedTree::new(g, 0)
}

/// The greedy unicyclic graph: `C_n` when all degrees are 2, otherwise a
/// triangle on the three largest degrees followed by a breadth-first fill.
pub fn greedy_unicyclic(pi: &DegreeSequence) -> Result<Graph> {
    require(pi, Classification::Unicyclic)?;
    if pi.max_degree() == 2 {
        return Ok(Graph::cycle(pi.len()));
    }
    build(pi.entries(), &[(0, 1), (0, 2), (1, 2)], 3)
}

/// Interior degrees ascending, then the leaves.
fn ascending_targets(pi: &DegreeSequence) -> Vec<usize> {
    let mut t = pi.interior_ascending();
    t.resize(pi.len(), 1);
    t
}

/// Boundary tree whose interior degrees increase along breadth-first order.
///
/// The direct construction is checked for an SLO*-ordering when small enough
/// to search; otherwise, or if the check fails, the realizations of `pi` are
/// enumerated and the unique one admitting such an ordering is returned.
pub fn slo_boundary_tree(pi: &DegreeSequence) -> Result<Built<BoundaryGraph>> {
    require(pi, Classification::Tree)?;
    if pi.max_degree() < 2 {
        return Err(Error::precondition("an SLO* tree needs an interior vertex"));
    }
    let g = build(&ascending_targets(pi), &[], 1)?;
    let direct = BoundaryGraph::leaves_as_boundary(g)?;
    if pi.len() > ORDERING_SEARCH_MAX_N || has_slo_ordering(&direct)? {
        return Ok(Built {
            value: direct,
            route: Route::Direct,
        });
    }
    let mut found = Vec::new();
    for t in trees_with_sequence(pi)? {
        let bg = BoundaryGraph::leaves_as_boundary(t)?;
        if has_slo_ordering(&bg)? {
            found.push(bg);
        }
    }
    match found.len() {
        1 => Ok(Built {
            value: found.pop().unwrap(),
            route: Route::Fallback,
        }),
        0 => Err(Error::NotFound(format!("no tree with sequence {pi} has an SLO*-ordering"))),
        k => Err(Error::NotFound(format!(
            "{k} non-isomorphic trees with sequence {pi} have an SLO*-ordering"
        ))),
    }
}

/// Unicyclic graph with boundary minimizing the first Dirichlet eigenvalue.
///
/// With `a` the interior degrees ascending and `m` the number of leading 2s:
/// for `m <= 2` the first three vertices form a triangle and the rest is an
/// SLO* fill; for `m >= 3` and `a[m] = 3` a triangle, a path and an SLO*
/// tree are chained; for `a[m] >= 4` the 2s and the vertex of degree `a[m]`
/// form a cycle carrying an SLO* tree.
pub fn boundary_unicyclic(pi: &DegreeSequence) -> Result<BoundaryGraph> {
    require(pi, Classification::Unicyclic)?;
    let n = pi.len();
    let a = pi.interior_ascending();
    let leaves = pi.leaf_count();
    if leaves == 0 {
        return BoundaryGraph::new(Graph::cycle(n), &[]);
    }
    let m = a.iter().take_while(|&&d| d == 2).count();
    let mut target = Vec::with_capacity(n);
    let g = if m <= 2 {
        target = ascending_targets(pi);
        build(&target, &[(0, 1), (0, 2), (1, 2)], 3)?
    } else if a[m] == 3 {
        // Triangle 0,1,2 with 0 of degree 3, then the path 0-3-..-m-e where
        // e = m + 1 is the root of the residual tree (or a leaf).
        let e = m + 1;
        let mut core = vec![(0, 1), (0, 2), (1, 2)];
        let mut prev = 0;
        for v in 3..=e {
            core.push((prev, v));
            prev = v;
        }
        target.extend([3, 2, 2]);
        target.resize(e, 2);
        target.extend(a.get(m + 1).copied());
        target.extend(a.iter().skip(m + 2).copied());
        target.resize(n, 1);
        build(&target, &core, e + 1)?
    } else {
        // Cycle 0-1-..-m-0 where 0 carries degree a[m].
        let mut core: Vec<(usize, usize)> = (1..=m).map(|v| (v - 1, v)).collect();
        core.push((0, m));
        target.push(a[m]);
        target.resize(m + 1, 2);
        target.extend(a.iter().skip(m + 1).copied());
        target.resize(n, 1);
        build(&target, &core, m + 1)?
    };
    BoundaryGraph::leaves_as_boundary(g)
}

/// `U*_{n,k}`: a triangle joined by a path to the center of `K_{1,k}`.
///
/// The path runs from a triangle vertex to the star center and has
/// `n - k - 2` vertices, so for `k = n - 3` the triangle vertex is the center.
pub fn u_star_nk(n: usize, k: usize) -> Result<BoundaryGraph> {
    if n < 4 || k < 1 || k > n - 3 {
        return Err(Error::invalid(format!(
            "U*(n, k) needs 1 <= k <= n - 3, got n = {n}, k = {k}"
        )));
    }
    let mut g = Graph::from_edges(n, &[(0, 1), (0, 2), (1, 2)])?;
    let mut center = 0;
    let mut next = 3;
    for _ in 1..n - k - 2 {
        g.add_edge(center, next)?;
        center = next;
        next += 1;
    }
    for leaf in next..n {
        g.add_edge(center, leaf)?;
    }
    BoundaryGraph::leaves_as_boundary(g)
}

/// Bicyclic graph with boundary whose first four vertices induce `K_4` minus
/// the edge `v2 v3`, completed by an SLO* fill. All interior degrees must be
/// at least 3, with at least four interior vertices.
pub fn bicyclic_dirichlet_extremal(pi: &DegreeSequence) -> Result<BoundaryGraph> {
    require(pi, Classification::Bicyclic)?;
    let a = pi.interior_ascending();
    if a.len() < 4 || a[0] < 3 {
        return Err(Error::precondition(format!(
            "{pi} needs at least four interior vertices, all of degree >= 3"
        )));
    }
    let core = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    let g = build(&ascending_targets(pi), &core, 4)?;
    BoundaryGraph::leaves_as_boundary(g)
}

/// Tree parameter fixed by a spectral extremal corollary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorollaryKind {
    Leaves,
    MaxDegree,
    Independence,
    Matching,
}

/// Degree sequence whose greedy tree maximizes the spectral radius among
/// trees of order `n` with the given parameter.
pub fn sequence_for_corollary(
    kind: CorollaryKind,
    n: usize,
    param: usize,
) -> Result<Built<DegreeSequence>> {
    if n < 3 {
        return Err(Error::invalid(format!("order must be at least 3, got {n}")));
    }
    let spider = |center: usize, twos: usize, ones: usize| {
        let mut e = vec![center];
        e.resize(1 + twos, 2);
        e.resize(1 + twos + ones, 1);
        DegreeSequence::new(e)
    };
    let direct = |seq| {
        Ok(Built {
            value: seq,
            route: Route::Direct,
        })
    };
    match kind {
        CorollaryKind::Leaves => {
            if !(2..n).contains(&param) {
                return Err(Error::invalid(format!("leaf count must lie in 2..{n}")));
            }
            direct(spider(param, n - 1 - param, param)?)
        }
        CorollaryKind::Independence => {
            if !(n.div_ceil(2)..n).contains(&param) || param < 2 {
                return Err(Error::invalid(format!(
                    "independence number of a tree of order {n} lies in {}..{n}",
                    n.div_ceil(2).max(2)
                )));
            }
            direct(spider(param, n - param - 1, param)?)
        }
        CorollaryKind::Matching => {
            if !(1..=n / 2).contains(&param) {
                return Err(Error::invalid(format!("matching number must lie in 1..={}", n / 2)));
            }
            direct(spider(n - param, param - 1, n - param)?)
        }
        CorollaryKind::MaxDegree => {
            if param < 3 || param >= n {
                return Err(Error::invalid(format!("maximum degree must lie in 3..{n}")));
            }
            match max_degree_formula(n, param) {
                Ok(seq) => direct(seq),
                Err(Error::FormulaValidation(_)) => Ok(Built {
                    value: max_degree_search(n, param)?,
                    route: Route::Fallback,
                }),
                Err(e) => Err(e),
            }
        }
    }
}

/// Largest order for the exhaustive maximum-degree search.
pub const MAX_DEGREE_SEARCH_MAX_N: usize = 10;

/// The printed closed form for the maximum-degree case, taken literally and
/// then validated.
pub fn max_degree_formula(n: usize, delta: usize) -> Result<DegreeSequence> {
    let fail = |why: String| Err(Error::FormulaValidation(format!("n = {n}, delta = {delta}: {why}")));
    let b = delta - 1;
    // p = ceil(log_b((n(delta-2)+2)/delta)) - 1, i.e. the least e with
    // delta * b^e >= n(delta-2)+2, minus one.
    let goal = n * (delta - 2) + 2;
    let mut e = 0u32;
    while delta * b.pow(e) < goal {
        e += 1;
    }
    if e == 0 {
        return fail("p would be negative".into());
    }
    let p = e - 1;
    let ball = |k: u32| (delta * b.pow(k) - 2) / (delta - 2);
    let inner = ball(p);
    if inner > n {
        return fail(format!("ball size {inner} exceeds the order"));
    }
    let rest = n - inner;
    let (r, q) = (rest / b, rest % b);
    if p == 0 {
        return fail("p = 0 leaves the count of maximum degrees undefined".into());
    }
    let count = ball(p - 1) + r;
    let mut entries = vec![delta; count];
    if q >= 1 {
        entries.push(q);
    }
    if entries.len() > n {
        return fail(format!("{} non-leaf entries for order {n}", entries.len()));
    }
    entries.resize(n, 1);
    let seq = DegreeSequence::new(entries)?;
    if seq.sum() != 2 * (n - 1) {
        return fail(format!("{seq} sums to {}, not {}", seq.sum(), 2 * (n - 1)));
    }
    if seq.max_degree() != delta {
        return fail(format!("{seq} has maximum degree {}", seq.max_degree()));
    }
    Ok(seq)
}

/// Exhaustive argmax of the spectral radius over trees of order `n` with
/// maximum degree `delta`. Within a degree sequence the greedy tree is the
/// maximizer, so only greedy trees are compared.
pub fn max_degree_search(n: usize, delta: usize) -> Result<DegreeSequence> {
    if n > MAX_DEGREE_SEARCH_MAX_N {
        return Err(Error::Capacity {
            what: "maximum-degree search",
            limit: MAX_DEGREE_SEARCH_MAX_N,
            got: n,
        });
    }
    let mut best: Option<(f64, DegreeSequence)> = None;
    for seq in crate::degseq::enumerate_tree_sequences(n)? {
        if seq.max_degree() != delta {
            continue;
        }
        let rho = spectral_radius(greedy_tree(&seq)?.graph(), Matrix::Adjacency)?.value;
        if best.as_ref().is_none_or(|(b, _)| rho > *b) {
            best = Some((rho, seq));
        }
    }
    best.map(|(_, s)| s)
        .ok_or_else(|| Error::NotFound(format!("no tree of order {n} has maximum degree {delta}")))
}

use std::cmp::Ordering;
use std::time::Instant;

use crate::construct::{
    bicyclic_dirichlet_extremal, boundary_unicyclic, greedy_tree, greedy_unicyclic,
    slo_boundary_tree, u_star_nk,
};
use crate::degseq::{majorizes, DegreeSequence, Majorization};
use crate::enumerate::{connected_with_sequence, trees_with_sequence, unicyclic_with_sequence};
use crate::error::{Error, Result};
use crate::graph::{
    caterpillar_spine, find_bfs_ordering_from, graph_canonical_code, has_bfs_ordering,
    has_slo_ordering, rooted_tree_code, tree_canonical_code, BoundaryGraph, Graph, RootedTree,
};
use crate::invariants::{
    dirichlet_first_eigenvalue, energy, harary, hosoya, hyper_wiener,
    merrifield_simmons, p_r_count, second_zagreb, spectral_radius, subtree_count, w_psi, wiener,
    Matrix, PsiFunction,
};

use super::report::{Status, VerificationReport};
use super::tags::{Family, Tag};

/// Tolerance for comparing floating invariants across graphs.
pub const DECISION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Value {
    Exact(u64),
    Float(f64),
}

impl Value {
    fn as_f64(self) -> f64 {
        match self {
            Value::Exact(x) => x as f64,
            Value::Float(x) => x,
        }
    }

    fn cmp(self, other: Value) -> Ordering {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a.cmp(&b),
            (a, b) => a.as_f64().total_cmp(&b.as_f64()),
        }
    }

    /// Equal for the purposes of deciding optimality.
    fn ties(self, other: Value) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            (a, b) => (a.as_f64() - b.as_f64()).abs() <= DECISION_TOL,
        }
    }

    /// Strictly below `other`, beyond tolerance for floating values.
    fn clearly_below(self, other: Value) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a < b,
            (a, b) => b.as_f64() - a.as_f64() > DECISION_TOL,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Exact(x) => write!(f, "{x}"),
            Value::Float(x) => write!(f, "{x:.12}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Max,
    Min,
}

/// Invariants ranked by the tree, majorization and unicyclic claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ranked {
    Rho,
    Lambda,
    Q,
    Wiener,
    HyperWiener,
    Harary,
    Zagreb2,
    Subtrees,
    Hosoya,
    Ms,
    Energy,
}

impl Ranked {
    fn eval(self, g: &Graph) -> Result<Value> {
        Ok(match self {
            Ranked::Rho => Value::Float(spectral_radius(g, Matrix::Adjacency)?.value),
            Ranked::Lambda => Value::Float(spectral_radius(g, Matrix::Laplacian)?.value),
            Ranked::Q => Value::Float(spectral_radius(g, Matrix::Signless)?.value),
            Ranked::Wiener => Value::Exact(wiener(g)?),
            Ranked::HyperWiener => Value::Exact(hyper_wiener(g)?),
            Ranked::Harary => Value::Float(harary(g)?),
            Ranked::Zagreb2 => Value::Exact(second_zagreb(g)),
            Ranked::Subtrees => Value::Exact(subtree_count(g)?),
            Ranked::Hosoya => Value::Exact(hosoya(g)?),
            Ranked::Ms => Value::Exact(merrifield_simmons(g)?),
            Ranked::Energy => Value::Float(energy(g)?),
        })
    }

    /// Direction in which the greedy tree is extremal within a sequence;
    /// majorization moves toward the same extreme.
    fn direction(self) -> Direction {
        match self {
            Ranked::Wiener | Ranked::HyperWiener | Ranked::Hosoya | Ranked::Energy => Direction::Min,
            _ => Direction::Max,
        }
    }

    /// Whether the extremal claim includes uniqueness. The distance-weight
    /// claim only asserts uniqueness for strictly increasing weights.
    fn unique(self) -> bool {
        self != Ranked::Harary
    }
}

fn ranked_for(tag: Tag) -> Option<Ranked> {
    use Tag::*;
    Some(match tag {
        RhoMax | MajorRho => Ranked::Rho,
        LambdaMax | MajorLambda => Ranked::Lambda,
        QMax | MajorQ => Ranked::Q,
        WienerMin | MajorWiener => Ranked::Wiener,
        HyperWienerMin | MajorHyperWiener => Ranked::HyperWiener,
        HararyMax | MajorHarary => Ranked::Harary,
        Zagreb2Max => Ranked::Zagreb2,
        SubtreesMax | MajorSubtrees => Ranked::Subtrees,
        HosoyaMin | MajorHosoya => Ranked::Hosoya,
        MsMax | MajorMs => Ranked::Ms,
        EnergyMin | MajorEnergy => Ranked::Energy,
        _ => return None,
    })
}

struct Candidate {
    code: String,
    value: Value,
}

struct Decision {
    status: Status,
    optimum: Value,
    optimizer_code: String,
    details: Vec<String>,
}

fn better(a: Value, b: Value, dir: Direction) -> bool {
    match dir {
        Direction::Max => a.cmp(b) == Ordering::Greater,
        Direction::Min => a.cmp(b) == Ordering::Less,
    }
}

/// Applies the decision rule: the constructed graph must attain the
/// enumerated optimum and, for uniqueness claims, be the only class within
/// tolerance of it.
fn decide(
    cands: &[Candidate],
    constructed_code: &str,
    constructed_value: Value,
    dir: Direction,
    unique: bool,
) -> Decision {
    let mut best = 0;
    for (i, c) in cands.iter().enumerate() {
        if better(c.value, cands[best].value, dir) {
            best = i;
        }
    }
    let optimum = cands[best].value;
    let near: Vec<&Candidate> = cands.iter().filter(|c| c.value.ties(optimum)).collect();
    let mut details = vec![format!("optimum {optimum} attained by {} class(es)", near.len())];
    let mut status = Status::Pass;
    if !cands.iter().any(|c| c.code == constructed_code) {
        details.push("constructed graph is missing from the enumeration".into());
        status = Status::Fail;
    }
    if !constructed_value.ties(optimum) {
        details.push(format!(
            "constructed value {constructed_value} differs from the optimum"
        ));
        status = Status::Fail;
    }
    if unique && near.len() > 1 {
        for c in &near {
            details.push(format!("optimizer {} value {}", c.code, c.value));
        }
        status = Status::Fail;
    }
    let optimizer = if near.iter().any(|c| c.code == constructed_code) {
        near.iter().find(|c| c.code == constructed_code).unwrap()
    } else {
        &cands[best]
    };
    if status == Status::Pass && optimizer.code == constructed_code && optimizer.value != constructed_value {
        status = Status::TieResolvedByIsomorphism;
    }
    Decision {
        status,
        optimum,
        optimizer_code: optimizer.code.clone(),
        details,
    }
}

fn apply(report: &mut VerificationReport, d: Decision, constructed_code: String) {
    report.status = d.status;
    report.optimum = Some(d.optimum.as_f64());
    report.optimizer_code = Some(d.optimizer_code);
    report.constructed_code = Some(constructed_code);
    report.details.extend(d.details);
}

fn finish(mut report: VerificationReport, start: Instant) -> VerificationReport {
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

fn wrong_family(tag: Tag, expected: &str) -> Error {
    Error::invalid(format!("tag {tag} is not a {expected} suite"))
}

/// Greedy-tree optimality (or the BFS equivalence) over all trees with
/// sequence `pi`.
pub fn verify_tree_theorem(tag: Tag, pi: &DegreeSequence) -> Result<VerificationReport> {
    if tag.family() != Family::Tree {
        return Err(wrong_family(tag, "tree"));
    }
    let start = Instant::now();
    let classes = trees_with_sequence(pi)?;
    let greedy = greedy_tree(pi)?;
    let mut report = VerificationReport::new(tag.as_str(), pi.len(), vec![pi.clone()]);
    report.classes = classes.len();
    let greedy_code = tree_canonical_code(greedy.graph())?;
    match tag {
        Tag::BfsEquivalence => bfs_equivalence(&mut report, &classes, &greedy)?,
        Tag::PrMax => pr_max(&mut report, &classes, &greedy, greedy_code)?,
        _ => {
            let inv = ranked_for(tag).expect("tree tags rank an invariant");
            let cands = classes
                .iter()
                .map(|t| {
                    Ok(Candidate {
                        code: tree_canonical_code(t)?,
                        value: inv.eval(t)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let own = inv.eval(greedy.graph())?;
            let d = decide(&cands, &greedy_code, own, inv.direction(), inv.unique());
            apply(&mut report, d, greedy_code);
        }
    }
    Ok(finish(report, start))
}

/// `p_r` is maximized by the greedy tree for every `r`, and no other tree
/// matches it for all `r` at once.
fn pr_max(
    report: &mut VerificationReport,
    classes: &[Graph],
    greedy: &RootedTree,
    greedy_code: String,
) -> Result<()> {
    let n = greedy.graph().order();
    let profile = |g: &Graph| (1..n).map(|r| p_r_count(g, r)).collect::<Result<Vec<u64>>>();
    let own = profile(greedy.graph())?;
    let mut status = Status::Pass;
    let mut matching_all = 0;
    for t in classes {
        let p = profile(t)?;
        for (r, (&a, &b)) in p.iter().zip(&own).enumerate() {
            if a > b {
                status = Status::Fail;
                report.details.push(format!(
                    "p_{} of {} is {a} > {b}",
                    r + 1,
                    tree_canonical_code(t)?
                ));
            }
        }
        if p == own {
            matching_all += 1;
            if tree_canonical_code(t)? != greedy_code {
                status = Status::Fail;
                report
                    .details
                    .push(format!("{} matches every p_r of the greedy tree", tree_canonical_code(t)?));
            }
        }
    }
    if matching_all != 1 {
        status = Status::Fail;
        report
            .details
            .push(format!("{matching_all} classes match every p_r of the greedy tree"));
    }
    report.details.push(format!(
        "greedy p_r for r = 1..{}: {own:?}",
        n.saturating_sub(1)
    ));
    report.status = status;
    report.optimizer_code = Some(greedy_code.clone());
    report.constructed_code = Some(greedy_code);
    Ok(())
}

/// For every class and every root: a BFS-ordering from that root exists iff
/// the sorted subtree sizes equal the greedy tree's iff the rooted tree is
/// isomorphic to the greedy tree rooted at its root.
fn bfs_equivalence(
    report: &mut VerificationReport,
    classes: &[Graph],
    greedy: &RootedTree,
) -> Result<()> {
    let greedy_phi = greedy.phi_sorted_desc();
    let greedy_rooted = rooted_tree_code(greedy.graph(), greedy.root());
    let mut rooted = 0;
    let mut with_ordering = 0;
    for t in classes {
        for root in 0..t.order() {
            rooted += 1;
            let has_order = find_bfs_ordering_from(t, root)?.is_some();
            let rt = RootedTree::new(t.clone(), root)?;
            let same_phi = rt.phi_sorted_desc() == greedy_phi;
            let same_tree = rooted_tree_code(t, root) == greedy_rooted;
            with_ordering += usize::from(has_order);
            if has_order != same_phi || same_phi != same_tree {
                report.details.push(format!(
                    "{} rooted at {root}: ordering {has_order}, phi {same_phi}, isomorphic {same_tree}",
                    tree_canonical_code(t)?
                ));
            }
        }
    }
    report.status = if report.details.is_empty() { Status::Pass } else { Status::Fail };
    report.details.push(format!(
        "{rooted} rooted trees checked, {with_ordering} admit a BFS-ordering"
    ));
    let code = tree_canonical_code(greedy.graph())?;
    report.optimizer_code = Some(code.clone());
    report.constructed_code = Some(code);
    Ok(())
}

fn greedy_value(inv: Option<Ranked>, dirichlet: bool, pi: &DegreeSequence) -> Result<Value> {
    if dirichlet {
        let t = slo_boundary_tree(pi)?;
        return Ok(Value::Float(dirichlet_first_eigenvalue(&t.value)?));
    }
    inv.expect("ranked invariant").eval(greedy_tree(pi)?.graph())
}

/// Strict monotonicity of greedy-tree values along majorization, one report
/// per strictly comparable pair of tree sequences of order `n`.
pub fn verify_majorization(tag: Tag, n: usize) -> Result<Vec<VerificationReport>> {
    if tag.family() != Family::Majorization {
        return Err(wrong_family(tag, "majorization"));
    }
    if n > MAJORIZATION_MAX_N {
        return Err(Error::Capacity {
            what: "majorization suite",
            limit: MAJORIZATION_MAX_N,
            got: n,
        });
    }
    let dirichlet = tag == Tag::MajorDirichlet;
    let inv = ranked_for(tag);
    // Moving up the order (toward the star) increases the invariant unless
    // the greedy tree minimizes it; the Dirichlet eigenvalue decreases.
    let increasing = !dirichlet && inv.unwrap().direction() == Direction::Max;
    let seqs = crate::degseq::enumerate_tree_sequences(n)?;
    let seqs: Vec<DegreeSequence> = if dirichlet {
        seqs.into_iter().filter(|s| s.len() >= 3).collect()
    } else {
        seqs
    };
    let values = seqs
        .iter()
        .map(|s| greedy_value(inv, dirichlet, s))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (i, pi) in seqs.iter().enumerate() {
        for (j, tau) in seqs.iter().enumerate() {
            if majorizes(tau, pi) != Majorization::Strict {
                continue;
            }
            let start = Instant::now();
            let (vp, vt) = (values[i], values[j]);
            let ok = if increasing { vp.clearly_below(vt) } else { vt.clearly_below(vp) };
            let mut r = VerificationReport::new(tag.as_str(), n, vec![pi.clone(), tau.clone()]);
            r.classes = 2;
            r.status = if ok { Status::Pass } else { Status::Fail };
            r.details.push(format!(
                "{pi}: {vp}, {tau}: {vt}, expected {}",
                if increasing { "increase" } else { "decrease" }
            ));
            out.push(finish(r, start));
        }
    }
    Ok(out)
}

pub const MAJORIZATION_MAX_N: usize = 10;

/// Valley shape of the spine degrees: oriented so the first end is at least
/// the last, there is an inner position up to which degrees do not increase
/// and from which they do not decrease.
pub fn spine_is_unimodal(g: &Graph, spine: &[usize]) -> bool {
    let k = spine.len();
    if k <= 2 {
        return true;
    }
    let mut d: Vec<usize> = spine.iter().map(|&v| g.degree(v)).collect();
    if d[0] < d[k - 1] {
        d.reverse();
    }
    (1..=k - 2).any(|t| d[..=t].windows(2).all(|w| w[0] >= w[1]) && d[t..].windows(2).all(|w| w[0] <= w[1]))
}

/// Every `W_ψ`-maximizing tree is a caterpillar. The spine shape of each
/// maximizer is recorded; spines that are not valley-shaped are listed as
/// counterexamples without affecting the status.
pub fn verify_caterpillar_max(pi: &DegreeSequence, psi: &PsiFunction) -> Result<VerificationReport> {
    let start = Instant::now();
    let tag = match psi {
        PsiFunction::Identity => Tag::CaterpillarWiener.as_str().to_string(),
        PsiFunction::Hyper => Tag::CaterpillarHyper.as_str().to_string(),
        other => format!("caterpillar-{other}"),
    };
    let classes = trees_with_sequence(pi)?;
    let mut report = VerificationReport::new(&tag, pi.len(), vec![pi.clone()]);
    report.classes = classes.len();
    let eval = |g: &Graph| -> Result<Value> {
        Ok(match psi {
            PsiFunction::Identity => Value::Exact(wiener(g)?),
            PsiFunction::Hyper => Value::Exact(hyper_wiener(g)?),
            other => Value::Float(w_psi(g, other)?),
        })
    };
    let values = classes.iter().map(eval).collect::<Result<Vec<_>>>()?;
    let mut best = values[0];
    for &v in &values {
        if v.cmp(best) == Ordering::Greater {
            best = v;
        }
    }
    let mut status = Status::Pass;
    let mut maximizers = 0;
    for (t, &v) in classes.iter().zip(&values) {
        if !v.ties(best) {
            continue;
        }
        maximizers += 1;
        let code = tree_canonical_code(t)?;
        match caterpillar_spine(t)? {
            None => {
                status = Status::Fail;
                report.details.push(format!("maximizer {code} is not a caterpillar"));
            }
            Some(spine) => {
                if !spine_is_unimodal(t, &spine) {
                    report.counterexamples.push(code.clone());
                }
                if report.optimizer_code.is_none() {
                    report.optimizer_code = Some(code);
                }
            }
        }
    }
    report.details.push(format!(
        "optimum {best} attained by {maximizers} class(es); {} spine(s) not valley-shaped",
        report.counterexamples.len()
    ));
    report.status = status;
    report.optimum = Some(best.as_f64());
    Ok(finish(report, start))
}

/// Greedy unicyclic graph is the unique maximizer of `ρ` (`unicyclic-rho`)
/// or `q` (`unicyclic-q`).
pub fn verify_unicyclic(tag: Tag, pi: &DegreeSequence) -> Result<VerificationReport> {
    let kind = match tag {
        Tag::UnicyclicRho => Matrix::Adjacency,
        Tag::UnicyclicQ => Matrix::Signless,
        _ => return Err(wrong_family(tag, "unicyclic")),
    };
    let start = Instant::now();
    let classes = unicyclic_with_sequence(pi)?;
    let greedy = greedy_unicyclic(pi)?;
    let mut report = VerificationReport::new(tag.as_str(), pi.len(), vec![pi.clone()]);
    report.classes = classes.len();
    let cands = classes
        .iter()
        .map(|g| {
            Ok(Candidate {
                code: graph_canonical_code(g)?,
                value: Value::Float(spectral_radius(g, kind)?.value),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let code = graph_canonical_code(&greedy)?;
    let own = Value::Float(spectral_radius(&greedy, kind)?.value);
    apply(&mut report, decide(&cands, &code, own, Direction::Max, true), code);
    Ok(finish(report, start))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirichletKind {
    /// Boundary trees with sequence `π`: the minimizer admits an
    /// SLO*-ordering and is unique.
    Tree(DegreeSequence),
    /// Unicyclic, all interior degrees at least 3.
    Unicyclic(DegreeSequence),
    /// Unicyclic with interior degree 2 present; recorded only.
    Conjecture(DegreeSequence),
    /// Bicyclic, all interior degrees at least 3, at least four of them.
    Bicyclic(DegreeSequence),
    /// All unicyclic graphs of order `n` with `k` pendant vertices.
    Pendant { n: usize, k: usize },
}

fn dirichlet_candidates(graphs: &[Graph], tree_codes: bool) -> Result<Vec<(Candidate, BoundaryGraph)>> {
    graphs
        .iter()
        .map(|g| {
            let bg = BoundaryGraph::leaves_as_boundary(g.clone())?;
            let code = if tree_codes { tree_canonical_code(g)? } else { graph_canonical_code(g)? };
            let value = Value::Float(dirichlet_first_eigenvalue(&bg)?);
            Ok((Candidate { code, value }, bg))
        })
        .collect()
}

pub fn verify_dirichlet(kind: &DirichletKind) -> Result<VerificationReport> {
    let start = Instant::now();
    let (tag, order, seqs, graphs, constructed, tree_codes) = match kind {
        DirichletKind::Tree(pi) => {
            let built = slo_boundary_tree(pi)?;
            (Tag::DirichletTree, pi.len(), vec![pi.clone()], trees_with_sequence(pi)?, built.value, true)
        }
        DirichletKind::Unicyclic(pi) | DirichletKind::Conjecture(pi) => {
            let interior_min = pi.interior_ascending()[0];
            let conjecture = matches!(kind, DirichletKind::Conjecture(_));
            if conjecture != (interior_min == 2) || pi.leaf_count() == 0 {
                return Err(Error::precondition(format!(
                    "{pi} does not fit the {} suite",
                    if conjecture { "conjecture" } else { "unicyclic" }
                )));
            }
            let tag = if conjecture { Tag::DirichletConjecture } else { Tag::DirichletUnicyclic };
            (tag, pi.len(), vec![pi.clone()], unicyclic_with_sequence(pi)?, boundary_unicyclic(pi)?, false)
        }
        DirichletKind::Bicyclic(pi) => {
            let built = bicyclic_dirichlet_extremal(pi)?;
            (Tag::DirichletBicyclic, pi.len(), vec![pi.clone()], connected_with_sequence(pi)?, built, false)
        }
        DirichletKind::Pendant { n, k } => {
            let built = u_star_nk(*n, *k)?;
            let mut graphs = Vec::new();
            for pi in unicyclic_sequences(*n).into_iter().filter(|s| s.leaf_count() == *k) {
                graphs.extend(unicyclic_with_sequence(&pi)?);
            }
            (Tag::DirichletPendant, *n, Vec::new(), graphs, built, false)
        }
    };
    let mut report = VerificationReport::new(tag.as_str(), order, seqs);
    if let DirichletKind::Pendant { k, .. } = kind {
        report.parameter = Some(*k);
    }
    report.classes = graphs.len();
    let cands = dirichlet_candidates(&graphs, tree_codes)?;
    let code = if tree_codes {
        tree_canonical_code(constructed.graph())?
    } else {
        graph_canonical_code(constructed.graph())?
    };
    let own = Value::Float(dirichlet_first_eigenvalue(&constructed)?);
    let plain: Vec<Candidate> = cands
        .iter()
        .map(|(c, _)| Candidate {
            code: c.code.clone(),
            value: c.value,
        })
        .collect();
    let d = decide(&plain, &code, own, Direction::Min, true);
    let optimum = d.optimum;
    apply(&mut report, d, code.clone());
    if tag == Tag::DirichletTree {
        for (c, bg) in cands.iter().filter(|(c, _)| c.value.ties(optimum)) {
            if !has_slo_ordering(bg)? {
                report.status = Status::Fail;
                report.details.push(format!("minimizer {} has no SLO*-ordering", c.code));
            }
        }
    }
    if tag == Tag::DirichletConjecture {
        for (c, _) in cands.iter().filter(|(c, _)| c.value.ties(optimum) && c.code != code) {
            report.counterexamples.push(c.code.clone());
        }
        if !own.ties(optimum) {
            report.counterexamples.push(format!("construction {code} is not a minimizer"));
        }
        report.status = Status::ReportOnly;
    }
    Ok(finish(report, start))
}

/// Every maximizer of `ρ` (adjacency) or `q` (signless) over the connected
/// realizations of `pi` has a BFS-ordering.
pub fn verify_bfs_necessity(pi: &DegreeSequence, matrix: Matrix) -> Result<VerificationReport> {
    let tag = match matrix {
        Matrix::Adjacency => Tag::BfsRho,
        Matrix::Signless => Tag::BfsQ,
        _ => return Err(Error::invalid("BFS necessity covers the adjacency and signless matrices")),
    };
    let start = Instant::now();
    let classes = connected_with_sequence(pi)?;
    let mut report = VerificationReport::new(tag.as_str(), pi.len(), vec![pi.clone()]);
    report.classes = classes.len();
    let values = classes
        .iter()
        .map(|g| Ok(spectral_radius(g, matrix)?.value))
        .collect::<Result<Vec<f64>>>()?;
    let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    report.status = Status::Pass;
    let mut maximizers = 0;
    for (g, &v) in classes.iter().zip(&values) {
        if best - v > DECISION_TOL {
            continue;
        }
        maximizers += 1;
        let code = graph_canonical_code(g)?;
        if !has_bfs_ordering(g)? {
            report.status = Status::Fail;
            report.details.push(format!("maximizer {code} has no BFS-ordering"));
        }
        if v == best {
            report.optimizer_code = Some(code);
        }
    }
    report.optimum = Some(best);
    report.details.push(format!("optimum {best:.12} attained by {maximizers} class(es)"));
    Ok(finish(report, start))
}

/// Unicyclic sequences of order `n`, descending lexicographic.
pub fn unicyclic_sequences(n: usize) -> Vec<DegreeSequence> {
    crate::degseq::sequences_with_sum(n, 2 * n, n.saturating_sub(1))
        .into_iter()
        .filter(|s| crate::degseq::classify(s) == crate::degseq::Classification::Unicyclic)
        .collect()
}

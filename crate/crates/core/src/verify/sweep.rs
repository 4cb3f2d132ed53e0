use rayon::prelude::*;

use crate::degseq::{
    classify, enumerate_tree_sequences, has_connected_realization, sequences_with_sum,
    Classification, DegreeSequence,
};
use crate::error::{Error, Result};
use crate::invariants::{Matrix, PsiFunction};

use super::report::{Status, VerificationReport};
use super::suites::{
    unicyclic_sequences, verify_bfs_necessity, verify_caterpillar_max, verify_dirichlet,
    verify_majorization, verify_tree_theorem, verify_unicyclic, DirichletKind,
    MAJORIZATION_MAX_N,
};
use super::tags::{Family, Tag};

/// Smallest order swept; below it every suite is vacuous.
pub const SWEEP_MIN_N: usize = 3;

/// Largest `n_max` accepted for a tag.
pub fn capacity(tag: Tag) -> usize {
    match tag.family() {
        Family::Tree | Family::Caterpillar => crate::enumerate::TREE_ENUM_MAX_N,
        Family::Majorization => MAJORIZATION_MAX_N,
        Family::Unicyclic => crate::enumerate::UNICYCLIC_ENUM_MAX_N,
        Family::Dirichlet => match tag {
            Tag::DirichletTree => crate::enumerate::TREE_ENUM_MAX_N,
            Tag::DirichletBicyclic => crate::enumerate::CONNECTED_ENUM_MAX_N,
            _ => crate::enumerate::UNICYCLIC_ENUM_MAX_N,
        },
        Family::BfsNecessity => crate::enumerate::CONNECTED_ENUM_MAX_N,
    }
}

enum Job {
    Tree(Tag, DegreeSequence),
    Major(Tag, usize),
    Caterpillar(Tag, DegreeSequence),
    Unicyclic(Tag, DegreeSequence),
    Dirichlet(Tag, DirichletKind),
    Bfs(Tag, DegreeSequence),
}

impl Job {
    fn run(&self) -> Vec<VerificationReport> {
        let single = |r: Result<VerificationReport>| vec![r];
        let results = match self {
            Job::Tree(t, pi) => single(verify_tree_theorem(*t, pi)),
            Job::Major(t, n) => match verify_majorization(*t, *n) {
                Ok(rs) => rs.into_iter().map(Ok).collect(),
                Err(e) => vec![Err(e)],
            },
            Job::Caterpillar(t, pi) => {
                let psi = if *t == Tag::CaterpillarHyper { PsiFunction::Hyper } else { PsiFunction::Identity };
                single(verify_caterpillar_max(pi, &psi))
            }
            Job::Unicyclic(t, pi) => single(verify_unicyclic(*t, pi)),
            Job::Dirichlet(_, kind) => single(verify_dirichlet(kind)),
            Job::Bfs(t, pi) => {
                let m = if *t == Tag::BfsQ { Matrix::Signless } else { Matrix::Adjacency };
                single(verify_bfs_necessity(pi, m))
            }
        };
        results
            .into_iter()
            .map(|r| r.unwrap_or_else(|e| self.failure(e)))
            .collect()
    }

    /// A report standing in for a suite run that errored.
    fn failure(&self, e: Error) -> VerificationReport {
        let (tag, order, seqs, param) = match self {
            Job::Tree(t, pi) | Job::Caterpillar(t, pi) | Job::Unicyclic(t, pi) | Job::Bfs(t, pi) => {
                (*t, pi.len(), vec![pi.clone()], None)
            }
            Job::Major(t, n) => (*t, *n, Vec::new(), None),
            Job::Dirichlet(t, kind) => match kind {
                DirichletKind::Tree(pi)
                | DirichletKind::Unicyclic(pi)
                | DirichletKind::Conjecture(pi)
                | DirichletKind::Bicyclic(pi) => (*t, pi.len(), vec![pi.clone()], None),
                DirichletKind::Pendant { n, k } => (*t, *n, Vec::new(), Some(*k)),
            },
        };
        let mut r = VerificationReport::new(tag.as_str(), order, seqs);
        r.parameter = param;
        r.status = Status::Fail;
        r.details.push(format!("error: {e}"));
        r
    }
}

fn bicyclic_dirichlet_sequences(n: usize) -> Vec<DegreeSequence> {
    sequences_with_sum(n, 2 * (n + 1), n - 1)
        .into_iter()
        .filter(|s| {
            let interior = s.interior_ascending();
            classify(s) == Classification::Bicyclic
                && s.leaf_count() > 0
                && interior.len() >= 4
                && interior[0] >= 3
        })
        .collect()
}

fn connected_sequences(n: usize) -> Vec<DegreeSequence> {
    (n - 1..=n * (n - 1) / 2)
        .flat_map(|m| sequences_with_sum(n, 2 * m, n - 1))
        .filter(has_connected_realization)
        .collect()
}

fn jobs_for(tag: Tag, n: usize) -> Result<Vec<Job>> {
    let trees = || enumerate_tree_sequences(n);
    Ok(match tag.family() {
        Family::Tree => trees()?.into_iter().map(|s| Job::Tree(tag, s)).collect(),
        Family::Majorization => vec![Job::Major(tag, n)],
        Family::Caterpillar => trees()?.into_iter().map(|s| Job::Caterpillar(tag, s)).collect(),
        Family::Unicyclic => unicyclic_sequences(n).into_iter().map(|s| Job::Unicyclic(tag, s)).collect(),
        Family::BfsNecessity => connected_sequences(n).into_iter().map(|s| Job::Bfs(tag, s)).collect(),
        Family::Dirichlet => {
            let kinds: Vec<DirichletKind> = match tag {
                Tag::DirichletTree => trees()?.into_iter().map(DirichletKind::Tree).collect(),
                Tag::DirichletUnicyclic | Tag::DirichletConjecture => {
                    let want_two = tag == Tag::DirichletConjecture;
                    unicyclic_sequences(n)
                        .into_iter()
                        .filter(|s| s.leaf_count() > 0 && (s.interior_ascending()[0] == 2) == want_two)
                        .map(|s| {
                            if want_two {
                                DirichletKind::Conjecture(s)
                            } else {
                                DirichletKind::Unicyclic(s)
                            }
                        })
                        .collect()
                }
                Tag::DirichletBicyclic => bicyclic_dirichlet_sequences(n)
                    .into_iter()
                    .map(DirichletKind::Bicyclic)
                    .collect(),
                Tag::DirichletPendant => (1..=n.saturating_sub(3))
                    .map(|k| DirichletKind::Pendant { n, k })
                    .collect(),
                _ => unreachable!("dirichlet family"),
            };
            kinds.into_iter().map(|k| Job::Dirichlet(tag, k)).collect()
        }
    })
}

/// Runs every selected suite on every admissible input of order
/// `SWEEP_MIN_N..=n_max`. Suite errors become failing reports; the output
/// is ordered by order, then sequences, then parameter, then tag.
pub fn sweep(n_max: usize, suites: &[Tag]) -> Result<Vec<VerificationReport>> {
    for &t in suites {
        if n_max > capacity(t) {
            return Err(Error::Capacity {
                what: "verification sweep",
                limit: capacity(t),
                got: n_max,
            });
        }
    }
    let mut jobs = Vec::new();
    for &t in suites {
        for n in SWEEP_MIN_N..=n_max {
            jobs.extend(jobs_for(t, n)?);
        }
    }
    let mut reports: Vec<VerificationReport> = jobs.par_iter().flat_map_iter(Job::run).collect();
    reports.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.sequences.cmp(&b.sequences))
            .then_with(|| a.parameter.cmp(&b.parameter))
            .then_with(|| a.tag.cmp(&b.tag))
    });
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_sweep_is_the_path() {
        let r = sweep(3, &[Tag::WienerMin, Tag::RhoMax]).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| x.passed() && x.sequences[0].to_string() == "(2,1,1)"));
    }

    #[test]
    fn ordering_is_deterministic() {
        let tags = [Tag::WienerMin, Tag::MsMax];
        let a = sweep(5, &tags).unwrap();
        let b = sweep(5, &tags).unwrap();
        let key = |r: &VerificationReport| (r.tag.clone(), r.sequence_label());
        assert_eq!(a.iter().map(key).collect::<Vec<_>>(), b.iter().map(key).collect::<Vec<_>>());
        assert!(a.windows(2).all(|w| w[0].order <= w[1].order));
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(sweep(12, &[Tag::WienerMin]), Err(Error::Capacity { .. })));
        assert!(matches!(sweep(9, &[Tag::BfsRho]), Err(Error::Capacity { .. })));
    }

    #[test]
    fn pendant_jobs_cover_all_k() {
        let r = sweep(6, &[Tag::DirichletPendant]).unwrap();
        // n = 4: k = 1; n = 5: k = 1, 2; n = 6: k = 1, 2, 3.
        assert_eq!(r.len(), 6);
        assert!(r.iter().all(|x| x.passed()), "{r:#?}");
    }
}

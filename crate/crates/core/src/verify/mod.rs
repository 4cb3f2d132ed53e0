//! Exhaustive confirmation of extremal claims at small order.

mod report;
mod suites;
mod sweep;
mod tags;

pub use report::{Status, VerificationReport};
pub use suites::{
    spine_is_unimodal, unicyclic_sequences, verify_bfs_necessity, verify_caterpillar_max,
    verify_dirichlet, verify_majorization, verify_tree_theorem, verify_unicyclic, DirichletKind,
    DECISION_TOL, MAJORIZATION_MAX_N,
};
pub use sweep::{capacity, sweep, SWEEP_MIN_N};
pub use tags::{parse_suites, Family, Tag};

//! Graph invariants ranked by the extremal theorems.

mod counting;
mod distance;
mod spectral;

pub use counting::{
    hosoya, independence_profile, matching_profile, merrifield_simmons, subtree_count,
    BRANCHING_MAX_N,
};
pub use distance::{
    distance_counts, harary, hyper_wiener, p_r_count, second_zagreb, w_psi, wiener, PsiFunction,
};
pub use spectral::{
    dirichlet_first_eigenvalue, eigenvalues, energy, matrix_of, spectral_radius, Matrix,
    SpectralResult, EIGEN_TOL,
};

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BoundaryGraph, Graph};

/// Absolute tolerance for eigenvalue residuals.
pub const EIGEN_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Matrix {
    Adjacency,
    Laplacian,
    /// Signless Laplacian `D + A`.
    Signless,
    /// Normalized Laplacian `I - D^{-1/2} A D^{-1/2}`.
    Normalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub value: f64,
    pub converged: bool,
    /// `‖Mx − λx‖` for the returned eigenpair.
    pub residual: f64,
}

pub fn matrix_of(g: &Graph, kind: Matrix) -> DMatrix<f64> {
    let n = g.order();
    let mut m = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        let w = match kind {
            Matrix::Adjacency | Matrix::Signless => 1.0,
            Matrix::Laplacian => -1.0,
            Matrix::Normalized => -1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt(),
        };
        m[(u, v)] = w;
        m[(v, u)] = w;
    }
    for v in 0..n {
        m[(v, v)] = match kind {
            Matrix::Adjacency => 0.0,
            Matrix::Laplacian | Matrix::Signless => g.degree(v) as f64,
            Matrix::Normalized => f64::from(u8::from(g.degree(v) > 0)),
        };
    }
    m
}

fn decompose(m: DMatrix<f64>) -> Result<SymmetricEigen<f64, nalgebra::Dyn>> {
    SymmetricEigen::try_new(m, f64::EPSILON, MAX_SWEEPS).ok_or(Error::NonConvergence {
        residual: f64::NAN,
    })
}

/// Largest or smallest eigenvalue, with the residual of its eigenvector
/// checked.
fn extreme(m: DMatrix<f64>, largest: bool) -> Result<SpectralResult> {
    if m.nrows() == 0 {
        return Err(Error::invalid("matrix of an empty graph"));
    }
    let eig = decompose(m.clone())?;
    let vals = &eig.eigenvalues;
    let mut idx = 0;
    for i in 1..vals.len() {
        if (largest && vals[i] > vals[idx]) || (!largest && vals[i] < vals[idx]) {
            idx = i;
        }
    }
    let x = eig.eigenvectors.column(idx);
    let lambda = vals[idx];
    let residual = (&m * x - x * lambda).norm();
    let scale = 1.0_f64.max(lambda.abs());
    if residual > EIGEN_TOL * scale {
        return Err(Error::NonConvergence { residual });
    }
    Ok(SpectralResult {
        value: lambda,
        converged: true,
        residual,
    })
}

/// Largest eigenvalue of the chosen matrix: `ρ`, `λ`, `q` or `μ`.
pub fn spectral_radius(g: &Graph, kind: Matrix) -> Result<SpectralResult> {
    extreme(matrix_of(g, kind), true)
}

/// All eigenvalues, ascending.
pub fn eigenvalues(g: &Graph, kind: Matrix) -> Result<Vec<f64>> {
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    let mut vals: Vec<f64> = decompose(matrix_of(g, kind))?.eigenvalues.iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

/// Sum of the absolute adjacency eigenvalues. The trace identities
/// `Σλ = 0` and `Σλ² = 2|E|` are checked to within `1e-8`.
pub fn energy(g: &Graph) -> Result<f64> {
    let vals = eigenvalues(g, Matrix::Adjacency)?;
    let sum: f64 = vals.iter().sum();
    let squares: f64 = vals.iter().map(|x| x * x).sum();
    let drift = sum.abs().max((squares - 2.0 * g.size() as f64).abs());
    if drift > 1e-8 {
        return Err(Error::NonConvergence { residual: drift });
    }
    Ok(vals.iter().map(|x| x.abs()).sum())
}

/// Smallest eigenvalue of the Laplacian restricted to interior rows and
/// columns (zero boundary condition).
pub fn dirichlet_first_eigenvalue(bg: &BoundaryGraph) -> Result<f64> {
    let interior = bg.interior();
    if interior.is_empty() {
        return Err(Error::invalid("Dirichlet eigenvalue needs an interior vertex"));
    }
    let g = bg.graph();
    let k = interior.len();
    let m = DMatrix::from_fn(k, k, |i, j| {
        let (u, v) = (interior[i], interior[j]);
        if i == j {
            g.degree(u) as f64
        } else if g.has_edge(u, v) {
            -1.0
        } else {
            0.0
        }
    });
    Ok(extreme(m, false)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn closed_forms() {
        assert!(close(spectral_radius(&Graph::star(4), Matrix::Adjacency).unwrap().value, 2.0));
        let golden = 2.0 * (std::f64::consts::PI / 5.0).cos();
        assert!(close(spectral_radius(&Graph::path(4), Matrix::Adjacency).unwrap().value, golden));
        assert!(close(spectral_radius(&Graph::star(5), Matrix::Laplacian).unwrap().value, 6.0));
        assert!(close(spectral_radius(&Graph::cycle(6), Matrix::Signless).unwrap().value, 4.0));
        assert!(close(spectral_radius(&Graph::path(5), Matrix::Normalized).unwrap().value, 2.0));
    }

    #[test]
    fn energies() {
        assert!(close(energy(&Graph::path(2)).unwrap(), 2.0));
        assert!(close(energy(&Graph::star(3)).unwrap(), 2.0 * 3f64.sqrt()));
        assert!(close(energy(&Graph::path(4)).unwrap(), 2.0 * 5f64.sqrt()));
    }

    #[test]
    fn dirichlet_values() {
        let p3 = BoundaryGraph::leaves_as_boundary(Graph::path(3)).unwrap();
        assert!(close(dirichlet_first_eigenvalue(&p3).unwrap(), 2.0));
        let star = BoundaryGraph::leaves_as_boundary(Graph::star(4)).unwrap();
        assert!(close(dirichlet_first_eigenvalue(&star).unwrap(), 4.0));
        let p5 = BoundaryGraph::leaves_as_boundary(Graph::path(5)).unwrap();
        assert!(close(dirichlet_first_eigenvalue(&p5).unwrap(), 2.0 - 2f64.sqrt()));
        let c4 = BoundaryGraph::new(Graph::cycle(4), &[]).unwrap();
        assert!(dirichlet_first_eigenvalue(&c4).unwrap().abs() < 1e-9);
    }

    #[test]
    fn spectrum_is_sorted() {
        let vals = eigenvalues(&Graph::complete(4), Matrix::Adjacency).unwrap();
        assert!(close(vals[0], -1.0) && close(vals[3], 3.0));
        assert!(eigenvalues(&Graph::empty(0), Matrix::Adjacency).unwrap().is_empty());
    }
}

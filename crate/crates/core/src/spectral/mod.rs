//! Eigenvalue computations over graphs: spectral radius and Perron vector,
//! full spectra, exact closed-4-walk counts, Hofmeister's bound.
//!
//! Two backends: a dense symmetric eigensolver for full spectra and a shifted
//! power iteration for λ-only queries. Disconnected graphs are solved per
//! component and the maximum is taken, so power iteration never stalls on a
//! non-dominant component.

use std::fmt;

use crate::counting::{self, CountError};
use crate::graph::Graph;

mod dense;
mod power;

pub use dense::{symmetric_eigen, SymmetricEigen};
pub use power::{adjacency_matvec, power_iteration, PowerOutcome, POWER_ITERATION_CAP};

/// Default order cap for the dense eigensolver (cubic work). Overridable per
/// call; the CLI wires `BTR_DENSE_CAP` through to this.
pub const DEFAULT_DENSE_CAP: usize = 2048;

/// Default eigenvalue tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenMethod {
    DenseFull,
    PowerIteration,
}

/// Spectral data for one graph.
#[derive(Clone, Debug)]
pub struct SpectralSummary {
    /// Largest adjacency eigenvalue λ(G).
    pub lambda: f64,
    /// Full spectrum, descending; present only when the dense backend ran.
    pub eigenvalues: Option<Vec<f64>>,
    /// Nonnegative unit eigenvector for λ. Strictly positive on a connected
    /// graph; supported on one extremal component otherwise.
    pub perron: Vec<f64>,
    /// Closed walks of length 4, exact.
    pub cw4: u128,
    pub method: EigenMethod,
    /// `‖Ax - λx‖₂` achieved by `perron`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpectralError {
    EmptyGraph,
    OrderOverDenseCap { order: usize, cap: usize },
    NoConvergence { iterations: usize, residual: f64 },
    Count(CountError),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::EmptyGraph => write!(f, "spectral radius of the empty graph is undefined"),
            SpectralError::OrderOverDenseCap { order, cap } => {
                write!(f, "order {order} exceeds dense eigensolver cap {cap}")
            }
            SpectralError::NoConvergence { iterations, residual } => write!(
                f,
                "power iteration did not converge in {iterations} steps (last residual {residual:.3e})"
            ),
            SpectralError::Count(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SpectralError {}

impl From<CountError> for SpectralError {
    fn from(e: CountError) -> Self {
        SpectralError::Count(e)
    }
}

fn dense_adjacency(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut a = vec![0.0; n * n];
    for u in 0..n {
        for v in g.row(u).iter() {
            a[u * n + v] = 1.0;
        }
    }
    a
}

/// Computes λ(G) together with the Perron vector.
///
/// Per-component evaluation with the maximum taken; the returned vector is
/// supported on the winning component, sign-fixed and clamped to be
/// nonnegative, and renormalized to unit 2-norm.
pub fn spectral_radius(
    g: &Graph,
    method: EigenMethod,
    tol: f64,
) -> Result<SpectralSummary, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    let components = g.connected_components();

    let mut best_lambda = f64::NEG_INFINITY;
    let mut best_vector: Vec<f64> = Vec::new();
    let mut best_members: Vec<usize> = Vec::new();
    let mut all_eigenvalues = Vec::with_capacity(n);

    for comp in &components {
        let members = comp.to_vec();
        let sub = g.induced_subgraph(comp);
        let (lambda_c, vec_c) = match method {
            EigenMethod::DenseFull => {
                let eig = symmetric_eigen(&dense_adjacency(&sub), sub.order());
                let top = sub.order() - 1;
                all_eigenvalues.extend_from_slice(&eig.values);
                (eig.values[top], eig.eigenvector(top))
            }
            EigenMethod::PowerIteration => {
                let out = power_iteration(&sub, tol, POWER_ITERATION_CAP, None);
                if !out.converged {
                    return Err(SpectralError::NoConvergence {
                        iterations: out.iterations,
                        residual: out.residual,
                    });
                }
                (out.lambda, out.vector)
            }
        };
        if lambda_c > best_lambda {
            best_lambda = lambda_c;
            best_vector = vec_c;
            best_members = members;
        }
    }

    // Embed the winning component's vector, fix sign, clamp, renormalize.
    let mut perron = vec![0.0; n];
    for (local, &global) in best_members.iter().enumerate() {
        perron[global] = best_vector[local];
    }
    let dominant = perron
        .iter()
        .cloned()
        .fold(0.0f64, |acc, v| if v.abs() > acc.abs() { v } else { acc });
    if dominant < 0.0 {
        for v in perron.iter_mut() {
            *v = -*v;
        }
    }
    for v in perron.iter_mut() {
        if *v < 0.0 && *v >= -tol {
            *v = 0.0;
        }
    }
    let norm = perron.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in perron.iter_mut() {
            *v /= norm;
        }
    }

    let mut ax = vec![0.0; n];
    adjacency_matvec(g, &perron, &mut ax);
    let residual = perron
        .iter()
        .zip(&ax)
        .map(|(x, y)| (y - best_lambda * x).powi(2))
        .sum::<f64>()
        .sqrt();

    let eigenvalues = if method == EigenMethod::DenseFull {
        all_eigenvalues.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Some(all_eigenvalues)
    } else {
        None
    };

    Ok(SpectralSummary {
        lambda: best_lambda,
        eigenvalues,
        perron,
        cw4: closed_walks_4(g)?,
        method,
        residual,
    })
}

/// All `n` adjacency eigenvalues, descending, via the dense backend.
pub fn full_spectrum(g: &Graph) -> Result<SpectralSummary, SpectralError> {
    full_spectrum_with_cap(g, DEFAULT_DENSE_CAP)
}

pub fn full_spectrum_with_cap(g: &Graph, cap: usize) -> Result<SpectralSummary, SpectralError> {
    if g.order() > cap {
        return Err(SpectralError::OrderOverDenseCap {
            order: g.order(),
            cap,
        });
    }
    spectral_radius(g, EigenMethod::DenseFull, DEFAULT_TOL)
}

/// Number of closed walks of length 4, exact.
///
/// Computed as `trace(A^4) = sum_v d(v)^2 + 2 sum_{u<v} d(u,v)^2` in integer
/// arithmetic and cross-checked against `8 C4 + 2 sum_v d(v)^2 - 2 e(G)`; a
/// mismatch is a counting bug and comes back as an error.
pub fn closed_walks_4(g: &Graph) -> Result<u128, SpectralError> {
    let n = g.order();
    let deg_sq: u128 = (0..n).map(|v| (g.degree(v) as u128).pow(2)).sum();
    let mut pair_sq: u128 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            let d = g.pair_degree(u, v) as u128;
            pair_sq += d * d;
        }
    }
    let trace = deg_sq + 2 * pair_sq;

    let c4 = counting::count_c4(g)? as u128;
    let identity = 8 * c4 + 2 * deg_sq - 2 * g.edge_count() as u128;
    if trace != identity {
        return Err(SpectralError::Count(CountError::MethodMismatch {
            what: "closed_walks_4",
            a: trace,
            b: identity,
        }));
    }
    Ok(trace)
}

/// `λ²(G) - (1/n) sum_v d(v)²`; Hofmeister's bound says this is nonnegative.
pub fn hofmeister_margin(g: &Graph) -> Result<f64, SpectralError> {
    let summary = auto_spectral_radius(g, DEFAULT_TOL)?;
    let n = g.order() as f64;
    let deg_sq: f64 = (0..g.order()).map(|v| (g.degree(v) as f64).powi(2)).sum();
    Ok(summary.lambda * summary.lambda - deg_sq / n)
}

/// Dense backend when the order permits, power iteration otherwise.
pub fn auto_spectral_radius(g: &Graph, tol: f64) -> Result<SpectralSummary, SpectralError> {
    let method = if g.order() <= DEFAULT_DENSE_CAP {
        EigenMethod::DenseFull
    } else {
        EigenMethod::PowerIteration
    };
    spectral_radius(g, method, tol)
}

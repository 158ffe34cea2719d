//! Shifted power iteration for the dominant adjacency eigenvalue.
//!
//! Adjacency spectra live in `[-Δ, Δ]`, so iterating on `A + ΔI` makes the
//! top eigenvalue strictly dominant in magnitude (bipartite graphs would
//! otherwise oscillate between `±λ`). The iterate stays in the nonnegative
//! cone, which is exactly the Perron direction.

use crate::graph::Graph;

/// Hard cap on power-iteration steps.
pub const POWER_ITERATION_CAP: usize = 100_000;

#[derive(Clone, Debug)]
pub struct PowerOutcome {
    pub lambda: f64,
    /// Unit 2-norm iterate at termination.
    pub vector: Vec<f64>,
    /// `‖Ax - λx‖₂` at termination.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// y = A x over bitset rows.
pub fn adjacency_matvec(g: &Graph, x: &[f64], y: &mut [f64]) {
    for i in 0..g.order() {
        let mut acc = 0.0;
        for j in g.row(i).iter() {
            acc += x[j];
        }
        y[i] = acc;
    }
}

fn normalize(x: &mut [f64]) -> f64 {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in x.iter_mut() {
            *v /= norm;
        }
    }
    norm
}

/// Runs shifted power iteration until `‖Ax - λx‖ <= tol * max(1, λ)` or the
/// iteration cap. `warm_start`, when given, seeds the iterate (it is
/// renormalized; a zero or wrong-length vector falls back to uniform).
pub fn power_iteration(
    g: &Graph,
    tol: f64,
    max_iterations: usize,
    warm_start: Option<&[f64]>,
) -> PowerOutcome {
    let n = g.order();
    assert!(n > 0, "power iteration needs at least one vertex");
    let mut x = match warm_start {
        Some(w) if w.len() == n && w.iter().map(|v| v * v).sum::<f64>() > 0.0 => {
            // Dominance needs a nonnegative starting direction.
            w.iter().map(|v| v.abs()).collect::<Vec<f64>>()
        }
        _ => vec![1.0; n],
    };
    normalize(&mut x);

    let shift = g.max_degree() as f64;
    let mut z = vec![0.0; n];
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    for iteration in 1..=max_iterations {
        adjacency_matvec(g, &x, &mut z);
        lambda = x.iter().zip(&z).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&z)
            .map(|(xi, zi)| (zi - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol * lambda.abs().max(1.0) {
            return PowerOutcome {
                lambda,
                vector: x,
                residual,
                iterations: iteration,
                converged: true,
            };
        }
        // x <- normalize(z + shift * x)
        for i in 0..n {
            x[i] = z[i] + shift * x[i];
        }
        if normalize(&mut x) == 0.0 {
            // A = 0 and shift = 0: the graph is edgeless.
            return PowerOutcome {
                lambda: 0.0,
                vector: vec![1.0 / (n as f64).sqrt(); n],
                residual: 0.0,
                iterations: iteration,
                converged: true,
            };
        }
    }
    PowerOutcome {
        lambda,
        vector: x,
        residual,
        iterations: max_iterations,
        converged: false,
    }
}

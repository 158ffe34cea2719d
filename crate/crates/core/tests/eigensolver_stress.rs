//! Heavier eigensolver exercises: larger orders, high-multiplicity spectra,
//! unions of components, and cross-backend agreement.

mod common;

use btr_core::counting;
use btr_core::spectral::{self, symmetric_eigen, EigenMethod};
use btr_core::Graph;

fn adjacency(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut a = vec![0.0; n * n];
    for u in 0..n {
        for v in g.row(u).iter() {
            a[u * n + v] = 1.0;
        }
    }
    a
}

fn max_residual(g: &Graph) -> f64 {
    let n = g.order();
    let a = adjacency(g);
    let eig = symmetric_eigen(&a, n);
    let mut worst = 0.0f64;
    for j in 0..n {
        let x = eig.eigenvector(j);
        let mut r = 0.0f64;
        for i in 0..n {
            let mut ax = 0.0;
            for k in g.row(i).iter() {
                ax += x[k];
            }
            r += (ax - eig.values[j] * x[i]).powi(2);
        }
        worst = worst.max(r.sqrt());
    }
    worst
}

#[test]
fn residuals_stay_small_at_larger_orders() {
    for (n, numer, denom, seed) in [(60, 1, 2, 1u64), (100, 1, 10, 2), (150, 9, 10, 3)] {
        let g = common::random_graph(n, numer, denom, seed);
        let worst = max_residual(&g);
        assert!(worst < 1e-8 * (n as f64), "n={n}: worst residual {worst}");
    }
}

#[test]
fn high_multiplicity_spectra() {
    // K_{7,9}: eigenvalues ±sqrt(63) and fourteen zeros.
    let g = common::kab(7, 9);
    let s = spectral::full_spectrum(&g).unwrap();
    let eig = s.eigenvalues.unwrap();
    let top = 63f64.sqrt();
    assert!((eig[0] - top).abs() < 1e-9);
    assert!((eig[15] + top).abs() < 1e-9);
    for value in &eig[1..15] {
        assert!(value.abs() < 1e-9, "expected zero, got {value}");
    }

    // Complete graph: n-1 once, -1 with multiplicity n-1.
    let g = common::k(30);
    let s = spectral::full_spectrum(&g).unwrap();
    let eig = s.eigenvalues.unwrap();
    assert!((eig[0] - 29.0).abs() < 1e-9);
    for value in &eig[1..] {
        assert!((value + 1.0).abs() < 1e-9);
    }
}

#[test]
fn union_spectrum_is_concatenation() {
    // C4 + K3 + isolated vertex: {2, 0, 0, -2} ∪ {2, -1, -1} ∪ {0}.
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    edges.extend([(4, 5), (5, 6), (6, 4)]);
    let g = Graph::from_edge_list(8, &edges).unwrap();
    let s = spectral::full_spectrum(&g).unwrap();
    let eig = s.eigenvalues.unwrap();
    let expect = [2.0, 2.0, 0.0, 0.0, 0.0, -1.0, -1.0, -2.0];
    for (a, b) in eig.iter().zip(expect) {
        assert!((a - b).abs() < 1e-9, "union spectrum {eig:?}");
    }
    // λ = 2 is attained by both components; the Perron support must stay on
    // one of them.
    let support: Vec<usize> = (0..8).filter(|&v| s.perron[v] > 1e-12).collect();
    assert!(support == vec![0, 1, 2, 3] || support == vec![4, 5, 6]);
}

#[test]
fn backends_agree_on_structured_graphs() {
    let graphs = vec![
        btr_core::search::families::pp_incidence(5).unwrap(),
        btr_core::search::families::kneser(6, 2).unwrap(),
        common::kab(16, 16),
        common::cycle(101),
        common::path(77),
    ];
    for g in graphs {
        let dense = spectral::spectral_radius(&g, EigenMethod::DenseFull, 1e-10).unwrap();
        let power = spectral::spectral_radius(&g, EigenMethod::PowerIteration, 1e-10).unwrap();
        assert!(
            (dense.lambda - power.lambda).abs() <= 1e-8 * dense.lambda.max(1.0),
            "{g:?}: dense {} vs power {}",
            dense.lambda,
            power.lambda
        );
        // Moments stay consistent at these sizes too.
        let eig = dense.eigenvalues.as_ref().unwrap();
        let sum2: f64 = eig.iter().map(|l| l * l).sum();
        assert!((sum2 - 2.0 * g.edge_count() as f64).abs() < 1e-7 * sum2.max(1.0));
        let sum3: f64 = eig.iter().map(|l| l.powi(3)).sum();
        let k3 = counting::count_triangles(&g) as f64;
        assert!((sum3 - 6.0 * k3).abs() < 1e-7 * sum3.abs().max(1.0));
    }
}

//! Closed-form Gram-matrix results against trapezoidal integration of the
//! sampled wavefunctions, and hand-expanded series for the distances.

use num_complex::Complex;
use wvsim_core::pointer::grid::{covering_range, grid_overlap, to_grid, DEFAULT_POINTS};
use wvsim_core::scenarios::{ComparisonSet, EpsilonGrid};
use wvsim_core::{bures_pure, mean_position, overlap, PointerState};

fn g(c: f64) -> PointerState<f64> {
    PointerState::gaussian(c, 1.0).unwrap()
}

fn rel(a: Complex<f64>, b: Complex<f64>) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn small_shift_overlap_matches_grid() {
    let closed = overlap(&g(0.0), &g(0.01)).unwrap();
    let grid = grid_overlap(&g(0.0), &g(0.01), DEFAULT_POINTS).unwrap();
    assert!(rel(grid, closed) < 1e-6);
    // frozen from the grid oracle
    assert!((grid.re - 0.999_987_500_078).abs() < 1e-9);
}

#[test]
fn scenario_states_match_grid_across_sweep() {
    let set = ComparisonSet::<f64>::standard(1.0, 1.0).unwrap();
    for &eps in EpsilonGrid::<f64>::default_sweep().values() {
        let phi0 = g(0.0);
        let phi_e = set.eigen.unselected_pointer(eps).unwrap().components()[0]
            .1
            .clone();
        let (phi_w, _) = set.weak.postselected_pointer(eps).unwrap();
        let rho = set.expectation.unselected_pointer(eps).unwrap();
        let mut states = vec![phi0, phi_e, phi_w];
        states.extend(rho.components().iter().map(|(_, s)| s.clone()));
        for a in &states {
            for b in &states {
                let closed = overlap(a, b).unwrap();
                let grid = grid_overlap(a, b, DEFAULT_POINTS).unwrap();
                assert!(rel(grid, closed) < 1e-6, "eps={eps}: {grid} vs {closed}");
            }
        }
    }
}

#[test]
fn mean_position_matches_grid() {
    let w = PointerState::superpose(&[
        (Complex::new(2.0, 0.0), &g(0.0)),
        (Complex::new(-1.0, 0.0), &g(-0.4)),
    ])
    .unwrap();
    let (lo, hi) = covering_range(&[&w]);
    let f = to_grid(&w, lo, hi, DEFAULT_POINTS).unwrap();
    assert!((f.mean_position() - mean_position(&w)).abs() < 1e-10);
    assert!((f.norm_sqr() - 1.0).abs() < 1e-10);
}

#[test]
fn complex_coefficient_overlap_matches_grid() {
    let a = PointerState::from_terms(
        1.5,
        [
            (-1.0, Complex::new(0.3, 0.4)),
            (0.7, Complex::new(-1.0, 0.2)),
        ],
    )
    .unwrap()
    .normalize()
    .unwrap();
    let b = PointerState::from_terms(
        1.5,
        [(0.2, Complex::new(0.0, 1.0)), (2.5, Complex::new(0.5, 0.0))],
    )
    .unwrap()
    .normalize()
    .unwrap();
    let closed = overlap(&a, &b).unwrap();
    let grid = grid_overlap(&a, &b, DEFAULT_POINTS).unwrap();
    assert!(rel(grid, closed) < 1e-8);
}

/// For Φw ∝ 2G_0 − G_{−ε} against Φe = G_ε at unit width and coupling,
/// expanding in x = ε²/8 gives |⟨Φe|Φw⟩| = 1 − 4x² + O(x³), hence
/// D = ε²/(2√2) · (1 + O(ε²)).
#[test]
fn weak_distance_series() {
    for eps in [1e-3, 3e-3, 1e-2] {
        let phi_w = PointerState::superpose(&[
            (Complex::new(2.0, 0.0), &g(0.0)),
            (Complex::new(-1.0, 0.0), &g(-eps)),
        ])
        .unwrap();
        let d = bures_pure(&g(eps), &phi_w).unwrap();
        let leading = eps * eps / (2.0 * 2f64.sqrt());
        assert!(
            (d / leading - 1.0).abs() < 1e-3,
            "eps={eps}: {d} vs {leading}"
        );
    }
}

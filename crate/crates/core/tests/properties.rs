use std::f64::consts::FRAC_PI_2;

use num_complex::Complex;
use proptest::prelude::*;
use wvsim_core::scenarios::{
    aav_spin_scenario, amplification_sweep_tan, fit_power_law, ComparisonSet, EpsilonGrid,
};
use wvsim_core::{
    bures_mixed, bures_pure, couple, mean_position, post_select, weak_value, CouplingConfig,
    Observable, PointerMixture, PointerState, SystemState,
};

type C = Complex<f64>;

const LABELS: [i64; 4] = [-1, 0, 1, 2];

fn amplitudes(n: usize) -> impl Strategy<Value = Vec<C>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n)
        .prop_filter("non-zero", |v| {
            v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3
        })
        .prop_map(|v| v.into_iter().map(|(a, b)| C::new(a, b)).collect())
}

fn state() -> impl Strategy<Value = SystemState<f64>> {
    amplitudes(LABELS.len()).prop_map(|a| SystemState::new(LABELS.iter().copied().zip(a)).unwrap())
}

fn hermitian() -> impl Strategy<Value = Observable<f64>> {
    let n = LABELS.len();
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), n * n).prop_map(move |raw| {
        let mut rows = vec![vec![C::new(0.0, 0.0); n]; n];
        for i in 0..n {
            for j in 0..n {
                let (re, im) = raw[i * n + j];
                if i == j {
                    rows[i][j] = C::new(re, 0.0);
                } else if i < j {
                    rows[i][j] = C::new(re, im);
                    rows[j][i] = C::new(re, -im);
                }
            }
        }
        Observable::from_matrix(LABELS.to_vec(), rows).unwrap()
    })
}

fn diagonal_observable() -> impl Strategy<Value = Observable<f64>> {
    prop::collection::vec(-3.0..3.0f64, LABELS.len())
        .prop_map(|v| Observable::diagonal(LABELS.to_vec(), &v).unwrap())
}

fn pointer() -> impl Strategy<Value = PointerState<f64>> {
    prop::collection::vec((-2.0..2.0f64, -1.0..1.0f64, -1.0..1.0f64), 1..4).prop_filter_map(
        "non-zero pointer",
        |terms| {
            PointerState::from_terms(1.0, terms.into_iter().map(|(s, a, b)| (s, C::new(a, b))))
                .ok()?
                .normalize()
                .ok()
        },
    )
}

proptest! {
    #[test]
    fn inner_is_conjugate_symmetric(a in state(), b in state()) {
        let ab = a.inner(&b).unwrap();
        let ba = b.inner(&a).unwrap();
        prop_assert!((ab - ba.conj()).norm() < 1e-14);
        prop_assert!(ab.norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn expectation_is_real(a in hermitian(), s in state()) {
        let av = a.apply(&s).unwrap();
        let full = s.inner_vec(&av).unwrap();
        prop_assert!(full.im.abs() < 1e-12);
        prop_assert!((a.expectation(&s).unwrap() - full.re).abs() < 1e-15);
    }

    #[test]
    fn eigenvectors_are_eigenstates(a in hermitian()) {
        let e = a.eigen();
        for (value, v) in e.values.iter().zip(&e.vectors) {
            let s = SystemState::new(LABELS.iter().copied().zip(v.iter().copied())).unwrap();
            let out = a.apply(&s).unwrap();
            for (o, x) in out.iter().zip(s.amplitudes()) {
                prop_assert!((o - x * value).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn weak_value_with_equal_selections_is_expectation(a in hermitian(), s in state()) {
        let aw = weak_value(&s, &s, &a).unwrap();
        prop_assert!((aw.re - a.expectation(&s).unwrap()).abs() < 1e-12);
        prop_assert!(aw.im.abs() < 1e-12);
        let e = a.eigen();
        prop_assert!(aw.re >= e.values[0] - 1e-12);
        prop_assert!(aw.re <= e.values[LABELS.len() - 1] + 1e-12);
    }

    #[test]
    fn weak_value_ignores_phase_and_scale(
        a in hermitian(),
        pre in amplitudes(LABELS.len()),
        post in amplitudes(LABELS.len()),
        scale in (0.1..10.0f64, 0.0..6.3f64),
    ) {
        let make = |v: &[C]| SystemState::new(LABELS.iter().copied().zip(v.iter().copied())).unwrap();
        let k = C::from_polar(scale.0, scale.1);
        let (p, q) = (make(&pre), make(&post));
        prop_assume!(q.inner(&p).unwrap().norm() > 1e-3);
        let base = weak_value(&p, &q, &a).unwrap();
        let scaled_pre: Vec<C> = pre.iter().map(|x| x * k).collect();
        let scaled_post: Vec<C> = post.iter().map(|x| x * k.conj()).collect();
        let v1 = weak_value(&make(&scaled_pre), &q, &a).unwrap();
        let v2 = weak_value(&p, &make(&scaled_post), &a).unwrap();
        let tol = 1e-12 * (1.0 + base.norm());
        prop_assert!((v1 - base).norm() < tol);
        prop_assert!((v2 - base).norm() < tol);
    }

    #[test]
    fn coupling_preserves_norm_and_probabilities_are_complete(
        a in diagonal_observable(),
        pre in state(),
        eps in 1e-4..3.0f64,
    ) {
        let cfg = CouplingConfig::new(1.0, eps, 1.0).unwrap();
        let joint = couple(&pre, &a, &cfg, &cfg.initial_pointer()).unwrap();
        prop_assert!((joint.norm_sqr() - 1.0).abs() < 1e-12);
        let mut total = 0.0;
        for &j in &LABELS {
            let post = SystemState::basis(&LABELS, j).unwrap();
            if let Ok(r) = post_select(&joint, &post) {
                prop_assert!((0.0..=1.0).contains(&r.probability));
                total += r.probability;
            }
        }
        prop_assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn completeness_in_fourier_basis(a in diagonal_observable(), pre in state(), eps in 1e-3..2.0f64) {
        let cfg = CouplingConfig::new(1.0, eps, 1.0).unwrap();
        let joint = couple(&pre, &a, &cfg, &cfg.initial_pointer()).unwrap();
        let n = LABELS.len();
        let total: f64 = (0..n)
            .map(|k| {
                let post = SystemState::new(LABELS.iter().enumerate().map(|(j, &l)| {
                    let phase = 2.0 * std::f64::consts::PI * (j * k) as f64 / n as f64;
                    (l, C::from_polar(1.0, phase))
                }))
                .unwrap();
                post_select(&joint, &post).map(|r| r.probability).unwrap_or(0.0)
            })
            .sum();
        prop_assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn bures_is_a_bounded_symmetric_angle(a in pointer(), b in pointer()) {
        let ab = bures_pure(&a, &b).unwrap();
        let ba = bures_pure(&b, &a).unwrap();
        prop_assert!((0.0..=FRAC_PI_2).contains(&ab));
        prop_assert!((ab - ba).abs() < 1e-12);
        prop_assert!(bures_pure(&a, &a).unwrap() < 1e-7);
        let mix = PointerMixture::pure(b.clone()).unwrap();
        prop_assert!((bures_mixed(&a, &mix).unwrap() - ab).abs() < 1e-12);
    }

    #[test]
    fn bures_mixed_is_bounded(a in pointer(), b in pointer(), c in pointer(), p in 0.01..0.99f64) {
        let mix = PointerMixture::new(vec![(p, b), (1.0 - p, c)]).unwrap();
        let d = bures_mixed(&a, &mix).unwrap();
        prop_assert!((0.0..=FRAC_PI_2).contains(&d));
    }

    #[test]
    fn single_gaussian_mean_is_its_center(center in -50.0..50.0f64, width in 0.1..5.0f64) {
        let s = PointerState::gaussian(center, width).unwrap();
        let s = PointerState::superpose(&[(C::new(1.0, 0.0), &s)]).unwrap();
        prop_assert!((mean_position(&s) - center).abs() <= 1e-12 * (1.0 + center.abs()));
    }

    #[test]
    fn normalization_is_idempotent(s in pointer()) {
        let again = s.normalize().unwrap();
        // Near-cancelling superpositions carry roundoff proportional to the
        // coefficient size, so the bound is relative.
        for (x, y) in s.terms().iter().zip(again.terms()) {
            prop_assert!((x.coeff - y.coeff).norm() < 1e-14 * x.coeff.norm().max(1.0));
        }
    }

    #[test]
    fn fit_recovers_exact_power_laws(exponent in -3.0..3.0f64, coeff in 0.01..100.0f64) {
        let pts: Vec<(f64, f64)> = EpsilonGrid::<f64>::default_sweep()
            .values()
            .iter()
            .map(|&e| (e, coeff * e.powf(exponent)))
            .collect();
        let fit = fit_power_law(&pts).unwrap();
        prop_assert!((fit.exponent - exponent).abs() < 1e-10);
        prop_assert!((fit.coefficient / coeff - 1.0).abs() < 1e-10);
    }

    #[test]
    fn spin_weak_value_is_tan_half_alpha(alpha in 0.01..3.1f64) {
        let cfg = CouplingConfig::new(1.0, 1e-4, 1.0).unwrap();
        let s = aav_spin_scenario(alpha, cfg).unwrap();
        let t = (alpha / 2.0).tan();
        prop_assert!((s.weak_value().unwrap().re - t).abs() < 1e-9 * t.max(1.0));
    }
}

#[test]
fn weak_distance_stays_below_expectation_distance() {
    let set = ComparisonSet::<f64>::standard(1.0, 1.0).unwrap();
    let rows = wvsim_core::scenarios::run_comparison(&set, &EpsilonGrid::default_sweep()).unwrap();
    let ratios: Vec<f64> = rows
        .iter()
        .map(|r| r.d_weak_vs_eigen / r.d_expect_vs_eigen)
        .collect();
    assert!(rows.iter().all(|r| r.d_weak_vs_eigen < r.d_expect_vs_eigen));
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| r.epsilon).zip(ratios).collect();
    let fit = fit_power_law(&pts).unwrap();
    assert!((fit.exponent - 1.0).abs() < 0.05);
}

#[test]
fn amplification_is_monotone_in_weak_regime() {
    let cfg = CouplingConfig::new(1.0, 1e-4, 1.0).unwrap();
    let tans = [0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0];
    let rows = amplification_sweep_tan(&tans, cfg).unwrap();
    assert!(rows.iter().all(|r| r.weak));
    assert!(rows
        .windows(2)
        .all(|w| w[1].mean_shift_over_kick > w[0].mean_shift_over_kick));
}

#[test]
fn single_precision_instantiation() {
    let cfg = CouplingConfig::<f32>::new(1.0, 1e-2, 1.0).unwrap();
    let s = wvsim_core::scenarios::eq6_weak_scenario(cfg).unwrap();
    assert!((s.weak_value().unwrap().re - 1.0).abs() < 1e-5);
    let set = ComparisonSet::<f32>::standard(1.0, 1.0).unwrap();
    let rows =
        wvsim_core::scenarios::run_comparison(&set, &EpsilonGrid::single(1e-2).unwrap()).unwrap();
    assert!((rows[0].d_eigen / 0.005 - 1.0).abs() < 1e-2);
}

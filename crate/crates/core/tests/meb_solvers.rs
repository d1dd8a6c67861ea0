mod common;

use common::*;
use meb_kit_core::meb::{dual_objective, exact_meb_seeded, hopp_reeve_iteration_bound};
use meb_kit_core::{
    badoiu_clarkson, elzinga_hearn_dual, exact_meb, hopp_reeve_meb, kt_residuals, DualOptions, MebError, PointSet,
    StartPoint,
};
use proptest::prelude::*;

#[test]
fn exact_matches_subset_oracle() {
    let mut r = rng(11);
    for trial in 0..60 {
        let d = 2 + trial % 3;
        let n = 3 + trial % 12;
        let rows = random_rows(&mut r, n, d, 5.0);
        let got = exact_meb(&set(&rows)).unwrap().radius();
        let want = meb_radius(&rows);
        assert!((got - want).abs() <= 1e-9 * want.max(1.0), "trial {trial}: {got} vs {want}");
    }
}

#[test]
fn support_reconstructs_center() {
    let mut r = rng(12);
    for _ in 0..50 {
        let rows = random_rows(&mut r, 30, 3, 2.0);
        let p = set(&rows);
        let s = exact_meb(&p).unwrap();
        assert!(!s.support.is_empty() && s.support.len() <= 4);
        let rec = s.support.reconstruct(&p);
        assert!(dist(rec.coords(), s.center().coords()) <= 1e-8);
        let total: f64 = s.support.multipliers.iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        for &i in &s.support.indices {
            assert!((dist(p[i].coords(), s.center().coords()) - s.radius()).abs() <= 1e-8);
        }
    }
}

#[test]
fn hopp_reeve_agrees_with_exact() {
    let mut r = rng(13);
    for trial in 0..40 {
        let d = 2 + trial % 3;
        let rows = random_rows(&mut r, 25, d, 3.0);
        let p = set(&rows);
        let want = exact_meb(&p).unwrap().radius();
        match hopp_reeve_meb(&p) {
            Ok(s) => assert!((s.radius() - want).abs() <= 1e-9 * want, "trial {trial}"),
            Err(MebError::IterationCap { best, .. }) => assert!(best.radius >= want - 1e-9),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn hopp_reeve_bound_matches_binomial_sum() {
    fn c(n: u128, k: u128) -> u128 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }
    for n in 2..15usize {
        for d in 1..6usize {
            let want: u128 = (2..=(d + 1).min(n)).map(|i| c(n as u128, i as u128)).sum();
            assert_eq!(hopp_reeve_iteration_bound(n, d), Some(want));
        }
    }
}

#[test]
fn badoiu_clarkson_certificate_on_random_sets() {
    let mut r = rng(14);
    for _ in 0..20 {
        let rows = random_rows(&mut r, 60, 3, 4.0);
        let p = set(&rows);
        let opt = exact_meb(&p).unwrap();
        let run = badoiu_clarkson(&p, 100, StartPoint::Seeded(3)).unwrap();
        for (i, c) in run.centers.iter().enumerate() {
            let bound = opt.radius() / ((i + 1) as f64).sqrt() + 1e-9;
            assert!(dist(c.coords(), opt.center().coords()) <= bound);
        }
        assert!(run.solution.radius() <= opt.radius() * 1.1 + 1e-9);
        assert!(run.solution.radius() >= opt.radius() - 1e-9);
    }
}

#[test]
fn dual_certifies_and_matches_exact() {
    let mut r = rng(15);
    for trial in 0..40 {
        let d = 2 + trial % 4;
        let rows = random_rows(&mut r, 40, d, 3.0);
        let p = set(&rows);
        let sol = elzinga_hearn_dual(&p, DualOptions::default()).unwrap();
        let ex = exact_meb(&p).unwrap();
        let s = sol.solution.s;
        assert!(sol.gap <= 1e-6 * s);
        let res = kt_residuals(&p, &sol.solution.ball, &sol.lambda).unwrap();
        assert!(res.max() <= 1e-6, "trial {trial}: {res:?}");
        assert!(dist(sol.solution.center().coords(), ex.center().coords()) <= 1e-6);
        let dv = dual_objective(&p, &sol.lambda).unwrap();
        assert!((dv - s).abs() <= 1e-9 * s.max(1.0));
    }
}

#[test]
fn exact_is_seed_independent() {
    let mut r = rng(16);
    let p = set(&random_rows(&mut r, 80, 4, 1.0));
    let base = exact_meb(&p).unwrap().radius();
    for seed in 0..10 {
        let s = exact_meb_seeded(&p, seed).unwrap().radius();
        assert!((s - base).abs() <= 1e-12 * base);
    }
}

#[test]
fn large_input_uses_parallel_scan_consistently() {
    let mut r = rng(17);
    let p = set(&random_rows(&mut r, 20_000, 3, 1.0));
    let a = badoiu_clarkson(&p, 30, StartPoint::First).unwrap();
    let b = badoiu_clarkson(&p, 30, StartPoint::First).unwrap();
    assert_eq!(a.core_indices, b.core_indices);
    assert_eq!(a.solution.radius(), b.solution.radius());
}

fn rows_strategy() -> impl Strategy<Value = (usize, Vec<Vec<f64>>)> {
    (1usize..5).prop_flat_map(|d| {
        (Just(d), prop::collection::vec(prop::collection::vec(-100.0f64..100.0, d), 1..30))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_ball_encloses_everything((_d, rows) in rows_strategy()) {
        let p = PointSet::from_rows(&rows).unwrap();
        let s = exact_meb(&p).unwrap();
        let tol = p.tolerance();
        for q in p.iter() {
            prop_assert!(s.ball.contains(q, tol));
        }
    }

    #[test]
    fn translation_and_scaling_equivariance((d, rows) in rows_strategy(), shift in -50.0f64..50.0, k in 0.1f64..10.0) {
        let p = PointSet::from_rows(&rows).unwrap();
        let moved: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|x| k * x + shift).collect()).collect();
        let q = PointSet::from_rows(&moved).unwrap();
        let r0 = exact_meb(&p).unwrap().radius();
        let r1 = exact_meb(&q).unwrap().radius();
        prop_assert!((r1 - k * r0).abs() <= 1e-9 * (1.0 + k * r0 + shift.abs()) * d as f64);
    }

    #[test]
    fn dual_never_exceeds_primal((_d, rows) in rows_strategy(), w in prop::collection::vec(0.0f64..1.0, 30)) {
        let p = PointSet::from_rows(&rows).unwrap();
        let n = p.len();
        let total: f64 = w[..n].iter().sum();
        prop_assume!(total > 0.0);
        let lambda: Vec<f64> = w[..n].iter().map(|x| x / total).collect();
        let s_star = exact_meb(&p).unwrap().s;
        prop_assert!(dual_objective(&p, &lambda).unwrap() <= s_star * (1.0 + 1e-9) + 1e-9);
    }

    #[test]
    fn badoiu_clarkson_radius_bound((_d, rows) in rows_strategy(), k in 1usize..60) {
        let p = PointSet::from_rows(&rows).unwrap();
        let opt = exact_meb(&p).unwrap().radius();
        let run = badoiu_clarkson(&p, k, StartPoint::First).unwrap();
        prop_assert!(run.solution.radius() <= opt * (1.0 + 1.0 / (k as f64).sqrt()) + p.tolerance());
    }
}

mod common;

use common::*;
use meb_kit_core::{exact_meb, exact_mkeb, outlier_meb_sample, MebError};
use proptest::prelude::*;

#[test]
fn matches_subset_oracle_for_every_k() {
    let mut r = rng(21);
    for trial in 0..25 {
        let d = 1 + trial % 3;
        let n = 4 + trial % 6;
        let rows = random_rows(&mut r, n, d, 4.0);
        let p = set(&rows);
        for k in 1..=n {
            let got = exact_mkeb(&p, k).unwrap();
            let want = mkeb_radius(&rows, k);
            assert!((got.radius() - want).abs() <= 1e-9 * want.max(1.0), "trial {trial} k {k}");
            assert!(got.covered.len() >= k);
        }
    }
}

#[test]
fn full_k_is_meb() {
    let mut r = rng(22);
    for _ in 0..20 {
        let rows = random_rows(&mut r, 10, 2, 3.0);
        let p = set(&rows);
        let a = exact_mkeb(&p, 10).unwrap().radius();
        let b = exact_meb(&p).unwrap().radius();
        assert!((a - b).abs() <= p.tolerance());
    }
}

#[test]
fn outlier_fixture_coverage() {
    let p = outlier_fixture(5);
    let n = p.len();
    let r_min = exact_meb(&p).unwrap().radius();
    let mut good = 0;
    for t in 0..50 {
        let s = outlier_meb_sample(&p, 0.1, 0.1, t).unwrap();
        assert!(s.radius() <= r_min + p.tolerance());
        if s.covered.len() as f64 >= 0.9 * n as f64 {
            good += 1;
        }
    }
    assert!(good >= 43);
}

#[test]
fn sample_is_deterministic_per_seed() {
    let mut r = rng(23);
    let p = set(&random_rows(&mut r, 400, 1, 3.0));
    let a = outlier_meb_sample(&p, 0.5, 0.2, 77).unwrap();
    let b = outlier_meb_sample(&p, 0.5, 0.2, 77).unwrap();
    assert_eq!(a.ball, b.ball);
    assert_eq!(a.covered, b.covered);
    assert!(a.radius() <= exact_meb(&p).unwrap().radius() + p.tolerance());
}

#[test]
fn budget_error_is_loud() {
    let mut r = rng(24);
    let p = set(&random_rows(&mut r, 200, 3, 1.0));
    assert!(matches!(exact_mkeb(&p, 100), Err(MebError::BudgetExceeded { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn radius_monotone_in_k(rows in prop::collection::vec(prop::collection::vec(-10.0f64..10.0, 2), 2..9)) {
        let p = set(&rows);
        let mut last = 0.0;
        for k in 1..=p.len() {
            let s = exact_mkeb(&p, k).unwrap();
            prop_assert!(s.radius() >= last - p.tolerance());
            let tol = p.tolerance();
            for &i in &s.covered {
                prop_assert!(s.ball.contains(&p[i], tol));
            }
            last = s.radius();
        }
    }
}

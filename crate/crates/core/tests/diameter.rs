mod common;

use common::*;
use meb_kit_core::diameter::{diameter_doublesweep_seeded, StreamSketch, TwoApproxSketch};
use meb_kit_core::{
    diameter_bruteforce, diameter_calipers_2d, gen_instance, stream_2approx, stream_eps_2d, InstanceKind, Point,
    PointSet,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn polygon(n: usize) -> PointSet {
    let rows: Rows = (0..n)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            vec![t.cos(), t.sin()]
        })
        .collect();
    set(&rows)
}

#[test]
fn calipers_equal_brute_force() {
    let mut r = rng(51);
    for trial in 0..200 {
        let n = 2 + trial % 40;
        let rows = if trial % 5 == 0 {
            // coarse grid: duplicates and collinear runs
            random_rows(&mut r, n, 2, 3.0)
                .into_iter()
                .map(|p| p.into_iter().map(|x| x.round()).collect())
                .collect()
        } else {
            random_rows(&mut r, n, 2, 10.0)
        };
        let p = set(&rows);
        let a = diameter_calipers_2d(&p).unwrap();
        let b = diameter_bruteforce(&p).unwrap();
        assert!((a.value - b.value).abs() <= 1e-12 * (1.0 + b.value), "trial {trial}");
        assert!(a.exact);
    }
}

#[test]
fn regular_polygons_count_diameter_pairs() {
    for n in 3..30 {
        let p = polygon(n);
        let b = diameter_bruteforce(&p).unwrap();
        let c = diameter_calipers_2d(&p).unwrap();
        let want = if n % 2 == 0 { n / 2 } else { n };
        assert_eq!(b.pairs_at_max, want, "n = {n}");
        assert!(c.pairs_at_max <= n);
        assert!((c.value - b.value).abs() < 1e-12);
    }
}

#[test]
fn sweep_is_a_lower_bound() {
    let mut r = rng(52);
    for trial in 0..50 {
        let rows = random_rows(&mut r, 50, 3, 2.0);
        let p = set(&rows);
        let want = diameter(&rows);
        let got = diameter_doublesweep_seeded(&p, trial).unwrap();
        assert!(got.value <= want + 1e-12);
        assert!(got.value >= want / 2.0);
        assert!(!got.exact);
    }
}

#[test]
fn stream_contracts_under_permutations() {
    let mut r = rng(53);
    for s in 0..30 {
        let inst = gen_instance(InstanceKind::Gaussian, 40, 2, s).unwrap();
        let mut pts: Vec<Point> = inst.points.points().to_vec();
        let diam = diameter(&rows_of(&inst.points));
        for _ in 0..5 {
            pts.shuffle(&mut r);
            let (e2, _) = stream_2approx(&pts).unwrap();
            assert!(e2 <= diam + 1e-12 && diam <= 2.0 * e2 + 1e-12);
            let (ee, _) = stream_eps_2d(&pts, 0.05).unwrap();
            assert!(ee <= diam + 1e-12 && diam <= 1.05 * ee + 1e-12);
        }
    }
}

#[test]
fn sphere_fixture_diameter_near_two() {
    let inst = gen_instance(InstanceKind::SphereSurface, 64, 2, 1).unwrap();
    let d = diameter_bruteforce(&inst.points).unwrap().value;
    assert!(d <= 2.0 + 1e-12 && d > 1.95);
    let (e, _) = stream_eps_2d(inst.points.points(), 0.1).unwrap();
    assert!(e <= d + 1e-12 && d <= 1.1 * e);
}

#[test]
fn sketch_enum_dispatches() {
    let mut s = StreamSketch::TwoApprox(TwoApproxSketch::new());
    for p in polygon(6).iter() {
        s.push(p).unwrap();
    }
    assert!((s.estimate().unwrap() - 2.0).abs() < 1e-12);
    assert_eq!(s.upper_factor(), 2.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn calipers_prop(rows in prop::collection::vec(prop::collection::vec(-1e3f64..1e3, 2), 2..60)) {
        let p = set(&rows);
        let a = diameter_calipers_2d(&p).unwrap().value;
        let b = diameter_bruteforce(&p).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-12 * (1.0 + b));
    }

    #[test]
    fn erdos_pair_count(rows in prop::collection::vec(prop::collection::vec(-3i32..3, 2), 2..30)) {
        let rows: Rows = rows.into_iter().map(|r| r.into_iter().map(f64::from).collect()).collect();
        let p = set(&rows);
        let b = diameter_bruteforce(&p).unwrap();
        prop_assume!(b.value > 0.0);
        // distinct points only
        let mut uniq = rows.clone();
        uniq.sort_by(|a, b| a.partial_cmp(b).unwrap());
        uniq.dedup();
        let q = set(&uniq);
        prop_assert!(diameter_bruteforce(&q).unwrap().pairs_at_max <= uniq.len());
    }
}

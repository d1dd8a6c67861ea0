//! Brute-force reference implementations used to check the library. They
//! share no code with it beyond the point container.
#![allow(dead_code)]

use meb_kit_core::PointSet;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rows = Vec<Vec<f64>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rows(rng: &mut ChaCha8Rng, n: usize, d: usize, spread: f64) -> Rows {
    (0..n)
        .map(|_| (0..d).map(|_| rng.random_range(-spread..spread)).collect())
        .collect()
}

pub fn set(rows: &Rows) -> PointSet {
    PointSet::from_rows(rows).unwrap()
}

pub fn rows_of(p: &PointSet) -> Rows {
    p.iter().map(|q| q.coords().to_vec()).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn diff(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    let v = diff(a, b);
    dot(&v, &v).sqrt()
}

/// Gaussian elimination with partial pivoting; `None` when a pivot is tiny
/// relative to the largest diagonal entry.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let m = b.len();
    let scale = (0..m).map(|i| a[i][i].abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return if m == 0 { Some(vec![]) } else { None };
    }
    for col in 0..m {
        let piv = (col..m).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() <= 1e-10 * scale {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..m {
            let f = a[r][col] / a[col][col];
            for c in col..m {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; m];
    for r in (0..m).rev() {
        let s: f64 = (r + 1..m).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

/// Center of the smallest sphere through `pts` (center in their affine
/// hull) and its radius.
pub fn circumball(pts: &[&[f64]]) -> Option<(Vec<f64>, f64)> {
    let p0 = pts[0];
    let us: Vec<Vec<f64>> = pts[1..].iter().map(|p| diff(p, p0)).collect();
    let m = us.len();
    let g: Vec<Vec<f64>> = (0..m).map(|i| (0..m).map(|j| dot(&us[i], &us[j])).collect()).collect();
    let rhs: Vec<f64> = us.iter().map(|u| 0.5 * dot(u, u)).collect();
    let t = solve(g, rhs)?;
    let mut c = p0.to_vec();
    for (tj, u) in t.iter().zip(&us) {
        for (ci, ui) in c.iter_mut().zip(u) {
            *ci += tj * ui;
        }
    }
    let r = pts.iter().map(|p| dist(p, &c)).fold(0.0, f64::max);
    Some((c, r))
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, f);
            cur.pop();
        }
    }
    go(n, k, 0, &mut Vec::new(), f);
}

/// Smallest enclosing circumball over all subsets of size `1..=d+1`.
pub fn meb_radius(rows: &Rows) -> f64 {
    let n = rows.len();
    let d = rows[0].len();
    let scale = rows.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    let slack = 1e-9 * (1.0 + scale);
    let mut best = f64::INFINITY;
    for size in 1..=(d + 1).min(n) {
        subsets(n, size, &mut |s| {
            let pts: Vec<&[f64]> = s.iter().map(|&i| rows[i].as_slice()).collect();
            if let Some((c, r)) = circumball(&pts) {
                if r < best && rows.iter().all(|p| dist(p, &c) <= r + slack) {
                    best = r;
                }
            }
        });
    }
    best
}

/// Minimum over `k`-subsets of their MEB radius.
pub fn mkeb_radius(rows: &Rows, k: usize) -> f64 {
    let mut best = f64::INFINITY;
    subsets(rows.len(), k, &mut |s| {
        let sub: Rows = s.iter().map(|&i| rows[i].clone()).collect();
        best = best.min(meb_radius(&sub));
    });
    best
}

/// Distance from `q` to the hull of `pts`: nearest point over the relative
/// interiors of all simplices spanned by up to `d+1` points.
pub fn hull_dist(q: &[f64], pts: &[&[f64]]) -> f64 {
    let d = q.len();
    let mut best = f64::INFINITY;
    for size in 1..=(d + 1).min(pts.len()) {
        subsets(pts.len(), size, &mut |s| {
            let p0 = pts[s[0]];
            let us: Vec<Vec<f64>> = s[1..].iter().map(|&i| diff(pts[i], p0)).collect();
            let m = us.len();
            let w = diff(q, p0);
            let g: Vec<Vec<f64>> = (0..m).map(|i| (0..m).map(|j| dot(&us[i], &us[j])).collect()).collect();
            let rhs: Vec<f64> = us.iter().map(|u| dot(u, &w)).collect();
            let Some(t) = solve(g, rhs) else { return };
            let t0 = 1.0 - t.iter().sum::<f64>();
            if t0 < -1e-12 || t.iter().any(|&x| x < -1e-12) {
                return;
            }
            let mut x = p0.to_vec();
            for (tj, u) in t.iter().zip(&us) {
                for (xi, ui) in x.iter_mut().zip(u) {
                    *xi += tj * ui;
                }
            }
            best = best.min(dist(q, &x));
        });
    }
    best
}

/// Best `dist(a, conv Q)` over all `r`-subsets `Q`.
pub fn best_r_subset_dist(rows: &Rows, a: &[f64], r: usize) -> f64 {
    let mut best = f64::INFINITY;
    subsets(rows.len(), r, &mut |s| {
        let pts: Vec<&[f64]> = s.iter().map(|&i| rows[i].as_slice()).collect();
        best = best.min(hull_dist(a, &pts));
    });
    best
}

pub fn diameter(rows: &Rows) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            best = best.max(dist(&rows[i], &rows[j]));
        }
    }
    best
}

/// Largest subset with pairwise distances `>= delta - slack`, by bitmask.
pub fn scattered_count(rows: &Rows, delta: f64, slack: f64) -> usize {
    let n = rows.len();
    assert!(n <= 22);
    let mut ok = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && dist(&rows[i], &rows[j]) >= delta - slack {
                ok[i] |= 1 << j;
            }
        }
    }
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let clique = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .all(|i| mask & !(1 << i) & !ok[i] == 0);
        if clique {
            best = size;
        }
    }
    best
}

/// Two unit-diameter clusters of `n / 2` points each, 10 apart.
pub fn two_cluster_fixture(n: usize, seed: u64) -> PointSet {
    let mut r = rng(seed);
    let rows: Rows = (0..n)
        .map(|i| {
            let cx = if i % 2 == 0 { 0.0 } else { 10.0 };
            loop {
                let x: f64 = r.random_range(-0.5..0.5);
                let y: f64 = r.random_range(-0.5..0.5);
                if x * x + y * y <= 0.25 {
                    return vec![cx + x, y];
                }
            }
        })
        .collect();
    set(&rows)
}

/// 99 points in the unit disc around the origin and one at distance 50.
pub fn outlier_fixture(seed: u64) -> PointSet {
    let mut r = rng(seed);
    let mut rows: Rows = (0..99)
        .map(|_| loop {
            let x: f64 = r.random_range(-1.0..1.0);
            let y: f64 = r.random_range(-1.0..1.0);
            if x * x + y * y <= 1.0 {
                return vec![x, y];
            }
        })
        .collect();
    rows.push(vec![50.0, 0.0]);
    set(&rows)
}

//! Exact labelling of clustering promise instances: YES when the points are
//! covered by `k1` balls of radius `eps`, NO when `k2` of them are pairwise
//! at least `delta` apart.

use serde::Serialize;

use super::scattered::max_scattered;
use crate::error::{MebError, Result};
use crate::geometry::PointSet;
use crate::linalg;
use crate::meb::welzl::meb_radius;

/// Largest input accepted by [`promise_label`] when `k1 >= 2`.
pub const PROMISE_MAX_POINTS: usize = 200;
const NODE_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Label {
    Yes,
    No,
    Violates,
    Both,
}

impl Label {
    pub fn from_flags(yes_holds: bool, no_holds: bool) -> Self {
        match (yes_holds, no_holds) {
            (true, true) => Label::Both,
            (true, false) => Label::Yes,
            (false, true) => Label::No,
            (false, false) => Label::Violates,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PromiseLabel {
    pub yes_holds: bool,
    pub no_holds: bool,
    pub label: Label,
    /// A cover by at most `k1` groups of radius `eps`, when one exists.
    pub cover: Option<Vec<Vec<usize>>>,
    /// Largest scattered subset found (size `>= k2` iff `no_holds`).
    pub scattered: Vec<usize>,
}

struct CoverSearch<'a> {
    pts: &'a [&'a [f64]],
    order: Vec<usize>,
    k: usize,
    limit: f64,
    nodes: u64,
}

impl CoverSearch<'_> {
    fn fits(&self, group: &[usize]) -> bool {
        let sub: Vec<&[f64]> = group.iter().map(|&i| self.pts[i]).collect();
        meb_radius(&sub) <= self.limit
    }

    fn assign(&mut self, t: usize, groups: &mut Vec<Vec<usize>>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return Err(MebError::BudgetExceeded {
                what: "clustering search nodes",
                required: self.nodes as u128,
                budget: NODE_BUDGET as u128,
            });
        }
        if t == self.order.len() {
            return Ok(true);
        }
        let p = self.order[t];
        for g in 0..groups.len() {
            groups[g].push(p);
            let ok = self.fits(&groups[g]) && self.assign(t + 1, groups)?;
            if ok {
                return Ok(true);
            }
            groups[g].pop();
        }
        if groups.len() < self.k {
            groups.push(vec![p]);
            if self.assign(t + 1, groups)? {
                return Ok(true);
            }
            groups.pop();
        }
        Ok(false)
    }
}

/// Farthest-first traversal order starting from index 0.
fn spread_order(pts: &[&[f64]]) -> Vec<usize> {
    let n = pts.len();
    let mut order = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    let mut gap: Vec<f64> = pts.iter().map(|p| linalg::dist2(p, pts[0])).collect();
    while order.len() < n {
        let j = (0..n)
            .filter(|&i| !used[i])
            .fold(None, |acc: Option<usize>, i| match acc {
                Some(a) if gap[a] >= gap[i] => Some(a),
                _ => Some(i),
            })
            .expect("unused point remains");
        used[j] = true;
        order.push(j);
        for (g, p) in gap.iter_mut().zip(pts) {
            *g = g.min(linalg::dist2(p, pts[j]));
        }
    }
    order
}

fn clusterable(points: &PointSet, k1: usize, eps: f64) -> Result<Option<Vec<Vec<usize>>>> {
    let n = points.len();
    let tol = points.tolerance();
    let pts = points.slices();
    if k1 == 1 {
        return Ok((meb_radius(&pts) <= eps + tol).then(|| vec![(0..n).collect()]));
    }
    if k1 >= n {
        return Ok(Some((0..n).map(|i| vec![i]).collect()));
    }
    if n > PROMISE_MAX_POINTS {
        return Err(MebError::BudgetExceeded {
            what: "points for exact clustering",
            required: n as u128,
            budget: PROMISE_MAX_POINTS as u128,
        });
    }
    // k1 + 1 points pairwise farther than any radius-eps ball allows
    let apart = max_scattered(points, 2.0 * (eps + tol) + 2.0 * tol, k1 + 1, NODE_BUDGET)?;
    if apart.len() > k1 {
        return Ok(None);
    }
    let mut search = CoverSearch {
        pts: &pts,
        order: spread_order(&pts),
        k: k1,
        limit: eps + tol,
        nodes: 0,
    };
    let mut groups = Vec::with_capacity(k1);
    Ok(search.assign(0, &mut groups)?.then(|| {
        for g in groups.iter_mut() {
            g.sort_unstable();
        }
        groups.sort();
        groups
    }))
}

/// Decides both promise conditions exactly.
pub fn promise_label(points: &PointSet, k1: usize, eps: f64, k2: usize, delta: f64) -> Result<PromiseLabel> {
    if k1 == 0 {
        return Err(MebError::param("k1", "must be >= 1"));
    }
    if k2 == 0 {
        return Err(MebError::param("k2", "must be >= 1"));
    }
    if !(eps >= 0.0 && eps.is_finite()) {
        return Err(MebError::param("eps", format!("must be finite and >= 0, got {eps}")));
    }
    if !delta.is_finite() {
        return Err(MebError::param("delta", "must be finite"));
    }
    let cover = clusterable(points, k1, eps)?;
    let scattered = max_scattered(points, delta, k2, NODE_BUDGET)?;
    let yes_holds = cover.is_some();
    let no_holds = scattered.len() >= k2;
    Ok(PromiseLabel {
        yes_holds,
        no_holds,
        label: Label::from_flags(yes_holds, no_holds),
        cover,
        scattered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_ball_yes() {
        let p = PointSet::from_rows(&[[0.0, 0.0], [0.5, 0.0], [0.0, 0.5]]).unwrap();
        let l = promise_label(&p, 1, 1.0, 3, 10.0).unwrap();
        assert!(l.yes_holds && !l.no_holds);
        assert_eq!(l.label, Label::Yes);
    }

    #[test]
    fn scattered_no() {
        let p = PointSet::from_rows(&[[0.0, 0.0], [10.0, 0.0], [0.0, 10.0]]).unwrap();
        let l = promise_label(&p, 1, 1.0, 3, 10.0).unwrap();
        assert_eq!(l.label, Label::No);
        assert_eq!(l.scattered, vec![0, 1, 2]);
    }

    #[test]
    fn neither_violates_and_both() {
        let p = PointSet::from_rows(&[[0.0], [3.0], [6.0]]).unwrap();
        assert_eq!(promise_label(&p, 1, 1.0, 3, 5.0).unwrap().label, Label::Violates);
        assert_eq!(promise_label(&p, 3, 1.0, 3, 1.0).unwrap().label, Label::Both);
    }

    #[test]
    fn two_clusters() {
        let p = PointSet::from_rows(&[[0.0, 0.0], [10.0, 0.0], [0.5, 0.5], [10.5, 0.0], [0.0, 0.9]]).unwrap();
        let l = promise_label(&p, 2, 0.6, 3, 5.0).unwrap();
        assert!(l.yes_holds);
        assert_eq!(l.cover.unwrap(), vec![vec![0, 2, 4], vec![1, 3]]);
        let l = promise_label(&p, 2, 0.2, 3, 5.0).unwrap();
        assert!(!l.yes_holds);
    }

    #[test]
    fn label_is_a_function_of_flags() {
        assert_eq!(Label::from_flags(false, false), Label::Violates);
        assert_eq!(Label::from_flags(true, true), Label::Both);
    }
}

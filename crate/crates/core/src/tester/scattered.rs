//! Largest subset with all pairwise distances at least `delta`: a maximum
//! clique in the threshold graph, solved by branch and bound with a greedy
//! colouring bound.

use serde::Serialize;

use crate::error::{MebError, Result};
use crate::geometry::PointSet;
use crate::linalg;

/// Inputs up to this size are solved exactly by [`scattered_points`].
pub const SCATTERED_EXACT_LIMIT: usize = 60;

#[derive(Debug, Clone, Serialize)]
pub struct ScatteredPoints {
    pub count: usize,
    /// Ascending.
    pub indices: Vec<usize>,
    /// `false` when `count` is only a greedy lower bound.
    pub exact: bool,
}

#[derive(Clone)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Self {
        let mut b = Self::empty(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

/// Adjacency of the threshold graph: `i ~ j` iff `|p_i - p_j| >= delta - tol`.
fn threshold_graph(points: &PointSet, delta: f64) -> Vec<Bits> {
    let n = points.len();
    let cut = delta - points.tolerance();
    let pts = points.slices();
    let mut adj = vec![Bits::empty(n); n];
    for i in 0..n {
        for j in i + 1..n {
            if linalg::dist2(pts[i], pts[j]).sqrt() >= cut {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    adj
}

pub(crate) struct CliqueSearch<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    /// stop once a clique of this size is found
    target: usize,
    nodes: u64,
    node_budget: u64,
}

impl CliqueSearch<'_> {
    /// Vertices of `cand` with their colour numbers, ascending by colour.
    fn colour(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.clear(v);
                uncoloured.clear(v);
                q.and_not_assign(&self.adj[v]);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, chosen: &mut Vec<usize>, mut cand: Bits) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(MebError::BudgetExceeded {
                what: "scattered-point search nodes",
                required: self.nodes as u128,
                budget: self.node_budget as u128,
            });
        }
        let order = self.colour(&cand);
        for &(v, colour) in order.iter().rev() {
            if chosen.len() + colour <= self.best.len() || self.best.len() >= self.target {
                return Ok(());
            }
            chosen.push(v);
            let next = cand.and(&self.adj[v]);
            if next.is_empty() {
                if chosen.len() > self.best.len() {
                    self.best = chosen.clone();
                }
            } else {
                self.expand(chosen, next)?;
            }
            chosen.pop();
            cand.clear(v);
        }
        Ok(())
    }
}

/// Greedy farthest-first scattered set starting from index 0.
fn greedy(points: &PointSet, delta: f64) -> Vec<usize> {
    let pts = points.slices();
    let cut = delta - points.tolerance();
    if cut <= 0.0 {
        return (0..pts.len()).collect();
    }
    let mut chosen = vec![0];
    let mut gap: Vec<f64> = pts.iter().map(|p| linalg::dist2(p, pts[0]).sqrt()).collect();
    loop {
        let (j, g) = gap
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &g)| if g > acc.1 { (i, g) } else { acc });
        if g < cut {
            break;
        }
        chosen.push(j);
        for (gi, p) in gap.iter_mut().zip(&pts) {
            *gi = gi.min(linalg::dist2(p, pts[j]).sqrt());
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Exact maximum scattered set, stopping early once `target` is reached.
pub(crate) fn max_scattered(points: &PointSet, delta: f64, target: usize, node_budget: u64) -> Result<Vec<usize>> {
    let adj = threshold_graph(points, delta);
    let mut search = CliqueSearch {
        adj: &adj,
        best: greedy(points, delta),
        target,
        nodes: 0,
        node_budget,
    };
    if search.best.len() < target {
        search.expand(&mut Vec::new(), Bits::full(points.len()))?;
    }
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// Maximum subset with pairwise distances `>= delta` (within tolerance).
/// Exact for up to [`SCATTERED_EXACT_LIMIT`] points, a greedy lower bound
/// above that.
pub fn scattered_points(points: &PointSet, delta: f64) -> Result<ScatteredPoints> {
    if !delta.is_finite() {
        return Err(MebError::param("delta", "must be finite"));
    }
    let (indices, exact) = if points.len() <= SCATTERED_EXACT_LIMIT {
        (max_scattered(points, delta, usize::MAX, u64::MAX)?, true)
    } else {
        (greedy(points, delta), false)
    };
    Ok(ScatteredPoints {
        count: indices.len(),
        indices,
        exact,
    })
}

use serde::Serialize;

use crate::combinatorics::{binomial, for_each_combination};
use crate::error::{MebError, Result};
use crate::geometry::Point;

/// Closed axis-aligned box.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AABox {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl AABox {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(MebError::ZeroDimension);
        }
        if lower.len() != upper.len() {
            return Err(MebError::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        if let Some(position) = lower.iter().chain(&upper).position(|c| !c.is_finite()) {
            return Err(MebError::NonFinite { position });
        }
        if let Some(j) = (0..lower.len()).find(|&j| lower[j] > upper[j]) {
            return Err(MebError::param(
                "box",
                format!("lower[{j}] = {} exceeds upper[{j}] = {}", lower[j], upper[j]),
            ));
        }
        Ok(AABox { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HellyReport {
    pub dim: usize,
    pub boxes: usize,
    /// Every subfamily of `d + 1` boxes has a common point.
    pub all_subfamilies_intersect: bool,
    /// First subfamily (lexicographic) without a common point, if any.
    pub failing_subfamily: Option<Vec<usize>>,
    pub whole_family_intersects: bool,
    /// Center of the common intersection, reported when the premise holds.
    pub common_point: Option<Point>,
    /// `all_subfamilies_intersect => whole_family_intersects`.
    pub implication_holds: bool,
}

/// Intersection `[max lower, min upper]` per axis, or `None` if empty.
fn intersection<'a>(family: impl Iterator<Item = &'a AABox>, d: usize) -> Option<(Vec<f64>, Vec<f64>)> {
    let mut lo = vec![f64::NEG_INFINITY; d];
    let mut hi = vec![f64::INFINITY; d];
    for b in family {
        for j in 0..d {
            lo[j] = lo[j].max(b.lower[j]);
            hi[j] = hi[j].min(b.upper[j]);
        }
    }
    (0..d).all(|j| lo[j] <= hi[j]).then_some((lo, hi))
}

/// Above this many `(d+1)`-subfamilies the premise is decided through the
/// pairwise test, which is equivalent for axis-aligned boxes.
const SUBFAMILY_BUDGET: u128 = 2_000_000;

/// Checks the Helly premise ("every d+1 boxes meet") and conclusion ("all
/// boxes meet") on a family of axis-aligned boxes.
pub fn helly_check_boxes(family: &[AABox]) -> Result<HellyReport> {
    let d = family.first().ok_or(MebError::EmptyInput("box family"))?.dim();
    if let Some(b) = family.iter().find(|b| b.dim() != d) {
        return Err(MebError::DimensionMismatch {
            expected: d,
            got: b.dim(),
        });
    }
    let k = family.len();
    if k < d + 1 {
        return Err(MebError::TooFewPoints {
            required: d + 1,
            got: k,
        });
    }

    let mut failing = None;
    let exhaustive = binomial(k as u128, d as u128 + 1).is_some_and(|c| c <= SUBFAMILY_BUDGET);
    if exhaustive {
        for_each_combination(k, d + 1, |sub| {
            if intersection(sub.iter().map(|&i| &family[i]), d).is_none() {
                failing = Some(sub.to_vec());
                return false;
            }
            true
        });
    } else {
        for_each_combination(k, 2, |pair| {
            if intersection(pair.iter().map(|&i| &family[i]), d).is_none() {
                // extend the disjoint pair to a (d+1)-subfamily
                let mut sub = pair.to_vec();
                sub.extend((0..k).filter(|i| !pair.contains(i)).take(d - 1));
                sub.sort_unstable();
                failing = Some(sub);
                return false;
            }
            true
        });
    }
    let premise = failing.is_none();
    let whole = intersection(family.iter(), d);
    let common_point = match (&whole, premise) {
        (Some((lo, hi)), true) => Some(Point::new(
            lo.iter().zip(hi).map(|(a, b)| 0.5 * (a + b)).collect(),
        )?),
        _ => None,
    };
    Ok(HellyReport {
        dim: d,
        boxes: k,
        all_subfamilies_intersect: premise,
        failing_subfamily: failing,
        whole_family_intersects: whole.is_some(),
        common_point,
        implication_holds: !premise || whole.is_some(),
    })
}

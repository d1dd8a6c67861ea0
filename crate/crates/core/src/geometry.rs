//! Points, point sets, balls and the small exact primitives everything else
//! is built from.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{MebError, Result};
use crate::linalg::{self, PivotedQr};

/// Scale-aware comparison tolerance, `1e-9 * (1 + scale)`, where `scale` is the
/// largest absolute coordinate involved.
#[inline]
pub fn tolerance(scale: f64) -> f64 {
    1e-9 * (1.0 + scale)
}

/// A point in d-dimensional space with finite coordinates.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(MebError::ZeroDimension);
        }
        if let Some(position) = coords.iter().position(|c| !c.is_finite()) {
            return Err(MebError::NonFinite { position });
        }
        Ok(Point(coords))
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![0.0; dim.max(1)])
    }

    /// Caller guarantees finiteness and `dim >= 1`.
    pub(crate) fn from_vec_unchecked(coords: Vec<f64>) -> Self {
        debug_assert!(!coords.is_empty() && coords.iter().all(|c| c.is_finite()));
        Point(coords)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// Largest absolute coordinate.
    pub fn scale(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = MebError;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Point::new(v)
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.0
    }
}

impl Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// A nonempty finite set of points sharing one dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointSet {
    points: Vec<Point>,
    dim: usize,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let dim = points
            .first()
            .ok_or(MebError::EmptyInput("point set"))?
            .dim();
        if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
            return Err(MebError::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        Ok(PointSet { points, dim })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let points = rows
            .iter()
            .map(|r| Point::new(r.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(points)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn get(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn subset(&self, indices: &[usize]) -> Result<PointSet> {
        PointSet::new(indices.iter().map(|&i| self.points[i].clone()).collect())
    }

    /// Largest absolute coordinate over the whole set.
    pub fn scale(&self) -> f64 {
        self.points.iter().fold(0.0, |m, p| m.max(p.scale()))
    }

    /// Default geometric tolerance for comparisons on this set.
    pub fn tolerance(&self) -> f64 {
        tolerance(self.scale())
    }

    pub(crate) fn slices(&self) -> Vec<&[f64]> {
        self.points.iter().map(Point::coords).collect()
    }

    pub(crate) fn check_dim(&self, p: &Point) -> Result<()> {
        if p.dim() != self.dim {
            return Err(MebError::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for PointSet {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Closed ball `{x : |x - center| <= radius}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius >= 0.0 && radius.is_finite()) {
            return Err(MebError::param("radius", format!("must be finite and >= 0, got {radius}")));
        }
        Ok(Ball { center, radius })
    }

    pub fn contains(&self, p: &Point, tol: f64) -> bool {
        linalg::dist2(self.center.coords(), p.coords()).sqrt() <= self.radius + tol
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }
}

/// A centrally symmetric convex body, stored without a translation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConvexBody {
    BallBody { radius: f64 },
    BoxBody { half_extents: Vec<f64> },
}

impl ConvexBody {
    pub fn ball(radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(MebError::param("radius", format!("must be > 0, got {radius}")));
        }
        Ok(ConvexBody::BallBody { radius })
    }

    pub fn aabox(half_extents: Vec<f64>) -> Result<Self> {
        if half_extents.is_empty() {
            return Err(MebError::ZeroDimension);
        }
        if let Some(h) = half_extents.iter().find(|h| !(**h > 0.0 && h.is_finite())) {
            return Err(MebError::param("half_extents", format!("must all be > 0, got {h}")));
        }
        Ok(ConvexBody::BoxBody { half_extents })
    }
}

/// Euclidean distance between two points of equal dimension.
pub fn distance(p: &Point, q: &Point) -> Result<f64> {
    if p.dim() != q.dim() {
        return Err(MebError::DimensionMismatch {
            expected: p.dim(),
            got: q.dim(),
        });
    }
    Ok(linalg::dist2(p.coords(), q.coords()).sqrt())
}

/// Coordinate-wise mean.
pub fn barycenter(points: &PointSet) -> Point {
    Point::from_vec_unchecked(mean_of(&points.slices()))
}

pub(crate) fn mean_of(pts: &[&[f64]]) -> Vec<f64> {
    let d = pts[0].len();
    let mut c = vec![0.0; d];
    for p in pts {
        linalg::axpy(1.0, p, &mut c);
    }
    let n = pts.len() as f64;
    c.iter_mut().for_each(|x| *x /= n);
    c
}

/// The unique ball through `m <= d+1` affinely independent points whose
/// center lies in their affine hull.
pub fn circumball(points: &PointSet) -> Result<Ball> {
    if points.len() > points.dim() + 1 {
        return Err(MebError::Degenerate {
            indices: (0..points.len()).collect(),
        });
    }
    let (center, r2) = circumball_raw(&points.slices())?;
    Ok(Ball {
        center: Point::from_vec_unchecked(center),
        radius: r2.sqrt(),
    })
}

/// Circumcenter and squared circumradius. On affine dependence the error
/// names the dependent prefix in pivot order (positions in `pts`).
pub(crate) fn circumball_raw(pts: &[&[f64]]) -> Result<(Vec<f64>, f64)> {
    let p0 = pts[0];
    if pts.len() == 1 {
        return Ok((p0.to_vec(), 0.0));
    }
    let cols: Vec<Vec<f64>> = pts[1..].iter().map(|p| linalg::sub(p, p0)).collect();
    let qr = PivotedQr::new(&cols);
    if qr.rank < cols.len() {
        let mut indices = vec![0];
        indices.extend(qr.perm[..=qr.rank].iter().map(|j| j + 1));
        indices.sort_unstable();
        return Err(MebError::Degenerate { indices });
    }
    // 2 u_j . x = |u_j|^2 with x = c - p0 = sum_l y_l q_l  =>  R^T y = b / 2
    let rhs: Vec<f64> = qr
        .perm
        .iter()
        .map(|&j| 0.5 * linalg::norm2(&cols[j]))
        .collect();
    let y = qr.forward_substitute_transposed(&rhs);
    let mut center = p0.to_vec();
    for (yl, ql) in y.iter().zip(&qr.q) {
        linalg::axpy(*yl, ql, &mut center);
    }
    let r2 = pts
        .iter()
        .map(|p| linalg::dist2(&center, p))
        .fold(0.0, f64::max);
    Ok((center, r2))
}

/// Whether some translate of `body` contains every point of `w`.
pub fn fits_in_translate(body: &ConvexBody, w: &PointSet) -> Result<bool> {
    let tol = w.tolerance();
    match body {
        ConvexBody::BallBody { radius } => {
            let r = crate::meb::welzl::meb_radius(&w.slices());
            Ok(r <= radius + tol)
        }
        ConvexBody::BoxBody { half_extents } => {
            if half_extents.len() != w.dim() {
                return Err(MebError::DimensionMismatch {
                    expected: half_extents.len(),
                    got: w.dim(),
                });
            }
            Ok(half_extents.iter().enumerate().all(|(j, h)| {
                let (lo, hi) = w.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                    (lo.min(p[j]), hi.max(p[j]))
                });
                (hi - lo) / 2.0 <= h + tol
            }))
        }
    }
}

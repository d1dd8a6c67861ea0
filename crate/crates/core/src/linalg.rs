//! Small dense helpers built on column-pivoted modified Gram-Schmidt.
//!
//! Everything here works on a handful of vectors (at most d+2), so plain
//! `Vec<f64>` storage is used throughout.

/// Relative threshold on squared residual norms below which a column is
/// treated as linearly dependent on the columns already chosen.
pub(crate) const SINGULAR_PIVOT: f64 = 1e-12;

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub(crate) fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let t = x - y;
            t * t
        })
        .sum()
}

#[inline]
pub(crate) fn norm2(a: &[f64]) -> f64 {
    dot(a, a)
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `y += alpha * x`
#[inline]
pub(crate) fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Column-pivoted QR factorisation obtained by modified Gram-Schmidt.
///
/// `perm[k]` is the original column chosen as the k-th pivot. The first
/// `rank` entries of `perm` are the independent columns; `r[l][j]` holds the
/// coefficient of `q[l]` in original column `j` for every column `j`.
pub(crate) struct PivotedQr {
    pub q: Vec<Vec<f64>>,
    pub r: Vec<Vec<f64>>,
    pub perm: Vec<usize>,
    pub rank: usize,
}

impl PivotedQr {
    pub fn new(cols: &[Vec<f64>]) -> Self {
        let m = cols.len();
        let rows = cols.first().map_or(0, Vec::len);
        let scale = cols.iter().map(|c| norm2(c)).fold(0.0, f64::max);
        let mut work: Vec<Vec<f64>> = cols.to_vec();
        let mut perm: Vec<usize> = (0..m).collect();
        let mut q = Vec::new();
        let mut r = Vec::new();
        let max_rank = m.min(rows);

        let mut rank = 0;
        while rank < max_rank {
            // pick the remaining column with the largest residual
            let (best, best_norm) = (rank..m)
                .map(|k| (k, norm2(&work[perm[k]])))
                .fold((rank, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
            if scale == 0.0 || best_norm <= SINGULAR_PIVOT * scale {
                break;
            }
            perm.swap(rank, best);
            let pivot = perm[rank];
            let nrm = best_norm.sqrt();
            let qk: Vec<f64> = work[pivot].iter().map(|x| x / nrm).collect();
            let mut row = vec![0.0; m];
            for &j in &perm[rank..] {
                let coef = dot(&qk, &work[j]);
                row[j] = coef;
                axpy(-coef, &qk, &mut work[j]);
            }
            q.push(qk);
            r.push(row);
            rank += 1;
        }
        PivotedQr { q, r, perm, rank }
    }

    /// Solves `R_11 x = rhs` where `R_11` is the leading `rank x rank`
    /// upper-triangular block in pivot order.
    pub fn back_substitute(&self, rhs: &[f64]) -> Vec<f64> {
        let k = self.rank;
        let mut x = vec![0.0; k];
        for i in (0..k).rev() {
            let mut acc = rhs[i];
            for j in (i + 1)..k {
                acc -= self.r[i][self.perm[j]] * x[j];
            }
            x[i] = acc / self.r[i][self.perm[i]];
        }
        x
    }

    /// Solves `R_11^T y = rhs` (forward substitution).
    pub fn forward_substitute_transposed(&self, rhs: &[f64]) -> Vec<f64> {
        let k = self.rank;
        let mut y = vec![0.0; k];
        for i in 0..k {
            let mut acc = rhs[i];
            for l in 0..i {
                acc -= self.r[l][self.perm[i]] * y[l];
            }
            y[i] = acc / self.r[i][self.perm[i]];
        }
        y
    }

    /// A nonzero vector `alpha` with `sum_j alpha_j cols_j ~ 0`, if the columns
    /// are (numerically) dependent.
    pub fn null_vector(&self, ncols: usize) -> Option<Vec<f64>> {
        if self.rank >= ncols {
            return None;
        }
        let dep = self.perm[self.rank];
        let rhs: Vec<f64> = (0..self.rank).map(|l| self.r[l][dep]).collect();
        let beta = self.back_substitute(&rhs);
        let mut alpha = vec![0.0; ncols];
        for (k, b) in beta.iter().enumerate() {
            alpha[self.perm[k]] = *b;
        }
        alpha[dep] = -1.0;
        Some(alpha)
    }
}

/// Minimises `|y0 + sum_j beta_j (y_j - y0)|` and returns the affine
/// weights `(1 - sum beta, beta_1, ..)`. Dependent directions get zero weight.
pub(crate) fn affine_min_norm(ys: &[&[f64]]) -> Vec<f64> {
    let m = ys.len();
    if m == 1 {
        return vec![1.0];
    }
    let y0 = ys[0];
    let cols: Vec<Vec<f64>> = ys[1..].iter().map(|y| sub(y, y0)).collect();
    let qr = PivotedQr::new(&cols);
    let rhs: Vec<f64> = qr.q.iter().map(|qk| -dot(qk, y0)).collect();
    let beta_piv = qr.back_substitute(&rhs);
    let mut w = vec![0.0; m];
    let mut total = 0.0;
    for (k, b) in beta_piv.iter().enumerate() {
        w[qr.perm[k] + 1] = *b;
        total += b;
    }
    w[0] = 1.0 - total;
    w
}

/// Nonzero affine dependence `alpha` (sum alpha = 0, sum alpha_i p_i ~ 0)
/// among the given points. Returns `None` only when the points are
/// affinely independent within the pivot threshold.
pub(crate) fn affine_dependence(pts: &[&[f64]]) -> Option<Vec<f64>> {
    let m = pts.len();
    if m < 2 {
        return None;
    }
    let p0 = pts[0];
    let cols: Vec<Vec<f64>> = pts[1..].iter().map(|p| sub(p, p0)).collect();
    let qr = PivotedQr::new(&cols);
    let beta = qr.null_vector(m - 1)?;
    let mut alpha = Vec::with_capacity(m);
    alpha.push(-beta.iter().sum::<f64>());
    alpha.extend(beta);
    Some(alpha)
}

//! Brute-force H/V conversions and boundedness checks for small polytopes.
//!
//! Everything here enumerates index subsets, so it is meant for the low
//! dimensions (≤ 4 or so) and modest facet counts the rest of the crate uses.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

const FEAS_TOL: f64 = 1e-9;
const RANK_TOL: f64 = 1e-10;

/// All `k`-element subsets of `0..m` in lexicographic order.
pub(crate) fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Eigen-decomposition of `AᵀA` sorted ascending; used for rank and null
/// directions of short, wide systems.
fn gram_spectrum(rows: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = rows.ncols();
    let g = rows.transpose() * rows;
    let eig = SymmetricEigen::new(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = eig.eigenvectors.select_columns(&order);
    (values, vectors)
}

pub(crate) fn rank(m: &DMatrix<f64>) -> usize {
    if m.nrows() == 0 {
        return 0;
    }
    let sv = m.clone().singular_values();
    let max = sv.max();
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_TOL * max).count()
}

/// Scales each row `a_i x ≤ b_i` to unit `‖a_i‖`.
pub(crate) fn normalize_rows(a: &DMatrix<f64>, b: &DVector<f64>) -> (DMatrix<f64>, DVector<f64>) {
    let mut a = a.clone();
    let mut b = b.clone();
    for i in 0..a.nrows() {
        let norm = a.row(i).norm();
        if norm > 0.0 {
            a.row_mut(i).scale_mut(1.0 / norm);
            b[i] /= norm;
        }
    }
    (a, b)
}

/// A nonzero `d` with `A d ≤ 0`, if one exists (the polyhedron `Ax ≤ b` is
/// then unbounded along `d`).
pub(crate) fn recession_direction(a: &DMatrix<f64>) -> Option<DVector<f64>> {
    let n = a.ncols();
    let (a, _) = normalize_rows(a, &DVector::zeros(a.nrows()));
    if rank(&a) < n {
        let (_, vectors) = gram_spectrum(&a);
        return Some(vectors.column(0).into_owned());
    }
    // Pointed recession cone: nontrivial iff it has an extreme ray, which is
    // cut out by n-1 linearly independent active rows.
    for subset in combinations(a.nrows(), n - 1) {
        let candidate = if n == 1 {
            DVector::from_element(1, 1.0)
        } else {
            let rows = a.select_rows(&subset);
            let (values, vectors) = gram_spectrum(&rows);
            if values[1] <= RANK_TOL {
                continue;
            }
            vectors.column(0).into_owned()
        };
        for sign in [1.0, -1.0] {
            let d = &candidate * sign;
            if (&a * &d).iter().all(|&v| v <= FEAS_TOL) {
                return Some(d);
            }
        }
    }
    None
}

/// Vertices of `{x : Ax ≤ b}` by solving every `n × n` active subsystem.
pub(crate) fn vertices(a: &DMatrix<f64>, b: &DVector<f64>) -> Vec<DVector<f64>> {
    let n = a.ncols();
    let (a, b) = normalize_rows(a, b);
    let mut out: Vec<DVector<f64>> = Vec::new();
    for subset in combinations(a.nrows(), n) {
        let sub_a = a.select_rows(&subset);
        let sub_b = DVector::from_iterator(n, subset.iter().map(|&i| b[i]));
        if rank(&sub_a) < n {
            continue;
        }
        let Some(x) = sub_a.lu().solve(&sub_b) else {
            continue;
        };
        let slack = &b - &a * &x;
        let scale = 1.0 + x.amax();
        if slack.iter().all(|&s| s >= -FEAS_TOL * scale)
            && !out.iter().any(|v| (v - &x).amax() <= 1e-9 * scale)
        {
            out.push(x);
        }
    }
    out
}

/// Facet inequalities `a·x ≤ b` (unit normals) of the convex hull of
/// full-dimensional point sets.
pub(crate) fn facets_from_vertices(
    points: &[DVector<f64>],
) -> Option<(DMatrix<f64>, DVector<f64>)> {
    let n = points.first()?.len();
    if points.len() < n + 1 {
        return None;
    }
    let mut normals: Vec<(DVector<f64>, f64)> = Vec::new();
    for subset in combinations(points.len(), n) {
        let base = &points[subset[0]];
        let normal = if n == 1 {
            DVector::from_element(1, 1.0)
        } else {
            let diffs = DMatrix::from_fn(n - 1, n, |r, c| points[subset[r + 1]][c] - base[c]);
            let (values, vectors) = gram_spectrum(&diffs);
            if values[1] <= RANK_TOL * (1.0 + values[n - 1]) {
                continue;
            }
            vectors.column(0).into_owned()
        };
        let offset = normal.dot(base);
        let side: Vec<f64> = points.iter().map(|p| normal.dot(p) - offset).collect();
        let scale = 1.0 + points.iter().map(|p| p.amax()).fold(0.0, f64::max);
        let (normal, offset) = if side.iter().all(|&s| s <= FEAS_TOL * scale) {
            (normal, offset)
        } else if side.iter().all(|&s| s >= -FEAS_TOL * scale) {
            (-normal, -offset)
        } else {
            continue;
        };
        if !normals
            .iter()
            .any(|(m, o)| (m - &normal).amax() <= 1e-9 && (o - offset).abs() <= 1e-9 * scale)
        {
            normals.push((normal, offset));
        }
    }
    if normals.len() < n + 1 {
        return None;
    }
    let a = DMatrix::from_fn(normals.len(), n, |r, c| normals[r].0[c]);
    let b = DVector::from_iterator(normals.len(), normals.iter().map(|(_, o)| *o));
    Some((a, b))
}

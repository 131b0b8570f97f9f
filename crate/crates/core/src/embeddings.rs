//! Isometric embeddings of Hilbert geometries into normed spaces.
//!
//! * `Log` sends the interior of `R^n_+` (modulo scaling) onto
//!   `(R^n, ‖·‖_var)`.
//! * The open `n`-simplex is isometric to `(R^n, ‖·‖_H)` with
//!   `‖x‖_H = max(x_1, .., x_n, 0) − min(x_1, .., x_n, 0)`.
//! * A polytope with `m` facets embeds into `(R^{m(m−1)/2}, ‖·‖_∞)` through
//!   `Ψ_ij = log(ψ_i/ψ_j)`, `i < j` in lexicographic order.

use nalgebra::{DMatrix, DVector};

use crate::cone::Cone;
use crate::error::{check_dim, Error, Result};
use crate::polytope;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetNorm {
    Variation,
    HexagonalH,
    SupNorm,
}

impl TargetNorm {
    pub fn norm(self, w: &[f64]) -> Result<f64> {
        match self {
            TargetNorm::Variation => variation_norm(w),
            TargetNorm::HexagonalH => h_norm(w),
            TargetNorm::SupNorm => {
                if w.is_empty() {
                    return Err(Error::EmptyInput);
                }
                Ok(w.iter().fold(0.0_f64, |m, v| m.max(v.abs())))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedPoint {
    pub coords: Vec<f64>,
    pub target_norm: TargetNorm,
}

impl EmbeddedPoint {
    /// Norm distance between two embedded points of the same target.
    pub fn distance(&self, other: &EmbeddedPoint) -> Result<f64> {
        if self.target_norm != other.target_norm {
            return Err(Error::InvalidParameter(
                "embedded points use different norms".into(),
            ));
        }
        check_dim(self.coords.len(), other.coords.len())?;
        let diff: Vec<f64> = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        self.target_norm.norm(&diff)
    }
}

/// `max_i w_i − min_j w_j`.
pub fn variation_norm(w: &[f64]) -> Result<f64> {
    let (lo, hi) = extremes(w.iter().copied()).ok_or(Error::EmptyInput)?;
    Ok(hi - lo)
}

pub fn h_norm(x: &[f64]) -> Result<f64> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (lo, hi) = extremes(x.iter().copied().chain(std::iter::once(0.0))).unwrap();
    Ok(hi - lo)
}

fn extremes(mut it: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    let first = it.next()?;
    Some(it.fold((first, first), |(lo, hi), v| (lo.min(v), hi.max(v))))
}

fn require_positive(x: &[f64]) -> Result<()> {
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if x.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(Error::NotInterior);
    }
    Ok(())
}

/// Coordinatewise logarithm of an interior orthant point.
pub fn log_map(x: &[f64]) -> Result<EmbeddedPoint> {
    require_positive(x)?;
    Ok(EmbeddedPoint {
        coords: x.iter().map(|v| v.ln()).collect(),
        target_norm: TargetNorm::Variation,
    })
}

/// Inverse of [`log_map`] up to the choice of scale.
pub fn exp_map(w: &[f64]) -> Vec<f64> {
    w.iter().map(|v| v.exp()).collect()
}

/// `x ↦ (log(x_i / x_base))_{i ≠ base}` on the open simplex of `R^{n+1}`.
pub fn simplex_isometry(x: &[f64], base_index: usize) -> Result<EmbeddedPoint> {
    require_positive(x)?;
    if x.len() < 2 {
        return Err(Error::InvalidParameter(
            "simplex needs at least two vertices".into(),
        ));
    }
    if base_index >= x.len() {
        return Err(Error::InvalidParameter(format!(
            "base index {base_index} out of range for {} coordinates",
            x.len()
        )));
    }
    let base = x[base_index].ln();
    let coords = x
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != base_index)
        .map(|(_, v)| v.ln() - base)
        .collect();
    Ok(EmbeddedPoint {
        coords,
        target_norm: TargetNorm::HexagonalH,
    })
}

/// `Ψ(x)` for an interior point of a cone with facet functionals.
pub fn polytope_embedding(cone: &Cone, x: &[f64]) -> Result<EmbeddedPoint> {
    let psi = cone
        .facet_values(x)?
        .ok_or_else(|| Error::InvalidCone("cone has no facet functionals".into()))?;
    if !cone.is_interior(x)? {
        return Err(Error::NotInterior);
    }
    let logs: Vec<f64> = psi.iter().map(|v| v.ln()).collect();
    let m = logs.len();
    let mut coords = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            coords.push(logs[i] - logs[j]);
        }
    }
    Ok(EmbeddedPoint {
        coords,
        target_norm: TargetNorm::SupNorm,
    })
}

/// Facet system `x_i − x_j ≤ 1` of the `‖·‖_H` unit ball in `R^n`, where
/// indices run over `{0, .., n}` and `x_0 = 0`.
pub fn h_unit_ball_system(n: usize) -> (DMatrix<f64>, DVector<f64>) {
    let mut rows = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if i == j {
                continue;
            }
            let mut r = vec![0.0; n];
            if i > 0 {
                r[i - 1] += 1.0;
            }
            if j > 0 {
                r[j - 1] -= 1.0;
            }
            rows.push(r);
        }
    }
    let a = DMatrix::from_fn(rows.len(), n, |r, c| rows[r][c]);
    let b = DVector::from_element(rows.len(), 1.0);
    (a, b)
}

/// `(facets, vertices)` of the `‖·‖_H` unit ball, counted from its vertex
/// set rather than read off the defining system.
pub fn h_unit_ball_counts(n: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let (a, b) = h_unit_ball_system(n);
    let verts = polytope::vertices(&a, &b);
    let (facets, _) = polytope::facets_from_vertices(&verts)
        .ok_or_else(|| Error::DegeneratePolytope("unit ball is flat".into()))?;
    Ok((facets.nrows(), verts.len()))
}

/// Number of corners of the planar `‖·‖_H` unit circle found by walking
/// `samples` radial boundary points and clustering sharp turns.
pub fn h_unit_circle_corners(samples: usize) -> usize {
    let pts: Vec<(f64, f64)> = (0..samples)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * (k as f64 + 0.5) / samples as f64;
            let (s, c) = t.sin_cos();
            let r = h_norm(&[c, s]).unwrap();
            (c / r, s / r)
        })
        .collect();
    let turning: Vec<bool> = (0..samples)
        .map(|k| {
            let p = pts[(k + samples - 1) % samples];
            let q = pts[k];
            let r = pts[(k + 1) % samples];
            let (ux, uy) = (q.0 - p.0, q.1 - p.1);
            let (vx, vy) = (r.0 - q.0, r.1 - q.1);
            let cross = ux * vy - uy * vx;
            let angle = cross.atan2(ux * vx + uy * vy);
            angle.abs() > 1e-6
        })
        .collect();
    // count maximal runs of turning samples around the circle
    (0..samples)
        .filter(|&k| turning[k] && !turning[(k + samples - 1) % samples])
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variation_norm_examples() {
        assert_eq!(variation_norm(&[1.0, 2.0, 3.0]).unwrap(), 2.0);
        assert_eq!(variation_norm(&[4.0; 3]).unwrap(), 0.0);
        assert_eq!(variation_norm(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn h_norm_examples() {
        assert_eq!(h_norm(&[1.0, -1.0]).unwrap(), 2.0);
        assert_eq!(h_norm(&[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(h_norm(&[0.7, 0.7]).unwrap(), 0.7);
        assert_eq!(h_norm(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn log_map_matches_orthant_distance() {
        let lx = log_map(&[1.0, 2.0]).unwrap();
        let ly = log_map(&[2.0, 1.0]).unwrap();
        let d = lx.distance(&ly).unwrap();
        assert!((d - 4f64.ln()).abs() < 1e-15);
        assert_eq!(log_map(&[1.0, 1.0]).unwrap().coords, vec![0.0, 0.0]);
        assert_eq!(log_map(&[1.0, 0.0]), Err(Error::NotInterior));
        let scaled = log_map(&[3.0, 6.0]).unwrap();
        assert!(lx.distance(&scaled).unwrap().abs() < 1e-15);
    }

    #[test]
    fn simplex_examples() {
        let bary = simplex_isometry(&[1.0 / 3.0; 3], 0).unwrap();
        assert!(bary.coords.iter().all(|v| v.abs() < 1e-15));
        let x = simplex_isometry(&[0.25, 0.75], 0).unwrap();
        let y = simplex_isometry(&[0.5, 0.5], 0).unwrap();
        assert!((x.distance(&y).unwrap() - 3f64.ln()).abs() < 1e-15);
        assert!(simplex_isometry(&[0.5, 0.5], 2).is_err());
    }

    #[test]
    fn psi_at_witness_vanishes() {
        let square =
            crate::hilbert_geometry::PolytopalDomain::cuboid(&[0.0, 0.0], &[1.0, 1.0]).unwrap();
        let cone = square.cone().unwrap();
        let psi = polytope_embedding(&cone, &[0.5, 0.5, 1.0]).unwrap();
        assert_eq!(psi.coords.len(), 6);
        assert!(psi.coords.iter().all(|v| v.abs() < 1e-15));
        assert_eq!(
            polytope_embedding(&cone, &[0.0, 0.5, 1.0]),
            Err(Error::NotInterior)
        );
    }

    #[test]
    fn interval_psi_is_log_coordinate() {
        let interval = crate::hilbert_geometry::PolytopalDomain::cuboid(&[0.0], &[1.0]).unwrap();
        let cone = interval.cone().unwrap();
        for t in [0.1, 0.3, 0.8] {
            let psi = polytope_embedding(&cone, &[t, 1.0]).unwrap();
            assert_eq!(psi.coords.len(), 1);
            // facets ψ ∝ t and 1 − t, in some order
            assert!((psi.coords[0].abs() - (t / (1.0 - t)).ln().abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn unit_ball_shapes() {
        assert_eq!(h_unit_ball_counts(2).unwrap(), (6, 6));
        assert_eq!(h_unit_ball_counts(3).unwrap(), (12, 14));
        assert_eq!(h_unit_circle_corners(3600), 6);
    }
}

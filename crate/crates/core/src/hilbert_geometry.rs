//! Hilbert's cross-ratio metric on bounded convex polytopes.

use nalgebra::{DMatrix, DVector};

use crate::cone::{self, Cone, PolytopeInput};
use crate::error::{check_dim, Error, Result};

/// Facet directions with `|a_i · d|` below this (relative) are parallel to
/// the chord.
const PARALLEL_TOL: f64 = 1e-14;

/// Norm used to measure chord lengths. The cross-ratio does not depend on
/// the choice; it is exposed so that this can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChordNorm {
    #[default]
    Euclidean,
    L1,
    Sup,
}

impl ChordNorm {
    fn measure(self, v: &DVector<f64>) -> f64 {
        match self {
            ChordNorm::Euclidean => v.norm(),
            ChordNorm::L1 => v.lp_norm(1),
            ChordNorm::Sup => v.amax(),
        }
    }
}

/// Bounded open polytope `{x : A x < b}` with a strictly interior witness.
#[derive(Debug, Clone)]
pub struct PolytopalDomain {
    a: DMatrix<f64>,
    b: DVector<f64>,
    witness: DVector<f64>,
}

/// Boundary hits of the line through `x` and `y`: `x' = x + t_minus (y − x)`
/// and `y' = x + t_plus (y − x)`, with `t_minus < 0 < 1 < t_plus`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChordEndpoints {
    pub x_prime: DVector<f64>,
    pub y_prime: DVector<f64>,
    pub t_minus: f64,
    pub t_plus: f64,
}

impl PolytopalDomain {
    /// Builds the domain from `A x ≤ b`, rejecting unbounded or flat input.
    pub fn new(a: DMatrix<f64>, b: DVector<f64>) -> Result<Self> {
        let (a, b, witness) = cone::certify_polytope(&a, &b)?;
        Ok(PolytopalDomain { a, b, witness })
    }

    pub fn from_vertices(points: &[DVector<f64>]) -> Result<Self> {
        let n = points.first().ok_or(Error::EmptyInput)?.len();
        for p in points {
            check_dim(n, p.len())?;
        }
        let (a, b) = crate::polytope::facets_from_vertices(points).ok_or_else(|| {
            Error::DegeneratePolytope("vertices do not span a full-dimensional polytope".into())
        })?;
        Self::new(a, b)
    }

    /// Axis-aligned box `∏ [lo_i, hi_i]`.
    pub fn cuboid(lo: &[f64], hi: &[f64]) -> Result<Self> {
        check_dim(lo.len(), hi.len())?;
        let n = lo.len();
        let a = DMatrix::from_fn(2 * n, n, |r, c| match (r / 2 == c, r % 2) {
            (true, 0) => -1.0,
            (true, _) => 1.0,
            _ => 0.0,
        });
        let b = DVector::from_fn(
            2 * n,
            |r, _| if r % 2 == 0 { -lo[r / 2] } else { hi[r / 2] },
        );
        Self::new(a, b)
    }

    pub fn dim(&self) -> usize {
        self.a.ncols()
    }

    pub fn facet_count(&self) -> usize {
        self.a.nrows()
    }

    pub fn facets(&self) -> (&DMatrix<f64>, &DVector<f64>) {
        (&self.a, &self.b)
    }

    pub fn witness(&self) -> &DVector<f64> {
        &self.witness
    }

    pub fn contains_interior(&self, x: &[f64]) -> Result<bool> {
        check_dim(self.dim(), x.len())?;
        let v = DVector::from_column_slice(x);
        let slack = &self.b - &self.a * v;
        Ok(slack
            .iter()
            .zip(self.a.row_iter())
            .all(|(s, row)| *s > 1e-12 * row.norm()))
    }

    /// The homogenized cone over the closed polytope.
    pub fn cone(&self) -> Result<Cone> {
        cone::homogenize(&PolytopeInput::Facets {
            a: self.a.clone(),
            b: self.b.clone(),
        })
    }

    /// `(x, 1)`: the point at height one in the homogenized cone.
    pub fn lift(&self, x: &[f64]) -> Vec<f64> {
        x.iter().copied().chain(std::iter::once(1.0)).collect()
    }

    pub fn boundary_intersections(&self, x: &[f64], y: &[f64]) -> Result<ChordEndpoints> {
        check_dim(self.dim(), x.len())?;
        check_dim(self.dim(), y.len())?;
        if !self.contains_interior(x)? || !self.contains_interior(y)? {
            return Err(Error::NotInterior);
        }
        let xv = DVector::from_column_slice(x);
        let yv = DVector::from_column_slice(y);
        let d = &yv - &xv;
        if d.amax() == 0.0 {
            return Err(Error::PointsCoincide);
        }
        let mut t_plus = f64::INFINITY;
        let mut t_minus = f64::NEG_INFINITY;
        for (i, row) in self.a.row_iter().enumerate() {
            let rate = row.dot(&d.transpose());
            let room = self.b[i] - row.dot(&xv.transpose());
            if rate.abs() <= PARALLEL_TOL * row.norm() * d.amax() {
                continue;
            }
            let t = room / rate;
            if rate > 0.0 {
                t_plus = t_plus.min(t);
            } else {
                t_minus = t_minus.max(t);
            }
        }
        if !t_plus.is_finite() || !t_minus.is_finite() {
            return Err(Error::UnboundedPolytope(d.as_slice().to_vec()));
        }
        Ok(ChordEndpoints {
            x_prime: &xv + &d * t_minus,
            y_prime: &xv + &d * t_plus,
            t_minus,
            t_plus,
        })
    }

    /// Hilbert's cross-ratio distance
    /// `log(|x'y| / |x'x| · |y'x| / |y'y|)`.
    pub fn cross_ratio_distance(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        self.cross_ratio_distance_with(x, y, ChordNorm::Euclidean)
    }

    pub fn cross_ratio_distance_with(&self, x: &[f64], y: &[f64], norm: ChordNorm) -> Result<f64> {
        if x == y {
            if !self.contains_interior(x)? {
                return Err(Error::NotInterior);
            }
            return Ok(0.0);
        }
        let chord = self.boundary_intersections(x, y)?;
        let xv = DVector::from_column_slice(x);
        let yv = DVector::from_column_slice(y);
        let (yx, yp) = self.cross_ratio_factors_inner(&xv, &yv, &chord, norm);
        Ok((yx * yp).ln().max(0.0))
    }

    /// The two projective ratios `(|y − x'| / |x − x'|, |x − y'| / |y − y'|)`;
    /// on the homogenized cone they equal `M(y/x)` and `M(x/y)`.
    pub fn cross_ratio_factors(&self, x: &[f64], y: &[f64]) -> Result<(f64, f64)> {
        let chord = self.boundary_intersections(x, y)?;
        let xv = DVector::from_column_slice(x);
        let yv = DVector::from_column_slice(y);
        Ok(self.cross_ratio_factors_inner(&xv, &yv, &chord, ChordNorm::Euclidean))
    }

    fn cross_ratio_factors_inner(
        &self,
        x: &DVector<f64>,
        y: &DVector<f64>,
        chord: &ChordEndpoints,
        norm: ChordNorm,
    ) -> (f64, f64) {
        let first = norm.measure(&(y - &chord.x_prime)) / norm.measure(&(x - &chord.x_prime));
        let second = norm.measure(&(x - &chord.y_prime)) / norm.measure(&(y - &chord.y_prime));
        (first, second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval() -> PolytopalDomain {
        PolytopalDomain::cuboid(&[0.0], &[1.0]).unwrap()
    }

    #[test]
    fn interval_chord() {
        let c = interval().boundary_intersections(&[0.25], &[0.5]).unwrap();
        assert!(c.x_prime[0].abs() < 1e-15);
        assert!((c.y_prime[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn square_chord() {
        let sq = PolytopalDomain::cuboid(&[0.0, 0.0], &[1.0, 1.0]).unwrap();
        let c = sq
            .boundary_intersections(&[0.5, 0.5], &[0.75, 0.5])
            .unwrap();
        assert!((c.x_prime - DVector::from_vec(vec![0.0, 0.5])).amax() < 1e-15);
        assert!((c.y_prime - DVector::from_vec(vec![1.0, 0.5])).amax() < 1e-15);
    }

    #[test]
    fn coincident_points() {
        assert_eq!(
            interval().boundary_intersections(&[0.3], &[0.3]),
            Err(Error::PointsCoincide)
        );
        assert_eq!(
            interval().cross_ratio_distance(&[0.3], &[0.3]).unwrap(),
            0.0
        );
        assert_eq!(
            interval().boundary_intersections(&[0.0], &[0.3]),
            Err(Error::NotInterior)
        );
    }

    #[test]
    fn interval_distance_is_log_three() {
        let d = interval().cross_ratio_distance(&[0.25], &[0.5]).unwrap();
        assert!((d - 3f64.ln()).abs() < 1e-15);
        // Birkhoff form on R^2_+ with (0.25, 0.75), (0.5, 0.5): M/m = 1.5/0.5
        let o = Cone::orthant(2).unwrap();
        let d0 = o.hilbert_distance(&[0.25, 0.75], &[0.5, 0.5]).unwrap();
        assert!((d - d0).abs() < 1e-15);
    }

    #[test]
    fn symmetric_and_norm_free() {
        let sq = PolytopalDomain::cuboid(&[0.0, -1.0], &[2.0, 1.0]).unwrap();
        let (x, y) = ([0.3, 0.2], [1.7, -0.6]);
        let d = sq.cross_ratio_distance(&x, &y).unwrap();
        assert!((d - sq.cross_ratio_distance(&y, &x).unwrap()).abs() < 1e-14);
        for norm in [ChordNorm::L1, ChordNorm::Sup] {
            assert!((d - sq.cross_ratio_distance_with(&x, &y, norm).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn matches_homogenized_cone() {
        let sq = PolytopalDomain::cuboid(&[0.0, 0.0], &[1.0, 1.0]).unwrap();
        let cone = sq.cone().unwrap();
        let (x, y) = ([0.1, 0.8], [0.6, 0.3]);
        let d = sq.cross_ratio_distance(&x, &y).unwrap();
        let d0 = cone.hilbert_distance(&sq.lift(&x), &sq.lift(&y)).unwrap();
        assert!((d - d0).abs() < 1e-12);
        let (m_yx, m_xy) = sq.cross_ratio_factors(&x, &y).unwrap();
        assert!((m_yx - cone.upper_bound(&sq.lift(&y), &sq.lift(&x)).unwrap()).abs() < 1e-12);
        assert!((m_xy - cone.upper_bound(&sq.lift(&x), &sq.lift(&y)).unwrap()).abs() < 1e-12);
    }
}

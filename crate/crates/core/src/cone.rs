//! Concrete closed cones, the order functionals `M(x/y)`, `m(x/y)` and the
//! Hilbert, Thompson and Funk distances built from them.
//!
//! Points are plain coordinate slices whose layout depends on the cone:
//! `n` coordinates for the orthant, simplicial and polyhedral cones, `n*n`
//! row-major entries for `PSD(n)` and `(s, x_1, .., x_n)` for `Lorentz(n)`.
//!
//! Distances take values in `[0, +∞]`; `+∞` is returned for points in
//! different parts and NaN is never produced for valid input.

use nalgebra::{DMatrix, DVector};

use crate::error::{check_dim, Error, Result};
use crate::jordan::{self, JordanElement};
use crate::polytope;

/// Relative tolerance on facet ratios and membership tests.
pub const RATIO_TOL: f64 = 1e-12;
/// Smallest accepted `σ_min / σ_max` of a simplicial basis.
pub const CONDITION_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum ConeKind {
    Orthant,
    /// Generated by the columns of `basis`.
    Simplicial {
        basis: DMatrix<f64>,
        inverse: DMatrix<f64>,
    },
    /// `{x : ψ_i(x) ≥ 0}`; rows of `facets` are normalized so `ψ_i(witness) = 1`.
    Polyhedral {
        facets: DMatrix<f64>,
        witness: DVector<f64>,
    },
    Psd(usize),
    Lorentz(usize),
}

/// An immutable cone description together with its ambient dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Cone {
    kind: ConeKind,
    ambient_dim: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

/// `M(x/y)` and `m(x/y)`. `upper` is `+∞` exactly when `y` does not
/// dominate `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderBounds {
    pub upper: f64,
    pub lower: f64,
    pub comparable: bool,
}

/// Input description of a polytope in `R^n`.
#[derive(Debug, Clone)]
pub enum PolytopeInput {
    /// `{x : A x ≤ b}`.
    Facets {
        a: DMatrix<f64>,
        b: DVector<f64>,
    },
    Vertices(Vec<DVector<f64>>),
}

impl Cone {
    pub fn orthant(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(Cone {
            kind: ConeKind::Orthant,
            ambient_dim: n,
        })
    }

    pub fn simplicial(basis: DMatrix<f64>) -> Result<Self> {
        if !basis.is_square() || basis.is_empty() {
            return Err(Error::InvalidCone("simplicial basis must be square".into()));
        }
        let sv = basis.clone().singular_values();
        let max = sv.max();
        if max == 0.0 || sv.min() / max <= CONDITION_FLOOR {
            return Err(Error::InvalidCone("simplicial basis is singular".into()));
        }
        let inverse = basis
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidCone("simplicial basis is singular".into()))?;
        let n = basis.nrows();
        Ok(Cone {
            kind: ConeKind::Simplicial { basis, inverse },
            ambient_dim: n,
        })
    }

    /// Cone `{x : facets · x ≥ 0}` with a certified interior witness. Rows
    /// are rescaled so that every functional equals 1 at the witness.
    pub fn polyhedral(facets: DMatrix<f64>, witness: DVector<f64>) -> Result<Self> {
        let n = facets.ncols();
        if n == 0 || facets.nrows() == 0 {
            return Err(Error::EmptyInput);
        }
        check_dim(n, witness.len())?;
        let values = &facets * &witness;
        let mut facets = facets;
        for (i, v) in values.iter().enumerate() {
            if !(*v > 0.0) {
                return Err(Error::InvalidCone(format!(
                    "witness violates facet {i} (value {v})"
                )));
            }
            facets.row_mut(i).scale_mut(1.0 / v);
        }
        if polytope::rank(&facets) < n {
            return Err(Error::InvalidCone("cone contains a line".into()));
        }
        Ok(Cone {
            kind: ConeKind::Polyhedral { facets, witness },
            ambient_dim: n,
        })
    }

    /// Positive semidefinite `n × n` matrices.
    pub fn psd(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(Cone {
            kind: ConeKind::Psd(n),
            ambient_dim: n * n,
        })
    }

    /// `{(s, x) ∈ R × R^n : s ≥ ‖x‖}`.
    pub fn lorentz(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(Cone {
            kind: ConeKind::Lorentz(n),
            ambient_dim: n + 1,
        })
    }

    pub fn kind(&self) -> &ConeKind {
        &self.kind
    }

    /// Length of a point's coordinate slice.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of facet functionals, for the three polyhedral families.
    pub fn facet_count(&self) -> Option<usize> {
        match &self.kind {
            ConeKind::Orthant => Some(self.ambient_dim),
            ConeKind::Simplicial { .. } => Some(self.ambient_dim),
            ConeKind::Polyhedral { facets, .. } => Some(facets.nrows()),
            _ => None,
        }
    }

    /// Values `ψ_i(x)` of the facet functionals (coordinates for the orthant,
    /// basis coefficients for a simplicial cone).
    pub fn facet_values(&self, x: &[f64]) -> Result<Option<Vec<f64>>> {
        check_dim(self.ambient_dim, x.len())?;
        let v = DVector::from_column_slice(x);
        Ok(match &self.kind {
            ConeKind::Orthant => Some(x.to_vec()),
            ConeKind::Simplicial { inverse, .. } => Some((inverse * v).as_slice().to_vec()),
            ConeKind::Polyhedral { facets, .. } => Some((facets * v).as_slice().to_vec()),
            _ => None,
        })
    }

    /// Jordan-algebra view of a point for the symmetric-cone families.
    pub fn jordan_element(&self, x: &[f64]) -> Result<Option<JordanElement>> {
        check_dim(self.ambient_dim, x.len())?;
        Ok(match self.kind {
            ConeKind::Psd(n) => Some(JordanElement::sym_from_row_major(n, x)?),
            ConeKind::Lorentz(_) => Some(JordanElement::spin_from_slice(x)?),
            _ => None,
        })
    }

    pub fn membership(&self, x: &[f64]) -> Result<Membership> {
        if let Some(vals) = self.facet_values(x)? {
            let scale = vals.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            if scale == 0.0 {
                return Ok(Membership::Boundary);
            }
            if vals.iter().any(|&v| v < -RATIO_TOL * scale) {
                return Ok(Membership::Outside);
            }
            if vals.iter().all(|&v| v > RATIO_TOL * scale) {
                return Ok(Membership::Interior);
            }
            return Ok(Membership::Boundary);
        }
        let el = self.jordan_element(x)?.expect("symmetric cone");
        if el.max_abs() == 0.0 {
            return Ok(Membership::Boundary);
        }
        if !el.in_cone(RATIO_TOL) {
            Ok(Membership::Outside)
        } else if el.is_interior() {
            Ok(Membership::Interior)
        } else {
            Ok(Membership::Boundary)
        }
    }

    pub fn is_interior(&self, x: &[f64]) -> Result<bool> {
        Ok(self.membership(x)? == Membership::Interior)
    }

    fn require_member(&self, x: &[f64]) -> Result<()> {
        match self.membership(x)? {
            Membership::Outside => Err(Error::NotInCone),
            _ => Ok(()),
        }
    }

    /// `M(x/y)`, `m(x/y)` for `x`, `y` in the cone with `y ≠ 0`.
    pub fn order_bounds(&self, x: &[f64], y: &[f64]) -> Result<OrderBounds> {
        check_dim(self.ambient_dim, x.len())?;
        check_dim(self.ambient_dim, y.len())?;
        if is_zero(y) {
            return Err(Error::ZeroDenominator);
        }
        self.require_member(x)?;
        self.require_member(y)?;
        if let (Some(fx), Some(fy)) = (self.facet_values(x)?, self.facet_values(y)?) {
            return Ok(facet_ratio_bounds(&fx, &fy));
        }
        let ex = self.jordan_element(x)?.expect("symmetric cone");
        let ey = self.jordan_element(y)?.expect("symmetric cone");
        let upper = jordan::upper_order_bound(&ex, &ey)?;
        let lower = if is_zero(x) {
            0.0
        } else {
            1.0 / jordan::upper_order_bound(&ey, &ex)?
        };
        Ok(OrderBounds {
            upper,
            lower,
            comparable: upper.is_finite(),
        })
    }

    /// `M(x/y)`, which is `0` for `x = 0`.
    pub fn upper_bound(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        Ok(self.order_bounds(x, y)?.upper)
    }

    /// Birkhoff's version of Hilbert's metric, `log(M(x/y)/m(x/y))`.
    pub fn hilbert_distance(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        match self.zero_pattern(x, y)? {
            Some(d) => Ok(d),
            None => {
                let b = self.order_bounds(x, y)?;
                if !b.comparable || b.lower <= 0.0 {
                    return Ok(f64::INFINITY);
                }
                Ok((b.upper / b.lower).ln().max(0.0))
            }
        }
    }

    /// Thompson's metric `max(log M(x/y), log M(y/x))`.
    pub fn thompson_distance(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        match self.zero_pattern(x, y)? {
            Some(d) => Ok(d),
            None => {
                let forward = self.upper_bound(x, y)?;
                let backward = self.upper_bound(y, x)?;
                if !forward.is_finite() || !backward.is_finite() {
                    return Ok(f64::INFINITY);
                }
                Ok(forward.ln().max(backward.ln()))
            }
        }
    }

    /// The Funk weak metric `log M(x/y)` between interior points.
    pub fn funk_weak_metric(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        check_dim(self.ambient_dim, x.len())?;
        check_dim(self.ambient_dim, y.len())?;
        if !self.is_interior(x)? || !self.is_interior(y)? {
            return Err(Error::NotInterior);
        }
        Ok(self.upper_bound(x, y)?.ln())
    }

    /// Whether `x` and `y` lie in the same part (mutually dominate).
    pub fn same_part(&self, x: &[f64], y: &[f64]) -> Result<bool> {
        match self.zero_pattern(x, y)? {
            Some(d) => Ok(d == 0.0),
            None => Ok(self.upper_bound(x, y)?.is_finite() && self.upper_bound(y, x)?.is_finite()),
        }
    }

    /// Distance forced by zero arguments: `d(0,0) = 0`, `d(x,0) = ∞`.
    fn zero_pattern(&self, x: &[f64], y: &[f64]) -> Result<Option<f64>> {
        check_dim(self.ambient_dim, x.len())?;
        check_dim(self.ambient_dim, y.len())?;
        self.require_member(x)?;
        self.require_member(y)?;
        Ok(match (is_zero(x), is_zero(y)) {
            (true, true) => Some(0.0),
            (true, false) | (false, true) => Some(f64::INFINITY),
            _ => None,
        })
    }
}

/// Hilbert distance on `R^n_+` without membership validation; callers must
/// pass nonnegative vectors of equal length.
pub fn orthant_hilbert_distance(x: &[f64], y: &[f64]) -> f64 {
    match (is_zero(x), is_zero(y)) {
        (true, true) => 0.0,
        (true, false) | (false, true) => f64::INFINITY,
        _ => {
            let b = facet_ratio_bounds(x, y);
            if !b.comparable || b.lower <= 0.0 {
                f64::INFINITY
            } else {
                (b.upper / b.lower).ln().max(0.0)
            }
        }
    }
}

fn is_zero(x: &[f64]) -> bool {
    x.iter().all(|&v| v == 0.0)
}

/// `M = max_i fx_i/fy_i`, `m = min_i fx_i/fy_i` over the facet functionals,
/// with boundary values below the relative tolerance treated as zero.
fn facet_ratio_bounds(fx: &[f64], fy: &[f64]) -> OrderBounds {
    let scale = |v: &[f64]| v.iter().fold(0.0_f64, |m, a| m.max(a.abs()));
    let tol_x = RATIO_TOL * scale(fx);
    let tol_y = RATIO_TOL * scale(fy);
    let mut upper = 0.0_f64;
    let mut lower = f64::INFINITY;
    for (&a, &b) in fx.iter().zip(fy) {
        let a = if a <= tol_x { 0.0 } else { a };
        if b > tol_y {
            let r = a / b;
            upper = upper.max(r);
            lower = lower.min(r);
        } else if a > 0.0 {
            upper = f64::INFINITY;
        }
    }
    OrderBounds {
        upper,
        lower,
        comparable: upper.is_finite(),
    }
}

/// The cone `{(λx, λ) : x ∈ P, λ ≥ 0}` over a bounded polytope `P ⊂ R^n`,
/// with facet functionals `ψ_i(z, s) = b_i s − a_i·z` normalized at
/// `(barycenter of vertices, 1)`.
pub fn homogenize(input: &PolytopeInput) -> Result<Cone> {
    let (a, b) = match input {
        PolytopeInput::Facets { a, b } => (a.clone(), b.clone()),
        PolytopeInput::Vertices(points) => {
            let n = points.first().ok_or(Error::EmptyInput)?.len();
            for p in points {
                check_dim(n, p.len())?;
            }
            polytope::facets_from_vertices(points).ok_or_else(|| {
                Error::DegeneratePolytope("vertices do not span a full-dimensional polytope".into())
            })?
        }
    };
    let (a, b, witness) = certify_polytope(&a, &b)?;
    let n = a.ncols();
    let m = a.nrows();
    let facets = DMatrix::from_fn(m, n + 1, |r, c| if c < n { -a[(r, c)] } else { b[r] });
    let mut u = DVector::zeros(n + 1);
    u.rows_mut(0, n).copy_from(&witness);
    u[n] = 1.0;
    Cone::polyhedral(facets, u)
}

/// Checks that `{Ax ≤ b}` is bounded with nonempty interior; returns the
/// system together with the vertex barycenter as interior witness.
pub(crate) fn certify_polytope(
    a: &DMatrix<f64>,
    b: &DVector<f64>,
) -> Result<(DMatrix<f64>, DVector<f64>, DVector<f64>)> {
    let n = a.ncols();
    if n == 0 || a.nrows() == 0 {
        return Err(Error::EmptyInput);
    }
    check_dim(a.nrows(), b.len())?;
    if let Some(d) = polytope::recession_direction(a) {
        return Err(Error::UnboundedPolytope(d.as_slice().to_vec()));
    }
    let verts = polytope::vertices(a, b);
    if verts.len() < n + 1 {
        return Err(Error::DegeneratePolytope(format!(
            "only {} vertices found",
            verts.len()
        )));
    }
    let mut bary = DVector::zeros(n);
    for v in &verts {
        bary += v;
    }
    bary /= verts.len() as f64;
    let (an, bn) = polytope::normalize_rows(a, b);
    let slack = &bn - &an * &bary;
    let width = verts
        .iter()
        .map(|v| (v - &bary).amax())
        .fold(0.0_f64, f64::max);
    if slack.iter().any(|&s| s <= 1e-9 * width.max(1e-300)) {
        return Err(Error::DegeneratePolytope("empty interior".into()));
    }
    Ok((a.clone(), b.clone(), bary))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orthant2() -> Cone {
        Cone::orthant(2).unwrap()
    }

    #[test]
    fn order_bounds_orthant_example() {
        let b = orthant2().order_bounds(&[1.0, 2.0], &[2.0, 1.0]).unwrap();
        assert_eq!(b.upper, 2.0);
        assert_eq!(b.lower, 0.5);
        assert!(b.comparable);
    }

    #[test]
    fn order_bounds_brute_force_scan() {
        // Scan β on a fine grid: x ≤ βy iff every coordinate of βy − x ≥ 0.
        let (x, y) = ([1.0, 2.0], [2.0, 1.0]);
        let step = 1e-4;
        let upper = (1..100_000)
            .map(|k| k as f64 * step)
            .find(|beta| x.iter().zip(&y).all(|(a, b)| beta * b - a >= -1e-15))
            .unwrap();
        let lower = (1..100_000)
            .map(|k| k as f64 * step)
            .take_while(|alpha| x.iter().zip(&y).all(|(a, b)| a - alpha * b >= -1e-15))
            .last()
            .unwrap();
        let b = orthant2().order_bounds(&x, &y).unwrap();
        assert!((b.upper - upper).abs() <= step);
        assert!((b.lower - lower).abs() <= step);
    }

    #[test]
    fn identical_points_have_unit_bounds() {
        let b = orthant2().order_bounds(&[0.3, 0.7], &[0.3, 0.7]).unwrap();
        assert_eq!((b.upper, b.lower), (1.0, 1.0));
    }

    #[test]
    fn incomparable_points() {
        let b = orthant2().order_bounds(&[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert!(!b.comparable);
        assert_eq!(b.upper, f64::INFINITY);
    }

    #[test]
    fn errors() {
        let c = orthant2();
        assert_eq!(
            c.order_bounds(&[1.0], &[1.0, 1.0]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            c.order_bounds(&[1.0, 1.0], &[0.0, 0.0]),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(
            c.hilbert_distance(&[-1.0, 1.0], &[1.0, 1.0]),
            Err(Error::NotInCone)
        );
        assert_eq!(
            c.funk_weak_metric(&[1.0, 0.0], &[1.0, 1.0]),
            Err(Error::NotInterior)
        );
    }

    #[test]
    fn distance_examples() {
        let c = orthant2();
        let d = c.hilbert_distance(&[1.0, 2.0], &[2.0, 1.0]).unwrap();
        assert!((d - 4f64.ln()).abs() < 1e-15);
        assert_eq!(c.hilbert_distance(&[1.0, 2.0], &[3.0, 6.0]).unwrap(), 0.0);
        assert_eq!(
            c.hilbert_distance(&[1.0, 0.0], &[1.0, 1.0]).unwrap(),
            f64::INFINITY
        );

        let t = c.thompson_distance(&[1.0, 2.0], &[2.0, 1.0]).unwrap();
        assert!((t - 2f64.ln()).abs() < 1e-15);
        let t = c.thompson_distance(&[1.0, 2.0], &[2.0, 4.0]).unwrap();
        assert!((t - 2f64.ln()).abs() < 1e-15);
        assert_eq!(c.thompson_distance(&[1.0, 2.0], &[1.0, 2.0]).unwrap(), 0.0);

        let f = c.funk_weak_metric(&[1.0, 4.0], &[1.0, 1.0]).unwrap();
        assert!((f - 4f64.ln()).abs() < 1e-15);
        assert_eq!(c.funk_weak_metric(&[1.0, 1.0], &[1.0, 4.0]).unwrap(), 0.0);
        assert_eq!(c.funk_weak_metric(&[2.0, 3.0], &[2.0, 3.0]).unwrap(), 0.0);
    }

    #[test]
    fn zero_vector_conventions() {
        let c = orthant2();
        assert_eq!(c.hilbert_distance(&[0.0, 0.0], &[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(
            c.hilbert_distance(&[1.0, 1.0], &[0.0, 0.0]).unwrap(),
            f64::INFINITY
        );
        assert_eq!(
            c.hilbert_distance(&[0.0, 0.0], &[1.0, 1.0]).unwrap(),
            f64::INFINITY
        );
        assert_eq!(c.thompson_distance(&[0.0, 0.0], &[0.0, 0.0]).unwrap(), 0.0);
        assert!(c.same_part(&[0.0, 0.0], &[0.0, 0.0]).unwrap());
    }

    #[test]
    fn parts_of_the_orthant() {
        let c = Cone::orthant(3).unwrap();
        assert!(c.same_part(&[1.0, 0.0, 2.0], &[3.0, 0.0, 1.0]).unwrap());
        let c = orthant2();
        assert!(!c.same_part(&[1.0, 0.0], &[1.0, 1.0]).unwrap());
    }

    #[test]
    fn simplicial_matches_orthant_after_basis_change() {
        let basis = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 2.0]);
        let c = Cone::simplicial(basis.clone()).unwrap();
        let (p, q) = ([1.0, 3.0], [2.0, 0.5]);
        let x = &basis * DVector::from_column_slice(&p);
        let y = &basis * DVector::from_column_slice(&q);
        let d = c.hilbert_distance(x.as_slice(), y.as_slice()).unwrap();
        let d0 = orthant2().hilbert_distance(&p, &q).unwrap();
        assert!((d - d0).abs() < 1e-12);
        assert!(Cone::simplicial(DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 4.0])).is_err());
    }

    #[test]
    fn psd_and_lorentz_delegate_to_jordan() {
        let c = Cone::psd(2).unwrap();
        let d = c
            .hilbert_distance(&[1.0, 0.0, 0.0, 2.0], &[1.0, 0.0, 0.0, 1.0])
            .unwrap();
        assert!((d - 2f64.ln()).abs() < 1e-14);
        let l = Cone::lorentz(2).unwrap();
        let b = l.order_bounds(&[2.0, 1.0, 0.0], &[1.0, 0.0, 0.0]).unwrap();
        assert!((b.upper - 3.0).abs() < 1e-14 && (b.lower - 1.0).abs() < 1e-14);
        // distinct boundary rays of the Lorentz cone are different parts
        assert!(!l.same_part(&[1.0, 1.0, 0.0], &[1.0, 0.0, 1.0]).unwrap());
        assert_eq!(l.membership(&[1.0, 2.0, 0.0]).unwrap(), Membership::Outside);
    }

    #[test]
    fn homogenize_interval() {
        let input = PolytopeInput::Facets {
            a: DMatrix::from_row_slice(2, 1, &[-1.0, 1.0]),
            b: DVector::from_vec(vec![0.0, 1.0]),
        };
        let c = homogenize(&input).unwrap();
        let ConeKind::Polyhedral { facets, witness } = c.kind() else {
            panic!()
        };
        assert_eq!(facets.nrows(), 2);
        assert_eq!(witness.as_slice(), &[0.5, 1.0]);
        // ψ_1 = 2z and ψ_2 = 2(s - z)
        assert!((facets[(0, 0)] - 2.0).abs() < 1e-15 && facets[(0, 1)].abs() < 1e-15);
        assert!((facets[(1, 0)] + 2.0).abs() < 1e-15 && (facets[(1, 1)] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn homogenize_square_has_four_facets() {
        let verts = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
            .iter()
            .map(|v| DVector::from_column_slice(v))
            .collect();
        let c = homogenize(&PolytopeInput::Vertices(verts)).unwrap();
        assert_eq!(c.facet_count(), Some(4));
        assert_eq!(c.ambient_dim(), 3);
    }

    #[test]
    fn homogenized_simplex_is_the_orthant() {
        // standard simplex in R^2 as conv{0, e1, e2}; barycentric
        // coordinates (1 - x - y, x, y) identify the cone with R^3_+.
        let verts = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]
            .iter()
            .map(|v| DVector::from_column_slice(v))
            .collect();
        let c = homogenize(&PolytopeInput::Vertices(verts)).unwrap();
        let o = Cone::orthant(3).unwrap();
        let (p, q) = ([0.2, 0.3], [0.6, 0.1]);
        let bary = |v: [f64; 2]| [1.0 - v[0] - v[1], v[0], v[1]];
        let d = c
            .hilbert_distance(&[p[0], p[1], 1.0], &[q[0], q[1], 1.0])
            .unwrap();
        let d0 = o.hilbert_distance(&bary(p), &bary(q)).unwrap();
        assert!((d - d0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_polytopes_rejected() {
        // x ≤ 0 and x ≥ 0: a single point
        let input = PolytopeInput::Facets {
            a: DMatrix::from_row_slice(2, 1, &[1.0, -1.0]),
            b: DVector::from_vec(vec![0.0, 0.0]),
        };
        assert!(matches!(
            homogenize(&input),
            Err(Error::DegeneratePolytope(_))
        ));
        let unbounded = PolytopeInput::Facets {
            a: DMatrix::from_row_slice(1, 1, &[1.0]),
            b: DVector::from_vec(vec![1.0]),
        };
        assert!(matches!(
            homogenize(&unbounded),
            Err(Error::UnboundedPolytope(_))
        ));
    }
}

//! Orbits of order-preserving, homogeneous maps on `R^n_+`.
//!
//! Iterates are projected with a normalization functional (coordinate sum by
//! default) and compared in Hilbert's metric. Orbits may live on boundary
//! faces: the metric is then taken within the part (the sub-orthant given by
//! the support) and is `+∞` between different parts.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::birkhoff::PositiveLinearMap;
use crate::cone::{orthant_hilbert_distance, Cone};
use crate::error::{check_dim, Error, Result};
use crate::polytope;
use crate::rng;

/// Default Hilbert-metric tolerance of [`detect_periodic_orbit`].
pub const PERIOD_TOL: f64 = 1e-9;

/// One `∧`-term `min_k coef_k · x_{index_k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinTerm(pub Vec<(Rational64, usize)>);

/// `x ↦ (max_r term_{i,r}(x))_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinMaxMap {
    rows: Vec<Vec<MinTerm>>,
}

impl MinMaxMap {
    pub fn new(rows: Vec<Vec<MinTerm>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        for row in &rows {
            if row.is_empty() || row.iter().any(|t| t.0.is_empty()) {
                return Err(Error::EmptyInput);
            }
            for (coef, idx) in row.iter().flat_map(|t| &t.0) {
                if *idx >= n {
                    return Err(Error::InvalidParameter(format!(
                        "variable index {idx} out of range"
                    )));
                }
                if *coef <= Rational64::zero() {
                    return Err(Error::InvalidParameter(
                        "min-max coefficients must be positive".into(),
                    ));
                }
            }
        }
        Ok(MinMaxMap { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<MinTerm>] {
        &self.rows
    }

    pub fn apply_f64(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_nonnegative(x, self.dim())?;
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| {
                        t.0.iter()
                            .map(|(c, i)| c.to_f64().unwrap() * x[*i])
                            .fold(f64::INFINITY, f64::min)
                    })
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect())
    }

    pub fn apply_exact(&self, x: &[Rational64]) -> Result<Vec<Rational64>> {
        check_dim(self.dim(), x.len())?;
        if let Some(i) = x.iter().position(|v| *v < Rational64::zero()) {
            return Err(Error::NegativeInput(i));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| t.0.iter().map(|(c, i)| c * x[*i]).min().unwrap())
                    .max()
                    .unwrap()
            })
            .collect())
    }
}

fn check_nonnegative(x: &[f64], n: usize) -> Result<()> {
    check_dim(n, x.len())?;
    if let Some(i) = x.iter().position(|v| !(*v >= 0.0) || !v.is_finite()) {
        return Err(Error::NegativeInput(i));
    }
    Ok(())
}

/// The period-six example on `R^3_+`:
/// `f(x) = ((3x_1 ∧ x_2) ∨ (3x_2 ∧ x_3), (3x_1 ∧ x_3) ∨ (3x_3 ∧ x_2),
/// (3x_2 ∧ x_1) ∨ (3x_3 ∧ x_1))`.
pub fn minmax_example() -> MinMaxMap {
    let r = |n: i64| Rational64::from_integer(n);
    let t = |a: (i64, usize), b: (i64, usize)| MinTerm(vec![(r(a.0), a.1), (r(b.0), b.1)]);
    MinMaxMap::new(vec![
        vec![t((3, 0), (1, 1)), t((3, 1), (1, 2))],
        vec![t((3, 0), (1, 2)), t((3, 2), (1, 1))],
        vec![t((3, 1), (1, 0)), t((3, 2), (1, 0))],
    ])
    .expect("valid example map")
}

pub fn minmax_example_map(x: &[f64]) -> Result<Vec<f64>> {
    minmax_example().apply_f64(x)
}

pub type UserMap = Arc<dyn Fn(&[f64]) -> Result<Vec<f64>> + Send + Sync>;

#[derive(Clone)]
pub enum MapKind {
    PositiveMatrix(PositiveLinearMap),
    MinMax(MinMaxMap),
    Custom(UserMap),
}

impl fmt::Debug for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapKind::PositiveMatrix(a) => f.debug_tuple("PositiveMatrix").field(a).finish(),
            MapKind::MinMax(m) => f.debug_tuple("MinMax").field(m).finish(),
            MapKind::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    #[default]
    Sum,
    None,
}

#[derive(Debug, Clone)]
pub struct MapSpec {
    kind: MapKind,
    dim: usize,
    pub normalization: Normalization,
}

impl MapSpec {
    pub fn positive_matrix(a: PositiveLinearMap) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(Error::NotSquare {
                rows: a.nrows(),
                cols: a.ncols(),
            });
        }
        let dim = a.ncols();
        Self::checked(MapKind::PositiveMatrix(a), dim)
    }

    pub fn min_max(m: MinMaxMap) -> Result<Self> {
        let dim = m.dim();
        Self::checked(MapKind::MinMax(m), dim)
    }

    /// A user map; order preservation and homogeneity are the caller's
    /// responsibility.
    pub fn custom(dim: usize, f: UserMap) -> Self {
        MapSpec {
            kind: MapKind::Custom(f),
            dim,
            normalization: Normalization::Sum,
        }
    }

    fn checked(kind: MapKind, dim: usize) -> Result<Self> {
        let spec = MapSpec {
            kind,
            dim,
            normalization: Normalization::Sum,
        };
        if !spec.spot_check(32, 0)? {
            return Err(Error::HypothesisViolated(
                "map is not order-preserving and homogeneous".into(),
            ));
        }
        Ok(spec)
    }

    pub fn with_normalization(mut self, normalization: Normalization) -> Self {
        self.normalization = normalization;
        self
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The unnormalized map `f`.
    pub fn evaluate(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_nonnegative(x, self.dim)?;
        let y = match &self.kind {
            MapKind::PositiveMatrix(a) => a.apply(x)?,
            MapKind::MinMax(m) => m.apply_f64(x)?,
            MapKind::Custom(f) => f(x)?,
        };
        if y.len() != self.dim {
            return Err(Error::EvaluationFailure(format!(
                "map returned {} coordinates, expected {}",
                y.len(),
                self.dim
            )));
        }
        if y.iter().any(|v| !(*v >= 0.0) || !v.is_finite()) {
            return Err(Error::EvaluationFailure("map left the orthant".into()));
        }
        Ok(y)
    }

    /// `g(x) = f(x) / φ(f(x))`.
    pub fn step(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut y = self.evaluate(x)?;
        if self.normalization == Normalization::Sum {
            let s: f64 = y.iter().sum();
            if !(s > 0.0) {
                return Err(Error::EvaluationFailure("map sent a point to zero".into()));
            }
            y.iter_mut().for_each(|v| *v /= s);
        }
        Ok(y)
    }

    /// Checks `x ≤ y ⇒ f(x) ≤ f(y)` and `f(tx) = t f(x)` on random samples.
    pub fn spot_check(&self, samples: usize, seed: u64) -> Result<bool> {
        let mut rng = rng::seeded(seed);
        for _ in 0..samples {
            let x = rng::positive_vector(&mut rng, self.dim, 2.0);
            let y: Vec<f64> = x.iter().map(|v| v * rng.random_range(1.0..3.0)).collect();
            let t = rng.random_range(0.1..10.0);
            let fx = self.evaluate(&x)?;
            let fy = self.evaluate(&y)?;
            let tx: Vec<f64> = x.iter().map(|v| v * t).collect();
            let ftx = self.evaluate(&tx)?;
            for i in 0..self.dim {
                let scale = fx[i].abs().max(fy[i].abs()).max(1e-300);
                if fx[i] > fy[i] + 1e-12 * scale {
                    return Ok(false);
                }
                if (ftx[i] - t * fx[i]).abs() > 1e-12 * (t * fx[i]).abs().max(1e-300) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitRecord {
    pub iterates: Vec<Vec<f64>>,
    /// `d(x_{k+1}, x_k)`; `+∞` when the iterates lie in different parts.
    pub residuals: Vec<f64>,
    pub detected_period: Option<usize>,
    /// Smallest coordinate of the final iterate relative to its sum.
    pub boundary_proximity: f64,
    pub converged_to_boundary: bool,
}

/// Records `x_0, g(x_0), .., g^K(x_0)`.
pub fn iterate_orbit(map: &MapSpec, x0: &[f64], k: usize) -> Result<OrbitRecord> {
    if k == 0 {
        return Err(Error::InvalidParameter("K must be at least 1".into()));
    }
    check_nonnegative(x0, map.dim)?;
    if x0.iter().all(|&v| v == 0.0) {
        return Err(Error::ZeroDenominator);
    }
    let mut x = x0.to_vec();
    if map.normalization == Normalization::Sum {
        let s: f64 = x.iter().sum();
        x.iter_mut().for_each(|v| *v /= s);
    }
    let mut iterates = Vec::with_capacity(k + 1);
    let mut residuals = Vec::with_capacity(k);
    iterates.push(x.clone());
    for _ in 0..k {
        let y = map.step(&x)?;
        residuals.push(orthant_hilbert_distance(&y, &x));
        iterates.push(y.clone());
        x = y;
    }
    let boundary_proximity = relative_min(&x);
    let mut rec = OrbitRecord {
        iterates,
        residuals,
        detected_period: None,
        boundary_proximity,
        converged_to_boundary: boundary_proximity < 1e-9,
    };
    rec.detected_period = detect_periodic_orbit(&rec, PERIOD_TOL);
    Ok(rec)
}

fn relative_min(x: &[f64]) -> f64 {
    let s: f64 = x.iter().sum();
    x.iter().fold(f64::INFINITY, |m, &v| m.min(v)) / s
}

/// Smallest `p ≥ 1` with `d(x_{k+p}, x_k) < tol` for each of the last `3p`
/// admissible `k`.
pub fn detect_periodic_orbit(rec: &OrbitRecord, tol: f64) -> Option<usize> {
    let len = rec.iterates.len();
    if len < 2 {
        return None;
    }
    let last = len - 1;
    (1..).take_while(|p| 4 * p <= len).find(|&p| {
        (last + 1 - 4 * p..=last - p)
            .all(|k| orthant_hilbert_distance(&rec.iterates[k + p], &rec.iterates[k]) < tol)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodBoundKind {
    /// Periodic points of sup-norm isometries of `R^n`.
    SupNormBall(u64),
    /// Hilbert geometry of a polytope with `m` facets.
    PolytopalHilbert(u64),
    /// Order-preserving homogeneous maps on a polyhedral cone with `m` facets.
    PolyhedralConeOrbit(u64),
    /// Order-preserving homogeneous maps on an `m`-dimensional simplicial
    /// cone with an eigenvector in the interior.
    SimplicialEigen(u64),
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn binomial(n: u64, k: u64) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn period_bound(kind: PeriodBoundKind) -> Result<BigUint> {
    let arg = match kind {
        PeriodBoundKind::SupNormBall(n)
        | PeriodBoundKind::PolytopalHilbert(n)
        | PeriodBoundKind::PolyhedralConeOrbit(n)
        | PeriodBoundKind::SimplicialEigen(n) => n,
    };
    if arg == 0 {
        return Err(Error::ArgumentTooSmall(0));
    }
    let sup_ball = |n: u64| {
        (0..=n)
            .map(|k| (BigUint::one() << k) * binomial(n, k))
            .max()
            .unwrap()
    };
    Ok(match kind {
        PeriodBoundKind::SupNormBall(n) => sup_ball(n),
        PeriodBoundKind::PolytopalHilbert(m) => {
            if m < 2 {
                return Err(Error::ArgumentTooSmall(m as usize));
            }
            sup_ball(m * (m - 1) / 2)
        }
        PeriodBoundKind::PolyhedralConeOrbit(m) => {
            factorial(m) / (factorial(m / 3) * factorial((m + 1) / 3) * factorial(m.div_ceil(3)))
        }
        PeriodBoundKind::SimplicialEigen(m) => binomial(m, m / 2),
    })
}

/// `(x|y)_p = (d(x,p) + d(y,p) − d(x,y)) / 2` for any distance function.
pub fn gromov_product<D>(x: &[f64], y: &[f64], p: &[f64], dist: D) -> Result<f64>
where
    D: Fn(&[f64], &[f64]) -> Result<f64>,
{
    Ok(0.5 * (dist(x, p)? + dist(y, p)? - dist(x, y)?))
}

/// [`gromov_product`] for Hilbert's metric on the interior of a cone.
pub fn cone_gromov_product(cone: &Cone, x: &[f64], y: &[f64], p: &[f64]) -> Result<f64> {
    for v in [x, y, p] {
        if !cone.is_interior(v)? {
            return Err(Error::NotInterior);
        }
    }
    gromov_product(x, y, p, |a, b| cone.hilbert_distance(a, b))
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct OmegaLimitReport {
    pub iterations: usize,
    /// Representatives of the tail iterates, clustered in `ℓ_1` after
    /// normalizing to unit sum.
    pub clusters: Vec<Vec<f64>>,
    /// Smallest normalized coordinate over the tail; a boundary-distance proxy.
    pub min_facet_value: Option<f64>,
    /// Affine dimension of the cluster representatives.
    pub hull_dimension: usize,
}

/// Diagnostic summary of the last quarter of an orbit of length `K`.
pub fn omega_limit_estimate(map: &MapSpec, x0: &[f64], k: usize) -> Result<OmegaLimitReport> {
    if k == 0 {
        return Ok(OmegaLimitReport::default());
    }
    let rec = iterate_orbit(map, x0, k)?;
    let tail_len = k.div_ceil(4);
    let tail = &rec.iterates[rec.iterates.len() - tail_len..];
    let mut clusters: Vec<Vec<f64>> = Vec::new();
    let mut min_facet = f64::INFINITY;
    for x in tail {
        let s: f64 = x.iter().sum();
        let u: Vec<f64> = x.iter().map(|v| v / s).collect();
        min_facet = min_facet.min(u.iter().fold(f64::INFINITY, |m, &v| m.min(v)));
        let close = clusters
            .iter()
            .any(|c| c.iter().zip(&u).map(|(a, b)| (a - b).abs()).sum::<f64>() < 1e-6);
        if !close {
            clusters.push(u);
        }
    }
    let hull_dimension = if clusters.len() < 2 {
        0
    } else {
        let base = &clusters[0];
        let diffs = nalgebra::DMatrix::from_fn(clusters.len() - 1, base.len(), |r, c| {
            clusters[r + 1][c] - base[c]
        });
        polytope::rank(&diffs)
    };
    Ok(OmegaLimitReport {
        iterations: k,
        clusters,
        min_facet_value: Some(min_facet),
        hull_dimension,
    })
}

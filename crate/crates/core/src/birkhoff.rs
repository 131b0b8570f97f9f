//! Birkhoff contraction for nonnegative matrices acting on the orthant.
//!
//! A linear map `A` with `A(R^n_+) ⊆ R^m_+` contracts Hilbert's metric by the
//! factor `κ(A) = tanh(Δ(A)/4)`, where `Δ(A)` is the projective diameter of
//! the image. For strictly positive square `A` this turns power iteration
//! into a contraction with an a-priori rate, which [`power_iteration`] uses
//! as a stopping certificate.

use nalgebra::{DMatrix, DVector};
use rand::Rng;

use crate::cone::orthant_hilbert_distance;
use crate::error::{check_dim, Error, Result};
use crate::rng;

/// Slack allowed when comparing observed contraction against `κ`.
pub const RATE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PositiveLinearMap {
    entries: DMatrix<f64>,
    strictly_positive: bool,
}

impl PositiveLinearMap {
    pub fn new(entries: DMatrix<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        for ((row, col), v) in entries.row_iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .copied()
                .enumerate()
                .map(move |(c, v)| ((r, c), v))
                .collect::<Vec<_>>()
        }) {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(Error::NegativeEntry { row, col });
            }
        }
        let strictly_positive = entries.iter().all(|&v| v > 0.0);
        Ok(PositiveLinearMap {
            entries,
            strictly_positive,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().ok_or(Error::EmptyInput)?.len();
        for r in rows {
            check_dim(n, r.len())?;
        }
        Self::new(DMatrix::from_fn(m, n, |i, j| rows[i][j]))
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.strictly_positive
    }

    pub fn nrows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_dim(self.ncols(), x.len())?;
        let y = &self.entries * DVector::from_column_slice(x);
        Ok(y.as_slice().to_vec())
    }

    fn column(&self, j: usize) -> Vec<f64> {
        self.entries.column(j).iter().copied().collect()
    }
}

/// `Δ(A) = max_{i,j} d(Ae_i, Ae_j)` over the nonzero columns. `+∞` when two
/// columns lie in different parts of the orthant.
pub fn projective_diameter(a: &PositiveLinearMap) -> f64 {
    diameter_pair(a).0
}

/// The column pair realizing [`projective_diameter`].
pub fn diameter_pair(a: &PositiveLinearMap) -> (f64, usize, usize) {
    let cols: Vec<(usize, Vec<f64>)> = (0..a.ncols())
        .map(|j| (j, a.column(j)))
        .filter(|(_, c)| c.iter().any(|&v| v > 0.0))
        .collect();
    let mut best = (0.0, 0, 0);
    for (p, (i, ci)) in cols.iter().enumerate() {
        for (j, cj) in &cols[p + 1..] {
            let d = orthant_hilbert_distance(ci, cj);
            if d > best.0 {
                best = (d, *i, *j);
            }
        }
    }
    best
}

/// `log max_{i,j,p,q} (a_pi a_qj)/(a_pj a_qi)` for strictly positive `A`.
pub fn projective_diameter_cross_ratio(a: &PositiveLinearMap) -> Result<f64> {
    if !a.is_strictly_positive() {
        return Err(Error::HypothesisViolated(
            "cross-ratio diameter formula needs a strictly positive matrix".into(),
        ));
    }
    let e = a.entries();
    let (m, n) = e.shape();
    let mut best = 1.0_f64;
    for i in 0..n {
        for j in 0..n {
            for p in 0..m {
                for q in 0..m {
                    let r = (e[(p, i)] * e[(q, j)]) / (e[(p, j)] * e[(q, i)]);
                    best = best.max(r);
                }
            }
        }
    }
    Ok(best.ln())
}

/// `κ = tanh(Δ/4)` with `tanh(∞) = 1`.
pub fn contraction_ratio(delta: f64) -> Result<f64> {
    if !(delta >= 0.0) {
        return Err(Error::NegativeDiameter(delta));
    }
    if delta == f64::INFINITY {
        return Ok(1.0);
    }
    Ok((delta / 4.0).tanh())
}

/// Pairs closer than this are skipped: rounding in `log(M/m)` would dominate
/// the ratio.
const MIN_PAIR_DISTANCE: f64 = 1e-6;

fn pair_ratio(a: &PositiveLinearMap, x: &[f64], y: &[f64]) -> Option<f64> {
    let d = orthant_hilbert_distance(x, y);
    if !(d > MIN_PAIR_DISTANCE) || !d.is_finite() {
        return None;
    }
    let ax = a.apply(x).ok()?;
    let ay = a.apply(y).ok()?;
    let da = orthant_hilbert_distance(&ax, &ay);
    da.is_finite().then_some(da / d)
}

/// Largest observed `d(Ax, Ay) / d(x, y)` over `n_samples` random interior
/// pairs. Half of the pairs are independent, half are local perturbations.
pub fn empirical_contraction(a: &PositiveLinearMap, n_samples: usize, seed: u64) -> Result<f64> {
    if n_samples == 0 {
        return Err(Error::InvalidParameter(
            "n_samples must be at least 1".into(),
        ));
    }
    let mut rng = rng::seeded(seed);
    let n = a.ncols();
    let mut best = 0.0_f64;
    for k in 0..n_samples {
        let spread = rng.random_range(0.05..4.0);
        let x = rng::positive_vector(&mut rng, n, spread);
        let y = if k % 2 == 0 {
            rng::positive_vector(&mut rng, n, spread)
        } else {
            let eps = 10f64.powf(rng.random_range(-4.0..0.0));
            x.iter()
                .map(|v| v * rng.random_range(-eps..=eps).exp())
                .collect()
        };
        if let Some(r) = pair_ratio(a, &x, &y) {
            best = best.max(r);
        }
    }
    Ok(best)
}

/// Contraction estimate from pairs of nearby points on the 2-face spanned by
/// the extreme column pair. These pairs approach the supremum `κ(A)`.
pub fn directed_contraction(a: &PositiveLinearMap, n_samples: usize, seed: u64) -> Result<f64> {
    if n_samples == 0 {
        return Err(Error::InvalidParameter(
            "n_samples must be at least 1".into(),
        ));
    }
    let (delta, i, j) = diameter_pair(a);
    if delta == 0.0 || i == j {
        return Ok(0.0);
    }
    let mut rng = rng::seeded(seed);
    let n = a.ncols();
    let span = delta.min(50.0) + 10.0;
    let mut best = 0.0_f64;
    for k in 0..n_samples {
        let t = if n_samples == 1 {
            0.5
        } else {
            k as f64 / (n_samples - 1) as f64
        };
        let u = -span + 2.0 * span * t + rng.random_range(-1e-3..1e-3);
        let h = 10f64.powf(rng.random_range(-4.0..-2.0));
        let mut x = vec![0.0; n];
        let mut y = vec![0.0; n];
        x[i] = 1.0;
        y[i] = 1.0;
        x[j] = u.exp();
        y[j] = (u + h).exp();
        if let Some(r) = pair_ratio(a, &x, &y) {
            best = best.max(r);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContractionCertificate {
    pub delta: f64,
    pub kappa: f64,
    pub iterations: usize,
    pub final_residual: f64,
    /// Every step satisfied `r_{k+1} ≤ κ r_k + RATE_SLACK`.
    pub rate_bound_satisfied: bool,
    /// `κ < 1`, so the stopping rule bounds `d(x_k, v) < tol`.
    pub certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerIterationOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PowerIterationOptions {
    fn default() -> Self {
        PowerIterationOptions {
            tol: 1e-12,
            max_iter: 100_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PowerIteration {
    /// Eigenvector normalized to unit coordinate sum.
    pub eigenvector: Vec<f64>,
    pub eigenvalue: f64,
    /// `r_k = d(x_{k+1}, x_k)` in Hilbert's metric.
    pub residuals: Vec<f64>,
    pub certificate: ContractionCertificate,
}

/// Hilbert-metric power iteration `x ← Ax / Σ(Ax)` for square nonnegative
/// `A` started at an interior point (the uniform vector by default).
///
/// With `κ = tanh(Δ(A)/4) < 1` iteration stops once `r_k < tol·(1 − κ)`,
/// which guarantees `d(x_k, v) < tol` for the Perron vector `v`. With
/// `κ = 1` it stops at `r_k < tol` and the result is flagged uncertified.
pub fn power_iteration(
    a: &PositiveLinearMap,
    x0: Option<&[f64]>,
    opts: PowerIterationOptions,
) -> Result<PowerIteration> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let n = a.ncols();
    let mut x = match x0 {
        Some(x0) => {
            check_dim(n, x0.len())?;
            if x0.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
                return Err(Error::NotInterior);
            }
            x0.to_vec()
        }
        None => vec![1.0; n],
    };
    normalize_sum(&mut x);

    let delta = projective_diameter(a);
    let kappa = contraction_ratio(delta)?;
    let certified = kappa < 1.0;
    let threshold = if certified {
        opts.tol * (1.0 - kappa)
    } else {
        opts.tol
    };

    let mut residuals = Vec::new();
    for _ in 0..opts.max_iter {
        let mut y = a.apply(&x)?;
        let s: f64 = y.iter().sum();
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::EvaluationFailure("iterate left the cone".into()));
        }
        y.iter_mut().for_each(|v| *v /= s);
        let r = orthant_hilbert_distance(&y, &x);
        residuals.push(r);
        x = y;
        if r < threshold {
            let eigenvalue = a.apply(&x)?.iter().sum::<f64>();
            let rate_bound_satisfied = residuals
                .windows(2)
                .all(|w| w[1] <= kappa * w[0] + RATE_SLACK);
            return Ok(PowerIteration {
                eigenvector: x,
                eigenvalue,
                certificate: ContractionCertificate {
                    delta,
                    kappa,
                    iterations: residuals.len(),
                    final_residual: r,
                    rate_bound_satisfied,
                    certified,
                },
                residuals,
            });
        }
    }
    Err(Error::NoConvergence(opts.max_iter))
}

fn normalize_sum(x: &mut [f64]) {
    let s: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= s);
}

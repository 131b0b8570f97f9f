//! Perron–Frobenius operators of finite iterated function systems acting on
//! the Hölder cones
//!
//! `K(M, λ) = { f : f(s) ≤ f(t) e^{M ρ(s,t)^λ} for all s, t }`
//!
//! over a finite metric space. The operator is
//! `(Lf)(t) = Σ_i b_i(t) f(θ_i(t))`. With `Lip(θ_i) ≤ c < 1` and weights in
//! `K(M_0, λ)`, `L` maps `K(M_2, λ)` into `K(M_0 + c^λ M_2, λ)`, which has
//! finite diameter in `K(M_2, λ)` and so gives a Birkhoff contraction.
//!
//! Two point sets are provided. [`DiscreteSpace::uniform_grid`] carries the
//! Euclidean distance, under which snapped contracting maps generally lose
//! their contraction. [`DiscreteSpace::dyadic`] places points at dyadic cell
//! midpoints with the ultrametric `ρ = 2^{-(common binary prefix length)}`;
//! the doubling maps snap to index maps with Lipschitz constant exactly ½
//! there, and `|s − t| ≤ ρ(s, t)` so Hölder functions on `[0, 1]` restrict
//! into the cone.

use nalgebra::DMatrix;
use rand::Rng;

use crate::error::{check_dim, Error, Result};

/// Relative tolerance of the pairwise cone inequalities.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    Grid,
    Dyadic { depth: u32 },
    Custom,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSpace {
    points: Vec<f64>,
    rho: DMatrix<f64>,
    diameter: f64,
    kind: SpaceKind,
}

impl DiscreteSpace {
    /// `n` equally spaced points of `[0, 1]` with `ρ(s, t) = |s − t|`.
    pub fn uniform_grid(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(
                "grid needs at least two points".into(),
            ));
        }
        let points: Vec<f64> = (0..n).map(|j| j as f64 / (n - 1) as f64).collect();
        let rho = DMatrix::from_fn(n, n, |i, j| (points[i] - points[j]).abs());
        Ok(DiscreteSpace {
            points,
            rho,
            diameter: 1.0,
            kind: SpaceKind::Grid,
        })
    }

    /// `2^depth` midpoints `(j + ½) / 2^depth` with the dyadic ultrametric.
    pub fn dyadic(depth: u32) -> Result<Self> {
        if !(1..=12).contains(&depth) {
            return Err(Error::InvalidParameter(format!(
                "dyadic depth must be in 1..=12, got {depth}"
            )));
        }
        let n = 1usize << depth;
        let points: Vec<f64> = (0..n).map(|j| (j as f64 + 0.5) / n as f64).collect();
        let rho = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                0.0
            } else {
                let prefix = ((i ^ j) as u32).leading_zeros() - (u32::BITS - depth);
                0.5f64.powi(prefix as i32)
            }
        });
        Ok(DiscreteSpace {
            points,
            rho,
            diameter: 1.0,
            kind: SpaceKind::Dyadic { depth },
        })
    }

    /// Arbitrary finite metric space given by positions (used for snapping
    /// and weight evaluation) and a distance matrix.
    pub fn from_matrix(points: Vec<f64>, rho: DMatrix<f64>) -> Result<Self> {
        let n = points.len();
        if n < 2 {
            return Err(Error::InvalidParameter(
                "space needs at least two points".into(),
            ));
        }
        if rho.nrows() != n || rho.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rho.nrows().max(rho.ncols()),
            });
        }
        let diameter = rho.max();
        if !(diameter > 0.0) || !diameter.is_finite() {
            return Err(Error::InvalidParameter(
                "diameter must be positive and finite".into(),
            ));
        }
        let tol = 1e-12 * diameter;
        for i in 0..n {
            if rho[(i, i)] != 0.0 {
                return Err(Error::InvalidParameter(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                if i != j && !(rho[(i, j)] > 0.0) {
                    return Err(Error::InvalidParameter(format!(
                        "ρ({i}, {j}) is not positive"
                    )));
                }
                if (rho[(i, j)] - rho[(j, i)]).abs() > tol {
                    return Err(Error::InvalidParameter(format!(
                        "ρ not symmetric at ({i}, {j})"
                    )));
                }
                for k in 0..n {
                    if rho[(i, k)] > rho[(i, j)] + rho[(j, k)] + tol {
                        return Err(Error::InvalidParameter(format!(
                            "triangle inequality fails for ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(DiscreteSpace {
            points,
            rho,
            diameter,
            kind: SpaceKind::Custom,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn rho(&self, i: usize, j: usize) -> f64 {
        self.rho[(i, j)]
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    /// Index of the nearest point; ties go to the lower index.
    pub fn snap(&self, s: f64) -> usize {
        let mut best = 0;
        for (j, p) in self.points.iter().enumerate() {
            if (p - s).abs() < (self.points[best] - s).abs() {
                best = j;
            }
        }
        best
    }

    /// `e^{M ρ(s,t)^λ}` as a dense table.
    fn envelope(&self, p: HolderConeParams) -> DMatrix<f64> {
        self.rho.map(|r| {
            if r == 0.0 {
                1.0
            } else {
                (p.m * r.powf(p.lambda)).exp()
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HolderConeParams {
    pub m: f64,
    pub lambda: f64,
}

impl HolderConeParams {
    pub fn new(m: f64, lambda: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "M must be positive, got {m}"
            )));
        }
        if !(lambda > 0.0 && lambda <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "λ must lie in (0, 1], got {lambda}"
            )));
        }
        Ok(HolderConeParams { m, lambda })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub member: bool,
    /// Pair `(s, t)` with the largest violation of `f(s) ≤ f(t) e^{Mρ^λ}`.
    pub worst_pair: Option<(usize, usize)>,
    pub worst_excess: f64,
}

pub fn cone_membership(
    space: &DiscreteSpace,
    f: &[f64],
    p: HolderConeParams,
) -> Result<MembershipReport> {
    check_dim(space.len(), f.len())?;
    if f.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter(
            "function has non-finite values".into(),
        ));
    }
    let env = space.envelope(p);
    let mut worst: Option<(usize, usize)> = None;
    let mut worst_excess = 0.0;
    let n = f.len();
    for s in 0..n {
        for t in 0..n {
            let rhs = f[t] * env[(s, t)];
            let excess = f[s] - rhs;
            let scale = f[s].abs().max(rhs.abs());
            if excess > MEMBERSHIP_TOL * scale && excess > worst_excess {
                worst_excess = excess;
                worst = Some((s, t));
            }
        }
    }
    Ok(MembershipReport {
        member: worst.is_none(),
        worst_pair: worst,
        worst_excess,
    })
}

/// `(M(g/f), m(g/f))` in `K(M, λ)`, with `f` assumed to be a member.
///
/// `βf − g ∈ K` is the family of pairwise constraints
/// `β (f(s) − f(t)E) ≤ g(s) − g(t)E`, `E = e^{Mρ^λ}`, so both bounds are
/// closed-form extrema over pairs.
pub fn order_bounds(
    space: &DiscreteSpace,
    g: &[f64],
    f: &[f64],
    p: HolderConeParams,
) -> Result<(f64, f64)> {
    check_dim(space.len(), f.len())?;
    check_dim(space.len(), g.len())?;
    if f.iter().all(|&v| v == 0.0) {
        return Err(Error::ZeroDenominator);
    }
    let env = space.envelope(p);
    let n = f.len();
    let mut upper = 0.0_f64;
    let mut lower = f64::INFINITY;
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let e = env[(s, t)];
            let a = f[s] - f[t] * e;
            let b = g[s] - g[t] * e;
            let a_scale = f[s].abs().max(f[t] * e);
            if a < -MEMBERSHIP_TOL * a_scale {
                upper = upper.max(b / a);
                lower = lower.min(b / a);
            } else {
                let b_scale = g[s].abs().max((g[t] * e).abs());
                if b > MEMBERSHIP_TOL * b_scale {
                    upper = f64::INFINITY;
                }
                if b < -MEMBERSHIP_TOL * b_scale {
                    lower = 0.0;
                }
            }
        }
    }
    Ok((upper, lower.max(0.0)))
}

/// Hilbert's metric `d_M(f, g) = log(M(g/f) / m(g/f))` on `K(M, λ)`.
pub fn cone_distance(
    space: &DiscreteSpace,
    f: &[f64],
    g: &[f64],
    p: HolderConeParams,
) -> Result<f64> {
    let f_zero = f.iter().all(|&v| v == 0.0);
    let g_zero = g.iter().all(|&v| v == 0.0);
    match (f_zero, g_zero) {
        (true, true) => return Ok(0.0),
        (true, false) | (false, true) => return Ok(f64::INFINITY),
        _ => {}
    }
    let (upper, lower) = order_bounds(space, g, f, p)?;
    if !upper.is_finite() || lower <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok((upper / lower).ln().max(0.0))
}

/// Affine map `θ(s) = a s + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum WeightSpec {
    /// `b(s) = c0 + c1 s`.
    Affine([f64; 2]),
    Table(Vec<f64>),
}

impl WeightSpec {
    fn tabulate(&self, space: &DiscreteSpace) -> Result<Vec<f64>> {
        match self {
            WeightSpec::Affine([c0, c1]) => Ok(space.points.iter().map(|s| c0 + c1 * s).collect()),
            WeightSpec::Table(v) => {
                check_dim(space.len(), v.len())?;
                Ok(v.clone())
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct IfsSpec {
    space: DiscreteSpace,
    maps: Vec<AffineMap>,
    index_maps: Vec<Vec<usize>>,
    lipschitz: Vec<f64>,
    c: f64,
    weights: Vec<Vec<f64>>,
    m0: f64,
    lambda: f64,
}

impl IfsSpec {
    /// Snaps the maps to the space and validates the contraction and
    /// weight hypotheses. `c` defaults to the largest realized Lipschitz
    /// constant; an explicit `c` must dominate it.
    pub fn new(
        space: DiscreteSpace,
        maps: Vec<AffineMap>,
        weights: Vec<WeightSpec>,
        m0: f64,
        lambda: f64,
        c: Option<f64>,
    ) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_dim(maps.len(), weights.len())?;
        let params = HolderConeParams::new(m0, lambda)?;
        let index_maps: Vec<Vec<usize>> = maps
            .iter()
            .map(|m| {
                space
                    .points
                    .iter()
                    .map(|&s| space.snap(m.a * s + m.b))
                    .collect()
            })
            .collect();
        let lipschitz: Vec<f64> = index_maps
            .iter()
            .map(|im| realized_lipschitz(&space, im))
            .collect();
        let realized = lipschitz.iter().fold(0.0_f64, |m, &v| m.max(v));
        let c = match c {
            Some(c) if c + 1e-12 < realized => {
                return Err(Error::HypothesisViolated(format!(
                    "stated Lipschitz bound {c} is below the realized {realized}"
                )))
            }
            Some(c) => c,
            None => realized,
        };
        if !(c < 1.0) {
            return Err(Error::HypothesisViolated(format!(
                "maps are not contracting on this space: Lipschitz constant {c}"
            )));
        }
        let weights: Vec<Vec<f64>> = weights
            .iter()
            .map(|w| w.tabulate(&space))
            .collect::<Result<_>>()?;
        for (i, w) in weights.iter().enumerate() {
            if w.iter().any(|v| !(*v >= 0.0)) {
                return Err(Error::HypothesisViolated(format!(
                    "weight {i} takes negative values"
                )));
            }
            if !cone_membership(&space, w, params)?.member {
                return Err(Error::HypothesisViolated(format!(
                    "weight {i} is not in K(M0, λ)"
                )));
            }
        }
        Ok(IfsSpec {
            space,
            maps,
            index_maps,
            lipschitz,
            c,
            weights,
            m0,
            lambda,
        })
    }

    pub fn space(&self) -> &DiscreteSpace {
        &self.space
    }

    pub fn maps(&self) -> &[AffineMap] {
        &self.maps
    }

    pub fn index_maps(&self) -> &[Vec<usize>] {
        &self.index_maps
    }

    pub fn lipschitz(&self) -> &[f64] {
        &self.lipschitz
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn weights(&self) -> &[Vec<f64>] {
        &self.weights
    }

    pub fn m0(&self) -> f64 {
        self.m0
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn params(&self, m: f64) -> Result<HolderConeParams> {
        HolderConeParams::new(m, self.lambda)
    }

    /// Dense `N × N` matrix of `L`.
    pub fn operator_matrix(&self) -> DMatrix<f64> {
        let n = self.space.len();
        let mut l = DMatrix::zeros(n, n);
        for (im, w) in self.index_maps.iter().zip(&self.weights) {
            for t in 0..n {
                l[(t, im[t])] += w[t];
            }
        }
        l
    }
}

fn realized_lipschitz(space: &DiscreteSpace, im: &[usize]) -> f64 {
    let n = space.len();
    let mut best = 0.0_f64;
    for s in 0..n {
        for t in s + 1..n {
            best = best.max(space.rho(im[s], im[t]) / space.rho(s, t));
        }
    }
    best
}

pub fn apply_operator(spec: &IfsSpec, f: &[f64]) -> Result<Vec<f64>> {
    check_dim(spec.space.len(), f.len())?;
    let n = f.len();
    let mut out = vec![0.0; n];
    for (im, w) in spec.index_maps.iter().zip(&spec.weights) {
        for t in 0..n {
            out[t] += w[t] * f[im[t]];
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContractionConstants {
    pub m1: f64,
    pub alpha: f64,
    pub beta: f64,
    /// `log(β/α)`, the diameter of `K(M_1, λ)` in `K(M_2, λ)`.
    pub d2_diameter_bound: f64,
    /// `tanh(d2_diameter_bound / 4)`.
    pub kappa: f64,
}

pub fn contraction_constants(
    m0: f64,
    m2: f64,
    lambda: f64,
    c: f64,
    delta: f64,
) -> Result<ContractionConstants> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "c must lie in (0, 1), got {c}"
        )));
    }
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "λ must lie in (0, 1], got {lambda}"
        )));
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "Δ must be positive, got {delta}"
        )));
    }
    if !(m0 >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "M0 must be nonnegative, got {m0}"
        )));
    }
    let cl = c.powf(lambda);
    let threshold = m0 / (1.0 - cl);
    if !(m2 > threshold) {
        return Err(Error::HypothesisViolated(format!(
            "M2 = {m2} must exceed M0/(1 − c^λ) = {threshold}"
        )));
    }
    let m1 = m0 + cl * m2;
    let dl = delta.powf(lambda);
    let ratio = (m2 - m1) / (m2 + m1);
    let alpha = ratio * (-m1 * dl).exp();
    let beta = (-m1 * dl).exp().recip() / ratio;
    let d2_diameter_bound = 2.0 * ((m2 + m1) / (m2 - m1)).ln() + 2.0 * m1 * dl;
    Ok(ContractionConstants {
        m1,
        alpha,
        beta,
        d2_diameter_bound,
        kappa: (d2_diameter_bound / 4.0).tanh(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            tol: 1e-10,
            max_iter: 10_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Eigenfunction {
    /// Normalized to sup-norm one.
    pub v: Vec<f64>,
    /// `‖Lv‖_sup`.
    pub eigenvalue: f64,
    /// Hilbert distances in `K(M_2, λ)` between successive iterates.
    pub residual_history: Vec<f64>,
    /// `‖Lv − eigenvalue·v‖_sup`.
    pub sup_residual: f64,
    pub constants: ContractionConstants,
}

/// Power iteration `g ← Lg / ‖Lg‖_sup` from `g0` (constant one by default)
/// until `‖Lv − ‖Lv‖ v‖_sup ≤ tol`.
pub fn leading_eigenfunction(
    spec: &IfsSpec,
    m2: f64,
    g0: Option<&[f64]>,
    opts: EigenOptions,
) -> Result<Eigenfunction> {
    let constants = contraction_constants(spec.m0, m2, spec.lambda, spec.c, spec.space.diameter)?;
    if spec.weights.iter().all(|w| w.iter().all(|&v| v == 0.0)) {
        return Err(Error::HypothesisViolated(
            "all weights vanish identically".into(),
        ));
    }
    let p2 = spec.params(m2)?;
    let n = spec.space.len();
    let mut v = match g0 {
        Some(g) => {
            check_dim(n, g.len())?;
            if g.iter().all(|&x| x == 0.0) || !cone_membership(&spec.space, g, p2)?.member {
                return Err(Error::HypothesisViolated(
                    "start vector is not in K(M2, λ) \\ {0}".into(),
                ));
            }
            g.to_vec()
        }
        None => vec![1.0; n],
    };
    scale_sup(&mut v);
    let mut residual_history = Vec::new();
    for _ in 0..opts.max_iter {
        let w = apply_operator(spec, &v)?;
        let eigenvalue = sup_norm(&w);
        if !(eigenvalue > 0.0) {
            return Err(Error::EvaluationFailure("iterate vanished".into()));
        }
        let sup_residual = w
            .iter()
            .zip(&v)
            .fold(0.0_f64, |m, (a, b)| m.max((a - eigenvalue * b).abs()));
        if sup_residual <= opts.tol {
            return Ok(Eigenfunction {
                v,
                eigenvalue,
                residual_history,
                sup_residual,
                constants,
            });
        }
        let next: Vec<f64> = w.iter().map(|x| x / eigenvalue).collect();
        residual_history.push(cone_distance(&spec.space, &v, &next, p2)?);
        v = next;
    }
    Err(Error::NoConvergence(opts.max_iter))
}

fn sup_norm(f: &[f64]) -> f64 {
    f.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
}

fn scale_sup(f: &mut [f64]) {
    let s = sup_norm(f);
    if s > 0.0 {
        f.iter_mut().for_each(|v| *v /= s);
    }
}

/// A random element `e^g` of `K(m, λ)` with sup-norm one: `g` is a random
/// walk over the points, rescaled so that `|g(s) − g(t)| ≤ m ρ(s,t)^λ`.
pub fn random_cone_element<R: Rng>(
    rng: &mut R,
    space: &DiscreteSpace,
    p: HolderConeParams,
) -> Vec<f64> {
    let n = space.len();
    let mut g: Vec<f64> = Vec::with_capacity(n);
    let mut acc = 0.0_f64;
    for _ in 0..n {
        acc += rng.random_range(-1.0..=1.0);
        g.push(acc);
    }
    let mut worst = 0.0_f64;
    for s in 0..n {
        for t in s + 1..n {
            worst = worst.max((g[s] - g[t]).abs() / space.rho(s, t).powf(p.lambda));
        }
    }
    let scale = if worst > 0.0 {
        p.m / worst * rng.random_range(0.2..0.999)
    } else {
        0.0
    };
    let mut f: Vec<f64> = g.iter().map(|v| (v * scale).exp()).collect();
    scale_sup(&mut f);
    f
}

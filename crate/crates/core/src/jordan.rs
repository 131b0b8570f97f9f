//! Euclidean Jordan algebras of the two concrete symmetric cones: symmetric
//! matrices (cone of positive semidefinite matrices) and the spin factor
//! (Lorentz cone).
//!
//! Hilbert and Thompson distances on the interior of a symmetric cone are
//! read off from the extreme eigenvalues of `P(y^{-1/2}) x`, where `P` is the
//! quadratic representation.

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

/// Eigenvalues closer than this (relative to the spectral scale) are merged
/// into one idempotent block.
pub const CLUSTER_TOL: f64 = 1e-9;
/// `x` is interior when `λ_min(x) > INTERIOR_TOL · λ_max(x)`.
pub const INTERIOR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    /// Real symmetric `n × n` matrices with `A∘B = (AB + BA)/2`.
    SymMatrices(usize),
    /// `R × R^n` with `(s,x)∘(t,y) = (st + ⟨x,y⟩, sy + tx)`.
    SpinFactor(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum JordanElement {
    Sym(DMatrix<f64>),
    Spin { s: f64, x: DVector<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeMetric {
    Hilbert,
    Thompson,
}

/// `x = Σ λ_i c_i` with distinct eigenvalues (ascending) and a complete
/// system of orthogonal idempotents.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub idempotents: Vec<JordanElement>,
}

impl SpectralDecomposition {
    pub fn lambda_max(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Rebuilds `Σ f(λ_i) c_i`.
    pub fn recombine(&self, f: impl Fn(f64) -> f64) -> JordanElement {
        let mut acc = self.idempotents[0].scale(0.0);
        for (lambda, c) in self.eigenvalues.iter().zip(&self.idempotents) {
            acc = acc.add_unchecked(&c.scale(f(*lambda)));
        }
        acc
    }
}

impl JordanElement {
    /// Symmetric matrix element; the input is symmetrized as `(A + Aᵀ)/2`.
    pub fn sym(m: DMatrix<f64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                got: m.ncols(),
            });
        }
        if m.is_empty() {
            return Err(Error::EmptyInput);
        }
        let t = m.transpose();
        Ok(JordanElement::Sym((m + t) * 0.5))
    }

    /// Builds a symmetric element from `n*n` row-major entries.
    pub fn sym_from_row_major(n: usize, data: &[f64]) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: data.len(),
            });
        }
        Self::sym(DMatrix::from_row_slice(n, n, data))
    }

    pub fn spin(s: f64, x: DVector<f64>) -> Self {
        JordanElement::Spin { s, x }
    }

    /// Spin-factor element from the flat layout `(s, x_1, .., x_n)`.
    pub fn spin_from_slice(data: &[f64]) -> Result<Self> {
        let (s, x) = data.split_first().ok_or(Error::EmptyInput)?;
        Ok(JordanElement::Spin {
            s: *s,
            x: DVector::from_column_slice(x),
        })
    }

    pub fn algebra(&self) -> Algebra {
        match self {
            JordanElement::Sym(m) => Algebra::SymMatrices(m.nrows()),
            JordanElement::Spin { x, .. } => Algebra::SpinFactor(x.len()),
        }
    }

    pub fn unit(algebra: Algebra) -> Self {
        match algebra {
            Algebra::SymMatrices(n) => JordanElement::Sym(DMatrix::identity(n, n)),
            Algebra::SpinFactor(n) => JordanElement::Spin {
                s: 1.0,
                x: DVector::zeros(n),
            },
        }
    }

    /// Flat coordinates: row-major matrix entries, or `(s, x)`.
    pub fn to_vec(&self) -> Vec<f64> {
        match self {
            JordanElement::Sym(m) => m.transpose().as_slice().to_vec(),
            JordanElement::Spin { s, x } => std::iter::once(*s).chain(x.iter().copied()).collect(),
        }
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra() != other.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn scale(&self, k: f64) -> Self {
        match self {
            JordanElement::Sym(m) => JordanElement::Sym(m * k),
            JordanElement::Spin { s, x } => JordanElement::Spin { s: s * k, x: x * k },
        }
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        match (self, other) {
            (JordanElement::Sym(a), JordanElement::Sym(b)) => JordanElement::Sym(a + b),
            (JordanElement::Spin { s, x }, JordanElement::Spin { s: t, x: y }) => {
                JordanElement::Spin { s: s + t, x: x + y }
            }
            _ => unreachable!("algebra checked by caller"),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(self.add_unchecked(&other.scale(-1.0)))
    }

    /// Trace inner product `⟨a|b⟩`: `tr(AB)` or `st + ⟨x,y⟩`.
    pub fn inner(&self, other: &Self) -> Result<f64> {
        self.same_algebra(other)?;
        Ok(match (self, other) {
            (JordanElement::Sym(a), JordanElement::Sym(b)) => a.component_mul(b).sum(),
            (JordanElement::Spin { s, x }, JordanElement::Spin { s: t, x: y }) => s * t + x.dot(y),
            _ => unreachable!(),
        })
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> f64 {
        self.to_vec().iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// The Jordan product.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(match (self, other) {
            (JordanElement::Sym(a), JordanElement::Sym(b)) => {
                JordanElement::Sym((a * b + b * a) * 0.5)
            }
            (JordanElement::Spin { s, x }, JordanElement::Spin { s: t, x: y }) => {
                JordanElement::Spin {
                    s: s * t + x.dot(y),
                    x: y * *s + x * *t,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn square(&self) -> Self {
        self.product(self).expect("same algebra")
    }

    pub fn spectral_decompose(&self) -> SpectralDecomposition {
        match self {
            JordanElement::Sym(m) => sym_spectral(m),
            JordanElement::Spin { s, x } => spin_spectral(*s, x),
        }
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.spectral_decompose().eigenvalues
    }

    /// Interior of the cone of squares: all eigenvalues positive (relative to
    /// the largest one).
    pub fn is_interior(&self) -> bool {
        let spec = self.spectral_decompose();
        let max = spec.lambda_max();
        max > 0.0 && spec.lambda_min() > INTERIOR_TOL * max
    }

    /// Membership in the closed cone of squares, with relative tolerance.
    pub fn in_cone(&self, rel_tol: f64) -> bool {
        let spec = self.spectral_decompose();
        let scale = spec.eigenvalues.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        spec.lambda_min() >= -rel_tol * scale
    }

    pub fn sqrt(&self) -> Result<Self> {
        let spec = self.spectral_decompose();
        if !self.in_cone(INTERIOR_TOL) {
            return Err(Error::NotInCone);
        }
        Ok(spec.recombine(|l| l.max(0.0).sqrt()))
    }

    pub fn inverse(&self) -> Result<Self> {
        let spec = self.spectral_decompose();
        let scale = spec.eigenvalues.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if scale == 0.0
            || spec
                .eigenvalues
                .iter()
                .any(|l| l.abs() <= INTERIOR_TOL * scale)
        {
            return Err(Error::NotInvertible);
        }
        Ok(spec.recombine(|l| 1.0 / l))
    }

    /// `x^t` for interior `x`.
    pub fn powf(&self, t: f64) -> Result<Self> {
        if !self.is_interior() {
            return Err(Error::NotInterior);
        }
        Ok(self.spectral_decompose().recombine(|l| l.powf(t)))
    }

    pub fn ln(&self) -> Result<Self> {
        if !self.is_interior() {
            return Err(Error::NotInterior);
        }
        Ok(self.spectral_decompose().recombine(f64::ln))
    }

    pub fn exp(&self) -> Self {
        self.spectral_decompose().recombine(f64::exp)
    }
}

fn cluster_scale(values: &[f64]) -> f64 {
    values.iter().fold(1.0_f64, |m, v| m.max(v.abs()))
}

fn sym_spectral(m: &DMatrix<f64>) -> SpectralDecomposition {
    let n = m.nrows();
    let eig = SymmetricEigen::new(m.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let tol = CLUSTER_TOL * cluster_scale(&values);

    let mut eigenvalues = Vec::new();
    let mut idempotents = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end] - values[end - 1] <= tol {
            end += 1;
        }
        let mut c = DMatrix::zeros(n, n);
        for &i in &order[start..end] {
            let v = eig.eigenvectors.column(i);
            c += v * v.transpose();
        }
        let mean = values[start..end].iter().sum::<f64>() / (end - start) as f64;
        eigenvalues.push(mean);
        idempotents.push(JordanElement::Sym(c));
        start = end;
    }
    SpectralDecomposition {
        eigenvalues,
        idempotents,
    }
}

fn spin_spectral(s: f64, x: &DVector<f64>) -> SpectralDecomposition {
    let r = x.norm();
    let n = x.len();
    if 2.0 * r <= CLUSTER_TOL * cluster_scale(&[s - r, s + r]) {
        return SpectralDecomposition {
            eigenvalues: vec![s],
            idempotents: vec![JordanElement::unit(Algebra::SpinFactor(n))],
        };
    }
    let u = x / r;
    SpectralDecomposition {
        eigenvalues: vec![s - r, s + r],
        idempotents: vec![
            JordanElement::Spin {
                s: 0.5,
                x: &u * -0.5,
            },
            JordanElement::Spin { s: 0.5, x: u * 0.5 },
        ],
    }
}

/// The quadratic representation `P(x)w = 2 x∘(x∘w) − x²∘w`.
pub fn quadratic_rep_apply(x: &JordanElement, w: &JordanElement) -> Result<JordanElement> {
    let xw = x.product(w)?;
    let first = x.product(&xw)?.scale(2.0);
    let second = x.square().product(w)?;
    first.sub(&second)
}

/// `(λ₋(w,x), λ₊(w,x))`: extreme eigenvalues of `P(x^{-1/2}) w` for interior
/// `x`. These equal `m(w/x)` and `M(w/x)` in the cone order.
///
/// For symmetric matrices this is computed as the spectrum of `L⁻¹ W L⁻ᵀ`
/// with `X = LLᵀ`, which keeps the problem symmetric-definite.
pub fn lambda_bounds(w: &JordanElement, x: &JordanElement) -> Result<(f64, f64)> {
    w.same_algebra(x)?;
    if !x.is_interior() {
        return Err(Error::NotInterior);
    }
    match (w, x) {
        (JordanElement::Sym(a), JordanElement::Sym(b)) => {
            let chol = Cholesky::new(b.clone()).ok_or(Error::NotInterior)?;
            let l = chol.l();
            let left = l.solve_lower_triangular(a).ok_or(Error::NotInvertible)?;
            let c = l
                .solve_lower_triangular(&left.transpose())
                .ok_or(Error::NotInvertible)?;
            let c = (&c + c.transpose()) * 0.5;
            let eig = SymmetricEigen::new(c);
            let min = eig.eigenvalues.min();
            let max = eig.eigenvalues.max();
            Ok((min, max))
        }
        _ => {
            let z = quadratic_rep_apply(&x.powf(-0.5)?, w)?;
            let spec = z.spectral_decompose();
            Ok((spec.lambda_min(), spec.lambda_max()))
        }
    }
}

/// Same quantity as [`lambda_bounds`], always through `P(x^{-1/2})`.
pub fn lambda_bounds_via_quadratic_rep(w: &JordanElement, x: &JordanElement) -> Result<(f64, f64)> {
    w.same_algebra(x)?;
    if !x.is_interior() {
        return Err(Error::NotInterior);
    }
    let z = quadratic_rep_apply(&x.powf(-0.5)?, w)?;
    let spec = z.spectral_decompose();
    Ok((spec.lambda_min(), spec.lambda_max()))
}

/// Hilbert or Thompson distance between interior elements.
pub fn symmetric_cone_distance(
    x: &JordanElement,
    y: &JordanElement,
    metric: ConeMetric,
) -> Result<f64> {
    x.same_algebra(y)?;
    if !x.is_interior() {
        return Err(Error::NotInterior);
    }
    let (lo, hi) = lambda_bounds(x, y)?;
    Ok(match metric {
        ConeMetric::Hilbert => (hi / lo).ln().max(0.0),
        ConeMetric::Thompson => hi.ln().max(-lo.ln()),
    })
}

/// `M(w/y) = inf{β : w ≤ βy}` for `w`, `y` in the closed cone, `y ≠ 0`.
/// Returns `+∞` when `y` does not dominate `w`.
pub fn upper_order_bound(w: &JordanElement, y: &JordanElement) -> Result<f64> {
    w.same_algebra(y)?;
    if y.max_abs() == 0.0 {
        return Err(Error::ZeroDenominator);
    }
    if y.is_interior() {
        return Ok(lambda_bounds(w, y)?.1);
    }
    let w_scale = w.max_abs();
    if w_scale == 0.0 {
        return Ok(0.0);
    }
    match (w, y) {
        (JordanElement::Sym(a), JordanElement::Sym(b)) => {
            let n = b.nrows();
            let eig = SymmetricEigen::new(b.clone());
            let max = eig.eigenvalues.max();
            let range: Vec<usize> = (0..n)
                .filter(|&i| eig.eigenvalues[i] > INTERIOR_TOL * max)
                .collect();
            let kernel: Vec<usize> = (0..n).filter(|i| !range.contains(i)).collect();
            let q = eig.eigenvectors.select_columns(&range);
            let qk = eig.eigenvectors.select_columns(&kernel);
            let outside = qk.transpose() * a * &qk;
            if outside.amax() > 1e-12 * w_scale.max(max) {
                return Ok(f64::INFINITY);
            }
            let restricted = q.transpose() * a * &q;
            let inv_sqrt = DMatrix::from_diagonal(&DVector::from_iterator(
                range.len(),
                range.iter().map(|&i| eig.eigenvalues[i].powf(-0.5)),
            ));
            let c = &inv_sqrt * restricted * &inv_sqrt;
            let c = (&c + c.transpose()) * 0.5;
            Ok(SymmetricEigen::new(c).eigenvalues.max())
        }
        (JordanElement::Spin { s: ws, x: wx }, JordanElement::Spin { s: ys, x: yx }) => {
            // Nonzero boundary points of the Lorentz cone are extreme rays,
            // so `w` is dominated only by a nonnegative multiple of itself.
            let c = ws / ys;
            let residual = (ws - c * ys).abs().max((wx - yx * c).amax());
            if c >= 0.0 && residual <= 1e-12 * w_scale.max(ys.abs()) {
                Ok(c)
            } else {
                Ok(f64::INFINITY)
            }
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: &JordanElement, b: &JordanElement, tol: f64) -> bool {
        a.sub(b).unwrap().max_abs() <= tol
    }

    #[test]
    fn sym_product_by_hand() {
        let a = JordanElement::sym(DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 2.0])).unwrap();
        let b = JordanElement::sym(DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0])).unwrap();
        let ab = a.product(&b).unwrap();
        let expected =
            JordanElement::sym(DMatrix::from_row_slice(2, 2, &[0.0, 1.5, 1.5, 0.0])).unwrap();
        assert!(approx(&ab, &expected, 0.0));
    }

    #[test]
    fn unit_is_neutral() {
        let x = JordanElement::spin(0.3, DVector::from_vec(vec![1.0, -2.0]));
        let e = JordanElement::unit(x.algebra());
        assert_eq!(e.product(&x).unwrap(), x);
        let m = JordanElement::sym(DMatrix::from_row_slice(2, 2, &[3.0, 1.0, 1.0, -1.0])).unwrap();
        let e = JordanElement::unit(m.algebra());
        assert!(approx(&e.product(&m).unwrap(), &m, 0.0));
    }

    #[test]
    fn mixing_algebras_is_an_error() {
        let a = JordanElement::unit(Algebra::SymMatrices(2));
        let b = JordanElement::unit(Algebra::SpinFactor(2));
        assert_eq!(a.product(&b), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn spin_spectral_example() {
        let x = JordanElement::spin(2.0, DVector::from_vec(vec![1.0, 0.0]));
        let spec = x.spectral_decompose();
        assert_eq!(spec.eigenvalues, vec![1.0, 3.0]);
        let lower = JordanElement::spin(0.5, DVector::from_vec(vec![-0.5, 0.0]));
        let upper = JordanElement::spin(0.5, DVector::from_vec(vec![0.5, 0.0]));
        assert!(approx(&spec.idempotents[0], &lower, 1e-15));
        assert!(approx(&spec.idempotents[1], &upper, 1e-15));
        for c in &spec.idempotents {
            assert!(approx(&c.square(), c, 1e-15));
        }
        let sum = spec.idempotents[0].add(&spec.idempotents[1]).unwrap();
        assert!(approx(&sum, &JordanElement::unit(x.algebra()), 1e-15));
    }

    #[test]
    fn unit_has_single_eigenvalue() {
        for alg in [Algebra::SymMatrices(3), Algebra::SpinFactor(3)] {
            let e = JordanElement::unit(alg);
            let spec = e.spectral_decompose();
            assert_eq!(spec.eigenvalues.len(), 1);
            assert!((spec.eigenvalues[0] - 1.0).abs() < 1e-15);
            assert!(approx(&spec.idempotents[0], &e, 1e-12));
        }
    }

    #[test]
    fn diagonal_spectral_blocks() {
        let d = JordanElement::sym(DMatrix::from_diagonal(&DVector::from_vec(vec![
            1.0, 2.0, 2.0,
        ])))
        .unwrap();
        let spec = d.spectral_decompose();
        assert_eq!(spec.eigenvalues.len(), 2);
        assert!((spec.eigenvalues[0] - 1.0).abs() < 1e-14);
        assert!((spec.eigenvalues[1] - 2.0).abs() < 1e-14);
        let c0 = JordanElement::sym(DMatrix::from_diagonal(&DVector::from_vec(vec![
            1.0, 0.0, 0.0,
        ])))
        .unwrap();
        let c1 = JordanElement::sym(DMatrix::from_diagonal(&DVector::from_vec(vec![
            0.0, 1.0, 1.0,
        ])))
        .unwrap();
        assert!(approx(&spec.idempotents[0], &c0, 1e-12));
        assert!(approx(&spec.idempotents[1], &c1, 1e-12));
    }

    #[test]
    fn quadratic_rep_is_aba_for_matrices() {
        let a =
            JordanElement::sym(DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, 3.0]))).unwrap();
        let bm = DMatrix::from_row_slice(2, 2, &[1.0, 4.0, 4.0, -2.0]);
        let b = JordanElement::sym(bm.clone()).unwrap();
        let JordanElement::Sym(am) = &a else {
            unreachable!()
        };
        let expected = JordanElement::Sym(am * &bm * am);
        assert!(approx(
            &quadratic_rep_apply(&a, &b).unwrap(),
            &expected,
            1e-12
        ));
        let e = JordanElement::unit(b.algebra());
        assert!(approx(&quadratic_rep_apply(&e, &b).unwrap(), &b, 1e-14));
    }

    #[test]
    fn lambda_bounds_examples() {
        let a =
            JordanElement::sym(DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0]))).unwrap();
        let i = JordanElement::unit(a.algebra());
        let (lo, hi) = lambda_bounds(&a, &i).unwrap();
        assert!((lo - 1.0).abs() < 1e-14 && (hi - 2.0).abs() < 1e-14);

        let w = JordanElement::spin(2.0, DVector::from_vec(vec![1.0, 0.0]));
        let e = JordanElement::unit(w.algebra());
        let (lo, hi) = lambda_bounds(&w, &e).unwrap();
        assert!((lo - 1.0).abs() < 1e-14 && (hi - 3.0).abs() < 1e-14);

        let (lo, hi) = lambda_bounds(&w, &w).unwrap();
        assert!((lo - 1.0).abs() < 1e-12 && (hi - 1.0).abs() < 1e-12);
    }

    #[test]
    fn psd_distance_examples() {
        let a =
            JordanElement::sym(DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0]))).unwrap();
        let i = JordanElement::unit(a.algebra());
        let d = symmetric_cone_distance(&a, &i, ConeMetric::Hilbert).unwrap();
        assert!((d - 2f64.ln()).abs() < 1e-14);
        let a3 = a.scale(3.0);
        assert!(symmetric_cone_distance(&a, &a3, ConeMetric::Hilbert).unwrap() < 1e-14);
        let t = symmetric_cone_distance(&a, &a3, ConeMetric::Thompson).unwrap();
        assert!((t - 3f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn non_interior_rejected() {
        let b =
            JordanElement::sym(DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 0.0]))).unwrap();
        let a = JordanElement::unit(b.algebra());
        assert_eq!(lambda_bounds(&a, &b), Err(Error::NotInterior));
        assert_eq!(b.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn boundary_reference_bounds() {
        // y = diag(1, 0); w = diag(2, 0) is dominated, w = I is not.
        let y =
            JordanElement::sym(DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 0.0]))).unwrap();
        let w = y.scale(2.0);
        assert!((upper_order_bound(&w, &y).unwrap() - 2.0).abs() < 1e-14);
        let i = JordanElement::unit(y.algebra());
        assert_eq!(upper_order_bound(&i, &y).unwrap(), f64::INFINITY);

        let ray = JordanElement::spin(1.0, DVector::from_vec(vec![1.0, 0.0]));
        assert!((upper_order_bound(&ray.scale(3.0), &ray).unwrap() - 3.0).abs() < 1e-14);
        let other = JordanElement::spin(1.0, DVector::from_vec(vec![0.0, 1.0]));
        assert_eq!(upper_order_bound(&other, &ray).unwrap(), f64::INFINITY);
    }

    #[test]
    fn functional_calculus_roundtrip() {
        let x = JordanElement::sym(DMatrix::from_row_slice(2, 2, &[2.0, 0.5, 0.5, 1.0])).unwrap();
        let r = x.powf(0.5).unwrap();
        assert!(approx(&r.square(), &x, 1e-12));
        assert!(approx(&x.ln().unwrap().exp(), &x, 1e-12));
        let half = x.powf(-0.5).unwrap();
        let e = quadratic_rep_apply(&half, &x).unwrap();
        assert!(approx(&e, &JordanElement::unit(x.algebra()), 1e-12));
    }
}

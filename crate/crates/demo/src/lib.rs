//! Browser bindings for the `hilbert-cone` demo page.

use nalgebra::DMatrix;
use wasm_bindgen::prelude::*;

use hilbert_cone::birkhoff::{power_iteration, PositiveLinearMap, PowerIterationOptions};
use hilbert_cone::cone::orthant_hilbert_distance;
use hilbert_cone::transfer::{
    leading_eigenfunction, AffineMap, DiscreteSpace, EigenOptions, IfsSpec, WeightSpec,
};

const SQRT3_2: f64 = 0.866_025_403_784_438_6;

/// Barycentric coordinates of `(px, py)` in the triangle with vertices
/// `(0,0)`, `(1,0)`, `(1/2, √3/2)`.
fn barycentric(px: f64, py: f64) -> [f64; 3] {
    let l2 = py / SQRT3_2;
    let l1 = px - 0.5 * l2;
    [1.0 - l1 - l2, l1, l2]
}

/// Hilbert distance from the point `(cx, cy)` to the centre of every pixel of
/// a `width × height` raster over `[0,1] × [0, √3/2]`, row-major from the top.
/// Pixels outside the open triangle get `NaN`.
#[wasm_bindgen]
pub fn simplex_distance_field(cx: f64, cy: f64, width: usize, height: usize) -> Vec<f64> {
    let c = barycentric(cx, cy);
    let inside = |b: &[f64; 3]| b.iter().all(|&t| t > 0.0);
    let mut out = vec![f64::NAN; width * height];
    if !inside(&c) {
        return out;
    }
    for row in 0..height {
        let py = (height - row) as f64 - 0.5;
        let py = py / height as f64 * SQRT3_2;
        for col in 0..width {
            let px = (col as f64 + 0.5) / width as f64;
            let b = barycentric(px, py);
            if inside(&b) {
                out[row * width + col] = orthant_hilbert_distance(&c, &b);
            }
        }
    }
    out
}

/// Power iteration on a row-major `n × n` matrix.
#[wasm_bindgen]
pub struct PowerTrace {
    eigenvalue: f64,
    kappa: f64,
    delta: f64,
    certified: bool,
    eigenvector: Vec<f64>,
    residuals: Vec<f64>,
}

#[wasm_bindgen]
impl PowerTrace {
    #[wasm_bindgen(getter)]
    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue
    }

    #[wasm_bindgen(getter)]
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    #[wasm_bindgen(getter)]
    pub fn delta(&self) -> f64 {
        self.delta
    }

    #[wasm_bindgen(getter)]
    pub fn certified(&self) -> bool {
        self.certified
    }

    #[wasm_bindgen(getter)]
    pub fn eigenvector(&self) -> Vec<f64> {
        self.eigenvector.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn residuals(&self) -> Vec<f64> {
        self.residuals.clone()
    }
}

#[wasm_bindgen]
pub fn power_trace(entries: Vec<f64>, n: usize, tol: f64) -> Result<PowerTrace, JsError> {
    if n == 0 || entries.len() != n * n {
        return Err(JsError::new("expected a square matrix"));
    }
    let a = PositiveLinearMap::new(DMatrix::from_row_slice(n, n, &entries))?;
    let r = power_iteration(
        &a,
        None,
        PowerIterationOptions {
            tol,
            max_iter: 100_000,
        },
    )?;
    Ok(PowerTrace {
        eigenvalue: r.eigenvalue,
        kappa: r.certificate.kappa,
        delta: r.certificate.delta,
        certified: r.certificate.certified,
        eigenvector: r.eigenvector,
        residuals: r.residuals,
    })
}

/// Leading eigenfunction of the two-branch doubling IFS with affine weights
/// `w0(s) = p0 + p1 s` and `w1(s) = q0 + q1 s` on a dyadic space.
#[wasm_bindgen]
pub struct TransferTrace {
    eigenvalue: f64,
    kappa: f64,
    points: Vec<f64>,
    values: Vec<f64>,
    residuals: Vec<f64>,
}

#[wasm_bindgen]
impl TransferTrace {
    #[wasm_bindgen(getter)]
    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue
    }

    #[wasm_bindgen(getter)]
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    #[wasm_bindgen(getter)]
    pub fn points(&self) -> Vec<f64> {
        self.points.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn values(&self) -> Vec<f64> {
        self.values.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn residuals(&self) -> Vec<f64> {
        self.residuals.clone()
    }
}

#[wasm_bindgen]
pub fn transfer_eigenfunction(
    depth: u32,
    p0: f64,
    p1: f64,
    q0: f64,
    q1: f64,
    m0: f64,
    m2: f64,
) -> Result<TransferTrace, JsError> {
    let space = DiscreteSpace::dyadic(depth)?;
    let maps = vec![AffineMap { a: 0.5, b: 0.0 }, AffineMap { a: 0.5, b: 0.5 }];
    let weights = vec![WeightSpec::Affine([p0, p1]), WeightSpec::Affine([q0, q1])];
    let spec = IfsSpec::new(space, maps, weights, m0, 1.0, None)?;
    let e = leading_eigenfunction(&spec, m2, None, EigenOptions::default())?;
    Ok(TransferTrace {
        eigenvalue: e.eigenvalue,
        kappa: e.constants.kappa,
        points: spec.space().points().to_vec(),
        values: e.v,
        residuals: e.residual_history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_from_centroid_is_mirror_symmetric() {
        let (w, h) = (16, 14);
        let f = simplex_distance_field(0.5, SQRT3_2 / 3.0, w, h);
        assert!(f[0].is_nan());
        for row in 0..h {
            for col in 0..w {
                let (a, b) = (f[row * w + col], f[row * w + w - 1 - col]);
                assert!(a.is_nan() == b.is_nan());
                if !a.is_nan() {
                    assert!((a - b).abs() < 1e-12 && a >= 0.0);
                }
            }
        }
    }

    #[test]
    fn power_trace_golden_matrix() {
        let t = power_trace(vec![2.0, 1.0, 1.0, 1.0], 2, 1e-12)
            .ok()
            .unwrap();
        assert!((t.eigenvalue - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
        assert!(t.certified);
    }

    #[test]
    fn transfer_skewed_weights() {
        let t = transfer_eigenfunction(6, 2.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0, 4.0)
            .ok()
            .unwrap();
        assert_eq!(t.values.len(), 64);
        assert!(t.eigenvalue > 0.0 && t.kappa < 1.0);
    }
}

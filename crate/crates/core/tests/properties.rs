use std::sync::Arc;

use hilbert_cone::birkhoff::{
    contraction_ratio, empirical_contraction, projective_diameter, projective_diameter_cross_ratio,
    PositiveLinearMap,
};
use hilbert_cone::dynamics::{cone_gromov_product, iterate_orbit, minmax_example_map, MapSpec};
use hilbert_cone::embeddings::{h_norm, variation_norm};
use hilbert_cone::jordan::{lambda_bounds, lambda_bounds_via_quadratic_rep, JordanElement};
use hilbert_cone::transfer::{
    apply_operator, cone_membership, random_cone_element, AffineMap, DiscreteSpace,
    HolderConeParams, IfsSpec, WeightSpec,
};
use hilbert_cone::{Cone, PolytopalDomain};
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

fn positive(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0f64..3.0, n).prop_map(|v| v.into_iter().map(f64::exp).collect())
}

fn triple() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<f64>)> {
    (2usize..6).prop_flat_map(|n| (positive(n), positive(n), positive(n)))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orthant_metric_axioms((x, y, z) in triple(), s in 0.1f64..10.0, t in 0.1f64..10.0) {
        let o = Cone::orthant(x.len()).unwrap();
        let dxy = o.hilbert_distance(&x, &y).unwrap();
        prop_assert!(dxy >= 0.0);
        prop_assert!(close(dxy, o.hilbert_distance(&y, &x).unwrap(), 1e-12));
        let dxz = o.hilbert_distance(&x, &z).unwrap();
        let dzy = o.hilbert_distance(&z, &y).unwrap();
        prop_assert!(dxy <= dxz + dzy + 1e-12);
        let sx: Vec<f64> = x.iter().map(|v| v * s).collect();
        let ty: Vec<f64> = y.iter().map(|v| v * t).collect();
        prop_assert!(close(dxy, o.hilbert_distance(&sx, &ty).unwrap(), 1e-12));
        prop_assert_eq!(o.hilbert_distance(&x, &x).unwrap(), 0.0);
    }

    #[test]
    fn funk_thompson_relations((x, y, _z) in triple()) {
        let o = Cone::orthant(x.len()).unwrap();
        let h = o.hilbert_distance(&x, &y).unwrap();
        let f = o.funk_weak_metric(&x, &y).unwrap() + o.funk_weak_metric(&y, &x).unwrap();
        prop_assert!(close(h, f, 1e-12));
        let th = o.thompson_distance(&x, &y).unwrap();
        prop_assert!(th + 1e-12 >= h / 2.0);
        let b = o.order_bounds(&x, &y).unwrap();
        let back = o.order_bounds(&y, &x).unwrap();
        prop_assert!(close(b.lower, 1.0 / back.upper, 1e-12));
    }

    #[test]
    fn simplicial_cone_is_linear_orthant(
        (x, y, _z) in (3usize..4).prop_flat_map(|n| (positive(n), positive(n), positive(n))),
        entries in prop::collection::vec(-1.0f64..1.0, 9),
    ) {
        let basis = DMatrix::from_row_slice(3, 3, &entries) + DMatrix::identity(3, 3) * 3.0;
        let cone = Cone::simplicial(basis.clone()).unwrap();
        let bx = (&basis * DVector::from_vec(x.clone())).as_slice().to_vec();
        let by = (&basis * DVector::from_vec(y.clone())).as_slice().to_vec();
        let o = Cone::orthant(3).unwrap();
        prop_assert!(close(
            cone.hilbert_distance(&bx, &by).unwrap(),
            o.hilbert_distance(&x, &y).unwrap(),
            1e-9
        ));
    }

    #[test]
    fn cross_ratio_is_a_metric(
        x in prop::collection::vec(0.05f64..0.95, 2),
        y in prop::collection::vec(0.05f64..0.95, 2),
        z in prop::collection::vec(0.05f64..0.95, 2),
    ) {
        let sq = PolytopalDomain::cuboid(&[0.0, 0.0], &[1.0, 1.0]).unwrap();
        let d = |a: &[f64], b: &[f64]| sq.cross_ratio_distance(a, b).unwrap();
        prop_assert!(close(d(&x, &y), d(&y, &x), 1e-10));
        prop_assert!(d(&x, &y) <= d(&x, &z) + d(&z, &y) + 1e-10);
    }

    #[test]
    fn birkhoff_bound_holds(entries in prop::collection::vec(-2.0f64..2.0, 9), seed in 0u64..1000) {
        let a = PositiveLinearMap::new(DMatrix::from_row_slice(3, 3, &entries).map(f64::exp)).unwrap();
        let delta = projective_diameter(&a);
        prop_assert!(close(delta, projective_diameter_cross_ratio(&a).unwrap(), 1e-12));
        let kappa = contraction_ratio(delta).unwrap();
        prop_assert!(empirical_contraction(&a, 300, seed).unwrap() <= kappa + 1e-9);
    }

    #[test]
    fn norms_behave((x, y, _z) in triple(), t in 0.0f64..5.0, c in -3.0f64..3.0) {
        let w: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a.ln() - b.ln()).collect();
        let v: Vec<f64> = y.iter().map(|b| b.ln()).collect();
        let sum: Vec<f64> = w.iter().zip(&v).map(|(a, b)| a + b).collect();
        prop_assert!(h_norm(&sum).unwrap() <= h_norm(&w).unwrap() + h_norm(&v).unwrap() + 1e-12);
        let tw: Vec<f64> = w.iter().map(|a| a * t).collect();
        prop_assert!(close(h_norm(&tw).unwrap(), t * h_norm(&w).unwrap(), 1e-14));
        let shifted: Vec<f64> = w.iter().map(|a| a + c).collect();
        prop_assert!(close(variation_norm(&shifted).unwrap(), variation_norm(&w).unwrap(), 1e-12));
    }

    #[test]
    fn jordan_identities(
        entries in prop::collection::vec(-1.0f64..1.0, 16),
        other in prop::collection::vec(-1.0f64..1.0, 16),
    ) {
        let a = JordanElement::sym(DMatrix::from_row_slice(4, 4, &entries)).unwrap();
        let b = JordanElement::sym(DMatrix::from_row_slice(4, 4, &other)).unwrap();
        let ab = a.product(&b).unwrap();
        prop_assert!(ab.sub(&b.product(&a).unwrap()).unwrap().max_abs() < 1e-12);
        // (x²∘y)∘x = x²∘(y∘x)
        let a2 = a.square();
        let lhs = a2.product(&b).unwrap().product(&a).unwrap();
        let rhs = a2.product(&b.product(&a).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().max_abs() < 1e-9);

        // interior elements: functional calculus and the two λ± routes
        let x = a.square().add(&JordanElement::unit(a.algebra()).scale(0.5)).unwrap();
        let w = b.square().add(&JordanElement::unit(b.algebra()).scale(0.1)).unwrap();
        let r = x.sqrt().unwrap();
        prop_assert!(r.square().sub(&x).unwrap().max_abs() < 1e-9);
        prop_assert!(x.ln().unwrap().exp().sub(&x).unwrap().max_abs() < 1e-9);
        let (lo, hi) = lambda_bounds(&w, &x).unwrap();
        let (lo2, hi2) = lambda_bounds_via_quadratic_rep(&w, &x).unwrap();
        prop_assert!(close(lo, lo2, 1e-8) && close(hi, hi2, 1e-8));
    }

    #[test]
    fn spin_functional_calculus(s in 1.0f64..3.0, x in prop::collection::vec(-0.5f64..0.5, 4)) {
        let el = JordanElement::spin(s, DVector::from_vec(x));
        prop_assert!(el.sqrt().unwrap().square().sub(&el).unwrap().max_abs() < 1e-12);
        prop_assert!(el.ln().unwrap().exp().sub(&el).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn minmax_order_preserving_homogeneous(x in positive(3), bump in positive(3), t in 0.01f64..100.0) {
        let y: Vec<f64> = x.iter().zip(&bump).map(|(a, b)| a + b).collect();
        let fx = minmax_example_map(&x).unwrap();
        let fy = minmax_example_map(&y).unwrap();
        prop_assert!(fx.iter().zip(&fy).all(|(a, b)| a <= b));
        let tx: Vec<f64> = x.iter().map(|a| a * t).collect();
        let ftx = minmax_example_map(&tx).unwrap();
        prop_assert!(ftx.iter().zip(&fx).all(|(a, b)| close(*a, t * b, 1e-14)));
    }

    #[test]
    fn built_in_maps_are_non_expansive((x, y, _z) in (3usize..4).prop_flat_map(|n| (positive(n), positive(n), positive(n)))) {
        let o = Cone::orthant(3).unwrap();
        let a = PositiveLinearMap::from_rows(&[
            vec![2.0, 1.0, 0.5],
            vec![0.1, 1.0, 1.0],
            vec![1.0, 3.0, 0.2],
        ])
        .unwrap();
        for spec in [
            MapSpec::positive_matrix(a).unwrap(),
            MapSpec::min_max(hilbert_cone::dynamics::minmax_example()).unwrap(),
        ] {
            let gx = spec.step(&x).unwrap();
            let gy = spec.step(&y).unwrap();
            prop_assert!(
                o.hilbert_distance(&gx, &gy).unwrap() <= o.hilbert_distance(&x, &y).unwrap() + 1e-9
            );
            let rec = iterate_orbit(&spec, &x, 20).unwrap();
            for w in rec.residuals.windows(2) {
                prop_assert!(w[1] <= w[0] + 1e-9 || w[0].is_infinite());
            }
        }
    }

    #[test]
    fn gromov_product_symmetric_nonnegative((x, y, p) in triple()) {
        let o = Cone::orthant(x.len()).unwrap();
        let g = cone_gromov_product(&o, &x, &y, &p).unwrap();
        prop_assert!(g >= -1e-9);
        prop_assert!(close(g, cone_gromov_product(&o, &y, &x, &p).unwrap(), 1e-12));
    }

    #[test]
    fn custom_map_errors_propagate(x in positive(2)) {
        let bad = MapSpec::custom(2, Arc::new(|_: &[f64]| Ok(vec![1.0, -1.0])));
        prop_assert!(iterate_orbit(&bad, &x, 3).unwrap_err().is_numerical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn transfer_operator_linear_positive(seed in 0u64..10_000, s in 0.0f64..3.0, t in 0.0f64..3.0) {
        use rand::SeedableRng;
        let spec = IfsSpec::new(
            DiscreteSpace::dyadic(5).unwrap(),
            vec![AffineMap { a: 0.5, b: 0.0 }, AffineMap { a: 0.5, b: 0.5 }],
            vec![WeightSpec::Affine([2.0 / 6.0, 1.0 / 6.0]), WeightSpec::Affine([1.0 / 6.0, 1.0 / 6.0])],
            1.0,
            1.0,
            None,
        )
        .unwrap();
        let space = spec.space().clone();
        let p = HolderConeParams::new(4.0, 1.0).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let f = random_cone_element(&mut rng, &space, p);
        let g = random_cone_element(&mut rng, &space, p);
        let combo: Vec<f64> = f.iter().zip(&g).map(|(a, b)| s * a + t * b).collect();
        let lf = apply_operator(&spec, &f).unwrap();
        let lg = apply_operator(&spec, &g).unwrap();
        let lc = apply_operator(&spec, &combo).unwrap();
        for i in 0..lc.len() {
            prop_assert!(close(lc[i], s * lf[i] + t * lg[i], 1e-13));
            prop_assert!(lf[i] >= 0.0);
        }
        // envelope bound for cone members
        prop_assert!(cone_membership(&space, &f, p).unwrap().member);
        let max = f.iter().cloned().fold(f64::MIN, f64::max);
        let min = f.iter().cloned().fold(f64::MAX, f64::min);
        prop_assert!(max <= (p.m * space.diameter()).exp() * min * (1.0 + 1e-9));
    }
}

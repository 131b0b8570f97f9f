//! Output documents. Every result re-parses into the same types.
//!
//! Reals are written with 17 significant digits; non-finite values are the
//! strings `"inf"`, `"-inf"` and `"nan"`.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

pub fn fmt_real(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x == f64::INFINITY {
        "inf".into()
    } else if x == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{x:.16e}")
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            RawValue::from_string(fmt_real(self.0))
                .map_err(serde::ser::Error::custom)?
                .serialize(s)
        } else {
            s.serialize_str(&fmt_real(self.0))
        }
    }
}

struct RealVisitor;

impl Visitor<'_> for RealVisitor {
    type Value = Real;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a number or one of \"inf\", \"-inf\", \"nan\"")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Real, E> {
        Ok(Real(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Real, E> {
        Ok(Real(v as f64))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Real, E> {
        Ok(Real(v as f64))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Real, E> {
        match v {
            "inf" => Ok(Real(f64::INFINITY)),
            "-inf" => Ok(Real(f64::NEG_INFINITY)),
            "nan" => Ok(Real(f64::NAN)),
            _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(RealVisitor)
    }
}

pub fn reals(v: &[f64]) -> Vec<Real> {
    v.iter().copied().map(Real).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Envelope<T> {
    pub command: String,
    pub seed: Option<u64>,
    pub tol: Real,
    pub max_iter: usize,
    pub result: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistResult {
    pub hilbert: Real,
    pub thompson: Real,
    /// Absent unless both points are interior.
    pub funk: Option<Real>,
    pub funk_reverse: Option<Real>,
    pub same_part: bool,
    /// Cross-ratio distance, for polytope input.
    pub cross_ratio: Option<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiamResult {
    pub delta: Real,
    pub kappa: Real,
    pub delta_cross_ratio: Option<Real>,
    pub samples: Option<usize>,
    pub empirical_contraction: Option<Real>,
    pub directed_contraction: Option<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerResult {
    pub eigenvalue: Real,
    pub eigenvector: Vec<Real>,
    pub iterations: usize,
    pub delta: Real,
    pub kappa: Real,
    pub final_residual: Real,
    pub rate_bound_satisfied: bool,
    pub certified: bool,
    pub residuals: Vec<Real>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbedResult {
    pub norm: String,
    pub points: Vec<Vec<Real>>,
    /// Pairwise norm distances between the embedded points.
    pub distances: Vec<Vec<Real>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitResult {
    pub iterates: Vec<Vec<Real>>,
    pub residuals: Vec<Real>,
    pub period: Option<usize>,
    pub cycle: Option<Vec<Vec<Real>>>,
    pub boundary_proximity: Real,
    pub converged_to_boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransferResult {
    pub eigenvalue: Real,
    pub points: Vec<Real>,
    pub eigenfunction: Vec<Real>,
    pub iterations: usize,
    pub sup_residual: Real,
    pub residuals: Vec<Real>,
    pub c: Real,
    pub m1: Real,
    pub alpha: Real,
    pub beta: Real,
    pub d2_diameter_bound: Real,
    pub kappa: Real,
    pub in_cone_m2: bool,
    pub in_cone_limit: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsResult {
    pub kind: String,
    pub argument: u64,
    /// Decimal integer; may exceed 64 bits.
    pub value: String,
}

/// Convergence curve with a geometric bound `r_0 κ^k`.
pub fn convergence_csv(residuals: &[f64], kappa: f64) -> String {
    let mut out = String::from("iteration,residual,bound\n");
    let r0 = residuals.first().copied().unwrap_or(0.0);
    let mut bound = r0;
    for (k, r) in residuals.iter().enumerate() {
        out.push_str(&format!("{k},{},{}\n", fmt_real(*r), fmt_real(bound)));
        bound *= kappa;
    }
    out
}

pub fn key_value_csv(rows: &[(&str, String)]) -> String {
    let mut out = String::from("name,value\n");
    for (k, v) in rows {
        out.push_str(&format!("{k},{v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_round_trip() {
        for x in [
            0.0,
            -1.5,
            4f64.ln(),
            1e-300,
            f64::INFINITY,
            f64::NEG_INFINITY,
        ] {
            let s = serde_json::to_string(&Real(x)).unwrap();
            let back: Real = serde_json::from_str(&s).unwrap();
            assert_eq!(back.0.to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(
            serde_json::to_string(&Real(2.0)).unwrap(),
            "2.0000000000000000e0"
        );
        assert_eq!(
            serde_json::to_string(&Real(f64::INFINITY)).unwrap(),
            "\"inf\""
        );
    }
}

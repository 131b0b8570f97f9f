//! Input documents, one per subcommand. Matrices are row-major arrays of
//! rows.

use nalgebra::{DMatrix, DVector};
use serde::Deserialize;
use serde_json::Value;

use hilbert_cone::dynamics::{MinMaxMap, MinTerm};
use hilbert_cone::transfer::{AffineMap, DiscreteSpace, WeightSpec};
use hilbert_cone::{Cone, PolytopalDomain};
use num_rational::Rational64;

use crate::CliError;

pub fn matrix(rows: &[Vec<f64>], what: &str) -> Result<DMatrix<f64>, CliError> {
    let m = rows.len();
    let n = rows.first().map(Vec::len).unwrap_or(0);
    if m == 0 || n == 0 {
        return Err(CliError::Validation(format!("{what}: empty matrix")));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != n) {
        return Err(CliError::Validation(format!(
            "{what}: row {i} has {} entries, expected {n}",
            rows[i].len()
        )));
    }
    Ok(DMatrix::from_fn(m, n, |i, j| rows[i][j]))
}

/// `{"A": [[..]], "b": [..]}` or `{"vertices": [[..]]}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    #[serde(rename = "A")]
    pub a: Option<Vec<Vec<f64>>>,
    pub b: Option<Vec<f64>>,
    pub vertices: Option<Vec<Vec<f64>>>,
}

impl PolytopeJson {
    pub fn domain(&self) -> Result<PolytopalDomain, CliError> {
        match (&self.a, &self.b, &self.vertices) {
            (Some(a), Some(b), None) => {
                let a = matrix(a, "A")?;
                Ok(PolytopalDomain::new(a, DVector::from_column_slice(b))?)
            }
            (None, None, Some(v)) => {
                let pts: Vec<DVector<f64>> =
                    v.iter().map(|p| DVector::from_column_slice(p)).collect();
                Ok(PolytopalDomain::from_vertices(&pts)?)
            }
            _ => Err(CliError::Validation(
                "polytope needs either \"A\" and \"b\" or \"vertices\"".into(),
            )),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ConeJson {
    Orthant {
        n: Option<usize>,
    },
    Simplicial {
        basis: Vec<Vec<f64>>,
    },
    Polyhedral {
        facets: Vec<Vec<f64>>,
        witness: Vec<f64>,
    },
    Psd {
        n: usize,
    },
    Lorentz {
        n: usize,
    },
    /// Points are given in polytope coordinates and lifted to height one.
    Polytope {
        #[serde(rename = "A")]
        a: Option<Vec<Vec<f64>>>,
        b: Option<Vec<f64>>,
        vertices: Option<Vec<Vec<f64>>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistInput {
    pub cone: ConeJson,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

pub enum DistGeometry {
    Cone(Cone),
    Polytope(PolytopalDomain, Cone),
}

impl ConeJson {
    pub fn build(self, point_len: usize) -> Result<DistGeometry, CliError> {
        Ok(match self {
            ConeJson::Orthant { n } => DistGeometry::Cone(Cone::orthant(n.unwrap_or(point_len))?),
            ConeJson::Simplicial { basis } => {
                DistGeometry::Cone(Cone::simplicial(matrix(&basis, "basis")?)?)
            }
            ConeJson::Polyhedral { facets, witness } => DistGeometry::Cone(Cone::polyhedral(
                matrix(&facets, "facets")?,
                DVector::from_vec(witness),
            )?),
            ConeJson::Psd { n } => DistGeometry::Cone(Cone::psd(n)?),
            ConeJson::Lorentz { n } => DistGeometry::Cone(Cone::lorentz(n)?),
            ConeJson::Polytope { a, b, vertices } => {
                let domain = PolytopeJson { a, b, vertices }.domain()?;
                let cone = domain.cone()?;
                DistGeometry::Polytope(domain, cone)
            }
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiamInput {
    pub matrix: Vec<Vec<f64>>,
    /// Number of random pairs for the empirical estimates; needs `--seed`.
    pub samples: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerInput {
    pub matrix: Vec<Vec<f64>>,
    pub x0: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum EmbedKind {
    Log,
    Simplex,
    Polytope,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbedInput {
    pub kind: EmbedKind,
    pub points: Vec<Vec<f64>>,
    pub base_index: Option<usize>,
    pub polytope: Option<PolytopeJson>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MapJson {
    Matrix {
        matrix: Vec<Vec<f64>>,
    },
    /// `rows[i]` lists the `∨`-terms of coordinate `i`; each term is a list
    /// of `[coefficient, index]` pairs combined with `∧`. Coefficients are
    /// integers or strings `"p/q"`.
    MinMax {
        rows: Vec<Vec<Vec<(Value, usize)>>>,
    },
    MinMaxExample,
}

fn coefficient(v: &Value) -> Result<Rational64, CliError> {
    let bad = || CliError::Validation(format!("invalid min-max coefficient {v}"));
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational64::from_integer(i))
            } else {
                let f = n.as_f64().ok_or_else(bad)?;
                Rational64::approximate_float(f).ok_or_else(bad)
            }
        }
        Value::String(s) => s.trim().parse::<Rational64>().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

impl MapJson {
    pub fn min_max(rows: &[Vec<Vec<(Value, usize)>>]) -> Result<MinMaxMap, CliError> {
        let rows = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|term| {
                        term.iter()
                            .map(|(c, i)| Ok((coefficient(c)?, *i)))
                            .collect::<Result<Vec<_>, CliError>>()
                            .map(MinTerm)
                    })
                    .collect::<Result<Vec<_>, CliError>>()
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(MinMaxMap::new(rows)?)
    }
}

#[derive(Debug, Clone, Copy, Deserialize, Default, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum NormalizationJson {
    #[default]
    Sum,
    None,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitInput {
    pub map: MapJson,
    pub x0: Vec<f64>,
    pub iterations: Option<usize>,
    #[serde(default)]
    pub normalization: NormalizationJson,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceJson {
    Dyadic {
        depth: u32,
    },
    Grid {
        n: usize,
    },
    Custom {
        points: Vec<f64>,
        rho: Vec<Vec<f64>>,
    },
}

impl SpaceJson {
    pub fn build(&self) -> Result<DiscreteSpace, CliError> {
        Ok(match self {
            SpaceJson::Dyadic { depth } => DiscreteSpace::dyadic(*depth)?,
            SpaceJson::Grid { n } => DiscreteSpace::uniform_grid(*n)?,
            SpaceJson::Custom { points, rho } => {
                DiscreteSpace::from_matrix(points.clone(), matrix(rho, "rho")?)?
            }
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineJson {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum WeightJson {
    /// `[c0, c1]` for `b(s) = c0 + c1 s`.
    Affine([f64; 2]),
    Table(Vec<f64>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransferInput {
    pub space: SpaceJson,
    pub maps: Vec<AffineJson>,
    pub weights: Vec<WeightJson>,
    pub m0: f64,
    pub lambda: f64,
    pub m2: f64,
    pub c: Option<f64>,
    pub g0: Option<Vec<f64>>,
}

impl TransferInput {
    pub fn maps(&self) -> Vec<AffineMap> {
        self.maps
            .iter()
            .map(|m| AffineMap { a: m.a, b: m.b })
            .collect()
    }

    pub fn weights(&self) -> Vec<WeightSpec> {
        self.weights
            .iter()
            .map(|w| match w {
                WeightJson::Affine(c) => WeightSpec::Affine(*c),
                WeightJson::Table(t) => WeightSpec::Table(t.clone()),
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum BoundKindJson {
    SupNormBall,
    PolytopalHilbert,
    PolyhedralConeOrbit,
    SimplicialEigen,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsInput {
    pub kind: BoundKindJson,
    pub n: u64,
}

/// Parses `text` as `T`, reporting the failing field path and position.
pub fn parse<T: for<'de> Deserialize<'de>>(text: &str, source: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        CliError::Validation(format!("{source}: schema error at `{path}`: {inner}"))
    })
}

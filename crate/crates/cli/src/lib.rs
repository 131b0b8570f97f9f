//! Command-line front end for `hilbert-cone`.
//!
//! Each subcommand reads one JSON document and writes one JSON (or CSV)
//! artifact. Exit status is 0 on success, 1 for invalid input and 2 when a
//! numerical procedure fails.

pub mod input;
pub mod output;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hilbert_cone::birkhoff::{
    contraction_ratio, directed_contraction, empirical_contraction, power_iteration,
    projective_diameter, projective_diameter_cross_ratio, PositiveLinearMap, PowerIterationOptions,
};
use hilbert_cone::dynamics::{
    iterate_orbit, minmax_example, period_bound, MapSpec, Normalization, PeriodBoundKind,
    PERIOD_TOL,
};
use hilbert_cone::embeddings::{log_map, polytope_embedding, simplex_isometry, EmbeddedPoint};
use hilbert_cone::transfer::{
    cone_membership, leading_eigenfunction, EigenOptions, HolderConeParams, IfsSpec,
};

use input::*;
use output::*;

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid input: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl From<hilbert_cone::Error> for CliError {
    fn from(e: hilbert_cone::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hilbert-cone",
    version,
    about = "Hilbert and Birkhoff metrics on cones"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input JSON document.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomized estimates.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Convergence or period tolerance; the default depends on the command.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Iteration cap; for `orbit`, the orbit length when `iterations` is absent.
    #[arg(long = "max-iter", global = true)]
    pub max_iter: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Hilbert, Thompson and Funk distances between two points of a cone.
    Dist,
    /// Projective diameter and contraction ratio of a nonnegative matrix.
    Diam,
    /// Certified power iteration for a nonnegative matrix.
    Power,
    /// Isometric embedding of points into a normed space.
    Embed,
    /// Orbit of an order-preserving homogeneous map with period detection.
    Orbit,
    /// Leading eigenfunction of an IFS transfer operator.
    Transfer,
    /// Period bounds as exact integers.
    Bounds,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Dist => "dist",
            Command::Diam => "diam",
            Command::Power => "power",
            Command::Embed => "embed",
            Command::Orbit => "orbit",
            Command::Transfer => "transfer",
            Command::Bounds => "bounds",
        }
    }

    fn default_tol(self) -> f64 {
        match self {
            Command::Power => 1e-12,
            Command::Transfer => 1e-10,
            Command::Orbit => PERIOD_TOL,
            _ => 0.0,
        }
    }

    fn default_max_iter(self) -> usize {
        match self {
            Command::Power => 100_000,
            Command::Transfer => 10_000,
            Command::Orbit => 100,
            _ => 0,
        }
    }
}

struct Ctx {
    command: Command,
    seed: Option<u64>,
    tol: f64,
    max_iter: usize,
    format: Format,
}

impl Ctx {
    fn json<T: Serialize>(&self, result: T) -> Result<String, CliError> {
        let env = Envelope {
            command: self.command.name().to_string(),
            seed: self.seed,
            tol: Real(self.tol),
            max_iter: self.max_iter,
            result,
        };
        let mut s = serde_json::to_string_pretty(&env)
            .map_err(|e| CliError::Numerical(format!("serialization failed: {e}")))?;
        s.push('\n');
        Ok(s)
    }

    fn csv_header(&self) -> String {
        let seed = self.seed.map_or("none".to_string(), |s| s.to_string());
        format!(
            "# command={} seed={seed} tol={} max_iter={}\n",
            self.command.name(),
            fmt_real(self.tol),
            self.max_iter
        )
    }
}

/// Runs one command and returns the artifact text.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let command = cli.command;
    let tol = cli.tol.unwrap_or(command.default_tol());
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::Validation(format!(
            "--tol must be a nonnegative number, got {tol}"
        )));
    }
    let ctx = Ctx {
        command,
        seed: cli.seed,
        tol,
        max_iter: cli.max_iter.unwrap_or(command.default_max_iter()),
        format: cli.format,
    };
    let path = cli
        .input
        .as_ref()
        .ok_or_else(|| CliError::Validation(format!("`{}` needs --input", command.name())))?;
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let source = path.display().to_string();
    match command {
        Command::Dist => dist(&ctx, parse(&text, &source)?),
        Command::Diam => diam(&ctx, parse(&text, &source)?),
        Command::Power => power(&ctx, parse(&text, &source)?),
        Command::Embed => embed(&ctx, parse(&text, &source)?),
        Command::Orbit => orbit(&ctx, parse(&text, &source)?),
        Command::Transfer => transfer(&ctx, parse(&text, &source)?),
        Command::Bounds => bounds(&ctx, parse(&text, &source)?),
    }
}

/// Executes and writes the artifact; returns the process exit code.
pub fn run(cli: &Cli) -> u8 {
    let result = execute(cli).and_then(|text| match &cli.output {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Validation(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Validation(format!("cannot write output: {e}"))),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("hilbert-cone: {e}");
            e.exit_code()
        }
    }
}

fn dist(ctx: &Ctx, inp: DistInput) -> Result<String, CliError> {
    let geometry = inp.cone.build(inp.x.len())?;
    let (cone, x, y, cross) = match geometry {
        DistGeometry::Cone(c) => (c, inp.x.clone(), inp.y.clone(), None),
        DistGeometry::Polytope(domain, c) => {
            let cross = domain.cross_ratio_distance(&inp.x, &inp.y)?;
            (c, domain.lift(&inp.x), domain.lift(&inp.y), Some(cross))
        }
    };
    let interior = cone.is_interior(&x)? && cone.is_interior(&y)?;
    let r = DistResult {
        hilbert: Real(cone.hilbert_distance(&x, &y)?),
        thompson: Real(cone.thompson_distance(&x, &y)?),
        funk: interior
            .then(|| cone.funk_weak_metric(&x, &y))
            .transpose()?
            .map(Real),
        funk_reverse: interior
            .then(|| cone.funk_weak_metric(&y, &x))
            .transpose()?
            .map(Real),
        same_part: cone.same_part(&x, &y)?,
        cross_ratio: cross.map(Real),
    };
    match ctx.format {
        Format::Json => ctx.json(r),
        Format::Csv => {
            let mut rows = vec![
                ("hilbert", fmt_real(r.hilbert.0)),
                ("thompson", fmt_real(r.thompson.0)),
                ("same_part", r.same_part.to_string()),
            ];
            if let (Some(f), Some(g)) = (r.funk, r.funk_reverse) {
                rows.push(("funk", fmt_real(f.0)));
                rows.push(("funk_reverse", fmt_real(g.0)));
            }
            if let Some(c) = r.cross_ratio {
                rows.push(("cross_ratio", fmt_real(c.0)));
            }
            Ok(ctx.csv_header() + &key_value_csv(&rows))
        }
    }
}

fn diam(ctx: &Ctx, inp: DiamInput) -> Result<String, CliError> {
    let a = PositiveLinearMap::new(matrix(&inp.matrix, "matrix")?)?;
    let delta = projective_diameter(&a);
    let kappa = contraction_ratio(delta)?;
    let cross = if a.is_strictly_positive() {
        Some(projective_diameter_cross_ratio(&a)?)
    } else {
        None
    };
    let (empirical, directed) = match inp.samples {
        Some(n) => {
            let seed = ctx.seed.ok_or_else(|| {
                CliError::Validation("`samples` requires an explicit --seed".into())
            })?;
            (
                Some(empirical_contraction(&a, n, seed)?),
                Some(directed_contraction(&a, n, seed)?),
            )
        }
        None => (None, None),
    };
    let r = DiamResult {
        delta: Real(delta),
        kappa: Real(kappa),
        delta_cross_ratio: cross.map(Real),
        samples: inp.samples,
        empirical_contraction: empirical.map(Real),
        directed_contraction: directed.map(Real),
    };
    match ctx.format {
        Format::Json => ctx.json(r),
        Format::Csv => {
            let mut rows = vec![("delta", fmt_real(delta)), ("kappa", fmt_real(kappa))];
            for (name, v) in [
                ("delta_cross_ratio", cross),
                ("empirical_contraction", empirical),
                ("directed_contraction", directed),
            ] {
                if let Some(v) = v {
                    rows.push((name, fmt_real(v)));
                }
            }
            Ok(ctx.csv_header() + &key_value_csv(&rows))
        }
    }
}

fn power(ctx: &Ctx, inp: PowerInput) -> Result<String, CliError> {
    let a = PositiveLinearMap::new(matrix(&inp.matrix, "matrix")?)?;
    let opts = PowerIterationOptions {
        tol: ctx.tol,
        max_iter: ctx.max_iter,
    };
    let r = power_iteration(&a, inp.x0.as_deref(), opts)?;
    let cert = &r.certificate;
    match ctx.format {
        Format::Csv => Ok(ctx.csv_header() + &convergence_csv(&r.residuals, cert.kappa)),
        Format::Json => ctx.json(PowerResult {
            eigenvalue: Real(r.eigenvalue),
            eigenvector: reals(&r.eigenvector),
            iterations: cert.iterations,
            delta: Real(cert.delta),
            kappa: Real(cert.kappa),
            final_residual: Real(cert.final_residual),
            rate_bound_satisfied: cert.rate_bound_satisfied,
            certified: cert.certified,
            residuals: reals(&r.residuals),
        }),
    }
}

fn embed(ctx: &Ctx, inp: EmbedInput) -> Result<String, CliError> {
    let points: Vec<EmbeddedPoint> = match inp.kind {
        EmbedKind::Log => inp
            .points
            .iter()
            .map(|p| log_map(p))
            .collect::<Result<_, _>>()?,
        EmbedKind::Simplex => {
            let base = inp.base_index.unwrap_or(0);
            inp.points
                .iter()
                .map(|p| simplex_isometry(p, base))
                .collect::<Result<_, _>>()?
        }
        EmbedKind::Polytope => {
            let domain = inp
                .polytope
                .as_ref()
                .ok_or_else(|| {
                    CliError::Validation("`polytope` kind needs a `polytope` field".into())
                })?
                .domain()?;
            let cone = domain.cone()?;
            inp.points
                .iter()
                .map(|p| {
                    if p.len() != domain.dim() {
                        return Err(hilbert_cone::Error::DimensionMismatch {
                            expected: domain.dim(),
                            got: p.len(),
                        });
                    }
                    polytope_embedding(&cone, &domain.lift(p))
                })
                .collect::<Result<_, _>>()?
        }
    };
    let distances = points
        .iter()
        .map(|p| {
            points
                .iter()
                .map(|q| p.distance(q).map(Real))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let norm = match inp.kind {
        EmbedKind::Log => "variation",
        EmbedKind::Simplex => "hexagonal_h",
        EmbedKind::Polytope => "sup",
    };
    match ctx.format {
        Format::Json => ctx.json(EmbedResult {
            norm: norm.into(),
            points: points.iter().map(|p| reals(&p.coords)).collect(),
            distances,
        }),
        Format::Csv => {
            let dim = points.first().map_or(0, |p| p.coords.len());
            let mut out = ctx.csv_header();
            out.push_str("point");
            for i in 1..=dim {
                out.push_str(&format!(",c{i}"));
            }
            out.push('\n');
            for (k, p) in points.iter().enumerate() {
                out.push_str(&k.to_string());
                for c in &p.coords {
                    out.push(',');
                    out.push_str(&fmt_real(*c));
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn orbit(ctx: &Ctx, inp: OrbitInput) -> Result<String, CliError> {
    let spec = match &inp.map {
        MapJson::Matrix { matrix: m } => {
            MapSpec::positive_matrix(PositiveLinearMap::new(matrix(m, "matrix")?)?)?
        }
        MapJson::MinMax { rows } => MapSpec::min_max(MapJson::min_max(rows)?)?,
        MapJson::MinMaxExample => MapSpec::min_max(minmax_example())?,
    };
    let spec = spec.with_normalization(match inp.normalization {
        NormalizationJson::Sum => Normalization::Sum,
        NormalizationJson::None => Normalization::None,
    });
    let k = inp.iterations.unwrap_or(ctx.max_iter);
    let mut rec = iterate_orbit(&spec, &inp.x0, k)?;
    rec.detected_period = hilbert_cone::dynamics::detect_periodic_orbit(&rec, ctx.tol);
    let cycle = rec
        .detected_period
        .map(|p| rec.iterates[..p].iter().map(|x| reals(x)).collect());
    match ctx.format {
        Format::Json => ctx.json(OrbitResult {
            iterates: rec.iterates.iter().map(|x| reals(x)).collect(),
            residuals: reals(&rec.residuals),
            period: rec.detected_period,
            cycle,
            boundary_proximity: Real(rec.boundary_proximity),
            converged_to_boundary: rec.converged_to_boundary,
        }),
        Format::Csv => {
            let n = inp.x0.len();
            let mut out = ctx.csv_header();
            out.push_str("iteration");
            for i in 1..=n {
                out.push_str(&format!(",x{i}"));
            }
            out.push_str(",residual\n");
            for (k, x) in rec.iterates.iter().enumerate() {
                out.push_str(&k.to_string());
                for v in x {
                    out.push(',');
                    out.push_str(&fmt_real(*v));
                }
                out.push(',');
                if k > 0 {
                    out.push_str(&fmt_real(rec.residuals[k - 1]));
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn transfer(ctx: &Ctx, inp: TransferInput) -> Result<String, CliError> {
    let space = inp.space.build()?;
    let spec = IfsSpec::new(space, inp.maps(), inp.weights(), inp.m0, inp.lambda, inp.c)?;
    let opts = EigenOptions {
        tol: ctx.tol,
        max_iter: ctx.max_iter,
    };
    let e = leading_eigenfunction(&spec, inp.m2, inp.g0.as_deref(), opts)?;
    let k = e.constants;
    let limit = spec.m0() / (1.0 - spec.c().powf(spec.lambda())) + 0.01;
    let in_cone_limit = cone_membership(
        spec.space(),
        &e.v,
        HolderConeParams::new(limit, spec.lambda())?,
    )?
    .member;
    let in_cone_m2 = cone_membership(spec.space(), &e.v, spec.params(inp.m2)?)?.member;
    match ctx.format {
        Format::Csv => Ok(ctx.csv_header() + &convergence_csv(&e.residual_history, k.kappa)),
        Format::Json => ctx.json(TransferResult {
            eigenvalue: Real(e.eigenvalue),
            points: reals(spec.space().points()),
            eigenfunction: reals(&e.v),
            iterations: e.residual_history.len(),
            sup_residual: Real(e.sup_residual),
            residuals: reals(&e.residual_history),
            c: Real(spec.c()),
            m1: Real(k.m1),
            alpha: Real(k.alpha),
            beta: Real(k.beta),
            d2_diameter_bound: Real(k.d2_diameter_bound),
            kappa: Real(k.kappa),
            in_cone_m2,
            in_cone_limit,
        }),
    }
}

fn bounds(ctx: &Ctx, inp: BoundsInput) -> Result<String, CliError> {
    let (kind, name) = match inp.kind {
        BoundKindJson::SupNormBall => (PeriodBoundKind::SupNormBall(inp.n), "sup_norm_ball"),
        BoundKindJson::PolytopalHilbert => (
            PeriodBoundKind::PolytopalHilbert(inp.n),
            "polytopal_hilbert",
        ),
        BoundKindJson::PolyhedralConeOrbit => (
            PeriodBoundKind::PolyhedralConeOrbit(inp.n),
            "polyhedral_cone_orbit",
        ),
        BoundKindJson::SimplicialEigen => {
            (PeriodBoundKind::SimplicialEigen(inp.n), "simplicial_eigen")
        }
    };
    let value = period_bound(kind)?.to_string();
    match ctx.format {
        Format::Json => ctx.json(BoundsResult {
            kind: name.into(),
            argument: inp.n,
            value,
        }),
        Format::Csv => Ok(ctx.csv_header()
            + &key_value_csv(&[
                ("kind", name.into()),
                ("argument", inp.n.to_string()),
                ("value", value),
            ])),
    }
}

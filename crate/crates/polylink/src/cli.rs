//! Command-line front end: `limit`, `simulate`, `converge` and `faces`.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polylink_core::polytope::Generator;
use polylink_core::{
    build_polytope, limit_constant, limit_constant_hypercube, limit_constant_polygon,
    limit_constant_polyhedron, sample_points, thresholds, BetaMode, DensityModel, DensitySpec,
    Polytope, PolytopeSpec,
};

use crate::config::ExperimentConfig;
use crate::error::{HarnessError, Result};
use crate::harness::{format_real, run_to_writer};
use crate::io::{load_json, load_points_csv};

#[derive(Debug, Parser)]
#[command(name = "polylink", version, about = "Nearest-neighbour and connectivity thresholds in convex polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the limit constant and its per-face contributions as JSON.
    Limit(LimitArgs),
    /// Threshold report for one sampled (or loaded) point cloud, as JSON.
    Simulate(SimulateArgs),
    /// Run a convergence sweep from a JSON config and write CSV.
    Converge(ConvergeArgs),
    /// Dump the face lattice as CSV.
    Faces(PolytopeArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ShapeArg {
    Hypercube,
    Box,
    Simplex,
    RegularSimplex,
    CrossPolytope,
    RegularPolygon,
}

#[derive(Debug, Args)]
pub struct PolytopeArgs {
    #[arg(long, value_enum, conflicts_with = "polytope")]
    pub shape: Option<ShapeArg>,
    #[arg(long)]
    pub dim: Option<usize>,
    /// Side lengths of a box, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub sides: Vec<f64>,
    /// Vertex count of a regular polygon.
    #[arg(long)]
    pub m: Option<usize>,
    /// Polytope spec as a JSON file.
    #[arg(long)]
    pub polytope: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    /// `uniform`, or a JSON file holding a density spec.
    #[arg(long, default_value = "uniform")]
    pub density: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Form {
    General,
    Polygon,
    Polyhedron,
    Hypercube,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    #[command(flatten)]
    pub polytope: PolytopeArgs,
    #[command(flatten)]
    pub density: DensityArgs,
    /// `k(n) / log n` in the limit; `inf` selects the per-k(n) regime.
    #[arg(long, value_parser = parse_beta)]
    pub beta: BetaMode,
    /// Which closed form to evaluate.
    #[arg(long, value_enum, default_value = "general")]
    pub form: Form,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub polytope: PolytopeArgs,
    #[command(flatten)]
    pub density: DensityArgs,
    /// Points to sample; ignored with `--points`.
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Load the cloud from CSV (one point per row) instead of sampling.
    #[arg(long)]
    pub points: Option<PathBuf>,
    /// Skip the k-connectivity threshold.
    #[arg(long)]
    pub no_m: bool,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// CSV destination, overriding the config's `output`.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_beta(s: &str) -> std::result::Result<BetaMode, String> {
    match s.trim() {
        "inf" | "infinity" | "∞" => Ok(BetaMode::Infinite),
        other => {
            let b: f64 = other.parse().map_err(|e| format!("{e}"))?;
            BetaMode::finite(b).map_err(|e| e.to_string())
        }
    }
}

impl PolytopeArgs {
    fn spec(&self) -> Result<PolytopeSpec> {
        if let Some(path) = &self.polytope {
            return load_json(path);
        }
        let shape = self.shape.ok_or_else(|| HarnessError::Input("give --shape or --polytope".into()))?;
        let dim = || self.dim.ok_or_else(|| HarnessError::Input("--dim is required for this shape".into()));
        let generator = match shape {
            ShapeArg::Hypercube => Generator::Hypercube { dim: dim()? },
            ShapeArg::Simplex => Generator::Simplex { dim: dim()? },
            ShapeArg::RegularSimplex => Generator::RegularSimplex { dim: dim()? },
            ShapeArg::CrossPolytope => Generator::CrossPolytope { dim: dim()? },
            ShapeArg::Box => Generator::Box { dim: self.dim.unwrap_or(self.sides.len()), sides: self.sides.clone() },
            ShapeArg::RegularPolygon => Generator::RegularPolygon {
                dim: self.dim.unwrap_or(2),
                m: self.m.ok_or_else(|| HarnessError::Input("--m is required for regular-polygon".into()))?,
            },
        };
        Ok(PolytopeSpec::Generator(generator))
    }

    fn build(&self) -> Result<Polytope> {
        Ok(build_polytope(&self.spec()?)?)
    }
}

impl DensityArgs {
    fn model(&self, polytope: &Polytope) -> Result<DensityModel> {
        let spec = match self.density.as_str() {
            "uniform" => DensitySpec::Uniform,
            path => load_json(path.as_ref())?,
        };
        Ok(DensityModel::new(&spec, polytope)?)
    }
}

fn print_json<T: serde::Serialize, W: Write>(out: &mut W, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out).map_err(|source| HarnessError::Io { path: "stdout".into(), source })
}

fn limit(args: &LimitArgs, out: &mut impl Write) -> Result<()> {
    let p = args.polytope.build()?;
    let f = args.density.model(&p)?;
    let report = match args.form {
        Form::General => limit_constant(&p, &f, args.beta),
        Form::Polygon => limit_constant_polygon(&p, &f, args.beta),
        Form::Polyhedron => limit_constant_polyhedron(&p, &f, args.beta),
        Form::Hypercube => limit_constant_hypercube(&p, &f, args.beta),
    }?;
    print_json(out, &report)
}

fn simulate(args: &SimulateArgs, out: &mut impl Write) -> Result<()> {
    let cloud = match &args.points {
        Some(path) => load_points_csv(path)?,
        None => {
            let p = args.polytope.build()?;
            let f = args.density.model(&p)?;
            sample_points(&p, &f, args.n, args.seed)?
        }
    };
    let start = Instant::now();
    let mut report = thresholds(&cloud, args.k, !args.no_m)?;
    report.elapsed = start.elapsed().as_secs_f64();
    print_json(out, &report)
}

fn converge(args: &ConvergeArgs, out: &mut impl Write) -> Result<()> {
    let config: ExperimentConfig = load_json(&args.config)?;
    match args.output.as_ref().or(config.output.as_ref()) {
        Some(path) => {
            let file = File::create(path)
                .map_err(|source| HarnessError::Io { path: path.display().to_string(), source })?;
            run_to_writer(&config, BufWriter::new(file))?;
        }
        None => {
            run_to_writer(&config, out)?;
        }
    }
    Ok(())
}

fn faces(args: &PolytopeArgs, out: &mut impl Write) -> Result<()> {
    let p = args.build()?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["id", "dimension", "vertex_ids", "rho", "rho_exact"])?;
    for face in p.faces() {
        let ids: Vec<String> = face.vertex_ids.iter().map(usize::to_string).collect();
        w.write_record([
            face.id.to_string(),
            face.dimension.to_string(),
            ids.join(" "),
            format_real(face.angular_volume),
            face.angular_volume_exact.to_string(),
        ])?;
    }
    w.flush().map_err(|source| HarnessError::Io { path: "stdout".into(), source })
}

/// Runs a parsed command, writing its result to `out`.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<()> {
    match &cli.command {
        Command::Limit(a) => limit(a, out),
        Command::Simulate(a) => simulate(a, out),
        Command::Converge(a) => converge(a, out),
        Command::Faces(a) => faces(a, out),
    }
}

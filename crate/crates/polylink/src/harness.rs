//! Convergence sweeps: for every configured `n`, independent trials of
//! sample, threshold and normalise.

use std::io::Write;

use polylink_core::rng::derive_seed;
use polylink_core::{
    build_polytope, limit_constant, sample_points, thresholds, DensityModel, Polytope,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{ExperimentConfig, Output};
use crate::error::{HarnessError, Result};

/// Column order of the CSV output.
pub const CSV_COLUMNS: [&str; 11] =
    ["n", "trial", "seed", "k", "L", "M", "nLd_log", "nMd_log", "nLd_k", "nMd_k", "limit_const"];

/// One trial. Thresholds that were not requested are NaN.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub k: usize,
    #[serde(rename = "L")]
    pub l: f64,
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "nLd_log")]
    pub n_ld_log: f64,
    #[serde(rename = "nMd_log")]
    pub n_md_log: f64,
    #[serde(rename = "nLd_k")]
    pub n_ld_k: f64,
    #[serde(rename = "nMd_k")]
    pub n_md_k: f64,
    pub limit_const: f64,
}

impl Row {
    fn new(n: usize, trial: usize, seed: u64, k: usize, d: usize, l: f64, m: f64, limit_const: f64) -> Self {
        let scaled = |r: f64| n as f64 * r.powi(d as i32);
        let log_n = (n as f64).ln();
        Row {
            n,
            trial,
            seed,
            k,
            l,
            m,
            n_ld_log: scaled(l) / log_n,
            n_md_log: scaled(m) / log_n,
            n_ld_k: scaled(l) / k as f64,
            n_md_k: scaled(m) / k as f64,
            limit_const,
        }
    }

    /// Fields in [`CSV_COLUMNS`] order; reals with 17 significant digits.
    pub fn to_record(&self) -> [String; 11] {
        [
            self.n.to_string(),
            self.trial.to_string(),
            self.seed.to_string(),
            self.k.to_string(),
            format_real(self.l),
            format_real(self.m),
            format_real(self.n_ld_log),
            format_real(self.n_md_log),
            format_real(self.n_ld_k),
            format_real(self.n_md_k),
            format_real(self.limit_const),
        ]
    }
}

/// `{:.16e}` for finite values, `inf` and `NaN` otherwise; all three parse
/// back with `str::parse::<f64>`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

/// Seed of trial `trial` at size `n`; depends on nothing else.
pub fn trial_seed(master_seed: u64, n: usize, trial: usize) -> u64 {
    derive_seed(master_seed, &[n as u64, trial as u64])
}

struct Setup {
    polytope: Polytope,
    density: DensityModel,
    limit_const: f64,
}

fn setup(config: &ExperimentConfig) -> Result<Setup> {
    config.validate()?;
    let polytope = build_polytope(&config.polytope)?;
    let density = DensityModel::new(&config.density, &polytope)?;
    let limit_const = limit_constant(&polytope, &density, config.k_rule.beta())?.constant;
    Ok(Setup { polytope, density, limit_const })
}

fn run_trial(config: &ExperimentConfig, s: &Setup, n: usize, trial: usize) -> Result<Row> {
    let seed = trial_seed(config.master_seed, n, trial);
    let k = config.k_rule.k(n);
    let cloud = sample_points(&s.polytope, &s.density, n, seed)?;
    let report = thresholds(&cloud, k, config.wants(Output::M))?;
    let l = if config.wants(Output::L) { report.l } else { f64::NAN };
    let m = report.m.unwrap_or(f64::NAN);
    Ok(Row::new(n, trial, seed, k, s.polytope.dim(), l, m, s.limit_const))
}

/// Worker pool sized by `POLYLINK_THREADS` when it holds a positive integer.
fn pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = std::env::var("POLYLINK_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if t > 0 {
            builder = builder.num_threads(t);
        }
    }
    builder.build().map_err(|e| HarnessError::Input(format!("thread pool: {e}")))
}

/// Runs the sweep and writes CSV to `out` in `(n, trial)` order. Rows
/// finished before a failure are written and flushed before the error is
/// returned.
pub fn run_to_writer<W: Write>(config: &ExperimentConfig, out: W) -> Result<Vec<Row>> {
    let s = setup(config)?;
    let pool = pool()?;
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(CSV_COLUMNS)?;
    let mut rows = Vec::with_capacity(config.n_values.len() * config.trials);
    for &n in &config.n_values {
        let batch: Vec<Result<Row>> =
            pool.install(|| (0..config.trials).into_par_iter().map(|t| run_trial(config, &s, n, t)).collect());
        for row in batch {
            match row {
                Ok(row) => {
                    writer.write_record(row.to_record())?;
                    rows.push(row);
                }
                Err(e) => {
                    writer.flush().map_err(|source| HarnessError::Io { path: "output".into(), source })?;
                    return Err(e);
                }
            }
        }
        writer.flush().map_err(|source| HarnessError::Io { path: "output".into(), source })?;
    }
    Ok(rows)
}

/// Runs the sweep and returns the rows without writing anything.
pub fn run_convergence_experiment(config: &ExperimentConfig) -> Result<Vec<Row>> {
    run_to_writer(config, std::io::sink())
}

/// Parses CSV written by [`run_to_writer`].
pub fn read_rows<R: std::io::Read>(input: R) -> Result<Vec<Row>> {
    let mut reader = csv::Reader::from_reader(input);
    let headers = reader.headers()?.clone();
    if headers.iter().ne(CSV_COLUMNS) {
        return Err(HarnessError::Input(format!("unexpected CSV header {headers:?}")));
    }
    reader.deserialize().map(|r| r.map_err(HarnessError::from)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_formatting_round_trips() {
        for x in [0.0, 1.0 / 3.0, std::f64::consts::PI * 1e-300, 1e300, f64::MIN_POSITIVE, 5e-324] {
            assert_eq!(format_real(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(format_real(f64::INFINITY), "inf");
        assert!(format_real(f64::NAN).parse::<f64>().unwrap().is_nan());
    }

    #[test]
    fn seeds_depend_only_on_coordinates() {
        assert_eq!(trial_seed(7, 100, 3), trial_seed(7, 100, 3));
        assert_ne!(trial_seed(7, 100, 3), trial_seed(7, 100, 4));
        assert_ne!(trial_seed(7, 100, 3), trial_seed(7, 1000, 3));
        assert_ne!(trial_seed(7, 100, 3), trial_seed(8, 100, 3));
    }

    #[test]
    fn normalised_columns() {
        let r = Row::new(1000, 0, 1, 2, 2, 0.05, 0.06, 0.3);
        assert!((r.n_ld_log - 1000.0 * 0.0025 / 1000f64.ln()).abs() < 1e-15);
        assert!((r.n_md_k - 1000.0 * 0.0036 / 2.0).abs() < 1e-12);
    }
}

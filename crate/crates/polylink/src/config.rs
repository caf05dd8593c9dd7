//! Experiment configuration, read from JSON.

use std::path::PathBuf;

use polylink_core::{BetaMode, DensitySpec, PolytopeSpec};
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// How `k` grows with `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum KRule {
    /// Constant `k`, so `k / log n → 0`.
    Fixed { k: usize },
    /// `k(n) = ceil(β log n)`.
    LogN { beta: f64 },
    /// `k(n) = ceil(c n^γ)` with `0 < γ < 1`, so `k / log n → ∞` and `k / n → 0`.
    Power { c: f64, gamma: f64 },
}

impl KRule {
    pub fn k(&self, n: usize) -> usize {
        let n = n as f64;
        match *self {
            KRule::Fixed { k } => k,
            KRule::LogN { beta } => (beta * n.ln()).ceil() as usize,
            KRule::Power { c, gamma } => (c * n.powf(gamma)).ceil() as usize,
        }
    }

    /// Limit of `k(n) / log n`.
    pub fn beta(&self) -> BetaMode {
        match *self {
            KRule::Fixed { .. } => BetaMode::Finite(0.0),
            KRule::LogN { beta } => BetaMode::Finite(beta),
            KRule::Power { .. } => BetaMode::Infinite,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(HarnessError::Config(m));
        match *self {
            KRule::Fixed { k } if k < 1 => bad("fixed k must be >= 1".into()),
            KRule::LogN { beta } if !(beta.is_finite() && beta > 0.0) => {
                bad(format!("log_n rule needs a finite beta > 0, got {beta}"))
            }
            KRule::Power { c, gamma } if !(c.is_finite() && c > 0.0 && gamma > 0.0 && gamma < 1.0) => {
                bad(format!("power rule needs c > 0 and 0 < gamma < 1, got c={c}, gamma={gamma}"))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Output {
    L,
    M,
}

fn uniform() -> DensitySpec {
    DensitySpec::Uniform
}

fn both() -> Vec<Output> {
    vec![Output::L, Output::M]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub polytope: PolytopeSpec,
    #[serde(default = "uniform")]
    pub density: DensitySpec,
    pub k_rule: KRule,
    pub n_values: Vec<usize>,
    pub trials: usize,
    pub master_seed: u64,
    #[serde(default = "both")]
    pub outputs: Vec<Output>,
    /// CSV destination; standard output when absent.
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(HarnessError::Config(m));
        self.k_rule.validate()?;
        if self.n_values.is_empty() {
            return bad("n_values is empty".into());
        }
        if self.n_values.windows(2).any(|w| w[0] >= w[1]) {
            return bad(format!("n_values must be strictly increasing, got {:?}", self.n_values));
        }
        if self.trials < 1 {
            return bad("trials must be >= 1".into());
        }
        if self.outputs.is_empty() {
            return bad("outputs must name L, M or both".into());
        }
        for &n in &self.n_values {
            let k = self.k_rule.k(n);
            if k < 1 || k >= n {
                return bad(format!("k({n}) = {k} violates 1 <= k(n) < n"));
            }
        }
        Ok(())
    }

    pub fn wants(&self, output: Output) -> bool {
        self.outputs.contains(&output)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> ExperimentConfig {
        serde_json::from_str(
            r#"{"polytope": {"shape": "hypercube", "dim": 2},
                "k_rule": {"rule": "fixed", "k": 1},
                "n_values": [100, 1000], "trials": 3, "master_seed": 7}"#,
        )
        .unwrap()
    }

    #[test]
    fn defaults_and_rules() {
        let c = base();
        c.validate().unwrap();
        assert_eq!(c.density, DensitySpec::Uniform);
        assert!(c.wants(Output::L) && c.wants(Output::M));
        assert_eq!(KRule::LogN { beta: 3.0 }.k(100_000), 35);
        assert_eq!(KRule::Power { c: 1.0, gamma: 0.5 }.k(10_000), 100);
        assert_eq!(KRule::Power { c: 1.0, gamma: 0.5 }.beta(), BetaMode::Infinite);
    }

    #[test]
    fn rejects_bad_configs() {
        let mut c = base();
        c.n_values = vec![1000, 100];
        assert!(c.validate().is_err());
        let mut c = base();
        c.trials = 0;
        assert!(c.validate().is_err());
        let mut c = base();
        c.k_rule = KRule::Fixed { k: 100 };
        assert!(c.validate().is_err());
        let mut c = base();
        c.k_rule = KRule::Power { c: 1.0, gamma: 1.0 };
        assert!(c.validate().is_err());
        let mut c = base();
        c.outputs.clear();
        assert!(c.validate().is_err());
        assert!(serde_json::from_str::<ExperimentConfig>(r#"{"bogus": 1}"#).is_err());
    }
}

//! Run configuration files and embedded presets.
//!
//! Configs are TOML with six optional sections; every key has a default,
//! and an empty file describes the complete-graph single run of the
//! `all2all_paper` preset together with the `fig3` sweep grid.
//!
//! ```toml
//! [network]
//! kind = "all-to-all"        # "all-to-all" | "scale-free" | "file"
//! n = 10                     # all-to-all
//! iterations = 4             # scale-free
//! path = "net.edges"         # file (edge-list format)
//!
//! [model]
//! lambda = 1.0
//! mu = 0.0
//! sigma = 0.5                # single runs
//! epsilon = 5.0              # single runs
//!
//! [sweep]
//! sigmas = [0.1, 0.5, 1.0, 2.0]
//! epsilon_min = 0.0          # evenly spaced grid ...
//! epsilon_max = 5.0
//! epsilon_points = 26
//! # epsilons = [0.0, 1.0]    # ... or an explicit list, which takes precedence
//! replicates = 10
//! transient_fraction = 0.5
//!
//! [integration]
//! method = "rk4"             # "rk4" | "euler"
//! dt = 0.01
//! t_end = 100.0
//! record_stride = 10
//!
//! [run]
//! seed = 2025
//!
//! [output]
//! trajectory = "trajectory.csv"
//! sweep = "sweep.csv"
//! ```
//!
//! Unknown keys are rejected.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::experiments::{ExperimentSpec, RunPoint, TopologySpec};
use crate::integrate::IntegrationConfig;
use crate::observables::DEFAULT_TRANSIENT_FRACTION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NetworkKind {
    AllToAll,
    ScaleFree,
    File,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NetworkSection {
    pub kind: NetworkKind,
    pub n: usize,
    pub iterations: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

impl Default for NetworkSection {
    fn default() -> Self {
        Self {
            kind: NetworkKind::AllToAll,
            n: 10,
            iterations: 4,
            path: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelSection {
    pub lambda: f64,
    pub mu: f64,
    pub sigma: f64,
    pub epsilon: f64,
}

impl Default for ModelSection {
    fn default() -> Self {
        Self {
            lambda: 1.0,
            mu: 0.0,
            sigma: 0.5,
            epsilon: 5.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSection {
    pub sigmas: Vec<f64>,
    pub epsilon_min: f64,
    pub epsilon_max: f64,
    pub epsilon_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilons: Option<Vec<f64>>,
    pub replicates: usize,
    pub transient_fraction: f64,
}

impl Default for SweepSection {
    fn default() -> Self {
        Self {
            sigmas: vec![0.1, 0.5, 1.0, 2.0],
            epsilon_min: 0.0,
            epsilon_max: 5.0,
            epsilon_points: 26,
            epsilons: None,
            replicates: 10,
            transient_fraction: DEFAULT_TRANSIENT_FRACTION,
        }
    }
}

impl SweepSection {
    /// The explicit list if given, else `epsilon_points` evenly spaced values
    /// from `epsilon_min` to `epsilon_max` inclusive.
    pub fn epsilon_grid(&self) -> Result<Vec<f64>> {
        if let Some(list) = &self.epsilons {
            return Ok(list.clone());
        }
        match self.epsilon_points {
            0 => Err(Error::Config("sweep.epsilon_points must be >= 1".into())),
            1 => Ok(vec![self.epsilon_min]),
            points => {
                let span = self.epsilon_max - self.epsilon_min;
                let last = (points - 1) as f64;
                Ok((0..points)
                    .map(|i| self.epsilon_min + span * i as f64 / last)
                    .collect())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunSection {
    pub seed: u64,
}

impl Default for RunSection {
    fn default() -> Self {
        Self { seed: 2025 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSection {
    pub trajectory: PathBuf,
    pub sweep: PathBuf,
}

impl Default for OutputSection {
    fn default() -> Self {
        Self {
            trajectory: "trajectory.csv".into(),
            sweep: "sweep.csv".into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub network: NetworkSection,
    pub model: ModelSection,
    pub sweep: SweepSection,
    pub integration: IntegrationConfig,
    pub run: RunSection,
    pub output: OutputSection,
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Effective configuration with every default filled in.
    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn topology(&self) -> Result<TopologySpec> {
        Ok(match self.network.kind {
            NetworkKind::AllToAll => TopologySpec::AllToAll { n: self.network.n },
            NetworkKind::ScaleFree => TopologySpec::ScaleFree {
                iterations: self.network.iterations,
            },
            NetworkKind::File => TopologySpec::File {
                path: self
                    .network
                    .path
                    .clone()
                    .ok_or_else(|| Error::Config("network.path is required when kind = \"file\"".into()))?,
            },
        })
    }

    pub fn experiment_spec(&self) -> Result<ExperimentSpec> {
        let spec = ExperimentSpec {
            topology: self.topology()?,
            lambda: self.model.lambda,
            epsilons: self.sweep.epsilon_grid()?,
            sigmas: self.sweep.sigmas.clone(),
            mu: self.model.mu,
            replicates: self.sweep.replicates,
            base_seed: self.run.seed,
            integration: self.integration,
            transient_fraction: self.sweep.transient_fraction,
        };
        spec.validate().map_err(|e| Error::Config(e.to_string()))?;
        Ok(spec)
    }

    /// The single run described by `[model]` and `[run]`.
    pub fn run_point(&self) -> Result<RunPoint> {
        let point = RunPoint {
            lambda: self.model.lambda,
            epsilon: self.model.epsilon,
            sigma: self.model.sigma,
            mu: self.model.mu,
            seed: self.run.seed,
            replicate: 0,
            integration: self.integration,
            transient_fraction: self.sweep.transient_fraction,
        };
        let m = &self.model;
        if !(m.lambda.is_finite() && m.mu.is_finite()) {
            return Err(Error::Config("model.lambda and model.mu must be finite".into()));
        }
        if !(m.sigma.is_finite() && m.sigma >= 0.0) {
            return Err(Error::Config(format!("model.sigma must be >= 0, got {}", m.sigma)));
        }
        if !(m.epsilon.is_finite() && m.epsilon >= 0.0) {
            return Err(Error::Config(format!("model.epsilon must be >= 0, got {}", m.epsilon)));
        }
        if !(0.0..1.0).contains(&self.sweep.transient_fraction) {
            return Err(Error::Config("sweep.transient_fraction must be in [0, 1)".into()));
        }
        self.integration
            .validate()
            .map_err(|e| Error::Config(format!("integration: {e}")))?;
        Ok(point)
    }
}

/// An embedded configuration.
#[derive(Debug, Clone, Copy)]
pub struct Preset {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

pub const PRESETS: &[Preset] = &[
    Preset {
        name: "fig3",
        summary: "sweep: complete graph N=10, sigma in {0.1,0.5,1,2}, epsilon 0..5 x 26, 10 replicates",
        text: include_str!("../presets/fig3.toml"),
    },
    Preset {
        name: "fig6",
        summary: "sweep: scale-free N=81, sigma in {0.05,0.1,0.15,0.2}, epsilon 0..30 x 31, 10 replicates",
        text: include_str!("../presets/fig6.toml"),
    },
    Preset {
        name: "all2all_paper",
        summary: "simulate: complete graph N=10, lambda=1, epsilon=5, sigma=0.5",
        text: include_str!("../presets/all2all_paper.toml"),
    },
    Preset {
        name: "scalefree_paper",
        summary: "simulate: scale-free N=81, lambda=1, epsilon=30, sigma=0.05",
        text: include_str!("../presets/scalefree_paper.toml"),
    },
];

pub fn preset(name: &str) -> Result<RunConfig> {
    let p = PRESETS.iter().find(|p| p.name == name).ok_or_else(|| {
        let names: Vec<&str> = PRESETS.iter().map(|p| p.name).collect();
        Error::Config(format!("unknown preset {name:?}; available: {}", names.join(", ")))
    })?;
    RunConfig::from_toml_str(p.text)
}

//! Seeded initialization, single runs and `(σ, ε)` sweeps.
//!
//! Every run is identified by a 64-bit run seed. In a sweep the run seed is
//! `derive_seed(base_seed, [σ index, ε index, replicate])`; the natural
//! frequencies and the initial state then come from the independent
//! sub-streams `derive_seed(run_seed, [1])` and `derive_seed(run_seed, [2])`.

pub mod rng;
pub mod summary;
pub mod table;

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::dynamics::{ModelParams, SystemState};
use crate::error::{Error, Result};
use crate::integrate::{simulate_seeded, IntegrationConfig, Trajectory};
use crate::observables::{order_series, DEFAULT_TRANSIENT_FRACTION};
use crate::topology::{all_to_all, deterministic_scale_free, load_adjacency, Adjacency};

use self::rng::{derive_seed, stream_seed, Sampler, Stream};

pub use self::table::{read_table, write_table, write_trajectory};

/// `n` independent draws from `N(mu, sigma)`.
pub fn sample_frequencies(mu: f64, sigma: f64, n: usize, seed: u64) -> Result<Vec<f64>> {
    if !(sigma.is_finite() && sigma >= 0.0) || !mu.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "need finite mu and sigma >= 0, got mu={mu} sigma={sigma}"
        )));
    }
    let mut sampler = Sampler::new(seed);
    Ok((0..n).map(|_| mu + sigma * sampler.standard_normal()).collect())
}

/// Phases uniform on `[0, 2π)`, amplitudes uniform on `[0.5, 1.5)`.
///
/// Draws alternate phase, amplitude for each agent in turn.
pub fn initial_state(n: usize, seed: u64) -> Result<SystemState> {
    if n == 0 {
        return Err(Error::InvalidParameter("initial state needs n >= 1".into()));
    }
    let mut sampler = Sampler::new(seed);
    let mut phases = Vec::with_capacity(n);
    let mut amplitudes = Vec::with_capacity(n);
    for _ in 0..n {
        phases.push(std::f64::consts::TAU * sampler.uniform());
        amplitudes.push(0.5 + sampler.uniform());
    }
    SystemState::new(phases, amplitudes)
}

/// Network selection for an experiment.
#[derive(Debug, Clone, PartialEq)]
pub enum TopologySpec {
    AllToAll { n: usize },
    ScaleFree { iterations: u32 },
    File { path: PathBuf },
}

impl TopologySpec {
    pub fn build(&self) -> Result<Adjacency> {
        match self {
            TopologySpec::AllToAll { n } => all_to_all(*n),
            TopologySpec::ScaleFree { iterations } => deterministic_scale_free(*iterations),
            TopologySpec::File { path } => load_adjacency(BufReader::new(File::open(path)?)),
        }
    }
}

/// A full `(σ, ε, replicate)` sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub topology: TopologySpec,
    pub lambda: f64,
    pub epsilons: Vec<f64>,
    pub sigmas: Vec<f64>,
    pub mu: f64,
    pub replicates: usize,
    pub base_seed: u64,
    pub integration: IntegrationConfig,
    pub transient_fraction: f64,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if self.epsilons.is_empty() {
            return bad("epsilon grid is empty".into());
        }
        if self.sigmas.is_empty() {
            return bad("sigma list is empty".into());
        }
        if self.replicates == 0 {
            return bad("replicates must be >= 1".into());
        }
        if let Some(e) = self.epsilons.iter().find(|e| !(e.is_finite() && **e >= 0.0)) {
            return bad(format!("epsilon values must be finite and >= 0, got {e}"));
        }
        if let Some(s) = self.sigmas.iter().find(|s| !(s.is_finite() && **s >= 0.0)) {
            return bad(format!("sigma values must be finite and >= 0, got {s}"));
        }
        if !self.lambda.is_finite() || !self.mu.is_finite() {
            return bad("lambda and mu must be finite".into());
        }
        if !(0.0..1.0).contains(&self.transient_fraction) {
            return bad(format!("transient_fraction must be in [0, 1), got {}", self.transient_fraction));
        }
        self.integration.validate()
    }

    /// Number of records a sweep produces.
    pub fn len(&self) -> usize {
        self.sigmas.len() * self.epsilons.len() * self.replicates
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Parameters of one run on a given network.
#[derive(Debug, Clone, PartialEq)]
pub struct RunPoint {
    pub lambda: f64,
    pub epsilon: f64,
    pub sigma: f64,
    pub mu: f64,
    pub seed: u64,
    pub replicate: usize,
    pub integration: IntegrationConfig,
    pub transient_fraction: f64,
}

impl RunPoint {
    /// Preset-style defaults: `λ = 1`, `μ = 0`, default integration and
    /// transient cut.
    pub fn new(epsilon: f64, sigma: f64, seed: u64) -> Self {
        Self {
            lambda: 1.0,
            epsilon,
            sigma,
            mu: 0.0,
            seed,
            replicate: 0,
            integration: IntegrationConfig::default(),
            transient_fraction: DEFAULT_TRANSIENT_FRACTION,
        }
    }

    fn with_provenance(&self, source: Error) -> Error {
        Error::Run {
            seed: self.seed,
            sigma: self.sigma,
            epsilon: self.epsilon,
            lambda: self.lambda,
            source: Box::new(source),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RunStatus {
    Ok,
    Failed(String),
}

impl RunStatus {
    pub fn is_ok(&self) -> bool {
        matches!(self, RunStatus::Ok)
    }
}

/// One `(σ, ε, replicate)` data point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub sigma: f64,
    pub epsilon: f64,
    pub replicate: usize,
    pub seed: u64,
    pub mean_r_raw: f64,
    pub mean_r_normalized: f64,
    pub negative_amplitude: bool,
    pub status: RunStatus,
}

/// Samples frequencies and initial state for `point` and integrates.
pub fn run_trajectory(adjacency: &Adjacency, point: &RunPoint) -> Result<Trajectory> {
    let n = adjacency.n();
    let inner = || -> Result<Trajectory> {
        let omega = sample_frequencies(point.mu, point.sigma, n, stream_seed(point.seed, Stream::Frequencies))?;
        let init = initial_state(n, stream_seed(point.seed, Stream::InitialState))?;
        let params = ModelParams::new(point.lambda, point.epsilon, omega)?;
        simulate_seeded(&init, &params, adjacency, &point.integration, Some(point.seed))
    };
    inner().map_err(|e| point.with_provenance(e))
}

/// Runs one point and reduces it to both time-averaged order parameters.
pub fn run_single(adjacency: &Adjacency, point: &RunPoint) -> Result<SweepRecord> {
    let trajectory = run_trajectory(adjacency, point)?;
    let cut = point.transient_fraction * point.integration.t_end;
    let (mean_r_raw, mean_r_normalized) = order_series(&trajectory)
        .tail_means(cut)
        .map_err(|e| point.with_provenance(e))?;
    if !mean_r_normalized.is_finite() {
        return Err(point.with_provenance(Error::ZeroAmplitude));
    }
    Ok(SweepRecord {
        sigma: point.sigma,
        epsilon: point.epsilon,
        replicate: point.replicate,
        seed: point.seed,
        mean_r_raw,
        mean_r_normalized,
        negative_amplitude: trajectory.meta().negative_amplitude,
        status: RunStatus::Ok,
    })
}

/// Run seed of grid point `(sigma_index, epsilon_index, replicate)`.
pub fn point_seed(base_seed: u64, sigma_index: usize, epsilon_index: usize, replicate: usize) -> u64 {
    derive_seed(base_seed, &[sigma_index as u64, epsilon_index as u64, replicate as u64])
}

/// Every grid point of `spec` in canonical `(σ, ε, replicate)` order.
pub fn sweep_points(spec: &ExperimentSpec) -> Vec<RunPoint> {
    let mut points = Vec::with_capacity(spec.len());
    for (si, &sigma) in spec.sigmas.iter().enumerate() {
        for (ei, &epsilon) in spec.epsilons.iter().enumerate() {
            for replicate in 0..spec.replicates {
                points.push(RunPoint {
                    lambda: spec.lambda,
                    epsilon,
                    sigma,
                    mu: spec.mu,
                    seed: point_seed(spec.base_seed, si, ei, replicate),
                    replicate,
                    integration: spec.integration,
                    transient_fraction: spec.transient_fraction,
                });
            }
        }
    }
    points
}

/// Runs every grid point on the global rayon pool.
pub fn run_sweep(spec: &ExperimentSpec) -> Result<Vec<SweepRecord>> {
    spec.validate()?;
    let adjacency = spec.topology.build()?;
    Ok(sweep_points(spec)
        .par_iter()
        .map(|p| run_point_or_failure(&adjacency, p))
        .collect())
}

/// [`run_sweep`] on a dedicated pool of at most `threads` workers.
pub fn run_sweep_with_threads(spec: &ExperimentSpec, threads: usize) -> Result<Vec<SweepRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| run_sweep(spec))
}

fn run_point_or_failure(adjacency: &Adjacency, point: &RunPoint) -> SweepRecord {
    run_single(adjacency, point).unwrap_or_else(|e| SweepRecord {
        sigma: point.sigma,
        epsilon: point.epsilon,
        replicate: point.replicate,
        seed: point.seed,
        mean_r_raw: f64::NAN,
        mean_r_normalized: f64::NAN,
        negative_amplitude: false,
        status: RunStatus::Failed(e.to_string()),
    })
}

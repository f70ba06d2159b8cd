//! Fixed-step explicit integration (Euler and classical RK4) with trajectory
//! recording.
//!
//! Phases are integrated unwrapped; recorded snapshots hold phases wrapped
//! into `[0, 2π)`.

use serde::{Deserialize, Serialize};

use crate::dynamics::{check_shapes, kuramoto_rhs_into, wrap_angle, ModelParams, RhsScratch, SystemState};
use crate::error::{Error, Result};
use crate::topology::Adjacency;

/// Amplitude magnitude treated as a blow-up.
pub const DIVERGENCE_THRESHOLD: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Euler,
    Rk4,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IntegrationConfig {
    pub dt: f64,
    pub t_end: f64,
    pub record_stride: usize,
    pub method: Method,
}

impl Default for IntegrationConfig {
    fn default() -> Self {
        Self {
            dt: 0.01,
            t_end: 100.0,
            record_stride: 10,
            method: Method::Rk4,
        }
    }
}

impl IntegrationConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(Error::InvalidParameter(format!("dt must be > 0, got {}", self.dt)));
        }
        if !(self.t_end.is_finite() && self.t_end > 0.0) {
            return Err(Error::InvalidParameter(format!("t_end must be > 0, got {}", self.t_end)));
        }
        if self.dt > self.t_end {
            return Err(Error::InvalidParameter(format!(
                "dt ({}) exceeds t_end ({})",
                self.dt, self.t_end
            )));
        }
        if self.record_stride == 0 {
            return Err(Error::InvalidParameter("record_stride must be >= 1".into()));
        }
        if self.t_end / self.dt > 1e15 {
            return Err(Error::InvalidParameter("too many integration steps".into()));
        }
        Ok(())
    }

    /// Number of steps, `ceil(t_end / dt)` with a relative tolerance so that
    /// e.g. `100 / 0.01` counts as an exact multiple.
    pub fn steps(&self) -> u64 {
        let ratio = self.t_end / self.dt;
        let nearest = ratio.round();
        if (ratio - nearest).abs() <= 1e-9 * nearest.max(1.0) {
            nearest as u64
        } else {
            ratio.ceil() as u64
        }
    }

    /// Time after `step` steps; the final step lands exactly on `t_end`.
    pub fn time_at(&self, step: u64) -> f64 {
        if step >= self.steps() {
            self.t_end
        } else {
            step as f64 * self.dt
        }
    }
}

/// Run provenance carried by a [`Trajectory`].
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryMeta {
    pub params: ModelParams,
    pub adjacency: String,
    pub seed: Option<u64>,
    pub config: IntegrationConfig,
    /// Set when any amplitude went negative at any integration step.
    pub negative_amplitude: bool,
}

/// Recorded snapshots of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<SystemState>,
    meta: TrajectoryMeta,
}

impl Trajectory {
    pub fn new(times: Vec<f64>, states: Vec<SystemState>, meta: TrajectoryMeta) -> Result<Self> {
        if times.is_empty() {
            return Err(Error::InvalidParameter("trajectory has no snapshots".into()));
        }
        if times.len() != states.len() {
            return Err(Error::DimensionMismatch {
                what: "trajectory states",
                expected: times.len(),
                found: states.len(),
                index: None,
            });
        }
        if times[0] != 0.0 {
            return Err(Error::InvalidParameter(format!("trajectory starts at t = {}", times[0])));
        }
        if let Some(k) = times.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter(format!(
                "times not strictly increasing at index {}",
                k + 1
            )));
        }
        let n = states[0].n();
        if let Some(k) = states.iter().position(|s| s.n() != n) {
            return Err(Error::DimensionMismatch {
                what: "snapshot size",
                expected: n,
                found: states[k].n(),
                index: Some(k),
            });
        }
        Ok(Self { times, states, meta })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[SystemState] {
        &self.states
    }

    pub fn meta(&self) -> &TrajectoryMeta {
        &self.meta
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last(&self) -> &SystemState {
        self.states.last().expect("trajectory is non-empty")
    }
}

/// Reusable stage buffers for one trajectory.
#[derive(Debug, Default)]
struct Stepper {
    scratch: RhsScratch,
    k: [(Vec<f64>, Vec<f64>); 4],
    stage: (Vec<f64>, Vec<f64>),
}

impl Stepper {
    fn new(n: usize) -> Self {
        let pair = || (vec![0.0; n], vec![0.0; n]);
        Self {
            scratch: RhsScratch::default(),
            k: [pair(), pair(), pair(), pair()],
            stage: pair(),
        }
    }

    fn euler(&mut self, theta: &mut [f64], r: &mut [f64], params: &ModelParams, adj: &Adjacency, dt: f64) {
        let (kt, kr) = &mut self.k[0];
        kuramoto_rhs_into(theta, r, params, adj, &mut self.scratch, kt, kr);
        for i in 0..theta.len() {
            theta[i] += dt * kt[i];
            r[i] += dt * kr[i];
        }
    }

    fn rk4(&mut self, theta: &mut [f64], r: &mut [f64], params: &ModelParams, adj: &Adjacency, dt: f64) {
        let n = theta.len();
        let half = 0.5 * dt;
        let [k1, k2, k3, k4] = &mut self.k;
        let (st, sr) = &mut self.stage;

        kuramoto_rhs_into(theta, r, params, adj, &mut self.scratch, &mut k1.0, &mut k1.1);
        for i in 0..n {
            st[i] = theta[i] + half * k1.0[i];
            sr[i] = r[i] + half * k1.1[i];
        }
        kuramoto_rhs_into(st, sr, params, adj, &mut self.scratch, &mut k2.0, &mut k2.1);
        for i in 0..n {
            st[i] = theta[i] + half * k2.0[i];
            sr[i] = r[i] + half * k2.1[i];
        }
        kuramoto_rhs_into(st, sr, params, adj, &mut self.scratch, &mut k3.0, &mut k3.1);
        for i in 0..n {
            st[i] = theta[i] + dt * k3.0[i];
            sr[i] = r[i] + dt * k3.1[i];
        }
        kuramoto_rhs_into(st, sr, params, adj, &mut self.scratch, &mut k4.0, &mut k4.1);
        let sixth = dt / 6.0;
        for i in 0..n {
            theta[i] += sixth * (k1.0[i] + 2.0 * k2.0[i] + 2.0 * k3.0[i] + k4.0[i]);
            r[i] += sixth * (k1.1[i] + 2.0 * k2.1[i] + 2.0 * k3.1[i] + k4.1[i]);
        }
    }

    fn step(&mut self, method: Method, theta: &mut [f64], r: &mut [f64], params: &ModelParams, adj: &Adjacency, dt: f64) {
        match method {
            Method::Euler => self.euler(theta, r, params, adj, dt),
            Method::Rk4 => self.rk4(theta, r, params, adj, dt),
        }
    }
}

fn single_step(
    method: Method,
    state: &SystemState,
    params: &ModelParams,
    adjacency: &Adjacency,
    dt: f64,
) -> Result<SystemState> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidParameter(format!("dt must be > 0, got {dt}")));
    }
    check_shapes(state, params, adjacency)?;
    let mut theta = state.phases().to_vec();
    let mut r = state.amplitudes().to_vec();
    Stepper::new(state.n()).step(method, &mut theta, &mut r, params, adjacency, dt);
    crate::dynamics::check_finite("phase", &theta)?;
    crate::dynamics::check_finite("amplitude", &r)?;
    Ok(SystemState::from_raw(theta, r))
}

/// One explicit Euler step: `state + dt * rhs(state)`.
pub fn step_euler(state: &SystemState, params: &ModelParams, adjacency: &Adjacency, dt: f64) -> Result<SystemState> {
    single_step(Method::Euler, state, params, adjacency, dt)
}

/// One classical fourth-order Runge–Kutta step.
pub fn step_rk4(state: &SystemState, params: &ModelParams, adjacency: &Adjacency, dt: f64) -> Result<SystemState> {
    single_step(Method::Rk4, state, params, adjacency, dt)
}

/// Integrates from `t = 0` to `config.t_end`, recording the initial state,
/// every `record_stride`-th step and the final step.
pub fn simulate(
    initial: &SystemState,
    params: &ModelParams,
    adjacency: &Adjacency,
    config: &IntegrationConfig,
) -> Result<Trajectory> {
    simulate_seeded(initial, params, adjacency, config, None)
}

pub(crate) fn simulate_seeded(
    initial: &SystemState,
    params: &ModelParams,
    adjacency: &Adjacency,
    config: &IntegrationConfig,
    seed: Option<u64>,
) -> Result<Trajectory> {
    config.validate()?;
    check_shapes(initial, params, adjacency)?;

    let n = initial.n();
    let steps = config.steps();
    let stride = config.record_stride as u64;
    let capacity = (steps / stride + 2) as usize;
    let mut times = Vec::with_capacity(capacity);
    let mut states = Vec::with_capacity(capacity);

    let mut theta = initial.phases().to_vec();
    let mut r = initial.amplitudes().to_vec();
    let mut negative = r.iter().any(|&x| x < 0.0);
    let record = |theta: &[f64], r: &[f64]| SystemState::from_raw(theta.iter().map(|&t| wrap_angle(t)).collect(), r.to_vec());

    times.push(0.0);
    states.push(record(&theta, &r));

    let mut stepper = Stepper::new(n);
    let mut t_prev = 0.0;
    for step in 1..=steps {
        let t = config.time_at(step);
        stepper.step(config.method, &mut theta, &mut r, params, adjacency, t - t_prev);
        t_prev = t;

        for i in 0..n {
            let ri = r[i];
            if !(ri.abs() <= DIVERGENCE_THRESHOLD) || !theta[i].is_finite() {
                return Err(Error::Divergence {
                    step,
                    time: t,
                    node: i,
                    value: ri,
                });
            }
            negative |= ri < 0.0;
        }

        if step % stride == 0 || step == steps {
            times.push(t);
            states.push(record(&theta, &r));
        }
    }

    Trajectory::new(
        times,
        states,
        TrajectoryMeta {
            params: params.clone(),
            adjacency: adjacency.describe(),
            seed,
            config: *config,
            negative_amplitude: negative,
        },
    )
}

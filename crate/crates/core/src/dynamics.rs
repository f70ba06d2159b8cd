//! State types and right-hand sides.
//!
//! The general networked system evolves node states `x_i ∈ R^d` as
//!
//! ```text
//! dx_i/dt = F_i(x_i) + (ε/N) Σ_j A_ij H_ij(x_i, x_j)
//! ```
//!
//! and the amplitude-phase Kuramoto model is its `d = 2` instance in polar
//! coordinates `(θ_i, r_i)`:
//!
//! ```text
//! dθ_i/dt = ω_i + (ε/N) Σ_j A_ij r_j sin(θ_j − θ_i)
//! dr_i/dt = r_i(λ − r_i²) + (ε/N) Σ_j A_ij r_j cos(θ_j − θ_i)
//! ```
//!
//! The prefactor divides by the total node count, never by node degree.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::topology::Adjacency;

/// Phases (radians, unwrapped) and amplitudes of all agents at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemState {
    phases: Vec<f64>,
    amplitudes: Vec<f64>,
}

impl SystemState {
    /// Checked constructor: equal non-zero lengths, finite values and
    /// non-negative amplitudes.
    pub fn new(phases: Vec<f64>, amplitudes: Vec<f64>) -> Result<Self> {
        if phases.is_empty() {
            return Err(Error::InvalidParameter("state needs at least one agent".into()));
        }
        if phases.len() != amplitudes.len() {
            return Err(Error::DimensionMismatch {
                what: "state amplitudes",
                expected: phases.len(),
                found: amplitudes.len(),
                index: None,
            });
        }
        check_finite("phases", &phases)?;
        check_finite("amplitudes", &amplitudes)?;
        if let Some(i) = amplitudes.iter().position(|&r| r < 0.0) {
            return Err(Error::InvalidParameter(format!(
                "amplitude {i} is negative ({})",
                amplitudes[i]
            )));
        }
        Ok(Self { phases, amplitudes })
    }

    /// All agents at the same phase and amplitude.
    pub fn synchronized(n: usize, phase: f64, amplitude: f64) -> Result<Self> {
        Self::new(vec![phase; n], vec![amplitude; n])
    }

    /// Integrator states may carry negative amplitudes; shapes are trusted.
    pub(crate) fn from_raw(phases: Vec<f64>, amplitudes: Vec<f64>) -> Self {
        debug_assert_eq!(phases.len(), amplitudes.len());
        Self { phases, amplitudes }
    }

    pub fn n(&self) -> usize {
        self.phases.len()
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>) {
        (self.phases, self.amplitudes)
    }
}

/// Amplitude growth `λ`, coupling strength `ε` and natural frequencies `ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    lambda: f64,
    epsilon: f64,
    omega: Vec<f64>,
}

impl ModelParams {
    pub fn new(lambda: f64, epsilon: f64, omega: Vec<f64>) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(Error::InvalidParameter(format!("lambda must be finite, got {lambda}")));
        }
        if !epsilon.is_finite() || epsilon < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be finite and >= 0, got {epsilon}"
            )));
        }
        check_finite("omega", &omega)?;
        Ok(Self { lambda, epsilon, omega })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn omega(&self) -> &[f64] {
        &self.omega
    }

    pub fn n(&self) -> usize {
        self.omega.len()
    }
}

/// Time derivative of a [`SystemState`].
#[derive(Debug, Clone, PartialEq)]
pub struct StateDerivative {
    pub dphases: Vec<f64>,
    pub damplitudes: Vec<f64>,
}

/// Local dynamics `F_i: R^d -> R^d`.
pub type NodeFn<'a> = Box<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync + 'a>;
/// Coupling `H_ij(x_i, x_j) -> R^d`, given the ordered pair `(i, j)`.
pub type PairFn<'a> = Box<dyn Fn(usize, usize, &[f64], &[f64]) -> Vec<f64> + Send + Sync + 'a>;

/// A networked system of `N` nodes with `d`-dimensional state each.
pub struct GeneralNodeSystem<'a> {
    dim: usize,
    node_dynamics: Vec<NodeFn<'a>>,
    pair_coupling: PairFn<'a>,
}

impl<'a> GeneralNodeSystem<'a> {
    pub fn new(dim: usize, node_dynamics: Vec<NodeFn<'a>>, pair_coupling: PairFn<'a>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("node state dimension must be positive".into()));
        }
        if node_dynamics.is_empty() {
            return Err(Error::InvalidParameter("system needs at least one node".into()));
        }
        Ok(Self {
            dim,
            node_dynamics,
            pair_coupling,
        })
    }

    /// The amplitude-phase Kuramoto model written as a general system with
    /// node state `(θ, r)`.
    pub fn kuramoto_polar(params: &'a ModelParams) -> Self {
        let lambda = params.lambda();
        let node_dynamics = params
            .omega()
            .iter()
            .map(|&w| -> NodeFn<'a> { Box::new(move |x: &[f64]| vec![w, x[1] * (lambda - x[1] * x[1])]) })
            .collect();
        let pair_coupling: PairFn<'a> = Box::new(|_, _, xi: &[f64], xj: &[f64]| {
            let d = xj[0] - xi[0];
            vec![xj[1] * d.sin(), xj[1] * d.cos()]
        });
        Self {
            dim: 2,
            node_dynamics,
            pair_coupling,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.node_dynamics.len()
    }
}

/// Polar node vectors `[θ_i, r_i]` for use with [`GeneralNodeSystem::kuramoto_polar`].
pub fn polar_states(state: &SystemState) -> Vec<Vec<f64>> {
    state
        .phases()
        .iter()
        .zip(state.amplitudes())
        .map(|(&t, &r)| vec![t, r])
        .collect()
}

/// Evaluates `F_i(x_i) + (ε/N) Σ_j A_ij H_ij(x_i, x_j)` for every node.
pub fn eval_general_rhs(
    system: &GeneralNodeSystem<'_>,
    states: &[Vec<f64>],
    adjacency: &Adjacency,
    epsilon: f64,
) -> Result<Vec<Vec<f64>>> {
    let n = system.n();
    let d = system.dim();
    if states.len() != n {
        return Err(Error::DimensionMismatch {
            what: "node states",
            expected: n,
            found: states.len(),
            index: None,
        });
    }
    if adjacency.n() != n {
        return Err(Error::DimensionMismatch {
            what: "adjacency",
            expected: n,
            found: adjacency.n(),
            index: None,
        });
    }
    if let Some(i) = states.iter().position(|x| x.len() != d) {
        return Err(Error::DimensionMismatch {
            what: "node state",
            expected: d,
            found: states[i].len(),
            index: Some(i),
        });
    }

    let scale = epsilon / n as f64;
    let mut out = Vec::with_capacity(n);
    for (i, (f, xi)) in system.node_dynamics.iter().zip(states).enumerate() {
        let mut acc = f(xi);
        if acc.len() != d {
            return Err(Error::DimensionMismatch {
                what: "node dynamics output",
                expected: d,
                found: acc.len(),
                index: Some(i),
            });
        }
        let mut coupling = vec![0.0; d];
        for &(j, a) in adjacency.row(i) {
            let h = (system.pair_coupling)(i, j, xi, &states[j]);
            if h.len() != d {
                return Err(Error::DimensionMismatch {
                    what: "pair coupling output",
                    expected: d,
                    found: h.len(),
                    index: Some(j),
                });
            }
            for (c, hk) in coupling.iter_mut().zip(&h) {
                *c += f64::from(a) * hk;
            }
        }
        for (v, c) in acc.iter_mut().zip(&coupling) {
            *v += scale * c;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Reusable buffers for the Kuramoto right-hand side.
#[derive(Debug, Clone, Default)]
pub(crate) struct RhsScratch {
    cos: Vec<f64>,
    sin: Vec<f64>,
}

/// Allocation-free Kuramoto right-hand side.
///
/// Uses `r_j sin(θ_j − θ_i) = y_j cos θ_i − x_j sin θ_i` with
/// `(x_j, y_j) = r_j (cos θ_j, sin θ_j)`, so trigonometry is `O(N)` per
/// evaluation. Neighbor sums run in ascending `j` for each `i`.
pub(crate) fn kuramoto_rhs_into(
    phases: &[f64],
    amplitudes: &[f64],
    params: &ModelParams,
    adjacency: &Adjacency,
    scratch: &mut RhsScratch,
    dphases: &mut [f64],
    damplitudes: &mut [f64],
) {
    let n = phases.len();
    scratch.cos.resize(n, 0.0);
    scratch.sin.resize(n, 0.0);
    for (j, &theta) in phases.iter().enumerate() {
        let (s, c) = theta.sin_cos();
        scratch.sin[j] = s;
        scratch.cos[j] = c;
    }
    let lambda = params.lambda();
    let scale = params.epsilon() / n as f64;
    let omega = params.omega();
    for i in 0..n {
        let mut sx = 0.0;
        let mut sy = 0.0;
        for &(j, a) in adjacency.row(i) {
            let w = f64::from(a) * amplitudes[j];
            sx += w * scratch.cos[j];
            sy += w * scratch.sin[j];
        }
        let (si, ci) = (scratch.sin[i], scratch.cos[i]);
        let r = amplitudes[i];
        dphases[i] = omega[i] + scale * (sy * ci - sx * si);
        damplitudes[i] = r * (lambda - r * r) + scale * (sx * ci + sy * si);
    }
}

pub(crate) fn check_shapes(state: &SystemState, params: &ModelParams, adjacency: &Adjacency) -> Result<()> {
    let n = state.n();
    if params.n() != n {
        return Err(Error::DimensionMismatch {
            what: "natural frequencies",
            expected: n,
            found: params.n(),
            index: None,
        });
    }
    if adjacency.n() != n {
        return Err(Error::DimensionMismatch {
            what: "adjacency",
            expected: n,
            found: adjacency.n(),
            index: None,
        });
    }
    Ok(())
}

/// Amplitude-phase Kuramoto right-hand side.
pub fn eval_kuramoto_rhs(
    state: &SystemState,
    params: &ModelParams,
    adjacency: &Adjacency,
) -> Result<StateDerivative> {
    check_shapes(state, params, adjacency)?;
    check_finite("phases", state.phases())?;
    check_finite("amplitudes", state.amplitudes())?;
    let n = state.n();
    let mut dphases = vec![0.0; n];
    let mut damplitudes = vec![0.0; n];
    kuramoto_rhs_into(
        state.phases(),
        state.amplitudes(),
        params,
        adjacency,
        &mut RhsScratch::default(),
        &mut dphases,
        &mut damplitudes,
    );
    check_finite("phase derivative", &dphases)?;
    check_finite("amplitude derivative", &damplitudes)?;
    Ok(StateDerivative { dphases, damplitudes })
}

/// Maps an angle into `[0, 2π)`.
#[inline]
pub fn wrap_angle(theta: f64) -> f64 {
    let w = theta.rem_euclid(TAU);
    // rem_euclid rounds tiny negative inputs up to exactly 2π.
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Canonicalizes every phase into `[0, 2π)`; amplitudes are untouched.
pub fn wrap_phases(state: &SystemState) -> SystemState {
    SystemState {
        phases: state.phases.iter().map(|&t| wrap_angle(t)).collect(),
        amplitudes: state.amplitudes.clone(),
    }
}

/// Common amplitude `sqrt(λ + ε(n−1)/n)` of the phase-locked state of `n`
/// identical all-to-all agents without self-coupling.
pub fn sync_amplitude_fixed_point(lambda: f64, epsilon: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let radicand = lambda + epsilon * (n - 1) as f64 / n as f64;
    if radicand < 0.0 || radicand.is_nan() {
        return Err(Error::NoRealFixedPoint { radicand });
    }
    Ok(radicand.sqrt())
}

pub(crate) fn check_finite(what: &'static str, values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(index) => Err(Error::NonFinite {
            what,
            index,
            value: values[index],
        }),
        None => Ok(()),
    }
}

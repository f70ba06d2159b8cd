//! Amplitude-phase Kuramoto dynamics of heterogeneous agents on networks.
//!
//! Each agent `i` carries a phase `θ_i` and an amplitude `r_i`:
//!
//! ```text
//! dθ_i/dt = ω_i + (ε/N) Σ_j A_ij r_j sin(θ_j − θ_i)
//! dr_i/dt = r_i(λ − r_i²) + (ε/N) Σ_j A_ij r_j cos(θ_j − θ_i)
//! ```
//!
//! Collective coherence is measured by the amplitude-weighted order parameter
//! `R = |(1/N) Σ_j r_j e^{iθ_j}|`.
//!
//! * [`dynamics`]: state types, the general networked right-hand side and its
//!   Kuramoto instance.
//! * [`topology`]: complete and deterministic scale-free networks, edge lists.
//! * [`integrate`]: fixed-step Euler/RK4 and trajectory recording.
//! * [`observables`]: raw and normalized order parameter, time averages.
//! * [`experiments`]: seeded runs, `(σ, ε)` sweeps, CSV tables.
//! * [`config`]: TOML run configuration and the embedded presets.
//! * [`cli`]: the `syncagents` command-line front end.

pub mod cli;
pub mod config;
pub mod dynamics;
pub mod error;
pub mod experiments;
pub mod integrate;
pub mod observables;
pub mod topology;

pub use dynamics::{
    eval_general_rhs, eval_kuramoto_rhs, sync_amplitude_fixed_point, wrap_phases, GeneralNodeSystem, ModelParams,
    StateDerivative, SystemState,
};
pub use error::{Error, Result};
pub use experiments::{
    initial_state, run_single, run_sweep, sample_frequencies, ExperimentSpec, RunPoint, RunStatus, SweepRecord,
    TopologySpec,
};
pub use integrate::{simulate, step_euler, step_rk4, IntegrationConfig, Method, Trajectory};
pub use observables::{mean_order_parameter, normalized_order_parameter, order_parameter, order_series, OrderSeries};
pub use topology::{all_to_all, deterministic_scale_free, load_adjacency, save_adjacency, validate, Adjacency};

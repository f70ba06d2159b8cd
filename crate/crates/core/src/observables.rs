//! Synchronization order parameter.
//!
//! The raw order parameter is the magnitude of the amplitude-weighted mean
//! phasor, `R = |(1/N) Σ_j r_j e^{iθ_j}|`. Since amplitudes are not bounded
//! by 1, raw `R` can exceed 1; the normalized variant divides by the total
//! amplitude instead and always lies in `[0, 1]`.

use crate::dynamics::SystemState;
use crate::error::{Error, Result};
use crate::integrate::Trajectory;

/// Default fraction of the run discarded before time-averaging.
pub const DEFAULT_TRANSIENT_FRACTION: f64 = 0.5;

fn phasor_sum(state: &SystemState) -> (f64, f64) {
    state
        .phases()
        .iter()
        .zip(state.amplitudes())
        .fold((0.0, 0.0), |(re, im), (&t, &r)| {
            let (s, c) = t.sin_cos();
            (re + r * c, im + r * s)
        })
}

/// `|(1/N) Σ r_j e^{iθ_j}|`.
pub fn order_parameter(state: &SystemState) -> f64 {
    let (re, im) = phasor_sum(state);
    re.hypot(im) / state.n() as f64
}

/// `|Σ r_j e^{iθ_j}| / Σ |r_j|`, in `[0, 1]`.
pub fn normalized_order_parameter(state: &SystemState) -> Result<f64> {
    let total: f64 = state.amplitudes().iter().map(|r| r.abs()).sum();
    if total <= 0.0 {
        return Err(Error::ZeroAmplitude);
    }
    let (re, im) = phasor_sum(state);
    Ok((re.hypot(im) / total).min(1.0))
}

/// Raw and normalized order parameter at every recorded time.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderSeries {
    pub times: Vec<f64>,
    pub raw: Vec<f64>,
    /// `NaN` where every amplitude is zero.
    pub normalized: Vec<f64>,
}

impl OrderSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Mean of `raw` and `normalized` over samples with `t >= cut`.
    pub fn tail_means(&self, cut: f64) -> Result<(f64, f64)> {
        let mut count = 0usize;
        let mut raw = 0.0;
        let mut norm = 0.0;
        for ((&t, &r), &q) in self.times.iter().zip(&self.raw).zip(&self.normalized) {
            if t >= cut {
                count += 1;
                raw += r;
                norm += q;
            }
        }
        if count == 0 {
            return Err(Error::EmptyWindow { cut });
        }
        Ok((raw / count as f64, norm / count as f64))
    }
}

/// Earliest recorded time after which raw `R` stays within
/// `tolerance * plateau` of `plateau`, the raw tail mean past `cut`.
/// `None` if the final sample is itself outside the band.
pub fn settling_time(series: &OrderSeries, cut: f64, tolerance: f64) -> Result<Option<f64>> {
    let (plateau, _) = series.tail_means(cut)?;
    let band = tolerance * plateau.abs();
    let mut settled = None;
    for (&t, &r) in series.times.iter().zip(&series.raw).rev() {
        if (r - plateau).abs() > band {
            break;
        }
        settled = Some(t);
    }
    Ok(settled)
}

pub fn order_series(trajectory: &Trajectory) -> OrderSeries {
    let states = trajectory.states();
    OrderSeries {
        times: trajectory.times().to_vec(),
        raw: states.iter().map(order_parameter).collect(),
        normalized: states
            .iter()
            .map(|s| normalized_order_parameter(s).unwrap_or(f64::NAN))
            .collect(),
    }
}

fn transient_cut(trajectory: &Trajectory, transient_fraction: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&transient_fraction) {
        return Err(Error::InvalidParameter(format!(
            "transient fraction must be in [0, 1), got {transient_fraction}"
        )));
    }
    Ok(transient_fraction * trajectory.meta().config.t_end)
}

/// Time average of raw `R` over snapshots with
/// `t >= transient_fraction * t_end`.
pub fn mean_order_parameter(trajectory: &Trajectory, transient_fraction: f64) -> Result<f64> {
    let cut = transient_cut(trajectory, transient_fraction)?;
    let window: Vec<f64> = trajectory
        .times()
        .iter()
        .zip(trajectory.states())
        .filter(|(&t, _)| t >= cut)
        .map(|(_, s)| order_parameter(s))
        .collect();
    if window.is_empty() {
        return Err(Error::EmptyWindow { cut });
    }
    Ok(window.iter().sum::<f64>() / window.len() as f64)
}

/// Time average of normalized `R` over the same window as
/// [`mean_order_parameter`].
pub fn mean_normalized_order_parameter(trajectory: &Trajectory, transient_fraction: f64) -> Result<f64> {
    let cut = transient_cut(trajectory, transient_fraction)?;
    let mut sum = 0.0;
    let mut count = 0usize;
    for (&t, s) in trajectory.times().iter().zip(trajectory.states()) {
        if t >= cut {
            sum += normalized_order_parameter(s)?;
            count += 1;
        }
    }
    if count == 0 {
        return Err(Error::EmptyWindow { cut });
    }
    Ok(sum / count as f64)
}

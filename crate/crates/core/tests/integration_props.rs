use syncagents::experiments::rng::{stream_seed, Stream};
use syncagents::experiments::{point_seed, run_trajectory};
use syncagents::*;

fn cfg(dt: f64, t_end: f64, stride: usize, method: Method) -> IntegrationConfig {
    IntegrationConfig {
        dt,
        t_end,
        record_stride: stride,
        method,
    }
}

fn closed_form(r0: f64, lambda: f64, t: f64) -> f64 {
    r0 * (lambda * t).exp() / (1.0 + r0 * r0 * ((2.0 * lambda * t).exp() - 1.0) / lambda).sqrt()
}

fn slope(method: Method) -> f64 {
    let adj = all_to_all(3).unwrap();
    let r0 = [0.5, 1.7, 0.1];
    let lambda = 1.3;
    let params = ModelParams::new(lambda, 0.0, vec![0.4, -1.0, 2.0]).unwrap();
    let init = SystemState::new(vec![0.0, 1.0, 2.0], r0.to_vec()).unwrap();
    let dts = [0.1, 0.05, 0.025, 0.0125];
    let pts: Vec<(f64, f64)> = dts
        .iter()
        .map(|&dt| {
            let traj = simulate(&init, &params, &adj, &cfg(dt, 1.0, 1000, method)).unwrap();
            let err = traj
                .last()
                .amplitudes()
                .iter()
                .zip(r0)
                .map(|(r, r0)| (r - closed_form(r0, lambda, 1.0)).abs())
                .fold(0.0, f64::max);
            (dt.ln(), err.ln())
        })
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    num / den
}

#[test]
fn convergence_orders() {
    let rk4 = slope(Method::Rk4);
    let euler = slope(Method::Euler);
    assert!((3.5..=4.5).contains(&rk4), "rk4 slope {rk4}");
    assert!((0.8..=1.2).contains(&euler), "euler slope {euler}");
}

#[test]
fn identical_inputs_give_identical_trajectories() {
    let adj = deterministic_scale_free(2).unwrap();
    let point = RunPoint {
        integration: cfg(0.01, 10.0, 5, Method::Rk4),
        ..RunPoint::new(3.0, 0.3, 8)
    };
    assert_eq!(run_trajectory(&adj, &point).unwrap(), run_trajectory(&adj, &point).unwrap());
}

#[test]
fn fixed_point_is_preserved() {
    for (n, eps, lambda) in [(2, 1.0, 1.0), (10, 5.0, 1.0), (5, 0.5, 2.0)] {
        let r_star = sync_amplitude_fixed_point(lambda, eps, n).unwrap();
        let init = SystemState::synchronized(n, 0.7, r_star).unwrap();
        let params = ModelParams::new(lambda, eps, vec![0.3; n]).unwrap();
        let traj = simulate(&init, &params, &all_to_all(n).unwrap(), &cfg(0.01, 100.0, 100, Method::Rk4)).unwrap();
        for (t, s) in traj.times().iter().zip(traj.states()) {
            let phase0 = (0.7 + 0.3 * t).rem_euclid(std::f64::consts::TAU);
            for i in 0..n {
                assert!((s.amplitudes()[i] - r_star).abs() < 1e-6);
                let d = (s.phases()[i] - phase0).abs();
                assert!(d.min(std::f64::consts::TAU - d) < 1e-6, "t={t}");
            }
        }
    }
}

#[test]
fn coarser_stride_is_a_subsequence() {
    let adj = all_to_all(5).unwrap();
    let params = ModelParams::new(1.0, 2.0, vec![0.1, -0.3, 0.5, 0.0, 0.2]).unwrap();
    let init = initial_state(5, 4).unwrap();
    let fine = simulate(&init, &params, &adj, &cfg(0.01, 3.33, 3, Method::Rk4)).unwrap();
    let coarse = simulate(&init, &params, &adj, &cfg(0.01, 3.33, 6, Method::Rk4)).unwrap();
    for (t, s) in coarse.times().iter().zip(coarse.states()) {
        let k = fine.times().iter().position(|u| u == t).expect("shared time");
        assert_eq!(&fine.states()[k], s);
    }
    assert_eq!(fine.times().last(), coarse.times().last());
}

#[test]
fn initial_state_ranges_over_many_seeds() {
    for seed in 0..1000u64 {
        let s = initial_state(10, seed).unwrap();
        assert!(s.phases().iter().all(|t| (0.0..std::f64::consts::TAU).contains(t)));
        assert!(s.amplitudes().iter().all(|r| (0.5..=1.5).contains(r)));
    }
}

/// One-sample Kolmogorov–Smirnov statistic against Uniform(lo, hi).
fn ks_uniform(mut xs: Vec<f64>, lo: f64, hi: f64) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = (x - lo) / (hi - lo);
            (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max)
}

#[test]
fn initial_state_is_uniform() {
    let mut phases = Vec::new();
    let mut amps = Vec::new();
    for seed in 0..1000u64 {
        let s = initial_state(100, seed).unwrap();
        phases.extend_from_slice(s.phases());
        amps.extend_from_slice(s.amplitudes());
    }
    assert_eq!(phases.len(), 100_000);
    // 1% critical value of the asymptotic KS distribution: 1.6276 / sqrt(n)
    let critical = 1.6276 / (phases.len() as f64).sqrt();
    let dp = ks_uniform(phases, 0.0, std::f64::consts::TAU);
    let da = ks_uniform(amps, 0.5, 1.5);
    assert!(dp < critical, "phase KS {dp} vs {critical}");
    assert!(da < critical, "amplitude KS {da} vs {critical}");
}

#[test]
fn replicates_draw_distinct_frequencies() {
    let draws: Vec<Vec<f64>> = (0..10)
        .map(|rep| sample_frequencies(0.0, 0.5, 10, stream_seed(point_seed(2025, 1, 3, rep), Stream::Frequencies)).unwrap())
        .collect();
    for a in 0..draws.len() {
        for b in a + 1..draws.len() {
            assert!(draws[a].iter().zip(&draws[b]).all(|(x, y)| x != y), "replicates {a} and {b}");
        }
    }
    let s = point_seed(2025, 0, 0, 0);
    assert_ne!(stream_seed(s, Stream::Frequencies), stream_seed(s, Stream::InitialState));
}

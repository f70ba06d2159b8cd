//! Error against the closed-form amplitude solution for RK4 and Euler.
//!
//! With no coupling each amplitude obeys `dr = r(λ - r²)`, which integrates to
//! `r(t) = r0 e^{λt} / sqrt(1 + r0² (e^{2λt} - 1) / λ)`.

use syncagents::*;

fn exact(r0: f64, lambda: f64, t: f64) -> f64 {
    r0 * (lambda * t).exp() / (1.0 + r0 * r0 * ((2.0 * lambda * t).exp() - 1.0) / lambda).sqrt()
}

fn main() -> Result<()> {
    let lambda = 1.0;
    let r0 = 0.3;
    let params = ModelParams::new(lambda, 0.0, vec![1.0])?;
    let init = SystemState::new(vec![0.0], vec![r0])?;
    let adj = all_to_all(1)?;

    for method in [Method::Euler, Method::Rk4] {
        println!("{method:?}");
        let mut prev: Option<f64> = None;
        for dt in [0.2, 0.1, 0.05, 0.025, 0.0125] {
            let cfg = IntegrationConfig { dt, t_end: 2.0, record_stride: 1, method };
            let traj = simulate(&init, &params, &adj, &cfg)?;
            let err = (traj.last().amplitudes()[0] - exact(r0, lambda, 2.0)).abs();
            let order = prev.map(|p| format!("{:.2}", (p / err).log2())).unwrap_or_default();
            println!("  dt {dt:<7} error {err:.3e}  {order}");
            prev = Some(err);
        }
    }
    Ok(())
}

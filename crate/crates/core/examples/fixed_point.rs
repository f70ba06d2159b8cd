//! Identical agents on a complete graph settle to a common amplitude
//! `sqrt(λ + ε(N-1)/N)`.

use syncagents::*;

fn main() -> Result<()> {
    let cfg = IntegrationConfig { t_end: 60.0, record_stride: 1000, ..IntegrationConfig::default() };
    println!("{:>3} {:>5} {:>5} {:>10} {:>10} {:>10}", "N", "eps", "lam", "predicted", "simulated", "R_norm");
    for (n, eps, lambda) in [(2, 1.0, 1.0), (10, 5.0, 1.0), (5, 0.5, 2.0), (8, 3.0, 0.5)] {
        let params = ModelParams::new(lambda, eps, vec![0.2; n])?;
        let traj = simulate(&initial_state(n, 11)?, &params, &all_to_all(n)?, &cfg)?;
        let last = traj.last();
        let mean = last.amplitudes().iter().sum::<f64>() / n as f64;
        println!(
            "{n:3} {eps:5} {lambda:5} {:10.6} {mean:10.6} {:10.6}",
            sync_amplitude_fixed_point(lambda, eps, n)?,
            normalized_order_parameter(last)?
        );
    }
    Ok(())
}

//! One heterogeneous run on a fully connected network of ten agents.
//!
//! `cargo run --release --example all_to_all_run -- [epsilon] [sigma] [seed]`

use syncagents::experiments::run_trajectory;
use syncagents::observables::settling_time;
use syncagents::*;

fn main() -> Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let epsilon = args.first().copied().unwrap_or(5.0);
    let sigma = args.get(1).copied().unwrap_or(0.5);
    let seed = args.get(2).map(|s| *s as u64).unwrap_or(2025);

    let adj = all_to_all(10)?;
    let point = RunPoint::new(epsilon, sigma, seed);
    let traj = run_trajectory(&adj, &point)?;
    let series = order_series(&traj);

    println!("{}  eps={epsilon} sigma={sigma} seed={seed}", adj.describe());
    println!("{:>8} {:>10} {:>10}", "t", "R_raw", "R_norm");
    for k in (0..series.len()).step_by(100) {
        println!("{:8.2} {:10.5} {:10.5}", series.times[k], series.raw[k], series.normalized[k]);
    }
    let (raw, norm) = series.tail_means(50.0)?;
    println!("tail mean R_raw {raw:.5}  R_norm {norm:.5}");
    match settling_time(&series, 50.0, 0.02)? {
        Some(t) => println!("settles within 0.02 of the tail mean by t = {t}"),
        None => println!("does not settle"),
    }
    let r = traj.last().amplitudes();
    println!("final amplitudes {:.4?}", r);
    Ok(())
}

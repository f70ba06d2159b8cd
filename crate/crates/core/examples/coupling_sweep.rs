//! A reduced coupling sweep: few epsilons, three replicates, shorter runs.
//! The full grids live in the `fig3` and `fig6` presets.

use syncagents::experiments::summary::{curves, spearman};
use syncagents::experiments::write_table;
use syncagents::*;

fn main() -> Result<()> {
    let spec = ExperimentSpec {
        topology: TopologySpec::AllToAll { n: 10 },
        lambda: 1.0,
        epsilons: vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0],
        sigmas: vec![0.1, 1.0],
        mu: 0.0,
        replicates: 3,
        base_seed: 7,
        integration: IntegrationConfig { t_end: 40.0, ..IntegrationConfig::default() },
        transient_fraction: 0.5,
    };
    let records = run_sweep(&spec)?;

    for c in curves(&records) {
        println!("sigma = {}  (spearman {:.3})", c.sigma, spearman(&c.epsilons(), &c.normalized()));
        for p in &c.points {
            let bar = "#".repeat((p.mean_r_normalized * 40.0).round() as usize);
            println!("  eps {:4.1}  {:.3}  {bar}", p.epsilon, p.mean_r_normalized);
        }
    }

    let mut out = Vec::new();
    write_table(&records, &mut out)?;
    print!("\n{}", String::from_utf8_lossy(&out).lines().take(4).collect::<Vec<_>>().join("\n"));
    println!("\n... {} rows", records.len());
    Ok(())
}

//! Loads a bundled preset, prints its effective configuration, and runs the
//! single-trajectory part of it.
//!
//! `cargo run --release --example presets -- [name]`

use syncagents::config::{preset, PRESETS};
use syncagents::experiments::run_trajectory;
use syncagents::*;

fn main() -> Result<()> {
    for p in PRESETS {
        println!("{:<16} {}", p.name, p.summary);
    }
    let name = std::env::args().nth(1).unwrap_or_else(|| "all2all_paper".into());
    let cfg = preset(&name)?;
    println!("\n# {name}\n{}", cfg.to_toml_string());

    let adj = cfg.topology()?.build()?;
    let point = cfg.run_point()?;
    let traj = run_trajectory(&adj, &point)?;
    println!(
        "{}: mean R_raw {:.4}, mean R_norm {:.4}",
        adj.describe(),
        mean_order_parameter(&traj, point.transient_fraction)?,
        observables::mean_normalized_order_parameter(&traj, point.transient_fraction)?
    );
    Ok(())
}

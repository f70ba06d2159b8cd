//! Raw and normalized order parameters on a few hand-made states.

use std::f64::consts::{FRAC_PI_2, PI};

use syncagents::*;

fn show(label: &str, s: &SystemState) -> Result<()> {
    println!(
        "{label:<28} R_raw {:.6}  R_norm {:.6}",
        order_parameter(s),
        normalized_order_parameter(s)?
    );
    Ok(())
}

fn main() -> Result<()> {
    show("aligned, unit amplitudes", &SystemState::synchronized(5, 0.3, 1.0)?)?;
    show("aligned, amplitude 2", &SystemState::synchronized(5, 0.3, 2.0)?)?;
    show("antipodal pair", &SystemState::new(vec![0.0, PI], vec![1.0, 1.0])?)?;
    show("antipodal, unequal radii", &SystemState::new(vec![0.0, PI], vec![2.0, 1.0])?)?;
    show("0, pi/2, pi; r = 1, 2, 0.5", &SystemState::new(vec![0.0, FRAC_PI_2, PI], vec![1.0, 2.0, 0.5])?)?;
    let n = 12;
    let spread = (0..n).map(|k| k as f64 * std::f64::consts::TAU / n as f64).collect();
    show("evenly spread, 12 agents", &SystemState::new(spread, vec![1.0; n])?)?;
    Ok(())
}

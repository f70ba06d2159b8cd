//! The general networked-ODE evaluator, first with the polar Kuramoto
//! embedding (checked against the specialised kernel), then with a custom
//! diffusively coupled scalar system on a ring.

use syncagents::dynamics::{polar_states, NodeFn};
use syncagents::*;

fn main() -> Result<()> {
    let params = ModelParams::new(1.0, 2.0, vec![0.1, -0.2, 0.3])?;
    let state = SystemState::new(vec![0.0, 1.0, 2.0], vec![0.5, 1.0, 1.5])?;
    let adj = all_to_all(3)?;

    let fast = eval_kuramoto_rhs(&state, &params, &adj)?;
    let general = eval_general_rhs(&GeneralNodeSystem::kuramoto_polar(&params), &polar_states(&state), &adj, 2.0)?;
    for i in 0..3 {
        println!(
            "node {i}: dtheta {:+.12} / {:+.12}   dr {:+.12} / {:+.12}",
            fast.dphases[i], general[i][0], fast.damplitudes[i], general[i][1]
        );
    }

    // x' = -x + (ε/N) Σ A_ij (x_j - x_i) on a 5-ring
    let n = 5;
    let ring: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let ring = Adjacency::from_edges(n, &ring)?;
    let nodes: Vec<NodeFn> = (0..n).map(|_| -> NodeFn { Box::new(|x: &[f64]| vec![-x[0]]) }).collect();
    let system = GeneralNodeSystem::new(1, nodes, Box::new(|_, _, xi: &[f64], xj: &[f64]| vec![xj[0] - xi[0]]))?;
    let x: Vec<Vec<f64>> = (0..n).map(|i| vec![i as f64]).collect();
    let dx = eval_general_rhs(&system, &x, &ring, 1.0)?;
    println!("ring diffusion: {:?}", dx.iter().map(|v| v[0]).collect::<Vec<_>>());
    Ok(())
}

use std::f64::consts::TAU;

use proptest::prelude::*;
use syncagents::dynamics::polar_states;
use syncagents::*;

/// Random symmetric zero-diagonal binary matrix from a bit pattern.
fn graph(n: usize, bits: &[bool]) -> Adjacency {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k % bits.len()] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Adjacency::from_edges(n, &edges).unwrap()
}

fn instance() -> impl Strategy<Value = (SystemState, ModelParams, Adjacency)> {
    (1usize..=8).prop_flat_map(|n| {
        (
            prop::collection::vec(-10.0f64..10.0, n),
            prop::collection::vec(0.0f64..3.0, n),
            prop::collection::vec(-2.0f64..2.0, n),
            -2.0f64..3.0,
            0.0f64..10.0,
            prop::collection::vec(any::<bool>(), 1..40),
        )
            .prop_map(move |(theta, r, omega, lambda, eps, bits)| {
                (
                    SystemState::new(theta, r).unwrap(),
                    ModelParams::new(lambda, eps, omega).unwrap(),
                    graph(n, &bits),
                )
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kuramoto_matches_general_system((state, params, adj) in instance()) {
        let d = eval_kuramoto_rhs(&state, &params, &adj).unwrap();
        let sys = GeneralNodeSystem::kuramoto_polar(&params);
        let g = eval_general_rhs(&sys, &polar_states(&state), &adj, params.epsilon()).unwrap();
        for i in 0..state.n() {
            prop_assert!((d.dphases[i] - g[i][0]).abs() <= 1e-12);
            prop_assert!((d.damplitudes[i] - g[i][1]).abs() <= 1e-12);
        }
    }

    #[test]
    fn common_phase_shift_is_invisible((state, params, adj) in instance(), c in -20.0f64..20.0) {
        let shifted = SystemState::new(
            state.phases().iter().map(|t| t + c).collect(),
            state.amplitudes().to_vec(),
        ).unwrap();
        let a = eval_kuramoto_rhs(&state, &params, &adj).unwrap();
        let b = eval_kuramoto_rhs(&shifted, &params, &adj).unwrap();
        for i in 0..state.n() {
            prop_assert!((a.dphases[i] - b.dphases[i]).abs() <= 1e-12);
            prop_assert!((a.damplitudes[i] - b.damplitudes[i]).abs() <= 1e-12);
        }
    }

    #[test]
    fn decoupled_limit((state, params, adj) in instance()) {
        let decoupled = ModelParams::new(params.lambda(), 0.0, params.omega().to_vec()).unwrap();
        let d = eval_kuramoto_rhs(&state, &decoupled, &adj).unwrap();
        for i in 0..state.n() {
            let r = state.amplitudes()[i];
            prop_assert_eq!(d.dphases[i], params.omega()[i]);
            prop_assert_eq!(d.damplitudes[i], r * (params.lambda() - r * r));
        }
    }

    #[test]
    fn permutation_equivariance((state, params, adj) in instance(), seed in any::<u64>()) {
        let n = state.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by a simple LCG; any permutation will do.
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let pick = |v: &[f64]| perm.iter().map(|&p| v[p]).collect::<Vec<f64>>();
        let pstate = SystemState::new(pick(state.phases()), pick(state.amplitudes())).unwrap();
        let pparams = ModelParams::new(params.lambda(), params.epsilon(), pick(params.omega())).unwrap();
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = adj.get(perm[i], perm[j]);
            }
        }
        let padj = Adjacency::from_dense(n, entries).unwrap();

        let d = eval_kuramoto_rhs(&state, &params, &adj).unwrap();
        let pd = eval_kuramoto_rhs(&pstate, &pparams, &padj).unwrap();
        for i in 0..n {
            prop_assert!((pd.dphases[i] - d.dphases[perm[i]]).abs() <= 1e-12);
            prop_assert!((pd.damplitudes[i] - d.damplitudes[perm[i]]).abs() <= 1e-12);
        }
    }

    #[test]
    fn zero_amplitude_is_intrinsic_fixed_point((state, params, adj) in instance(), k in 0usize..8) {
        let i = k % state.n();
        let mut r = state.amplitudes().to_vec();
        r[i] = 0.0;
        let s = SystemState::new(state.phases().to_vec(), r).unwrap();
        let p = ModelParams::new(params.lambda(), 0.0, params.omega().to_vec()).unwrap();
        prop_assert_eq!(eval_kuramoto_rhs(&s, &p, &adj).unwrap().damplitudes[i], 0.0);
    }

    #[test]
    fn wrapping_preserves_trig(theta in prop::collection::vec(-1e3f64..1e3, 1..10)) {
        let n = theta.len();
        let s = SystemState::new(theta.clone(), vec![1.0; n]).unwrap();
        let w = wrap_phases(&s);
        for (a, b) in theta.iter().zip(w.phases()) {
            prop_assert!((0.0..TAU).contains(b));
            prop_assert!((a.sin() - b.sin()).abs() < 1e-12);
            prop_assert!((a.cos() - b.cos()).abs() < 1e-12);
        }
    }
}

//! Portable seeded sampling.
//!
//! * Generator: xoshiro256++ seeded through SplitMix64 (`seed_from_u64`).
//! * Uniform `[0, 1)`: top 53 bits of a 64-bit output times `2^-53`.
//! * Normal: Box–Muller, `u1 ∈ (0, 1]`, `u2 ∈ [0, 1)`, yielding
//!   `sqrt(-2 ln u1) cos(2π u2)` then `sqrt(-2 ln u1) sin(2π u2)`.
//! * Seed splitting: [`derive_seed`] folds each component into a running
//!   hash with the SplitMix64 finalizer.

use std::f64::consts::TAU;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Sub-stream tags for [`derive_seed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    Frequencies = 1,
    InitialState = 2,
}

/// SplitMix64 output finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `h_0 = mix64(base)`, `h_{k+1} = mix64(h_k ^ mix64(part_k + (k+1)·γ))`.
pub fn derive_seed(base: u64, parts: &[u64]) -> u64 {
    parts.iter().enumerate().fold(mix64(base), |h, (k, &p)| {
        let salt = GOLDEN_GAMMA.wrapping_mul(k as u64 + 1);
        mix64(h ^ mix64(p.wrapping_add(salt)))
    })
}

pub fn stream_seed(seed: u64, stream: Stream) -> u64 {
    derive_seed(seed, &[stream as u64])
}

/// Seeded uniform and normal variates.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: Xoshiro256PlusPlus,
    spare_normal: Option<f64>,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: Xoshiro256PlusPlus::seed_from_u64(seed),
            spare_normal: None,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal by Box–Muller.
    pub fn standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let radius = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        self.spare_normal = Some(radius * s);
        radius * c
    }
}

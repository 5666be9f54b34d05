//! Seeded generic polynomials.
//!
//! The generator is SplitMix64 (state advanced by `0x9e3779b97f4a7c15`, output
//! mixed with the `0xbf58476d1ce4e5b9` / `0x94d049bb133111eb` multipliers).
//! A coefficient in `[-a, a]` is drawn by rejection: take 64-bit outputs until
//! one falls below the largest multiple of `2a + 1`, then reduce modulo `2a + 1`
//! and subtract `a`. Monomials are visited degree by degree in canonical order.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};

use super::{Monomial, Polynomial, Ring, Scalar};

/// Deterministic uniform integers on top of SplitMix64.
#[derive(Clone, Debug)]
pub struct CoefficientStream {
    rng: SplitMix64,
}

impl CoefficientStream {
    pub fn new(seed: u64) -> Self {
        CoefficientStream { rng: SplitMix64::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn symmetric(&mut self, bound: u64) -> i64 {
        if bound == 0 {
            return 0;
        }
        let span = 2 * bound + 1;
        let limit = u64::MAX - (u64::MAX % span);
        loop {
            let v = self.rng.next_u64();
            if v < limit {
                return (v % span) as i64 - bound as i64;
            }
        }
    }

    /// Uniform integer in `[0, n)`, `n > 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        let limit = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.rng.next_u64();
            if v < limit {
                return v % n;
            }
        }
    }
}

/// Sum of generic forms of degrees `from..=to` with coefficients in `[-bound, bound]`.
pub fn gen_pol(from: u32, to: u32, bound: u64, ring: &Ring, seed: u64) -> Result<Polynomial> {
    if from > to || to > ring.max_degree() {
        return Err(Error::InvalidRange { from, to });
    }
    let mut stream = CoefficientStream::new(seed);
    let mut terms = Vec::new();
    for d in from..=to {
        for m in Monomial::of_degree(ring.num_vars(), d) {
            let c = stream.symmetric(bound);
            terms.push((m, Scalar::from_i64(c, ring.characteristic())));
        }
    }
    Ok(Polynomial::from_terms(*ring, terms))
}

#![allow(dead_code)]

use std::collections::BTreeSet;

use macaulay::poly::{gen_pol, CoefficientStream};
use macaulay::{parse_poly, IdealHandle, Monomial, Polynomial, Ring, Scalar};

pub fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse_poly(s, ring).expect("fixture parses")).collect()
}

pub fn ideal(ring: &Ring, src: &[&str]) -> IdealHandle {
    IdealHandle::new(*ring, polys(ring, src)).expect("fixture ideal")
}

/// Pure powers `x_i^(e_i)` with small `e_i`, perturbed by higher terms, plus a
/// couple of generic polynomials without constant term. Always Artin.
pub fn random_artin_ideal(ring: &Ring, rng: &mut CoefficientStream) -> IdealHandle {
    let n = ring.num_vars();
    let mut gens = Vec::new();
    for i in 0..n {
        let e = 2 + rng.below(if n == 3 { 2 } else { 3 }) as u32;
        let mut exps = vec![0u32; n];
        exps[i] = e;
        let power = Polynomial::monomial(*ring, &exps);
        let tail = if rng.below(2) == 0 {
            Polynomial::zero(*ring)
        } else {
            gen_pol(e + 1, e + 1, 1, ring, rng.next_u64()).unwrap()
        };
        gens.push(&power + &tail);
    }
    for _ in 0..rng.below(3) {
        let lo = 2 + rng.below(2) as u32;
        gens.push(gen_pol(lo, lo + 1, 2, ring, rng.next_u64()).unwrap());
    }
    IdealHandle::new(*ring, gens).unwrap()
}

/// One or two generic polynomials of degree at most 3 (4 in two variables).
pub fn random_module_generators(ring: &Ring, rng: &mut CoefficientStream) -> Vec<Polynomial> {
    let top = if ring.num_vars() == 3 { 3 } else { 4 };
    let count = 1 + rng.below(2);
    (0..count)
        .map(|_| {
            let to = 1 + rng.below(top) as u32;
            let from = rng.below(to as u64 + 1) as u32;
            let p = gen_pol(from, to, 2, ring, rng.next_u64()).unwrap();
            if p.is_zero() {
                Polynomial::var(*ring, 0)
            } else {
                p
            }
        })
        .collect()
}

pub fn random_rational(rng: &mut CoefficientStream, bound: u64) -> Scalar {
    use num_bigint::BigInt;
    let num = rng.symmetric(bound);
    let den = 1 + rng.below(bound) as i64;
    Scalar::from_fraction(&BigInt::from(num), &BigInt::from(den), 0).unwrap()
}

pub fn random_nonzero_rational(rng: &mut CoefficientStream, bound: u64) -> Scalar {
    loop {
        let q = random_rational(rng, bound);
        if !q.is_zero() {
            return q;
        }
    }
}

/// A monomial ideal given by exponent vectors; pure powers of every variable
/// are always included so that the quotient is Artin.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    pub num_vars: usize,
    pub generators: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    pub fn random(num_vars: usize, rng: &mut CoefficientStream) -> Self {
        let mut generators = Vec::new();
        for i in 0..num_vars {
            let mut e = vec![0u32; num_vars];
            e[i] = 1 + rng.below(4) as u32;
            generators.push(e);
        }
        for _ in 0..rng.below(4) {
            let e: Vec<u32> = (0..num_vars).map(|_| rng.below(3) as u32).collect();
            if e.iter().any(|&x| x > 0) {
                generators.push(e);
            }
        }
        MonomialIdeal { num_vars, generators }
    }

    pub fn handle(&self, ring: &Ring) -> IdealHandle {
        let gens = self.generators.iter().map(|e| Polynomial::monomial(*ring, e)).collect();
        IdealHandle::new(*ring, gens).unwrap()
    }

    fn divisible(&self, e: &[u32]) -> bool {
        self.generators.iter().any(|g| g.iter().zip(e).all(|(a, b)| a <= b))
    }

    /// Exponent vectors outside the ideal, by enumeration of the box below the pure powers.
    pub fn staircase(&self) -> BTreeSet<Vec<u32>> {
        let bounds: Vec<u32> = (0..self.num_vars)
            .map(|i| {
                self.generators
                    .iter()
                    .filter(|g| g.iter().enumerate().all(|(k, &x)| (k == i) == (x > 0)))
                    .map(|g| g[i])
                    .min()
                    .expect("pure power present")
            })
            .collect();
        let mut out = BTreeSet::new();
        let mut e = vec![0u32; self.num_vars];
        loop {
            if !self.divisible(&e) {
                out.insert(e.clone());
            }
            let mut k = 0;
            loop {
                if k == self.num_vars {
                    return out;
                }
                e[k] += 1;
                if e[k] < bounds[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    /// Number of staircase monomials in each degree.
    pub fn staircase_counts(&self) -> Vec<usize> {
        let stairs = self.staircase();
        let top = stairs.iter().map(|e| e.iter().sum::<u32>()).max().unwrap_or(0);
        let mut counts = vec![0; top as usize + 1];
        for e in &stairs {
            counts[e.iter().sum::<u32>() as usize] += 1;
        }
        counts
    }
}

pub fn staircase_monomials(ideal: &MonomialIdeal, ring: &Ring) -> Vec<Polynomial> {
    ideal.staircase().iter().map(|e| Polynomial::term(*ring, Monomial::new(e.clone()), ring.one())).collect()
}

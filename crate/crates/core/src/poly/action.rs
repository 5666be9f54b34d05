//! The derivation and contraction actions of R on S, and the map σ between them.

use num_bigint::BigInt;

use crate::error::{Error, Result};

use super::{Action, Monomial, Polynomial, Scalar};

/// `β!/(β-α)!` as an integer, assuming `α ≤ β`.
pub(crate) fn falling_factorial(alpha: &Monomial, beta: &Monomial) -> BigInt {
    let mut acc = BigInt::from(1);
    for (&a, &b) in alpha.exponents().iter().zip(beta.exponents()) {
        for k in (b - a + 1)..=b {
            acc *= k;
        }
    }
    acc
}

/// `α! = Π αᵢ!`.
pub(crate) fn factorial(alpha: &Monomial) -> BigInt {
    falling_factorial(alpha, alpha)
}

fn act(f: &Polynomial, g: &Polynomial, weight: impl Fn(&Monomial, &Monomial) -> Option<Scalar>) -> Polynomial {
    let mut out = Polynomial::zero(*g.ring());
    for (alpha, a) in f.terms() {
        for (beta, b) in g.terms() {
            if let Some(rest) = alpha.quotient_of(beta) {
                let mut c = a * b;
                if let Some(w) = weight(alpha, beta) {
                    c = &c * &w;
                }
                out.add_term(rest, &c);
            }
        }
    }
    out
}

/// `f ∘ g` under contraction: `x^α ∘ x^β = x^(β-α)` when `α ≤ β`.
pub fn apply_contraction(f: &Polynomial, g: &Polynomial) -> Polynomial {
    act(f, g, |_, _| None)
}

/// `f ∘ g` under derivation (f acting as the differential operator f(∂)).
pub fn apply_derivation(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let ch = g.ring().characteristic();
    if ch != 0 {
        return Err(Error::CharacteristicViolation("the derivation action"));
    }
    Ok(act(f, g, |alpha, beta| Some(Scalar::from_bigint(&falling_factorial(alpha, beta), 0))))
}

pub fn apply(action: Action, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    match action {
        Action::Contraction => Ok(apply_contraction(f, g)),
        Action::Derivation => apply_derivation(f, g),
    }
}

/// σ: (S, der) → (S, cont), `x^α ↦ α! x^α`.
pub fn sigma(g: &Polynomial) -> Result<Polynomial> {
    scale_by_factorials(g, false)
}

/// Inverse of [`sigma`], `x^α ↦ x^α / α!`.
pub fn sigma_inverse(g: &Polynomial) -> Result<Polynomial> {
    scale_by_factorials(g, true)
}

fn scale_by_factorials(g: &Polynomial, invert: bool) -> Result<Polynomial> {
    let ch = g.ring().characteristic();
    if ch != 0 {
        return Err(Error::CharacteristicViolation("the map sigma"));
    }
    Ok(Polynomial::from_terms(
        *g.ring(),
        g.terms().map(|(m, c)| {
            let w = Scalar::from_bigint(&factorial(m), 0);
            let w = if invert { w.inverse().expect("factorials are nonzero") } else { w };
            (m.clone(), c * &w)
        }),
    ))
}

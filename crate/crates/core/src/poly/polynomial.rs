use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::{Monomial, Ring, Scalar};

/// A polynomial with exact coefficients, read either as a truncated element
/// of R or as an element of S. No stored coefficient is zero.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial { ring, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.num_vars()), c)
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn term(ring: Ring, monomial: Monomial, coefficient: Scalar) -> Self {
        debug_assert_eq!(monomial.num_vars(), ring.num_vars());
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        Polynomial { ring, terms }
    }

    pub fn monomial(ring: Ring, exponents: &[u32]) -> Self {
        Self::term(ring, Monomial::new(exponents.to_vec()), ring.one())
    }

    /// The variable `x_{index+1}` (zero-based index).
    pub fn var(ring: Ring, index: usize) -> Self {
        Self::term(ring, Monomial::var(ring.num_vars(), index), ring.one())
    }

    /// Sums repeated monomials and drops zeros.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                existing.add_assign_ref(c);
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn with_ring(mut self, ring: Ring) -> Self {
        debug_assert!(ring.compatible(&self.ring));
        self.ring = ring;
        self
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Lowest degree of a term (the order in R); `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.ring.num_vars()))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.order() == self.degree()
    }

    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        let terms =
            self.terms.iter().filter(|(m, _)| m.degree() == degree).map(|(m, c)| (m.clone(), c.clone())).collect();
        Polynomial { ring: self.ring, terms }
    }

    /// The homogeneous component of highest degree.
    pub fn top_form(&self) -> Result<Polynomial> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    /// Drops every term of degree above `bound`.
    pub fn truncate(&self, bound: u32) -> Polynomial {
        let terms =
            self.terms.iter().filter(|(m, _)| m.degree() <= bound).map(|(m, c)| (m.clone(), c.clone())).collect();
        Polynomial { ring: self.ring, terms }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring, terms }
    }

    /// Rescales so that the lowest term in canonical order has coefficient one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.values().next().and_then(Scalar::inverse) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn variables_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.ring.num_vars()];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring, terms }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.ring);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form, accepted back by [`super::parse_poly`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_rational();
            let magnitude = if negative { -c } else { c.clone() };
            if negative {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if m.degree() == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

//! Exact coefficients: reduced rationals in characteristic zero, residues
//! modulo a prime otherwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of ℚ or of 𝔽_p.
///
/// Mixing scalars of different characteristics is a logic error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(characteristic: u64) -> Self {
        Self::from_i64(0, characteristic)
    }

    pub fn one(characteristic: u64) -> Self {
        Self::from_i64(1, characteristic)
    }

    pub fn from_i64(value: i64, characteristic: u64) -> Self {
        if characteristic == 0 {
            Scalar::Rational(BigRational::from_integer(BigInt::from(value)))
        } else {
            let m = characteristic as i128;
            let r = (value as i128).rem_euclid(m) as u64;
            Scalar::Modular { residue: r, modulus: characteristic }
        }
    }

    pub fn from_bigint(value: &BigInt, characteristic: u64) -> Self {
        if characteristic == 0 {
            Scalar::Rational(BigRational::from_integer(value.clone()))
        } else {
            let m = BigInt::from(characteristic);
            let mut r = value % &m;
            if r.is_negative() {
                r += &m;
            }
            Scalar::Modular { residue: r.to_u64().expect("residue fits"), modulus: characteristic }
        }
    }

    /// `numerator / denominator`, failing when the denominator vanishes in the field.
    pub fn from_fraction(numerator: &BigInt, denominator: &BigInt, characteristic: u64) -> Result<Self> {
        let den = Self::from_bigint(denominator, characteristic);
        let inv = den.inverse().ok_or_else(|| Error::NonInvertibleCoefficient {
            denominator: denominator.to_string(),
            modulus: characteristic,
        })?;
        Ok(&Self::from_bigint(numerator, characteristic) * &inv)
    }

    pub fn from_rational(value: &BigRational, characteristic: u64) -> Result<Self> {
        Self::from_fraction(value.numer(), value.denom(), characteristic)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Scalar::Rational(_) => 0,
            Scalar::Modular { modulus, .. } => *modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { residue, modulus } => {
                Scalar::Modular { residue: pow_mod(*residue, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self * &inv)
    }

    /// Negative in the ordinary sense; only meaningful over ℚ.
    pub(crate) fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }

    pub fn add_assign_ref(&mut self, rhs: &Self) {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, modulus: m }) => {
                assert_eq!(modulus, m, "characteristic mismatch");
                *a = (*a + *b) % *modulus;
            }
            _ => panic!("characteristic mismatch"),
        }
    }

    /// `self -= factor * other`, the row-reduction kernel.
    pub(crate) fn sub_mul_assign(&mut self, factor: &Self, other: &Self) {
        match (self, factor, other) {
            (Scalar::Rational(a), Scalar::Rational(f), Scalar::Rational(b)) => *a -= f * b,
            (
                Scalar::Modular { residue: a, modulus },
                Scalar::Modular { residue: f, .. },
                Scalar::Modular { residue: b, .. },
            ) => {
                let p = *modulus;
                let prod = (*f as u128 * *b as u128 % p as u128) as u64;
                *a = (*a + p - prod) % p;
            }
            _ => panic!("characteristic mismatch"),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { residue: a, modulus }, Scalar::Modular { residue: b, modulus: m }) => {
                assert_eq!(modulus, m, "characteristic mismatch");
                Scalar::Modular { residue: (*a as u128 * *b as u128 % *modulus as u128) as u64, modulus: *modulus }
            }
            _ => panic!("characteristic mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { residue, modulus } => {
                Scalar::Modular { residue: (modulus - residue) % modulus, modulus: *modulus }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

use std::fmt;

use crate::error::{Error, Result};

use super::Scalar;

/// Default bound on the degrees searched when deciding Artinianity.
pub const DEFAULT_MAX_DEGREE: u32 = 64;

/// The two R-module structures on the polynomial ring S.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    /// `x^a ∘ x^b = b!/(b-a)! x^(b-a)`; characteristic zero only.
    Derivation,
    /// `x^a ∘ x^b = x^(b-a)`; any characteristic.
    Contraction,
}

impl Action {
    pub fn name(self) -> &'static str {
        match self {
            Action::Derivation => "der",
            Action::Contraction => "cont",
        }
    }

    pub(crate) fn check(self, characteristic: u64) -> Result<()> {
        if self == Action::Derivation && characteristic != 0 {
            return Err(Error::CharacteristicViolation("the derivation action"));
        }
        Ok(())
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ambient data shared by R = k[[x1..xn]] and S = k[x1..xn].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    num_vars: usize,
    characteristic: u64,
    default_action: Action,
    max_degree: u32,
}

impl Ring {
    /// A ring in `num_vars` variables over ℚ (`characteristic == 0`) or 𝔽_p.
    ///
    /// The default action is derivation in characteristic zero and contraction otherwise.
    pub fn new(num_vars: usize, characteristic: u64) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        if characteristic != 0 && (!is_prime(characteristic) || characteristic > u32::MAX as u64) {
            return Err(Error::InvalidRing(format!("characteristic {characteristic} is not a prime below 2^32")));
        }
        let default_action = if characteristic == 0 { Action::Derivation } else { Action::Contraction };
        Ok(Ring { num_vars, characteristic, default_action, max_degree: DEFAULT_MAX_DEGREE })
    }

    pub fn rational(num_vars: usize) -> Self {
        Self::new(num_vars, 0).expect("nonzero variable count")
    }

    pub fn with_action(mut self, action: Action) -> Result<Self> {
        action.check(self.characteristic)?;
        self.default_action = action;
        Ok(self)
    }

    pub fn with_max_degree(mut self, cap: u32) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InvalidRing("degree cap must be positive".into()));
        }
        self.max_degree = cap;
        Ok(self)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn default_action(&self) -> Action {
        self.default_action
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Same variables and coefficient field; caps and default actions may differ.
    pub fn compatible(&self, other: &Ring) -> bool {
        self.num_vars == other.num_vars && self.characteristic == other.characteristic
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.characteristic)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.characteristic)
    }

    pub fn scalar(&self, value: i64) -> Scalar {
        Scalar::from_i64(value, self.characteristic)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

//! Scalars, monomials, polynomials, their text form, and the two apolarity actions.

mod action;
mod monomial;
mod parse;
mod polynomial;
mod random;
mod ring;
mod scalar;

pub(crate) use action::factorial;
pub use action::{apply, apply_contraction, apply_derivation, sigma, sigma_inverse};
pub use monomial::{count_up_to, Monomial};
pub use parse::parse_poly;
pub use polynomial::Polynomial;
pub use random::{gen_pol, CoefficientStream};
pub use ring::{Action, Ring, DEFAULT_MAX_DEGREE};
pub use scalar::Scalar;

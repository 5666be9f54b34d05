//! Macaulay inverse systems for Artinian quotients of `k[[x1, ..., xn]]`.
//!
//! Everything is exact: coefficients live in ℚ or 𝔽_p and every question about
//! ideals of the power-series ring is reduced to finite-dimensional linear
//! algebra on truncations `R / m^(D+1)`, which is sound once `m^d ⊆ I` is known.

pub mod artin;
pub mod duality;
pub mod elliptic;
pub mod error;
pub mod linalg;
pub mod poly;

pub use artin::{ArtinStatus, GorensteinVerdict, HilbertFunction, IdealHandle, SocleIdeal};
pub use duality::{
    colon_inv_syst, eq_mod_ih, hilbert_via_inverse_system, ideal_ann, inv_syst, is_level_dual, member_ih, min_gens_ih,
    sub_mod_ih, SubmoduleHandle,
};
pub use elliptic::{
    classification_table, ideal_wj, ideal_wj_generators, is_nondegenerate, j_invariant, verify_row, weierstrass_ab,
    weierstrass_j, ClassificationRow, RowReport, WeierstrassCurve,
};
pub use error::{Error, Result};
pub use linalg::{Frame, SubspaceBasis};
pub use poly::{parse_poly, Action, Monomial, Polynomial, Ring, Scalar};

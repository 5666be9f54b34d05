//! Shared inputs for the criterion benchmarks.

use macaulay::{parse_poly, Polynomial, Ring};

/// The Gorenstein ideal of socle degree 4 from the reference session.
pub const GORENSTEIN_SESSION: [&str; 3] = ["x1^2+x2^3", "x2^4+x1^2", "x3^2+x1*x2"];

pub fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| parse_poly(s, ring).expect("benchmark input parses")).collect()
}

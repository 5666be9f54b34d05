//! Plane cubics and the Artin Gorenstein algebras with Hilbert function {1,3,3,1}.
//!
//! A nondegenerate cubic form `F` in three variables has `Ann(F)` generated by
//! quadrics and cubics; listing `F` up to projective equivalence lists the
//! algebras. The elliptic curves come in a one-parameter family `W(j)` with the
//! two special members `W(0)` and `W(1728)`.

use crate::artin::{HilbertFunction, IdealHandle};
use crate::duality::{ideal_ann, SubmoduleHandle};
use crate::error::{Error, Result};
use crate::poly::{parse_poly, Action, Polynomial, Ring, Scalar};

/// Curve `x2^2 x3 = x1^3 + a x1 x3^2 + b x3^3` with `4a^3 + 27b^2 ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    a: Scalar,
    b: Scalar,
}

impl WeierstrassCurve {
    pub fn new(a: Scalar, b: Scalar) -> Result<Self> {
        check_char_zero(a.characteristic())?;
        if discriminant_guard(&a, &b).is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(WeierstrassCurve { a, b })
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn j_invariant(&self) -> Scalar {
        let four_a3 = &Scalar::from_i64(4, 0) * &(&(&self.a * &self.a) * &self.a);
        let num = &Scalar::from_i64(1728, 0) * &four_a3;
        num.checked_div(&discriminant_guard(&self.a, &self.b)).expect("nonsingular")
    }

    /// `x1^3 + a x1 x3^2 + b x3^3 - x2^2 x3`.
    pub fn equation(&self, ring: &Ring) -> Result<Polynomial> {
        check_plane(ring)?;
        let mono = |e: [u32; 3], c: Scalar| Polynomial::term(*ring, crate::poly::Monomial::new(e.to_vec()), c);
        let mut f = mono([3, 0, 0], ring.one());
        f = &f + &mono([1, 0, 2], self.a.clone());
        f = &f + &mono([0, 0, 3], self.b.clone());
        f = &f - &mono([0, 2, 1], ring.one());
        Ok(f)
    }
}

fn discriminant_guard(a: &Scalar, b: &Scalar) -> Scalar {
    let a3 = &(a * a) * a;
    let b2 = b * b;
    &(&Scalar::from_i64(4, 0) * &a3) + &(&Scalar::from_i64(27, 0) * &b2)
}

fn check_char_zero(ch: u64) -> Result<()> {
    if ch != 0 {
        return Err(Error::CharacteristicViolation("plane cubic classification"));
    }
    Ok(())
}

fn check_plane(ring: &Ring) -> Result<()> {
    check_char_zero(ring.characteristic())?;
    if ring.num_vars() != 3 {
        return Err(Error::InvalidRing(format!("plane cubics need 3 variables, not {}", ring.num_vars())));
    }
    Ok(())
}

/// `1728 · 4a^3 / (4a^3 + 27b^2)`.
pub fn j_invariant(a: &Scalar, b: &Scalar) -> Result<Scalar> {
    Ok(WeierstrassCurve::new(a.clone(), b.clone())?.j_invariant())
}

pub fn weierstrass_ab(ring: &Ring, a: &Scalar, b: &Scalar) -> Result<Polynomial> {
    WeierstrassCurve::new(a.clone(), b.clone())?.equation(ring)
}

fn is_value(j: &Scalar, v: i64) -> bool {
    *j == Scalar::from_i64(v, 0)
}

/// A cubic with j-invariant `j`.
pub fn weierstrass_j(ring: &Ring, j: &Scalar) -> Result<Polynomial> {
    check_plane(ring)?;
    if is_value(j, 0) {
        return parse_poly("x2^2*x3+x2*x3^2-x1^3", ring);
    }
    if is_value(j, 1728) {
        return parse_poly("x2^2*x3-x1*x3^2-x1^3", ring);
    }
    let c = j - &Scalar::from_i64(1728, 0);
    let family = parse_poly("x2^2*x3+x1*x2*x3-x1^3", ring)?.scale(&c);
    Ok(&family + &parse_poly("36*x1*x3^2+x3^3", ring)?)
}

/// The three quadrics of `I(j) = Ann(W(j))`, `j ∉ {0, 1728}`.
pub fn ideal_wj_generators(ring: &Ring, j: &Scalar) -> Result<Vec<Polynomial>> {
    check_plane(ring)?;
    if is_value(j, 0) || is_value(j, 1728) {
        return Err(Error::SpecialJ(j.to_string()));
    }
    let c = j - &Scalar::from_i64(1728, 0);
    let n = |k: i64| Scalar::from_i64(k, 0);
    let q = |s: &str| parse_poly(s, ring);
    let first = q("x2^2-2*x1*x2")?;
    let h = [
        q("x1*x2")?.scale(&(&n(6) * j)),
        q("x1*x3")?.scale(&(&n(-144) * &c)),
        q("x2*x3")?.scale(&(&n(72) * &c)),
        q("x3^2")?.scale(&-(&c * &c)),
    ];
    let g = [
        q("x1^2")?.scale(j),
        q("x1*x3")?.scale(&(&n(-12) * &c)),
        q("x2*x3")?.scale(&(&n(6) * &c)),
        q("x3^2")?.scale(&(&n(144) * &c)),
    ];
    let sum = |ps: &[Polynomial]| ps.iter().fold(Polynomial::zero(*ring), |acc, p| &acc + p);
    Ok(vec![first, sum(&h), sum(&g)])
}

pub fn ideal_wj(ring: &Ring, j: &Scalar) -> Result<IdealHandle> {
    IdealHandle::new(*ring, ideal_wj_generators(ring, j)?)
}

/// One line of the classification: a model ideal together with its dual cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub label: String,
    pub model_ideal: Vec<Polynomial>,
    pub inverse_system: Polynomial,
    pub j_value: Option<Scalar>,
}

const FIXED_ROWS: [(&str, &[&str], &str, Option<i64>); 7] = [
    ("three independent lines", &["x1^2", "x2^2", "x3^2"], "x1*x2*x3", None),
    ("conic and tangent line", &["x1^2", "x1*x3", "x3*x2^2", "x2^3", "x3^2+x1*x2"], "x1*x2^2-x2*x3^2", None),
    ("conic and non-tangent line", &["x1^2", "x2^2", "x3^2+6*x1*x2"], "x1*x2*x3-x3^3", None),
    ("nodal cubic", &["x3^2", "x1*x2", "x1^2+x2^2-3*x1*x3"], "x2^2*x3-x1^3-x1^2*x3", None),
    ("cuspidal cubic", &["x3^2", "x1*x2", "x1*x3", "x2^3", "x1^3+3*x2^2*x3"], "x2^2*x3-x1^3", None),
    (
        "elliptic curve, j = 0",
        &["x3^3", "x1^3+3*x2^2*x3", "x1*x3", "x2^2-x2*x3+x3^2", "x1*x2"],
        "x2^2*x3+x2*x3^2-x1^3",
        Some(0),
    ),
    ("elliptic curve, j = 1728", &["x2^2+x1*x3", "x1*x2", "x1^2-3*x3^2"], "x2^2*x3-x1*x3^2-x1^3", Some(1728)),
];

/// The eight rows, the last one instantiated at `generic_j ∉ {0, 1728}`.
pub fn classification_table(ring: &Ring, generic_j: &Scalar) -> Result<Vec<ClassificationRow>> {
    check_plane(ring)?;
    let mut rows = Vec::with_capacity(8);
    for (label, model, cubic, j) in FIXED_ROWS {
        rows.push(ClassificationRow {
            label: label.to_string(),
            model_ideal: model.iter().map(|s| parse_poly(s, ring)).collect::<Result<_>>()?,
            inverse_system: parse_poly(cubic, ring)?,
            j_value: j.map(|v| Scalar::from_i64(v, 0)),
        });
    }
    rows.push(ClassificationRow {
        label: format!("elliptic curve, j = {generic_j}"),
        model_ideal: ideal_wj_generators(ring, generic_j)?,
        inverse_system: weierstrass_j(ring, generic_j)?,
        j_value: Some(generic_j.clone()),
    });
    Ok(rows)
}

/// Result of checking one row under the derivation action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReport {
    pub label: String,
    pub annihilator_matches: bool,
    pub hilbert: HilbertFunction,
    pub is_ag: i64,
}

impl RowReport {
    pub fn hilbert_matches(&self) -> bool {
        self.hilbert.values() == [1, 3, 3, 1]
    }

    pub fn passed(&self) -> bool {
        self.annihilator_matches && self.hilbert_matches() && self.is_ag == 3
    }

    /// Names of the sub-checks that did not hold.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.annihilator_matches {
            out.push("annihilator differs from the model ideal");
        }
        if !self.hilbert_matches() {
            out.push("Hilbert function is not {1,3,3,1}");
        }
        if self.is_ag != 3 {
            out.push("not Gorenstein of socle degree 3");
        }
        out
    }
}

pub fn verify_row(ring: &Ring, row: &ClassificationRow) -> Result<RowReport> {
    check_plane(ring)?;
    let module = SubmoduleHandle::new(*ring, Action::Derivation, vec![row.inverse_system.clone()])?;
    let ann = ideal_ann(&module)?;
    let model = IdealHandle::new(*ring, row.model_ideal.clone())?;
    let annihilator_matches = model.is_artin() && ann.eq_ideal(&model)?;
    let hilbert = match model.hilbert() {
        Ok(h) => h,
        Err(_) => HilbertFunction(Vec::new()),
    };
    Ok(RowReport { label: row.label.clone(), annihilator_matches, hilbert, is_ag: model.is_ag() })
}

/// Whether the first partials `x_i ∘ F` are linearly independent.
pub fn is_nondegenerate(f: &Polynomial, action: Action) -> Result<bool> {
    let ring = *f.ring();
    let partials = (0..ring.num_vars())
        .map(|i| crate::poly::apply(action, &Polynomial::var(ring, i), f))
        .collect::<Result<Vec<_>>>()?;
    let bound = f.degree().unwrap_or(0);
    let frame = crate::linalg::Frame::new(ring.num_vars(), bound);
    Ok(crate::linalg::SubspaceBasis::span_of(&partials, frame, &ring)?.dim() == ring.num_vars())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(v, 0)
    }

    fn r3() -> Ring {
        Ring::rational(3)
    }

    #[test]
    fn j_values() {
        assert_eq!(j_invariant(&q(0), &q(5)).unwrap(), q(0));
        assert_eq!(j_invariant(&q(-3), &q(0)).unwrap(), q(1728));
        let expected = Scalar::from_fraction(&BigInt::from(6912), &BigInt::from(31), 0).unwrap();
        assert_eq!(j_invariant(&q(1), &q(1)).unwrap(), expected);
        assert_eq!(j_invariant(&q(-3), &q(2)), Err(Error::SingularCurve));
        assert!(j_invariant(&Scalar::from_i64(1, 7), &Scalar::from_i64(1, 7)).is_err());
    }

    #[test]
    fn weierstrass_equations() {
        let r = r3();
        assert_eq!(weierstrass_ab(&r, &q(0), &q(1)).unwrap(), parse_poly("x1^3+x3^3-x2^2*x3", &r).unwrap());
        assert_eq!(weierstrass_ab(&r, &q(-1), &q(0)).unwrap(), parse_poly("x1^3-x1*x3^2-x2^2*x3", &r).unwrap());
        assert_eq!(
            weierstrass_j(&r, &q(1729)).unwrap(),
            parse_poly("x2^2*x3+x1*x2*x3-x1^3+36*x1*x3^2+x3^3", &r).unwrap()
        );
        assert_eq!(weierstrass_j(&r, &q(0)).unwrap(), parse_poly("x2^2*x3+x2*x3^2-x1^3", &r).unwrap());
        assert!(weierstrass_j(&Ring::rational(2), &q(3)).is_err());
    }

    #[test]
    fn ideal_family_shape() {
        let r = r3();
        let gens = ideal_wj_generators(&r, &q(1)).unwrap();
        assert_eq!(gens[0], parse_poly("-2*x1*x2+x2^2", &r).unwrap());
        let x1x2 = crate::poly::Monomial::new(vec![1, 1, 0]);
        assert_eq!(gens[1].coefficient(&x1x2), q(6));
        assert!(gens.iter().all(|g| g.is_homogeneous() && g.degree() == Some(2)));
        assert!(matches!(ideal_wj(&r, &q(1728)), Err(Error::SpecialJ(_))));
    }

    #[test]
    fn table_rows_verify() {
        let r = r3();
        let table = classification_table(&r, &q(2)).unwrap();
        assert_eq!(table.len(), 8);
        for row in &table {
            let report = verify_row(&r, row).unwrap();
            assert!(report.passed(), "{}: {:?}", row.label, report.failures());
            assert!(is_nondegenerate(&row.inverse_system, Action::Derivation).unwrap());
        }
    }

    #[test]
    fn wrong_model_is_reported() {
        let r = r3();
        let mut row = classification_table(&r, &q(2)).unwrap().remove(0);
        row.model_ideal = vec![parse_poly("x1^2", &r).unwrap(), parse_poly("x2^2", &r).unwrap()];
        let report = verify_row(&r, &row).unwrap();
        assert!(!report.passed());
        assert_eq!(report.failures().len(), 3);
    }
}

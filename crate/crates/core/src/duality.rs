//! Macaulay duality between Artin ideals of `R` and finitely generated
//! `R`-submodules of `S`.
//!
//! Under either action `R` acts on `S` through the pairing
//! `<x^a, x^b> = [a = b]` (contraction) or `a! [a = b]` (derivation), in the
//! sense that `f ∘ g = 0` exactly when `<x^c f, g> = 0` for all `c`. Hence for an
//! Artin ideal with `m^(s+1) ⊆ I` the inverse system `I^⊥` is the orthogonal of
//! the truncation `T_s(I)` inside `S_{≤s}`, and conversely
//! `Ann(M) = M^⊥ + m^(D+1)` for a submodule generated in degrees `≤ D`.

use std::sync::{Arc, OnceLock};

use crate::artin::{HilbertFunction, IdealHandle};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, solve_in_span, Echelon, Frame, SubspaceBasis};
use crate::poly::{apply, sigma, Action, Monomial, Polynomial, Ring};

/// The submodule `<g_1, ..., g_m>` of `S` under a chosen action.
#[derive(Clone, Debug)]
pub struct SubmoduleHandle {
    ring: Ring,
    action: Action,
    generators: Vec<Polynomial>,
    closure: OnceLock<Arc<SubspaceBasis>>,
}

impl SubmoduleHandle {
    pub fn new(ring: Ring, action: Action, generators: Vec<Polynomial>) -> Result<Self> {
        action.check(ring.characteristic())?;
        for g in &generators {
            if !g.ring().compatible(&ring) {
                return Err(Error::RingMismatch);
            }
        }
        let generators = generators.into_iter().map(|g| g.with_ring(ring)).collect();
        Ok(SubmoduleHandle { ring, action, generators, closure: OnceLock::new() })
    }

    fn with_closure(ring: Ring, action: Action, generators: Vec<Polynomial>, closure: SubspaceBasis) -> Self {
        let out = SubmoduleHandle { ring, action, generators, closure: OnceLock::new() };
        let _ = out.closure.set(Arc::new(closure));
        out
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn action(&self) -> Action {
        self.action
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Largest generator degree; every element of the module is at most this.
    pub fn degree_bound(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// The module as a subspace of `S_{≤D}`, `D` the degree bound.
    pub fn closure(&self) -> Result<Arc<SubspaceBasis>> {
        if let Some(c) = self.closure.get() {
            return Ok(c.clone());
        }
        let bound = self.degree_bound();
        let cap = self.ring.max_degree();
        if bound > cap {
            return Err(Error::DegreeOverflow { degree: bound, bound: cap });
        }
        let c = Arc::new(self.compute_closure(Frame::new(self.ring.num_vars(), bound))?);
        let _ = self.closure.set(c.clone());
        Ok(c)
    }

    fn compute_closure(&self, frame: Arc<Frame>) -> Result<SubspaceBasis> {
        let mut echelon = Echelon::new(frame.size());
        let mut queue = std::collections::VecDeque::new();
        for g in &self.generators {
            if let Some(row) = echelon.insert(frame.vector_of(g)?) {
                queue.push_back(row.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for var in 0..self.ring.num_vars() {
                let w = frame.act_var(self.action, &v, var);
                if is_zero_vector(&w) {
                    continue;
                }
                if let Some(row) = echelon.insert(w) {
                    queue.push_back(row.clone());
                }
            }
        }
        Ok(echelon.into_basis(frame, self.ring.characteristic()))
    }

    /// `dim_k M`, which equals the length of `R / Ann(M)`.
    pub fn length(&self) -> Result<usize> {
        Ok(self.closure()?.dim())
    }

    fn check_compatible(&self, other: &SubmoduleHandle) -> Result<()> {
        if !self.ring.compatible(&other.ring) || self.action != other.action {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        if !g.ring().compatible(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Ok(true);
        }
        let c = self.closure()?;
        if g.degree().unwrap_or(0) > c.frame().degree() {
            return Ok(false);
        }
        c.contains_poly(g)
    }

    /// `self ⊆ other`.
    pub fn is_submodule_of(&self, other: &SubmoduleHandle) -> Result<bool> {
        self.check_compatible(other)?;
        let (a, b) = (self.closure()?, other.closure()?);
        let frame = if a.frame().degree() >= b.frame().degree() { a.frame().clone() } else { b.frame().clone() };
        b.embed(frame.clone())?.contains_space(&a.embed(frame)?)
    }

    pub fn eq_module(&self, other: &SubmoduleHandle) -> Result<bool> {
        Ok(self.is_submodule_of(other)? && other.is_submodule_of(self)?)
    }

    /// Generators whose classes form a basis of `M / m∘M`, listed by degree
    /// descending. Input generators are preferred within each degree, and lower
    /// degrees are chosen first, so the generator degrees are the minimal ones.
    pub fn min_generators(&self) -> Result<Vec<Polynomial>> {
        let c = self.closure()?;
        Ok(minimal_generators(&self.ring, self.action, &c, &self.generators))
    }

    /// The same module on a minimal generating set.
    pub fn minimized(&self) -> Result<SubmoduleHandle> {
        let c = self.closure()?;
        let gens = minimal_generators(&self.ring, self.action, &c, &self.generators);
        Ok(SubmoduleHandle::with_closure(self.ring, self.action, gens, (*c).clone()))
    }

    /// `Ann(M)` on minimal generators. The zero module has the unit ideal as
    /// annihilator, which is outside the scope of Artin ideals.
    pub fn annihilator(&self) -> Result<IdealHandle> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let c = self.closure()?;
        let bound = c.frame().degree();
        let mut gens = c.perp(self.action)?.basis_polynomials(&self.ring);
        gens.extend(crate::artin::monomials_of_degree(&self.ring, bound + 1));
        let ring = self.ring.with_max_degree(self.ring.max_degree().max(bound + 2))?;
        IdealHandle::new(ring, gens)?.minimized()
    }

    /// The image under σ, a submodule for contraction; characteristic 0 only.
    pub fn sigma_transport(&self) -> Result<SubmoduleHandle> {
        if self.action != Action::Derivation {
            return Err(Error::CharacteristicViolation("sigma transport from a contraction module"));
        }
        let gens = self.generators.iter().map(sigma).collect::<Result<Vec<_>>>()?;
        SubmoduleHandle::new(self.ring, Action::Contraction, gens)
    }
}

fn top_key(p: &Polynomial) -> (std::cmp::Reverse<u32>, Vec<Monomial>) {
    let d = p.degree().unwrap_or(0);
    let mut top: Vec<Monomial> = p.homogeneous_part(d).terms().map(|(m, _)| m.clone()).collect();
    top.reverse();
    (std::cmp::Reverse(d), top)
}

fn minimal_generators(ring: &Ring, action: Action, closure: &SubspaceBasis, inputs: &[Polynomial]) -> Vec<Polynomial> {
    let frame = closure.frame().clone();
    let mut running = Echelon::new(frame.size());
    for row in closure.rows() {
        for var in 0..ring.num_vars() {
            running.insert(frame.act_var(action, row, var));
        }
    }
    let wanted = closure.dim() - running.dim();
    let adapted = closure.degree_adapted_basis();
    let mut chosen: Vec<Polynomial> = Vec::with_capacity(wanted);
    for d in 0..=frame.degree() {
        let from_inputs = inputs.iter().filter(|g| !g.is_zero() && g.degree() == Some(d)).cloned();
        let from_basis = adapted.iter().filter(|(_, e)| *e == d).map(|(v, _)| frame.polynomial_of(ring, v));
        for c in from_inputs.chain(from_basis) {
            if chosen.len() == wanted {
                break;
            }
            let v = frame.vector_of(&c).expect("inside the frame");
            if running.insert(v).is_some() {
                chosen.push(c);
            }
        }
    }
    debug_assert_eq!(chosen.len(), wanted);
    chosen.sort_by_key(top_key);
    chosen
}

/// `I^⊥ ⊆ S` on minimal generators.
pub fn inv_syst(ideal: &IdealHandle, action: Action) -> Result<SubmoduleHandle> {
    let ring = *ideal.ring();
    action.check(ring.characteristic())?;
    let s = ideal.socle_degree()?;
    let t = ideal.truncation_span(s)?;
    let closure = t.perp(action)?;
    let gens = minimal_generators(&ring, action, &closure, &[]);
    Ok(SubmoduleHandle::with_closure(ring, action, gens, closure))
}

/// `Ann(<g_1, ..., g_m>)` on minimal generators.
pub fn ideal_ann(module: &SubmoduleHandle) -> Result<IdealHandle> {
    module.annihilator()
}

pub fn member_ih(g: &Polynomial, module: &SubmoduleHandle) -> Result<bool> {
    module.contains(g)
}

pub fn sub_mod_ih(a: &SubmoduleHandle, b: &SubmoduleHandle) -> Result<bool> {
    a.is_submodule_of(b)
}

pub fn eq_mod_ih(a: &SubmoduleHandle, b: &SubmoduleHandle) -> Result<bool> {
    a.eq_module(b)
}

pub fn min_gens_ih(module: &SubmoduleHandle) -> Result<Vec<Polynomial>> {
    module.min_generators()
}

/// Some `h` with `h ∘ f = g`, or `None` when `g ∉ <f>`.
pub fn colon_inv_syst(f: &Polynomial, g: &Polynomial, action: Action) -> Result<Option<Polynomial>> {
    let ring = *f.ring();
    if !g.ring().compatible(&ring) {
        return Err(Error::RingMismatch);
    }
    action.check(ring.characteristic())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let bound = f.degree().unwrap_or(0);
    if g.degree().unwrap_or(0) > bound {
        return Ok(None);
    }
    let frame = Frame::new(ring.num_vars(), bound);
    let operators: Vec<Polynomial> =
        frame.monomials().iter().map(|m| Polynomial::term(ring, m.clone(), ring.one())).collect();
    let images = operators.iter().map(|op| frame.vector_of(&apply(action, op, f)?)).collect::<Result<Vec<_>>>()?;
    let target = frame.vector_of(g)?;
    Ok(solve_in_span(&images, &target, ring.characteristic()).map(|c| frame.polynomial_of(&ring, &c)))
}

/// `HF` of `R/I` read off the degree filtration of `I^⊥`.
pub fn hilbert_via_inverse_system(ideal: &IdealHandle, action: Action) -> Result<HilbertFunction> {
    let module = inv_syst(ideal, action)?;
    let c = module.closure()?;
    let mut values = vec![0; c.frame().degree() as usize + 1];
    for (_, d) in c.degree_adapted_basis() {
        values[d as usize] += 1;
    }
    Ok(HilbertFunction(values))
}

/// Level through the dual: all minimal generators of `I^⊥` have degree `s`
/// and their top forms are independent.
pub fn is_level_dual(ideal: &IdealHandle, action: Action) -> Result<bool> {
    let s = ideal.socle_degree()?;
    let module = inv_syst(ideal, action)?;
    let gens = module.generators();
    if gens.iter().any(|g| g.degree() != Some(s)) {
        return Ok(false);
    }
    let tops: Vec<Polynomial> = gens.iter().map(|g| g.homogeneous_part(s)).collect();
    let frame = Frame::new(ideal.ring().num_vars(), s);
    Ok(SubspaceBasis::span_of(&tops, frame, ideal.ring())?.dim() == gens.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn r3() -> Ring {
        Ring::rational(3)
    }

    fn polys(src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_poly(s, &r3()).unwrap()).collect()
    }

    fn ideal(src: &[&str]) -> IdealHandle {
        IdealHandle::new(r3(), polys(src)).unwrap()
    }

    fn module(action: Action, src: &[&str]) -> SubmoduleHandle {
        SubmoduleHandle::new(r3(), action, polys(src)).unwrap()
    }

    #[test]
    fn closure_of_a_monomial() {
        let m = module(Action::Contraction, &["x1*x2*x3"]);
        assert_eq!(m.length().unwrap(), 8);
        let d = module(Action::Derivation, &["x1^2"]);
        assert_eq!(d.length().unwrap(), 3);
        assert!(d.contains(&parse_poly("7*x1", &r3()).unwrap()).unwrap());
        assert!(!d.contains(&parse_poly("x2", &r3()).unwrap()).unwrap());
    }

    #[test]
    fn squares_dualize_to_the_product() {
        let i = ideal(&["x1^2", "x2^2", "x3^2"]);
        for action in [Action::Derivation, Action::Contraction] {
            let m = inv_syst(&i, action).unwrap();
            assert_eq!(m.generators(), polys(&["x1*x2*x3"]).as_slice());
            let back = ideal_ann(&m).unwrap();
            assert!(back.eq_ideal(&i).unwrap());
        }
    }

    #[test]
    fn session_annihilator() {
        let f = module(Action::Derivation, &["x1^2*x3^4+x1*x2^3*x3+x2^5"]);
        let ann = ideal_ann(&f).unwrap();
        assert_eq!(ann.is_ag(), 6);
        assert_eq!(ann.hilbert().unwrap().length(), f.length().unwrap());
    }

    #[test]
    fn module_inclusions() {
        let big = module(Action::Contraction, &["x1*x2*x3"]);
        let small = module(Action::Contraction, &["x1*x2", "x3"]);
        assert!(sub_mod_ih(&small, &big).unwrap());
        assert!(!sub_mod_ih(&big, &small).unwrap());
        let same = module(Action::Contraction, &["x1*x2*x3", "x1+x2"]);
        assert!(eq_mod_ih(&big, &same).unwrap());
        let other = module(Action::Derivation, &["x1*x2*x3"]);
        assert!(sub_mod_ih(&big, &other).is_err());
    }

    #[test]
    fn minimal_generators_drop_derivatives() {
        let m = module(Action::Derivation, &["x1", "x1^3+x2^2", "x2"]);
        assert_eq!(min_gens_ih(&m).unwrap(), polys(&["x1^3+x2^2"]));
        let two = module(Action::Contraction, &["x1^2", "x2^2", "x1"]);
        assert_eq!(min_gens_ih(&two).unwrap(), polys(&["x1^2", "x2^2"]));
    }

    #[test]
    fn colon_examples() {
        let f = parse_poly("x1^2*x2", &r3()).unwrap();
        let g = parse_poly("x1", &r3()).unwrap();
        let h = colon_inv_syst(&f, &g, Action::Derivation).unwrap().unwrap();
        assert_eq!(apply(Action::Derivation, &h, &f).unwrap(), g);
        assert_eq!(colon_inv_syst(&f, &f, Action::Contraction).unwrap(), Some(Polynomial::one(r3())));
        assert_eq!(colon_inv_syst(&f, &parse_poly("x3", &r3()).unwrap(), Action::Contraction).unwrap(), None);
        assert_eq!(colon_inv_syst(&Polynomial::zero(r3()), &g, Action::Contraction), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn hilbert_and_level_through_the_dual() {
        let i = ideal(&["x1^2", "x2^2", "x3^2"]);
        assert_eq!(hilbert_via_inverse_system(&i, Action::Derivation).unwrap(), i.hilbert().unwrap());
        assert!(is_level_dual(&i, Action::Derivation).unwrap());
        let m2 = IdealHandle::maximal_power(Ring::rational(2), 2);
        assert!(is_level_dual(&m2, Action::Contraction).unwrap());
        let mixed = ideal(&["x1^2", "x1*x2", "x2^3", "x3", "x1*x3"]);
        assert_eq!(mixed.is_level(), -1);
        assert!(!is_level_dual(&mixed, Action::Contraction).unwrap());
    }

    #[test]
    fn zero_module_and_char_p_derivation() {
        let z = SubmoduleHandle::new(r3(), Action::Contraction, vec![]).unwrap();
        assert_eq!(ideal_ann(&z).unwrap_err(), Error::ZeroModule);
        let r = Ring::new(2, 7).unwrap();
        assert!(SubmoduleHandle::new(r, Action::Derivation, vec![]).is_err());
    }
}

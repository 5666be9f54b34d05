//! Ideals of the power-series ring through their truncations.
//!
//! For an ideal `I = (f_1, ..., f_m)` of `R = k[[x]]` and a bound `D`, the image
//! `(I + m^(D+1)) / m^(D+1)` is the span of the truncated products `x^a f_j`;
//! it is computed as the smallest subspace containing the truncated generators
//! and stable under multiplication by every variable.
//!
//! Everything else rests on one consequence of Nakayama's lemma in the complete
//! local ring: `m^d ⊆ I + m^(d+1)` already implies `m^d ⊆ I`. Writing
//! `N = (m^d + I) / I`, the hypothesis says `N = m N`, so `N = 0`. Once the least
//! such `d` is known, `s = d - 1` is the socle degree and `m^(s+1) ⊆ I`, so every
//! further question about `I` can be answered inside `R / m^(s+1)` or
//! `R / m^(s+2)` with pure linear algebra.
//!
//! Deciding that no such `d` exists uses three sufficient certificates: fewer
//! than `n` generators (Krull's height theorem); a variable `x_k` with no pure
//! power `x_k^e` among the terms of any generator (then `I ⊆ (x_j : j ≠ k)`); or
//! no `d ≤ g^n` with `m^d ⊆ I`, where `g` is the largest generator degree. The
//! last bound holds because an m-primary `I` contains a reduction generated by
//! `n` linear combinations of its generators, whose local intersection
//! multiplicity is at most `g^n` by Bézout, and `s + 1 ≤ dim_k R/I`. When the
//! configured cap is below that bound the search is reported as inconclusive.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, kernel, Echelon, Frame, SubspaceBasis};
use crate::poly::{Monomial, Polynomial, Ring};

/// Outcome of the search for a power of the maximal ideal inside `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArtinStatus {
    Artin {
        socle_degree: u32,
    },
    /// `proven == false` means only that no `m^d ⊆ I` was found for `d ≤ searched_to`.
    NotArtin {
        proven: bool,
        searched_to: u32,
    },
}

impl ArtinStatus {
    pub fn is_artin(&self) -> bool {
        matches!(self, ArtinStatus::Artin { .. })
    }
}

/// `HF(0), ..., HF(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction(pub Vec<usize>);

impl HilbertFunction {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn socle_degree(&self) -> u32 {
        self.0.len() as u32 - 1
    }

    /// `dim_k A`.
    pub fn length(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GorensteinVerdict {
    NotArtin,
    ArtinNotGorenstein,
    Gorenstein(u32),
}

impl GorensteinVerdict {
    /// `-2`, `-1`, or the socle degree.
    pub fn code(self) -> i64 {
        match self {
            GorensteinVerdict::NotArtin => -2,
            GorensteinVerdict::ArtinNotGorenstein => -1,
            GorensteinVerdict::Gorenstein(s) => s as i64,
        }
    }
}

/// `(I : m)`. For `I = m` this is the unit ideal, which has no nonunit generators.
#[derive(Debug)]
pub enum SocleIdeal {
    Unit,
    Ideal(IdealHandle),
}

/// An ideal of `R` given by polynomial generators, with cached truncations.
#[derive(Debug)]
pub struct IdealHandle {
    ring: Ring,
    generators: Vec<Polynomial>,
    spans: Mutex<HashMap<u32, Arc<SubspaceBasis>>>,
    status: OnceLock<ArtinStatus>,
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        let spans = self.spans.lock().expect("span cache").clone();
        let status = OnceLock::new();
        if let Some(s) = self.status.get() {
            let _ = status.set(*s);
        }
        IdealHandle { ring: self.ring, generators: self.generators.clone(), spans: Mutex::new(spans), status }
    }
}

impl IdealHandle {
    /// Rejects generators with a nonzero constant term.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !g.ring().compatible(&ring) {
                return Err(Error::RingMismatch);
            }
            if !g.constant_term().is_zero() {
                return Err(Error::UnitGenerator(g.to_string()));
            }
        }
        let generators = generators.into_iter().map(|g| g.with_ring(ring)).collect();
        Ok(IdealHandle { ring, generators, spans: Mutex::new(HashMap::new()), status: OnceLock::new() })
    }

    /// The maximal ideal `(x1, ..., xn)`.
    pub fn maximal(ring: Ring) -> Self {
        let gens = (0..ring.num_vars()).map(|i| Polynomial::var(ring, i)).collect();
        IdealHandle::new(ring, gens).expect("variables are nonunits")
    }

    /// `m^d` by its monomial generators, `d ≥ 1`.
    pub fn maximal_power(ring: Ring, d: u32) -> Self {
        let gens = Monomial::of_degree(ring.num_vars(), d)
            .into_iter()
            .map(|m| Polynomial::term(ring, m, ring.one()))
            .collect();
        IdealHandle::new(ring, gens).expect("positive-degree monomials are nonunits")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// `(I + m^(D+1)) / m^(D+1)` in the frame of degree `D`; `D` is bounded by the ring's cap.
    pub fn truncation_span(&self, bound: u32) -> Result<Arc<SubspaceBasis>> {
        let cap = self.ring.max_degree();
        if bound > cap {
            return Err(Error::CapExceeded { degree: bound, cap });
        }
        Ok(self.span(bound))
    }

    pub(crate) fn span(&self, bound: u32) -> Arc<SubspaceBasis> {
        {
            let cache = self.spans.lock().expect("span cache");
            if let Some(s) = cache.get(&bound) {
                return s.clone();
            }
            // a larger truncation determines every smaller one
            if let Some((_, s)) = cache.iter().filter(|(d, _)| **d > bound).min_by_key(|(d, _)| **d) {
                let t = Arc::new(s.truncate(bound));
                drop(cache);
                self.spans.lock().expect("span cache").insert(bound, t.clone());
                return t;
            }
        }
        let t = Arc::new(self.compute_span(bound));
        self.spans.lock().expect("span cache").insert(bound, t.clone());
        t
    }

    fn compute_span(&self, bound: u32) -> SubspaceBasis {
        let frame = Frame::new(self.ring.num_vars(), bound);
        let mut echelon = Echelon::new(frame.size());
        let mut queue = VecDeque::new();
        for g in &self.generators {
            if let Some(row) = echelon.insert(frame.truncated_vector_of(g)) {
                queue.push_back(row.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for var in 0..self.ring.num_vars() {
                let w = frame.mul_var(&v, var);
                if is_zero_vector(&w) {
                    continue;
                }
                if let Some(row) = echelon.insert(w) {
                    queue.push_back(row.clone());
                }
            }
        }
        echelon.into_basis(frame, self.ring.characteristic())
    }

    /// Whether every degree-`d` monomial lies in the truncation of degree `d`,
    /// i.e. `m^d ⊆ I`.
    pub fn contains_power_of_maximal(&self, d: u32) -> Result<bool> {
        let cap = self.ring.max_degree();
        if d > cap {
            return Err(Error::CapExceeded { degree: d, cap });
        }
        if d == 0 {
            return Ok(false);
        }
        match self.status.get() {
            Some(ArtinStatus::Artin { socle_degree }) => return Ok(d > *socle_degree),
            Some(ArtinStatus::NotArtin { searched_to, .. }) if d <= *searched_to => return Ok(false),
            _ => {}
        }
        if self.certified_not_artin() {
            return Ok(false);
        }
        Ok(first_full_degree(&self.span(d), 1).is_some_and(|first| first <= d))
    }

    fn certified_not_artin(&self) -> bool {
        let n = self.ring.num_vars();
        let nonzero: Vec<&Polynomial> = self.generators.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.len() < n {
            return true;
        }
        let mut has_pure_power = vec![false; n];
        for g in &nonzero {
            for (m, _) in g.terms() {
                if let Some(k) = m.pure_power_var() {
                    has_pure_power[k] = true;
                }
            }
        }
        !has_pure_power.iter().all(|&b| b)
    }

    fn bezout_bound(&self) -> u64 {
        let g = self.generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0) as u64;
        (0..self.ring.num_vars()).fold(1u64, |acc, _| acc.saturating_mul(g))
    }

    /// Least `d` with `m^d ⊆ I`, searched up to the cap.
    pub fn artin_status(&self) -> ArtinStatus {
        *self.status.get_or_init(|| self.search_artin())
    }

    fn search_artin(&self) -> ArtinStatus {
        if self.certified_not_artin() {
            return ArtinStatus::NotArtin { proven: true, searched_to: 0 };
        }
        let cap = self.ring.max_degree() as u64;
        let bezout = self.bezout_bound();
        let limit = cap.min(bezout) as u32;
        let mut bound = limit.min(4);
        loop {
            if let Some(d) = first_full_degree(&self.span(bound), 1) {
                return ArtinStatus::Artin { socle_degree: d - 1 };
            }
            if bound >= limit {
                return ArtinStatus::NotArtin { proven: bezout <= cap, searched_to: limit };
            }
            bound = limit.min(bound + (bound / 2).max(2));
        }
    }

    pub fn is_artin(&self) -> bool {
        self.artin_status().is_artin()
    }

    pub fn socle_degree(&self) -> Result<u32> {
        match self.artin_status() {
            ArtinStatus::Artin { socle_degree } => Ok(socle_degree),
            ArtinStatus::NotArtin { proven: true, .. } => Err(Error::NotArtin),
            ArtinStatus::NotArtin { proven: false, .. } => {
                Err(Error::NotArtinWithinCap { cap: self.ring.max_degree() })
            }
        }
    }

    /// `HF(i) = dim R/(I + m^(i+1)) - dim R/(I + m^i)`.
    pub fn hilbert(&self) -> Result<HilbertFunction> {
        let s = self.socle_degree()?;
        let top = self.span(s);
        let mut colengths = Vec::with_capacity(s as usize + 1);
        for i in 0..=s {
            let t = top.truncate(i);
            let full = SubspaceBasis::full(t.frame().clone(), self.ring.characteristic());
            colengths.push(full.quotient_dim(&t)?);
        }
        let mut values = Vec::with_capacity(colengths.len());
        let mut previous = 0;
        for c in colengths {
            values.push(c - previous);
            previous = c;
        }
        Ok(HilbertFunction(values))
    }

    /// Image of `(I : m)` in `R / m^(s+1)`.
    fn colon_maximal_span(&self) -> Result<(u32, Arc<SubspaceBasis>, SubspaceBasis)> {
        let s = self.socle_degree()?;
        let t = self.span(s);
        let frame = t.frame().clone();
        let reducer = Echelon::from_basis(&t);
        let ch = self.ring.characteristic();
        let n = self.ring.num_vars();
        let size = frame.size();
        let images: Vec<Vec<_>> = (0..size)
            .map(|col| {
                let mut e = vec![self.ring.zero(); size];
                e[col] = self.ring.one();
                let mut image = Vec::with_capacity(n * size);
                for var in 0..n {
                    let mut w = frame.mul_var(&e, var);
                    reducer.reduce(&mut w);
                    image.extend(w);
                }
                image
            })
            .collect();
        let colon = SubspaceBasis::from_vectors(frame, ch, kernel(&images, n * size, ch));
        Ok((s, t, colon))
    }

    /// Generators of `(I : m)`.
    pub fn socle(&self) -> Result<SocleIdeal> {
        let (s, _, colon) = self.colon_maximal_span()?;
        if colon.pivots().first() == Some(&0) {
            return Ok(SocleIdeal::Unit);
        }
        let mut gens = colon.basis_polynomials(&self.ring);
        gens.extend(monomials_of_degree(&self.ring, s + 1));
        let ideal = IdealHandle::new(self.ring, gens)?;
        Ok(SocleIdeal::Ideal(ideal.minimized()?))
    }

    /// `dim_k (I : m) / I`, or `-1` when the quotient is not Artin.
    pub fn cm_type(&self) -> i64 {
        match self.colon_maximal_span() {
            Ok((_, t, colon)) => (colon.dim() - t.dim()) as i64,
            Err(_) => -1,
        }
    }

    pub fn gorenstein_verdict(&self) -> GorensteinVerdict {
        match self.artin_status() {
            ArtinStatus::NotArtin { .. } => GorensteinVerdict::NotArtin,
            ArtinStatus::Artin { socle_degree } => {
                if self.cm_type() == 1 {
                    GorensteinVerdict::Gorenstein(socle_degree)
                } else {
                    GorensteinVerdict::ArtinNotGorenstein
                }
            }
        }
    }

    /// `-2` not Artin, `-1` Artin but not Gorenstein, otherwise the socle degree.
    pub fn is_ag(&self) -> i64 {
        self.gorenstein_verdict().code()
    }

    /// `-2` not Artin, `-1` Artin but not level, otherwise the socle degree.
    /// Level means `(I : m) = I + m^s`.
    pub fn is_level(&self) -> i64 {
        let Ok((s, t, colon)) = self.colon_maximal_span() else {
            return -2;
        };
        let frame = t.frame().clone();
        let top: Vec<_> = frame
            .monomials()
            .iter()
            .enumerate()
            .filter(|(_, m)| m.degree() == s)
            .map(|(i, _)| {
                let mut e = vec![self.ring.zero(); frame.size()];
                e[i] = self.ring.one();
                e
            })
            .collect();
        let top = SubspaceBasis::from_vectors(frame, self.ring.characteristic(), top);
        let expected = t.sum(&top).expect("same frame");
        if expected == colon {
            s as i64
        } else {
            -1
        }
    }

    /// Equality of Artin ideals, compared at degree bound `max(s_I, s_J) + 1`.
    pub fn eq_ideal(&self, other: &IdealHandle) -> Result<bool> {
        if !self.ring.compatible(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let bound = self.socle_degree()?.max(other.socle_degree()?) + 1;
        Ok(*self.span(bound) == *other.span(bound))
    }

    /// Whether `other ⊆ self`; requires `self` Artin.
    pub fn contains_ideal(&self, other: &IdealHandle) -> Result<bool> {
        if !self.ring.compatible(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let s = self.socle_degree()?;
        self.span(s).contains_space(&other.span(s))
    }

    /// Membership of a single element; requires `self` Artin.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        let s = self.socle_degree()?;
        let t = self.span(s);
        t.contains_vector(&t.frame().truncated_vector_of(f))
    }

    /// A minimal generating set: elements whose classes form a basis of `I / mI`.
    ///
    /// Input generators are preferred (lowest degree first, ties by their
    /// lowest monomial), then the echelon basis of the truncation. Every element
    /// is returned truncated at degree `s + 1`, which changes it only by an element
    /// of `m^(s+2) ⊆ mI`.
    pub fn min_generators(&self) -> Result<Vec<Polynomial>> {
        let s = self.socle_degree()?;
        let bound = s + 1;
        let t = self.span(bound);
        let frame = t.frame().clone();
        let mut running = Echelon::new(frame.size());
        for row in t.rows() {
            for var in 0..self.ring.num_vars() {
                running.insert(frame.mul_var(row, var));
            }
        }
        let wanted = t.dim() - running.dim();
        let mut inputs: Vec<Polynomial> =
            self.generators.iter().map(|g| g.truncate(bound)).filter(|g| !g.is_zero()).collect();
        inputs.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| lowest(a).cmp(&lowest(b))));
        let candidates = inputs.into_iter().chain(t.basis_polynomials(&self.ring));
        let mut chosen = Vec::with_capacity(wanted);
        for c in candidates {
            if chosen.len() == wanted {
                break;
            }
            if running.insert(frame.vector_of(&c)?).is_some() {
                chosen.push(c);
            }
        }
        debug_assert_eq!(chosen.len(), wanted);
        Ok(chosen)
    }

    /// The same ideal on a minimal generating set.
    pub fn minimized(&self) -> Result<IdealHandle> {
        let gens = self.min_generators()?;
        let out = IdealHandle::new(self.ring, gens)?;
        let _ = out.status.set(self.artin_status());
        Ok(out)
    }
}

fn lowest(p: &Polynomial) -> Option<Monomial> {
    p.terms().next().map(|(m, _)| m.clone())
}

pub(crate) fn monomials_of_degree(ring: &Ring, d: u32) -> Vec<Polynomial> {
    Monomial::of_degree(ring.num_vars(), d).into_iter().map(|m| Polynomial::term(*ring, m, ring.one())).collect()
}

/// Least `d ≥ from` (within the frame) whose monomials are all pivot columns.
fn first_full_degree(span: &SubspaceBasis, from: u32) -> Option<u32> {
    let frame = span.frame();
    let counts = span.pivot_degree_counts();
    (from..=frame.degree()).find(|&d| counts[d as usize] == frame.prefix_len(d) - prefix_below(frame, d))
}

fn prefix_below(frame: &Frame, d: u32) -> usize {
    if d == 0 {
        0
    } else {
        frame.prefix_len(d - 1)
    }
}

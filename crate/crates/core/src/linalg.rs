//! Exact linear algebra on monomial-indexed coordinate spaces.
//!
//! A [`Frame`] fixes the monomials of degree at most `D` in canonical order;
//! since that order is degree ascending, the frame of degree `D` is a prefix of
//! every frame of larger degree. Subspaces are kept in reduced row echelon form
//! with unit pivots, so two subspaces are equal exactly when their matrices are.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{count_up_to, factorial, Action, Monomial, Polynomial, Ring, Scalar};

pub type Vector = Vec<Scalar>;

/// The monomials of degree `≤ degree`, with multiplication and division tables
/// for every variable.
#[derive(Debug)]
pub struct Frame {
    num_vars: usize,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    times_var: Vec<Vec<Option<usize>>>,
    over_var: Vec<Vec<Option<usize>>>,
}

impl Frame {
    pub fn new(num_vars: usize, degree: u32) -> Arc<Frame> {
        let monomials = Monomial::up_to_degree(num_vars, degree);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut times_var = vec![Vec::with_capacity(monomials.len()); num_vars];
        let mut over_var = vec![Vec::with_capacity(monomials.len()); num_vars];
        for m in &monomials {
            for v in 0..num_vars {
                let x = Monomial::var(num_vars, v);
                times_var[v].push(index.get(&m.mul(&x)).copied());
                over_var[v].push(x.quotient_of(m).map(|q| index[&q]));
            }
        }
        Arc::new(Frame { num_vars, degree, monomials, index, times_var, over_var })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Number of coordinates of degree at most `d`.
    pub fn prefix_len(&self, d: u32) -> usize {
        count_up_to(self.num_vars, d.min(self.degree))
    }

    pub fn column_degree(&self, col: usize) -> u32 {
        self.monomials[col].degree()
    }

    pub fn same_shape(&self, other: &Frame) -> bool {
        self.num_vars == other.num_vars && self.degree == other.degree
    }

    pub fn vector_of(&self, p: &Polynomial) -> Result<Vector> {
        let ch = p.ring().characteristic();
        let mut v = vec![Scalar::zero(ch); self.size()];
        for (m, c) in p.terms() {
            let i = self.index_of(m).ok_or(Error::DegreeOverflow { degree: m.degree(), bound: self.degree })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Coordinates of `p` with every term above the frame degree dropped.
    pub fn truncated_vector_of(&self, p: &Polynomial) -> Vector {
        self.vector_of(&p.truncate(self.degree)).expect("truncated polynomial fits")
    }

    pub fn polynomial_of(&self, ring: &Ring, v: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(
            *ring,
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.monomials[i].clone(), c.clone())),
        )
    }

    /// `x_var · v`, truncated to the frame.
    pub fn mul_var(&self, v: &[Scalar], var: usize) -> Vector {
        let ch = v.first().map_or(0, Scalar::characteristic);
        let mut out = vec![Scalar::zero(ch); self.size()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(j) = self.times_var[var][i] {
                out[j] = c.clone();
            }
        }
        out
    }

    /// `x_var ∘ v` under the given action.
    pub fn act_var(&self, action: Action, v: &[Scalar], var: usize) -> Vector {
        let ch = v.first().map_or(0, Scalar::characteristic);
        let mut out = vec![Scalar::zero(ch); self.size()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(j) = self.over_var[var][i] {
                out[j] = match action {
                    Action::Contraction => c.clone(),
                    Action::Derivation => {
                        let e = self.monomials[i].exponents()[var] as i64;
                        c * &Scalar::from_i64(e, ch)
                    }
                };
            }
        }
        out
    }

    /// Weight of coordinate `col` in the apolarity pairing.
    fn pairing_weight(&self, action: Action, col: usize, ch: u64) -> Scalar {
        match action {
            Action::Contraction => Scalar::one(ch),
            Action::Derivation => Scalar::from_bigint(&factorial(&self.monomials[col]), ch),
        }
    }
}

pub(crate) fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Incremental reduced row echelon form.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    width: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    row_of_col: Vec<Option<usize>>,
}

impl Echelon {
    pub(crate) fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivots: Vec::new(), row_of_col: vec![None; width] }
    }

    pub(crate) fn from_basis(basis: &SubspaceBasis) -> Self {
        let mut e = Echelon::new(basis.frame.size());
        for (row, &p) in basis.rows.iter().zip(&basis.pivots) {
            e.row_of_col[p] = Some(e.rows.len());
            e.rows.push(row.clone());
            e.pivots.push(p);
        }
        e
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.width);
        for c in 0..self.width {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = self.row_of_col[c] {
                let f = v[c].clone();
                let row = &self.rows[r];
                for j in c..self.width {
                    if !row[j].is_zero() {
                        v[j].sub_mul_assign(&f, &row[j]);
                    }
                }
            }
        }
    }

    /// Adds `v` to the span. Returns the new normalized row when `v` was independent.
    pub(crate) fn insert(&mut self, mut v: Vector) -> Option<&Vector> {
        self.reduce(&mut v);
        let p = v.iter().position(|c| !c.is_zero())?;
        let inv = v[p].inverse().expect("nonzero pivot");
        for c in v.iter_mut().skip(p) {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for j in p..self.width {
                if !v[j].is_zero() {
                    row[j].sub_mul_assign(&f, &v[j]);
                }
            }
        }
        self.row_of_col[p] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(p);
        self.rows.last()
    }

    pub(crate) fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vector(&w)
    }

    pub(crate) fn into_basis(self, frame: Arc<Frame>, characteristic: u64) -> SubspaceBasis {
        let mut pairs: Vec<(usize, Vector)> = self.pivots.into_iter().zip(self.rows).collect();
        pairs.sort_by_key(|(p, _)| *p);
        let (pivots, rows) = pairs.into_iter().unzip();
        SubspaceBasis { frame, characteristic, rows, pivots }
    }
}

/// A k-subspace of the span of a frame's monomials, in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    frame: Arc<Frame>,
    characteristic: u64,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl PartialEq for SubspaceBasis {
    fn eq(&self, other: &Self) -> bool {
        self.frame.same_shape(&other.frame)
            && self.characteristic == other.characteristic
            && self.pivots == other.pivots
            && self.rows == other.rows
    }
}

impl Eq for SubspaceBasis {}

impl SubspaceBasis {
    pub fn zero(frame: Arc<Frame>, characteristic: u64) -> Self {
        SubspaceBasis { frame, characteristic, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(frame: Arc<Frame>, characteristic: u64) -> Self {
        let n = frame.size();
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![Scalar::zero(characteristic); n];
                v[i] = Scalar::one(characteristic);
                v
            })
            .collect();
        SubspaceBasis { frame, characteristic, rows, pivots: (0..n).collect() }
    }

    /// Canonical basis of the span of `vectors` (coordinates in `frame`).
    pub fn from_vectors(frame: Arc<Frame>, characteristic: u64, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let mut e = Echelon::new(frame.size());
        for v in vectors {
            e.insert(v);
        }
        e.into_basis(frame, characteristic)
    }

    /// Canonical basis of the span of `polys`; each must have degree at most the frame degree.
    pub fn span_of(polys: &[Polynomial], frame: Arc<Frame>, ring: &Ring) -> Result<Self> {
        let vectors = polys.iter().map(|p| frame.vector_of(p)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vectors(frame, ring.characteristic(), vectors))
    }

    pub fn frame(&self) -> &Arc<Frame> {
        &self.frame
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_polynomials(&self, ring: &Ring) -> Vec<Polynomial> {
        self.rows.iter().map(|r| self.frame.polynomial_of(ring, r)).collect()
    }

    fn check_frame(&self, other: &SubspaceBasis) -> Result<()> {
        if self.frame.same_shape(&other.frame) && self.characteristic == other.characteristic {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.frame.size() {
            return Err(Error::FrameMismatch);
        }
        Ok(Echelon::from_basis(self).contains(v))
    }

    /// Membership of a polynomial; polynomials above the frame degree are never members.
    pub fn contains_poly(&self, p: &Polynomial) -> Result<bool> {
        if p.ring().characteristic() != self.characteristic {
            return Err(Error::FrameMismatch);
        }
        match self.frame.vector_of(p) {
            Ok(v) => self.contains_vector(&v),
            Err(Error::DegreeOverflow { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Whether `other ⊆ self`.
    pub fn contains_space(&self, other: &SubspaceBasis) -> Result<bool> {
        self.check_frame(other)?;
        let e = Echelon::from_basis(self);
        Ok(other.rows.iter().all(|r| e.contains(r)))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_frame(other)?;
        let mut e = Echelon::from_basis(self);
        for r in &other.rows {
            e.insert(r.clone());
        }
        Ok(e.into_basis(self.frame.clone(), self.characteristic))
    }

    /// `dim((self + other) / other)`.
    pub fn quotient_dim(&self, other: &SubspaceBasis) -> Result<usize> {
        Ok(self.sum(other)?.dim() - other.dim())
    }

    /// Orthogonal complement under the monomial pairing
    /// `<x^a, x^b> = [a = b]` (contraction) or `a! [a = b]` (derivation).
    pub fn perp(&self, action: Action) -> Result<SubspaceBasis> {
        action.check(self.characteristic)?;
        let n = self.frame.size();
        let ch = self.characteristic;
        let weights: Vec<Scalar> = (0..n).map(|c| self.frame.pairing_weight(action, c, ch)).collect();
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        // Rows scaled column-wise by the weights and renormalized stay in RREF
        // with the same pivots; kernel vectors are read off the free columns.
        let mut e = Echelon::new(n);
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut g = vec![Scalar::zero(ch); n];
            g[free] = Scalar::one(ch);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if row[free].is_zero() {
                    continue;
                }
                let scaled = &(&row[free] * &weights[free]) * &weights[p].inverse().expect("nonzero weight");
                g[p] = -scaled;
            }
            e.insert(g);
        }
        Ok(e.into_basis(self.frame.clone(), ch))
    }

    /// The same subspace inside a frame of degree `≥` the current one.
    pub fn embed(&self, frame: Arc<Frame>) -> Result<SubspaceBasis> {
        if frame.num_vars() != self.frame.num_vars() || frame.degree() < self.frame.degree() {
            return Err(Error::FrameMismatch);
        }
        let n = frame.size();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut v = r.clone();
                v.resize(n, Scalar::zero(self.characteristic));
                v
            })
            .collect();
        Ok(SubspaceBasis { frame, characteristic: self.characteristic, rows, pivots: self.pivots.clone() })
    }

    /// Image under dropping all coordinates of degree above `d`.
    pub fn truncate(&self, d: u32) -> SubspaceBasis {
        let d = d.min(self.frame.degree());
        let frame = Frame::new(self.frame.num_vars(), d);
        let len = frame.size();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if p < len {
                rows.push(r[..len].to_vec());
                pivots.push(p);
            }
        }
        SubspaceBasis { frame, characteristic: self.characteristic, rows, pivots }
    }

    /// Number of pivots sitting in each degree `0..=D`.
    pub fn pivot_degree_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.frame.degree() as usize + 1];
        for &p in &self.pivots {
            counts[self.frame.column_degree(p) as usize] += 1;
        }
        counts
    }

    /// A basis `b_1, ..., b_k` with each `b_i` tagged by its degree such that the
    /// elements of degree `≤ d` span `U ∩ S_{≤d}` for every `d`.
    pub fn degree_adapted_basis(&self) -> Vec<(Vector, u32)> {
        let n = self.frame.size();
        let mut e = Echelon::new(n);
        for r in &self.rows {
            let mut rev = r.clone();
            rev.reverse();
            e.insert(rev);
        }
        let mut out: Vec<(Vector, u32)> = e
            .rows
            .into_iter()
            .zip(e.pivots)
            .map(|(mut v, p)| {
                v.reverse();
                (v, self.frame.column_degree(n - 1 - p))
            })
            .collect();
        out.sort_by_key(|(_, d)| *d);
        out
    }
}

/// Coefficients `c` with `Σ c_i vectors[i] = target`, using only the earliest
/// independent vectors; `None` when the target is outside the span.
pub fn solve_in_span(vectors: &[Vector], target: &[Scalar], characteristic: u64) -> Option<Vector> {
    let width = target.len();
    let k = vectors.len();
    let mut tracked = Tracked::new(width);
    for (i, v) in vectors.iter().enumerate() {
        let mut combo = vec![Scalar::zero(characteristic); k];
        combo[i] = Scalar::one(characteristic);
        tracked.insert(v.clone(), combo);
    }
    let mut t = target.to_vec();
    let mut combo = vec![Scalar::zero(characteristic); k];
    tracked.reduce(&mut t, &mut combo);
    is_zero_vector(&t).then(|| combo.into_iter().map(|c| -c).collect())
}

/// A basis of `{c : Σ c_i vectors[i] = 0}`.
pub fn kernel(vectors: &[Vector], width: usize, characteristic: u64) -> Vec<Vector> {
    let k = vectors.len();
    let mut tracked = Tracked::new(width);
    let mut out = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut combo = vec![Scalar::zero(characteristic); k];
        combo[i] = Scalar::one(characteristic);
        if let Some(dependency) = tracked.insert(v.clone(), combo) {
            out.push(dependency);
        }
    }
    out
}

/// RREF that remembers each row as a combination of the inputs.
struct Tracked {
    width: usize,
    rows: Vec<(Vector, Vector)>,
    row_of_col: Vec<Option<usize>>,
}

impl Tracked {
    fn new(width: usize) -> Self {
        Tracked { width, rows: Vec::new(), row_of_col: vec![None; width] }
    }

    /// Reduces `v` and subtracts the matching combinations from `combo`.
    fn reduce(&self, v: &mut [Scalar], combo: &mut [Scalar]) {
        for c in 0..self.width {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = self.row_of_col[c] {
                let f = v[c].clone();
                let (row, rc) = &self.rows[r];
                for j in c..self.width {
                    if !row[j].is_zero() {
                        v[j].sub_mul_assign(&f, &row[j]);
                    }
                }
                for (a, b) in combo.iter_mut().zip(rc) {
                    if !b.is_zero() {
                        a.sub_mul_assign(&f, b);
                    }
                }
            }
        }
    }

    /// Returns the dependency combination when `v` is already in the span.
    fn insert(&mut self, mut v: Vector, mut combo: Vector) -> Option<Vector> {
        self.reduce(&mut v, &mut combo);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return Some(combo);
        };
        let inv = v[p].inverse().expect("nonzero pivot");
        for c in v.iter_mut().chain(combo.iter_mut()) {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for (row, rc) in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for j in p..self.width {
                if !v[j].is_zero() {
                    row[j].sub_mul_assign(&f, &v[j]);
                }
            }
            for (a, b) in rc.iter_mut().zip(&combo) {
                if !b.is_zero() {
                    a.sub_mul_assign(&f, b);
                }
            }
        }
        self.row_of_col[p] = Some(self.rows.len());
        self.rows.push((v, combo));
        None
    }
}

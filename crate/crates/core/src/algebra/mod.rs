//! Finite-dimensional associative unital rings given by structure constants,
//! and their elements with polynomial coordinates.

mod build;
mod u3star;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::poly::{PolyAccumulator, Polynomial, VarAllocator, VarId};
use crate::scalar::Rational;

pub use build::{make_full, make_grassmann, make_rat, make_u3star, MAX_DIM, MAX_FULL, MAX_GRASSMANN};
pub use u3star::{mat3_mul, u3star_commutator_parts, u3star_embed_oracle, CommutatorParts, Mat3, U3Slot};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("grassmann generator count {0} outside 1..={max}", max = MAX_GRASSMANN)]
    GeneratorCount(u32),
    #[error("full matrix size {0} outside 2..={max}", max = MAX_FULL)]
    MatrixSize(usize),
    #[error("dimension {0} exceeds bound {max}", max = MAX_DIM)]
    DimensionBound(usize),
    #[error("elements belong to different rings: {0} vs {1}")]
    DescriptorMismatch(String, String),
    #[error("ring {0} is not a u3star construction")]
    NotU3Star(String),
    #[error("ring {0} is not a grassmann algebra")]
    NotGrassmann(String),
}

/// How a descriptor was built. Descriptor identity is this expression.
#[derive(Debug, Clone)]
pub enum Construction {
    Rat,
    Grassmann(u32),
    Full(usize),
    U3Star(Ring),
}

/// Shared handle to an immutable ring descriptor.
pub type Ring = Arc<RingDescriptor>;

/// Basis, unit and multiplication table of a finite-dimensional ring.
#[derive(Debug)]
pub struct RingDescriptor {
    name: String,
    construction: Construction,
    labels: Vec<String>,
    unit: Vec<(usize, Rational)>,
    // row-major dim x dim, entry (i, j) is b_i * b_j in the basis
    table: Vec<Vec<(usize, Rational)>>,
}

impl RingDescriptor {
    pub(crate) fn new(
        name: String,
        construction: Construction,
        labels: Vec<String>,
        unit: Vec<(usize, Rational)>,
        table: Vec<Vec<(usize, Rational)>>,
    ) -> Self {
        debug_assert_eq!(table.len(), labels.len() * labels.len());
        RingDescriptor { name, construction, labels, unit, table }
    }

    /// Canonical construction expression, e.g. `u3star(grassmann:2)`.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit_coords(&self) -> &[(usize, Rational)] {
        &self.unit
    }

    /// `b_i * b_j` as sparse basis coordinates.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    /// Number of basis pairs with a nonzero product.
    pub fn nonzero_products(&self) -> usize {
        self.table.iter().filter(|e| !e.is_empty()).count()
    }

    pub fn same_ring(&self, other: &RingDescriptor) -> bool {
        self.name == other.name
    }

    /// Inner ring of a u3star construction.
    pub fn u3star_inner(&self) -> Option<&Ring> {
        match &self.construction {
            Construction::U3Star(inner) => Some(inner),
            _ => None,
        }
    }

    /// Every basis triple satisfies `(b_i b_j) b_k = b_i (b_j b_k)`; returns the
    /// first failing triple otherwise.
    pub fn check_associativity(&self) -> Result<(), (usize, usize, usize)> {
        let d = self.dim();
        let right_mul = |v: &[(usize, Rational)], k: usize| -> Vec<(usize, Rational)> {
            let mut acc = vec![Rational::zero(); d];
            for (i, c) in v {
                for (l, e) in self.product(*i, k) {
                    acc[*l].add_product(c, e);
                }
            }
            sparse(acc)
        };
        let left_mul = |i: usize, v: &[(usize, Rational)]| -> Vec<(usize, Rational)> {
            let mut acc = vec![Rational::zero(); d];
            for (j, c) in v {
                for (l, e) in self.product(i, *j) {
                    acc[*l].add_product(c, e);
                }
            }
            sparse(acc)
        };
        for i in 0..d {
            for j in 0..d {
                let ij = self.product(i, j);
                for k in 0..d {
                    if right_mul(ij, k) != left_mul(i, self.product(j, k)) {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// `1 * b_i = b_i * 1 = b_i` for every basis element; returns the first failure.
    pub fn check_unit(&self) -> Result<(), usize> {
        let d = self.dim();
        for i in 0..d {
            let mut left = vec![Rational::zero(); d];
            let mut right = vec![Rational::zero(); d];
            for (u, c) in &self.unit {
                for (l, e) in self.product(*u, i) {
                    left[*l].add_product(c, e);
                }
                for (l, e) in self.product(i, *u) {
                    right[*l].add_product(c, e);
                }
            }
            let expected = vec![(i, Rational::one())];
            if sparse(left) != expected || sparse(right) != expected {
                return Err(i);
            }
        }
        Ok(())
    }
}

fn sparse(v: Vec<Rational>) -> Vec<(usize, Rational)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// Element of a [`RingDescriptor`]: sparse basis coordinates with polynomial
/// coefficients, sorted by basis index.
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Ring,
    coords: Vec<(usize, Polynomial)>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.coords == other.coords
    }
}

impl Eq for RingElement {}

impl RingElement {
    pub fn zero(ring: &Ring) -> Self {
        RingElement { ring: ring.clone(), coords: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::from_rational_coords(ring, ring.unit_coords().iter().cloned())
    }

    /// Rational multiple of the unit.
    pub fn scalar(ring: &Ring, c: Rational) -> Self {
        Self::unit(ring).scale(&c)
    }

    pub fn basis(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.dim(), "basis index {i} out of range for {}", ring.name());
        RingElement { ring: ring.clone(), coords: vec![(i, Polynomial::one())] }
    }

    /// Looks a basis element up by its label.
    pub fn basis_by_label(ring: &Ring, label: &str) -> Option<Self> {
        ring.labels().iter().position(|l| l == label).map(|i| Self::basis(ring, i))
    }

    pub fn from_coords<I: IntoIterator<Item = (usize, Polynomial)>>(ring: &Ring, coords: I) -> Self {
        let mut dense = Vec::with_capacity(ring.dim());
        dense.resize_with(ring.dim(), PolyAccumulator::new);
        for (i, p) in coords {
            assert!(i < ring.dim(), "basis index {i} out of range for {}", ring.name());
            dense[i].add_scaled(&Rational::one(), &p);
        }
        Self::from_dense(ring, dense)
    }

    pub fn from_rational_coords<I: IntoIterator<Item = (usize, Rational)>>(ring: &Ring, coords: I) -> Self {
        Self::from_coords(ring, coords.into_iter().map(|(i, c)| (i, Polynomial::constant(c))))
    }

    fn from_dense(ring: &Ring, dense: Vec<PolyAccumulator>) -> Self {
        let coords = dense
            .into_iter()
            .enumerate()
            .filter(|(_, a)| !a.is_empty())
            .map(|(i, a)| (i, a.into_polynomial()))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        RingElement { ring: ring.clone(), coords }
    }

    /// `sum_i t_i b_i` with `dim` fresh variables.
    pub fn generic(ring: &Ring, vars: &VarAllocator) -> Self {
        let ids = vars.fresh_vars(ring.dim());
        RingElement {
            ring: ring.clone(),
            coords: ids.into_iter().enumerate().map(|(i, v)| (i, Polynomial::var(v))).collect(),
        }
    }

    /// Generic odd element `sum_i t_i v_i` of a grassmann algebra.
    pub fn generic_odd(ring: &Ring, vars: &VarAllocator) -> Result<Self, AlgebraError> {
        let Construction::Grassmann(r) = ring.construction() else {
            return Err(AlgebraError::NotGrassmann(ring.name().to_string()));
        };
        let ids = vars.fresh_vars(*r as usize);
        let coords = ids
            .into_iter()
            .enumerate()
            .map(|(g, v)| (build::grassmann_generator_index(*r, g as u32 + 1), Polynomial::var(v)));
        Ok(Self::from_coords(ring, coords))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coords(&self) -> &[(usize, Polynomial)] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Polynomial {
        self.coords
            .binary_search_by_key(&i, |(k, _)| *k)
            .map(|k| self.coords[k].1.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Variables occurring in any coordinate.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .coords
            .iter()
            .flat_map(|(_, p)| p.terms().iter().flat_map(|(m, _)| m.exponents().into_iter().map(|(v, _)| v)))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn check_same(&self, other: &RingElement) -> Result<(), AlgebraError> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::DescriptorMismatch(
                self.ring.name().to_string(),
                other.ring.name().to_string(),
            ))
        }
    }

    fn expect_same(&self, other: &RingElement) {
        if let Err(e) = self.check_same(other) {
            panic!("{e}");
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement, AlgebraError> {
        self.check_same(other)?;
        let (a, b) = (&self.coords, &other.coords);
        let mut coords = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    coords.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    coords.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = a[i].1.add(&b[j].1);
                    if !s.is_zero() {
                        coords.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        coords.extend_from_slice(&a[i..]);
        coords.extend_from_slice(&b[j..]);
        Ok(RingElement { ring: self.ring.clone(), coords })
    }

    /// Panics if the rings differ; see [`RingElement::try_add`].
    pub fn add(&self, other: &RingElement) -> RingElement {
        self.expect_same(other);
        self.try_add(other).unwrap()
    }

    pub fn neg(&self) -> RingElement {
        RingElement {
            ring: self.ring.clone(),
            coords: self.coords.iter().map(|(i, p)| (*i, p.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> RingElement {
        if c.is_zero() {
            return RingElement::zero(&self.ring);
        }
        RingElement {
            ring: self.ring.clone(),
            coords: self.coords.iter().map(|(i, p)| (*i, p.scale(c))).collect(),
        }
    }

    /// Multiplies every coordinate by a polynomial (commuting) coefficient.
    pub fn scale_poly(&self, p: &Polynomial) -> RingElement {
        RingElement::from_coords(&self.ring, self.coords.iter().map(|(i, q)| (*i, q.mul(p))))
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement, AlgebraError> {
        self.check_same(other)?;
        let mut acc = ElementAccumulator::new(&self.ring);
        acc.add_product(&Rational::one(), self, other);
        Ok(acc.finish())
    }

    /// Panics if the rings differ; see [`RingElement::try_mul`].
    pub fn mul(&self, other: &RingElement) -> RingElement {
        self.expect_same(other);
        let mut acc = ElementAccumulator::new(&self.ring);
        acc.add_product(&Rational::one(), self, other);
        acc.finish()
    }

    pub fn try_commutator(&self, other: &RingElement) -> Result<RingElement, AlgebraError> {
        self.check_same(other)?;
        Ok(self.commutator(other))
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &RingElement) -> RingElement {
        self.expect_same(other);
        let mut acc = ElementAccumulator::new(&self.ring);
        acc.add_product(&Rational::one(), self, other);
        acc.add_product(&Rational::from_int(-1), other, self);
        acc.finish()
    }

    /// First nonzero coordinate, if any.
    pub fn first_nonzero(&self) -> Option<(usize, &Polynomial)> {
        self.coords.first().map(|(i, p)| (*i, p))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, p)) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let label = self.ring.label(*i);
            match p.as_constant() {
                Some(c) if c.is_one() => write!(f, "{label}")?,
                Some(c) => write!(f, "{c}*{label}")?,
                None => write!(f, "({p})*{label}")?,
            }
        }
        Ok(())
    }
}

/// Dense per-basis accumulator for sums of products of elements.
pub struct ElementAccumulator {
    ring: Ring,
    dense: Vec<PolyAccumulator>,
}

impl ElementAccumulator {
    pub fn new(ring: &Ring) -> Self {
        let mut dense = Vec::with_capacity(ring.dim());
        dense.resize_with(ring.dim(), PolyAccumulator::new);
        ElementAccumulator { ring: ring.clone(), dense }
    }

    /// `self += c * x * y`.
    pub fn add_product(&mut self, c: &Rational, x: &RingElement, y: &RingElement) {
        debug_assert!(x.ring.same_ring(&self.ring) && y.ring.same_ring(&self.ring));
        for (i, p) in &x.coords {
            for (j, q) in &y.coords {
                for (k, e) in self.ring.product(*i, *j) {
                    let ce = c * e;
                    self.dense[*k].add_product(&ce, p, q);
                }
            }
        }
    }

    /// `self += c * x`.
    pub fn add_scaled(&mut self, c: &Rational, x: &RingElement) {
        for (i, p) in &x.coords {
            self.dense[*i].add_scaled(c, p);
        }
    }

    pub fn finish(self) -> RingElement {
        RingElement::from_dense(&self.ring, self.dense)
    }
}

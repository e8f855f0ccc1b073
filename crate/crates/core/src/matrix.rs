//! 2x2 matrices over a kernel ring.
//!
//! Entries never commute with each other in general, so products keep the
//! written order and ring elements act on a matrix from the left or the
//! right explicitly ([`Mat2::scalar_left`], [`Mat2::scalar_right`]). A trace
//! is an ordinary ring element; nothing here treats it as central.

use std::fmt;

use crate::algebra::{AlgebraError, ElementAccumulator, Ring, RingElement};
use crate::poly::{Polynomial, VarAllocator};
use crate::scalar::Rational;

#[derive(Clone, Debug)]
pub struct Mat2 {
    ring: Ring,
    entries: [[RingElement; 2]; 2],
}

impl PartialEq for Mat2 {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for Mat2 {}

impl Mat2 {
    pub fn new(entries: [[RingElement; 2]; 2]) -> Result<Self, AlgebraError> {
        let ring = entries[0][0].ring().clone();
        for row in &entries {
            for e in row {
                if !e.ring().same_ring(&ring) {
                    return Err(AlgebraError::DescriptorMismatch(
                        ring.name().to_string(),
                        e.ring().name().to_string(),
                    ));
                }
            }
        }
        Ok(Mat2 { ring, entries })
    }

    pub fn from_rows(a11: RingElement, a12: RingElement, a21: RingElement, a22: RingElement) -> Result<Self, AlgebraError> {
        Self::new([[a11, a12], [a21, a22]])
    }

    pub fn zero(ring: &Ring) -> Self {
        let z = RingElement::zero(ring);
        Mat2 { ring: ring.clone(), entries: [[z.clone(), z.clone()], [z.clone(), z]] }
    }

    pub fn identity(ring: &Ring) -> Self {
        Self::scalar_matrix(&RingElement::unit(ring))
    }

    /// `diag(r, r)`, i.e. `r I`.
    pub fn scalar_matrix(r: &RingElement) -> Self {
        let z = RingElement::zero(r.ring());
        Mat2 { ring: r.ring().clone(), entries: [[r.clone(), z.clone()], [z, r.clone()]] }
    }

    /// Matrix of four independent generic elements.
    pub fn generic(ring: &Ring, vars: &VarAllocator) -> Self {
        let entries = [(); 2].map(|_| [(); 2].map(|_| RingElement::generic(ring, vars)));
        Mat2 { ring: ring.clone(), entries }
    }

    /// `[[x, y], [z, -x]]`, trace zero by construction.
    pub fn traceless(x: &RingElement, y: &RingElement, z: &RingElement) -> Result<Self, AlgebraError> {
        Self::new([[x.clone(), y.clone()], [z.clone(), x.neg()]])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn entries(&self) -> &[[RingElement; 2]; 2] {
        &self.entries
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &RingElement {
        &self.entries[row][col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(RingElement::is_zero)
    }

    /// First nonzero coordinate in row-major entry order:
    /// `(row, col, basis index, coefficient)`.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize, &Polynomial)> {
        for r in 0..2 {
            for c in 0..2 {
                if let Some((b, p)) = self.entries[r][c].first_nonzero() {
                    return Some((r, c, b, p));
                }
            }
        }
        None
    }

    fn map(&self, f: impl Fn(&RingElement) -> RingElement) -> Mat2 {
        Mat2 {
            ring: self.ring.clone(),
            entries: std::array::from_fn(|r| std::array::from_fn(|c| f(&self.entries[r][c]))),
        }
    }

    fn zip(&self, other: &Mat2, f: impl Fn(&RingElement, &RingElement) -> RingElement) -> Mat2 {
        Mat2 {
            ring: self.ring.clone(),
            entries: std::array::from_fn(|r| {
                std::array::from_fn(|c| f(&self.entries[r][c], &other.entries[r][c]))
            }),
        }
    }

    fn check_same(&self, ring: &Ring) -> Result<(), AlgebraError> {
        if self.ring.same_ring(ring) {
            Ok(())
        } else {
            Err(AlgebraError::DescriptorMismatch(self.ring.name().to_string(), ring.name().to_string()))
        }
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        self.zip(other, RingElement::add)
    }

    pub fn sub(&self, other: &Mat2) -> Mat2 {
        self.zip(other, RingElement::sub)
    }

    pub fn neg(&self) -> Mat2 {
        self.map(RingElement::neg)
    }

    pub fn scale(&self, c: &Rational) -> Mat2 {
        self.map(|e| e.scale(c))
    }

    pub fn try_mul(&self, other: &Mat2) -> Result<Mat2, AlgebraError> {
        self.check_same(&other.ring)?;
        let entries = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let mut acc = ElementAccumulator::new(&self.ring);
                for k in 0..2 {
                    acc.add_product(&Rational::one(), &self.entries[r][k], &other.entries[k][c]);
                }
                acc.finish()
            })
        });
        Ok(Mat2 { ring: self.ring.clone(), entries })
    }

    /// Panics on a ring mismatch; see [`Mat2::try_mul`].
    pub fn mul(&self, other: &Mat2) -> Mat2 {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `m11 + m22`.
    pub fn trace(&self) -> RingElement {
        self.entries[0][0].add(&self.entries[1][1])
    }

    /// Entrywise `r * m_ij`.
    pub fn try_scalar_left(r: &RingElement, m: &Mat2) -> Result<Mat2, AlgebraError> {
        m.check_same(r.ring())?;
        Ok(m.map(|e| r.mul(e)))
    }

    /// Entrywise `m_ij * r`.
    pub fn try_scalar_right(m: &Mat2, r: &RingElement) -> Result<Mat2, AlgebraError> {
        m.check_same(r.ring())?;
        Ok(m.map(|e| e.mul(r)))
    }

    pub fn scalar_left(r: &RingElement, m: &Mat2) -> Mat2 {
        Self::try_scalar_left(r, m).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn scalar_right(m: &Mat2, r: &RingElement) -> Mat2 {
        Self::try_scalar_right(m, r).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Left-associated power; `pow(0)` is the identity.
    pub fn pow(&self, k: u32) -> Mat2 {
        let mut out = Mat2::identity(&self.ring);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// One factor of a trace monomial such as `A^2 tr(A) A`.
#[derive(Clone, Copy, Debug)]
pub enum Factor<'a> {
    Mat(&'a Mat2),
    Elem(&'a RingElement),
}

/// Evaluates a left-to-right product of matrices and ring elements. Ring
/// elements act on the partial product from the right; leading ring
/// elements before the first matrix act from the left. A word without any
/// matrix yields `(product) I`.
pub fn eval_word(ring: &Ring, factors: &[Factor<'_>]) -> Mat2 {
    let mut lead: Option<RingElement> = None;
    let mut cur: Option<Mat2> = None;
    for f in factors {
        match (f, cur.take()) {
            (Factor::Elem(r), None) => {
                lead = Some(match lead.take() {
                    Some(l) => l.mul(r),
                    None => (*r).clone(),
                });
            }
            (Factor::Mat(m), None) => {
                cur = Some(match lead.take() {
                    Some(l) => Mat2::scalar_left(&l, m),
                    None => (*m).clone(),
                });
            }
            (Factor::Elem(r), Some(c)) => cur = Some(Mat2::scalar_right(&c, r)),
            (Factor::Mat(m), Some(c)) => cur = Some(c.mul(m)),
        }
    }
    match (cur, lead) {
        (Some(c), _) => c,
        (None, Some(l)) => Mat2::scalar_matrix(&l),
        (None, None) => Mat2::identity(ring),
    }
}

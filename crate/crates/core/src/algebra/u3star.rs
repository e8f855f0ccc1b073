//! The 3x3 matrix picture of `u3star(S)` and the commutator decomposition
//! `[x,y] = [a,e]I + C + alpha E13`.

use super::{AlgebraError, Ring, RingElement};
use crate::poly::Polynomial;

/// Coordinate slots of a `u3star` element, in basis order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum U3Slot {
    I = 0,
    E12 = 1,
    E13 = 2,
    E23 = 3,
}

impl U3Slot {
    pub const ALL: [U3Slot; 4] = [U3Slot::I, U3Slot::E12, U3Slot::E13, U3Slot::E23];
}

/// 3x3 matrix over an inner ring.
pub type Mat3 = [[RingElement; 3]; 3];

fn inner_of(x: &RingElement) -> Result<Ring, AlgebraError> {
    x.ring()
        .u3star_inner()
        .cloned()
        .ok_or_else(|| AlgebraError::NotU3Star(x.ring().name().to_string()))
}

impl RingElement {
    /// The inner-ring entry sitting in `slot` of a `u3star` element.
    pub fn u3_slot(&self, slot: U3Slot) -> Result<RingElement, AlgebraError> {
        let inner = inner_of(self)?;
        let d = inner.dim();
        let base = slot as usize * d;
        Ok(RingElement::from_coords(
            &inner,
            self.coords()
                .iter()
                .filter(|(i, _)| (base..base + d).contains(i))
                .map(|(i, p)| (i - base, p.clone())),
        ))
    }

    /// Assembles `aI + bE12 + cE13 + dE23` in `ring = u3star(S)` from entries in `S`.
    pub fn u3_from_slots(ring: &Ring, entries: [&RingElement; 4]) -> Result<RingElement, AlgebraError> {
        let inner = ring
            .u3star_inner()
            .ok_or_else(|| AlgebraError::NotU3Star(ring.name().to_string()))?;
        let d = inner.dim();
        let mut coords: Vec<(usize, Polynomial)> = Vec::new();
        for (slot, e) in entries.iter().enumerate() {
            if !e.ring().same_ring(inner) {
                return Err(AlgebraError::DescriptorMismatch(
                    inner.name().to_string(),
                    e.ring().name().to_string(),
                ));
            }
            coords.extend(e.coords().iter().map(|(k, p)| (slot * d + k, p.clone())));
        }
        Ok(RingElement::from_coords(ring, coords))
    }
}

/// Embeds a `u3star(S)` element as the upper-triangular matrix
/// `[[a,b,c],[0,a,d],[0,0,a]]` over `S`.
pub fn u3star_embed_oracle(x: &RingElement) -> Result<Mat3, AlgebraError> {
    let inner = inner_of(x)?;
    let [a, b, c, d] = U3Slot::ALL.map(|s| x.u3_slot(s).unwrap());
    let z = RingElement::zero(&inner);
    Ok([
        [a.clone(), b, c],
        [z.clone(), a.clone(), d],
        [z.clone(), z, a],
    ])
}

/// Plain 3x3 matrix product over the inner ring, entry order preserved.
pub fn mat3_mul(m: &Mat3, n: &Mat3) -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3)
                .map(|k| m[i][k].mul(&n[k][j]))
                .reduce(|acc, t| acc.add(&t))
                .unwrap()
        })
    })
}

/// Pieces of `[x,y]` for `x = (a,b,c,d)`, `y = (e,f,g,h)` in `u3star(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorParts {
    /// `[a,e]`, in `S`.
    pub center: RingElement,
    /// Strictly upper part: `[a,f]+[b,e]` at E12, `[a,g]+[c,e]` at E13,
    /// `[a,h]+[d,e]` at E23.
    pub strict: RingElement,
    /// `bh - fd`, in `S`.
    pub alpha: RingElement,
}

impl CommutatorParts {
    /// `center*I + strict + alpha*E13`.
    pub fn reassemble(&self) -> RingElement {
        let ring = self.strict.ring();
        let z = RingElement::zero(&self.center.ring().clone());
        let center = RingElement::u3_from_slots(ring, [&self.center, &z, &z, &z]).unwrap();
        let alpha = RingElement::u3_from_slots(ring, [&z, &z, &self.alpha, &z]).unwrap();
        center.add(&self.strict).add(&alpha)
    }
}

pub fn u3star_commutator_parts(x: &RingElement, y: &RingElement) -> Result<CommutatorParts, AlgebraError> {
    let inner = inner_of(x)?;
    inner_of(y)?;
    if !x.ring().same_ring(y.ring()) {
        return Err(AlgebraError::DescriptorMismatch(
            x.ring().name().to_string(),
            y.ring().name().to_string(),
        ));
    }
    let [a, b, c, d] = U3Slot::ALL.map(|s| x.u3_slot(s).unwrap());
    let [e, f, g, h] = U3Slot::ALL.map(|s| y.u3_slot(s).unwrap());
    let z = RingElement::zero(&inner);
    let e12 = a.commutator(&f).add(&b.commutator(&e));
    let e13 = a.commutator(&g).add(&c.commutator(&e));
    let e23 = a.commutator(&h).add(&d.commutator(&e));
    Ok(CommutatorParts {
        center: a.commutator(&e),
        strict: RingElement::u3_from_slots(x.ring(), [&z, &e12, &e13, &e23])?,
        alpha: b.mul(&h).sub(&f.mul(&d)),
    })
}

//! Sparse multivariate commutative polynomials over [`Rational`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::scalar::Rational;

/// Index of a commuting indeterminate `t<index>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub u32);

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.0)
    }
}

/// Monotone fresh-variable counter. One allocator per verification run.
#[derive(Debug, Default)]
pub struct VarAllocator {
    next: AtomicU32,
}

impl VarAllocator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` consecutive, previously unallocated ids.
    pub fn fresh_vars(&self, n: usize) -> Vec<VarId> {
        let n32 = u32::try_from(n).expect("variable count fits in u32");
        let start = self.next.fetch_add(n32, AtomicOrdering::SeqCst);
        (start..start + n32).map(VarId).collect()
    }

    pub fn fresh(&self) -> VarId {
        self.fresh_vars(1)[0]
    }

    /// Number of variables handed out so far.
    pub fn allocated(&self) -> usize {
        self.next.load(AtomicOrdering::SeqCst) as usize
    }
}

/// A power product of variables, stored as the sorted multiset of its
/// variables (`t0^2*t3` is `[0, 0, 3]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    vars: SmallVec<[VarId; 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        let mut vars = SmallVec::new();
        vars.push(v);
        Monomial { vars }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order.
    /// Zero exponents are dropped.
    pub fn from_exponents(pairs: &[(VarId, u32)]) -> Self {
        let mut vars: SmallVec<[VarId; 8]> = SmallVec::new();
        for &(v, e) in pairs {
            vars.extend(std::iter::repeat_n(v, e as usize));
        }
        vars.sort_unstable();
        Monomial { vars }
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    /// `(variable, exponent)` pairs with strictly increasing variables.
    pub fn exponents(&self) -> Vec<(VarId, u32)> {
        let mut out: Vec<(VarId, u32)> = Vec::new();
        for &v in &self.vars {
            match out.last_mut() {
                Some((last, e)) if *last == v => *e += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.vars, &other.vars);
        let mut vars = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                vars.push(a[i]);
                i += 1;
            } else {
                vars.push(b[j]);
                j += 1;
            }
        }
        vars.extend_from_slice(&a[i..]);
        vars.extend_from_slice(&b[j..]);
        Monomial { vars }
    }
}

// Graded order: lower degree first, then lexicographic on the sorted variables.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.exponents().into_iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in normal form: terms sorted by monomial order,
/// no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Normalises an arbitrary list of terms (duplicates are summed).
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut acc = PolyAccumulator::new();
        for (m, c) in terms {
            acc.add_term(m, &c);
        }
        acc.into_polynomial()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    /// Constant term value when the polynomial has degree 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        terms.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a[i..]);
        terms.extend_from_slice(&b[j..]);
        Polynomial { terms }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc = PolyAccumulator::with_capacity(self.len() * other.len());
        acc.add_product(&Rational::one(), self, other);
        acc.into_polynomial()
    }

    /// Evaluates every variable present in `values`; variables not listed stay symbolic.
    pub fn substitute(&self, values: &FxHashMap<VarId, Rational>) -> Polynomial {
        let mut acc = PolyAccumulator::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.exponents() {
                match values.get(&v) {
                    Some(x) => {
                        for _ in 0..e {
                            coeff = &coeff * x;
                        }
                    }
                    None => rest.push((v, e)),
                }
            }
            acc.add_term(Monomial::from_exponents(&rest), &coeff);
        }
        acc.into_polynomial()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first, variables ascending within a degree
        let mut shown: Vec<&(Monomial, Rational)> = self.terms.iter().collect();
        shown.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.vars.cmp(&b.0.vars)));
        for (k, (m, c)) in shown.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Hash-map accumulator for building large sums of products before
/// normalising once.
#[derive(Debug, Default)]
pub struct PolyAccumulator {
    terms: FxHashMap<Monomial, Rational>,
}

impl PolyAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        PolyAccumulator {
            terms: FxHashMap::with_capacity_and_hasher(n, Default::default()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        *self.terms.entry(m).or_default() += c;
    }

    /// `self += c * p`.
    pub fn add_scaled(&mut self, c: &Rational, p: &Polynomial) {
        for (m, a) in &p.terms {
            self.terms
                .entry(m.clone())
                .or_default()
                .add_product(c, a);
        }
    }

    /// `self += c * p * q`.
    pub fn add_product(&mut self, c: &Rational, p: &Polynomial, q: &Polynomial) {
        for (mp, a) in &p.terms {
            let ca = c * a;
            for (mq, b) in &q.terms {
                self.terms.entry(mp.mul(mq)).or_default().add_product(&ca, b);
            }
        }
    }

    pub fn into_polynomial(self) -> Polynomial {
        let mut terms: Vec<(Monomial, Rational)> =
            self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(i: u32) -> Polynomial {
        Polynomial::var(VarId(i))
    }

    fn c(n: i64, d: i64) -> Polynomial {
        Polynomial::constant(Rational::new(n, d))
    }

    #[test]
    fn additive_inverse_is_zero() {
        assert!(t(0).add(&t(0).neg()).is_zero());
    }

    #[test]
    fn halves_add_to_one() {
        assert_eq!(c(1, 2).add(&c(1, 2)), Polynomial::one());
    }

    #[test]
    fn like_terms_collect() {
        let t0t1 = t(0).mul(&t(1));
        let lhs = t0t1.add(&t(0)).add(&t0t1);
        let expected = t0t1.scale(&Rational::from_int(2)).add(&t(0));
        assert_eq!(lhs, expected);
        assert_eq!(lhs.to_string(), "2*t0*t1 + t0");
    }

    #[test]
    fn difference_of_squares() {
        let lhs = t(0).add(&t(1)).mul(&t(0).sub(&t(1)));
        let rhs = t(0).mul(&t(0)).sub(&t(1).mul(&t(1)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "t0^2 - t1^2");
    }

    #[test]
    fn times_zero_is_zero() {
        assert!(t(0).add(&t(3)).mul(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn half_times_two() {
        let lhs = t(0).scale(&Rational::half()).mul(&t(1).scale(&Rational::from_int(2)));
        assert_eq!(lhs, t(0).mul(&t(1)));
    }

    #[test]
    fn fresh_vars_are_monotone() {
        let alloc = VarAllocator::new();
        assert!(alloc.fresh_vars(0).is_empty());
        alloc.fresh_vars(3);
        assert_eq!(alloc.fresh_vars(2), vec![VarId(3), VarId(4)]);
        let many = alloc.fresh_vars(16);
        let set: std::collections::HashSet<_> = many.iter().collect();
        assert_eq!(set.len(), 16);
        assert_eq!(alloc.allocated(), 21);
    }

    #[test]
    fn fresh_vars_concurrent_never_collide() {
        let alloc = VarAllocator::new();
        let ids: Vec<VarId> = std::thread::scope(|s| {
            let hs: Vec<_> = (0..4).map(|_| s.spawn(|| alloc.fresh_vars(50))).collect();
            hs.into_iter().flat_map(|h| h.join().unwrap()).collect()
        });
        let set: std::collections::HashSet<_> = ids.iter().collect();
        assert_eq!(set.len(), 200);
    }

    #[test]
    fn monomial_rendering_and_exponents() {
        let m = Monomial::from_exponents(&[(VarId(7), 1), (VarId(3), 2), (VarId(5), 0)]);
        assert_eq!(m.to_string(), "t3^2*t7");
        assert_eq!(m.exponents(), vec![(VarId(3), 2), (VarId(7), 1)]);
        assert_eq!(m.degree(), 3);
    }

    #[test]
    fn rational_coefficients_render_as_fractions() {
        let p = t(1).scale(&Rational::new(-3, 4)).add(&c(1, 2));
        assert_eq!(p.to_string(), "-3/4*t1 + 1/2");
    }

    #[test]
    fn substitute_partial() {
        let p = t(0).mul(&t(1)).add(&t(0));
        let mut vals = FxHashMap::default();
        vals.insert(VarId(0), Rational::from_int(2));
        assert_eq!(p.substitute(&vals), t(1).scale(&Rational::from_int(2)).add(&c(2, 1)));
    }

    #[test]
    fn degree_four_over_many_variables_stays_exact() {
        // (sum of 64 variables with coefficient 1/3)^4 has C(67,4) terms
        let s = Polynomial::from_terms((0..64).map(|i| (Monomial::var(VarId(i)), Rational::new(1, 3))));
        let s2 = s.mul(&s);
        let s4 = s2.mul(&s2);
        assert_eq!(s4.len(), 766_480);
        let top = Monomial::from_exponents(&[(VarId(0), 1), (VarId(1), 1), (VarId(2), 1), (VarId(3), 1)]);
        let coeff = s4.terms().iter().find(|(m, _)| *m == top).unwrap().1.clone();
        assert_eq!(coeff, Rational::new(24, 81));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((0u32..4, 0u32..3, -5i64..5, 1i64..4), 0..6).prop_map(|ts| {
            Polynomial::from_terms(ts.into_iter().map(|(v, e, n, d)| {
                (Monomial::from_exponents(&[(VarId(v), e)]), Rational::new(n, d))
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
            prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        }

        #[test]
        fn normal_form_is_unique(p in arb_poly(), q in arb_poly()) {
            // the same polynomial reached along two different routes is stored identically
            let a = p.add(&q).sub(&q);
            prop_assert_eq!(&a, &p);
            prop_assert!(a.terms().iter().all(|(_, c)| !c.is_zero()));
            prop_assert!(a.terms().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }
}

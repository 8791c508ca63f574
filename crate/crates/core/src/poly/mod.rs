//! Sparse multivariate polynomials over a [`RingDescriptor`] coefficient ring.
//!
//! Terms are stored in a map keyed by exponent vector; the active monomial
//! order is supplied per call, so the same value can be read under lex,
//! grevlex or a block order.

mod monomial;
mod order;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::coeffring::{RingDescriptor, RingElement};

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind, OrderShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("the zero polynomial has no leading data")]
    ZeroPolynomial,
    #[error("variable precedence is not a permutation")]
    InvalidPrecedence,
}

/// A single term `c·x^α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coefficient: RingElement,
    pub monomial: Monomial,
}

/// Leading data of a nonzero polynomial under some order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub term: Term,
}

impl LeadingData {
    pub fn lm(&self) -> &Monomial {
        &self.term.monomial
    }

    pub fn lc(&self) -> &RingElement {
        &self.term.coefficient
    }

    /// Exponent vector of the leading monomial.
    pub fn deg(&self) -> &[u32] {
        self.term.monomial.exponents()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingDescriptor,
    nvars: usize,
    terms: BTreeMap<Monomial, RingElement>,
}

impl Polynomial {
    pub fn zero(ring: &RingDescriptor, nvars: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingDescriptor, nvars: usize, c: RingElement) -> Self {
        Self::term(ring, c, Monomial::one(nvars))
    }

    pub fn one(ring: &RingDescriptor, nvars: usize) -> Self {
        Self::constant(ring, nvars, ring.one())
    }

    pub fn term(ring: &RingDescriptor, c: RingElement, m: Monomial) -> Self {
        let mut p = Self::zero(ring, m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn monomial(ring: &RingDescriptor, m: Monomial) -> Self {
        Self::term(ring, ring.one(), m)
    }

    /// `x_i` in `nvars` variables.
    pub fn var(ring: &RingDescriptor, nvars: usize, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(nvars, i, 1))
    }

    /// Builds a polynomial from terms, merging repeated monomials.
    pub fn from_terms<I>(ring: &RingDescriptor, nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (RingElement, Monomial)>,
    {
        let mut p = Self::zero(ring, nvars);
        for (c, m) in terms {
            if m.nvars() != nvars {
                return Err(PolyError::DimensionMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            if !ring.owns(&c) {
                return Err(PolyError::RingMismatch);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor: `[(c, exps), ...]`.
    pub fn from_int_terms(ring: &RingDescriptor, nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        let mut p = Self::zero(ring, nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial::new(e.to_vec()), ring.from_i64(*c));
        }
        p
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    /// Terms in storage (plain lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RingElement)> {
        self.terms.iter()
    }

    /// Terms sorted descending under `order`.
    pub fn terms_desc(&self, order: &MonomialOrder) -> Vec<(&Monomial, &RingElement)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&RingElement> {
        self.terms.get(m)
    }

    pub fn coefficient_or_zero(&self, m: &Monomial) -> RingElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Leading monomial and coefficient, or `None` for zero.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &RingElement)> {
        let mut it = self.terms.iter();
        let mut best = it.next()?;
        for t in it {
            if order.cmp(t.0, best.0) == std::cmp::Ordering::Greater {
                best = t;
            }
        }
        Some(best)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading(order).map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self, order: &MonomialOrder) -> Option<&RingElement> {
        self.leading(order).map(|(_, c)| c)
    }

    pub fn leading_data(&self, order: &MonomialOrder) -> Result<LeadingData, PolyError> {
        if let Some(p) = order.precedence() {
            if p.len() != self.nvars {
                return Err(PolyError::DimensionMismatch {
                    expected: p.len(),
                    found: self.nvars,
                });
            }
        }
        let (m, c) = self.leading(order).ok_or(PolyError::ZeroPolynomial)?;
        Ok(LeadingData {
            term: Term {
                coefficient: c.clone(),
                monomial: m.clone(),
            },
        })
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: RingElement) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Removes and returns the coefficient at `m`.
    pub fn take_term(&mut self, m: &Monomial) -> Option<RingElement> {
        self.terms.remove(m)
    }

    /// `self -= c · shift · g`, in place.
    pub fn sub_scaled(&mut self, c: &RingElement, shift: &Monomial, g: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (m, gc) in &g.terms {
            let prod = c * gc;
            self.add_term(m.mul(shift), -&prod);
        }
    }

    /// `self += c · shift · g`, in place.
    pub fn add_scaled(&mut self, c: &RingElement, shift: &Monomial, g: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (m, gc) in &g.terms {
            self.add_term(m.mul(shift), c * gc);
        }
    }

    pub fn scale(&self, c: &RingElement) -> Polynomial {
        let mut p = Polynomial::zero(&self.ring, self.nvars);
        if c.is_zero() {
            return p;
        }
        for (m, a) in &self.terms {
            let prod = a * c;
            if !prod.is_zero() {
                p.terms.insert(m.clone(), prod);
            }
        }
        p
    }

    pub fn mul_monomial(&self, shift: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(shift), c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &RingElement, shift: &Monomial) -> Polynomial {
        let mut p = Polynomial::zero(&self.ring, self.nvars);
        p.add_scaled(c, shift, self);
        p
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring, self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Leading term of `self` under `order` as a polynomial.
    pub fn leading_term_poly(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            Some((m, c)) => Polynomial::term(&self.ring, c.clone(), m.clone()),
            None => Polynomial::zero(&self.ring, self.nvars),
        }
    }

    pub fn map_coefficients<F>(&self, ring: &RingDescriptor, mut f: F) -> Polynomial
    where
        F: FnMut(&RingElement) -> RingElement,
    {
        let mut p = Polynomial::zero(ring, self.nvars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch);
        }
        if self.nvars != other.nvars {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    pub fn try_scale(&self, c: &RingElement) -> Result<Polynomial, PolyError> {
        if !self.ring.owns(c) {
            return Err(PolyError::RingMismatch);
        }
        Ok(self.scale(c))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.ring == rhs.ring && self.nvars == rhs.nvars, "incompatible polynomials");
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.ring == rhs.ring && self.nvars == rhs.nvars, "incompatible polynomials");
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), -c);
        }
        p
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.ring == rhs.ring && self.nvars == rhs.nvars, "incompatible polynomials");
        let mut p = Polynomial::zero(&self.ring, self.nvars);
        for (m, c) in &self.terms {
            p.add_scaled(c, m, rhs);
        }
        p
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::text::default_names("x", self.nvars);
        f.write_str(&crate::text::format_polynomial(self, &MonomialOrder::lex(), &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_polynomial, VarContext};
    use proptest::prelude::*;

    fn zz(src: &str) -> Polynomial {
        parse_polynomial(src, &VarContext::positional(RingDescriptor::Integers, 2)).unwrap()
    }

    #[test]
    fn leading_data_reads_off_lex_leader() {
        let f = zz("3*x1^2 + 2*x2");
        let ld = f.leading_data(&MonomialOrder::lex()).unwrap();
        assert_eq!(ld.lm(), &Monomial::from([2, 0]));
        assert_eq!(ld.lc(), &RingDescriptor::Integers.from_i64(3));
        assert_eq!(ld.deg(), &[2, 0]);
    }

    #[test]
    fn zero_has_no_leading_data() {
        let z = Polynomial::zero(&RingDescriptor::Integers, 2);
        assert_eq!(z.leading_data(&MonomialOrder::lex()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&zz("3*x1^2") + &zz("-3*x1^2")).is_zero());
        assert_eq!(&zz("x1 - 1") * &zz("x1 + 1"), zz("x1^2 - 1"));
    }

    #[test]
    fn theta_scaling() {
        let ring = RingDescriptor::poly_over_rationals(&["a"], OrderKind::Lex).unwrap();
        let ctx = VarContext::positional(ring.clone(), 1);
        let f1 = parse_polynomial("a^2*x1 - a", &ctx).unwrap();
        let a = ring.theta_var(0);
        assert_eq!(f1.scale(&a), parse_polynomial("a^3*x1 - a^2", &ctx).unwrap());
        // lm_X and lc_X of f2
        let f2 = parse_polynomial("(a^3 - 1)*x1 - a^2 + 1", &ctx).unwrap();
        let ld = f2.leading_data(&MonomialOrder::lex()).unwrap();
        assert_eq!(ld.lm(), &Monomial::from([1]));
        let lc = ring.parse_element("a^3 - 1").unwrap();
        assert_eq!(ld.lc(), &lc);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let f = zz("x1");
        let g = Polynomial::var(&RingDescriptor::Rationals, 2, 0);
        assert_eq!(f.try_add(&g), Err(PolyError::RingMismatch));
        let h = Polynomial::var(&RingDescriptor::Integers, 3, 0);
        assert!(matches!(f.try_mul(&h), Err(PolyError::DimensionMismatch { .. })));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-5i64..=5, 0u32..=3, 0u32..=3), 0..5).prop_map(|ts| {
            let mut p = Polynomial::zero(&RingDescriptor::Integers, 2);
            for (c, a, b) in ts {
                p.add_term(Monomial::from([a, b]), RingDescriptor::Integers.from_i64(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert!((&f + &(-&f)).is_zero());
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn leading_monomial_is_multiplicative(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            for o in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
                let fg = &f * &g;
                prop_assert_eq!(
                    fg.leading_monomial(&o).unwrap().clone(),
                    f.leading_monomial(&o).unwrap().mul(g.leading_monomial(&o).unwrap())
                );
            }
        }
    }
}

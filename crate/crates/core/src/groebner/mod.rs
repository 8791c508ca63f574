//! Gröbner bases over ℤ, fields and `k[θ]`, with the certification
//! predicates used to check them.

pub(crate) mod field;

mod block;
mod normal_form;
mod pid;
mod short;
mod verify;

use thiserror::Error;

use crate::coeffring::{RingDescriptor, RingElement};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

pub use block::buchberger_block;
pub use normal_form::{normal_form, NormalForm, Reducer};
pub use pid::buchberger_pid;
pub use short::pauer_short_reduce;
pub use verify::{
    is_groebner_basis_of, is_strong_gb, verify_groebner, verify_strong_reduced, StrongCheck,
    StrongReducedCheck,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("unsupported coefficient ring for this operation: {0}")]
    UnsupportedRing(String),
    #[error("basis is not certified as a Gröbner basis")]
    NotCertified,
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("probe {0} is not in the ideal")]
    ProbeNotInIdeal(usize),
}

/// How much is known about a [`GroebnerBasis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certification {
    /// An arbitrary generating set.
    Raw,
    Groebner,
    /// The minimal-length Pauer-reduced basis.
    ShortReduced,
    /// A strong Gröbner basis over a PID.
    StrongPID,
    /// Short reduced and checked against the three strong-reduced conditions.
    StrongReduced,
}

impl Certification {
    pub fn is_groebner(self) -> bool {
        self != Certification::Raw
    }

    pub fn is_short_reduced(self) -> bool {
        matches!(self, Certification::ShortReduced | Certification::StrongReduced)
    }

    pub fn name(self) -> &'static str {
        match self {
            Certification::Raw => "raw",
            Certification::Groebner => "groebner",
            Certification::ShortReduced => "short_reduced",
            Certification::StrongPID => "strong_pid",
            Certification::StrongReduced => "strong_reduced",
        }
    }
}

/// A generating list over `A[x1..xn]` tagged with its order and certification.
///
/// Elements are nonzero and pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingDescriptor,
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    certification: Certification,
}

impl GroebnerBasis {
    /// An uncertified generating set; zeros and duplicates are dropped.
    pub fn raw(
        ring: &RingDescriptor,
        nvars: usize,
        order: &MonomialOrder,
        elements: Vec<Polynomial>,
    ) -> Result<Self, GroebnerError> {
        check_inputs(ring, nvars, &elements)?;
        Ok(Self::new(ring, nvars, order, elements, Certification::Raw))
    }

    pub(crate) fn new(
        ring: &RingDescriptor,
        nvars: usize,
        order: &MonomialOrder,
        elements: Vec<Polynomial>,
        certification: Certification,
    ) -> Self {
        let mut uniq: Vec<Polynomial> = Vec::with_capacity(elements.len());
        for e in elements {
            if !e.is_zero() && !uniq.contains(&e) {
                uniq.push(e);
            }
        }
        GroebnerBasis {
            ring: ring.clone(),
            nvars,
            order: order.clone(),
            elements: uniq,
            certification,
        }
    }

    /// Runs [`verify_groebner`] and upgrades a raw set on success.
    pub fn certify(mut self) -> Result<Self, GroebnerError> {
        if self.certification.is_groebner() {
            return Ok(self);
        }
        if verify_groebner(&self) {
            self.certification = Certification::Groebner;
            Ok(self)
        } else {
            Err(GroebnerError::NotCertified)
        }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn certification(&self) -> Certification {
        self.certification
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).unwrap().clone())
            .collect()
    }

    pub fn leading_coefficients(&self) -> Vec<RingElement> {
        self.elements
            .iter()
            .map(|g| g.leading_coefficient(&self.order).unwrap().clone())
            .collect()
    }

    /// Every leading coefficient equals 1.
    pub fn is_monic(&self) -> bool {
        self.leading_coefficients().iter().all(RingElement::is_one)
    }

    /// Element texts under the basis order.
    pub fn format(&self, names: &[String]) -> Vec<String> {
        self.elements
            .iter()
            .map(|g| crate::text::format_polynomial(g, &self.order, names))
            .collect()
    }
}

pub(crate) fn check_inputs(
    ring: &RingDescriptor,
    nvars: usize,
    polys: &[Polynomial],
) -> Result<(), GroebnerError> {
    for p in polys {
        if p.ring() != ring {
            return Err(GroebnerError::RingMismatch);
        }
        if p.nvars() != nvars {
            return Err(GroebnerError::DimensionMismatch {
                expected: nvars,
                found: p.nvars(),
            });
        }
    }
    Ok(())
}

/// Gröbner basis of `⟨gens⟩` using the construction appropriate for `ring`.
pub fn groebner_basis(
    ring: &RingDescriptor,
    nvars: usize,
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    match ring {
        RingDescriptor::PolyOverField(_) => buchberger_block(ring, nvars, gens, order),
        _ => buchberger_pid(ring, nvars, gens, order),
    }
}

/// Short reduced Gröbner basis of `⟨gens⟩`.
pub fn short_reduced_basis(
    ring: &RingDescriptor,
    nvars: usize,
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    pauer_short_reduce(&groebner_basis(ring, nvars, gens, order)?)
}

/// Sorts descending by leading monomial, then by text, for reproducible output.
pub(crate) fn canonical_sort(elements: &mut [Polynomial], order: &MonomialOrder) {
    elements.sort_by(|a, b| {
        let (ma, mb) = (a.leading_monomial(order).unwrap(), b.leading_monomial(order).unwrap());
        order.cmp(mb, ma).then_with(|| a.to_string().cmp(&b.to_string()))
    });
}

#[cfg(test)]
mod tests;

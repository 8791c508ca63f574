//! Border bases over coefficient rings: order ideals, borders, prebases and
//! the unique `O`-border basis of an ideal with a free quotient.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::coeffring::RingDescriptor;
use crate::groebner::{groebner_basis, short_reduced_basis, GroebnerBasis, GroebnerError, Reducer};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::quotient::{module_basis, QuotientError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BorderError {
    #[error("order ideal is empty")]
    EmptySet,
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("order ideal is not divisor closed: {witness:?} is a member but its divisor {missing:?} is not")]
    NotDivisorClosed { witness: Monomial, missing: Monomial },
    #[error("expected {expected} prebasis elements, one per border monomial, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("element {element} has the term {monomial:?} outside the order ideal")]
    BadSupport { element: usize, monomial: Monomial },
    #[error("no element has the border monomial {monomial:?} as its border term")]
    MissingBorderTerm { monomial: Monomial },
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("basis is not certified short reduced")]
    NotShortReduced,
    #[error("the short reduced basis is not monic, so the quotient is not free")]
    NotFree,
    #[error("order ideal differs from the standard monomials of the basis")]
    OrderIdealMismatch,
    #[error("the quotient has infinite rank")]
    InfiniteQuotient,
    #[error("prebasis is not certified as a border basis")]
    NotCertified,
    #[error("prebasis is not a border basis of the given ideal")]
    NotBorderBasis,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Sort key for order ideals and borders: ascending degree-reverse-lex.
fn sort_monomials(ms: &mut [Monomial]) {
    let o = MonomialOrder::grevlex();
    ms.sort_by(|a, b| o.cmp(a, b));
}

/// A nonempty divisor-closed monomial set `O` and its border
/// `∂O = (x_1·O ∪ … ∪ x_n·O) ∖ O`. Both lists ascend in grevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderIdealSpec {
    nvars: usize,
    monomials: Vec<Monomial>,
    border: Vec<Monomial>,
}

impl OrderIdealSpec {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn border(&self) -> &[Monomial] {
        &self.border
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.binary_search_by(|a| MonomialOrder::grevlex().cmp(a, m)).is_ok()
    }

    fn border_index(&self, m: &Monomial) -> Option<usize> {
        self.border.binary_search_by(|a| MonomialOrder::grevlex().cmp(a, m)).ok()
    }
}

/// Checks that `monomials` is a nonempty order ideal in `nvars` variables
/// and computes its border.
///
/// It suffices to check immediate divisors `m / x_i`. The witness is the
/// first offending member in grevlex with its lex-largest missing divisor.
pub fn validate_order_ideal(nvars: usize, monomials: &[Monomial]) -> Result<OrderIdealSpec, BorderError> {
    if monomials.is_empty() {
        return Err(BorderError::EmptySet);
    }
    if let Some(m) = monomials.iter().find(|m| m.nvars() != nvars) {
        return Err(BorderError::DimensionMismatch {
            expected: nvars,
            found: m.nvars(),
        });
    }
    let set: BTreeSet<&Monomial> = monomials.iter().collect();
    let mut ms: Vec<Monomial> = set.iter().map(|m| (*m).clone()).collect();
    sort_monomials(&mut ms);
    let lex = MonomialOrder::lex();
    for m in &ms {
        let missing = (0..nvars)
            .filter_map(|i| m.div_var(i))
            .filter(|d| !set.contains(d))
            .max_by(|a, b| lex.cmp(a, b));
        if let Some(d) = missing {
            return Err(BorderError::NotDivisorClosed {
                witness: m.clone(),
                missing: d,
            });
        }
    }
    let border: BTreeSet<Monomial> = ms
        .iter()
        .flat_map(|m| (0..nvars).map(move |i| m.mul_var(i)))
        .filter(|m| !set.contains(m))
        .collect();
    let mut border: Vec<Monomial> = border.into_iter().collect();
    sort_monomials(&mut border);
    Ok(OrderIdealSpec {
        nvars,
        monomials: ms,
        border,
    })
}

/// An `O`-border prebasis: `elements[i] = x^{β_i} − Σ c_ij x^{α_j}` with
/// `β_i = border[i]` and every `α_j ∈ O`.
///
/// `certified` holds the term order under which the prebasis was shown to
/// be the border basis of its ideal; only then is [`border_nf`] available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderPrebasis {
    ring: RingDescriptor,
    order_ideal: OrderIdealSpec,
    elements: Vec<Polynomial>,
    certified: Option<MonomialOrder>,
}

impl BorderPrebasis {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn order_ideal(&self) -> &OrderIdealSpec {
        &self.order_ideal
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_certified(&self) -> bool {
        self.certified.is_some()
    }

    /// Certifies the prebasis against `ideal_gens` under `order`.
    pub fn certify(mut self, ideal_gens: &[Polynomial], order: &MonomialOrder) -> Result<Self, BorderError> {
        if !is_border_basis(&self, ideal_gens, order)? {
            return Err(BorderError::NotBorderBasis);
        }
        self.certified = Some(order.clone());
        Ok(self)
    }
}

/// Matches each polynomial to the border monomial it carries.
///
/// The border term of a polynomial is its grevlex-largest term outside `O`
/// that is a border monomial with coefficient 1; any other term outside `O`
/// is reported as bad support. Every border monomial must be claimed once.
pub fn validate_prebasis(o: &OrderIdealSpec, polys: &[Polynomial]) -> Result<BorderPrebasis, BorderError> {
    if polys.len() != o.border.len() {
        return Err(BorderError::CountMismatch {
            expected: o.border.len(),
            found: polys.len(),
        });
    }
    let ring = polys.first().map_or(RingDescriptor::Integers, |p| p.ring().clone());
    let grevlex = MonomialOrder::grevlex();
    let mut slots: Vec<Option<Polynomial>> = vec![None; o.border.len()];
    for (k, p) in polys.iter().enumerate() {
        if *p.ring() != ring {
            return Err(BorderError::RingMismatch);
        }
        if p.nvars() != o.nvars {
            return Err(BorderError::DimensionMismatch {
                expected: o.nvars,
                found: p.nvars(),
            });
        }
        let mut claimed: Option<usize> = None;
        for (m, c) in p.terms_desc(&grevlex) {
            if o.contains(m) {
                continue;
            }
            match o.border_index(m) {
                Some(i) if claimed.is_none() && c.is_one() => claimed = Some(i),
                _ => {
                    return Err(BorderError::BadSupport {
                        element: k,
                        monomial: m.clone(),
                    })
                }
            }
        }
        if let Some(i) = claimed {
            if slots[i].is_none() {
                slots[i] = Some(p.clone());
            }
        }
    }
    let mut elements = Vec::with_capacity(slots.len());
    for (i, s) in slots.into_iter().enumerate() {
        match s {
            Some(p) => elements.push(p),
            None => {
                return Err(BorderError::MissingBorderTerm {
                    monomial: o.border[i].clone(),
                })
            }
        }
    }
    Ok(BorderPrebasis {
        ring,
        order_ideal: o.clone(),
        elements,
        certified: None,
    })
}

/// Standard monomials of a monic short reduced basis, or the reason there
/// is no finite free quotient.
fn standard_set(g: &GroebnerBasis) -> Result<Vec<Monomial>, BorderError> {
    match module_basis(g, None) {
        Ok(s) => {
            let mut ms = s.monomials;
            sort_monomials(&mut ms);
            Ok(ms)
        }
        Err(QuotientError::NotMonic) => Err(BorderError::NotFree),
        Err(QuotientError::NotShortReduced) => Err(BorderError::NotShortReduced),
        Err(_) => Err(BorderError::InfiniteQuotient),
    }
}

/// The unique `O`-border basis `{x^β − NF(x^β) : x^β ∈ ∂O}` of `⟨G⟩`, where
/// `O` must be the standard monomial set of the monic short reduced `G`.
pub fn border_basis_of(g: &GroebnerBasis, o: &OrderIdealSpec) -> Result<BorderPrebasis, BorderError> {
    if o.nvars != g.nvars() {
        return Err(BorderError::DimensionMismatch {
            expected: g.nvars(),
            found: o.nvars,
        });
    }
    if standard_set(g)? != o.monomials {
        return Err(BorderError::OrderIdealMismatch);
    }
    let ring = g.ring();
    let mut red = Reducer::for_basis(g);
    let elements = o
        .border
        .iter()
        .map(|b| {
            let xb = Polynomial::monomial(ring, b.clone());
            &xb - &red.remainder(&xb)
        })
        .collect();
    Ok(BorderPrebasis {
        ring: ring.clone(),
        order_ideal: o.clone(),
        elements,
        certified: Some(g.order().clone()),
    })
}

/// `⟨B⟩ = ⟨ideal_gens⟩` and `O` is the standard monomial set of the monic
/// short reduced basis of that ideal under `order`.
pub fn is_border_basis(
    b: &BorderPrebasis,
    ideal_gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<bool, BorderError> {
    let ring = b.ring();
    let n = b.order_ideal.nvars;
    let g = short_reduced_basis(ring, n, ideal_gens, order)?;
    let std = match standard_set(&g) {
        Ok(s) => s,
        Err(BorderError::InfiniteQuotient) => return Ok(false),
        Err(e) => return Err(e),
    };
    if std != b.order_ideal.monomials {
        return Ok(false);
    }
    let mut red = Reducer::for_basis(&g);
    if !b.elements.iter().all(|p| red.remainder(p).is_zero()) {
        return Ok(false);
    }
    let gb = groebner_basis(ring, n, &b.elements, order)?;
    let mut red = Reducer::for_basis(&gb);
    Ok(ideal_gens.iter().all(|f| red.remainder(f).is_zero()))
}

/// Border normal form of `f`: the order-maximal term outside `O` is
/// rewritten with the first border element whose monomial divides it,
/// until `f` is supported on `O`.
///
/// Terminates for certified bases since each `x^β − b_β` has only terms
/// below `x^β` in the certifying order.
pub fn border_nf(f: &Polynomial, b: &BorderPrebasis) -> Result<Polynomial, BorderError> {
    let order = b.certified.as_ref().ok_or(BorderError::NotCertified)?;
    if *f.ring() != b.ring {
        return Err(BorderError::RingMismatch);
    }
    if f.nvars() != b.order_ideal.nvars {
        return Err(BorderError::DimensionMismatch {
            expected: b.order_ideal.nvars,
            found: f.nvars(),
        });
    }
    let o = &b.order_ideal;
    let mut f = f.clone();
    loop {
        let top = f
            .terms_desc(order)
            .into_iter()
            .find(|(m, _)| !o.contains(m))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((m, c)) = top else {
            return Ok(f);
        };
        let i = o
            .border
            .iter()
            .position(|beta| beta.divides(&m))
            .expect("a monomial outside a divisor-closed set has a border divisor");
        let shift = o.border[i].quotient_of(&m).expect("divides");
        f.sub_scaled(&c, &shift, &b.elements[i]);
    }
}

//! Gröbner bases over `k[θ][x]` through the joint ring `k[x, θ]`.

use super::{check_inputs, field, Certification, GroebnerBasis, GroebnerError};
use crate::coeffring::{RingDescriptor, RingElement};
use crate::poly::{MonomialOrder, Polynomial};

/// Flattens an X-polynomial with θ-coefficients into `k[x1..xn, θ1..θm]`.
pub(crate) fn to_joint(f: &Polynomial) -> Polynomial {
    let theta = f.ring().theta_base();
    let base = theta.base.ring();
    let mut out = Polynomial::zero(&base, f.nvars() + theta.vars.len());
    for (xm, c) in f.terms() {
        for (tm, a) in c.as_poly().expect("parameter coefficient").terms() {
            out.add_term(xm.concat(tm), a.clone());
        }
    }
    out
}

/// Inverse of [`to_joint`].
pub(crate) fn from_joint(h: &Polynomial, ring: &RingDescriptor, nvars: usize) -> Polynomial {
    let theta = ring.theta_base();
    let base = theta.base.ring();
    let m = theta.vars.len();
    let mut out = Polynomial::zero(ring, nvars);
    for (jm, a) in h.terms() {
        let (xm, tm) = jm.split(nvars);
        let c = Polynomial::term(&base, a.clone(), tm);
        debug_assert_eq!(c.nvars(), m);
        out.add_term(xm, RingElement::Poly(c));
    }
    out
}

/// Block order `(x_order, θ order)` on the joint ring.
pub(crate) fn joint_order(ring: &RingDescriptor, nvars: usize, x_order: &MonomialOrder) -> MonomialOrder {
    let theta = ring.theta_base();
    x_order.joint(nvars, theta.order, theta.vars.len())
}

/// Reduced joint-ring basis under the block order with X before Θ.
pub(crate) fn joint_basis(
    ring: &RingDescriptor,
    nvars: usize,
    gens: &[Polynomial],
    x_order: &MonomialOrder,
) -> Vec<Polynomial> {
    let joint: Vec<Polynomial> = gens.iter().map(to_joint).collect();
    field::reduced_basis(&joint, &joint_order(ring, nvars, x_order))
}

/// Gröbner basis over `k[θ][x]` with respect to `x_order`; the θ order is
/// the one declared by the ring.
///
/// The reduced basis in `k[x, θ]` under the block order is read back as
/// X-polynomials with `k[θ]` coefficients.
pub fn buchberger_block(
    ring: &RingDescriptor,
    nvars: usize,
    gens: &[Polynomial],
    x_order: &MonomialOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    if ring.theta().is_none() {
        return Err(GroebnerError::UnsupportedRing(ring.header()));
    }
    check_inputs(ring, nvars, gens)?;
    let elements = joint_basis(ring, nvars, gens, x_order)
        .iter()
        .map(|h| from_joint(h, ring, nvars))
        .collect();
    Ok(GroebnerBasis::new(ring, nvars, x_order, elements, Certification::Groebner))
}

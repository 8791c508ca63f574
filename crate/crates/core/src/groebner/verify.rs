//! Definition-based checks on bases; independent of how a basis was built.

use super::block::{from_joint, joint_basis, joint_order, to_joint};
use super::pid::{g_polynomial, s_polynomial, term_covered};
use super::{check_inputs, field, groebner_basis, GroebnerBasis, GroebnerError, Reducer};
use crate::coeffring::{CoefficientIdeal, RingDescriptor, RingElement};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// `⟨lt(G)⟩ = ⟨lt(⟨G⟩)⟩`.
///
/// Over ℤ and fields every S-polynomial must reduce to zero. Over `k[θ]`
/// the reduced joint-ring basis `H` of `⟨G⟩` is computed and each
/// `lc_X(h)` must lie in `⟨lc_X(g) : lm_X(g) | lm_X(h)⟩`.
pub fn verify_groebner(g: &GroebnerBasis) -> bool {
    if g.is_empty() {
        return true;
    }
    let mut red = Reducer::for_basis(g);
    match g.ring() {
        RingDescriptor::PolyOverField(_) => {
            let h = joint_basis(g.ring(), g.nvars(), g.elements(), g.order());
            h.iter().all(|h| {
                let hx = from_joint(h, g.ring(), g.nvars());
                let (m, c) = hx.leading(g.order()).unwrap();
                let c = c.clone();
                red.coefficient_ideal(&m.clone()).reduce_unchecked(&c).representative.is_zero()
            })
        }
        _ => {
            let n = g.len();
            (0..n).all(|j| {
                (0..j).all(|i| {
                    let s = s_polynomial(&red, i, j);
                    red.remainder(&s).is_zero()
                })
            })
        }
    }
}

/// `g` is a Gröbner basis and generates the same ideal as `gens`.
pub fn is_groebner_basis_of(g: &GroebnerBasis, gens: &[Polynomial]) -> Result<bool, GroebnerError> {
    check_inputs(g.ring(), g.nvars(), gens)?;
    if !verify_groebner(g) {
        return Ok(false);
    }
    let mut red = Reducer::for_basis(g);
    if !gens.iter().all(|f| red.remainder(f).is_zero()) {
        return Ok(false);
    }
    let other = groebner_basis(g.ring(), g.nvars(), gens, g.order())?;
    let mut red = Reducer::for_basis(&other);
    Ok(g.elements().iter().all(|f| red.remainder(f).is_zero()))
}

/// Outcome of [`is_strong_gb`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCheck {
    pub strong: bool,
    pub counterexample: Option<Polynomial>,
}

fn single_divisor(g: &GroebnerBasis, f: &Polynomial) -> bool {
    let (m, c) = f.leading(g.order()).unwrap();
    g.elements().iter().any(|gi| {
        let (gm, gc) = gi.leading(g.order()).unwrap();
        gm.divides(m) && CoefficientIdeal::divides(g.ring(), gc, c)
    })
}

/// Whether every element of `⟨G⟩` has a leading term divisible by a single `lt(g_i)`.
///
/// Over ℤ this is decided by requiring, for every pair, some `lt(g_k)` to
/// divide `gcd(a_i, a_j)·lcm(lm_i, lm_j)`; the failing G-polynomial is the
/// counterexample. Each probe must lie in `⟨G⟩` and is then tested
/// directly; the first probe without a single divisor is reported.
pub fn is_strong_gb(g: &GroebnerBasis, probes: &[Polynomial]) -> Result<StrongCheck, GroebnerError> {
    if !g.certification().is_groebner() {
        return Err(GroebnerError::NotCertified);
    }
    check_inputs(g.ring(), g.nvars(), probes)?;
    let mut red = Reducer::for_basis(g);
    if *g.ring() == RingDescriptor::Integers {
        let lms = g.leading_monomials();
        for j in 0..g.len() {
            for i in 0..j {
                let (d, gp) = g_polynomial(&red, i, j);
                if !term_covered(&red, &d, &lms[i].lcm(&lms[j])) {
                    return Ok(StrongCheck {
                        strong: false,
                        counterexample: Some(gp),
                    });
                }
            }
        }
    }
    for (k, f) in probes.iter().enumerate() {
        if !red.remainder(f).is_zero() {
            return Err(GroebnerError::ProbeNotInIdeal(k));
        }
        if !f.is_zero() && !single_divisor(g, f) {
            return Ok(StrongCheck {
                strong: false,
                counterexample: Some(f.clone()),
            });
        }
    }
    Ok(StrongCheck {
        strong: true,
        counterexample: None,
    })
}

/// Outcome of [`verify_strong_reduced`]; `failed_condition` is 1, 2 or 3,
/// or `None` when the set is not a Gröbner basis at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrongReducedCheck {
    pub holds: bool,
    pub failed_condition: Option<u8>,
}

impl StrongReducedCheck {
    fn fail(c: Option<u8>) -> Self {
        StrongReducedCheck {
            holds: false,
            failed_condition: c,
        }
    }
}

/// Checks the strong reduced conditions over `k[θ][x]` in the order
/// (iii), (i), (ii), and finally the Gröbner property:
///
/// * (iii) for each `e ∈ lm_X(G)`, `lc_X(G_e)` is the reduced Gröbner basis
///   of the ideal it generates in `k[θ]/𝔍_e`, with
///   `𝔍_e = ⟨lc_X(g) : g ∉ G_e, lm_X(g) | e⟩`;
/// * (i) no term of `p` lies in `⟨lt(G∖{p})⟩` in the joint ring;
/// * (ii) no term of `p` lies in `⟨lt_X(G∖{p})⟩` in `k[θ][x]`.
pub fn verify_strong_reduced(g: &GroebnerBasis) -> Result<StrongReducedCheck, GroebnerError> {
    let ring = g.ring();
    let theta = ring
        .theta()
        .ok_or_else(|| GroebnerError::UnsupportedRing(ring.header()))?;
    let order = g.order();
    let t_order = MonomialOrder::simple(theta.order);
    let lms = g.leading_monomials();
    let lcs = g.leading_coefficients();
    let as_theta = |c: &RingElement| c.as_poly().unwrap().clone();

    // (iii)
    let mut es: Vec<&Monomial> = Vec::new();
    for m in &lms {
        if !es.contains(&m) {
            es.push(m);
        }
    }
    for e in es {
        let ce: Vec<Polynomial> = (0..g.len()).filter(|&i| lms[i] == *e).map(|i| as_theta(&lcs[i])).collect();
        let le: Vec<Polynomial> = (0..g.len())
            .filter(|&i| lms[i] != *e && lms[i].divides(e))
            .map(|i| as_theta(&lcs[i]))
            .collect();
        if !reduced_in_quotient(&ce, &le, &t_order) {
            return Ok(StrongReducedCheck::fail(Some(3)));
        }
    }

    // (i)
    let jorder = joint_order(ring, g.nvars(), order);
    let joint: Vec<Polynomial> = g.elements().iter().map(to_joint).collect();
    let jlms: Vec<Monomial> = joint.iter().map(|h| h.leading_monomial(&jorder).unwrap().clone()).collect();
    for (p, h) in joint.iter().enumerate() {
        let hit = h
            .monomials()
            .any(|m| jlms.iter().enumerate().any(|(k, l)| k != p && l.divides(m)));
        if hit {
            return Ok(StrongReducedCheck::fail(Some(1)));
        }
    }

    // (ii)
    for (p, f) in g.elements().iter().enumerate() {
        for (m, c) in f.terms() {
            let others: Vec<RingElement> = (0..g.len())
                .filter(|&k| k != p && lms[k].divides(m))
                .map(|k| lcs[k].clone())
                .collect();
            if others.is_empty() {
                continue;
            }
            let ideal = CoefficientIdeal::new(ring, others).expect("same ring");
            if ideal.reduce_unchecked(c).representative.is_zero() {
                return Ok(StrongReducedCheck::fail(Some(2)));
            }
        }
    }
    if !verify_groebner(g) {
        return Ok(StrongReducedCheck::fail(None));
    }
    Ok(StrongReducedCheck {
        holds: true,
        failed_condition: None,
    })
}

/// `c` is the reduced Gröbner basis of `⟨c⟩` in `k[θ]/⟨l⟩`.
fn reduced_in_quotient(c: &[Polynomial], l: &[Polynomial], order: &MonomialOrder) -> bool {
    let rj = field::reduced_basis(l, order);
    let rj_lms: Vec<&Monomial> = rj.iter().map(|r| r.leading_monomial(order).unwrap()).collect();
    let c_lms: Vec<&Monomial> = c.iter().map(|p| p.leading_monomial(order).unwrap()).collect();
    for (k, p) in c.iter().enumerate() {
        if !p.leading_coefficient(order).unwrap().is_one() {
            return false;
        }
        for m in p.monomials() {
            let by_j = rj_lms.iter().any(|l| l.divides(m));
            let by_c = c_lms.iter().enumerate().any(|(i, l)| i != k && l.divides(m));
            if by_j || by_c {
                return false;
            }
        }
    }
    // C ∪ RGB(J) must have the leading monomials of ⟨C⟩ + J
    let all: Vec<Polynomial> = c.iter().chain(l).cloned().collect();
    field::reduced_basis(&all, order).iter().all(|r| {
        let m = r.leading_monomial(order).unwrap();
        rj_lms.iter().chain(&c_lms).any(|l| l.divides(m))
    })
}

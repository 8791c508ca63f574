//! Short reduced Gröbner bases.

use super::{canonical_sort, Certification, GroebnerBasis, GroebnerError, Reducer};
use crate::coeffring::CoefficientIdeal;
use crate::poly::{Monomial, Polynomial};

/// Short reduced Gröbner basis of the ideal generated by a Gröbner basis.
///
/// For each distinct leading monomial `x^α` of `g`:
///
/// * `full = ⟨lc(g_i) : lm(g_i) | x^α⟩` and
///   `strict = ⟨lc(g_i) : lm(g_i) | x^α, lm(g_i) ≠ x^α⟩`;
/// * `Gen(α)` is a minimal generating set of `full` modulo `strict`
///   (see [`CoefficientIdeal::generators_modulo`]);
/// * each `a ∈ Gen(α)` yields `a·x^α + NF(tail)`, where the leading part is
///   realized by the membership witness of `a` in `full`.
///
/// The output is sorted by descending leading monomial.
pub fn pauer_short_reduce(g: &GroebnerBasis) -> Result<GroebnerBasis, GroebnerError> {
    if !g.certification().is_groebner() {
        return Err(GroebnerError::NotCertified);
    }
    let order = g.order();
    let ring = g.ring();
    let lms = g.leading_monomials();
    let lcs = g.leading_coefficients();
    let mut alphas: Vec<Monomial> = Vec::new();
    for m in &lms {
        if !alphas.contains(m) {
            alphas.push(m.clone());
        }
    }
    alphas.sort_by(|a, b| order.cmp(a, b));

    let mut red = Reducer::for_basis(g);
    let mut out: Vec<Polynomial> = Vec::new();
    for alpha in &alphas {
        let full_idx: Vec<usize> = (0..lms.len()).filter(|&i| lms[i].divides(alpha)).collect();
        let strict_idx: Vec<usize> = full_idx.iter().copied().filter(|&i| lms[i] != *alpha).collect();
        let full = red.ideal_of(&full_idx).clone();
        let strict = CoefficientIdeal::new(ring, strict_idx.iter().map(|&i| lcs[i].clone()).collect())
            .expect("leading coefficients belong to the ring");
        for a in full.generators_modulo(&strict) {
            let w = full
                .membership_witness(&a)
                .expect("same ring")
                .expect("generator lies in the ideal");
            let mut h = Polynomial::zero(ring, g.nvars());
            for (b, &i) in w.iter().zip(&full_idx) {
                h.add_scaled(b, &lms[i].quotient_of(alpha).unwrap(), &g.elements()[i]);
            }
            let lead = Polynomial::term(ring, a.clone(), alpha.clone());
            debug_assert_eq!(h.leading_term_poly(order), lead);
            let tail = &h - &lead;
            out.push(&lead + &red.remainder(&tail));
        }
    }
    canonical_sort(&mut out, order);
    Ok(GroebnerBasis::new(ring, g.nvars(), order, out, Certification::ShortReduced))
}

//! Buchberger's algorithm over ℤ with S- and G-polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::{check_inputs, field, Certification, GroebnerBasis, GroebnerError, Reducer};
use crate::coeffring::{ext_gcd, RingDescriptor, RingElement};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum PairKind {
    S,
    G,
}

struct Pair {
    i: usize,
    j: usize,
    kind: PairKind,
    lcm: Monomial,
}

fn int(c: &RingElement) -> &BigInt {
    c.as_integer().expect("integer coefficient")
}

fn positive(p: Polynomial, order: &MonomialOrder) -> Polynomial {
    if int(p.leading_coefficient(order).unwrap()).is_negative() {
        -&p
    } else {
        p
    }
}

/// `(L/a_i)(X/lm_i)g_i − (L/a_j)(X/lm_j)g_j` with `L = lcm(a_i, a_j)`, `X = lcm(lm_i, lm_j)`.
pub(crate) fn s_polynomial(red: &Reducer, i: usize, j: usize) -> Polynomial {
    let ring = red.elements()[i].ring();
    let (lms, lcs) = (red.leading_monomials(), red.leading_coefficients());
    let x = lms[i].lcm(&lms[j]);
    let (ci, cj) = match (&lcs[i], &lcs[j]) {
        (RingElement::Integer(a), RingElement::Integer(b)) => {
            let l = a.lcm(b);
            (ring.from_bigint(&(&l / a)), ring.from_bigint(&(&l / b)))
        }
        (a, b) => (b.clone(), a.clone()),
    };
    let mut s = red.elements()[i].mul_term(&ci, &lms[i].quotient_of(&x).unwrap());
    s.sub_scaled(&cj, &lms[j].quotient_of(&x).unwrap(), &red.elements()[j]);
    s
}

/// `u(X/lm_i)g_i + v(X/lm_j)g_j` with `u·a_i + v·a_j = gcd(a_i, a_j)`; its leading term is `gcd·X`.
pub(crate) fn g_polynomial(red: &Reducer, i: usize, j: usize) -> (BigInt, Polynomial) {
    let ring = &RingDescriptor::Integers;
    let (lms, lcs) = (red.leading_monomials(), red.leading_coefficients());
    let x = lms[i].lcm(&lms[j]);
    let (d, u, v) = ext_gcd(int(&lcs[i]), int(&lcs[j]));
    let mut g = red.elements()[i].mul_term(&ring.from_bigint(&u), &lms[i].quotient_of(&x).unwrap());
    g.add_scaled(&ring.from_bigint(&v), &lms[j].quotient_of(&x).unwrap(), &red.elements()[j]);
    (d, g)
}

/// Whether some `lt(g_k)` divides `d·X`.
pub(crate) fn term_covered(red: &Reducer, d: &BigInt, x: &Monomial) -> bool {
    red.leading_monomials()
        .iter()
        .zip(red.leading_coefficients())
        .any(|(m, c)| m.divides(x) && d.is_multiple_of(int(c)))
}

/// Strong Gröbner basis over ℤ; over a field the classical reduced basis.
///
/// Pairs are taken by increasing lcm, S before G at equal lcm, then by
/// index. A G-polynomial is added only when no existing leading term
/// divides `gcd(a_i, a_j)·lcm(lm_i, lm_j)`. Finally elements whose leading
/// term is divisible by another's are dropped and leading coefficients are
/// made positive.
pub fn buchberger_pid(
    ring: &RingDescriptor,
    nvars: usize,
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GroebnerBasis, GroebnerError> {
    check_inputs(ring, nvars, gens)?;
    match ring {
        RingDescriptor::Integers => {}
        RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => {
            let basis = field::reduced_basis(gens, order);
            return Ok(GroebnerBasis::new(ring, nvars, order, basis, Certification::Groebner));
        }
        RingDescriptor::PolyOverField(_) => {
            return Err(GroebnerError::UnsupportedRing(ring.header()));
        }
    }

    let mut red = Reducer::new(ring, nvars, order, Vec::new());
    let mut pairs: Vec<Pair> = Vec::new();
    let add = |red: &mut Reducer, pairs: &mut Vec<Pair>, g: Polynomial| {
        red.push(g);
        let k = red.elements().len() - 1;
        for i in 0..k {
            let lcm = red.leading_monomials()[i].lcm(&red.leading_monomials()[k]);
            for kind in [PairKind::S, PairKind::G] {
                pairs.push(Pair {
                    i,
                    j: k,
                    kind,
                    lcm: lcm.clone(),
                });
            }
        }
    };
    for g in gens {
        if !g.is_zero() {
            let g = positive(g.clone(), order);
            if !red.elements().contains(&g) {
                add(&mut red, &mut pairs, g);
            }
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                order
                    .cmp(&p.lcm, &q.lcm)
                    .then((p.kind, p.i, p.j).cmp(&(q.kind, q.i, q.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        match pair.kind {
            PairKind::S => {
                let s = s_polynomial(&red, pair.i, pair.j);
                let r = red.remainder(&s);
                if !r.is_zero() {
                    add(&mut red, &mut pairs, positive(r, order));
                }
            }
            PairKind::G => {
                let (d, gp) = g_polynomial(&red, pair.i, pair.j);
                if term_covered(&red, &d, &pair.lcm) {
                    continue;
                }
                let lead = Polynomial::term(ring, ring.from_bigint(&d), pair.lcm.clone());
                let tail = &gp - &lead;
                let g = &lead + &red.remainder(&tail);
                add(&mut red, &mut pairs, g);
            }
        }
    }

    let elems = red.elements();
    let (lms, lcs) = (red.leading_monomials(), red.leading_coefficients());
    let divides = |k: usize, i: usize| lms[k].divides(&lms[i]) && int(&lcs[i]).is_multiple_of(int(&lcs[k]));
    let kept: Vec<Polynomial> = (0..elems.len())
        .filter(|&i| {
            !(0..elems.len()).any(|k| k != i && divides(k, i) && (!divides(i, k) || k < i))
        })
        .map(|i| elems[i].clone())
        .collect();
    Ok(GroebnerBasis::new(ring, nvars, order, kept, Certification::StrongPID))
}

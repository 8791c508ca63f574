//! Buchberger's algorithm over a field, with optional cofactor tracking.
//!
//! Used for polynomial rings over ℚ / GF(p), for the joint ring `k[θ, x]`
//! under a block order, and for ideals of the parameter ring `k[θ]` itself.

use crate::coeffring::RingElement;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// A reduced Gröbner basis with `basis[k] = Σ_i cofactors[k][i] · gens[i]`.
#[derive(Clone, Debug)]
pub(crate) struct TrackedBasis {
    pub basis: Vec<Polynomial>,
    pub cofactors: Vec<Vec<Polynomial>>,
}

struct Elem {
    poly: Polynomial,
    lm: Monomial,
    cof: Option<Vec<Polynomial>>,
}

fn inverse(c: &RingElement) -> RingElement {
    c.inverse().expect("field coefficient is invertible")
}

/// Multivariate division: `f = Σ q_k·basis[k] + r` with no term of `r`
/// divisible by any `lm(basis[k])`. The first divisor in list order is used.
pub(crate) fn divide(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> (Vec<Polynomial>, Polynomial) {
    let leads: Vec<(Monomial, RingElement)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading(order).expect("nonzero divisor");
            (m.clone(), inverse(c))
        })
        .collect();
    let mut quotients: Vec<Polynomial> = basis
        .iter()
        .map(|_| Polynomial::zero(f.ring(), f.nvars()))
        .collect();
    let mut work = f.clone();
    let mut rem = Polynomial::zero(f.ring(), f.nvars());
    while let Some((m, c)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let shift = leads[k].0.quotient_of(&m).unwrap();
                let coef = &c * &leads[k].1;
                work.sub_scaled(&coef, &shift, &basis[k]);
                quotients[k].add_term(shift, coef);
            }
            None => {
                work.take_term(&m);
                rem.add_term(m, c);
            }
        }
    }
    (quotients, rem)
}

/// Full reduction of `p` (with optional cofactors) by the monic elements, skipping `skip`.
fn reduce(
    p: Polynomial,
    mut cof: Option<Vec<Polynomial>>,
    elems: &[Elem],
    skip: Option<usize>,
    order: &MonomialOrder,
) -> (Polynomial, Option<Vec<Polynomial>>) {
    let mut work = p;
    let mut rem = Polynomial::zero(work.ring(), work.nvars());
    while let Some((m, c)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = elems
            .iter()
            .enumerate()
            .find(|(k, e)| Some(*k) != skip && e.lm.divides(&m));
        match divisor {
            Some((_, e)) => {
                let shift = e.lm.quotient_of(&m).unwrap();
                work.sub_scaled(&c, &shift, &e.poly);
                if let (Some(cof), Some(ecof)) = (cof.as_mut(), e.cof.as_ref()) {
                    for (a, b) in cof.iter_mut().zip(ecof) {
                        a.sub_scaled(&c, &shift, b);
                    }
                }
            }
            None => {
                work.take_term(&m);
                rem.add_term(m, c);
            }
        }
    }
    (rem, cof)
}

fn make_monic(
    p: Polynomial,
    cof: Option<Vec<Polynomial>>,
    order: &MonomialOrder,
) -> (Polynomial, Option<Vec<Polynomial>>) {
    let inv = inverse(p.leading_coefficient(order).unwrap());
    let cof = cof.map(|v| v.iter().map(|c| c.scale(&inv)).collect());
    (p.scale(&inv), cof)
}

fn push(elems: &mut Vec<Elem>, poly: Polynomial, cof: Option<Vec<Polynomial>>, order: &MonomialOrder) {
    let lm = poly.leading_monomial(order).unwrap().clone();
    elems.push(Elem { poly, lm, cof });
}

fn compute(gens: &[Polynomial], order: &MonomialOrder, track: bool) -> Vec<Elem> {
    let mut elems: Vec<Elem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let cof = track.then(|| {
            (0..gens.len())
                .map(|k| {
                    if k == i {
                        Polynomial::one(g.ring(), g.nvars())
                    } else {
                        Polynomial::zero(g.ring(), g.nvars())
                    }
                })
                .collect()
        });
        let (p, cof) = make_monic(g.clone(), cof, order);
        push(&mut elems, p, cof, order);
    }

    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for j in 0..elems.len() {
        for i in 0..j {
            pairs.push((i, j, elems[i].lm.lcm(&elems[j].lm)));
        }
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].2, &pairs[b].2)
                    .then((pairs[a].0, pairs[a].1).cmp(&(pairs[b].0, pairs[b].1)))
            })
            .unwrap();
        let (i, j, lcm) = pairs.swap_remove(best);
        if elems[i].lm.is_coprime(&elems[j].lm) {
            continue;
        }
        let one = elems[i].poly.ring().one();
        let si = elems[i].lm.quotient_of(&lcm).unwrap();
        let sj = elems[j].lm.quotient_of(&lcm).unwrap();
        let mut s = elems[i].poly.mul_monomial(&si);
        s.sub_scaled(&one, &sj, &elems[j].poly);
        let cof = match (&elems[i].cof, &elems[j].cof) {
            (Some(ci), Some(cj)) => Some(
                ci.iter()
                    .zip(cj)
                    .map(|(a, b)| {
                        let mut c = a.mul_monomial(&si);
                        c.sub_scaled(&one, &sj, b);
                        c
                    })
                    .collect(),
            ),
            _ => None,
        };
        let (r, cof) = reduce(s, cof, &elems, None, order);
        if r.is_zero() {
            continue;
        }
        let (r, cof) = make_monic(r, cof, order);
        push(&mut elems, r, cof, order);
        let k = elems.len() - 1;
        for i in 0..k {
            pairs.push((i, k, elems[i].lm.lcm(&elems[k].lm)));
        }
    }
    elems
}

/// Minimal, inter-reduced, monic basis sorted by ascending leading monomial.
fn finish(mut elems: Vec<Elem>, order: &MonomialOrder) -> Vec<Elem> {
    let keep: Vec<bool> = (0..elems.len())
        .map(|i| {
            !elems.iter().enumerate().any(|(k, e)| {
                k != i && e.lm.divides(&elems[i].lm) && (e.lm != elems[i].lm || k < i)
            })
        })
        .collect();
    let mut idx = 0;
    elems.retain(|_| {
        idx += 1;
        keep[idx - 1]
    });
    for k in 0..elems.len() {
        let p = elems[k].poly.clone();
        let cof = elems[k].cof.take();
        let (lt, tail) = split_leading(p, order);
        let (tail, tail_cof) = reduce(tail, cof, &elems, Some(k), order);
        let mut q = tail;
        for (m, c) in lt.terms() {
            q.add_term(m.clone(), c.clone());
        }
        elems[k].poly = q;
        elems[k].cof = tail_cof;
    }
    elems.sort_by(|a, b| order.cmp(&a.lm, &b.lm));
    elems
}

/// `(lt(p), p - lt(p))`.
fn split_leading(p: Polynomial, order: &MonomialOrder) -> (Polynomial, Polynomial) {
    let lt = p.leading_term_poly(order);
    let tail = &p - &lt;
    (lt, tail)
}

/// Reduced Gröbner basis over a field; the zero ideal gives the empty list.
pub(crate) fn reduced_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    finish(compute(gens, order, false), order)
        .into_iter()
        .map(|e| e.poly)
        .collect()
}

pub(crate) fn reduced_basis_tracked(gens: &[Polynomial], order: &MonomialOrder) -> TrackedBasis {
    let elems = finish(compute(gens, order, true), order);
    let mut basis = Vec::with_capacity(elems.len());
    let mut cofactors = Vec::with_capacity(elems.len());
    for e in elems {
        basis.push(e.poly);
        cofactors.push(e.cof.expect("tracked"));
    }
    TrackedBasis { basis, cofactors }
}

/// Normal form of `f` with respect to a Gröbner basis over a field.
#[cfg(test)]
pub(crate) fn remainder(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    divide(f, basis, order).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::RingDescriptor;
    use crate::text::VarContext;

    fn q(n: usize) -> VarContext {
        VarContext::positional(RingDescriptor::Rationals, n)
    }

    #[test]
    fn classical_example() {
        let ctx = q(2);
        let gens: Vec<_> = ["x1^2 + x2", "x2"].iter().map(|s| ctx.parse(s).unwrap()).collect();
        let rgb = reduced_basis(&gens, &MonomialOrder::lex());
        let want: Vec<_> = ["x2", "x1^2"].iter().map(|s| ctx.parse(s).unwrap()).collect();
        assert_eq!(rgb, want);
    }

    #[test]
    fn cyclic_three_is_consistent() {
        let ctx = q(3);
        let gens: Vec<_> = [
            "x1 + x2 + x3",
            "x1*x2 + x2*x3 + x3*x1",
            "x1*x2*x3 - 1",
        ]
        .iter()
        .map(|s| ctx.parse(s).unwrap())
        .collect();
        for order in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
            let t = reduced_basis_tracked(&gens, &order);
            for g in &gens {
                assert!(remainder(g, &t.basis, &order).is_zero());
            }
            for (b, cof) in t.basis.iter().zip(&t.cofactors) {
                let mut acc = Polynomial::zero(&RingDescriptor::Rationals, 3);
                for (c, g) in cof.iter().zip(&gens) {
                    acc = &acc + &(c * g);
                }
                assert_eq!(&acc, b);
                assert!(b.leading_coefficient(&order).unwrap().is_one());
            }
        }
    }

    #[test]
    fn division_identity() {
        let ctx = q(2);
        let f = ctx.parse("x1^3*x2 + 2*x1*x2 - 7").unwrap();
        let basis = vec![ctx.parse("x1^2 - x2").unwrap(), ctx.parse("3*x1*x2 - 1").unwrap()];
        let order = MonomialOrder::grevlex();
        let (qs, r) = divide(&f, &basis, &order);
        let mut acc = r.clone();
        for (qk, g) in qs.iter().zip(&basis) {
            acc = &acc + &(qk * g);
        }
        assert_eq!(acc, f);
        for m in r.monomials() {
            for g in &basis {
                assert!(!g.leading_monomial(&order).unwrap().divides(m));
            }
        }
    }
}

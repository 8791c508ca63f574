use std::collections::HashMap;

use super::{check_inputs, GroebnerBasis, GroebnerError};
use crate::coeffring::{CoefficientIdeal, RingDescriptor, RingElement};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// `f = Σ quotients[i]·g_i + remainder`; every remainder term `c·x^α`
/// has `c = η(I_J(α), c)` with `I_J(α) = ⟨lc(g_i) : lm(g_i) | x^α⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// Reduction against a growing list of polynomials, caching the leading
/// coefficient ideal of each divisor set.
pub struct Reducer {
    ring: RingDescriptor,
    nvars: usize,
    order: MonomialOrder,
    elems: Vec<Polynomial>,
    lms: Vec<Monomial>,
    lcs: Vec<RingElement>,
    cache: HashMap<Vec<usize>, CoefficientIdeal>,
}

impl Reducer {
    pub fn new(ring: &RingDescriptor, nvars: usize, order: &MonomialOrder, elems: Vec<Polynomial>) -> Self {
        let mut r = Reducer {
            ring: ring.clone(),
            nvars,
            order: order.clone(),
            elems: Vec::new(),
            lms: Vec::new(),
            lcs: Vec::new(),
            cache: HashMap::new(),
        };
        for g in elems {
            r.push(g);
        }
        r
    }

    pub fn for_basis(g: &GroebnerBasis) -> Self {
        Self::new(g.ring(), g.nvars(), g.order(), g.elements().to_vec())
    }

    /// Appends a nonzero element; cached ideals stay valid.
    pub fn push(&mut self, g: Polynomial) {
        let (m, c) = g.leading(&self.order).expect("nonzero element");
        self.lms.push(m.clone());
        self.lcs.push(c.clone());
        self.elems.push(g);
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elems
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn leading_coefficients(&self) -> &[RingElement] {
        &self.lcs
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Indices `J(x^α) = {i : lm(g_i) | x^α}`.
    pub fn divisors(&self, m: &Monomial) -> Vec<usize> {
        (0..self.lms.len()).filter(|&i| self.lms[i].divides(m)).collect()
    }

    /// `I_J = ⟨lc(g_i) : i ∈ J⟩`, with raw generators listed in `J` order.
    pub fn ideal_of(&mut self, j: &[usize]) -> &CoefficientIdeal {
        if !self.cache.contains_key(j) {
            let gens = j.iter().map(|&i| self.lcs[i].clone()).collect();
            let ideal = CoefficientIdeal::new(&self.ring, gens).expect("leading coefficients belong to the ring");
            self.cache.insert(j.to_vec(), ideal);
        }
        &self.cache[j]
    }

    /// Leading coefficient ideal at `m`.
    pub fn coefficient_ideal(&mut self, m: &Monomial) -> &CoefficientIdeal {
        let j = self.divisors(m);
        self.ideal_of(&j)
    }

    fn run(&mut self, f: &Polynomial, track: bool) -> NormalForm {
        let mut quotients: Vec<Polynomial> = if track {
            vec![Polynomial::zero(&self.ring, self.nvars); self.elems.len()]
        } else {
            Vec::new()
        };
        let mut work = f.clone();
        let mut rem = Polynomial::zero(&self.ring, self.nvars);
        while let Some((m, c)) = work.leading(&self.order).map(|(m, c)| (m.clone(), c.clone())) {
            let j = self.divisors(&m);
            if j.is_empty() {
                work.take_term(&m);
                rem.add_term(m, c);
                continue;
            }
            let red = self.ideal_of(&j).reduce_unchecked(&c);
            for (b, &i) in red.witness.iter().zip(&j) {
                if b.is_zero() {
                    continue;
                }
                let shift = self.lms[i].quotient_of(&m).unwrap();
                work.sub_scaled(b, &shift, &self.elems[i]);
                if track {
                    quotients[i].add_term(shift, b.clone());
                }
            }
            // the coefficient left at m is exactly η(c)
            let left = work.take_term(&m);
            debug_assert_eq!(
                left.clone().unwrap_or_else(|| self.ring.zero()),
                red.representative
            );
            if let Some(e) = left {
                rem.add_term(m, e);
            }
        }
        NormalForm {
            remainder: rem,
            quotients,
        }
    }

    pub fn reduce(&mut self, f: &Polynomial) -> NormalForm {
        self.run(f, true)
    }

    pub fn remainder(&mut self, f: &Polynomial) -> Polynomial {
        self.run(f, false).remainder
    }
}

/// Normal form of `f` with respect to the elements of `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<NormalForm, GroebnerError> {
    check_inputs(g.ring(), g.nvars(), std::slice::from_ref(f))?;
    Ok(Reducer::for_basis(g).reduce(f))
}

//! Residue class rings `A[x]/𝔞` as `A`-modules: the monic freeness test,
//! standard-monomial bases, coordinates and lattice-ideal binomials.

use thiserror::Error;

use crate::coeffring::{CoefficientIdeal, RingDescriptor, RingElement};
use crate::groebner::{GroebnerBasis, Reducer};
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("basis is not certified short reduced")]
    NotShortReduced,
    #[error("the short reduced basis is not monic, so the quotient is not free")]
    NotMonic,
    #[error("the module basis is infinite; a degree cap is required")]
    CapRequired,
    #[error("the coordinate set is infinite and was not enumerated")]
    InfiniteBasis,
    #[error("normal form has support beyond the enumerated monomials")]
    SupportBeyondCap,
    #[error("lattice vector {0} is zero")]
    ZeroVector(usize),
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coefficient rings differ")]
    RingMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Freeness {
    Free,
    NotFree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rank {
    Finite(usize),
    Infinite,
    Unknown,
}

/// Monomials outside `⟨lm(G)⟩`, ascending under the basis order.
/// `complete` is false when the list was truncated by a degree cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomialSet {
    pub monomials: Vec<Monomial>,
    pub complete: bool,
}

fn require_short(g: &GroebnerBasis) -> Result<(), QuotientError> {
    if g.certification().is_short_reduced() {
        Ok(())
    } else {
        Err(QuotientError::NotShortReduced)
    }
}

/// `I_{J(m)} = ⟨lc(g_i) : lm(g_i) | m⟩`.
pub fn leading_coeff_ideal(g: &GroebnerBasis, m: &Monomial) -> CoefficientIdeal {
    Reducer::for_basis(g).coefficient_ideal(m).clone()
}

/// The quotient is free exactly when the short reduced basis is monic.
pub fn is_free(g: &GroebnerBasis) -> Result<bool, QuotientError> {
    require_short(g)?;
    Ok(g.is_monic())
}

/// Per variable, the least `ν` with `I_{J(x_i^ν)} = A`, if any.
///
/// Only pure powers of `x_i` (and `1`) divide `x_i^ν`, so scanning their
/// exponents in increasing order is exact.
fn unit_bounds(red: &mut Reducer, nvars: usize) -> Vec<Option<u32>> {
    (0..nvars)
        .map(|i| {
            let mut exps: Vec<u32> = red
                .leading_monomials()
                .iter()
                .filter_map(|m| match m.pure_power() {
                    _ if m.is_one() => Some(0),
                    Some((k, e)) if k == i => Some(e),
                    _ => None,
                })
                .collect();
            exps.sort_unstable();
            exps.dedup();
            exps.into_iter()
                .find(|&e| red.coefficient_ideal(&Monomial::var(nvars, i, e)).is_unit_ideal())
        })
        .collect()
}

/// Finite rank: every variable has a pure power among the leading monomials.
pub fn is_finite_rank(g: &GroebnerBasis) -> Result<bool, QuotientError> {
    require_short(g)?;
    if !g.is_monic() {
        return Err(QuotientError::NotMonic);
    }
    let mut red = Reducer::for_basis(g);
    Ok(unit_bounds(&mut red, g.nvars()).iter().all(Option::is_some))
}

fn box_monomials(bounds: &[u32]) -> Vec<Monomial> {
    let mut out = Vec::new();
    if bounds.contains(&0) {
        return out;
    }
    let mut cur = vec![0u32; bounds.len()];
    loop {
        out.push(Monomial::new(cur.clone()));
        let mut i = 0;
        loop {
            if i == cur.len() {
                return out;
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Monomials to search under either the pure-power box or the degree cap.
fn candidates(bounds: Vec<Option<u32>>, nvars: usize, cap: Option<u32>) -> Result<(Vec<Monomial>, bool), QuotientError> {
    if bounds.iter().all(Option::is_some) {
        let b: Vec<u32> = bounds.into_iter().map(Option::unwrap).collect();
        return Ok((box_monomials(&b), true));
    }
    match cap {
        Some(d) => Ok((Monomial::all_up_to_degree(nvars, d), false)),
        None => Err(QuotientError::CapRequired),
    }
}

/// `A`-module basis of a free quotient: its standard monomials.
///
/// With finite rank the pure-power exponents bound a box that is searched
/// exhaustively; otherwise monomials up to `degree_cap` are listed.
pub fn module_basis(g: &GroebnerBasis, degree_cap: Option<u32>) -> Result<StandardMonomialSet, QuotientError> {
    require_short(g)?;
    if !g.is_monic() {
        return Err(QuotientError::NotMonic);
    }
    let lms = g.leading_monomials();
    let mut red = Reducer::for_basis(g);
    let (cands, complete) = candidates(unit_bounds(&mut red, g.nvars()), g.nvars(), degree_cap)?;
    let mut monomials: Vec<Monomial> = cands
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .collect();
    monomials.sort_by(|a, b| g.order().cmp(a, b));
    Ok(StandardMonomialSet { monomials, complete })
}

/// A quotient `A[x]/⟨G⟩` with its freeness verdict and coordinate monomials.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ideal_basis: GroebnerBasis,
    freeness: Freeness,
    rank: Rank,
    coordinates: Option<StandardMonomialSet>,
}

impl QuotientRing {
    /// `degree_cap` bounds the coordinate enumeration when it is infinite.
    ///
    /// Coordinates are the monomials `x^α` with `I_{J(α)} ≠ A`. In the free
    /// case these are the standard monomials.
    pub fn new(g: &GroebnerBasis, degree_cap: Option<u32>) -> Result<Self, QuotientError> {
        require_short(g)?;
        let free = g.is_monic();
        let mut red = Reducer::for_basis(g);
        let bounds = unit_bounds(&mut red, g.nvars());
        let coordinates = candidates(bounds, g.nvars(), degree_cap).ok().map(|(cands, complete)| {
            let mut monomials: Vec<Monomial> = cands
                .into_iter()
                .filter(|m| !red.coefficient_ideal(m).is_unit_ideal())
                .collect();
            monomials.sort_by(|a, b| g.order().cmp(a, b));
            StandardMonomialSet { monomials, complete }
        });
        let rank = match &coordinates {
            _ if !free => Rank::Unknown,
            Some(s) if s.complete => Rank::Finite(s.monomials.len()),
            _ => Rank::Infinite,
        };
        Ok(QuotientRing {
            ideal_basis: g.clone(),
            freeness: if free { Freeness::Free } else { Freeness::NotFree },
            rank,
            coordinates,
        })
    }

    pub fn ideal_basis(&self) -> &GroebnerBasis {
        &self.ideal_basis
    }

    pub fn ring(&self) -> &RingDescriptor {
        self.ideal_basis.ring()
    }

    pub fn freeness(&self) -> Freeness {
        self.freeness
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coordinate_monomials(&self) -> Option<&StandardMonomialSet> {
        self.coordinates.as_ref()
    }
}

/// Coordinates of `f + 𝔞`: the canonical representatives
/// `η(I_{J(α_i)}, a_i)` of the normal form read off at each coordinate monomial.
pub fn phi_coordinates(f: &Polynomial, q: &QuotientRing) -> Result<Vec<RingElement>, QuotientError> {
    let g = q.ideal_basis();
    if f.ring() != g.ring() {
        return Err(QuotientError::RingMismatch);
    }
    if f.nvars() != g.nvars() {
        return Err(QuotientError::DimensionMismatch {
            expected: g.nvars(),
            found: f.nvars(),
        });
    }
    let coords = q.coordinate_monomials().ok_or(QuotientError::InfiniteBasis)?;
    let mut red = Reducer::for_basis(g);
    let nf = red.remainder(f);
    if nf.monomials().any(|m| !coords.monomials.contains(m)) {
        return Err(QuotientError::SupportBeyondCap);
    }
    Ok(coords
        .monomials
        .iter()
        .map(|m| nf.coefficient_or_zero(m))
        .collect())
}

/// `x^{v⁺} − x^{v⁻}` for each integer vector `v`.
pub fn lattice_ideal_generators(
    ring: &RingDescriptor,
    nvars: usize,
    vectors: &[Vec<i64>],
) -> Result<Vec<Polynomial>, QuotientError> {
    vectors
        .iter()
        .enumerate()
        .map(|(k, v)| {
            if v.len() != nvars {
                return Err(QuotientError::DimensionMismatch {
                    expected: nvars,
                    found: v.len(),
                });
            }
            if v.iter().all(|&e| e == 0) {
                return Err(QuotientError::ZeroVector(k));
            }
            let plus: Vec<u32> = v.iter().map(|&e| e.max(0) as u32).collect();
            let minus: Vec<u32> = v.iter().map(|&e| (-e).max(0) as u32).collect();
            let mut p = Polynomial::monomial(ring, Monomial::new(plus));
            p.add_term(Monomial::new(minus), ring.from_i64(-1));
            Ok(p)
        })
        .collect()
}

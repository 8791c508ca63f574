//! Coefficient rings `A`: the integers, the rationals, prime fields and
//! polynomial rings `k[θ₁..θₘ]` over those fields.
//!
//! Each ring supplies the three operations the Gröbner machinery over `A`
//! needs: a minimal generating set for a finitely generated ideal, a
//! canonical coset representative `η_I(z)`, and a membership witness.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::groebner::field;
use crate::poly::{MonomialOrder, OrderKind, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter variables: {0}")]
    InvalidTheta(String),
    #[error("element does not belong to the ring {0}")]
    RingMismatch(String),
    #[error("value is not an element of {0}")]
    CoefficientOutOfRing(String),
    #[error("cannot parse ring header: {0}")]
    BadHeader(String),
}

/// Base field of a parameter ring `k[θ]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    PrimeField(u64),
}

impl BaseField {
    pub fn ring(self) -> RingDescriptor {
        match self {
            BaseField::Rationals => RingDescriptor::Rationals,
            BaseField::PrimeField(p) => RingDescriptor::PrimeField(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaRing {
    pub base: BaseField,
    pub vars: Vec<String>,
    pub order: OrderKind,
}

/// The coefficient ring `A`. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Rationals,
    PrimeField(u64),
    PolyOverField(Arc<ThetaRing>),
}

impl RingDescriptor {
    pub fn prime_field(p: u64) -> Result<Self, CoeffError> {
        if !is_prime(p) {
            return Err(CoeffError::NotPrime(p));
        }
        Ok(RingDescriptor::PrimeField(p))
    }

    pub fn poly_over_field<S: AsRef<str>>(
        base: BaseField,
        vars: &[S],
        order: OrderKind,
    ) -> Result<Self, CoeffError> {
        if let BaseField::PrimeField(p) = base {
            if !is_prime(p) {
                return Err(CoeffError::NotPrime(p));
            }
        }
        if vars.is_empty() {
            return Err(CoeffError::InvalidTheta("no parameter variables".into()));
        }
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(CoeffError::InvalidTheta(format!("duplicate variable {v}")));
            }
        }
        Ok(RingDescriptor::PolyOverField(Arc::new(ThetaRing { base, vars, order })))
    }

    pub fn poly_over_rationals<S: AsRef<str>>(vars: &[S], order: OrderKind) -> Result<Self, CoeffError> {
        Self::poly_over_field(BaseField::Rationals, vars, order)
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingDescriptor::Rationals | RingDescriptor::PrimeField(_))
    }

    pub fn theta(&self) -> Option<&ThetaRing> {
        match self {
            RingDescriptor::PolyOverField(t) => Some(t),
            _ => None,
        }
    }

    /// Ring of the coefficients of a θ-polynomial element.
    pub(crate) fn theta_base(&self) -> &ThetaRing {
        self.theta().expect("parameter ring expected")
    }

    pub fn theta_order(&self) -> Option<MonomialOrder> {
        self.theta().map(|t| MonomialOrder::simple(t.order))
    }

    pub fn zero(&self) -> RingElement {
        match self {
            RingDescriptor::Integers => RingElement::Integer(BigInt::zero()),
            RingDescriptor::Rationals => RingElement::Rational(BigRational::zero()),
            RingDescriptor::PrimeField(p) => RingElement::Residue { value: 0, modulus: *p },
            RingDescriptor::PolyOverField(t) => {
                RingElement::Poly(Polynomial::zero(&t.base.ring(), t.vars.len()))
            }
        }
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> RingElement {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> RingElement {
        match self {
            RingDescriptor::Integers => RingElement::Integer(v.clone()),
            RingDescriptor::Rationals => RingElement::Rational(BigRational::from_integer(v.clone())),
            RingDescriptor::PrimeField(p) => RingElement::Residue {
                value: reduce_mod(v, *p),
                modulus: *p,
            },
            RingDescriptor::PolyOverField(t) => {
                let base = t.base.ring();
                RingElement::Poly(Polynomial::constant(&base, t.vars.len(), base.from_bigint(v)))
            }
        }
    }

    /// `num/den` as a ring element; fails over ℤ when not integral and for zero denominators.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<RingElement, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::CoefficientOutOfRing(self.header()));
        }
        match self {
            RingDescriptor::Integers => {
                let (q, r) = num.div_rem(den);
                if !r.is_zero() {
                    return Err(CoeffError::CoefficientOutOfRing(self.header()));
                }
                Ok(RingElement::Integer(q))
            }
            RingDescriptor::Rationals => {
                Ok(RingElement::Rational(BigRational::new(num.clone(), den.clone())))
            }
            RingDescriptor::PrimeField(p) => {
                let d = reduce_mod(den, *p);
                if d == 0 {
                    return Err(CoeffError::CoefficientOutOfRing(self.header()));
                }
                Ok(RingElement::Residue {
                    value: mul_mod(reduce_mod(num, *p), inv_mod(d, *p), *p),
                    modulus: *p,
                })
            }
            RingDescriptor::PolyOverField(t) => {
                let base = t.base.ring();
                let c = base.from_fraction(num, den)?;
                Ok(RingElement::Poly(Polynomial::constant(&base, t.vars.len(), c)))
            }
        }
    }

    /// `θ_i` as an element of a parameter ring.
    pub fn theta_var(&self, i: usize) -> RingElement {
        let t = self.theta_base();
        RingElement::Poly(Polynomial::var(&t.base.ring(), t.vars.len(), i))
    }

    /// Whether `e` is (structurally) an element of this ring.
    pub fn owns(&self, e: &RingElement) -> bool {
        match (self, e) {
            (RingDescriptor::Integers, RingElement::Integer(_)) => true,
            (RingDescriptor::Rationals, RingElement::Rational(_)) => true,
            (RingDescriptor::PrimeField(p), RingElement::Residue { modulus, .. }) => p == modulus,
            (RingDescriptor::PolyOverField(t), RingElement::Poly(f)) => {
                f.nvars() == t.vars.len() && f.ring() == &t.base.ring()
            }
            _ => false,
        }
    }

    /// Parses a coefficient (a θ-polynomial for parameter rings).
    pub fn parse_element(&self, src: &str) -> Result<RingElement, crate::text::ParseError> {
        crate::text::parse_ring_element(src, self)
    }

    pub fn format_element(&self, e: &RingElement) -> String {
        crate::text::format_ring_element(self, e)
    }

    /// Header syntax: `Z`, `Q`, `GF(7)`, `GF(7)[t1,t2] order grevlex`.
    pub fn header(&self) -> String {
        match self {
            RingDescriptor::Integers => "Z".into(),
            RingDescriptor::Rationals => "Q".into(),
            RingDescriptor::PrimeField(p) => format!("GF({p})"),
            RingDescriptor::PolyOverField(t) => {
                let base = match t.base {
                    BaseField::Rationals => "Q".to_string(),
                    BaseField::PrimeField(p) => format!("GF({p})"),
                };
                format!("{base}[{}] order {}", t.vars.join(","), t.order.name())
            }
        }
    }

    pub fn minimal_generators(&self, gens: &[RingElement]) -> Result<Vec<RingElement>, CoeffError> {
        Ok(CoefficientIdeal::new(self, gens.to_vec())?.min_generators().to_vec())
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.header())
    }
}

impl FromStr for RingDescriptor {
    type Err = CoeffError;

    /// Accepts the header syntax with or without the leading `ring` keyword.
    fn from_str(s: &str) -> Result<Self, CoeffError> {
        let bad = || CoeffError::BadHeader(s.to_string());
        let mut rest = s.trim();
        if let Some(r) = rest.strip_prefix("ring ") {
            rest = r.trim();
        }
        let (base_part, tail) = match rest.find('[') {
            Some(i) => (&rest[..i], Some(&rest[i..])),
            None => (rest, None),
        };
        let base = match base_part.trim() {
            "Z" | "ZZ" => None,
            "Q" | "QQ" => Some(BaseField::Rationals),
            b => {
                let p = b
                    .strip_prefix("GF(")
                    .and_then(|x| x.strip_suffix(')'))
                    .ok_or_else(bad)?
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| bad())?;
                Some(BaseField::PrimeField(p))
            }
        };
        match tail {
            None => match base {
                None => Ok(RingDescriptor::Integers),
                Some(BaseField::Rationals) => Ok(RingDescriptor::Rationals),
                Some(BaseField::PrimeField(p)) => RingDescriptor::prime_field(p),
            },
            Some(t) => {
                let base = base.ok_or_else(bad)?;
                let close = t.find(']').ok_or_else(bad)?;
                let vars: Vec<&str> = t[1..close].split(',').map(str::trim).collect();
                if vars.iter().any(|v| !crate::text::is_identifier(v)) {
                    return Err(bad());
                }
                let after = t[close + 1..].trim();
                let order = if after.is_empty() {
                    OrderKind::Lex
                } else {
                    let o = after.strip_prefix("order").ok_or_else(bad)?.trim();
                    OrderKind::from_name(o).ok_or_else(bad)?
                };
                RingDescriptor::poly_over_field(base, &vars, order)
            }
        }
    }
}

/// An exact element of a coefficient ring, kept in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElement {
    Integer(BigInt),
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
    /// A polynomial in θ over the base field.
    Poly(Polynomial),
}

impl RingElement {
    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Integer(a) => a.is_zero(),
            RingElement::Rational(a) => a.is_zero(),
            RingElement::Residue { value, .. } => *value == 0,
            RingElement::Poly(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Integer(a) => a.is_one(),
            RingElement::Rational(a) => a.is_one(),
            RingElement::Residue { value, modulus } => *value == 1 % *modulus,
            RingElement::Poly(f) => {
                f.len() == 1 && f.terms().all(|(m, c)| m.is_one() && c.is_one())
            }
        }
    }

    /// Multiplicative inverse in a field.
    pub fn inverse(&self) -> Option<RingElement> {
        match self {
            RingElement::Rational(a) if !a.is_zero() => Some(RingElement::Rational(a.recip())),
            RingElement::Residue { value, modulus } if *value != 0 => Some(RingElement::Residue {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            }),
            RingElement::Integer(a) if a.abs().is_one() => Some(self.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RingElement::Integer(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Polynomial> {
        match self {
            RingElement::Poly(f) => Some(f),
            _ => None,
        }
    }

    fn mismatch(&self, other: &RingElement) -> ! {
        panic!("arithmetic on elements of different rings: {self:?} and {other:?}")
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(a + b),
            (RingElement::Rational(a), RingElement::Rational(b)) => RingElement::Rational(a + b),
            (
                RingElement::Residue { value: a, modulus: p },
                RingElement::Residue { value: b, modulus: q },
            ) if p == q => RingElement::Residue {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            (RingElement::Poly(a), RingElement::Poly(b)) => RingElement::Poly(a + b),
            _ => self.mismatch(rhs),
        }
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        match self {
            RingElement::Integer(a) => RingElement::Integer(-a),
            RingElement::Rational(a) => RingElement::Rational(-a),
            RingElement::Residue { value, modulus } => RingElement::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            RingElement::Poly(a) => RingElement::Poly(-a),
        }
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        match (self, rhs) {
            (RingElement::Integer(a), RingElement::Integer(b)) => RingElement::Integer(a * b),
            (RingElement::Rational(a), RingElement::Rational(b)) => RingElement::Rational(a * b),
            (
                RingElement::Residue { value: a, modulus: p },
                RingElement::Residue { value: b, modulus: q },
            ) if p == q => RingElement::Residue {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            (RingElement::Poly(a), RingElement::Poly(b)) => RingElement::Poly(a * b),
            _ => self.mismatch(rhs),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

/// `z = representative + Σ witness_i · raw_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub representative: RingElement,
    pub witness: Vec<RingElement>,
}

#[derive(Clone, Debug)]
enum IdealData {
    Integer { gcd: BigInt, bezout: Vec<BigInt> },
    /// Index of the first nonzero raw generator and its inverse.
    Field { pivot: Option<(usize, RingElement)> },
    Theta {
        order: MonomialOrder,
        basis: Vec<Polynomial>,
        cofactors: Vec<Vec<Polynomial>>,
    },
}

/// A finitely generated ideal `I ⊆ A` with its canonical generators.
#[derive(Clone, Debug)]
pub struct CoefficientIdeal {
    ring: RingDescriptor,
    raw: Vec<RingElement>,
    min: Vec<RingElement>,
    data: IdealData,
}

impl CoefficientIdeal {
    pub fn new(ring: &RingDescriptor, raw: Vec<RingElement>) -> Result<Self, CoeffError> {
        if let Some(bad) = raw.iter().find(|e| !ring.owns(e)) {
            return Err(CoeffError::RingMismatch(format!("{bad:?} in {}", ring.header())));
        }
        let (min, data) = match ring {
            RingDescriptor::Integers => {
                let mut g = BigInt::zero();
                let mut bezout: Vec<BigInt> = Vec::with_capacity(raw.len());
                for e in &raw {
                    let a = e.as_integer().unwrap();
                    let (d, s, t) = ext_gcd(&g, a);
                    for u in bezout.iter_mut() {
                        *u *= &s;
                    }
                    bezout.push(t);
                    g = d;
                }
                let min = if g.is_zero() {
                    vec![]
                } else {
                    vec![RingElement::Integer(g.clone())]
                };
                (min, IdealData::Integer { gcd: g, bezout })
            }
            RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => {
                let pivot = raw
                    .iter()
                    .position(|e| !e.is_zero())
                    .map(|i| (i, raw[i].inverse().unwrap()));
                let min = if pivot.is_some() { vec![ring.one()] } else { vec![] };
                (min, IdealData::Field { pivot })
            }
            RingDescriptor::PolyOverField(t) => {
                let order = MonomialOrder::simple(t.order);
                let polys: Vec<Polynomial> =
                    raw.iter().map(|e| e.as_poly().unwrap().clone()).collect();
                let tracked = field::reduced_basis_tracked(&polys, &order);
                let min = tracked
                    .basis
                    .iter()
                    .map(|p| RingElement::Poly(p.clone()))
                    .collect();
                (
                    min,
                    IdealData::Theta {
                        order,
                        basis: tracked.basis,
                        cofactors: tracked.cofactors,
                    },
                )
            }
        };
        Ok(CoefficientIdeal {
            ring: ring.clone(),
            raw,
            min,
            data,
        })
    }

    pub fn zero_ideal(ring: &RingDescriptor) -> Self {
        Self::new(ring, vec![]).expect("empty generator list")
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn raw_generators(&self) -> &[RingElement] {
        &self.raw
    }

    pub fn min_generators(&self) -> &[RingElement] {
        &self.min
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.min.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.min.len() == 1 && self.min[0].is_one()
    }

    fn check(&self, z: &RingElement) -> Result<(), CoeffError> {
        if self.ring.owns(z) {
            Ok(())
        } else {
            Err(CoeffError::RingMismatch(format!("{z:?} in {}", self.ring.header())))
        }
    }

    /// Canonical representative of `z + I` together with the witness for `z - η(z)`.
    pub fn reduce(&self, z: &RingElement) -> Result<Reduction, CoeffError> {
        self.check(z)?;
        Ok(self.reduce_unchecked(z))
    }

    pub(crate) fn reduce_unchecked(&self, z: &RingElement) -> Reduction {
        let zeros = || vec![self.ring.zero(); self.raw.len()];
        match &self.data {
            IdealData::Integer { gcd, bezout } => {
                let z = z.as_integer().unwrap();
                if gcd.is_zero() {
                    return Reduction {
                        representative: RingElement::Integer(z.clone()),
                        witness: zeros(),
                    };
                }
                let (q, r) = z.div_mod_floor(gcd);
                Reduction {
                    representative: RingElement::Integer(r),
                    witness: bezout.iter().map(|u| RingElement::Integer(u * &q)).collect(),
                }
            }
            IdealData::Field { pivot } => match pivot {
                None => Reduction {
                    representative: z.clone(),
                    witness: zeros(),
                },
                Some((i, inv)) => {
                    let mut w = zeros();
                    w[*i] = z * inv;
                    Reduction {
                        representative: self.ring.zero(),
                        witness: w,
                    }
                }
            },
            IdealData::Theta {
                order,
                basis,
                cofactors,
            } => {
                let f = z.as_poly().unwrap();
                let (quotients, remainder) = field::divide(f, basis, order);
                let base = f.ring().clone();
                let mut w = vec![Polynomial::zero(&base, f.nvars()); self.raw.len()];
                for (q, cof) in quotients.iter().zip(cofactors) {
                    if q.is_zero() {
                        continue;
                    }
                    for (wi, ci) in w.iter_mut().zip(cof) {
                        if !ci.is_zero() {
                            *wi = &*wi + &(q * ci);
                        }
                    }
                }
                Reduction {
                    representative: RingElement::Poly(remainder),
                    witness: w.into_iter().map(RingElement::Poly).collect(),
                }
            }
        }
    }

    /// `η_I(z)`.
    pub fn eta(&self, z: &RingElement) -> Result<RingElement, CoeffError> {
        Ok(self.reduce(z)?.representative)
    }

    pub fn contains(&self, z: &RingElement) -> Result<bool, CoeffError> {
        Ok(self.eta(z)?.is_zero())
    }

    /// Coefficients `b` over the raw generators with `z = Σ b_i g_i`, if `z ∈ I`.
    pub fn membership_witness(&self, z: &RingElement) -> Result<Option<Vec<RingElement>>, CoeffError> {
        let r = self.reduce(z)?;
        Ok(r.representative.is_zero().then_some(r.witness))
    }

    /// Generators of `self` modulo `strict ⊆ self`, each in η_strict-normal form.
    ///
    /// Over ℤ and fields this is `{η_strict(a) : a ∈ min_generators} \ {0}`.
    /// Over `k[θ]` it is the reduced basis of `self` modulo `strict`: the
    /// elements of the reduced Gröbner basis whose leading θ-monomial is not
    /// in `lt(strict)`, with tails reduced by that set together with the
    /// reduced basis of `strict`.
    pub fn generators_modulo(&self, strict: &CoefficientIdeal) -> Vec<RingElement> {
        match (&self.data, &strict.data) {
            (IdealData::Theta { order, basis, .. }, IdealData::Theta { basis: strict_basis, .. }) => {
                let kept: Vec<&Polynomial> = basis
                    .iter()
                    .filter(|t| {
                        let lm = t.leading_monomial(order).unwrap();
                        !strict_basis
                            .iter()
                            .any(|r| r.leading_monomial(order).unwrap().divides(lm))
                    })
                    .collect();
                let reducers: Vec<Polynomial> = kept
                    .iter()
                    .map(|p| (*p).clone())
                    .chain(strict_basis.iter().cloned())
                    .collect();
                let mut out: Vec<RingElement> = kept
                    .iter()
                    .map(|t| {
                        let lt = t.leading_term_poly(order);
                        let tail = &**t - &lt;
                        let (_, rem) = field::divide(&tail, &reducers, order);
                        RingElement::Poly(&lt + &rem)
                    })
                    .collect();
                out.sort_by(|a, b| {
                    let (a, b) = (a.as_poly().unwrap(), b.as_poly().unwrap());
                    order.cmp(a.leading_monomial(order).unwrap(), b.leading_monomial(order).unwrap())
                });
                out
            }
            _ => {
                let mut out: Vec<RingElement> = Vec::new();
                for a in &self.min {
                    let r = strict.reduce_unchecked(a).representative;
                    if !r.is_zero() && !out.contains(&r) {
                        out.push(r);
                    }
                }
                out
            }
        }
    }

    /// Whether `d | z` for a single element `d` (used for term divisibility).
    pub(crate) fn divides(ring: &RingDescriptor, d: &RingElement, z: &RingElement) -> bool {
        match (d, z) {
            (RingElement::Integer(d), RingElement::Integer(z)) => {
                if d.is_zero() {
                    z.is_zero()
                } else {
                    (z % d).is_zero()
                }
            }
            _ => CoefficientIdeal::new(ring, vec![d.clone()])
                .map(|i| i.reduce_unchecked(z).representative.is_zero())
                .unwrap_or(false),
        }
    }
}

/// Returns `(g, s, t)` with `g = s·a + t·b` and `g ≥ 0`.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    u64::try_from(r).expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(v: i64) -> RingElement {
        RingDescriptor::Integers.from_i64(v)
    }

    fn zideal(gens: &[i64]) -> CoefficientIdeal {
        CoefficientIdeal::new(&RingDescriptor::Integers, gens.iter().map(|&g| z(g)).collect()).unwrap()
    }

    #[test]
    fn integer_minimal_generators() {
        let r = RingDescriptor::Integers;
        assert_eq!(r.minimal_generators(&[z(3), z(5)]).unwrap(), vec![z(1)]);
        assert_eq!(r.minimal_generators(&[z(4), z(6)]).unwrap(), vec![z(2)]);
        assert_eq!(r.minimal_generators(&[z(-4), z(-6)]).unwrap(), vec![z(2)]);
        assert!(r.minimal_generators(&[z(0), z(0)]).unwrap().is_empty());
    }

    #[test]
    fn theta_minimal_generators() {
        let r = RingDescriptor::poly_over_rationals(&["a"], OrderKind::Lex).unwrap();
        let g1 = r.parse_element("a^2").unwrap();
        let g2 = r.parse_element("a^3 - 1").unwrap();
        assert_eq!(r.minimal_generators(&[g1, g2]).unwrap(), vec![r.one()]);
    }

    #[test]
    fn field_minimal_generators() {
        let q = RingDescriptor::Rationals;
        assert_eq!(q.minimal_generators(&[q.zero(), q.from_i64(7)]).unwrap(), vec![q.one()]);
        assert!(q.minimal_generators(&[q.zero()]).unwrap().is_empty());
    }

    #[test]
    fn integer_eta() {
        assert_eq!(zideal(&[2]).eta(&z(7)).unwrap(), z(1));
        assert_eq!(zideal(&[2]).eta(&z(-7)).unwrap(), z(1));
        assert_eq!(zideal(&[1]).eta(&z(42)).unwrap(), z(0));
        assert_eq!(zideal(&[0]).eta(&z(-5)).unwrap(), z(-5));
        assert_eq!(zideal(&[]).eta(&z(-5)).unwrap(), z(-5));
    }

    #[test]
    fn integer_witnesses() {
        let w = zideal(&[3, 5]).membership_witness(&z(1)).unwrap().unwrap();
        let i3 = w[0].as_integer().unwrap() * 3 + w[1].as_integer().unwrap() * 5;
        assert_eq!(i3, BigInt::from(1));
        assert_eq!(zideal(&[4, 6]).membership_witness(&z(3)).unwrap(), None);
        assert_eq!(zideal(&[2]).membership_witness(&z(8)).unwrap(), Some(vec![z(4)]));
    }

    #[test]
    fn theta_witness_recombines() {
        let r = RingDescriptor::poly_over_rationals(&["a", "b"], OrderKind::GrevLex).unwrap();
        let gens: Vec<_> = ["a^2 - b", "a*b - 1", "b^2 + a"]
            .iter()
            .map(|s| r.parse_element(s).unwrap())
            .collect();
        let ideal = CoefficientIdeal::new(&r, gens.clone()).unwrap();
        let target = &(&gens[0] * &r.parse_element("b + 3").unwrap())
            + &(&gens[2] * &r.parse_element("a").unwrap());
        let w = ideal.membership_witness(&target).unwrap().unwrap();
        let mut acc = r.zero();
        for (wi, gi) in w.iter().zip(&gens) {
            acc = &acc + &(wi * gi);
        }
        assert_eq!(acc, target);
        // reduced basis is inter-reduced and monic
        let order = r.theta_order().unwrap();
        let min = ideal.min_generators();
        for (i, g) in min.iter().enumerate() {
            let g = g.as_poly().unwrap();
            assert!(g.leading_coefficient(&order).unwrap().is_one());
            for (j, h) in min.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lh = h.as_poly().unwrap().leading_monomial(&order).unwrap();
                assert!(g.monomials().all(|m| !lh.divides(m)));
            }
        }
    }

    #[test]
    fn residues_are_canonical() {
        let f = RingDescriptor::prime_field(7).unwrap();
        assert_eq!(f.from_i64(-1), RingElement::Residue { value: 6, modulus: 7 });
        assert_eq!(&f.from_i64(3) * &f.from_i64(5), f.from_i64(1));
        assert_eq!(f.from_i64(3).inverse(), Some(f.from_i64(5)));
        assert!(RingDescriptor::prime_field(8).is_err());
    }

    #[test]
    fn header_round_trip() {
        for h in ["Z", "Q", "GF(7)", "GF(7)[t1,t2] order grevlex", "Q[a] order lex"] {
            let r: RingDescriptor = h.parse().unwrap();
            assert_eq!(r.header(), h);
        }
        let r: RingDescriptor = "ring GF(7)[t1,t2] order grevlex".parse().unwrap();
        assert_eq!(r.theta().unwrap().vars, vec!["t1", "t2"]);
        assert!("GF(9)".parse::<RingDescriptor>().is_err());
        assert!("Q[a,a]".parse::<RingDescriptor>().is_err());
        assert!("Z[a]".parse::<RingDescriptor>().is_err());
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    proptest! {
        #[test]
        fn integer_ideal_properties(gens in proptest::collection::vec(-1_000_000i64..=1_000_000, 0..5),
                                    zs in proptest::collection::vec(-1_000_000i64..=1_000_000, 1..6)) {
            let ideal = zideal(&gens);
            let ring = RingDescriptor::Integers;
            // mutual membership of raw and minimal generators
            let min = CoefficientIdeal::new(&ring, ideal.min_generators().to_vec()).unwrap();
            for g in &gens {
                prop_assert!(min.membership_witness(&z(*g)).unwrap().is_some());
            }
            for m in ideal.min_generators() {
                let w = ideal.membership_witness(m).unwrap().unwrap();
                let mut acc = BigInt::zero();
                for (wi, gi) in w.iter().zip(&gens) {
                    acc += wi.as_integer().unwrap() * gi;
                }
                prop_assert_eq!(&acc, m.as_integer().unwrap());
            }
            for v in &zs {
                let e = ideal.eta(&z(*v)).unwrap();
                prop_assert_eq!(ideal.eta(&e).unwrap(), e.clone());
                let diff = &z(*v) - &e;
                prop_assert!(ideal.contains(&diff).unwrap());
                if let Some(w) = ideal.membership_witness(&z(*v)).unwrap() {
                    let mut acc = BigInt::zero();
                    for (wi, gi) in w.iter().zip(&gens) {
                        acc += wi.as_integer().unwrap() * gi;
                    }
                    prop_assert_eq!(acc, BigInt::from(*v));
                }
            }
            prop_assert!(ideal.eta(&z(0)).unwrap().is_zero());
        }
    }
}

//! Gröbner bases over Noetherian coefficient rings: the integers, fields,
//! and polynomial rings `k[θ]` over a field.
//!
//! The central objects are short reduced Gröbner bases. Their leading
//! coefficients decide whether `A[x]/𝔞` is a free `A`-module (it is exactly
//! when the short reduced basis is monic), and in that case the standard
//! monomials form a module basis and border bases exist.

pub mod border;
pub mod coeffring;
pub mod groebner;
pub mod poly;
pub mod quotient;
pub mod text;

pub use coeffring::{BaseField, CoeffError, CoefficientIdeal, Reduction, RingDescriptor, RingElement, ThetaRing};
pub use groebner::{
    buchberger_block, buchberger_pid, groebner_basis, is_groebner_basis_of, is_strong_gb, normal_form,
    pauer_short_reduce, short_reduced_basis, verify_groebner, verify_strong_reduced, Certification,
    GroebnerBasis, GroebnerError, NormalForm, Reducer, StrongCheck, StrongReducedCheck,
};
pub use poly::{LeadingData, Monomial, MonomialOrder, OrderKind, OrderShape, PolyError, Polynomial, Term};
pub use text::{parse_polynomial, ParseError, VarContext};
pub use quotient::{
    is_finite_rank, is_free, lattice_ideal_generators, leading_coeff_ideal, module_basis, phi_coordinates, Freeness,
    QuotientError, QuotientRing, Rank, StandardMonomialSet,
};
pub use border::{
    border_basis_of, border_nf, is_border_basis, validate_order_ideal, validate_prebasis, BorderError, BorderPrebasis,
    OrderIdealSpec,
};

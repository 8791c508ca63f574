use proptest::prelude::*;

use super::*;
use crate::poly::OrderKind;
use crate::text::VarContext;

fn zz() -> VarContext {
    VarContext::named(RingDescriptor::Integers, &["x", "y"]).unwrap()
}

fn qq() -> VarContext {
    VarContext::named(RingDescriptor::Rationals, &["x", "y"]).unwrap()
}

fn qa(vars: &[&str], xs: &[&str]) -> VarContext {
    VarContext::named(RingDescriptor::poly_over_rationals(vars, OrderKind::Lex).unwrap(), xs).unwrap()
}

fn polys(ctx: &VarContext, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| ctx.parse(s).unwrap()).collect()
}

fn texts(g: &GroebnerBasis, ctx: &VarContext) -> Vec<String> {
    g.format(ctx.names())
}

fn raw(ctx: &VarContext, src: &[&str]) -> GroebnerBasis {
    GroebnerBasis::raw(ctx.ring(), ctx.nvars(), &MonomialOrder::lex(), polys(ctx, src)).unwrap()
}

fn gb(ctx: &VarContext, src: &[&str]) -> GroebnerBasis {
    groebner_basis(ctx.ring(), ctx.nvars(), &polys(ctx, src), &MonomialOrder::lex()).unwrap()
}

fn short(ctx: &VarContext, src: &[&str]) -> GroebnerBasis {
    pauer_short_reduce(&gb(ctx, src)).unwrap()
}

fn expand(nf: &NormalForm, g: &GroebnerBasis) -> Polynomial {
    let mut acc = nf.remainder.clone();
    for (q, gi) in nf.quotients.iter().zip(g.elements()) {
        acc = &acc + &(q * gi);
    }
    acc
}

#[test]
fn normal_form_examples() {
    let ctx = zz();
    let g = raw(&ctx, &["3*x^2", "5*x^2", "y"]);
    let nf = normal_form(&ctx.parse("x^2").unwrap(), &g).unwrap();
    assert!(nf.remainder.is_zero());
    assert_eq!(expand(&nf, &g), ctx.parse("x^2").unwrap());

    let f = ctx.parse("7*x^2 + x + 3").unwrap();
    let nf = normal_form(&f, &g).unwrap();
    assert_eq!(nf.remainder, ctx.parse("x + 3").unwrap());
    assert_eq!(expand(&nf, &g), f);

    let h = raw(&ctx, &["x^2", "y"]);
    assert!(normal_form(&ctx.parse("x*y").unwrap(), &h).unwrap().remainder.is_zero());
    assert_eq!(normal_form(&ctx.parse("x").unwrap(), &h).unwrap().remainder, ctx.parse("x").unwrap());
}

#[test]
fn normal_form_rejects_other_rings() {
    let g = raw(&zz(), &["x"]);
    let f = qq().parse("x").unwrap();
    assert_eq!(normal_form(&f, &g), Err(GroebnerError::RingMismatch));
}

#[test]
fn pid_examples() {
    let ctx = zz();
    let g = gb(&ctx, &["3*x^2", "5*x^2", "y"]);
    assert_eq!(g.certification(), Certification::StrongPID);
    assert_eq!(texts(&pauer_short_reduce(&g).unwrap(), &ctx), vec!["x^2", "y"]);

    let g = gb(&ctx, &["2*x", "3*y"]);
    let t = texts(&g, &ctx);
    for want in ["2*x", "3*y", "x*y"] {
        assert!(t.contains(&want.to_string()), "{t:?}");
    }
    assert!(verify_groebner(&g));
    assert!(is_strong_gb(&g, &[]).unwrap().strong);

    assert_eq!(texts(&gb(&ctx, &["x"]), &ctx), vec!["x"]);
}

#[test]
fn pid_rejects_parameter_rings() {
    let ctx = qa(&["a"], &["x"]);
    let r = buchberger_pid(ctx.ring(), 1, &polys(&ctx, &["a*x"]), &MonomialOrder::lex());
    assert!(matches!(r, Err(GroebnerError::UnsupportedRing(_))));
    let z = zz();
    let r = buchberger_block(z.ring(), 2, &polys(&z, &["x"]), &MonomialOrder::lex());
    assert!(matches!(r, Err(GroebnerError::UnsupportedRing(_))));
}

#[test]
fn zero_ideal_has_empty_basis() {
    let ctx = zz();
    let g = gb(&ctx, &["0", "x - x"]);
    assert!(g.is_empty());
    assert!(verify_groebner(&g));
    assert!(pauer_short_reduce(&g).unwrap().is_empty());
}

#[test]
fn block_examples() {
    let ctx = qa(&["t"], &["x"]);
    assert_eq!(texts(&gb(&ctx, &["t*x"]), &ctx), vec!["t*x"]);
    let mut t = texts(&gb(&ctx, &["x - t", "x"]), &ctx);
    t.sort();
    assert_eq!(t, vec!["t", "x"]);
}

#[test]
fn parameter_example_ideal_contains_a_squared_minus_a() {
    // a·f1 − f2 = x − 1, and f1 − a²(x − 1) = a² − a, so the ideal is ⟨x − 1, a² − a⟩.
    let ctx = qa(&["a"], &["x"]);
    let gens = polys(&ctx, &["a^2*x - a", "(a^3 - 1)*x - a^2 + 1"]);
    let g = groebner_basis(ctx.ring(), 1, &gens, &MonomialOrder::lex()).unwrap();
    assert!(verify_groebner(&g));
    let mut red = Reducer::for_basis(&g);
    for f in ["x - 1", "a^2 - a"] {
        assert!(red.remainder(&ctx.parse(f).unwrap()).is_zero(), "{f}");
    }
    assert!(!red.remainder(&ctx.parse("a - 1").unwrap()).is_zero());
    let s = pauer_short_reduce(&g).unwrap();
    assert_eq!(texts(&s, &ctx), vec!["x - 1", "a^2 - a"]);
    assert!(!s.is_monic());
    let check = verify_strong_reduced(&s).unwrap();
    assert!(check.holds, "{check:?}");
}

#[test]
fn parameter_example_with_common_factor_is_monic() {
    let ctx = qa(&["a"], &["x"]);
    let s = short(&ctx, &["a^2*(x - 1)", "(a^3 - 1)*(x - 1)"]);
    assert_eq!(texts(&s, &ctx), vec!["x - 1"]);
    assert!(s.is_monic());
    assert!(verify_strong_reduced(&s).unwrap().holds);
}

#[test]
fn short_reduce_examples() {
    let ctx = zz();
    let g = raw(&ctx, &["2*x", "3*y", "x*y"]).certify().unwrap();
    let s = pauer_short_reduce(&g).unwrap();
    assert_eq!(texts(&s, &ctx), vec!["2*x", "3*y"]);
    assert!(verify_groebner(&s));
    assert_eq!(s.certification(), Certification::ShortReduced);

    let q = qq();
    assert_eq!(texts(&short(&q, &["x^2 + y", "y"]), &q), vec!["x^2", "y"]);

    assert_eq!(pauer_short_reduce(&raw(&ctx, &["x"])), Err(GroebnerError::NotCertified));
}

#[test]
fn verify_examples() {
    let ctx = zz();
    assert!(verify_groebner(&raw(&ctx, &["3*x^2", "5*x^2", "y"])));
    assert!(verify_groebner(&raw(&ctx, &["2*x", "3*y"])));
    let two_x = raw(&ctx, &["2*x"]);
    assert!(!is_groebner_basis_of(&two_x, &polys(&ctx, &["2*x", "3*y"])).unwrap());
    let full = gb(&ctx, &["2*x", "3*y"]);
    assert!(is_groebner_basis_of(&full, &polys(&ctx, &["2*x", "3*y"])).unwrap());
    assert!(!verify_groebner(&raw(&ctx, &["x*y - 1", "x^2"])));
}

#[test]
fn strong_gb_examples() {
    let ctx = qa(&["a1", "a2"], &["x"]);
    let g = raw(&ctx, &["a1^2*x", "a2^2*x"]).certify().unwrap();
    let probe = ctx.parse("(a1^3 + a2^3)*x").unwrap();
    let r = is_strong_gb(&g, std::slice::from_ref(&probe)).unwrap();
    assert!(!r.strong);
    assert_eq!(r.counterexample, Some(probe));
    let outside = ctx.parse("x").unwrap();
    assert_eq!(is_strong_gb(&g, &[outside]), Err(GroebnerError::ProbeNotInIdeal(0)));

    let z = zz();
    let g = raw(&z, &["2*x", "3*y", "x*y"]).certify().unwrap();
    assert!(is_strong_gb(&g, &[]).unwrap().strong);
    let g = raw(&z, &["2*x", "3*y"]).certify().unwrap();
    let r = is_strong_gb(&g, &[]).unwrap();
    assert!(!r.strong);
    assert_eq!(r.counterexample, Some(z.parse("x*y").unwrap()));
}

#[test]
fn strong_reduced_examples() {
    let ctx = qa(&["a"], &["x"]);
    let g = raw(&ctx, &["x - 1"]);
    assert!(verify_strong_reduced(&g).unwrap().holds);
    let g = raw(&ctx, &["a^2*x - a", "(a^3 - 1)*x - a^2 + 1"]);
    let r = verify_strong_reduced(&g).unwrap();
    assert_eq!(r.failed_condition, Some(3));
    let g = raw(&ctx, &["x^2 - 1", "x + 1"]);
    assert_eq!(verify_strong_reduced(&g).unwrap().failed_condition, Some(3));
    // all three conditions hold, but ⟨a·x − 1, x²⟩ is the unit ideal
    let g = raw(&ctx, &["a*x - 1", "x^2"]);
    let r = verify_strong_reduced(&g).unwrap();
    assert_eq!((r.holds, r.failed_condition), (false, None));
    let t = qa(&["t"], &["x"]);
    assert!(verify_strong_reduced(&raw(&t, &["t*x"])).unwrap().holds);
    assert!(verify_strong_reduced(&raw(&zz(), &["x"])).is_err());
}

#[test]
fn strong_reduced_condition_three() {
    // a Gröbner basis whose leading coefficients at x are not a reduced basis
    let ctx = qa(&["a"], &["x"]);
    let g = raw(&ctx, &["a^2*x", "(a^3 - 1)*x"]);
    assert!(verify_groebner(&g));
    let r = verify_strong_reduced(&g).unwrap();
    assert_eq!(r.failed_condition, Some(3));
    assert_eq!(texts(&pauer_short_reduce(&g.certify().unwrap()).unwrap(), &ctx), vec!["x"]);
}

#[test]
fn strong_reduced_condition_one() {
    // y in x² + y is divisible by lt(y)
    let ctx = qa(&["a"], &["x", "y"]);
    let g = raw(&ctx, &["x^2 + y", "y"]);
    assert!(verify_groebner(&g));
    assert_eq!(verify_strong_reduced(&g).unwrap().failed_condition, Some(1));
}

fn small_int_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((-4i64..=4, proptest::collection::vec(0u32..=2, nvars)), 1..4).prop_map(
        move |ts| {
            let ring = RingDescriptor::Integers;
            let mut p = Polynomial::zero(&ring, nvars);
            for (c, e) in ts {
                p.add_term(Monomial::new(e), ring.from_i64(c));
            }
            p
        },
    )
}

fn rational_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    proptest::collection::vec(small_int_poly(2), 1..4).prop_map(|fs| {
        fs.iter()
            .map(|f| f.map_coefficients(&RingDescriptor::Rationals, |c| RingDescriptor::Rationals.from_bigint(c.as_integer().unwrap())))
            .collect()
    })
}

fn theta_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    let ring = RingDescriptor::poly_over_rationals(&["a"], OrderKind::Lex).unwrap();
    let term = (-3i64..=3, 0u32..=2, 0u32..=1, 0u32..=1);
    proptest::collection::vec(proptest::collection::vec(term, 1..4), 1..3).prop_map(move |fs| {
        fs.into_iter()
            .map(|ts| {
                let mut p = Polynomial::zero(&ring, 2);
                for (c, ea, ex, ey) in ts {
                    let coeff = Polynomial::term(
                        &RingDescriptor::Rationals,
                        RingDescriptor::Rationals.from_i64(c),
                        Monomial::from([ea]),
                    );
                    p.add_term(Monomial::from([ex, ey]), RingElement::Poly(coeff));
                }
                p
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constructed_bases_verify(gens in proptest::collection::vec(small_int_poly(2), 1..3)) {
        let order = MonomialOrder::grevlex();
        let g = buchberger_pid(&RingDescriptor::Integers, 2, &gens, &order).unwrap();
        prop_assert!(verify_groebner(&g));
        prop_assert!(is_strong_gb(&g, &[]).unwrap().strong);
        let s = pauer_short_reduce(&g).unwrap();
        prop_assert!(verify_groebner(&s));
        prop_assert!(is_groebner_basis_of(&s, &gens).unwrap());
    }

    #[test]
    fn normal_form_identity(gens in proptest::collection::vec(small_int_poly(2), 1..3), f in small_int_poly(2)) {
        let g = buchberger_pid(&RingDescriptor::Integers, 2, &gens, &MonomialOrder::lex()).unwrap();
        let nf = normal_form(&f, &g).unwrap();
        prop_assert_eq!(&expand(&nf, &g), &f);
        let mut red = Reducer::for_basis(&g);
        for (m, c) in nf.remainder.terms() {
            let eta = red.coefficient_ideal(m).eta(c).unwrap();
            prop_assert_eq!(&eta, c);
        }
        // NF is constant on cosets
        let shifted = &f + &(&gens[0] * &f);
        prop_assert_eq!(normal_form(&shifted, &g).unwrap().remainder, nf.remainder);
    }

    #[test]
    fn field_short_reduce_is_classical(gens in rational_ideal(), seed in 0usize..6, scale in 1i64..5) {
        let order = MonomialOrder::grevlex();
        let q = RingDescriptor::Rationals;
        let s = short_reduced_basis(&q, 2, &gens, &order).unwrap();
        prop_assert!(s.is_monic());
        let lms = s.leading_monomials();
        for (i, g) in s.elements().iter().enumerate() {
            for (k, l) in lms.iter().enumerate() {
                if k != i {
                    prop_assert!(g.monomials().all(|m| !l.divides(m)));
                }
            }
        }
        let mut other = gens.clone();
        let n = other.len();
        other.rotate_left(seed % n);
        other.reverse();
        let c = q.from_i64(-scale);
        let other: Vec<Polynomial> = other.iter().map(|f| f.scale(&c)).collect();
        let t = short_reduced_basis(&q, 2, &other, &order).unwrap();
        prop_assert_eq!(t.elements(), s.elements());
    }

    #[test]
    fn short_reduced_is_unique(gens in proptest::collection::vec(small_int_poly(2), 1..3), k in -2i64..=2) {
        let order = MonomialOrder::grevlex();
        let z = RingDescriptor::Integers;
        let s = short_reduced_basis(&z, 2, &gens, &order).unwrap();
        let mut other: Vec<Polynomial> = gens.iter().rev().cloned().collect();
        let extra = &(&gens[0] * &Polynomial::var(&z, 2, 1)) + &gens[gens.len() - 1].scale(&z.from_i64(k));
        other.push(extra);
        let t = short_reduced_basis(&z, 2, &other, &order).unwrap();
        prop_assert_eq!(t.elements(), s.elements());
    }

    #[test]
    fn theta_short_reduced_is_strong_reduced(gens in theta_ideal()) {
        let ring = gens[0].ring().clone();
        let s = short_reduced_basis(&ring, 2, &gens, &MonomialOrder::grevlex()).unwrap();
        let r = verify_strong_reduced(&s).unwrap();
        prop_assert!(r.holds, "{:?} {:?}", r, s);
        prop_assert!(is_groebner_basis_of(&s, &gens).unwrap());
    }
}

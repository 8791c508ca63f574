//! Fixed problem instances shared by the benchmarks.

use ringbasis::{Polynomial, RingDescriptor, VarContext};

/// A named generating set with its variable context.
pub struct Fixture {
    pub name: &'static str,
    pub ctx: VarContext,
    pub generators: Vec<Polynomial>,
}

fn fixture(name: &'static str, ring: RingDescriptor, vars: &[&str], src: &[&str]) -> Fixture {
    let ctx = VarContext::named(ring, vars).expect("valid names");
    let generators = src.iter().map(|s| ctx.parse(s).expect("fixture parses")).collect();
    Fixture { name, ctx, generators }
}

/// Integer ideals of increasing difficulty.
pub fn integer_fixtures() -> Vec<Fixture> {
    let z = RingDescriptor::Integers;
    vec![
        fixture("coprime_leads", z.clone(), &["x", "y"], &["3*x^2", "5*x^2", "y"]),
        fixture(
            "mixed_content",
            z.clone(),
            &["x", "y"],
            &["6*x^2*y - 4*y + 3", "4*x*y^2 + 9*x - 2"],
        ),
        fixture("cyclic3", z, &["x", "y", "z"], &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]),
    ]
}

/// Ideals over `ℚ[a]`.
pub fn parametric_fixtures() -> Vec<Fixture> {
    let qa = RingDescriptor::poly_over_rationals(&["a"], ringbasis::OrderKind::Lex).expect("ring");
    vec![
        fixture("linear", qa.clone(), &["x"], &["a^2*x - a", "(a^3 - 1)*x - a^2 + 1"]),
        fixture("plane", qa, &["x", "y"], &["a*x^2 + y - 1", "(a - 1)*x*y + a*y^2", "x^2 - a*y"]),
    ]
}

/// Lattice vectors in `ℤ^3` whose binomials form a free quotient.
pub fn lattice_vectors() -> Vec<Vec<i64>> {
    vec![vec![1, -2, 1], vec![2, 1, -3], vec![-1, 3, -1]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        assert_eq!(integer_fixtures().len(), 3);
        assert!(parametric_fixtures().iter().all(|f| !f.generators.is_empty()));
    }
}

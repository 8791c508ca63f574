use std::fmt;

/// Exponent vector of a power product `x^α`.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent
/// vectors and is only used for storage; term orders live in
/// [`MonomialOrder`](super::MonomialOrder).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_index^exp` in `nvars` variables.
    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect(),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// True when no variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_i^ν` with `ν > 0`, returns `(i, ν)`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Splits `[x-part | rest]` at `at`.
    pub fn split(&self, at: usize) -> (Monomial, Monomial) {
        (
            Monomial(self.0[..at].to_vec()),
            Monomial(self.0[at..].to_vec()),
        )
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        Monomial(e)
    }

    /// `self / x_i`, if `x_i` divides it.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// All monomials in `nvars` variables of total degree at most `max_degree`.
    pub fn all_up_to_degree(nvars: usize, max_degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u32; nvars];
        fn rec(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if pos == current.len() {
                out.push(Monomial(current.clone()));
                return;
            }
            for e in 0..=left {
                current[pos] = e;
                rec(pos + 1, left - e, current, out);
            }
            current[pos] = 0;
        }
        rec(0, max_degree, &mut current, &mut out);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial(v)
    }
}

impl<const N: usize> From<[u32; N]> for Monomial {
    fn from(v: [u32; N]) -> Self {
        Monomial(v.to_vec())
    }
}

use std::cmp::Ordering;

use super::{Monomial, PolyError};

/// Base comparison rule for one block of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GrevLex => "grevlex",
        }
    }

    pub fn from_name(s: &str) -> Option<OrderKind> {
        match s {
            "lex" => Some(OrderKind::Lex),
            "grevlex" | "degrevlex" => Some(OrderKind::GrevLex),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderShape {
    Simple(OrderKind),
    /// The first `x_len` positions are compared under `x`; ties are broken
    /// on the remaining positions under `theta`.
    Block {
        x_len: usize,
        x: OrderKind,
        theta: OrderKind,
    },
}

/// A monomial order, optionally acting on a permutation of the variables.
///
/// `precedence[0]` is the most significant variable. Without a precedence
/// the variables rank by index, `x1 ≻ x2 ≻ …`.
///
/// Grevlex: the higher total degree wins; at equal degree the last variable
/// (in precedence order) whose exponents differ decides, and the monomial
/// with the *smaller* exponent there is the greater one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    shape: OrderShape,
    precedence: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        Self::simple(OrderKind::Lex)
    }

    pub fn grevlex() -> Self {
        Self::simple(OrderKind::GrevLex)
    }

    pub fn simple(kind: OrderKind) -> Self {
        MonomialOrder {
            shape: OrderShape::Simple(kind),
            precedence: None,
        }
    }

    pub fn block(x_len: usize, x: OrderKind, theta: OrderKind) -> Self {
        MonomialOrder {
            shape: OrderShape::Block { x_len, x, theta },
            precedence: None,
        }
    }

    /// Reorders variable significance. `perm` must be a permutation of `0..perm.len()`.
    pub fn with_precedence(mut self, perm: Vec<usize>) -> Result<Self, PolyError> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(PolyError::InvalidPrecedence);
            }
            seen[p] = true;
        }
        if let OrderShape::Block { x_len, .. } = self.shape {
            if x_len > perm.len() {
                return Err(PolyError::InvalidPrecedence);
            }
        }
        self.precedence = Some(perm);
        Ok(self)
    }

    pub fn shape(&self) -> &OrderShape {
        &self.shape
    }

    pub fn precedence(&self) -> Option<&[usize]> {
        self.precedence.as_deref()
    }

    /// The kind governing a simple order (the X block for block orders).
    pub fn kind(&self) -> OrderKind {
        match self.shape {
            OrderShape::Simple(k) => k,
            OrderShape::Block { x, .. } => x,
        }
    }

    pub fn name(&self) -> String {
        match self.shape {
            OrderShape::Simple(k) => k.name().to_string(),
            OrderShape::Block { x, theta, .. } => format!("block({},{})", x.name(), theta.name()),
        }
    }

    /// Block order on the joint ring `[X | Θ]` (`x_len` X variables followed by
    /// `theta_len` Θ variables), where this order acts on `X`.
    pub(crate) fn joint(&self, x_len: usize, theta: OrderKind, theta_len: usize) -> MonomialOrder {
        let precedence = self.precedence.as_ref().map(|p| {
            let mut perm = p.clone();
            perm.extend(x_len..x_len + theta_len);
            perm
        });
        MonomialOrder {
            shape: OrderShape::Block {
                x_len,
                x: self.kind(),
                theta,
            },
            precedence,
        }
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.nvars() != b.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        if let Some(p) = &self.precedence {
            if p.len() != a.nvars() {
                return Err(PolyError::DimensionMismatch {
                    expected: p.len(),
                    found: a.nvars(),
                });
            }
        }
        if let OrderShape::Block { x_len, .. } = self.shape {
            if x_len > a.nvars() {
                return Err(PolyError::DimensionMismatch {
                    expected: x_len,
                    found: a.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; both monomials must have the dimension the order expects.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        debug_assert_eq!(a.len(), b.len());
        match (&self.shape, &self.precedence) {
            (OrderShape::Simple(k), None) => cmp_kind(*k, a, b, 0..a.len()),
            (OrderShape::Simple(k), Some(p)) => cmp_kind(*k, a, b, p.iter().copied()),
            (OrderShape::Block { x_len, x, theta }, None) => {
                cmp_kind(*x, a, b, 0..*x_len).then_with(|| cmp_kind(*theta, a, b, *x_len..a.len()))
            }
            (OrderShape::Block { x_len, x, theta }, Some(p)) => {
                cmp_kind(*x, a, b, p[..*x_len].iter().copied())
                    .then_with(|| cmp_kind(*theta, a, b, p[*x_len..].iter().copied()))
            }
        }
    }
}

fn cmp_kind<I>(kind: OrderKind, a: &[u32], b: &[u32], idx: I) -> Ordering
where
    I: DoubleEndedIterator<Item = usize> + Clone,
{
    match kind {
        OrderKind::Lex => {
            for i in idx {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        OrderKind::GrevLex => {
            let da: u64 = idx.clone().map(|i| a[i] as u64).sum();
            let db: u64 = idx.clone().map(|i| b[i] as u64).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
            for i in idx.rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn lex_compares_first_exponent() {
        let o = MonomialOrder::lex();
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[1, 3])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 3]), &m(&[1, 3])), Ordering::Equal);
    }

    #[test]
    fn grevlex_tie_break() {
        let o = MonomialOrder::grevlex();
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        // x1*x3 vs x2^2: last differing variable x3, smaller exponent wins.
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn precedence_swaps_significance() {
        let o = MonomialOrder::lex().with_precedence(vec![1, 0]).unwrap();
        assert_eq!(o.cmp(&m(&[5, 0]), &m(&[0, 1])), Ordering::Less);
        assert!(MonomialOrder::lex().with_precedence(vec![0, 0]).is_err());
    }

    #[test]
    fn block_compares_x_first() {
        let o = MonomialOrder::block(1, OrderKind::Lex, OrderKind::GrevLex);
        // x*1 beats x^0 * theta^9
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let o = MonomialOrder::lex();
        assert!(matches!(
            o.compare(&m(&[1]), &m(&[1, 0])),
            Err(PolyError::DimensionMismatch { .. })
        ));
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::lex(),
            MonomialOrder::grevlex(),
            MonomialOrder::block(2, OrderKind::GrevLex, OrderKind::Lex),
            MonomialOrder::block(1, OrderKind::Lex, OrderKind::GrevLex),
            MonomialOrder::grevlex().with_precedence(vec![3, 1, 0, 2]).unwrap(),
        ]
    }

    fn mono4() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..=8, 4).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn order_axioms(a in mono4(), b in mono4(), c in mono4()) {
            for o in orders() {
                // totality / antisymmetry
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                // transitivity
                if ab != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
                }
                // multiplicativity
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                // 1 is minimal
                prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
            }
        }
    }
}

use std::cmp::Ordering;
use std::sync::Arc;

use super::Monomial;

/// Monomial orders. Variable index 0 is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Block elimination order: the marked variables form the first block.
    /// Compares block-restricted grevlex first, then grevlex on the rest, so
    /// any monomial touching the block exceeds every monomial that does not.
    Block(Arc<[bool]>),
}

impl MonomialOrder {
    /// Block order whose first block is the first `b` of `nvars` variables.
    pub fn block_first(b: usize, nvars: usize) -> Self {
        MonomialOrder::Block((0..nvars).map(|i| i < b).collect())
    }

    /// Block order eliminating the given variable indices.
    pub fn eliminating(vars: &[usize], nvars: usize) -> Self {
        let mut mask = vec![false; nvars];
        for &v in vars {
            mask[v] = true;
        }
        MonomialOrder::Block(mask.into())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b, |_| true),
            MonomialOrder::Block(mask) => grevlex(a, b, |i| mask[i])
                .then_with(|| grevlex(a, b, |i| !mask[i])),
        }
    }
}

/// Graded reverse lexicographic comparison restricted to the variables
/// selected by `keep`.
fn grevlex(a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
    let deg = |m: &[u32]| -> u64 {
        m.iter().enumerate().filter(|(i, _)| keep(*i)).map(|(_, &e)| e as u64).sum()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if !keep(i) {
            continue;
        }
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            // smaller power of the last variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        // z^2 > zw > w^2
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // w^3 > z
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[1, 0])), Ordering::Greater);
        // x^2 z > x y z
        assert_eq!(o.cmp(&m(&[2, 0, 1]), &m(&[1, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 3])), Ordering::Greater);
    }

    #[test]
    fn block_eliminates() {
        let o = MonomialOrder::eliminating(&[1], 3);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[5, 0, 7])), Ordering::Greater);
        let o = MonomialOrder::block_first(1, 2);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Grevlex),
            (0usize..=3).prop_map(|b| MonomialOrder::block_first(b, 3)),
            Just(MonomialOrder::eliminating(&[0, 2], 3)),
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn total_and_multiplicative(o in orders(), a in mono(), b in mono(), c in mono()) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(o.cmp(&Monomial::one(3), &a), Ordering::Greater);
        }

        #[test]
        fn transitive(o in orders(), a in mono(), b in mono(), c in mono()) {
            if o.cmp(&a, &b) != Ordering::Less && o.cmp(&b, &c) != Ordering::Less {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Less);
            }
        }
    }
}

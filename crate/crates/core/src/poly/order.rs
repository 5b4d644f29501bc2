use super::Monomial;
use std::cmp::Ordering;

/// Monomial orders used by the standard-basis machinery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic; a well-order, used for global
    /// Gröbner bases and syzygies.
    DegRevLex,
    /// Negative degree reverse lexicographic: lower total degree is larger,
    /// so `1` is the largest monomial. Used for the local ring.
    NegDegRevLex,
}

fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        if x != y {
            // a smaller exponent in the last differing variable is larger
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| revlex(a, b)),
            MonomialOrder::NegDegRevLex => {
                b.degree().cmp(&a.degree()).then_with(|| revlex(a, b))
            }
        }
    }

    pub fn is_local(&self) -> bool {
        matches!(self, MonomialOrder::NegDegRevLex)
    }
}

/// Position-over-term order on module monomials `(position, monomial)`:
/// a smaller position index is larger; ties are broken by `order`.
pub fn pot_cmp(order: MonomialOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.cmp(a.1, b.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 0])), Ordering::Greater);
        // x*z < y^2 in degrevlex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn local_order_has_one_largest() {
        let o = MonomialOrder::NegDegRevLex;
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[5, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn pot_prefers_low_position() {
        let o = MonomialOrder::DegRevLex;
        assert_eq!(pot_cmp(o, (0, &m(&[0])), (1, &m(&[9]))), Ordering::Greater);
        assert_eq!(pot_cmp(o, (1, &m(&[2])), (1, &m(&[1]))), Ordering::Greater);
    }
}

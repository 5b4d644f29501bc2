use super::*;
use crate::rational::{int, rat};
use proptest::prelude::*;
use std::cmp::Ordering;

fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn p(s: &str, v: &[&str]) -> Polynomial {
    parse_polynomial(s, &vars(v)).unwrap()
}

#[test]
fn parse_quintic_example() {
    let f = p("x^5+x^2*y^2+y^5+z^5", &["x", "y", "z"]);
    assert_eq!(f.len(), 4);
    assert_eq!(f.coeff(&Monomial::from_exponents(&[2, 2, 0])), int(1));
    assert_eq!(f.to_text(&vars(&["x", "y", "z"])), "x^5+y^5+z^5+x^2*y^2");
}

#[test]
fn parse_zero_and_var() {
    assert!(p("0", &["x"]).is_zero());
    let x = p("x", &["x"]);
    assert_eq!(x.len(), 1);
    assert_eq!(x.coeff(&Monomial::var(1, 0)), int(1));
}

#[test]
fn parse_rationals_and_parens() {
    let f = p("3/2*x - (x+1)^2 + 1", &["x"]);
    assert_eq!(f, p("-x^2 - 1/2*x", &["x"]));
}

#[test]
fn parse_errors() {
    let v = vars(&["x"]);
    assert!(matches!(
        parse_polynomial("q", &v),
        Err(crate::Error::UnknownVariable { pos: 0, .. })
    ));
    assert!(matches!(
        parse_polynomial("x^-2", &v),
        Err(crate::Error::NegativeExponent { .. })
    ));
    assert!(matches!(parse_polynomial("x+", &v), Err(crate::Error::Syntax { pos: 2, .. })));
    assert!(matches!(parse_polynomial("x)", &v), Err(crate::Error::Syntax { pos: 1, .. })));
    assert!(matches!(parse_polynomial("x/x", &v), Err(crate::Error::Syntax { .. })));
}

#[test]
fn arithmetic_examples() {
    let v = ["x", "y"];
    let a = p("x+y", &v);
    let b = p("x-y", &v);
    assert_eq!(ring_arithmetic(&a, &b, RingOp::Mul).unwrap(), p("x^2-y^2", &v));
    assert_eq!(ring_arithmetic(&a, &Polynomial::zero(2), RingOp::Add).unwrap(), a);
    assert_eq!(&p("x^2*y^2", &v) * &p("x^3", &v), p("x^5*y^2", &v));
    assert!(matches!(
        ring_arithmetic(&a, &Polynomial::zero(3), RingOp::Sub),
        Err(crate::Error::VariableMismatch(2, 3))
    ));
}

#[test]
fn derivative_examples() {
    let v = ["x", "y", "z"];
    let f = p("x^5+x^2*y^2+y^5+z^5", &v);
    assert_eq!(f.partial_derivative(0).unwrap(), p("5*x^4+2*x*y^2", &v));
    assert_eq!(f.partial_derivative(2).unwrap(), p("5*z^4", &v));
    assert!(p("7", &v).partial_derivative(0).unwrap().is_zero());
    assert!(matches!(f.partial_derivative(3), Err(crate::Error::IndexOutOfRange { .. })));
}

#[test]
fn order_examples() {
    let v = ["x", "y", "z"];
    assert_eq!(p("x^5+x^2*y^2+y^5+z^5", &v).m_adic_order(), Some(4));
    assert_eq!(p("x^2+y^2+z^2", &v).m_adic_order(), Some(2));
    assert_eq!(Polynomial::zero(3).m_adic_order(), None);
}

#[test]
fn rational_coefficients_print() {
    let v = ["x"];
    let f = p("-3/10*x^2+x", &v);
    assert_eq!(f.to_text(&vars(&v)), "-3/10*x^2+x");
    assert_eq!(f.coeff(&Monomial::from_exponents(&[2])), rat(-3, 10));
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u32..4, nvars), -5i64..6, 1i64..4),
        0..6,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(
            nvars,
            ts.into_iter()
                .map(|(e, n, d)| (Monomial::from_exponents(&e), rat(n, d))),
        )
    })
}

fn arb_mono(nvars: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, nvars).prop_map(|e| Monomial::from_exponents(&e))
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn leibniz_rule(a in arb_poly(3), b in arb_poly(3), i in 0usize..3) {
        let lhs = (&a * &b).diff(i);
        let rhs = &(&a * &b.diff(i)) + &(&b * &a.diff(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_roundtrip(a in arb_poly(3)) {
        let v = vars(&["x", "y", "z"]);
        let text = a.to_text(&v);
        prop_assert_eq!(parse_polynomial(&text, &v).unwrap(), a);
    }

    #[test]
    fn orders_are_total_and_compatible(
        a in arb_mono(3), b in arb_mono(3), c in arb_mono(3), m in arb_mono(3)
    ) {
        for o in [MonomialOrder::DegRevLex, MonomialOrder::NegDegRevLex] {
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert!(o.cmp(&a, &c) != Ordering::Greater);
            }
            if o.cmp(&a, &b) == Ordering::Less {
                prop_assert_eq!(o.cmp(&m.mul(&a), &m.mul(&b)), Ordering::Less);
            }
        }
        let one = Monomial::one(3);
        if !a.is_one() {
            prop_assert_eq!(MonomialOrder::NegDegRevLex.cmp(&one, &a), Ordering::Greater);
            prop_assert_eq!(MonomialOrder::DegRevLex.cmp(&one, &a), Ordering::Less);
        }
    }
}


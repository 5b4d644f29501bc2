use super::milnor::{colength_with_power, jacobian};
use super::mora::verify_division;
use super::syzygy::apply_syzygy;
use super::*;
use crate::poly::{parse_polynomial, Monomial, MonomialOrder, Polynomial};
use crate::rational::{int, rat, Rational};
use num_traits::Zero;
use proptest::prelude::*;

const XYZ: [&str; 3] = ["x", "y", "z"];
const QUINTIC: &str = "x^5+x^2*y^2+y^5+z^5";

fn p(s: &str, v: &[&str]) -> Polynomial {
    let names: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    parse_polynomial(s, &names).unwrap()
}

fn sb(gens: &[&str], v: &[&str]) -> StandardBasis {
    let g: Vec<Polynomial> = gens.iter().map(|s| p(s, v)).collect();
    standard_basis(&g, MonomialOrder::NegDegRevLex)
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e)
}

#[test]
fn division_with_unit() {
    let basis = sb(&["x-x^2"], &["x"]);
    let g = p("x", &["x"]);
    let d = mora_division(&g, &basis);
    assert!(d.normal_form.is_zero());
    assert!(verify_division(&g, basis.generators(), &d));
    // the unit is determined up to the quotient: u*x = q*(x - x^2)
    assert_eq!(d.unit.constant_term(), d.quotients[0].constant_term());
    assert_eq!(d.unit, p("1-x", &["x"]).scale(&d.quotients[0].constant_term()));
}

#[test]
fn division_by_unrelated_variable() {
    let basis = sb(&["x"], &["x", "y"]);
    let d = mora_division(&p("y", &["x", "y"]), &basis);
    assert_eq!(d.normal_form, p("y", &["x", "y"]));
}

#[test]
fn quintic_not_in_jacobian() {
    let f = p(QUINTIC, &XYZ);
    let md = milnor_data(&f).unwrap();
    let d = mora_division(&f, &md.jacobian_sb);
    assert!(!d.normal_form.is_zero());
    assert!(verify_division(&f, md.jacobian_sb.generators(), &d));
    assert!(!is_quasihomogeneous(&f).unwrap());
}

#[test]
fn standard_basis_examples() {
    let b = sb(&["x^2", "y^2"], &["x", "y"]);
    assert_eq!(b.leading_monomials(), &[mono(&[2, 0]), mono(&[0, 2])]);
    let b = sb(&["2*x", "2*y", "2*z"], &XYZ);
    let mut leads = b.leading_monomials().to_vec();
    leads.sort();
    assert_eq!(leads, vec![mono(&[0, 0, 1]), mono(&[0, 1, 0]), mono(&[1, 0, 0])]);
}

#[test]
fn milnor_examples() {
    let md = milnor_data(&p("x^2+y^2+z^2", &XYZ)).unwrap();
    assert_eq!(md.mu, 1);
    assert_eq!(md.basis, vec![Monomial::one(3)]);

    let md = milnor_data(&p("x^3+y^3", &["x", "y"])).unwrap();
    assert_eq!(md.mu, 4);
    let mut b = md.basis.clone();
    b.sort();
    assert_eq!(b, vec![mono(&[0, 0]), mono(&[0, 1]), mono(&[1, 0]), mono(&[1, 1])]);
    assert!(md.basis[0].is_one());

    assert_eq!(milnor_data(&p(QUINTIC, &XYZ)).unwrap().mu, 44);
}

#[test]
fn milnor_errors() {
    assert!(matches!(milnor_data(&p("x^2", &["x", "y"])), Err(crate::Error::NonIsolated)));
    assert!(matches!(milnor_data(&p("x^2*y^2", &["x", "y"])), Err(crate::Error::NonIsolated)));
    assert!(matches!(milnor_data(&p("x+y^2", &["x", "y"])), Err(crate::Error::Smooth)));
    assert!(matches!(milnor_data(&p("1+x^2", &["x"])), Err(crate::Error::NotThroughOrigin)));
}

#[test]
fn membership_examples() {
    let v = ["x", "y"];
    let f = p("x^3+y^3", &v);
    let md = milnor_data(&f).unwrap();
    let (inside, cert) = local_membership(&f, &md.jacobian_sb);
    assert!(inside);
    assert!(verify_division(&f, md.jacobian_sb.generators(), &cert));

    let (inside, _) = local_membership(&p("x*y", &v), &sb(&["x"], &v));
    assert!(inside);
}

#[test]
fn quasihomogeneity_examples() {
    assert!(is_quasihomogeneous(&p("x^3+y^3+z^3", &XYZ)).unwrap());
    assert!(!is_quasihomogeneous(&p(QUINTIC, &XYZ)).unwrap());
    // oracle for the plane-curve factor: membership in the Jacobian ideal
    let g = p("x^5+x^2*y^2+y^5", &["x", "y"]);
    let md = milnor_data(&g).unwrap();
    assert!(!local_membership(&g, &md.jacobian_sb).0);
    assert!(!is_quasihomogeneous(&g).unwrap());
    // quasihomogeneous in other coordinates
    assert!(is_quasihomogeneous(&p("(x+y^2)^2+y^3", &["x", "y"])).unwrap());
}

fn is_multiple(v: &[Polynomial], w: &[Polynomial]) -> bool {
    let Some(i) = w.iter().position(|c| !c.is_zero()) else { return false };
    let Some((m, c)) = w[i].terms().next() else { return false };
    let k = v[i].coeff(m) / c;
    !k.is_zero() && v.iter().zip(w).all(|(a, b)| *a == b.scale(&k))
}

#[test]
fn syzygy_examples() {
    let v = ["x", "y"];
    let s = syzygies(&[p("x", &v), p("y", &v)], 4);
    assert!(s.complete);
    assert_eq!(s.generators.len(), 1);
    assert!(is_multiple(&s.generators[0], &[p("y", &v), p("-x", &v)]));

    let f = p("x^2+y^2", &v);
    let gens = vec![f.diff(0), f.diff(1), f.clone()];
    let s = syzygies(&gens, 6);
    let euler = [p("x/2", &v), p("y/2", &v), p("-1", &v)];
    assert!(s.generators.iter().any(|g| is_multiple(g, &euler)));

    let f = p(QUINTIC, &XYZ);
    let gens = jacobian(&f);
    let s = syzygies(&gens, 12);
    for g in &s.generators {
        assert!(apply_syzygy(g, &gens).is_zero());
    }
    // each Koszul syzygy lies in the module spanned by the result
    assert!(s.generators.len() >= 3);
}

#[test]
fn truncated_reducer_agrees_with_mora() {
    for (s, v) in [("x^3+y^3", &["x", "y"][..]), (QUINTIC, &XYZ[..]), ("x^2*y+y^4+z^2", &XYZ[..])] {
        let f = p(s, v);
        let md = milnor_data(&f).unwrap();
        let bound = md.max_basis_degree() + 6;
        let r = TruncatedReducer::new(&f, &md, bound).unwrap();
        let g = &(&f * &p(&format!("1+{}+{}^2", v[0], v[1]), v)) + &p(&format!("3+{}*{}", v[0], v[1]), v);
        let mut dense = r.to_dense(&g);
        let red = r.reduce(&mut dense, bound);
        let mut rest = g.clone();
        for (c, m) in red.coeffs.iter().zip(&md.basis) {
            rest = &rest - &Polynomial::monomial(m.clone(), c.clone());
        }
        // rest lies in J_f modulo m^bound
        let mut gens = jacobian(&f);
        gens.extend(super::milnor::monomials_of_degree(f.nvars(), bound).into_iter().map(|m| Polynomial::monomial(m, int(1))));
        let big = standard_basis(&gens, MonomialOrder::NegDegRevLex);
        assert!(local_membership(&rest, &big).0, "{s}");
        assert!(big.contains(&rest), "{s}");
        assert_eq!(red.coeffs[0], int(3));
    }
}

#[test]
fn truncated_divergence_for_euler_identity() {
    // f = x^3 + y^3 = (x/3) f_x + (y/3) f_y, divergence 2/3
    let f = p("x^3+y^3", &["x", "y"]);
    let md = milnor_data(&f).unwrap();
    let r = TruncatedReducer::new(&f, &md, 8).unwrap();
    let mut g = r.to_dense(&f);
    let red = r.reduce(&mut g, 8);
    assert!(red.coeffs.iter().all(Rational::is_zero));
    assert_eq!(r.from_dense(&red.divergence), Polynomial::constant(2, rat(2, 3)));
}

#[test]
fn corner_keeps_tails_small() {
    // coefficient and tail growth made this take minutes without the corner cut
    let f = p("x^3+y^3+z^4+2*x*y*z^2-x^2*y*z^2", &XYZ);
    let md = milnor_data(&f).unwrap();
    assert_eq!(md.mu, 12);
    assert_eq!(md.jacobian_sb.corner(), Some(md.max_basis_degree()));
    assert_eq!(colength_with_power(&f, md.max_basis_degree() + 1), 12);
}

fn arb_isolated() -> impl Strategy<Value = Polynomial> {
    // x^a + y^b + z^c plus a random perturbation of higher order
    (2u32..5, 2u32..5, 2u32..5, prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -3i64..4), 0..3))
        .prop_map(|(a, b, c, extra)| {
            let mut f = Polynomial::from_terms(
                3,
                [
                    (mono(&[a, 0, 0]), int(1)),
                    (mono(&[0, b, 0]), int(1)),
                    (mono(&[0, 0, c]), int(1)),
                ],
            );
            for (i, j, k, n) in extra {
                if i + j + k >= 2 {
                    f = &f + &Polynomial::monomial(mono(&[i, j, k]), int(n));
                }
            }
            f
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn division_identity(f in arb_isolated(), e in prop::collection::vec(0u32..4, 3)) {
        if let Ok(md) = milnor_data(&f) {
            let g = &f + &Polynomial::monomial(mono(&e), int(1));
            let d = mora_division(&g, &md.jacobian_sb);
            prop_assert!(verify_division(&g, md.jacobian_sb.generators(), &d));
            prop_assert_eq!(md.jacobian_sb.contains(&g), d.normal_form.is_zero());
            prop_assert!(!d.unit.constant_term().is_zero());
            if let Some((lm, _)) = d.normal_form.leading_term(MonomialOrder::NegDegRevLex) {
                prop_assert!(!md.jacobian_sb.reduces(lm));
            }
        }
    }

    #[test]
    fn mu_permutation_invariant(f in arb_isolated(), perm in Just([0usize, 1, 2]).prop_shuffle()) {
        if let Ok(md) = milnor_data(&f) {
            let g = f.permute_variables(&perm);
            prop_assert_eq!(milnor_data(&g).unwrap().mu, md.mu);
        }
    }

    #[test]
    fn colength_stabilizes_at_mu(f in arb_isolated()) {
        if let Ok(md) = milnor_data(&f) {
            let mut prev = 0;
            let top = md.max_basis_degree() + 2;
            for n in 1..=top {
                let c = colength_with_power(&f, n);
                prop_assert!(c >= prev);
                prev = c;
            }
            prop_assert_eq!(prev, md.mu);
        }
    }

    #[test]
    fn weighted_euler_quotients(a in 2u32..7, b in 2u32..7, c in 2u32..7) {
        let f = Polynomial::from_terms(3, [
            (mono(&[a, 0, 0]), int(1)), (mono(&[0, b, 0]), int(1)), (mono(&[0, 0, c]), int(1)),
        ]);
        let md = milnor_data(&f).unwrap();
        let (inside, cert) = local_membership(&f, &md.jacobian_sb);
        prop_assert!(inside);
        prop_assert!(verify_division(&f, md.jacobian_sb.generators(), &cert));
        // the Euler field with weights 1/a, 1/b, 1/c reproduces f
        let euler = [
            Polynomial::monomial(mono(&[1, 0, 0]), rat(1, a as i64)),
            Polynomial::monomial(mono(&[0, 1, 0]), rat(1, b as i64)),
            Polynomial::monomial(mono(&[0, 0, 1]), rat(1, c as i64)),
        ];
        prop_assert_eq!(apply_syzygy(&euler, &jacobian(&f)), f);
    }

    #[test]
    fn syzygies_annihilate(f in arb_isolated()) {
        let mut gens = jacobian(&f);
        gens.push(f.clone());
        let s = syzygies(&gens, 8);
        for g in &s.generators {
            prop_assert!(apply_syzygy(g, &gens).is_zero());
        }
    }
}

use super::*;
use crate::local::is_quasihomogeneous;
use crate::poly::parse_polynomial;
use crate::rational::{int, rat};
use proptest::prelude::*;

fn names(n: usize) -> Vec<String> {
    ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
}

fn p(s: &str, n: usize) -> Polynomial {
    parse_polynomial(s, &names(n)).unwrap()
}

fn field(gs: &[&str], h: &str, f: &Polynomial) -> Derivation {
    let n = f.nvars();
    Derivation::new(gs.iter().map(|g| p(g, n)).collect(), p(h, n), f).expect("logarithmic")
}

/// `a` is a nonzero scalar multiple of `b` (coefficients and cofactor).
fn proportional(a: &Derivation, b: &Derivation) -> bool {
    let mut pa: Vec<&Polynomial> = a.coeffs.iter().collect();
    pa.push(&a.cofactor);
    let mut pb: Vec<&Polynomial> = b.coeffs.iter().collect();
    pb.push(&b.cofactor);
    let Some(i) = pb.iter().position(|q| !q.is_zero()) else { return false };
    let (m, c) = pb[i].terms().next().unwrap();
    let k = pa[i].coeff(m) / c;
    !k.is_zero() && pa.iter().zip(&pb).all(|(x, y)| **x == y.scale(&k))
}

#[test]
fn generators_of_circle() {
    let f = p("x^2+y^2", 2);
    let (gens, complete) = derlog_generators(&f, default_degree_bound(&f));
    assert!(complete);
    let euler = field(&["x/2", "y/2"], "1", &f);
    let rotation = field(&["y", "-x"], "0", &f);
    assert!(gens.iter().any(|g| proportional(g, &euler)), "{gens:?}");
    assert!(gens.iter().any(|g| proportional(g, &rotation)), "{gens:?}");
}

#[test]
fn generators_of_node() {
    let f = p("x*y", 2);
    let (gens, _) = derlog_generators(&f, 6);
    for g in &gens {
        assert!(Derivation::new(g.coeffs.clone(), g.cofactor.clone(), &f).is_some());
    }
    // x d_x and y d_y lie in the module: check through the linear parts
    let traces: Vec<Rational> = gens.iter().map(|g| linear_part(g).unwrap().trace).collect();
    assert!(traces.iter().any(|t| !t.is_zero()));
    assert!(Derivation::new(vec![p("x", 2), p("0", 2)], p("1", 2), &f).is_some());
    assert!(Derivation::new(vec![p("0", 2), p("y", 2)], p("1", 2), &f).is_some());
}

#[test]
fn logarithmic_examples() {
    let f = p("x^2+y^2", 2);
    let (u, h) = is_logarithmic(&[p("x/2", 2), p("y/2", 2)], &f).unwrap();
    assert_eq!(h, u);
    assert!(is_logarithmic(&[p("1", 2), p("0", 2)], &f).is_none());
    let (_, h) = is_logarithmic(&[p("y", 2), p("-x", 2)], &f).unwrap();
    assert!(h.is_zero());
}

#[test]
fn linear_part_examples() {
    let f = p("x^2+y^2", 2);
    let lp = linear_part(&field(&["x/2", "y/2"], "1", &f)).unwrap();
    assert_eq!(lp.trace, int(1));
    assert!(!lp.nilpotent);
    let lp = linear_part(&field(&["y", "-x"], "0", &f)).unwrap();
    assert_eq!(lp.trace, int(0));
    assert!(!lp.nilpotent);
    assert_eq!(UPoly::new(lp.matrix.charpoly()), UPoly::new(vec![int(1), int(0), int(1)]));
    let g = p("x^2", 2);
    let split = Derivation::new(vec![p("0", 2), p("1", 2)], p("0", 2), &g).unwrap();
    assert!(matches!(linear_part(&split), Err(Error::NotInMDelta)));
}

#[test]
fn jordan_chevalley_examples() {
    let m = |rows: &[&[i64]]| Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect());
    let nil = m(&[&[0, 1], &[0, 0]]);
    let jc = jordan_chevalley(&nil);
    assert!(jc.semisimple.is_zero());
    assert_eq!(jc.nilpotent, nil);
    let d = m(&[&[2, 0], &[0, 3]]);
    assert_eq!(jordan_chevalley(&d).semisimple, d);
    let j = jordan_chevalley(&m(&[&[1, 1], &[0, 1]]));
    assert_eq!(j.semisimple, Matrix::identity(2));
    assert_eq!(j.nilpotent, nil);
}

#[test]
fn residue_examples() {
    let f = p("x^2+y^2", 2);
    assert_eq!(log_residue(&field(&["x/2", "y/2"], "1", &f)), int(0));
    assert_eq!(log_residue(&field(&["y", "-x"], "0", &f)), int(0));
}

#[test]
fn bracket_examples() {
    let f = p("x*y", 2);
    let xdx = field(&["x", "0"], "1", &f);
    let ydy = field(&["0", "y"], "1", &f);
    let b = lie_bracket(&xdx, &ydy, &f).unwrap();
    assert!(b.coeffs.iter().all(Polynomial::is_zero));
    // [x d_y, y d_x] = x d_x - y d_y, checked on the coefficient level
    let g = Polynomial::zero(2);
    let a = Derivation { coeffs: vec![p("0", 2), p("x", 2)], cofactor: g.clone() };
    let c = Derivation { coeffs: vec![p("y", 2), p("0", 2)], cofactor: g.clone() };
    let b = lie_bracket(&a, &c, &g).unwrap();
    assert_eq!(b.coeffs, vec![p("x", 2), p("-y", 2)]);
}

#[test]
fn quintic_generators() {
    let f = p("x^5+x^2*y^2+y^5+z^5", 3);
    assert!(!is_quasihomogeneous(&f).unwrap());
    let (gens, _) = derlog_generators(&f, default_degree_bound(&f));
    assert!(!gens.is_empty());
    for g in &gens {
        assert!(g.cofactor.constant_term().is_zero());
        let lp = linear_part(g).unwrap();
        assert_eq!(lp.trace, int(0));
        assert!(lp.nilpotent);
        assert_eq!(log_residue(g), int(0));
    }
    for a in gens.iter().take(4) {
        for b in gens.iter().take(4) {
            let c = lie_bracket(a, b, &f).expect("bracket stays logarithmic");
            let expect = {
                let (la, lb) = (linear_part(a).unwrap().matrix, linear_part(b).unwrap().matrix);
                &(&la * &lb) - &(&lb * &la)
            };
            assert_eq!(linear_part(&c).unwrap().matrix, expect);
        }
    }
}

fn arb_matrix() -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..4, 9).prop_map(|v| {
        Matrix::from_rows(v.chunks(3).map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    })
}

proptest! {
    #[test]
    fn jordan_chevalley_properties(a in arb_matrix(), b in arb_matrix()) {
        // conjugate a block-structured matrix to get nontrivial Jordan parts
        let m = if let Some(inv) = b.inverse() { &(&b * &a) * &inv } else { a };
        let jc = jordan_chevalley(&m);
        prop_assert_eq!(&jc.semisimple + &jc.nilpotent, m);
        prop_assert_eq!(&jc.semisimple * &jc.nilpotent, &jc.nilpotent * &jc.semisimple);
        prop_assert!(jc.nilpotent.pow(3).is_zero());
        let sq = UPoly::new(jc.semisimple.charpoly()).squarefree_part();
        prop_assert!(eval_matrix(&sq, &jc.semisimple).is_zero());
    }
}
